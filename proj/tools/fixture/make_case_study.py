#!/usr/bin/env python3
"""Regenerates data/case_study.json (then canonicalize with `socplan fmt`)."""
import json
import sys

groups = [
    ("production-machines", "Production Machines",
     "Print production machinery at the network edge (exposure units, stamping and bending machines, presses); "
     "reached through dedicated control servers, partly via legacy interfaces.",
     "B.Peri", ["B.Vuln"], "Medium"),
    ("print-production", "Print Production",
     "Systems around the print machinery: workflow control, pre-press and quality control software, font and "
     "file servers used for exchange with external partners.",
     "S.ID", ["B.Vuln"], "High"),
    ("telephony", "Telephony",
     "Company-wide VoIP stack from SIP servers and session border controllers up to unified communications and "
     "call center applications; largely isolated.",
     "B.Peri", ["S.ID"], "Medium"),
    ("network-infrastructure", "Network Infrastructure",
     "Routers, switches, DHCP and DNS, subnets and DMZs, plus the physical servers and self-managed virtual "
     "machines that host higher services.",
     "B.Ept", ["B.Vuln", "S.ID"], "High"),
    ("remote-desktop-service", "Remote Desktop Service",
     "Virtual Windows and Linux desktops for devices outside the internal network, delivered by internal servers "
     "and a cloud provider.",
     "S.Acc", ["B.Vuln", "S.ID"], "Medium"),
    ("end-devices", "End Devices",
     "Stationary clients managed by scanning, monitoring and software distribution, and mobile clients managed "
     "through the office suite's device management.",
     "B.Ept", ["B.Vuln", "S.ID"], "High"),
    ("test-environments", "Test Environments",
     "Ad hoc virtual machines for third-party software tests and own development, occasionally connected to "
     "production systems.",
     "B.Peri", ["S.Acc", "S.Com"], "Low"),
    ("it-security", "IT Security",
     "Security tooling run by the IT security unit: multi-factor authentication, credential management, endpoint "
     "monitoring, virus scanning, patch management, firewalls and VPN.",
     "B.Peri", ["S.Acc"], "High"),
    ("data-security", "Data Security",
     "Backup and continuous data protection with proxy and orchestration servers, short-term storage and "
     "off-site long-term repositories.",
     "S.Com", ["S.App", "B.Vuln"], "High"),
    ("application-infrastructure", "Application Infrastructure",
     "Shared services: mail, directory services and domain controllers, print and database servers, license "
     "servers, FTP, federated identity and the office suite.",
     "S.Acc", ["B.Vuln", "S.ID"], "High"),
    ("static-data-management", "Static Data Management",
     "Long-term compliance storage and workflows for invoices, personnel files and contracts, document "
     "digitization and mail archiving.",
     "S.Acc", ["S.App", "B.Vuln"], "Low"),
    ("business-applications", "Business Applications",
     "Digital asset management and the digital publishing platform, advertising, marketing and logistics "
     "tools, the ERP system and HR software.",
     "B.Vuln", ["S.ID"], "High"),
]

categories = [
    ("ot", "A", "OT", "Operational Technology",
     "Hardware and software tied to physical production, including telephony used on the production floor.",
     ["production-machines", "telephony"],
     {"SIEM": 0.0, "BaselineSecurity": 6.0,
      "note": "Published row reads 0 / 6; the scoring rule applied to the member groups gives 1 / 5. "
              "The published row matches only if Telephony's secondary control were B.Vuln instead of S.ID."}),
    ("infra", "B", "Infra", "Common Infrastructure",
     "Basic network functions and the managed client fleet.",
     ["network-infrastructure", "end-devices"], {"SIEM": 3.0, "BaselineSecurity": 9.0, "note": ""}),
    ("sec", "C", "Sec", "Core Security",
     "Security tooling, data protection and isolated test environments.",
     ["it-security", "data-security", "test-environments"], {"SIEM": 4.7, "BaselineSecurity": 3.7, "note": ""}),
    ("serv", "D", "Serv", "Application Services",
     "Shared application infrastructure, remote desktops and compliance data management.",
     ["application-infrastructure", "remote-desktop-service", "static-data-management"],
     {"SIEM": 6.0, "BaselineSecurity": 2.0, "note": ""}),
    ("bf", "E", "BF", "Business Functions",
     "Value-creating business applications and the print production environment.",
     ["business-applications", "print-production"], {"SIEM": 4.5, "BaselineSecurity": 4.5, "note": ""}),
]

TASKS = ["Intelligence", "SIEM", "BaselineSecurity", "Forensics", "Pentests"]
ORDER = ["ot", "infra", "sec", "serv", "bf"]
NA_RATIONALE = ("Pentests in this category would need physical access to installations or phishing calls; "
                "planning is restricted to pentests over digital channels.")

# value, levels  ("NA" for not applicable)
status_quo = {
    "ot":    [(0.1, "I/I"), (0.1, "I/I/I"), (0.1, "I/I"), (0.3, "IE/IE/IE"), "NA"],
    "infra": [(0.3, "IE/I"), (0.3, "IE/IE/I"), (0.3, "I/IE"), (0.3, "IE/IE/IE"), (0.7, "IE/E")],
    "sec":   [(0.1, "I/I"), (0.1, "IE/I/I"), (0.3, "I/IE"), (0.3, "IE/IE/IE"), (0.7, "IE/E")],
    "serv":  [(0.3, "IE/I"), (0.3, "IE/IE/I"), (0.3, "I/IE"), (0.3, "IE/IE/IE"), (0.7, "IE/E")],
    "bf":    [(0.3, "IE/I"), (0.1, "I/I/I"), (0.1, "I/I"), (0.3, "IE/IE/IE"), (0.7, "IE/E")],
}
max_external = {
    "ot":    [(0.3, "IE/IE"), (0.3, "I/IE/IE"), (0.3, "IE/I"), (0.5, "IE/EI/EI"), "NA"],
    "infra": [(0.9, "E/EI"), (0.9, "E/E/EI"), (0.7, "E/EI"), (0.7, "E/EI/EI"), (0.9, "EI/E")],
    "sec":   [(0.7, "EI/EI"), (0.9, "E/E/EI"), (0.7, "E/EI"), (0.7, "E/EI/EI"), (0.9, "EI/E")],
    "serv":  [(0.9, "E/EI"), (0.9, "E/E/EI"), (0.7, "E/EI"), (0.7, "E/EI/EI"), (0.9, "EI/E")],
    "bf":    [(0.7, "EI/EI"), (0.7, "EI/E/EI"), (0.5, "EI/IE"), (0.7, "E/EI/EI"), (0.9, "EI/E")],
}
target = {
    "ot":    [(0.1, "I/I"), (0.1, "I/I/I"), (0.1, "I/I"), (0.3, "IE/IE/IE"), "NA"],
    "infra": [(0.5, "EI/IE"), (0.7, "EI/EI/IE"), (0.5, "IE/EI"), (0.7, "EI/IE/EI"), (0.7, "IE/E")],
    "sec":   [(0.3, "IE/IE"), (0.5, "IE/EI/IE"), (0.3, "IE/IE"), (0.5, "IE/IE/EI"), (0.7, "IE/E")],
    "serv":  [(0.5, "EI/IE"), (0.7, "EI/EI/IE"), (0.5, "IE/EI"), (0.7, "EI/IE/EI"), (0.7, "IE/E")],
    "bf":    [(0.3, "IE/IE"), (0.5, "IE/EI/IE"), (0.3, "IE/IE"), (0.5, "IE/IE/EI"), (0.7, "IE/E")],
}

rationales = {
    "status_quo": {
        "Intelligence": "External parties contribute only as information sources they already are, such as cloud "
                        "security bulletins; the internal security unit manages core security.",
        "SIEM": "External services help with data collection and monitoring only where systems are accessible "
                "without extra effort; event management is run internally.",
        "BaselineSecurity": "OT and business applications need internal know-how; for the other categories "
                            "external tools support scans.",
        "Forensics": "An external provider is engaged case by case when an independent investigation is needed.",
        "Pentests": "Pentests are planned internally with precise requirements and executed by external parties.",
    },
    "max_external": {
        "Intelligence": "In its areas of competence the provider leads and may report to management directly.",
        "SIEM": "The provider collects data and monitors all core elements autonomously and leads event "
                "management; only internal access limits it.",
        "BaselineSecurity": "The provider scans with its own tools and tracks vulnerabilities; patching stays "
                            "partly internal.",
        "Forensics": "The provider leads forensics; internal staff assist with OT data acquisition.",
        "Pentests": "Providers lead planning and execution, commissioning a separate tester where needed.",
    },
    "target": {
        "Intelligence": "Provider competence is used for infrastructure and application services, including "
                        "special risk analyses.",
        "SIEM": "Providers take over monitoring and data collection for infrastructure and application services; "
                "internal staff respond to incidents guided by the provider.",
        "BaselineSecurity": "Providers scan regularly or on request and gather vulnerability information; patching "
                            "remains internal.",
        "Forensics": "Providers contribute to forensic analysis and compliance reporting in their core areas.",
        "Pentests": "Unchanged from the status quo; providers may contribute to planning.",
    },
}


def suggest(levels):
    pts = {"I": 1, "IE": 3, "EI": 7, "E": 9}
    s = sum(pts[x] for x in levels)
    n = len(levels)
    best = 1
    for p in (1, 3, 5, 7, 9):
        if abs(s - p * n) <= abs(s - best * n):
            best = p
    return best


def cells_for(model_id, table):
    cells = []
    for cat in ORDER:
        for task, entry in zip(TASKS, table[cat]):
            if entry == "NA":
                cells.append({"category": cat, "task": task, "applicability": "not_applicable", "levels": [],
                              "override": None, "override_note": "", "rationale": NA_RATIONALE})
                continue
            value, levels = entry
            levels = levels.split("/")
            cell = {"category": cat, "task": task, "applicability": "applicable", "levels": levels,
                    "override": None, "override_note": "", "rationale": rationales[model_id][task]}
            tenths = round(value * 10)
            if suggest(levels) != tenths:
                cell["override"] = value
                cell["override_note"] = ("Workshop assigned %.1f; the level mean suggests %.1f." %
                                         (value, suggest(levels) / 10))
            cells.append(cell)
    return cells


doc = {
    "meta": {"name": "Regional newspaper publisher: distributed SOC plan", "schema_version": 1,
             "created": "", "updated": ""},
    "landscape": {
        "groups": [{"id": g[0], "name": g[1], "description": g[2], "primary": g[3], "secondary": g[4],
                    "relevance": g[5], "rationale": ""} for g in groups],
        "categories": [{"id": c[0], "label": c[1], "short_name": c[2], "name": c[3], "description": c[4],
                        "members": c[5], "published_scores": c[6]} for c in categories],
    },
    "models": [
        {"id": "status_quo", "name": "Status Quo",
         "description": "Current division of SOC work between internal staff and providers.",
         "cells": cells_for("status_quo", status_quo)},
        {"id": "max_external", "name": "Maximum External Involvement",
         "description": "Largest involvement of external providers that is technically possible today.",
         "cells": cells_for("max_external", max_external)},
        {"id": "target", "name": "Plan Target",
         "description": "Middle ground used as the short- to medium-term planning target.",
         "cells": cells_for("target", target)},
    ],
    "templates": [],
}

json.dump(doc, sys.stdout, indent=2, sort_keys=True, ensure_ascii=False)
sys.stdout.write("\n")
