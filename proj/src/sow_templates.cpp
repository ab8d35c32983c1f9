#include "socplan/sow.hpp"

namespace socplan {

namespace {

using L = ContributionLevel;

constexpr const char* kReference = "reference-sow";
constexpr const char* kAuthored = "authored";

// Wording is data: plans may replace any entry through their `templates` list.
TemplateSet build_defaults() {
  return {
      // Intelligence
      {"Intelligence", "KM", L::kE,
       "The contractor independently maintains the security knowledge base for {category_names}, covering current "
       "threats, vulnerabilities and state-of-the-art protection measures, and briefs the client regularly.",
       kAuthored},
      {"Intelligence", "KM", L::kEI,
       "The contractor leads knowledge management for {category_names}: it supplies security bulletins, threat "
       "information and technology assessments and keeps them current; client staff contribute knowledge of the "
       "internal landscape.",
       kAuthored},
      {"Intelligence", "KM", L::kIE,
       "The contractor supports the client's knowledge management for {category_names} with security bulletins and "
       "up-to-date information on the security features of the services it provides.",
       kAuthored},
      {"Intelligence", "KM", L::kI, "Knowledge management for {category_names} remains with the client.", kAuthored},
      {"Intelligence", "RA", L::kE,
       "The contractor independently prepares attack and risk analyses for {category_names} and reports the results "
       "with recommendations directly to the client's management.",
       kAuthored},
      {"Intelligence", "RA", L::kEI,
       "The contractor leads attack and risk analyses for {category_names}; client staff provide access to internal "
       "documentation and review the findings.",
       kAuthored},
      {"Intelligence", "RA", L::kIE,
       "The contractor contributes specialised risk analyses for {category_names} on request of the client, who "
       "leads the overall risk assessment.",
       kAuthored},
      {"Intelligence", "RA", L::kI, "Risk analysis for {category_names} remains with the client.", kAuthored},

      // SIEM
      {"SIEM", "Mo", L::kE,
       "The contractor independently monitors the systems through all accessible standardized or proprietary "
       "interfaces, using its own monitoring technology. Monitoring covers at least (i) the operational readiness of "
       "the systems, (ii) data traffic, and (iii) access to their resources from inside and outside, where possible "
       "and applicable.\n"
       "The client grants the data and physical access (protocols, ports, access authorizations) required for the "
       "monitoring and data collection duties.",
       kReference},
      {"SIEM", "Mo", L::kEI,
       "The contractor monitors the systems through all accessible standardized or proprietary interfaces, using its "
       "own monitoring technology, and leads this duty with support from client staff. Monitoring covers at least "
       "(i) the operational readiness of the systems, (ii) data traffic, and (iii) access to their resources from "
       "inside and outside, where possible and applicable.\n"
       "The client grants the data and physical access (protocols, ports, access authorizations) required for the "
       "monitoring and data collection duties.",
       kReference},
      {"SIEM", "Mo", L::kIE,
       "The contractor supports the client's monitoring of the systems by covering interfaces that are accessible "
       "without additional effort, such as automated logs and reports of cloud services.",
       kAuthored},
      {"SIEM", "Mo", L::kI, "Monitoring of the systems remains with the client.", kAuthored},
      {"SIEM", "DC", L::kE,
       "The contractor independently collects all accessible security-relevant data from the systems, such as logs, "
       "status messages queried during monitoring, and error reports, structures it, and provides it to the client "
       "in digital form on request.",
       kReference},
      {"SIEM", "DC", L::kEI,
       "The contractor collects all accessible security-relevant data from the systems, such as logs, status "
       "messages queried during monitoring, and error reports. It structures the data and provides it to the client "
       "in digital form on request. Client staff help to connect data sources.",
       kReference},
      {"SIEM", "DC", L::kIE,
       "The contractor supports the client's data collection by forwarding security-relevant data that is available "
       "through standard interfaces in structured digital form.",
       kAuthored},
      {"SIEM", "DC", L::kI, "Collection of security-relevant data from the systems remains with the client.",
       kAuthored},
      {"SIEM", "S", L::kE,
       "The contractor operates a state-of-the-art SEM system, detects current threats and attacks on the monitored "
       "systems, and controls the reaction to security incidents. For every recognized incident it immediately "
       "issues a standardized incident report containing at least: (i) Type of incident, (ii) Affected systems, "
       "(iii) Criticality/Risk assessment, (iv) Allowable reaction time, (v) Available information about the "
       "attacker.\n"
       "The contractor mitigates identified security incidents and coordinates recovery, informing the client of "
       "every measure taken.",
       kAuthored},
      {"SIEM", "S", L::kEI,
       "The contractor operates a state-of-the-art SEM system to identify current threats and attacks on the "
       "monitored systems and leads the response. For every recognized incident it immediately issues a "
       "standardized incident report containing at least: (i) Type of incident, (ii) Affected systems, "
       "(iii) Criticality/Risk assessment, (iv) Allowable reaction time, (v) Available information about the "
       "attacker.\n"
       "The contractor specifies and, as far as access allows, implements mitigation of identified security "
       "incidents; client staff assist where internal access is required.",
       kAuthored},
      {"SIEM", "S", L::kIE,
       "The contractor operates a state-of-the-art SEM system to identify current threats and attacks on the "
       "monitored systems. For every recognized security incident it immediately provides the client with a "
       "standardized incident report containing at least: (i) Type of incident, (ii) Affected systems, "
       "(iii) Criticality/Risk assessment, (iv) Allowable reaction time, (v) Available information about the "
       "attacker.\n"
       "The contractor supports the client in mitigating identified security incidents. It proposes methods and "
       "step-by-step measures that client staff can readily understand and implement, and provides highly available "
       "and responsive support.",
       kReference},
      {"SIEM", "S", L::kI,
       "Security event management, including incident detection and response, remains with the client.", kAuthored},

      // Baseline security
      {"BaselineSecurity", "Vu", L::kE,
       "The contractor independently tracks vulnerabilities of the systems from public and vendor sources and "
       "eliminates them through updates or reconfiguration.",
       kAuthored},
      {"BaselineSecurity", "Vu", L::kEI,
       "The contractor leads vulnerability management for the systems: it tracks vulnerabilities from public and "
       "vendor sources, assesses them, and plans remediation; client staff assist with patches and updates.",
       kAuthored},
      {"BaselineSecurity", "Vu", L::kIE,
       "The contractor independently gathers vulnerability information relevant to the systems and reports it to "
       "the client, who remains responsible for patches and updates.",
       kAuthored},
      {"BaselineSecurity", "Vu", L::kI, "Vulnerability management for the systems remains with the client.",
       kAuthored},
      {"BaselineSecurity", "CS", L::kE,
       "The contractor independently carries out compliance and security scans of the systems with its own tools, "
       "regularly and on request, and reports the results.",
       kAuthored},
      {"BaselineSecurity", "CS", L::kEI,
       "The contractor carries out compliance and security scans of the systems with its own tools, regularly and "
       "on request, and reports the results; client staff support with scope and access.",
       kAuthored},
      {"BaselineSecurity", "CS", L::kIE,
       "The contractor supports the client's compliance scans of the systems with external scanning tools and "
       "expertise.",
       kAuthored},
      {"BaselineSecurity", "CS", L::kI, "Compliance scans of the systems remain with the client.", kAuthored},

      // Forensics
      {"Forensics", "DA", L::kE,
       "The contractor independently collects and analyses forensic data for security incidents affecting the "
       "systems, following recognized forensic standards.",
       kAuthored},
      {"Forensics", "DA", L::kEI,
       "The contractor leads forensic data analysis for security incidents affecting the systems; client staff "
       "assist with data acquisition.",
       kAuthored},
      {"Forensics", "DA", L::kIE,
       "The contractor supports the client's forensic data analysis on a case-by-case basis.", kAuthored},
      {"Forensics", "DA", L::kI, "Forensic data analysis for the systems remains with the client.", kAuthored},
      {"Forensics", "In", L::kE,
       "The contractor independently conducts investigations of security incidents affecting the systems and "
       "secures digital evidence.",
       kAuthored},
      {"Forensics", "In", L::kEI,
       "The contractor leads investigations of security incidents affecting the systems and secures digital "
       "evidence; client staff support with internal access.",
       kAuthored},
      {"Forensics", "In", L::kIE,
       "The contractor conducts an external, independent investigation of a security incident when the client "
       "requests one.",
       kAuthored},
      {"Forensics", "In", L::kI, "Investigation of security incidents remains with the client.", kAuthored},
      {"Forensics", "CR", L::kE,
       "The contractor independently prepares compliance reports on incidents and on the security status of the "
       "systems.",
       kAuthored},
      {"Forensics", "CR", L::kEI,
       "The contractor collates compliance reports on incidents and on the security status of the systems on a "
       "case-by-case basis; the client reviews and releases them.",
       kAuthored},
      {"Forensics", "CR", L::kIE,
       "The contractor contributes findings to the client's compliance reports for the systems.", kAuthored},
      {"Forensics", "CR", L::kI, "Compliance reporting for the systems remains with the client.", kAuthored},

      // Pentests
      {"Pentests", "Pl", L::kE,
       "The contractor independently plans type and scope of penetration tests for the systems, drawing on its "
       "knowledge of the landscape from its other duties.",
       kAuthored},
      {"Pentests", "Pl", L::kEI,
       "The contractor leads planning of type and scope of penetration tests for the systems; the client approves "
       "the test plan.",
       kAuthored},
      {"Pentests", "Pl", L::kIE,
       "The contractor supports the client's planning of penetration tests for the systems; the client defines type, "
       "scope and precise requirements.",
       kAuthored},
      {"Pentests", "Pl", L::kI, "Planning of penetration tests remains with the client.", kAuthored},
      {"Pentests", "Ex", L::kE,
       "The contractor independently executes the agreed penetration tests over digital channels and delivers a "
       "test report; where independence requires it, the contractor commissions a separate testing party.",
       kAuthored},
      {"Pentests", "Ex", L::kEI,
       "The contractor executes the agreed penetration tests and delivers a test report; client staff support with "
       "test accounts and access.",
       kAuthored},
      {"Pentests", "Ex", L::kIE,
       "The contractor supports penetration tests carried out by the client with tooling and expertise.", kAuthored},
      {"Pentests", "Ex", L::kI, "Execution of penetration tests remains with the client.", kAuthored},
  };
}

}  // namespace

const TemplateSet& default_templates() {
  static const TemplateSet templates = build_defaults();
  return templates;
}

}  // namespace socplan
