#include "socplan/landscape.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace socplan {

namespace {

constexpr std::array<ControlInfo, 7> kCatalog{{
    {ControlKind::kCommunication, "S.Com", "Communication Monitoring",
     "Inspection of traffic between network nodes for anomalies, from volume logging to deep packet inspection.",
     ControlTask::kSiem},
    {ControlKind::kAccess, "S.Acc", "Access Monitoring",
     "Observation of requests that trigger functions on a node, based on protocol inspection and access logs.",
     ControlTask::kSiem},
    {ControlKind::kApplication, "S.App", "Application Monitoring",
     "Collection of security-related events from business application logs and built-in security modules.",
     ControlTask::kSiem},
    {ControlKind::kIntrusion, "S.ID", "Intrusion Detection",
     "Correlation of communication, access, application and endpoint data to detect breaches.",
     ControlTask::kSiem},
    {ControlKind::kEndpoint, "B.Ept", "Endpoint Security",
     "Hardening, configuration and agent-based monitoring of endpoints.", ControlTask::kBaselineSecurity},
    {ControlKind::kVulnerability, "B.Vuln", "Vulnerability Management",
     "Detection and removal of security deficiencies through updates or reconfiguration.",
     ControlTask::kBaselineSecurity},
    {ControlKind::kPerimeter, "B.Peri", "Perimeter Security",
     "Static segmentation and dynamic filtering of communication between network zones.",
     ControlTask::kBaselineSecurity},
}};

bool is_lower_alnum(char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'); }

}  // namespace

std::string_view control_task_id(ControlTask task) {
  return task == ControlTask::kSiem ? kSiemTaskId : kBaselineTaskId;
}

const std::array<ControlInfo, 7>& control_catalog() { return kCatalog; }

const ControlInfo& control_info(ControlKind kind) { return kCatalog[static_cast<std::size_t>(kind)]; }

std::string_view control_token(ControlKind kind) { return control_info(kind).token; }

std::optional<ControlKind> parse_control(std::string_view token) {
  for (const auto& info : kCatalog) {
    if (info.token == token) return info.kind;
  }
  return std::nullopt;
}

ControlTask control_task(std::string_view token) {
  auto kind = parse_control(token);
  if (!kind) throw Error("unknown-control", "unknown security control '" + std::string(token) + "'");
  return control_task(*kind);
}

ControlTask control_task(ControlKind kind) { return control_info(kind).soc_task; }

int relevance_factor(RelevanceLevel level) {
  switch (level) {
    case RelevanceLevel::kLow:
      return 1;
    case RelevanceLevel::kMedium:
      return 2;
    case RelevanceLevel::kHigh:
      return 3;
  }
  return 1;
}

std::string_view relevance_token(RelevanceLevel level) {
  switch (level) {
    case RelevanceLevel::kLow:
      return "Low";
    case RelevanceLevel::kMedium:
      return "Medium";
    case RelevanceLevel::kHigh:
      return "High";
  }
  return "Low";
}

std::optional<RelevanceLevel> parse_relevance(std::string_view token) {
  if (token == "Low") return RelevanceLevel::kLow;
  if (token == "Medium") return RelevanceLevel::kMedium;
  if (token == "High") return RelevanceLevel::kHigh;
  return std::nullopt;
}

const FunctionGroup* Landscape::find_group(std::string_view id) const {
  auto it = std::find_if(groups.begin(), groups.end(), [&](const FunctionGroup& g) { return g.id == id; });
  return it == groups.end() ? nullptr : &*it;
}

const Category* Landscape::find_category(std::string_view id) const {
  auto it = std::find_if(categories.begin(), categories.end(), [&](const Category& c) { return c.id == id; });
  return it == categories.end() ? nullptr : &*it;
}

std::vector<const Category*> Landscape::categories_by_label() const {
  std::vector<const Category*> out;
  out.reserve(categories.size());
  for (const auto& c : categories) out.push_back(&c);
  std::stable_sort(out.begin(), out.end(), [](const Category* a, const Category* b) {
    return std::tie(a->label, a->id) < std::tie(b->label, b->id);
  });
  return out;
}

bool is_slug(std::string_view text) {
  if (text.empty() || !is_lower_alnum(text.front()) || !is_lower_alnum(text.back())) return false;
  return std::all_of(text.begin(), text.end(), [](char c) { return is_lower_alnum(c) || c == '-' || c == '_'; });
}

Diagnostics validate_landscape(const Landscape& landscape, std::string_view path_prefix) {
  Diagnostics out;
  const std::string prefix(path_prefix);
  auto add = [&](std::string code, std::string path, std::string message) {
    out.push_back({Severity::kError, std::move(code), std::move(path), std::move(message)});
  };

  std::set<std::string> group_ids;
  for (std::size_t i = 0; i < landscape.groups.size(); ++i) {
    const auto& group = landscape.groups[i];
    const std::string path = prefix + ".groups[" + std::to_string(i) + "]";
    if (!is_slug(group.id)) {
      add("invalid-id", path + ".id", "group id '" + group.id + "' is not a lowercase slug");
    } else if (!group_ids.insert(group.id).second) {
      add("duplicate-group-id", path + ".id", "group id '" + group.id + "' is used more than once");
    }

    const auto& assignment = group.assignment;
    if (assignment.secondary.size() > 2) {
      add("secondary-overflow", path + ".secondary",
          "at most two secondary controls are allowed, found " + std::to_string(assignment.secondary.size()));
    }
    if (std::find(assignment.secondary.begin(), assignment.secondary.end(), assignment.primary) !=
        assignment.secondary.end()) {
      add("primary-in-secondary", path + ".secondary",
          "primary control " + std::string(control_token(assignment.primary)) + " is also listed as secondary");
    }
    std::set<ControlKind> seen(assignment.secondary.begin(), assignment.secondary.end());
    if (seen.size() != assignment.secondary.size()) {
      add("duplicate-secondary", path + ".secondary", "secondary controls must be pairwise distinct");
    }
  }

  std::set<std::string> category_ids;
  std::map<std::string, std::size_t> owner;  // group id -> category index
  for (std::size_t i = 0; i < landscape.categories.size(); ++i) {
    const auto& category = landscape.categories[i];
    const std::string path = prefix + ".categories[" + std::to_string(i) + "]";
    if (!is_slug(category.id)) {
      add("invalid-category-id", path + ".id", "category id '" + category.id + "' is not a lowercase slug");
    } else if (!category_ids.insert(category.id).second) {
      add("duplicate-category-id", path + ".id", "category id '" + category.id + "' is used more than once");
    }
    if (category.members.empty()) {
      add("empty-category", path + ".members", "category '" + category.id + "' has no members");
    }
    for (std::size_t m = 0; m < category.members.size(); ++m) {
      const auto& member = category.members[m];
      const std::string member_path = path + ".members[" + std::to_string(m) + "]";
      if (landscape.find_group(member) == nullptr) {
        add("unresolved-member", member_path, "member '" + member + "' does not name a function group");
        continue;
      }
      auto [it, inserted] = owner.emplace(member, i);
      if (!inserted) {
        add("partition-violation", member_path,
            "group '" + member + "' already belongs to category '" + landscape.categories[it->second].id + "'");
      }
    }
  }

  if (!landscape.categories.empty()) {
    for (std::size_t i = 0; i < landscape.groups.size(); ++i) {
      const auto& group = landscape.groups[i];
      if (!group.id.empty() && owner.find(group.id) == owner.end()) {
        add("partition-incomplete", prefix + ".groups[" + std::to_string(i) + "]",
            "group '" + group.id + "' is not assigned to any category");
      }
    }
  }
  return out;
}

}  // namespace socplan
