#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "socplan/diagnostic.hpp"

namespace socplan {

// The two SOC main tasks that security controls belong to. Only these two
// columns of the relationship matrix are scored.
enum class ControlTask { kSiem, kBaselineSecurity };

// Main task ids used by the built-in taxonomy for the scored columns.
inline constexpr std::string_view kSiemTaskId = "SIEM";
inline constexpr std::string_view kBaselineTaskId = "BaselineSecurity";

std::string_view control_task_id(ControlTask task);

enum class ControlKind {
  kCommunication,   // S.Com
  kAccess,          // S.Acc
  kApplication,     // S.App
  kIntrusion,       // S.ID
  kEndpoint,        // B.Ept
  kVulnerability,   // B.Vuln
  kPerimeter,       // B.Peri
};

struct ControlInfo {
  ControlKind kind;
  std::string_view token;
  std::string_view display_name;
  std::string_view description;
  ControlTask soc_task;
};

// The seven built-in controls in canonical order.
const std::array<ControlInfo, 7>& control_catalog();
const ControlInfo& control_info(ControlKind kind);
std::string_view control_token(ControlKind kind);
std::optional<ControlKind> parse_control(std::string_view token);

// Throws Error("unknown-control") for tokens outside the catalog.
ControlTask control_task(std::string_view token);
ControlTask control_task(ControlKind kind);

enum class RelevanceLevel { kLow, kMedium, kHigh };

int relevance_factor(RelevanceLevel level);
std::string_view relevance_token(RelevanceLevel level);
std::optional<RelevanceLevel> parse_relevance(std::string_view token);

struct ControlAssignment {
  ControlKind primary = ControlKind::kCommunication;
  std::vector<ControlKind> secondary;

  bool operator==(const ControlAssignment&) const = default;
};

struct FunctionGroup {
  std::string id;
  std::string name;
  std::string description;
  ControlAssignment assignment;
  RelevanceLevel relevance = RelevanceLevel::kLow;
  std::string rationale;

  bool operator==(const FunctionGroup&) const = default;
};

// Reference values for a category row as printed in an external source,
// kept so reports can show where the computed scores disagree.
struct PublishedScores {
  double siem = 0.0;
  double baseline = 0.0;
  std::string note;

  bool operator==(const PublishedScores&) const = default;
};

struct Category {
  std::string id;
  std::string label;       // ordering token, e.g. "A"
  std::string short_name;  // display token, e.g. "Infra"; may be empty
  std::string name;
  std::string description;
  std::vector<std::string> members;
  std::optional<PublishedScores> published;

  // short_name when set, else id.
  const std::string& display_name() const { return short_name.empty() ? id : short_name; }

  bool operator==(const Category&) const = default;
};

struct Landscape {
  std::vector<FunctionGroup> groups;
  std::vector<Category> categories;

  const FunctionGroup* find_group(std::string_view id) const;
  const Category* find_category(std::string_view id) const;
  // Categories sorted by label (then id); the canonical row order.
  std::vector<const Category*> categories_by_label() const;

  bool operator==(const Landscape&) const = default;
};

bool is_slug(std::string_view text);

// Empty iff every landscape invariant holds. Codes: invalid-id,
// duplicate-group-id, primary-in-secondary, duplicate-secondary,
// secondary-overflow, invalid-category-id, duplicate-category-id,
// empty-category, unresolved-member, partition-violation, partition-incomplete.
// `path_prefix` is prepended to every diagnostic path.
Diagnostics validate_landscape(const Landscape& landscape, std::string_view path_prefix = "landscape");

}  // namespace socplan
