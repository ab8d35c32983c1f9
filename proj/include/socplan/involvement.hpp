#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "socplan/diagnostic.hpp"
#include "socplan/landscape.hpp"
#include "socplan/taxonomy.hpp"

namespace socplan {

// Who carries out a subtask, ordered by external involvement. There is no
// middle level.
enum class ContributionLevel { kI, kIE, kEI, kE };

std::string_view level_token(ContributionLevel level);
std::optional<ContributionLevel> parse_level(std::string_view token);
// "EI/EI/IE"
std::string format_levels(std::span<const ContributionLevel> levels);

// A point on the five-step scale 0.1 .. 0.9, held as integer tenths.
class InvolvementValue {
 public:
  static constexpr std::array<int, 5> kTenths{1, 3, 5, 7, 9};

  static std::optional<InvolvementValue> from_tenths(int tenths);
  // Accepts only values within 1e-9 of a scale point.
  static std::optional<InvolvementValue> from_double(double value);

  int tenths() const { return tenths_; }
  double value() const { return tenths_ / 10.0; }
  int step() const { return (tenths_ - 1) / 2; }  // 0..4
  std::string_view label() const;  // marginal .. central
  std::string str() const;          // "0.5"

  auto operator<=>(const InvolvementValue&) const = default;

 private:
  explicit InvolvementValue(int tenths) : tenths_(tenths) {}
  int tenths_;
};

// Scale point a contribution level stands for: I 0.1, IE 0.3, EI 0.7, E 0.9.
InvolvementValue level_value(ContributionLevel level);

// Mean of the level values snapped to the nearest scale point; exact
// midpoints go to the larger value. Throws Error("empty-levels") on empty input.
InvolvementValue suggest_value(std::span<const ContributionLevel> levels);

struct CellAssignment {
  std::string category_id;
  std::string task_id;
  bool applicable = true;
  std::vector<ContributionLevel> levels;  // taxonomy subtask order
  std::optional<InvolvementValue> override_value;
  std::string override_note;
  std::string rationale;

  bool operator==(const CellAssignment&) const = default;
};

// nullopt for a not-applicable cell. Throws Error("incomplete-cell") for an
// applicable cell with neither levels nor override.
std::optional<InvolvementValue> effective_value(const CellAssignment& cell);
// Suggestion from the levels, or nullopt when there is nothing to suggest from.
std::optional<InvolvementValue> suggested_value(const CellAssignment& cell);

struct InvolvementModel {
  std::string id;
  std::string name;
  std::string description;
  std::vector<CellAssignment> cells;

  const CellAssignment* find(std::string_view category_id, std::string_view task_id) const;
  CellAssignment* find(std::string_view category_id, std::string_view task_id);

  bool operator==(const InvolvementModel&) const = default;
};

// Grid completeness, references, level counts, N/A rationale. Overrides
// produce an info-level `override` annotation, and a warning
// `override-deviation` when more than one scale step from the suggestion.
Diagnostics validate_model(const InvolvementModel& model, const Landscape& landscape,
                           const SocTaskTaxonomy& taxonomy, std::string_view path_prefix = "model");

struct LevelChange {
  std::string subtask_id;
  std::optional<ContributionLevel> from;
  std::optional<ContributionLevel> to;
};

struct CellDelta {
  std::string category_id;
  std::string task_id;
  bool from_applicable = true;
  bool to_applicable = true;
  std::vector<LevelChange> level_changes;
  std::optional<InvolvementValue> from_value;
  std::optional<InvolvementValue> to_value;
  int value_delta_tenths = 0;  // to - from; 0 unless both applicable

  bool applicability_changed() const { return from_applicable != to_applicable; }
  bool unchanged() const;
};

struct ModelDiff {
  std::string from_model;
  std::string to_model;
  std::vector<CellDelta> cells;  // category label order, then taxonomy order

  const CellDelta* find(std::string_view category_id, std::string_view task_id) const;
  std::size_t changed_count() const;
};

// Throws Error("grid-mismatch") when the two models do not cover the same
// cells, and propagates incomplete-cell.
ModelDiff diff_models(const InvolvementModel& from, const InvolvementModel& to, const Landscape& landscape,
                      const SocTaskTaxonomy& taxonomy);

}  // namespace socplan
