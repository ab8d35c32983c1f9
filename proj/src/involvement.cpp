#include "socplan/involvement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <utility>

namespace socplan {

std::string_view level_token(ContributionLevel level) {
  switch (level) {
    case ContributionLevel::kI:
      return "I";
    case ContributionLevel::kIE:
      return "IE";
    case ContributionLevel::kEI:
      return "EI";
    case ContributionLevel::kE:
      return "E";
  }
  return "I";
}

std::optional<ContributionLevel> parse_level(std::string_view token) {
  if (token == "I") return ContributionLevel::kI;
  if (token == "IE") return ContributionLevel::kIE;
  if (token == "EI") return ContributionLevel::kEI;
  if (token == "E") return ContributionLevel::kE;
  return std::nullopt;
}

std::string format_levels(std::span<const ContributionLevel> levels) {
  std::string out;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i > 0) out += "/";
    out += level_token(levels[i]);
  }
  return out;
}

std::optional<InvolvementValue> InvolvementValue::from_tenths(int tenths) {
  if (std::find(kTenths.begin(), kTenths.end(), tenths) == kTenths.end()) return std::nullopt;
  return InvolvementValue(tenths);
}

std::optional<InvolvementValue> InvolvementValue::from_double(double value) {
  if (!std::isfinite(value)) return std::nullopt;
  const double scaled = value * 10.0;
  const double nearest = std::round(scaled);
  if (std::fabs(scaled - nearest) > 1e-8) return std::nullopt;
  return from_tenths(static_cast<int>(nearest));
}

std::string_view InvolvementValue::label() const {
  static constexpr std::array<std::string_view, 5> kLabels{"marginal", "low", "equivalent", "predominant",
                                                           "central"};
  return kLabels[static_cast<std::size_t>(step())];
}

std::string InvolvementValue::str() const { return "0." + std::to_string(tenths_); }

InvolvementValue level_value(ContributionLevel level) {
  switch (level) {
    case ContributionLevel::kI:
      return *InvolvementValue::from_tenths(1);
    case ContributionLevel::kIE:
      return *InvolvementValue::from_tenths(3);
    case ContributionLevel::kEI:
      return *InvolvementValue::from_tenths(7);
    case ContributionLevel::kE:
      return *InvolvementValue::from_tenths(9);
  }
  return *InvolvementValue::from_tenths(1);
}

InvolvementValue suggest_value(std::span<const ContributionLevel> levels) {
  if (levels.empty()) throw Error("empty-levels", "cannot suggest a value from an empty level list");
  // Work in tenths scaled by n: the mean is sum/n, and |sum - p*n| compares
  // distances to scale point p without division.
  long long sum = 0;
  for (auto level : levels) sum += level_value(level).tenths();
  const long long n = static_cast<long long>(levels.size());

  int best = InvolvementValue::kTenths.front();
  long long best_distance = std::llabs(sum - best * n);
  for (int point : InvolvementValue::kTenths) {
    const long long distance = std::llabs(sum - point * n);
    if (distance <= best_distance) {  // ascending scan: ties go to the larger point
      best = point;
      best_distance = distance;
    }
  }
  return *InvolvementValue::from_tenths(best);
}

std::optional<InvolvementValue> effective_value(const CellAssignment& cell) {
  if (!cell.applicable) return std::nullopt;
  if (cell.override_value) return cell.override_value;
  if (cell.levels.empty()) {
    throw Error("incomplete-cell",
                "cell (" + cell.category_id + ", " + cell.task_id + ") has neither subtask levels nor an override");
  }
  return suggest_value(cell.levels);
}

std::optional<InvolvementValue> suggested_value(const CellAssignment& cell) {
  if (!cell.applicable || cell.levels.empty()) return std::nullopt;
  return suggest_value(cell.levels);
}

const CellAssignment* InvolvementModel::find(std::string_view category_id, std::string_view task_id) const {
  auto it = std::find_if(cells.begin(), cells.end(), [&](const CellAssignment& c) {
    return c.category_id == category_id && c.task_id == task_id;
  });
  return it == cells.end() ? nullptr : &*it;
}

CellAssignment* InvolvementModel::find(std::string_view category_id, std::string_view task_id) {
  auto it = std::find_if(cells.begin(), cells.end(), [&](const CellAssignment& c) {
    return c.category_id == category_id && c.task_id == task_id;
  });
  return it == cells.end() ? nullptr : &*it;
}

Diagnostics validate_model(const InvolvementModel& model, const Landscape& landscape,
                           const SocTaskTaxonomy& taxonomy, std::string_view path_prefix) {
  Diagnostics out;
  const std::string prefix(path_prefix);
  auto add = [&](Severity severity, std::string code, std::string path, std::string message) {
    out.push_back({severity, std::move(code), std::move(path), std::move(message)});
  };

  if (!is_slug(model.id)) {
    add(Severity::kError, "invalid-id", prefix + ".id", "model id '" + model.id + "' is not a lowercase slug");
  }

  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t i = 0; i < model.cells.size(); ++i) {
    const auto& cell = model.cells[i];
    const std::string path = prefix + ".cells[" + std::to_string(i) + "]";
    const std::string where = "(" + cell.category_id + ", " + cell.task_id + ")";

    const bool known_category = landscape.find_category(cell.category_id) != nullptr;
    const MainTask* task = taxonomy.find(cell.task_id);
    if (!known_category) {
      add(Severity::kError, "unknown-category", path + ".category", "unknown category '" + cell.category_id + "'");
    }
    if (task == nullptr) {
      add(Severity::kError, "unknown-task", path + ".task", "unknown main task '" + cell.task_id + "'");
    }
    if (!seen.emplace(cell.category_id, cell.task_id).second) {
      add(Severity::kError, "duplicate-cell", path, "cell " + where + " appears more than once");
    }

    if (!cell.applicable) {
      if (cell.rationale.empty()) {
        add(Severity::kError, "missing-rationale", path + ".rationale",
            "not-applicable cell " + where + " needs a rationale");
      }
      if (!cell.levels.empty()) {
        add(Severity::kError, "levels-on-na", path + ".levels", "not-applicable cell " + where + " carries levels");
      }
      if (cell.override_value) {
        add(Severity::kError, "override-on-na", path + ".override",
            "not-applicable cell " + where + " carries an override");
      }
      continue;
    }

    if (cell.levels.empty() && !cell.override_value) {
      add(Severity::kError, "incomplete-cell", path + ".levels", "cell " + where + " has no subtask levels");
    }
    if (task != nullptr && !cell.levels.empty() && cell.levels.size() != task->subtasks.size()) {
      add(Severity::kError, "level-count-mismatch", path + ".levels",
          "cell " + where + " has " + std::to_string(cell.levels.size()) + " levels, main task '" + task->id +
              "' has " + std::to_string(task->subtasks.size()) + " subtasks");
    }
    if (cell.override_value && !cell.levels.empty()) {
      const auto suggestion = suggest_value(cell.levels);
      const int steps = std::abs(cell.override_value->step() - suggestion.step());
      add(Severity::kInfo, "override", path + ".override",
          "cell " + where + " " + format_levels(cell.levels) + " overrides suggested " + suggestion.str() +
              " with " + cell.override_value->str());
      if (steps > 1) {
        add(Severity::kWarning, "override-deviation", path + ".override",
            "override " + cell.override_value->str() + " is " + std::to_string(steps) +
                " scale steps from suggested " + suggestion.str());
      }
    }
  }

  for (const auto& category : landscape.categories) {
    for (const auto& task : taxonomy.main_tasks) {
      if (!seen.count({category.id, task.id})) {
        add(Severity::kError, "incomplete-grid", prefix + ".cells",
            "missing cell (" + category.id + ", " + task.id + ")");
      }
    }
  }
  return out;
}

bool CellDelta::unchanged() const {
  return !applicability_changed() && level_changes.empty() && from_value == to_value;
}

const CellDelta* ModelDiff::find(std::string_view category_id, std::string_view task_id) const {
  auto it = std::find_if(cells.begin(), cells.end(), [&](const CellDelta& d) {
    return d.category_id == category_id && d.task_id == task_id;
  });
  return it == cells.end() ? nullptr : &*it;
}

std::size_t ModelDiff::changed_count() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const CellDelta& d) { return !d.unchanged(); }));
}

ModelDiff diff_models(const InvolvementModel& from, const InvolvementModel& to, const Landscape& landscape,
                      const SocTaskTaxonomy& taxonomy) {
  auto keys = [](const InvolvementModel& m) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& c : m.cells) out.emplace(c.category_id, c.task_id);
    return out;
  };
  if (keys(from) != keys(to)) {
    throw Error("grid-mismatch", "models '" + from.id + "' and '" + to.id + "' do not cover the same cells");
  }

  ModelDiff diff;
  diff.from_model = from.id;
  diff.to_model = to.id;

  // Canonical order first, then any cells outside the landscape/taxonomy.
  std::vector<std::pair<std::string, std::string>> order;
  std::set<std::pair<std::string, std::string>> placed;
  for (const Category* category : landscape.categories_by_label()) {
    for (const auto& task : taxonomy.main_tasks) {
      if (from.find(category->id, task.id) != nullptr) {
        order.emplace_back(category->id, task.id);
        placed.emplace(category->id, task.id);
      }
    }
  }
  for (const auto& c : from.cells) {
    if (placed.emplace(c.category_id, c.task_id).second) order.emplace_back(c.category_id, c.task_id);
  }

  for (const auto& [category_id, task_id] : order) {
    const auto& a = *from.find(category_id, task_id);
    const auto& b = *to.find(category_id, task_id);
    CellDelta delta;
    delta.category_id = category_id;
    delta.task_id = task_id;
    delta.from_applicable = a.applicable;
    delta.to_applicable = b.applicable;
    delta.from_value = effective_value(a);
    delta.to_value = effective_value(b);
    if (delta.from_value && delta.to_value) {
      delta.value_delta_tenths = delta.to_value->tenths() - delta.from_value->tenths();
    }

    const MainTask* task = taxonomy.find(task_id);
    const std::size_t width = std::max(a.levels.size(), b.levels.size());
    for (std::size_t s = 0; s < width; ++s) {
      std::optional<ContributionLevel> la;
      std::optional<ContributionLevel> lb;
      if (s < a.levels.size()) la = a.levels[s];
      if (s < b.levels.size()) lb = b.levels[s];
      if (la == lb) continue;
      std::string subtask_id =
          task != nullptr && s < task->subtasks.size() ? task->subtasks[s].id : "#" + std::to_string(s);
      delta.level_changes.push_back({std::move(subtask_id), la, lb});
    }
    diff.cells.push_back(std::move(delta));
  }
  return diff;
}

}  // namespace socplan
