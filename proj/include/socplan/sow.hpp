#pragma once

#include <optional>
#include <string>
#include <vector>

#include "socplan/involvement.hpp"
#include "socplan/landscape.hpp"
#include "socplan/taxonomy.hpp"

namespace socplan {

// Wording for one (subtask, level) pair. Placeholders: {category_names},
// {system_descriptions}, {subtask_name}. A newline separates clauses that
// are numbered individually.
struct ClauseTemplate {
  std::string task_id;
  std::string subtask_id;
  ContributionLevel level = ContributionLevel::kI;
  std::string text;
  std::string origin;  // "reference-sow" or "authored"

  bool operator==(const ClauseTemplate&) const = default;
};

using TemplateSet = std::vector<ClauseTemplate>;

// Templates for every (subtask, level) of the default taxonomy.
const TemplateSet& default_templates();

// `overrides` replace defaults with the same (task, subtask, level) key.
TemplateSet merge_templates(const TemplateSet& defaults, const TemplateSet& overrides);

const ClauseTemplate* find_template(const TemplateSet& templates, std::string_view task_id,
                                    std::string_view subtask_id, ContributionLevel level);

// (task, subtask, level) triples of `taxonomy` with no template.
std::vector<std::string> template_gaps(const TemplateSet& templates, const SocTaskTaxonomy& taxonomy);

struct MergedCells {
  // Category ids sharing an identical level pattern and effective value,
  // each set in label order, sets ordered by their first label.
  std::vector<std::vector<std::string>> sets;
  std::vector<std::string> not_applicable;
};

MergedCells merge_cells(const InvolvementModel& model, std::string_view task_id, const Landscape& landscape);

enum class ClauseKind { kContractorDuty, kClientRetained };

struct SowClause {
  std::string subtask_id;
  ContributionLevel level = ContributionLevel::kI;
  ClauseKind kind = ClauseKind::kContractorDuty;
  std::string text;
};

// One category of a section's scope, expanded back to its function groups.
struct ScopeEntry {
  std::string category_id;
  std::string category_name;
  std::string short_name;
  std::string description;
  std::vector<FunctionGroup> groups;
};

struct SowSection {
  std::string task_id;
  std::vector<std::string> category_ids;
  std::string heading;
  std::vector<ScopeEntry> scope;
  std::string levels;                 // "EI/EI/IE"
  std::optional<InvolvementValue> value;
  std::vector<SowClause> clauses;     // subtask order; duty lines split out

  std::vector<const SowClause*> duties() const;
  std::vector<const SowClause*> retained() const;
};

struct SowExclusion {
  std::string task_id;
  std::string category_id;
  std::string category_name;
  std::string rationale;
};

struct SowTaskBlock {
  std::string task_id;
  std::string task_name;
  std::vector<SowSection> sections;
  std::vector<SowExclusion> exclusions;
};

struct SowDocument {
  std::string model_id;
  std::string model_name;
  std::vector<SowTaskBlock> tasks;  // taxonomy order

  const SowSection* find_section(std::string_view task_id, const std::vector<std::string>& category_ids) const;
};

// Throws Error("template-gap") naming the first missing (subtask, level).
SowDocument generate_sow(const InvolvementModel& model, const Landscape& landscape,
                         const SocTaskTaxonomy& taxonomy, const TemplateSet& templates);

// Plain-text markup (markdown headings and lists). Byte-stable.
std::string render_sow(const SowDocument& document);

}  // namespace socplan
