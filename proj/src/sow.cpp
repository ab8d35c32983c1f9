#include "socplan/sow.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "socplan/abstraction.hpp"

namespace socplan {

namespace {

using TemplateKey = std::tuple<std::string, std::string, ContributionLevel>;

TemplateKey key_of(const ClauseTemplate& t) { return {t.task_id, t.subtask_id, t.level}; }

void replace_all(std::string& text, std::string_view from, const std::string& to) {
  std::size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

// "A", "A and B", "A, B and C"
std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += i + 1 == names.size() ? " and " : ", ";
    out += names[i];
  }
  return out;
}

}  // namespace

TemplateSet merge_templates(const TemplateSet& defaults, const TemplateSet& overrides) {
  TemplateSet out = defaults;
  for (const auto& t : overrides) {
    auto it = std::find_if(out.begin(), out.end(), [&](const ClauseTemplate& d) { return key_of(d) == key_of(t); });
    if (it == out.end()) {
      out.push_back(t);
    } else {
      *it = t;
    }
  }
  return out;
}

const ClauseTemplate* find_template(const TemplateSet& templates, std::string_view task_id,
                                    std::string_view subtask_id, ContributionLevel level) {
  auto it = std::find_if(templates.begin(), templates.end(), [&](const ClauseTemplate& t) {
    return t.task_id == task_id && t.subtask_id == subtask_id && t.level == level;
  });
  return it == templates.end() ? nullptr : &*it;
}

std::vector<std::string> template_gaps(const TemplateSet& templates, const SocTaskTaxonomy& taxonomy) {
  std::vector<std::string> gaps;
  for (const auto& task : taxonomy.main_tasks) {
    for (const auto& sub : task.subtasks) {
      for (auto level : {ContributionLevel::kI, ContributionLevel::kIE, ContributionLevel::kEI, ContributionLevel::kE}) {
        if (find_template(templates, task.id, sub.id, level) == nullptr) {
          gaps.push_back(task.id + "/" + sub.id + "/" + std::string(level_token(level)));
        }
      }
    }
  }
  return gaps;
}

MergedCells merge_cells(const InvolvementModel& model, std::string_view task_id, const Landscape& landscape) {
  MergedCells out;
  using Signature = std::pair<std::vector<ContributionLevel>, int>;
  std::vector<std::pair<Signature, std::vector<std::string>>> buckets;
  for (const Category* category : landscape.categories_by_label()) {
    const auto* cell = model.find(category->id, task_id);
    if (cell == nullptr) continue;
    if (!cell->applicable) {
      out.not_applicable.push_back(category->id);
      continue;
    }
    Signature signature{cell->levels, effective_value(*cell)->tenths()};
    auto it = std::find_if(buckets.begin(), buckets.end(), [&](const auto& b) { return b.first == signature; });
    if (it == buckets.end()) {
      buckets.push_back({std::move(signature), {category->id}});
    } else {
      it->second.push_back(category->id);
    }
  }
  for (auto& bucket : buckets) out.sets.push_back(std::move(bucket.second));
  return out;
}

std::vector<const SowClause*> SowSection::duties() const {
  std::vector<const SowClause*> out;
  for (const auto& c : clauses) {
    if (c.kind == ClauseKind::kContractorDuty) out.push_back(&c);
  }
  return out;
}

std::vector<const SowClause*> SowSection::retained() const {
  std::vector<const SowClause*> out;
  for (const auto& c : clauses) {
    if (c.kind == ClauseKind::kClientRetained) out.push_back(&c);
  }
  return out;
}

const SowSection* SowDocument::find_section(std::string_view task_id,
                                            const std::vector<std::string>& category_ids) const {
  for (const auto& block : tasks) {
    if (block.task_id != task_id) continue;
    for (const auto& section : block.sections) {
      if (section.category_ids == category_ids) return &section;
    }
  }
  return nullptr;
}

SowDocument generate_sow(const InvolvementModel& model, const Landscape& landscape, const SocTaskTaxonomy& taxonomy,
                         const TemplateSet& templates) {
  SowDocument doc;
  doc.model_id = model.id;
  doc.model_name = model.name;

  for (const auto& task : taxonomy.main_tasks) {
    SowTaskBlock block;
    block.task_id = task.id;
    block.task_name = task.name;

    const auto merged = merge_cells(model, task.id, landscape);
    for (const auto& set : merged.sets) {
      SowSection section;
      section.task_id = task.id;
      section.category_ids = set;

      std::vector<std::string> category_names;
      std::vector<std::string> group_names;
      for (const auto& category_id : set) {
        const Category& category = *landscape.find_category(category_id);
        category_names.push_back(category.name);
        ScopeEntry entry{category.id, category.name, category.display_name(), category.description,
                         expand(category, landscape)};
        for (const auto& group : entry.groups) group_names.push_back(group.name);
        section.scope.push_back(std::move(entry));
      }
      const std::string names = join_names(category_names);
      const std::string systems = join_names(group_names);
      section.heading = task.name + ": " + names;

      const auto& cell = *model.find(set.front(), task.id);
      section.levels = format_levels(cell.levels);
      section.value = effective_value(cell);

      for (std::size_t s = 0; s < cell.levels.size() && s < task.subtasks.size(); ++s) {
        const auto& subtask = task.subtasks[s];
        const auto level = cell.levels[s];
        const auto* clause_template = find_template(templates, task.id, subtask.id, level);
        if (clause_template == nullptr) {
          throw Error("template-gap", "no clause template for subtask " + task.id + "/" + subtask.id + " at level " +
                                          std::string(level_token(level)));
        }
        std::string text = clause_template->text;
        replace_all(text, "{category_names}", names);
        replace_all(text, "{system_descriptions}", systems);
        replace_all(text, "{subtask_name}", subtask.name);
        const auto kind = level == ContributionLevel::kI ? ClauseKind::kClientRetained : ClauseKind::kContractorDuty;
        for (auto& line : split_lines(text)) section.clauses.push_back({subtask.id, level, kind, std::move(line)});
      }
      block.sections.push_back(std::move(section));
    }

    for (const auto& category_id : merged.not_applicable) {
      const Category& category = *landscape.find_category(category_id);
      block.exclusions.push_back({task.id, category_id, category.name, model.find(category_id, task.id)->rationale});
    }
    doc.tasks.push_back(std::move(block));
  }
  return doc;
}

std::string render_sow(const SowDocument& document) {
  std::ostringstream out;
  out << "# Statement of Work: " << (document.model_name.empty() ? document.model_id : document.model_name) << "\n\n";
  out << "Model: " << document.model_id << "\n";

  for (const auto& block : document.tasks) {
    out << "\n## " << block.task_name << "\n";
    for (const auto& section : block.sections) {
      out << "\n### " << section.heading << "\n\n";
      out << "Involvement: ";
      if (section.value) out << section.value->str() << " (" << section.value->label() << ")";
      if (!section.levels.empty()) out << ", levels " << section.levels;
      out << "\n\nScope. The following systems are in scope of this section:\n\n";
      for (const auto& entry : section.scope) {
        out << "- " << entry.category_name << " (" << entry.short_name << ")";
        if (!entry.description.empty()) out << ": " << entry.description;
        out << "\n";
        for (const auto& group : entry.groups) {
          out << "  - " << group.name;
          if (!group.description.empty()) out << ": " << group.description;
          out << "\n";
        }
      }

      const auto duties = section.duties();
      out << "\nFor these systems the contractor performs the following tasks:\n\n";
      if (duties.empty()) {
        out << "None. The contractor has no duties in this area.\n";
      } else {
        int number = 1;
        for (const auto* clause : duties) {
          out << number++ << ". [" << clause->subtask_id << ", " << level_token(clause->level) << "] " << clause->text
              << "\n";
        }
      }
      const auto retained = section.retained();
      if (!retained.empty()) {
        out << "\nRetained by the client:\n\n";
        for (const auto* clause : retained) out << "- [" << clause->subtask_id << "] " << clause->text << "\n";
      }
    }
    if (!block.exclusions.empty()) {
      out << "\n### " << block.task_name << ": exclusions\n\n";
      for (const auto& exclusion : block.exclusions) {
        out << "- " << exclusion.category_name << " is excluded from " << block.task_name << ".";
        if (!exclusion.rationale.empty()) out << " Rationale: " << exclusion.rationale;
        out << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace socplan
