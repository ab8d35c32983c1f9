#include "socplan/taxonomy.hpp"

#include <algorithm>
#include <set>

namespace socplan {

const MainTask* SocTaskTaxonomy::find(std::string_view task_id) const {
  auto it = std::find_if(main_tasks.begin(), main_tasks.end(), [&](const MainTask& t) { return t.id == task_id; });
  return it == main_tasks.end() ? nullptr : &*it;
}

std::size_t SocTaskTaxonomy::index_of(std::string_view task_id) const {
  for (std::size_t i = 0; i < main_tasks.size(); ++i) {
    if (main_tasks[i].id == task_id) return i;
  }
  return std::string::npos;
}

const SocTaskTaxonomy& default_taxonomy() {
  static const SocTaskTaxonomy taxonomy{{
      {"Intelligence", "Intelligence", {{"KM", "Knowledge Management"}, {"RA", "Risk Analysis"}}},
      {"SIEM", "SIEM", {{"Mo", "Monitoring"}, {"DC", "Data Collection"}, {"S", "Security Event Management"}}},
      {"BaselineSecurity",
       "Baseline Security",
       {{"Vu", "Vulnerability Management"}, {"CS", "Compliance Scans"}}},
      {"Forensics",
       "Forensics",
       {{"DA", "Data Analysis"}, {"In", "Investigation"}, {"CR", "Compliance Reports"}}},
      {"Pentests", "Pentests", {{"Pl", "Planning"}, {"Ex", "Execution"}}},
  }};
  return taxonomy;
}

Diagnostics validate_taxonomy(const SocTaskTaxonomy& taxonomy, std::string_view path_prefix) {
  Diagnostics out;
  const std::string prefix(path_prefix);
  if (taxonomy.main_tasks.empty()) {
    out.push_back({Severity::kError, "empty-taxonomy", prefix + ".main_tasks", "taxonomy has no main tasks"});
  }
  std::set<std::string> task_ids;
  for (std::size_t i = 0; i < taxonomy.main_tasks.size(); ++i) {
    const auto& task = taxonomy.main_tasks[i];
    const std::string path = prefix + ".main_tasks[" + std::to_string(i) + "]";
    if (task.id.empty() || !task_ids.insert(task.id).second) {
      out.push_back({Severity::kError, "duplicate-task", path + ".id", "main task id '" + task.id + "' is empty or repeated"});
    }
    if (task.subtasks.empty()) {
      out.push_back({Severity::kError, "empty-task", path + ".subtasks", "main task '" + task.id + "' has no subtasks"});
    }
    std::set<std::string> sub_ids;
    for (std::size_t s = 0; s < task.subtasks.size(); ++s) {
      if (task.subtasks[s].id.empty() || !sub_ids.insert(task.subtasks[s].id).second) {
        out.push_back({Severity::kError, "duplicate-subtask", path + ".subtasks[" + std::to_string(s) + "].id",
                       "subtask id '" + task.subtasks[s].id + "' is empty or repeated"});
      }
    }
  }
  return out;
}

}  // namespace socplan
