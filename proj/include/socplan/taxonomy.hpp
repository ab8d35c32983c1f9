#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "socplan/diagnostic.hpp"

namespace socplan {

struct Subtask {
  std::string id;
  std::string name;

  bool operator==(const Subtask&) const = default;
};

struct MainTask {
  std::string id;
  std::string name;
  std::vector<Subtask> subtasks;

  bool operator==(const MainTask&) const = default;
};

struct SocTaskTaxonomy {
  std::vector<MainTask> main_tasks;

  const MainTask* find(std::string_view task_id) const;
  std::size_t index_of(std::string_view task_id) const;  // npos when missing

  bool operator==(const SocTaskTaxonomy&) const = default;
};

// Intelligence {KM, RA}; SIEM {Mo, DC, S}; BaselineSecurity {Vu, CS};
// Forensics {DA, In, CR}; Pentests {Pl, Ex}.
const SocTaskTaxonomy& default_taxonomy();

// Codes: empty-taxonomy, duplicate-task, empty-task, duplicate-subtask.
Diagnostics validate_taxonomy(const SocTaskTaxonomy& taxonomy, std::string_view path_prefix = "taxonomy");

}  // namespace socplan
