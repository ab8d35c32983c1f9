#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "socplan/diagnostic.hpp"
#include "socplan/involvement.hpp"
#include "socplan/landscape.hpp"
#include "socplan/sow.hpp"
#include "socplan/taxonomy.hpp"

namespace socplan {

inline constexpr int kSchemaVersion = 1;

struct PlanMeta {
  std::string name;
  int schema_version = kSchemaVersion;
  std::string created;  // free-form timestamps, may be empty
  std::string updated;

  bool operator==(const PlanMeta&) const = default;
};

struct PlanDocument {
  PlanMeta meta;
  Landscape landscape;
  std::optional<SocTaskTaxonomy> taxonomy;  // nullopt: built-in taxonomy
  std::vector<InvolvementModel> models;
  TemplateSet templates;  // replacements for the built-in templates

  const SocTaskTaxonomy& effective_taxonomy() const { return taxonomy ? *taxonomy : default_taxonomy(); }
  TemplateSet effective_templates() const { return merge_templates(default_templates(), templates); }
  const InvolvementModel* find_model(std::string_view id) const;
  InvolvementModel* find_model(std::string_view id);

  bool operator==(const PlanDocument&) const = default;
};

struct ParseResult {
  std::optional<PlanDocument> document;  // set iff no error diagnostics
  Diagnostics diagnostics;               // may hold warnings/info on success

  bool ok() const { return document.has_value(); }
};

// Strict: unknown keys, wrong types and invalid tokens are located errors.
// A structurally sound document is then checked against every landscape,
// taxonomy and model invariant.
ParseResult parse_plan(std::string_view input);

// Canonical UTF-8 JSON: sorted keys, two-space indent, trailing newline.
std::string serialize_plan(const PlanDocument& document);

// Semantic checks on an in-memory document (the second half of parse_plan).
Diagnostics validate_plan(const PlanDocument& document);

// The case-study plan shipped with the library.
std::string_view bundled_case_study();

ParseResult load_plan_file(const std::string& path);

}  // namespace socplan
