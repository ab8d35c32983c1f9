#include "socplan/plan_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace socplan {

namespace {

using nlohmann::json;

// Walks a parsed JSON tree, recording located diagnostics instead of throwing.
class Reader {
 public:
  Diagnostics diagnostics;

  void error(std::string code, const std::string& path, std::string message) {
    diagnostics.push_back({Severity::kError, std::move(code), path, std::move(message)});
  }

  bool expect_object(const json& node, const std::string& path, std::initializer_list<std::string_view> allowed) {
    if (!node.is_object()) {
      error("type-mismatch", path, "expected an object");
      return false;
    }
    for (const auto& item : node.items()) {
      bool known = false;
      for (auto key : allowed) known = known || item.key() == key;
      if (!known) error("unknown-key", join(path, item.key()), "unknown key '" + item.key() + "'");
    }
    return true;
  }

  const json* field(const json& node, const std::string& path, std::string_view key, bool required) {
    auto it = node.find(std::string(key));
    if (it == node.end()) {
      if (required) error("missing-key", join(path, key), "required key '" + std::string(key) + "' is missing");
      return nullptr;
    }
    return &*it;
  }

  std::string string(const json& node, const std::string& path, std::string_view key, bool required) {
    const json* value = field(node, path, key, required);
    if (value == nullptr) return {};
    if (!value->is_string()) {
      error("type-mismatch", join(path, key), "expected a string");
      return {};
    }
    return value->get<std::string>();
  }

  std::vector<std::string> strings(const json& node, const std::string& path, std::string_view key, bool required) {
    std::vector<std::string> out;
    const json* value = field(node, path, key, required);
    if (value == nullptr) return out;
    const std::string here = join(path, key);
    if (!value->is_array()) {
      error("type-mismatch", here, "expected an array of strings");
      return out;
    }
    for (std::size_t i = 0; i < value->size(); ++i) {
      if (!(*value)[i].is_string()) {
        error("type-mismatch", index(here, i), "expected a string");
        continue;
      }
      out.push_back((*value)[i].get<std::string>());
    }
    return out;
  }

  const json* array(const json& node, const std::string& path, std::string_view key, bool required) {
    const json* value = field(node, path, key, required);
    if (value == nullptr) return nullptr;
    if (!value->is_array()) {
      error("type-mismatch", join(path, key), "expected an array");
      return nullptr;
    }
    return value;
  }

  static std::string join(const std::string& path, std::string_view key) {
    return path.empty() ? std::string(key) : path + "." + std::string(key);
  }
  static std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
};

std::optional<double> number_field(Reader& r, const json& node, const std::string& path, std::string_view key) {
  const json* value = r.field(node, path, key, true);
  if (value == nullptr) return std::nullopt;
  if (!value->is_number()) {
    r.error("type-mismatch", Reader::join(path, key), "expected a number");
    return std::nullopt;
  }
  return value->get<double>();
}

FunctionGroup read_group(Reader& r, const json& node, const std::string& path) {
  FunctionGroup g;
  if (!r.expect_object(node, path, {"id", "name", "description", "primary", "secondary", "relevance", "rationale"})) {
    return g;
  }
  g.id = r.string(node, path, "id", true);
  g.name = r.string(node, path, "name", true);
  g.description = r.string(node, path, "description", false);
  g.rationale = r.string(node, path, "rationale", false);

  const std::string primary = r.string(node, path, "primary", true);
  if (auto kind = parse_control(primary)) {
    g.assignment.primary = *kind;
  } else if (node.contains("primary") && node["primary"].is_string()) {
    r.error("unknown-control", Reader::join(path, "primary"), "unknown security control '" + primary + "'");
  }
  const auto secondary = r.strings(node, path, "secondary", false);
  for (std::size_t i = 0; i < secondary.size(); ++i) {
    if (auto kind = parse_control(secondary[i])) {
      g.assignment.secondary.push_back(*kind);
    } else {
      r.error("unknown-control", Reader::index(Reader::join(path, "secondary"), i),
              "unknown security control '" + secondary[i] + "'");
    }
  }
  const std::string relevance = r.string(node, path, "relevance", true);
  if (auto level = parse_relevance(relevance)) {
    g.relevance = *level;
  } else if (node.contains("relevance") && node["relevance"].is_string()) {
    r.error("invalid-relevance", Reader::join(path, "relevance"),
            "relevance must be Low, Medium or High, got '" + relevance + "'");
  }
  return g;
}

Category read_category(Reader& r, const json& node, const std::string& path) {
  Category c;
  if (!r.expect_object(node, path,
                       {"id", "label", "short_name", "name", "description", "members", "published_scores"})) {
    return c;
  }
  c.id = r.string(node, path, "id", true);
  c.label = r.string(node, path, "label", true);
  c.short_name = r.string(node, path, "short_name", false);
  c.name = r.string(node, path, "name", true);
  c.description = r.string(node, path, "description", false);
  c.members = r.strings(node, path, "members", true);
  if (const json* pub = r.field(node, path, "published_scores", false)) {
    const std::string pub_path = Reader::join(path, "published_scores");
    if (r.expect_object(*pub, pub_path, {kSiemTaskId, kBaselineTaskId, "note"})) {
      PublishedScores scores;
      scores.siem = number_field(r, *pub, pub_path, kSiemTaskId).value_or(0.0);
      scores.baseline = number_field(r, *pub, pub_path, kBaselineTaskId).value_or(0.0);
      scores.note = r.string(*pub, pub_path, "note", false);
      c.published = scores;
    }
  }
  return c;
}

SocTaskTaxonomy read_taxonomy(Reader& r, const json& node, const std::string& path) {
  SocTaskTaxonomy t;
  if (!r.expect_object(node, path, {"main_tasks"})) return t;
  const json* tasks = r.array(node, path, "main_tasks", true);
  if (tasks == nullptr) return t;
  for (std::size_t i = 0; i < tasks->size(); ++i) {
    const std::string task_path = Reader::index(Reader::join(path, "main_tasks"), i);
    const json& task_node = (*tasks)[i];
    MainTask task;
    if (!r.expect_object(task_node, task_path, {"id", "name", "subtasks"})) continue;
    task.id = r.string(task_node, task_path, "id", true);
    task.name = r.string(task_node, task_path, "name", true);
    if (const json* subs = r.array(task_node, task_path, "subtasks", true)) {
      for (std::size_t s = 0; s < subs->size(); ++s) {
        const std::string sub_path = Reader::index(Reader::join(task_path, "subtasks"), s);
        if (!r.expect_object((*subs)[s], sub_path, {"id", "name"})) continue;
        task.subtasks.push_back(
            {r.string((*subs)[s], sub_path, "id", true), r.string((*subs)[s], sub_path, "name", true)});
      }
    }
    t.main_tasks.push_back(std::move(task));
  }
  return t;
}

std::optional<InvolvementValue> read_scale_value(Reader& r, const json& value, const std::string& path) {
  if (!value.is_number()) {
    r.error("type-mismatch", path, "expected a number on the 0.1..0.9 scale or null");
    return std::nullopt;
  }
  auto v = InvolvementValue::from_double(value.get<double>());
  if (!v) r.error("invalid-value", path, "value must be one of 0.1, 0.3, 0.5, 0.7, 0.9");
  return v;
}

CellAssignment read_cell(Reader& r, const json& node, const std::string& path) {
  CellAssignment cell;
  if (!r.expect_object(node, path,
                       {"category", "task", "applicability", "levels", "override", "override_note", "rationale"})) {
    return cell;
  }
  cell.category_id = r.string(node, path, "category", true);
  cell.task_id = r.string(node, path, "task", true);
  const std::string applicability = r.string(node, path, "applicability", true);
  if (applicability == "applicable") {
    cell.applicable = true;
  } else if (applicability == "not_applicable") {
    cell.applicable = false;
  } else if (node.contains("applicability") && node["applicability"].is_string()) {
    r.error("invalid-value", Reader::join(path, "applicability"),
            "applicability must be 'applicable' or 'not_applicable'");
  }
  const auto levels = r.strings(node, path, "levels", false);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (auto level = parse_level(levels[i])) {
      cell.levels.push_back(*level);
    } else {
      r.error("invalid-level", Reader::index(Reader::join(path, "levels"), i),
              "contribution level must be I, IE, EI or E, got '" + levels[i] + "'");
    }
  }
  if (const json* value = r.field(node, path, "override", false); value != nullptr && !value->is_null()) {
    cell.override_value = read_scale_value(r, *value, Reader::join(path, "override"));
  }
  cell.override_note = r.string(node, path, "override_note", false);
  cell.rationale = r.string(node, path, "rationale", false);
  return cell;
}

InvolvementModel read_model(Reader& r, const json& node, const std::string& path) {
  InvolvementModel m;
  if (!r.expect_object(node, path, {"id", "name", "description", "cells"})) return m;
  m.id = r.string(node, path, "id", true);
  m.name = r.string(node, path, "name", true);
  m.description = r.string(node, path, "description", false);
  if (const json* cells = r.array(node, path, "cells", true)) {
    for (std::size_t i = 0; i < cells->size(); ++i) {
      m.cells.push_back(read_cell(r, (*cells)[i], Reader::index(Reader::join(path, "cells"), i)));
    }
  }
  return m;
}

ClauseTemplate read_template(Reader& r, const json& node, const std::string& path) {
  ClauseTemplate t;
  if (!r.expect_object(node, path, {"task", "subtask", "level", "text", "origin"})) return t;
  t.task_id = r.string(node, path, "task", true);
  t.subtask_id = r.string(node, path, "subtask", true);
  const std::string level = r.string(node, path, "level", true);
  if (auto parsed = parse_level(level)) {
    t.level = *parsed;
  } else if (node.contains("level") && node["level"].is_string()) {
    r.error("invalid-level", Reader::join(path, "level"), "contribution level must be I, IE, EI or E");
  }
  t.text = r.string(node, path, "text", true);
  t.origin = r.string(node, path, "origin", false);
  return t;
}

json write_group(const FunctionGroup& g) {
  json secondary = json::array();
  for (auto kind : g.assignment.secondary) secondary.push_back(std::string(control_token(kind)));
  return json{{"id", g.id},
              {"name", g.name},
              {"description", g.description},
              {"primary", std::string(control_token(g.assignment.primary))},
              {"secondary", secondary},
              {"relevance", std::string(relevance_token(g.relevance))},
              {"rationale", g.rationale}};
}

json write_category(const Category& c) {
  json out{{"id", c.id},
           {"label", c.label},
           {"short_name", c.short_name},
           {"name", c.name},
           {"description", c.description},
           {"members", c.members}};
  if (c.published) {
    out["published_scores"] = json{{std::string(kSiemTaskId), c.published->siem},
                                   {std::string(kBaselineTaskId), c.published->baseline},
                                   {"note", c.published->note}};
  }
  return out;
}

json write_cell(const CellAssignment& cell) {
  json levels = json::array();
  for (auto level : cell.levels) levels.push_back(std::string(level_token(level)));
  json out{{"category", cell.category_id},
           {"task", cell.task_id},
           {"applicability", cell.applicable ? "applicable" : "not_applicable"},
           {"levels", levels},
           {"override", nullptr},
           {"override_note", cell.override_note},
           {"rationale", cell.rationale}};
  if (cell.override_value) out["override"] = cell.override_value->value();
  return out;
}

}  // namespace

const InvolvementModel* PlanDocument::find_model(std::string_view id) const {
  for (const auto& m : models) {
    if (m.id == id) return &m;
  }
  return nullptr;
}

InvolvementModel* PlanDocument::find_model(std::string_view id) {
  for (auto& m : models) {
    if (m.id == id) return &m;
  }
  return nullptr;
}

Diagnostics validate_plan(const PlanDocument& document) {
  Diagnostics out;
  auto append = [&](Diagnostics more) { out.insert(out.end(), more.begin(), more.end()); };

  if (document.meta.schema_version != kSchemaVersion) {
    out.push_back({Severity::kError, "unsupported-schema-version", "meta.schema_version",
                   "schema_version " + std::to_string(document.meta.schema_version) + " is not supported (expected " +
                       std::to_string(kSchemaVersion) + ")"});
  }
  if (document.taxonomy) append(validate_taxonomy(*document.taxonomy));
  append(validate_landscape(document.landscape));

  const auto& taxonomy = document.effective_taxonomy();
  std::set<std::string> model_ids;
  for (std::size_t i = 0; i < document.models.size(); ++i) {
    const std::string path = "models[" + std::to_string(i) + "]";
    if (!model_ids.insert(document.models[i].id).second) {
      out.push_back({Severity::kError, "duplicate-model-id", path + ".id",
                     "model id '" + document.models[i].id + "' is used more than once"});
    }
    append(validate_model(document.models[i], document.landscape, taxonomy, path));
  }

  for (std::size_t i = 0; i < document.templates.size(); ++i) {
    const auto& t = document.templates[i];
    const MainTask* task = taxonomy.find(t.task_id);
    bool known = false;
    if (task != nullptr) {
      for (const auto& sub : task->subtasks) known = known || sub.id == t.subtask_id;
    }
    if (!known) {
      out.push_back({Severity::kError, "unknown-subtask", "templates[" + std::to_string(i) + "]",
                     "template targets unknown subtask " + t.task_id + "/" + t.subtask_id});
    }
  }
  for (const auto& gap : template_gaps(document.effective_templates(), taxonomy)) {
    out.push_back({Severity::kError, "template-gap", "templates", "no clause template for " + gap});
  }
  return out;
}

ParseResult parse_plan(std::string_view input) {
  ParseResult result;
  json root;
  try {
    root = json::parse(input.begin(), input.end());
  } catch (const json::parse_error& e) {
    result.diagnostics.push_back({Severity::kError, "syntax", "", e.what()});
    return result;
  }

  Reader r;
  PlanDocument doc;
  if (r.expect_object(root, "", {"meta", "landscape", "taxonomy", "models", "templates"})) {
    if (const json* meta = r.field(root, "", "meta", true); meta && r.expect_object(*meta, "meta", {"name", "schema_version", "created", "updated"})) {
      doc.meta.name = r.string(*meta, "meta", "name", true);
      if (const json* version = r.field(*meta, "meta", "schema_version", true)) {
        if (version->is_number_integer()) {
          doc.meta.schema_version = version->get<int>();
        } else {
          r.error("type-mismatch", "meta.schema_version", "expected an integer");
        }
      }
      doc.meta.created = r.string(*meta, "meta", "created", false);
      doc.meta.updated = r.string(*meta, "meta", "updated", false);
    }
    if (const json* land = r.field(root, "", "landscape", true);
        land && r.expect_object(*land, "landscape", {"groups", "categories"})) {
      if (const json* groups = r.array(*land, "landscape", "groups", true)) {
        for (std::size_t i = 0; i < groups->size(); ++i) {
          doc.landscape.groups.push_back(read_group(r, (*groups)[i], Reader::index("landscape.groups", i)));
        }
      }
      if (const json* cats = r.array(*land, "landscape", "categories", false)) {
        for (std::size_t i = 0; i < cats->size(); ++i) {
          doc.landscape.categories.push_back(read_category(r, (*cats)[i], Reader::index("landscape.categories", i)));
        }
      }
    }
    if (const json* tax = r.field(root, "", "taxonomy", false); tax && !tax->is_null()) {
      doc.taxonomy = read_taxonomy(r, *tax, "taxonomy");
    }
    if (const json* models = r.array(root, "", "models", false)) {
      for (std::size_t i = 0; i < models->size(); ++i) {
        doc.models.push_back(read_model(r, (*models)[i], Reader::index("models", i)));
      }
    }
    if (const json* templates = r.array(root, "", "templates", false)) {
      for (std::size_t i = 0; i < templates->size(); ++i) {
        doc.templates.push_back(read_template(r, (*templates)[i], Reader::index("templates", i)));
      }
    }
  }

  result.diagnostics = std::move(r.diagnostics);
  if (has_errors(result.diagnostics)) return result;

  auto semantic = validate_plan(doc);
  result.diagnostics.insert(result.diagnostics.end(), semantic.begin(), semantic.end());
  if (!has_errors(result.diagnostics)) result.document = std::move(doc);
  return result;
}

std::string serialize_plan(const PlanDocument& document) {
  json meta{{"name", document.meta.name},
            {"schema_version", document.meta.schema_version},
            {"created", document.meta.created},
            {"updated", document.meta.updated}};

  json groups = json::array();
  for (const auto& g : document.landscape.groups) groups.push_back(write_group(g));
  json categories = json::array();
  for (const auto& c : document.landscape.categories) categories.push_back(write_category(c));

  json models = json::array();
  for (const auto& m : document.models) {
    json cells = json::array();
    for (const auto& cell : m.cells) cells.push_back(write_cell(cell));
    models.push_back(json{{"id", m.id}, {"name", m.name}, {"description", m.description}, {"cells", cells}});
  }

  json templates = json::array();
  for (const auto& t : document.templates) {
    templates.push_back(json{{"task", t.task_id},
                             {"subtask", t.subtask_id},
                             {"level", std::string(level_token(t.level))},
                             {"text", t.text},
                             {"origin", t.origin}});
  }

  json root{{"meta", meta},
            {"landscape", json{{"groups", groups}, {"categories", categories}}},
            {"models", models},
            {"templates", templates}};
  if (document.taxonomy) {
    json tasks = json::array();
    for (const auto& task : document.taxonomy->main_tasks) {
      json subs = json::array();
      for (const auto& s : task.subtasks) subs.push_back(json{{"id", s.id}, {"name", s.name}});
      tasks.push_back(json{{"id", task.id}, {"name", task.name}, {"subtasks", subs}});
    }
    root["taxonomy"] = json{{"main_tasks", tasks}};
  }
  return root.dump(2) + "\n";
}

ParseResult load_plan_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ParseResult result;
    result.diagnostics.push_back({Severity::kError, "io", path, "cannot open plan file"});
    return result;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_plan(buffer.str());
}

}  // namespace socplan
