#include "socplan/service.hpp"

#include <fstream>
#include <regex>

#include "httplib.h"
#include "socplan/export.hpp"
#include "socplan/scoring.hpp"
#include "socplan/sow.hpp"

namespace socplan {

namespace {

using nlohmann::json;

std::vector<json> split_json_lines(const std::string& text) {
  std::vector<json> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    if (end > start) out.push_back(json::parse(text.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

json diagnostics_json(const Diagnostics& diagnostics) {
  json out = json::array();
  for (const auto& d : diagnostics) {
    out.push_back(json{{"severity", severity_name(d.severity)}, {"code", d.code}, {"path", d.path}, {"message", d.message}});
  }
  return out;
}

ServiceResponse error_response(int status, const std::string& code, const std::string& message,
                               const Diagnostics& diagnostics = {}) {
  json body{{"error", code}, {"message", message}};
  if (!diagnostics.empty()) body["diagnostics"] = diagnostics_json(diagnostics);
  return {status, body, std::nullopt};
}

std::optional<long long> parse_revision(std::string text) {
  if (text.rfind("W/", 0) == 0) text = text.substr(2);
  if (text.size() >= 2 && text.front() == '"' && text.back() == '"') text = text.substr(1, text.size() - 2);
  if (text.empty()) return std::nullopt;
  try {
    std::size_t used = 0;
    long long value = std::stoll(text, &used);
    if (used != text.size()) return std::nullopt;
    return value;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// Applies one edit object ({levels, override, override_note, rationale,
// applicability}) to `cell`. Returns diagnostics for malformed fields.
Diagnostics apply_edit(CellAssignment& cell, const json& edit, const std::string& path) {
  Diagnostics out;
  auto bad = [&](const std::string& key, const std::string& message) {
    out.push_back({Severity::kError, "invalid-edit", path + (path.empty() ? "" : ".") + key, message});
  };
  if (!edit.is_object()) {
    bad("", "edit must be a JSON object");
    return out;
  }
  for (const auto& item : edit.items()) {
    const auto& key = item.key();
    const auto& value = item.value();
    if (key == "levels") {
      if (!value.is_array()) {
        bad(key, "levels must be an array of I, IE, EI, E");
        continue;
      }
      std::vector<ContributionLevel> levels;
      for (const auto& token : value) {
        auto level = token.is_string() ? parse_level(token.get<std::string>()) : std::nullopt;
        if (!level) {
          bad(key, "levels must be an array of I, IE, EI, E");
          break;
        }
        levels.push_back(*level);
      }
      if (levels.size() == value.size()) cell.levels = std::move(levels);
    } else if (key == "override") {
      if (value.is_null()) {
        cell.override_value.reset();
      } else if (auto v = value.is_number() ? InvolvementValue::from_double(value.get<double>()) : std::nullopt) {
        cell.override_value = v;
      } else {
        bad(key, "override must be null or one of 0.1, 0.3, 0.5, 0.7, 0.9");
      }
    } else if (key == "override_note" || key == "rationale") {
      if (!value.is_string()) {
        bad(key, key + " must be a string");
        continue;
      }
      (key == "rationale" ? cell.rationale : cell.override_note) = value.get<std::string>();
    } else if (key == "applicability") {
      if (value == "applicable") {
        cell.applicable = true;
      } else if (value == "not_applicable") {
        cell.applicable = false;
      } else {
        bad(key, "applicability must be 'applicable' or 'not_applicable'");
      }
    } else if (key != "category" && key != "task") {
      bad(key, "unknown key '" + key + "'");
    }
  }
  return out;
}

json model_view(const InvolvementModel& model, const Landscape& landscape, const SocTaskTaxonomy& taxonomy) {
  json cells = json::array();
  for (const Category* category : landscape.categories_by_label()) {
    for (const auto& task : taxonomy.main_tasks) {
      if (const auto* cell = model.find(category->id, task.id)) cells.push_back(cell_view(*cell));
    }
  }
  return json{{"id", model.id},
              {"name", model.name},
              {"description", model.description},
              {"cells", cells},
              {"diagnostics", diagnostics_json(validate_model(model, landscape, taxonomy))}};
}

json matrix_json(const ScoreReport& report) {
  json rows = json::array();
  for (const auto& line : split_json_lines(export_matrix(report.matrix, ExportFormat::kJsonLines))) rows.push_back(line);
  json columns = json::array();
  for (const auto& c : report.matrix.columns) {
    columns.push_back(json{{"task", c.task_id}, {"name", c.task_name}, {"scored", c.scored.has_value()}});
  }
  json pairs = json::array();
  for (const auto& p : report.close_pairs) {
    pairs.push_back(json{{"first", p.first}, {"second", p.second}, {"distance", format_rational(p.distance)}});
  }
  json discrepancies = json::array();
  for (const auto& d : report.discrepancies) {
    discrepancies.push_back(json{{"category", d.category_id},
                                 {"task", d.task_id},
                                 {"computed", format_one_decimal(d.computed)},
                                 {"computed_exact", format_rational(d.computed)},
                                 {"published", format_one_decimal(d.published)},
                                 {"note", d.note}});
  }
  return json{{"columns", columns},
              {"rows", rows},
              {"epsilon", format_rational(report.epsilon)},
              {"close_pairs", pairs},
              {"discrepancies", discrepancies}};
}

}  // namespace

json cell_view(const CellAssignment& cell) {
  json levels = json::array();
  for (auto level : cell.levels) levels.push_back(std::string(level_token(level)));
  json out{{"category", cell.category_id},
           {"task", cell.task_id},
           {"applicability", cell.applicable ? "applicable" : "not_applicable"},
           {"levels", levels},
           {"override", cell.override_value ? json(cell.override_value->value()) : json(nullptr)},
           {"override_note", cell.override_note},
           {"rationale", cell.rationale}};
  const auto suggested = suggested_value(cell);
  out["suggested"] = suggested ? json(suggested->value()) : json(nullptr);
  std::optional<InvolvementValue> effective;
  try {
    effective = effective_value(cell);
  } catch (const Error&) {
    effective.reset();
  }
  out["effective"] = effective ? json(effective->value()) : json(nullptr);
  out["label"] = effective ? json(std::string(effective->label())) : json(nullptr);
  out["overridden"] = cell.override_value.has_value() && suggested != cell.override_value;
  return out;
}

PlanService::PlanService(PlanDocument document, std::string plan_path)
    : plan_path_(std::move(plan_path)),
      snapshot_(std::make_shared<const Snapshot>(Snapshot{std::move(document), 1})) {}

std::shared_ptr<const PlanService::Snapshot> PlanService::snapshot() const {
  std::shared_lock lock(snapshot_mutex_);
  return snapshot_;
}

void PlanService::publish(std::shared_ptr<const Snapshot> next) {
  std::unique_lock lock(snapshot_mutex_);
  snapshot_ = std::move(next);
}

ServiceResponse PlanService::get_plan() const {
  auto snap = snapshot();
  return {200, json{{"revision", snap->revision}, {"plan", json::parse(serialize_plan(snap->document))}},
          snap->revision};
}

ServiceResponse PlanService::get_matrix(const std::optional<std::string>& epsilon) const {
  auto snap = snapshot();
  Rational eps = kDefaultEpsilon;
  if (epsilon) {
    try {
      std::size_t used = 0;
      const double value = std::stod(*epsilon, &used);
      if (used != epsilon->size() || value < 0) throw std::invalid_argument("epsilon");
      eps = Rational(std::llround(value * 1000000.0), 1000000);
    } catch (const std::exception&) {
      return error_response(400, "invalid-epsilon", "epsilon must be a nonnegative number");
    }
  }
  try {
    auto report = score_report(snap->document.landscape, eps, snap->document.effective_taxonomy());
    json body = matrix_json(report);
    body["revision"] = snap->revision;
    return {200, body, snap->revision};
  } catch (const Error& e) {
    return error_response(422, e.code(), e.what());
  }
}

ServiceResponse PlanService::get_model(const std::string& model_id) const {
  auto snap = snapshot();
  const auto* model = snap->document.find_model(model_id);
  if (model == nullptr) return error_response(404, "unknown-model", "no model '" + model_id + "'");
  json body = model_view(*model, snap->document.landscape, snap->document.effective_taxonomy());
  body["revision"] = snap->revision;
  return {200, body, snap->revision};
}

ServiceResponse PlanService::patch_cell(const std::string& model_id, const std::string& category_id,
                                        const std::string& task_id, const std::string& body,
                                        const std::optional<std::string>& expected_revision) {
  std::lock_guard writer(write_mutex_);
  auto snap = snapshot();

  if (!expected_revision) {
    return error_response(428, "revision-required", "send the expected revision in the If-Match header");
  }
  const auto expected = parse_revision(*expected_revision);
  if (!expected) return error_response(400, "invalid-revision", "If-Match must carry a revision number");

  const auto* model = snap->document.find_model(model_id);
  if (model == nullptr) return error_response(404, "unknown-model", "no model '" + model_id + "'");
  if (model->find(category_id, task_id) == nullptr) {
    return error_response(404, "unknown-cell", "no cell (" + category_id + ", " + task_id + ")");
  }
  if (*expected != snap->revision) {
    json conflict{{"error", "stale-revision"},
                  {"message", "plan is at revision " + std::to_string(snap->revision)},
                  {"revision", snap->revision}};
    return {409, conflict, snap->revision};
  }

  json edit;
  try {
    edit = json::parse(body);
  } catch (const json::parse_error& e) {
    return error_response(400, "syntax", e.what());
  }

  PlanDocument next = snap->document;
  auto& cell = *next.find_model(model_id)->find(category_id, task_id);
  auto problems = apply_edit(cell, edit, "");
  if (!problems.empty()) return error_response(422, "invalid-edit", "edit rejected", problems);

  const auto& updated_model = *next.find_model(model_id);
  auto diagnostics = validate_model(updated_model, next.landscape, next.effective_taxonomy(), "model");
  if (has_errors(diagnostics)) return error_response(422, "validation-failed", "edit rejected", diagnostics);

  json response = cell_view(cell);
  const long long revision = snap->revision + 1;
  response["revision"] = revision;
  Diagnostics cell_notes;
  for (const auto& d : diagnostics) {
    if (d.severity == Severity::kWarning) cell_notes.push_back(d);
  }
  response["diagnostics"] = diagnostics_json(cell_notes);
  publish(std::make_shared<const Snapshot>(Snapshot{std::move(next), revision}));
  return {200, response, revision};
}

ServiceResponse PlanService::whatif(const std::string& model_id, const std::string& body) const {
  auto snap = snapshot();
  const auto* model = snap->document.find_model(model_id);
  if (model == nullptr) return error_response(404, "unknown-model", "no model '" + model_id + "'");

  json request;
  try {
    request = json::parse(body.empty() ? std::string("{}") : body);
  } catch (const json::parse_error& e) {
    return error_response(400, "syntax", e.what());
  }
  json edits = request.is_object() && request.contains("edits") ? request["edits"] : json::array();
  if (!edits.is_array()) return error_response(422, "invalid-edit", "edits must be an array");

  InvolvementModel scratch = *model;
  Diagnostics problems;
  for (std::size_t i = 0; i < edits.size(); ++i) {
    const std::string path = "edits[" + std::to_string(i) + "]";
    const auto& edit = edits[i];
    if (!edit.is_object() || !edit.contains("category") || !edit.contains("task") || !edit["category"].is_string() ||
        !edit["task"].is_string()) {
      problems.push_back({Severity::kError, "invalid-edit", path, "each edit needs string category and task"});
      continue;
    }
    auto* cell = scratch.find(edit["category"].get<std::string>(), edit["task"].get<std::string>());
    if (cell == nullptr) {
      return error_response(404, "unknown-cell", "no cell (" + edit["category"].get<std::string>() + ", " +
                                                     edit["task"].get<std::string>() + ")");
    }
    auto more = apply_edit(*cell, edit, path);
    problems.insert(problems.end(), more.begin(), more.end());
  }
  if (!problems.empty()) return error_response(422, "invalid-edit", "what-if rejected", problems);

  const auto& taxonomy = snap->document.effective_taxonomy();
  auto diagnostics = validate_model(scratch, snap->document.landscape, taxonomy, "model");
  if (has_errors(diagnostics)) return error_response(422, "validation-failed", "what-if rejected", diagnostics);

  json out = model_view(scratch, snap->document.landscape, taxonomy);
  out["persisted"] = false;
  out["revision"] = snap->revision;
  return {200, out, snap->revision};
}

ServiceResponse PlanService::diff(const std::optional<std::string>& a, const std::optional<std::string>& b) const {
  if (!a || !b) return error_response(400, "missing-parameter", "query parameters a and b are required");
  auto snap = snapshot();
  const auto* from = snap->document.find_model(*a);
  const auto* to = snap->document.find_model(*b);
  if (from == nullptr || to == nullptr) {
    return error_response(404, "unknown-model", "no model '" + (from == nullptr ? *a : *b) + "'");
  }
  try {
    auto delta = diff_models(*from, *to, snap->document.landscape, snap->document.effective_taxonomy());
    json cells = json::array();
    for (const auto& line : split_json_lines(export_diff(delta, snap->document.landscape, ExportFormat::kJsonLines))) {
      cells.push_back(line);
    }
    return {200,
            json{{"a", *a}, {"b", *b}, {"changed", delta.changed_count()}, {"cells", cells}, {"revision", snap->revision}},
            snap->revision};
  } catch (const Error& e) {
    return error_response(422, e.code(), e.what());
  }
}

ServiceResponse PlanService::sow(const std::string& model_id) const {
  auto snap = snapshot();
  const auto* model = snap->document.find_model(model_id);
  if (model == nullptr) return error_response(404, "unknown-model", "no model '" + model_id + "'");
  try {
    auto document = generate_sow(*model, snap->document.landscape, snap->document.effective_taxonomy(),
                                 snap->document.effective_templates());
    return {200, json{{"model", model_id}, {"document", render_sow(document)}, {"revision", snap->revision}},
            snap->revision};
  } catch (const Error& e) {
    return error_response(422, e.code(), e.what());
  }
}

ServiceResponse PlanService::save() {
  std::lock_guard writer(write_mutex_);
  auto snap = snapshot();
  const std::string text = serialize_plan(snap->document);
  const std::string temp = plan_path_ + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) return error_response(500, "io", "cannot write " + temp);
  }
  if (std::rename(temp.c_str(), plan_path_.c_str()) != 0) {
    return error_response(500, "io", "cannot replace " + plan_path_);
  }
  return {200, json{{"saved", plan_path_}, {"revision", snap->revision}}, snap->revision};
}

bool is_loopback_origin(const std::string& origin) {
  static const std::regex pattern(R"(^https?://(localhost|127\.0\.0\.1|\[::1\])(:[0-9]+)?$)");
  return std::regex_match(origin, pattern);
}

void install_routes(httplib::Server& server, PlanService& service) {
  auto send = [](httplib::Response& res, const ServiceResponse& r) {
    res.status = r.status;
    if (r.revision) res.set_header("ETag", "\"" + std::to_string(*r.revision) + "\"");
    res.set_content(r.body.dump(), "application/json");
  };
  auto query = [](const httplib::Request& req, const char* key) -> std::optional<std::string> {
    if (!req.has_param(key)) return std::nullopt;
    return req.get_param_value(key);
  };

  server.set_post_routing_handler([](const httplib::Request& req, httplib::Response& res) {
    const auto origin = req.get_header_value("Origin");
    if (!origin.empty() && is_loopback_origin(origin)) {
      res.set_header("Access-Control-Allow-Origin", origin);
      res.set_header("Access-Control-Expose-Headers", "ETag");
      res.set_header("Vary", "Origin");
    }
  });
  server.Options(R"(/api/.*)", [](const httplib::Request& req, httplib::Response& res) {
    const auto origin = req.get_header_value("Origin");
    if (!is_loopback_origin(origin)) {
      res.status = 403;
      return;
    }
    res.status = 204;
    res.set_header("Access-Control-Allow-Methods", "GET, POST, PATCH, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type, If-Match");
  });

  server.Get("/api/plan", [&, send](const httplib::Request&, httplib::Response& res) { send(res, service.get_plan()); });
  server.Get("/api/matrix", [&, send, query](const httplib::Request& req, httplib::Response& res) {
    send(res, service.get_matrix(query(req, "epsilon")));
  });
  server.Get("/api/models/diff", [&, send, query](const httplib::Request& req, httplib::Response& res) {
    send(res, service.diff(query(req, "a"), query(req, "b")));
  });
  server.Get(R"(/api/models/([^/]+)/sow)", [&, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service.sow(req.matches[1]));
  });
  server.Get(R"(/api/models/([^/]+))", [&, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service.get_model(req.matches[1]));
  });
  server.Patch(R"(/api/models/([^/]+)/cells/([^/]+)/([^/]+))",
               [&, send](const httplib::Request& req, httplib::Response& res) {
                 std::optional<std::string> expected;
                 if (req.has_header("If-Match")) expected = req.get_header_value("If-Match");
                 send(res, service.patch_cell(req.matches[1], req.matches[2], req.matches[3], req.body, expected));
               });
  server.Post(R"(/api/models/([^/]+)/whatif)", [&, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service.whatif(req.matches[1], req.body));
  });
  server.Post("/api/plan/save", [&, send](const httplib::Request&, httplib::Response& res) { send(res, service.save()); });
}

int serve(const std::string& plan_path, const std::string& host, int port, std::ostream& log) {
  auto parsed = load_plan_file(plan_path);
  for (const auto& d : parsed.diagnostics) {
    if (d.severity != Severity::kInfo) log << format_diagnostic(d) << "\n";
  }
  if (!parsed.ok()) return 1;

  PlanService service(std::move(*parsed.document), plan_path);
  httplib::Server server;
  install_routes(server, service);
  int bound = port;
  if (port == 0) {
    bound = server.bind_to_any_port(host);
  } else if (!server.bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound < 0) {
    log << "error: cannot bind " << host << ":" << port << "\n";
    return 1;
  }
  log << "serving " << plan_path << " on http://" << host << ":" << bound << "\n";
  log.flush();
  return server.listen_after_bind() ? 0 : 1;
}

}  // namespace socplan
