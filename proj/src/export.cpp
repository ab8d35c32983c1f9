#include "socplan/export.hpp"

#include <sstream>

#include "json.hpp"

namespace socplan {

namespace {

using nlohmann::json;

std::string signed_tenths(int tenths) {
  std::string out = tenths > 0 ? "+" : tenths < 0 ? "-" : "";
  const int magnitude = tenths < 0 ? -tenths : tenths;
  return out + std::to_string(magnitude / 10) + "." + std::to_string(magnitude % 10);
}

std::string md_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string row_title(const MatrixRow& row) { return row.label + " " + row.display_name; }

std::string cell_text(const MatrixRow& row, const MatrixColumn& column) {
  if (!column.scored) return {};
  const auto& cell = row.cell(*column.scored);
  return cell ? format_one_decimal(cell->score) : std::string();
}

json row_record(const MatrixRow& row, const RelationshipMatrix& matrix) {
  json scores = json::object();
  for (const auto& column : matrix.columns) {
    if (!column.scored) continue;
    const auto& cell = row.cell(*column.scored);
    if (!cell) continue;
    scores[column.task_id] = json{{"display", format_one_decimal(cell->score)},
                                  {"exact", format_rational(cell->score)},
                                  {"raw_sum", format_rational(cell->raw_sum)},
                                  {"members", cell->member_count}};
  }
  return json{{"record", "row"},
              {"category", row.category_id},
              {"label", row.label},
              {"name", row.display_name},
              {"scores", scores}};
}

std::string category_title(const Landscape& landscape, const std::string& id) {
  const auto* c = landscape.find_category(id);
  return c ? c->label + " " + c->display_name() : id;
}

}  // namespace

ExportFormat parse_format(std::string_view name) {
  if (name == "csv") return ExportFormat::kCsv;
  if (name == "md") return ExportFormat::kMarkdown;
  if (name == "json-lines") return ExportFormat::kJsonLines;
  throw Error("unknown-format", "unknown export format '" + std::string(name) + "' (csv, md, json-lines)");
}

std::string_view format_name(ExportFormat format) {
  switch (format) {
    case ExportFormat::kCsv:
      return "csv";
    case ExportFormat::kMarkdown:
      return "md";
    case ExportFormat::kJsonLines:
      return "json-lines";
  }
  return "csv";
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string export_matrix(const RelationshipMatrix& matrix, ExportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ExportFormat::kCsv: {
      out << "label,category";
      for (const auto& column : matrix.columns) out << "," << csv_field(column.task_id);
      out << "\r\n";
      for (const auto& row : matrix.rows) {
        out << csv_field(row.label) << "," << csv_field(row.display_name);
        for (const auto& column : matrix.columns) out << "," << cell_text(row, column);
        out << "\r\n";
      }
      break;
    }
    case ExportFormat::kMarkdown: {
      out << "| Category |";
      for (const auto& column : matrix.columns) out << " " << md_escape(column.task_name) << " |";
      out << "\n|---|";
      for (std::size_t i = 0; i < matrix.columns.size(); ++i) out << "---|";
      out << "\n";
      for (const auto& row : matrix.rows) {
        out << "| " << md_escape(row_title(row)) << " |";
        for (const auto& column : matrix.columns) out << " " << cell_text(row, column) << " |";
        out << "\n";
      }
      break;
    }
    case ExportFormat::kJsonLines:
      for (const auto& row : matrix.rows) out << row_record(row, matrix).dump() << "\n";
      break;
  }
  return out.str();
}

std::string export_score_report(const ScoreReport& report, ExportFormat format) {
  std::string out = export_matrix(report.matrix, format);
  if (format != ExportFormat::kJsonLines) return out;
  for (const auto& pair : report.close_pairs) {
    out += json{{"record", "close_pair"},
                {"first", pair.first},
                {"second", pair.second},
                {"distance", format_rational(pair.distance)},
                {"epsilon", format_rational(report.epsilon)}}
               .dump() +
           "\n";
  }
  for (const auto& d : report.discrepancies) {
    out += json{{"record", "discrepancy"},
                {"category", d.category_id},
                {"task", d.task_id},
                {"computed", format_one_decimal(d.computed)},
                {"computed_exact", format_rational(d.computed)},
                {"published", format_one_decimal(d.published)},
                {"note", d.note}}
               .dump() +
           "\n";
  }
  return out;
}

std::string export_involvement(const InvolvementModel& model, const Landscape& landscape,
                               const SocTaskTaxonomy& taxonomy, ExportFormat format) {
  std::ostringstream out;
  const auto rows = landscape.categories_by_label();
  switch (format) {
    case ExportFormat::kCsv: {
      out << "label,category";
      for (const auto& task : taxonomy.main_tasks) out << "," << csv_field(task.id) << "," << csv_field(task.id + " levels");
      out << "\r\n";
      for (const Category* category : rows) {
        out << csv_field(category->label) << "," << csv_field(category->display_name());
        for (const auto& task : taxonomy.main_tasks) {
          const auto* cell = model.find(category->id, task.id);
          if (cell == nullptr || !cell->applicable) {
            out << ",,";
            continue;
          }
          out << "," << effective_value(*cell)->str() << "," << format_levels(cell->levels);
        }
        out << "\r\n";
      }
      break;
    }
    case ExportFormat::kMarkdown: {
      out << "| Category |";
      for (const auto& task : taxonomy.main_tasks) out << " " << md_escape(task.name) << " |";
      out << "\n| |";
      for (const auto& task : taxonomy.main_tasks) {
        out << " V";
        for (std::size_t s = 0; s < task.subtasks.size(); ++s) out << (s == 0 ? " " : "/") << task.subtasks[s].id;
        out << " |";
      }
      out << "\n|---|";
      for (std::size_t i = 0; i < taxonomy.main_tasks.size(); ++i) out << "---|";
      out << "\n";
      for (const Category* category : rows) {
        out << "| " << md_escape(category->label + " " + category->display_name()) << " |";
        for (const auto& task : taxonomy.main_tasks) {
          const auto* cell = model.find(category->id, task.id);
          if (cell == nullptr || !cell->applicable) {
            out << " N/A |";
            continue;
          }
          const auto value = *effective_value(*cell);
          out << " " << value.str() << " " << value.label();
          if (!cell->levels.empty()) out << " " << format_levels(cell->levels);
          if (cell->override_value && suggested_value(*cell) != cell->override_value) out << " (override)";
          out << " |";
        }
        out << "\n";
      }
      break;
    }
    case ExportFormat::kJsonLines:
      for (const Category* category : rows) {
        for (const auto& task : taxonomy.main_tasks) {
          const auto* cell = model.find(category->id, task.id);
          if (cell == nullptr) continue;
          json record{{"record", "cell"},
                      {"model", model.id},
                      {"category", category->id},
                      {"task", task.id},
                      {"applicable", cell->applicable},
                      {"rationale", cell->rationale}};
          json levels = json::array();
          for (auto level : cell->levels) levels.push_back(std::string(level_token(level)));
          record["levels"] = levels;
          const auto suggested = suggested_value(*cell);
          const auto effective = effective_value(*cell);
          record["suggested"] = suggested ? json(suggested->value()) : json(nullptr);
          record["effective"] = effective ? json(effective->value()) : json(nullptr);
          record["label"] = effective ? json(std::string(effective->label())) : json(nullptr);
          record["override"] = cell->override_value.has_value();
          out << record.dump() << "\n";
        }
      }
      break;
  }
  return out.str();
}

std::string export_diff(const ModelDiff& diff, const Landscape& landscape, ExportFormat format) {
  std::ostringstream out;
  auto value_text = [](const std::optional<InvolvementValue>& v) { return v ? v->str() : std::string("N/A"); };
  auto level_text = [](const std::optional<ContributionLevel>& l) {
    return l ? std::string(level_token(*l)) : std::string("-");
  };
  switch (format) {
    case ExportFormat::kCsv:
      out << "category,task,status,from,to,delta,level_changes\r\n";
      for (const auto& d : diff.cells) {
        std::string changes;
        for (const auto& c : d.level_changes) {
          if (!changes.empty()) changes += " ";
          changes += c.subtask_id + ":" + level_text(c.from) + ">" + level_text(c.to);
        }
        out << csv_field(d.category_id) << "," << csv_field(d.task_id) << "," << (d.unchanged() ? "unchanged" : "changed")
            << "," << value_text(d.from_value) << "," << value_text(d.to_value) << "," << signed_tenths(d.value_delta_tenths)
            << "," << csv_field(changes) << "\r\n";
      }
      break;
    case ExportFormat::kMarkdown:
      out << "| Category | Task | From | To | Delta | Level changes |\n|---|---|---|---|---|---|\n";
      for (const auto& d : diff.cells) {
        if (d.unchanged()) continue;
        std::string changes;
        for (const auto& c : d.level_changes) {
          if (!changes.empty()) changes += ", ";
          changes += c.subtask_id + " " + level_text(c.from) + " -> " + level_text(c.to);
        }
        const std::string delta = signed_tenths(d.value_delta_tenths);
        out << "| " << md_escape(category_title(landscape, d.category_id)) << " | " << d.task_id << " | "
            << value_text(d.from_value) << " | " << value_text(d.to_value) << " | " << delta << " | " << changes
            << " |\n";
      }
      break;
    case ExportFormat::kJsonLines:
      for (const auto& d : diff.cells) {
        json changes = json::array();
        for (const auto& c : d.level_changes) {
          changes.push_back(json{{"subtask", c.subtask_id},
                                 {"from", c.from ? json(std::string(level_token(*c.from))) : json(nullptr)},
                                 {"to", c.to ? json(std::string(level_token(*c.to))) : json(nullptr)}});
        }
        out << json{{"record", "cell_delta"},
                    {"from_model", diff.from_model},
                    {"to_model", diff.to_model},
                    {"category", d.category_id},
                    {"task", d.task_id},
                    {"unchanged", d.unchanged()},
                    {"from_applicable", d.from_applicable},
                    {"to_applicable", d.to_applicable},
                    {"from", d.from_value ? json(d.from_value->value()) : json(nullptr)},
                    {"to", d.to_value ? json(d.to_value->value()) : json(nullptr)},
                    {"delta_tenths", d.value_delta_tenths},
                    {"level_changes", changes}}
                   .dump()
            << "\n";
      }
      break;
  }
  return out.str();
}

std::string export_clustering(const Clustering& clustering, const PartitionAgreement& agreement,
                              ExportFormat format) {
  std::ostringstream out;
  auto join = [](const std::vector<std::string>& items, std::string_view sep) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? std::string(sep) : "") + items[i];
    return s;
  };
  switch (format) {
    case ExportFormat::kCsv:
      out << "part,members,stored_categories\r\n";
      for (std::size_t p = 0; p < clustering.parts.size(); ++p) {
        out << p + 1 << "," << csv_field(join(clustering.parts[p], " ")) << ","
            << csv_field(join(agreement.sources[p], " ")) << "\r\n";
      }
      break;
    case ExportFormat::kMarkdown:
      out << "| Part | Members | Stored categories |\n|---|---|---|\n";
      for (std::size_t p = 0; p < clustering.parts.size(); ++p) {
        out << "| " << p + 1 << " | " << join(clustering.parts[p], ", ") << " | " << join(agreement.sources[p], ", ")
            << " |\n";
      }
      break;
    case ExportFormat::kJsonLines:
      for (std::size_t p = 0; p < clustering.parts.size(); ++p) {
        out << json{{"record", "part"}, {"members", clustering.parts[p]}, {"stored_categories", agreement.sources[p]}}
                   .dump()
            << "\n";
      }
      for (const auto& step : clustering.trace) {
        out << json{{"record", "merge"},
                    {"left", step.left},
                    {"right", step.right},
                    {"average_similarity", format_rational(step.average_similarity)}}
                   .dump()
            << "\n";
      }
      out << json{{"record", "agreement"},
                  {"exact_matches", agreement.exact_matches},
                  {"stored_parts", agreement.stored_parts},
                  {"suggested_parts", agreement.suggested_parts},
                  {"rand_index", format_rational(agreement.rand_index)}}
                 .dump()
          << "\n";
      break;
  }
  return out.str();
}

}  // namespace socplan
