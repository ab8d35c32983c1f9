#include "socplan/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "socplan/abstraction.hpp"
#include "socplan/export.hpp"
#include "socplan/plan_io.hpp"
#include "socplan/scoring.hpp"
#include "socplan/service.hpp"
#include "socplan/sow.hpp"

namespace socplan {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

class Console {
 public:
  Console(std::ostream& err, bool color) : err_(err), color_(color) {}

  void error(const std::string& message) { err_ << style("31", "error:") << " " << message << "\n"; }
  void note(const std::string& message) { err_ << message << "\n"; }
  void diagnostic(const Diagnostic& d) {
    const char* code = d.severity == Severity::kError ? "31" : d.severity == Severity::kWarning ? "33" : "36";
    err_ << style(code, severity_name(d.severity)) << "[" << d.code << "]";
    if (!d.path.empty()) err_ << " " << d.path;
    err_ << ": " << d.message << "\n";
  }
  std::ostream& stream() { return err_; }

 private:
  std::string style(const char* code, const std::string& text) const {
    return color_ ? "\x1b[" + std::string(code) + "m" + text + "\x1b[0m" : text;
  }
  std::ostream& err_;
  bool color_;
};

std::string utc_stamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

// Exact decimal, e.g. "0.5" -> 1/2. Rejects signs, exponents and junk.
std::optional<Rational> parse_decimal(const std::string& text) {
  long long whole = 0;
  long long frac = 0;
  long long scale = 1;
  bool seen_digit = false;
  bool in_frac = false;
  for (char c : text) {
    if (c == '.' && !in_frac) {
      in_frac = true;
    } else if (c >= '0' && c <= '9') {
      seen_digit = true;
      if (scale > 100000000000LL || whole > 100000000000LL) return std::nullopt;
      if (in_frac) {
        frac = frac * 10 + (c - '0');
        scale *= 10;
      } else {
        whole = whole * 10 + (c - '0');
      }
    } else {
      return std::nullopt;
    }
  }
  if (!seen_digit) return std::nullopt;
  return Rational(whole) + Rational(frac, scale);
}

std::optional<PlanDocument> load(const std::string& path, Console& console, bool show_info = false) {
  auto parsed = load_plan_file(path);
  for (const auto& d : parsed.diagnostics) {
    if (d.severity != Severity::kInfo || show_info) console.diagnostic(d);
  }
  return std::move(parsed.document);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliOptions& options) {
  Console console(err, options.color);

  CLI::App app{"Strategic planning toolkit for distributed security operations centers", "socplan"};
  app.require_subcommand(1);
  bool stamp = false;
  app.add_flag("--stamp", stamp, "Add a generation timestamp to data output");

  std::string plan_path;
  std::string format = "csv";
  std::string epsilon_text = "0.5";
  std::size_t k = 0;
  std::string model_id;
  std::string model_a;
  std::string model_b;
  std::string out_path;
  std::string host = "127.0.0.1";
  int port = 8765;
  bool write_back = false;

  auto* validate = app.add_subcommand("validate", "Check a plan file; diagnostics go to stderr");
  validate->add_option("plan", plan_path, "Plan file")->required();

  auto* score = app.add_subcommand("score", "Relationship matrix and discernibility report");
  score->add_option("plan", plan_path, "Plan file")->required();
  score->add_option("--format", format, "csv | md | json-lines")->check(CLI::IsMember({"csv", "md", "json-lines"}));
  score->add_option("--epsilon", epsilon_text, "Discernibility threshold (max-abs score distance)");

  auto* suggest = app.add_subcommand("suggest-categories", "Advisory clustering of function groups");
  suggest->add_option("plan", plan_path, "Plan file")->required();
  suggest->add_option("--k", k, "Number of categories")->required();
  suggest->add_option("--format", format, "csv | md | json-lines")->check(CLI::IsMember({"csv", "md", "json-lines"}));

  auto* model = app.add_subcommand("model", "Inspect involvement models");
  model->require_subcommand(1);
  auto* show = model->add_subcommand("show", "Print one model's involvement grid");
  show->add_option("plan", plan_path, "Plan file")->required();
  show->add_option("--model", model_id, "Model id")->required();
  show->add_option("--format", format, "csv | md | json-lines")->check(CLI::IsMember({"csv", "md", "json-lines"}));
  auto* diff = model->add_subcommand("diff", "Per-cell changes between two models");
  diff->add_option("plan", plan_path, "Plan file")->required();
  diff->add_option("--a", model_a, "Model to compare from")->required();
  diff->add_option("--b", model_b, "Model to compare to")->required();
  diff->add_option("--format", format, "csv | md | json-lines")->check(CLI::IsMember({"csv", "md", "json-lines"}));

  auto* sow = app.add_subcommand("sow", "Generate a statement of work from a model");
  sow->add_option("plan", plan_path, "Plan file")->required();
  sow->add_option("--model", model_id, "Model id")->required();
  sow->add_option("--out", out_path, "Output file (stdout when omitted)");

  auto* serve_cmd = app.add_subcommand("serve", "Serve the plan over a local HTTP API");
  serve_cmd->add_option("plan", plan_path, "Plan file")->required();
  serve_cmd->add_option("--port", port, "TCP port (0 picks a free one)")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--host", host, "Bind address");

  auto* fmt = app.add_subcommand("fmt", "Print the plan in canonical form");
  fmt->add_option("plan", plan_path, "Plan file")->required();
  fmt->add_flag("--write", write_back, "Rewrite the file in place");

  // CLI11 takes the arguments without argv[0], in reverse order.
  std::vector<std::string> reversed;
  if (!args.empty()) reversed.assign(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    console.error(e.what());
    err << app.help();
    return kExitUsage;
  }

  try {
    if (validate->parsed()) {
      auto parsed = load_plan_file(plan_path);
      for (const auto& d : parsed.diagnostics) console.diagnostic(d);
      if (!parsed.ok()) return kExitDomain;
      const auto& doc = *parsed.document;
      console.note("ok: " + std::to_string(doc.landscape.groups.size()) + " groups, " +
                   std::to_string(doc.landscape.categories.size()) + " categories, " +
                   std::to_string(doc.models.size()) + " models");
      return kExitOk;
    }

    if (fmt->parsed()) {
      auto doc = load(plan_path, console);
      if (!doc) return kExitDomain;
      const std::string text = serialize_plan(*doc);
      if (!write_back) {
        out << text;
        return kExitOk;
      }
      std::ofstream file(plan_path, std::ios::binary | std::ios::trunc);
      file << text;
      if (!file) {
        console.error("cannot write " + plan_path);
        return kExitDomain;
      }
      return kExitOk;
    }

    if (score->parsed()) {
      auto epsilon = parse_decimal(epsilon_text);
      if (!epsilon) {
        console.error("--epsilon must be a nonnegative decimal number");
        return kExitUsage;
      }
      auto doc = load(plan_path, console);
      if (!doc) return kExitDomain;
      const auto report = score_report(doc->landscape, *epsilon, doc->effective_taxonomy());
      const auto export_format = parse_format(format);
      out << export_score_report(report, export_format);
      if (stamp && export_format == ExportFormat::kJsonLines) {
        out << nlohmann::json{{"record", "stamp"}, {"generated", utc_stamp()}}.dump() << "\n";
      }
      err << describe_report(report);
      return kExitOk;
    }

    if (suggest->parsed()) {
      auto doc = load(plan_path, console);
      if (!doc) return kExitDomain;
      const auto clustering = suggest_categories(doc->landscape, k);
      const auto agreement = compare_partition(clustering, doc->landscape);
      out << export_clustering(clustering, agreement, parse_format(format));
      console.note("agreement with stored partition: " + std::to_string(agreement.exact_matches) + " of " +
                   std::to_string(agreement.suggested_parts) + " suggested parts match a stored category exactly; " +
                   "pairwise Rand index " + format_rational(agreement.rand_index));
      return kExitOk;
    }

    if (show->parsed() || diff->parsed()) {
      auto doc = load(plan_path, console);
      if (!doc) return kExitDomain;
      const auto export_format = parse_format(format);
      if (show->parsed()) {
        const auto* m = doc->find_model(model_id);
        if (m == nullptr) {
          console.error("no model '" + model_id + "'");
          return kExitDomain;
        }
        out << export_involvement(*m, doc->landscape, doc->effective_taxonomy(), export_format);
        return kExitOk;
      }
      const auto* a = doc->find_model(model_a);
      const auto* b = doc->find_model(model_b);
      if (a == nullptr || b == nullptr) {
        console.error("no model '" + (a == nullptr ? model_a : model_b) + "'");
        return kExitDomain;
      }
      const auto delta = diff_models(*a, *b, doc->landscape, doc->effective_taxonomy());
      out << export_diff(delta, doc->landscape, export_format);
      console.note(std::to_string(delta.changed_count()) + " of " + std::to_string(delta.cells.size()) +
                   " cells changed");
      return kExitOk;
    }

    if (sow->parsed()) {
      auto doc = load(plan_path, console);
      if (!doc) return kExitDomain;
      const auto* m = doc->find_model(model_id);
      if (m == nullptr) {
        console.error("no model '" + model_id + "'");
        return kExitDomain;
      }
      std::string text =
          render_sow(generate_sow(*m, doc->landscape, doc->effective_taxonomy(), doc->effective_templates()));
      if (stamp) text += "\nGenerated: " + utc_stamp() + "\n";
      if (out_path.empty()) {
        out << text;
        return kExitOk;
      }
      std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
      file << text;
      if (!file) {
        console.error("cannot write " + out_path);
        return kExitDomain;
      }
      console.note("wrote " + out_path);
      return kExitOk;
    }

    if (serve_cmd->parsed()) return serve(plan_path, host, port, console.stream());
  } catch (const Error& e) {
    console.error(std::string(e.what()) + " [" + e.code() + "]");
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace socplan
