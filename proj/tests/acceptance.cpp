// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "fixture_support.hpp"
#include "socplan/abstraction.hpp"
#include "socplan/scoring.hpp"
#include "socplan/sow.hpp"

using namespace socplan;
namespace fx = socplan::testing;

namespace {

struct Check {
  std::ostringstream why;
  bool ok = true;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      if (!ok) why << "; ";
      why << what;
      ok = false;
    }
  }
};

const MatrixRow* find_row(const RelationshipMatrix& m, const std::string& id) {
  for (const auto& r : m.rows) {
    if (r.category_id == id) return &r;
  }
  return nullptr;
}

const FunctionGroup* group_named(const Landscape& l, const std::string& name) {
  for (const auto& g : l.groups) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

void matrix_reproduction(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  const auto parsed = parse_plan(bundled_case_study());
  c.expect(parsed.ok(), "fixture does not parse");
  if (!parsed.ok()) return;
  const auto matrix = score_matrix(parsed.document->landscape);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  const std::map<std::string, std::pair<Rational, Rational>> expected{
      {"infra", {3, 9}}, {"sec", {Rational(14, 3), Rational(11, 3)}}, {"serv", {6, 2}},
      {"bf", {Rational(9, 2), Rational(9, 2)}}};
  for (const auto& [id, values] : expected) {
    const auto* row = find_row(matrix, id);
    c.expect(row && row->siem->score == values.first && row->baseline->score == values.second, id + " mismatch");
  }
  const auto* sec = find_row(matrix, "sec");
  c.expect(sec && format_one_decimal(sec->siem->score) == "4.7" && format_one_decimal(sec->baseline->score) == "3.7",
           "sec display");
  c.expect(elapsed < std::chrono::seconds(1), "slower than 1 s");
}

void ot_discrepancy(Check& c) {
  const auto& doc = fx::case_study();
  const auto report = score_report(doc.landscape);
  const auto* ot = find_row(report.matrix, "ot");
  c.expect(ot && ot->siem->score == Rational(1) && ot->baseline->score == Rational(5), "OT is not (1, 5)");
  std::set<std::pair<std::string, std::string>> flagged;
  for (const auto& d : report.discrepancies) {
    flagged.insert({d.category_id, d.task_id});
    c.expect(!d.note.empty(), "discrepancy without annotation");
  }
  c.expect(flagged == std::set<std::pair<std::string, std::string>>{{"ot", "SIEM"}, {"ot", "BaselineSecurity"}},
           "discrepancy set is not exactly OT SIEM/Baseline");
  c.expect(describe_report(report).find("ot") != std::string::npos, "report text omits OT");

  // Brute force from the survey strings, every row.
  std::map<std::string, std::pair<long long, long long>> sums;
  std::map<std::string, long long> counts;
  for (const auto& row : fx::survey_rows()) {
    const auto* g = group_named(doc.landscape, row.name);
    c.expect(g != nullptr, "missing group " + row.name);
    if (!g) continue;
    const int s = fx::oracle_points(row, "SIEM");
    const int b = fx::oracle_points(row, "Baseline");
    c.expect(group_points(*g, ControlTask::kSiem) == s && group_points(*g, ControlTask::kBaselineSecurity) == b,
             "points differ for " + row.name);
    sums[row.category_label].first += s;
    sums[row.category_label].second += b;
    ++counts[row.category_label];
  }
  for (const auto& row : report.matrix.rows) {
    c.expect(row.siem->score == Rational(sums[row.label].first, counts[row.label]) &&
                 row.baseline->score == Rational(sums[row.label].second, counts[row.label]),
             "oracle row mismatch " + row.label);
  }
}

void aggregator_calibration(Check& c) {
  const auto& doc = fx::case_study();
  const std::vector<std::string> categories{"ot", "infra", "sec", "serv", "bf"};
  const std::vector<std::string> tasks{"Intelligence", "SIEM", "BaselineSecurity", "Forensics", "Pentests"};

  int applicable = 0;
  const auto& table = fx::printed_status_quo();
  const auto& model = *doc.find_model("status_quo");
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t t = 0; t < 5; ++t) {
      if (table[r][t] == "N/A") continue;
      ++applicable;
      const auto parts = fx::split(table[r][t], ' ');
      const auto* cell = model.find(categories[r], tasks[t]);
      c.expect(cell && format_levels(cell->levels) == parts[1], "levels differ at " + categories[r] + "/" + tasks[t]);
      if (!cell) continue;
      c.expect(suggest_value(cell->levels).tenths() == parts[0][2] - '0',
               "suggestion differs at " + categories[r] + "/" + tasks[t]);
    }
  }
  c.expect(applicable == 24, "expected 24 applicable cells, saw " + std::to_string(applicable));

  std::set<std::string> overrides;
  for (const auto& m : doc.models) {
    for (const auto& d : validate_model(m, doc.landscape, doc.effective_taxonomy())) {
      if (d.code == "override") overrides.insert(m.id + ":" + d.path);
      c.expect(d.severity == Severity::kInfo, "unexpected " + d.code + " in " + m.id);
    }
  }
  std::set<std::string> expected;
  auto path_of = [&](const std::string& model_id, const std::string& category, const std::string& task) {
    const auto& cells = doc.find_model(model_id)->cells;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].category_id == category && cells[i].task_id == task) {
        return model_id + ":model.cells[" + std::to_string(i) + "].override";
      }
    }
    return std::string("?");
  };
  for (const char* cat : {"infra", "sec", "serv"}) expected.insert(path_of("max_external", cat, "BaselineSecurity"));
  for (const char* cat : {"infra", "serv"}) {
    expected.insert(path_of("target", cat, "SIEM"));
    expected.insert(path_of("target", cat, "Forensics"));
  }
  c.expect(overrides == expected, "override set has " + std::to_string(overrides.size()) + " cells, not exactly the expected 7");
  for (const auto& [id, printed] : std::vector<std::pair<std::string, const fx::PrintedTable*>>{
           {"max_external", &fx::printed_max_external()}, {"target", &fx::printed_target()}}) {
    for (std::size_t r = 0; r < 5; ++r) {
      for (std::size_t t = 0; t < 5; ++t) {
        if ((*printed)[r][t] == "N/A") continue;
        const auto* cell = doc.find_model(id)->find(categories[r], tasks[t]);
        c.expect(cell && effective_value(*cell)->tenths() == (*printed)[r][t][2] - '0',
                 "effective value differs at " + id + " " + categories[r] + "/" + tasks[t]);
      }
    }
  }
}

void similarity_oracle(Check& c) {
  const auto& landscape = fx::case_study().landscape;
  const auto& rows = fx::survey_rows();
  int pairs = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      ++pairs;
      const auto* a = group_named(landscape, rows[i].name);
      const auto* b = group_named(landscape, rows[j].name);
      c.expect(a && b && similarity(*a, *b) == fx::oracle_similarity(rows[i], rows[j]),
               rows[i].name + " / " + rows[j].name);
    }
  }
  c.expect(pairs == 66, "pair count");
}

void discernibility_check(Check& c) {
  const auto& landscape = fx::case_study().landscape;
  const auto printed = published_matrix(landscape);
  c.expect(discernibility(printed, kDefaultEpsilon).empty(), "printed matrix has a close pair at 0.5");
  for (const auto& row : printed.rows) {
    auto copy = printed;
    auto dup = row;
    dup.category_id = row.category_id + "-copy";
    copy.rows.push_back(dup);
    const auto pairs = discernibility(copy, kDefaultEpsilon);
    c.expect(pairs.size() == 1 && pairs[0].first == row.category_id && pairs[0].second == dup.category_id,
             "duplicate of " + row.category_id + " not flagged alone");
  }
}

void sow_golden(Check& c) {
  const auto& doc = fx::case_study();
  const auto sow =
      generate_sow(*doc.find_model("target"), doc.landscape, doc.effective_taxonomy(), doc.effective_templates());
  const auto* section = sow.find_section("SIEM", {"infra", "serv"});
  c.expect(section != nullptr, "no merged Infra+Serv SIEM section");
  if (section) {
    std::string duties;
    for (const auto* clause : section->duties()) duties += clause->text + "\n";
    const std::vector<std::pair<std::string, std::vector<std::string>>> areas{
        {"monitoring", {"monitors the systems"}},
        {"access provisioning", {"grants the data and physical access"}},
        {"data collection", {"collects all accessible security-relevant data"}},
        {"incident reporting",
         {"SEM system", "incident report", "Type of incident", "Affected systems", "Criticality/Risk assessment",
          "Allowable reaction time", "Available information about the attacker"}},
        {"mitigation support", {"supports the client in mitigating"}},
    };
    for (const auto& [area, needles] : areas) {
      for (const auto& needle : needles) c.expect(duties.find(needle) != std::string::npos, area + ": " + needle);
    }
  }
  const auto rendered = render_sow(sow);
  c.expect(rendered == render_sow(sow), "render is not stable");
  try {
    const auto golden = fx::read_file(std::string(SOCPLAN_GOLDEN_DIR) + "/sow_target.md");
    c.expect(rendered == golden, "differs from golden file");
  } catch (const std::exception& e) {
    c.expect(false, e.what());
  }
}

void round_trip(Check& c) {
  const auto& doc = fx::case_study();
  const auto text = serialize_plan(doc);
  auto again = parse_plan(text);
  c.expect(again.ok() && *again.document == doc && serialize_plan(*again.document) == text, "fixture");
  std::mt19937 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const auto plan = fx::random_plan(rng);
    const auto serialized = serialize_plan(plan);
    const auto parsed = parse_plan(serialized);
    c.expect(parsed.ok() && *parsed.document == plan, "random plan " + std::to_string(i));
  }
}

void property_suite(Check& c) {
  std::mt19937 rng(99);
  using L = ContributionLevel;
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<L> levels(1 + rng() % 6);
    for (auto& l : levels) l = static_cast<L>(rng() % 4);
    const int base = suggest_value(levels).tenths();
    auto shuffled = levels;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    failures += suggest_value(shuffled).tenths() != base;
    const auto idx = rng() % levels.size();
    if (levels[idx] != L::kE) {
      auto raised = levels;
      raised[idx] = static_cast<L>(static_cast<int>(raised[idx]) + 1);
      failures += suggest_value(raised).tenths() < base;
    }
    const auto k = static_cast<L>(rng() % 4);
    failures += suggest_value(std::vector<L>(levels.size(), k)) != level_value(k);
  }
  c.expect(failures == 0, std::to_string(failures) + " suggestion property failures");

  int score_cases = 0, score_failures = 0;
  while (score_cases < 1000) {
    const auto plan = fx::random_plan(rng);
    if (plan.landscape.categories.empty()) continue;
    auto shuffled = plan.landscape;
    std::shuffle(shuffled.groups.begin(), shuffled.groups.end(), rng);
    for (auto& cat : shuffled.categories) std::shuffle(cat.members.begin(), cat.members.end(), rng);
    const auto a = score_matrix(plan.landscape);
    const auto b = score_matrix(shuffled);
    for (std::size_t r = 0; r < a.rows.size(); ++r) {
      score_failures += a.rows[r].siem->score != b.rows[r].siem->score ||
                        a.rows[r].baseline->score != b.rows[r].baseline->score;
    }
    ++score_cases;
  }
  c.expect(score_failures == 0, std::to_string(score_failures) + " score permutation failures");

  int merge_cases = 0, merge_failures = 0;
  while (merge_cases < 1000) {
    const auto plan = fx::random_plan(rng);
    if (plan.models.empty()) continue;
    for (const auto& task : plan.effective_taxonomy().main_tasks) {
      const auto merged = merge_cells(plan.models.front(), task.id, plan.landscape);
      std::multiset<std::string> seen(merged.not_applicable.begin(), merged.not_applicable.end());
      for (const auto& set : merged.sets) seen.insert(set.begin(), set.end());
      std::multiset<std::string> all;
      for (const auto& cat : plan.landscape.categories) all.insert(cat.id);
      merge_failures += seen != all;
      ++merge_cases;
    }
  }
  c.expect(merge_failures == 0, std::to_string(merge_failures) + " merge partition failures");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"relationship matrix reproduction", matrix_reproduction},
      {"OT discrepancy and brute-force scoring oracle", ot_discrepancy},
      {"involvement aggregator calibration", aggregator_calibration},
      {"similarity oracle over 66 pairs", similarity_oracle},
      {"discernibility of printed scores", discernibility_check},
      {"statement of work structure and golden file", sow_golden},
      {"plan round trip", round_trip},
      {"property suite", property_suite},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check check;
    try {
      run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (check.ok ? "PASS " : "FAIL ") << name;
    if (!check.ok) std::cout << " (" << check.why.str() << ")";
    std::cout << "\n";
    failed += !check.ok;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
