#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixture_support.hpp"
#include "socplan/involvement.hpp"

using namespace socplan;
using socplan::testing::case_study;

namespace {

using L = ContributionLevel;

std::vector<std::string> tokens(const std::vector<L>& levels) {
  std::vector<std::string> out;
  for (auto l : levels) out.emplace_back(level_token(l));
  return out;
}

int suggest(std::vector<L> levels) { return suggest_value(levels).tenths(); }

const std::vector<std::string> kCategories{"ot", "infra", "sec", "serv", "bf"};
const std::vector<std::string> kTasks{"Intelligence", "SIEM", "BaselineSecurity", "Forensics", "Pentests"};

struct PrintedCell {
  bool applicable = false;
  int tenths = 0;
  std::string levels;
};

PrintedCell printed(const socplan::testing::PrintedTable& table, std::size_t r, std::size_t c) {
  const auto& text = table[r][c];
  if (text == "N/A") return {};
  const auto parts = socplan::testing::split(text, ' ');
  return {true, parts[0][2] - '0', parts[1]};
}

}  // namespace

TEST_CASE("level values") {
  CHECK(level_value(L::kI).tenths() == 1);
  CHECK(level_value(L::kIE).tenths() == 3);
  CHECK(level_value(L::kEI).tenths() == 7);
  CHECK(level_value(L::kE).tenths() == 9);
  CHECK(InvolvementValue::from_double(0.5)->str() == "0.5");
  CHECK_FALSE(InvolvementValue::from_double(0.4).has_value());
  CHECK_FALSE(InvolvementValue::from_tenths(2).has_value());
  CHECK(InvolvementValue::from_tenths(9)->step() == 4);
}

TEST_CASE("suggested values") {
  CHECK(suggest({L::kEI, L::kEI, L::kIE}) == 5);
  CHECK(suggest({L::kE, L::kE, L::kEI}) == 9);
  CHECK(suggest({L::kIE, L::kE}) == 7);
  CHECK(suggest({L::kI, L::kI}) == 1);
  CHECK(suggest({L::kIE, L::kI}) == 3);  // mean 0.2 is a midpoint; goes up
  CHECK(suggest({L::kE}) == 9);
  CHECK_THROWS_AS(suggest({}), Error);
}

TEST_CASE("suggested values agree with the floating-point oracle on every level combination") {
  for (int n = 1; n <= 4; ++n) {
    int combos = 1;
    for (int i = 0; i < n; ++i) combos *= 4;
    for (int code = 0; code < combos; ++code) {
      std::vector<L> levels;
      int rest = code;
      for (int i = 0; i < n; ++i, rest /= 4) levels.push_back(static_cast<L>(rest % 4));
      CHECK(suggest(levels) == socplan::testing::oracle_suggest_tenths(tokens(levels)));
    }
  }
}

TEST_CASE("fixture models reproduce the printed tables") {
  const auto& doc = case_study();
  const std::vector<std::pair<std::string, const socplan::testing::PrintedTable*>> tables{
      {"status_quo", &socplan::testing::printed_status_quo()},
      {"max_external", &socplan::testing::printed_max_external()},
      {"target", &socplan::testing::printed_target()},
  };
  for (const auto& [id, table] : tables) {
    const auto* model = doc.find_model(id);
    REQUIRE(model != nullptr);
    for (std::size_t r = 0; r < kCategories.size(); ++r) {
      for (std::size_t c = 0; c < kTasks.size(); ++c) {
        CAPTURE(id);
        CAPTURE(kCategories[r]);
        CAPTURE(kTasks[c]);
        const auto expected = printed(*table, r, c);
        const auto* cell = model->find(kCategories[r], kTasks[c]);
        REQUIRE(cell != nullptr);
        CHECK(cell->applicable == expected.applicable);
        if (!expected.applicable) continue;
        CHECK(format_levels(cell->levels) == expected.levels);
        CHECK(effective_value(*cell)->tenths() == expected.tenths);
      }
    }
  }
}

TEST_CASE("status quo needs no overrides; the other models need exactly the expected ones") {
  const auto& doc = case_study();
  auto overridden = [&](const std::string& id) {
    std::vector<std::string> out;
    for (const auto& cell : doc.find_model(id)->cells) {
      if (cell.override_value) out.push_back(cell.category_id + "/" + cell.task_id);
    }
    return out;
  };
  CHECK(overridden("status_quo").empty());
  CHECK(overridden("max_external") ==
        std::vector<std::string>{"infra/BaselineSecurity", "sec/BaselineSecurity", "serv/BaselineSecurity"});
  CHECK(overridden("target") ==
        std::vector<std::string>{"infra/SIEM", "infra/Forensics", "serv/SIEM", "serv/Forensics"});

  for (const auto& model : doc.models) {
    const auto diagnostics = validate_model(model, doc.landscape, doc.effective_taxonomy());
    CHECK_FALSE(has_errors(diagnostics));
    CHECK(count_code(diagnostics, "override-deviation") == 0);
    CHECK(count_code(diagnostics, "override") == static_cast<std::size_t>(overridden(model.id).size()));
  }
}

TEST_CASE("suggestion properties over random level vectors") {
  std::mt19937 rng(3);
  for (int round = 0; round < 1000; ++round) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<L> levels;
    for (int i = 0; i < n; ++i) levels.push_back(static_cast<L>(rng() % 4));
    const int base = suggest(levels);

    auto shuffled = levels;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(suggest(shuffled) == base);

    const auto idx = rng() % levels.size();
    if (levels[idx] != L::kE) {
      auto raised = levels;
      raised[idx] = static_cast<L>(static_cast<int>(raised[idx]) + 1);
      CHECK(suggest(raised) >= base);
    }

    const auto constant = static_cast<L>(rng() % 4);
    CHECK(suggest(std::vector<L>(static_cast<std::size_t>(n), constant)) == level_value(constant).tenths());
  }
}

TEST_CASE("effective value") {
  CellAssignment cell{"infra", "SIEM", true, {L::kEI, L::kEI, L::kIE}, std::nullopt, "", ""};
  CHECK(effective_value(cell)->tenths() == 5);
  cell.override_value = InvolvementValue::from_tenths(7);
  CHECK(effective_value(cell)->tenths() == 7);
  CHECK(suggested_value(cell)->tenths() == 5);
  cell.levels.clear();
  CHECK(effective_value(cell)->tenths() == 7);
  CHECK_FALSE(suggested_value(cell).has_value());
  cell.override_value.reset();
  CHECK_THROWS_AS(effective_value(cell), Error);
  CellAssignment na{"ot", "Pentests", false, {}, std::nullopt, "", "no such systems"};
  CHECK_FALSE(effective_value(na).has_value());
}

TEST_CASE("model validation") {
  const auto& doc = case_study();
  const auto& taxonomy = doc.effective_taxonomy();
  auto model = *doc.find_model("target");

  SUBCASE("missing cell") {
    model.cells.pop_back();
    CHECK(count_code(validate_model(model, doc.landscape, taxonomy), "incomplete-grid") == 1);
  }
  SUBCASE("wrong level count") {
    model.find("infra", "SIEM")->levels.pop_back();
    CHECK(count_code(validate_model(model, doc.landscape, taxonomy), "level-count-mismatch") == 1);
  }
  SUBCASE("N/A without rationale") {
    model.find("ot", "Pentests")->rationale.clear();
    CHECK(count_code(validate_model(model, doc.landscape, taxonomy), "missing-rationale") == 1);
  }
  SUBCASE("levels on a not-applicable cell") {
    model.find("ot", "Pentests")->levels = {L::kI, L::kI};
    CHECK(count_code(validate_model(model, doc.landscape, taxonomy), "levels-on-na") == 1);
  }
  SUBCASE("unknown references") {
    model.cells.push_back({"ghost", "SIEM", true, {L::kI, L::kI, L::kI}, std::nullopt, "", ""});
    model.cells.push_back({"infra", "Ghost", true, {L::kI}, std::nullopt, "", ""});
    const auto d = validate_model(model, doc.landscape, taxonomy);
    CHECK(count_code(d, "unknown-category") == 1);
    CHECK(count_code(d, "unknown-task") == 1);
  }
  SUBCASE("duplicate cell") {
    model.cells.push_back(model.cells.front());
    CHECK(count_code(validate_model(model, doc.landscape, taxonomy), "duplicate-cell") == 1);
  }
  SUBCASE("far override warns") {
    auto* cell = model.find("sec", "SIEM");  // suggests 0.5
    cell->override_value = InvolvementValue::from_tenths(9);
    const auto d = validate_model(model, doc.landscape, taxonomy);
    CHECK(count_code(d, "override-deviation") == 1);
    CHECK_FALSE(has_errors(d));
  }
}

TEST_CASE("status quo to target diff") {
  const auto& doc = case_study();
  const auto diff = diff_models(*doc.find_model("status_quo"), *doc.find_model("target"), doc.landscape,
                                doc.effective_taxonomy());
  CHECK(diff.cells.size() == 25);
  const auto* infra_siem = diff.find("infra", "SIEM");
  REQUIRE(infra_siem != nullptr);
  CHECK(infra_siem->from_value->tenths() == 3);
  CHECK(infra_siem->to_value->tenths() == 7);
  CHECK(infra_siem->value_delta_tenths == 4);
  REQUIRE(infra_siem->level_changes.size() == 3);
  CHECK(infra_siem->level_changes[0].subtask_id == "Mo");
  CHECK(infra_siem->level_changes[2].subtask_id == "S");
  CHECK(infra_siem->level_changes[2].from == L::kI);
  CHECK(infra_siem->level_changes[2].to == L::kIE);

  const auto* ot_pentests = diff.find("ot", "Pentests");
  REQUIRE(ot_pentests != nullptr);
  CHECK(ot_pentests->unchanged());
  CHECK_FALSE(ot_pentests->from_value.has_value());
  CHECK(diff.find("ot", "SIEM")->unchanged());
}

TEST_CASE("diff is antisymmetric and self-diff is empty") {
  const auto& doc = case_study();
  const auto& taxonomy = doc.effective_taxonomy();
  for (const auto& a : doc.models) {
    CHECK(diff_models(a, a, doc.landscape, taxonomy).changed_count() == 0);
    for (const auto& b : doc.models) {
      const auto forward = diff_models(a, b, doc.landscape, taxonomy);
      const auto backward = diff_models(b, a, doc.landscape, taxonomy);
      REQUIRE(forward.cells.size() == backward.cells.size());
      CHECK(forward.changed_count() == backward.changed_count());
      for (std::size_t i = 0; i < forward.cells.size(); ++i) {
        CHECK(forward.cells[i].value_delta_tenths == -backward.cells[i].value_delta_tenths);
      }
    }
  }
}

TEST_CASE("diff rejects models over different grids") {
  const auto& doc = case_study();
  auto smaller = *doc.find_model("target");
  smaller.cells.pop_back();
  try {
    diff_models(*doc.find_model("status_quo"), smaller, doc.landscape, doc.effective_taxonomy());
    FAIL("expected grid-mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == "grid-mismatch");
  }
}
