#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "fixture_support.hpp"
#include "socplan/scoring.hpp"

using namespace socplan;
using socplan::testing::case_study;
using socplan::testing::survey_rows;

namespace {

const MatrixRow& row(const RelationshipMatrix& matrix, const std::string& id) {
  for (const auto& r : matrix.rows) {
    if (r.category_id == id) return r;
  }
  throw std::runtime_error("no row " + id);
}

// Rational brute force from the survey strings: label -> (siem, baseline).
std::map<std::string, std::pair<Rational, Rational>> oracle_matrix() {
  std::map<std::string, std::pair<long long, long long>> sums;
  std::map<std::string, long long> counts;
  for (const auto& r : survey_rows()) {
    sums[r.category_label].first += socplan::testing::oracle_points(r, "SIEM");
    sums[r.category_label].second += socplan::testing::oracle_points(r, "Baseline");
    ++counts[r.category_label];
  }
  std::map<std::string, std::pair<Rational, Rational>> out;
  for (const auto& [label, s] : sums) {
    out[label] = {Rational(s.first, counts[label]), Rational(s.second, counts[label])};
  }
  return out;
}

}  // namespace

TEST_CASE("group points") {
  const auto& landscape = case_study().landscape;
  const auto& net = *landscape.find_group("network-infrastructure");
  CHECK(group_points(net, ControlTask::kBaselineSecurity) == 9);
  CHECK(group_points(net, ControlTask::kSiem) == 3);
  CHECK(group_points(*landscape.find_group("it-security"), ControlTask::kSiem) == 3);
  CHECK(group_points(*landscape.find_group("test-environments"), ControlTask::kBaselineSecurity) == 2);
}

TEST_CASE("group points agree with the string oracle on every survey row") {
  const auto& landscape = case_study().landscape;
  for (const auto& r : survey_rows()) {
    const FunctionGroup* g = nullptr;
    for (const auto& candidate : landscape.groups) {
      if (candidate.name == r.name) g = &candidate;
    }
    REQUIRE(g != nullptr);
    CHECK(group_points(*g, ControlTask::kSiem) == socplan::testing::oracle_points(r, "SIEM"));
    CHECK(group_points(*g, ControlTask::kBaselineSecurity) == socplan::testing::oracle_points(r, "Baseline"));
  }
}

TEST_CASE("case study matrix") {
  const auto matrix = score_matrix(case_study().landscape);
  REQUIRE(matrix.columns.size() == 5);
  int scored = 0;
  for (const auto& c : matrix.columns) scored += c.scored.has_value();
  CHECK(scored == 2);
  REQUIRE(matrix.rows.size() == 5);
  CHECK(matrix.rows[0].label == "A");
  CHECK(matrix.rows[4].label == "E");

  CHECK(row(matrix, "infra").siem->score == Rational(3));
  CHECK(row(matrix, "infra").baseline->score == Rational(9));
  CHECK(row(matrix, "sec").siem->score == Rational(14, 3));
  CHECK(row(matrix, "sec").baseline->score == Rational(11, 3));
  CHECK(row(matrix, "serv").siem->score == Rational(6));
  CHECK(row(matrix, "serv").baseline->score == Rational(2));
  CHECK(row(matrix, "bf").siem->score == Rational(9, 2));
  CHECK(row(matrix, "bf").baseline->score == Rational(9, 2));
  CHECK(row(matrix, "ot").siem->score == Rational(1));
  CHECK(row(matrix, "ot").baseline->score == Rational(5));
  CHECK(row(matrix, "sec").siem->raw_sum == Rational(14));
  CHECK(row(matrix, "sec").siem->member_count == 3);

  const auto oracle = oracle_matrix();
  for (const auto& r : matrix.rows) {
    CAPTURE(r.label);
    CHECK(r.siem->score == oracle.at(r.label).first);
    CHECK(r.baseline->score == oracle.at(r.label).second);
  }
}

TEST_CASE("operational technology row disagrees with its published values") {
  const auto report = score_report(case_study().landscape);
  REQUIRE(report.discrepancies.size() == 2);
  for (const auto& d : report.discrepancies) {
    CHECK(d.category_id == "ot");
    CHECK_FALSE(d.note.empty());
  }
  CHECK(report.discrepancies[0].computed == Rational(1));
  CHECK(report.discrepancies[0].published == Rational(0));
  CHECK(report.discrepancies[1].computed == Rational(5));
  CHECK(report.discrepancies[1].published == Rational(6));
}

TEST_CASE("discernibility on the published matrix") {
  const auto published = published_matrix(case_study().landscape);
  CHECK(discernibility(published, kDefaultEpsilon).empty());
  Rational minimum(1000);
  for (std::size_t i = 0; i < published.rows.size(); ++i) {
    for (std::size_t j = i + 1; j < published.rows.size(); ++j) {
      minimum = std::min(minimum, row_distance(published.rows[i], published.rows[j]));
    }
  }
  CHECK(minimum == Rational(4, 5));
  const auto at_one = discernibility(published, Rational(1));
  REQUIRE(at_one.size() == 1);
  CHECK(at_one[0].first == "sec");
  CHECK(at_one[0].second == "bf");
  CHECK(discernibility(published, Rational(4, 5)).empty());
  CHECK(discernibility(published, Rational(0)).empty());
}

TEST_CASE("discernibility on the computed matrix") {
  const auto matrix = score_matrix(case_study().landscape);
  CHECK(discernibility(matrix, kDefaultEpsilon).empty());
}

TEST_CASE("a duplicated row is flagged at distance zero") {
  auto landscape = case_study().landscape;
  Category copy = *landscape.find_category("infra");
  copy.id = "infra2";
  copy.label = "F";
  copy.published.reset();
  for (auto& m : copy.members) {
    FunctionGroup g = *landscape.find_group(m);
    g.id += "-copy";
    m = g.id;
    landscape.groups.push_back(g);
  }
  landscape.categories.push_back(copy);
  const auto pairs = discernibility(score_matrix(landscape), kDefaultEpsilon);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].first == "infra");
  CHECK(pairs[0].second == "infra2");
  CHECK(pairs[0].distance == Rational(0));
}

TEST_CASE("matrix requires a partition") {
  auto landscape = case_study().landscape;
  landscape.categories.clear();
  try {
    score_matrix(landscape);
    FAIL("expected no-partition");
  } catch (const Error& e) {
    CHECK(e.code() == "no-partition");
  }
}

TEST_CASE("a category of identical groups scores like one group") {
  auto landscape = case_study().landscape;
  const auto single = score_matrix(landscape);
  auto& ot = landscape.categories[0];
  const auto telephony = *landscape.find_group("telephony");
  ot.members = {"telephony"};
  for (int i = 0; i < 4; ++i) {
    auto g = telephony;
    g.id = "telephony-" + std::to_string(i);
    landscape.groups.push_back(g);
    ot.members.push_back(g.id);
  }
  landscape.categories[4].members.push_back("production-machines");
  const auto matrix = score_matrix(landscape);
  CHECK(row(matrix, "ot").siem->score == Rational(group_points(telephony, ControlTask::kSiem)));
  CHECK(row(matrix, "ot").baseline->score == Rational(group_points(telephony, ControlTask::kBaselineSecurity)));
}

TEST_CASE("scores are invariant under group and member permutation") {
  std::mt19937 rng(11);
  int checked = 0;
  while (checked < 1000) {
    auto doc = socplan::testing::random_plan(rng);
    if (doc.landscape.categories.empty()) continue;
    const auto before = score_matrix(doc.landscape);
    auto shuffled = doc.landscape;
    std::shuffle(shuffled.groups.begin(), shuffled.groups.end(), rng);
    for (auto& c : shuffled.categories) std::shuffle(c.members.begin(), c.members.end(), rng);
    std::shuffle(shuffled.categories.begin(), shuffled.categories.end(), rng);
    const auto after = score_matrix(shuffled);
    REQUIRE(before.rows.size() == after.rows.size());
    for (std::size_t i = 0; i < before.rows.size(); ++i) {
      CHECK(before.rows[i].category_id == after.rows[i].category_id);
      CHECK(before.rows[i].siem->score == after.rows[i].siem->score);
      CHECK(before.rows[i].baseline->score == after.rows[i].baseline->score);
    }
    ++checked;
  }
}

TEST_CASE("one-decimal rounding") {
  CHECK(format_one_decimal(Rational(14, 3)) == "4.7");
  CHECK(format_one_decimal(Rational(11, 3)) == "3.7");
  CHECK(format_one_decimal(Rational(3)) == "3.0");
  CHECK(format_one_decimal(Rational(9, 2)) == "4.5");
  CHECK(format_one_decimal(Rational(1, 20)) == "0.1");
  CHECK(format_one_decimal(Rational(-1, 20)) == "-0.1");
  CHECK(format_one_decimal(Rational(0)) == "0.0");
  CHECK(round_tenths(Rational(1, 3)) == 3);
  CHECK(rational_from_tenths(4.7) == Rational(47, 10));
  CHECK(rational_from_tenths(6.0) == Rational(6));
}
