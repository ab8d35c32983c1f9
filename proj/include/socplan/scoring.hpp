#pragma once

#include <optional>
#include <string>
#include <vector>

#include "socplan/abstraction.hpp"
#include "socplan/landscape.hpp"
#include "socplan/taxonomy.hpp"

namespace socplan {

struct ScoreCell {
  Rational raw_sum{0};
  long long member_count = 1;
  Rational score{0};  // raw_sum / member_count
};

struct MatrixColumn {
  std::string task_id;
  std::string task_name;
  std::optional<ControlTask> scored;  // nullopt for unscored columns
};

struct MatrixRow {
  std::string category_id;
  std::string label;
  std::string display_name;
  std::optional<ScoreCell> siem;
  std::optional<ScoreCell> baseline;

  const std::optional<ScoreCell>& cell(ControlTask task) const {
    return task == ControlTask::kSiem ? siem : baseline;
  }
};

// Categories x main tasks. Exactly the SIEM and baseline-security columns
// carry scores; the remaining columns are present and unscored.
struct RelationshipMatrix {
  std::vector<MatrixColumn> columns;
  std::vector<MatrixRow> rows;  // category label order
};

// 2 points for a primary control of `task`, 1 per matching secondary, all
// times the relevance factor.
int group_points(const FunctionGroup& group, ControlTask task);

// Throws Error("no-partition") when the landscape has no categories.
RelationshipMatrix score_matrix(const Landscape& landscape,
                                const SocTaskTaxonomy& taxonomy = default_taxonomy());

// Matrix built from the categories' published reference scores. Throws
// Error("no-published-scores") if any category lacks them.
RelationshipMatrix published_matrix(const Landscape& landscape,
                                    const SocTaskTaxonomy& taxonomy = default_taxonomy());

struct ClosePair {
  std::string first;
  std::string second;
  Rational distance;
};

// Max-absolute difference across the scored columns.
Rational row_distance(const MatrixRow& a, const MatrixRow& b);

// All category pairs whose row distance is strictly below `epsilon`.
std::vector<ClosePair> discernibility(const RelationshipMatrix& matrix, const Rational& epsilon);

inline const Rational kDefaultEpsilon{1, 2};

// A computed score whose one-decimal display differs from the published one.
struct ScoreDiscrepancy {
  std::string category_id;
  std::string task_id;
  Rational computed;
  Rational published;
  std::string note;
};

std::vector<ScoreDiscrepancy> published_discrepancies(const RelationshipMatrix& matrix,
                                                      const Landscape& landscape);

struct ScoreReport {
  RelationshipMatrix matrix;
  Rational epsilon;
  std::vector<ClosePair> close_pairs;
  std::vector<ScoreDiscrepancy> discrepancies;
};

ScoreReport score_report(const Landscape& landscape, const Rational& epsilon = kDefaultEpsilon,
                         const SocTaskTaxonomy& taxonomy = default_taxonomy());

// Integer tenths, half away from zero.
long long round_tenths(const Rational& value);
// One-decimal rendering, e.g. 14/3 -> "4.7", 3 -> "3.0".
std::string format_one_decimal(const Rational& value);
std::string format_rational(const Rational& value);
// Exact conversion of a decimal with at most one fractional digit.
Rational rational_from_tenths(double value);

// Human-readable summary of close pairs and discrepancies.
std::string describe_report(const ScoreReport& report);

}  // namespace socplan
