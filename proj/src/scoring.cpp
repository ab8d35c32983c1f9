#include "socplan/scoring.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace socplan {

namespace {

std::optional<ControlTask> scored_task(std::string_view task_id) {
  if (task_id == kSiemTaskId) return ControlTask::kSiem;
  if (task_id == kBaselineTaskId) return ControlTask::kBaselineSecurity;
  return std::nullopt;
}

std::vector<MatrixColumn> make_columns(const SocTaskTaxonomy& taxonomy) {
  std::vector<MatrixColumn> columns;
  for (const auto& task : taxonomy.main_tasks) columns.push_back({task.id, task.name, scored_task(task.id)});
  return columns;
}

MatrixRow make_row(const Category& category) {
  MatrixRow row;
  row.category_id = category.id;
  row.label = category.label;
  row.display_name = category.display_name();
  return row;
}

Rational abs_value(const Rational& r) { return r < 0 ? -r : r; }

}  // namespace

int group_points(const FunctionGroup& group, ControlTask task) {
  int points = control_task(group.assignment.primary) == task ? 2 : 0;
  for (auto kind : group.assignment.secondary) {
    if (control_task(kind) == task) points += 1;
  }
  return points * relevance_factor(group.relevance);
}

RelationshipMatrix score_matrix(const Landscape& landscape, const SocTaskTaxonomy& taxonomy) {
  if (landscape.categories.empty()) {
    throw Error("no-partition", "the landscape defines no categories to score");
  }
  RelationshipMatrix matrix;
  matrix.columns = make_columns(taxonomy);
  for (const Category* category : landscape.categories_by_label()) {
    MatrixRow row = make_row(*category);
    const auto members = expand(*category, landscape);
    for (ControlTask task : {ControlTask::kSiem, ControlTask::kBaselineSecurity}) {
      long long sum = 0;
      for (const auto& group : members) sum += group_points(group, task);
      ScoreCell cell;
      cell.raw_sum = Rational(sum);
      cell.member_count = static_cast<long long>(members.size());
      cell.score = members.empty() ? Rational(0) : Rational(sum, cell.member_count);
      (task == ControlTask::kSiem ? row.siem : row.baseline) = cell;
    }
    matrix.rows.push_back(std::move(row));
  }
  return matrix;
}

RelationshipMatrix published_matrix(const Landscape& landscape, const SocTaskTaxonomy& taxonomy) {
  RelationshipMatrix matrix;
  matrix.columns = make_columns(taxonomy);
  for (const Category* category : landscape.categories_by_label()) {
    if (!category->published) {
      throw Error("no-published-scores", "category '" + category->id + "' carries no published scores");
    }
    MatrixRow row = make_row(*category);
    const auto count = static_cast<long long>(std::max<std::size_t>(category->members.size(), 1));
    auto cell = [&](double value) {
      ScoreCell c;
      c.score = rational_from_tenths(value);
      c.member_count = count;
      c.raw_sum = c.score * count;
      return c;
    };
    row.siem = cell(category->published->siem);
    row.baseline = cell(category->published->baseline);
    matrix.rows.push_back(std::move(row));
  }
  return matrix;
}

Rational row_distance(const MatrixRow& a, const MatrixRow& b) {
  Rational best(0);
  for (ControlTask task : {ControlTask::kSiem, ControlTask::kBaselineSecurity}) {
    const auto& ca = a.cell(task);
    const auto& cb = b.cell(task);
    if (!ca || !cb) continue;
    best = std::max(best, abs_value(ca->score - cb->score));
  }
  return best;
}

std::vector<ClosePair> discernibility(const RelationshipMatrix& matrix, const Rational& epsilon) {
  std::vector<ClosePair> out;
  for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
    for (std::size_t j = i + 1; j < matrix.rows.size(); ++j) {
      Rational d = row_distance(matrix.rows[i], matrix.rows[j]);
      if (d < epsilon) out.push_back({matrix.rows[i].category_id, matrix.rows[j].category_id, d});
    }
  }
  return out;
}

std::vector<ScoreDiscrepancy> published_discrepancies(const RelationshipMatrix& matrix, const Landscape& landscape) {
  std::vector<ScoreDiscrepancy> out;
  for (const auto& row : matrix.rows) {
    const auto* category = landscape.find_category(row.category_id);
    if (category == nullptr || !category->published) continue;
    const auto& pub = *category->published;
    for (ControlTask task : {ControlTask::kSiem, ControlTask::kBaselineSecurity}) {
      const auto& cell = row.cell(task);
      if (!cell) continue;
      Rational published = rational_from_tenths(task == ControlTask::kSiem ? pub.siem : pub.baseline);
      if (round_tenths(cell->score) != round_tenths(published)) {
        out.push_back({row.category_id, std::string(control_task_id(task)), cell->score, published, pub.note});
      }
    }
  }
  return out;
}

ScoreReport score_report(const Landscape& landscape, const Rational& epsilon, const SocTaskTaxonomy& taxonomy) {
  ScoreReport report;
  report.matrix = score_matrix(landscape, taxonomy);
  report.epsilon = epsilon;
  report.close_pairs = discernibility(report.matrix, epsilon);
  report.discrepancies = published_discrepancies(report.matrix, landscape);
  return report;
}

long long round_tenths(const Rational& value) {
  // round(10 * n / d) with ties away from zero, in integers.
  const long long num = value.numerator() * 10;
  const long long den = value.denominator();  // always positive
  const long long magnitude = (2 * std::llabs(num) + den) / (2 * den);
  return num < 0 ? -magnitude : magnitude;
}

std::string format_one_decimal(const Rational& value) {
  const long long tenths = round_tenths(value);
  const long long magnitude = std::llabs(tenths);
  std::string out = tenths < 0 ? "-" : "";
  out += std::to_string(magnitude / 10) + "." + std::to_string(magnitude % 10);
  return out;
}

std::string format_rational(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

Rational rational_from_tenths(double value) { return Rational(std::llround(value * 10.0), 10); }

std::string describe_report(const ScoreReport& report) {
  std::ostringstream out;
  if (report.close_pairs.empty()) {
    out << "discernibility: all " << report.matrix.rows.size() << " categories are discernible at epsilon "
        << format_rational(report.epsilon) << "\n";
  } else {
    out << "discernibility: " << report.close_pairs.size() << " pair(s) closer than epsilon "
        << format_rational(report.epsilon) << "\n";
    for (const auto& pair : report.close_pairs) {
      out << "  " << pair.first << " ~ " << pair.second << " distance " << format_rational(pair.distance) << "\n";
    }
  }
  for (const auto& d : report.discrepancies) {
    out << "discrepancy: " << d.category_id << " " << d.task_id << " computed " << format_one_decimal(d.computed)
        << " (" << format_rational(d.computed) << ") vs published " << format_one_decimal(d.published);
    if (!d.note.empty()) out << ": " << d.note;
    out << "\n";
  }
  return out.str();
}

}  // namespace socplan
