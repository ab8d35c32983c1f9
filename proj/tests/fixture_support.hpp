#pragma once

#include <random>
#include <string>
#include <vector>

#include "socplan/plan_io.hpp"

namespace socplan::testing {

// The bundled case study, parsed once.
const PlanDocument& case_study();

// Table rows transcribed as plain strings, independent of the fixture file.
struct SurveyRow {
  std::string category_label;
  std::string name;
  std::string primary;
  std::vector<std::string> secondary;
  std::string relevance;
};
const std::vector<SurveyRow>& survey_rows();

// Published involvement tables as printed: "0,7 EI/EI/IE" or "N/A".
// Rows A..E, columns Intelligence, SIEM, Baseline, Forensics, Pentests.
using PrintedTable = std::vector<std::vector<std::string>>;
const PrintedTable& printed_status_quo();
const PrintedTable& printed_max_external();
const PrintedTable& printed_target();

// Independent point scoring straight from the strings.
// Returns points for "SIEM" or "Baseline" columns.
int oracle_points(const SurveyRow& row, const std::string& column);
// Independent set intersection on string tokens.
int oracle_similarity(const SurveyRow& a, const SurveyRow& b);
// Floating-point nearest-scale-point with ties up, from level tokens.
int oracle_suggest_tenths(const std::vector<std::string>& levels);

std::vector<std::string> split(const std::string& text, char sep);

// A random plan that satisfies every invariant.
PlanDocument random_plan(std::mt19937& rng);

std::string read_file(const std::string& path);

}  // namespace socplan::testing
