#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "socplan/abstraction.hpp"
#include "socplan/involvement.hpp"
#include "socplan/scoring.hpp"

namespace socplan {

enum class ExportFormat { kCsv, kMarkdown, kJsonLines };

// "csv", "md" or "json-lines"; throws Error("unknown-format") otherwise.
ExportFormat parse_format(std::string_view name);
std::string_view format_name(ExportFormat format);

// RFC 4180 field quoting.
std::string csv_field(std::string_view text);

// Unscored cells are empty in every format.
std::string export_matrix(const RelationshipMatrix& matrix, ExportFormat format);

// Score matrix plus discernibility and discrepancy records (json-lines);
// for csv/md this is export_matrix alone.
std::string export_score_report(const ScoreReport& report, ExportFormat format);

// N/A cells are empty in csv and "N/A" in markdown.
std::string export_involvement(const InvolvementModel& model, const Landscape& landscape,
                               const SocTaskTaxonomy& taxonomy, ExportFormat format);

std::string export_diff(const ModelDiff& diff, const Landscape& landscape, ExportFormat format);

std::string export_clustering(const Clustering& clustering, const PartitionAgreement& agreement,
                              ExportFormat format);

}  // namespace socplan
