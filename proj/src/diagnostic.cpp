#include "socplan/diagnostic.hpp"

#include <algorithm>

namespace socplan {

const char* severity_name(Severity severity) {
  switch (severity) {
    case Severity::kError:
      return "error";
    case Severity::kWarning:
      return "warning";
    case Severity::kInfo:
      return "info";
  }
  return "error";
}

bool has_errors(const Diagnostics& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::kError; });
}

std::size_t count_code(const Diagnostics& diagnostics, const std::string& code) {
  return static_cast<std::size_t>(std::count_if(
      diagnostics.begin(), diagnostics.end(), [&](const Diagnostic& d) { return d.code == code; }));
}

std::string format_diagnostic(const Diagnostic& diagnostic) {
  std::string out = severity_name(diagnostic.severity);
  out += "[" + diagnostic.code + "]";
  if (!diagnostic.path.empty()) out += " " + diagnostic.path;
  out += ": " + diagnostic.message;
  return out;
}

}  // namespace socplan
