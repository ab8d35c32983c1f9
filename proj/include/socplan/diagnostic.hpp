#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace socplan {

enum class Severity { kError, kWarning, kInfo };

const char* severity_name(Severity severity);

// A located finding. `code` is stable and machine-readable; `path` is a
// document path such as "landscape.groups[3].relevance".
struct Diagnostic {
  Severity severity = Severity::kError;
  std::string code;
  std::string path;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

using Diagnostics = std::vector<Diagnostic>;

bool has_errors(const Diagnostics& diagnostics);
std::size_t count_code(const Diagnostics& diagnostics, const std::string& code);
std::string format_diagnostic(const Diagnostic& diagnostic);

// Domain error raised by operations whose contract names an error code
// (unknown-control, invalid-k, no-partition, ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace socplan
