#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace socplan {

struct CliOptions {
  bool color = false;  // ANSI styling on stderr messages
};

// Exit codes: 0 success, 1 validation/domain errors, 2 usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliOptions& options = {});

}  // namespace socplan
