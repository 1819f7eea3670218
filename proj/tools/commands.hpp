#ifndef YMOPTICS_TOOLS_COMMANDS_HPP_
#define YMOPTICS_TOOLS_COMMANDS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"

namespace ymo::cli {

enum ExitCode : int {
  kPass = 0,
  kResidualFail = 1,
  kConfigError = 2,
  kDomainError = 3,
};

struct RunContext {
  // Directory for CSV/JSON artefacts; empty means JSON on stdout only.
  std::string out_dir;
  Overrides overrides;
};

int cmd_verify(const Config& cfg, const RunContext& ctx, std::ostream& out);
int cmd_ansatz(const Config& cfg, const RunContext& ctx, std::ostream& out);
int cmd_trace(const Config& cfg, const RunContext& ctx, std::ostream& out);
int cmd_media(const Config& cfg, const RunContext& ctx, std::ostream& out);
int cmd_copies(const Config& cfg, const RunContext& ctx, std::ostream& out);

// Full command line, including argv[0]. Maps ConfigError to exit 2 and
// DomainError / singular frames to exit 3.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ymo::cli

#endif  // YMOPTICS_TOOLS_COMMANDS_HPP_
