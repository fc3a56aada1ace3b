#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace finsemi {

// Exit codes shared by every subcommand, chosen for scriptability.
enum ExitCode : int {
  kExitPass = 0,          // requested result produced, all checks green
  kExitUsage = 1,         // bad arguments or unparseable input
  kExitObstruction = 2,   // definite negative finding with a certificate
  kExitInconclusive = 3,  // outside the decidable fragment, nothing certified
  kExitResource = 4,      // a configured size bound was exceeded
};

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  bool json = false;
  bool quick = false;
  std::uint64_t seed = 1;
  int max_group_order = 64;       // largest ambient group accepted
  long long max_exp_order = 1024; // largest product group the pipeline builds
  int grid_denominator = 4;       // measure-grid resolution for conv grid
  bool list_regular = false;      // exp --regular
  bool list_idempotents = false;  // exp --idempotents
  bool show_table = false;        // exp --table
  std::string conv_action;        // mul | classify | support-iso | grid
  std::string embed_target = "exp";
};

// Parses args (no program name), runs one subcommand, writes the report to
// `out` and diagnostics to `err`. Returns an ExitCode value. JSON output is
// byte-identical for identical configs and inputs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace finsemi
