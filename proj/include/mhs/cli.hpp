#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "mhs/compression.hpp"
#include "mhs/hypergraph.hpp"
#include "mhs/instances.hpp"

namespace mhs::cli {

enum class Command { enumerate, count, minimum, count_minimum, generate, verify_measure, bounds_table, bench };
enum class Algorithm { automatic, rank3, rankk, compression, oracle };

/// Exit codes are part of the scripting contract.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,    // verify-measure found a violated constraint
  kParseFailure = 2,
  kRankMismatch = 3,
  kInternalError = 4,
};

struct RunConfig {
  Command command = Command::enumerate;
  Algorithm algorithm = Algorithm::automatic;
  double alpha = kDefaultAlpha;
  bool canonical = false;
  bool stats = false;
  std::string input;  // empty or "-" reads standard input

  GeneratorSpec generator;           // generate
  std::optional<std::string> weights_path;  // verify-measure
  double tolerance = 1e-6;           // verify-measure
  int kmax = 20;                     // bounds-table
};

std::optional<Algorithm> parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm a);
std::optional<GeneratorKind> parse_generator_kind(std::string_view name);

/// The engine `automatic` resolves to for a given rank.
Algorithm resolve(Algorithm requested, std::size_t rank);

/// Runs a hypergraph command (enumerate, count, minimum, count-minimum, bench)
/// on `h`. Transversals go to `out`, stats and diagnostics to `err`.
int dispatch(const RunConfig& config, const Hypergraph& h, std::ostream& out, std::ostream& err);

/// Full command execution: reads the input for hypergraph commands (from
/// config.input, or `in` for standard input) and maps errors to exit codes.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mhs::cli
