#include "mhs/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>

#include "mhs/analysis.hpp"
#include "mhs/rank3.hpp"
#include "mhs/rankk.hpp"

namespace mhs::cli {

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "auto") return Algorithm::automatic;
  if (name == "rank3") return Algorithm::rank3;
  if (name == "rankk") return Algorithm::rankk;
  if (name == "compression") return Algorithm::compression;
  if (name == "oracle") return Algorithm::oracle;
  return std::nullopt;
}

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::automatic: return "auto";
    case Algorithm::rank3: return "rank3";
    case Algorithm::rankk: return "rankk";
    case Algorithm::compression: return "compression";
    case Algorithm::oracle: return "oracle";
  }
  return "?";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view name) {
  if (name == "lb" || name == "lower_bound") return GeneratorKind::lower_bound;
  if (name == "triangles") return GeneratorKind::triangles;
  if (name == "random") return GeneratorKind::random;
  return std::nullopt;
}

Algorithm resolve(Algorithm requested, std::size_t rank) {
  if (requested != Algorithm::automatic) return requested;
  if (rank <= 3) return Algorithm::rank3;
  if (rank == 4) return Algorithm::compression;
  return Algorithm::rankk;
}

namespace {

// Enumerates with the chosen engine. The oracle reports every subset it
// tests as a node and a leaf.
SearchStats run_engine(Algorithm algorithm, const Hypergraph& h, double alpha,
                       const TransversalSink& sink) {
  switch (algorithm) {
    case Algorithm::rank3:
      return enumerate_rank3(h, sink);
    case Algorithm::rankk:
      return enumerate_rankk(h, sink);
    case Algorithm::compression: {
      CompressionConfig config;
      config.alpha = alpha;
      return enumerate_compression(h, config, sink);
    }
    case Algorithm::oracle: {
      SearchStats stats;
      stats.nodes = stats.leaves = std::uint64_t{1} << h.num_vertices();
      for (const auto& t : brute_force_enumerate(h)) {
        ++stats.outputs;
        sink(t);
      }
      return stats;
    }
    case Algorithm::automatic:
      break;
  }
  throw std::logic_error("unresolved algorithm");
}

void print_stats(std::ostream& err, const SearchStats& s) {
  err << "nodes=" << s.nodes << " leaves=" << s.leaves << " max_depth=" << s.max_depth
      << " outputs=" << s.outputs << '\n';
}

}  // namespace

int dispatch(const RunConfig& config, const Hypergraph& h, std::ostream& out, std::ostream& err) {
  const Algorithm algorithm = resolve(config.algorithm, h.rank());
  if (algorithm == Algorithm::rank3 && h.rank() > 3) {
    err << "error: algorithm rank3 needs rank <= 3, input has rank " << h.rank() << '\n';
    return kRankMismatch;
  }
  if (algorithm == Algorithm::compression && h.rank() > 4) {
    err << "error: algorithm compression needs rank <= 4, input has rank " << h.rank() << '\n';
    return kRankMismatch;
  }
  if (algorithm == Algorithm::oracle && h.num_vertices() > kBruteForceLimit) {
    err << "error: algorithm oracle is limited to " << kBruteForceLimit << " vertices\n";
    return kRankMismatch;
  }
  if (!(config.alpha >= 0.5 && config.alpha <= 1.0)) {
    err << "error: --alpha must lie in [0.5, 1]\n";
    return kParseFailure;
  }

  try {
    SearchStats stats;
    switch (config.command) {
      case Command::enumerate: {
        if (config.canonical) {
          std::vector<VertexSet> all;
          stats = run_engine(algorithm, h, config.alpha, [&](std::span<const Vertex> t) {
            all.emplace_back(t.begin(), t.end());
          });
          std::sort(all.begin(), all.end());
          for (const auto& t : all) write_vertex_set(out, t);
        } else {
          stats = run_engine(algorithm, h, config.alpha,
                             [&](std::span<const Vertex> t) { write_vertex_set(out, t); });
        }
        break;
      }
      case Command::count: {
        std::uint64_t count = 0;
        stats = run_engine(algorithm, h, config.alpha, [&](std::span<const Vertex>) { ++count; });
        out << count << '\n';
        break;
      }
      case Command::minimum: {
        std::optional<VertexSet> best;
        stats = run_engine(algorithm, h, config.alpha, [&](std::span<const Vertex> t) {
          if (!best || t.size() < best->size()) best.emplace(t.begin(), t.end());
        });
        if (best) {
          write_vertex_set(out, *best);
        } else {
          err << "no transversal exists\n";
        }
        break;
      }
      case Command::count_minimum: {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        std::uint64_t count = 0;
        stats = run_engine(algorithm, h, config.alpha, [&](std::span<const Vertex> t) {
          if (t.size() < best) {
            best = t.size();
            count = 0;
          }
          if (t.size() == best) ++count;
        });
        out << count << '\n';
        break;
      }
      case Command::bench: {
        std::uint64_t count = 0;
        const auto start = std::chrono::steady_clock::now();
        stats = run_engine(algorithm, h, config.alpha, [&](std::span<const Vertex>) { ++count; });
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        out << "algorithm=" << algorithm_name(algorithm) << " n=" << h.num_vertices()
            << " m=" << h.num_edges() << " rank=" << h.rank() << " transversals=" << count
            << " nodes=" << stats.nodes << " leaves=" << stats.leaves
            << " max_depth=" << stats.max_depth << '\n';
        err << "seconds=" << std::fixed << std::setprecision(6) << elapsed.count() << '\n';
        break;
      }
      default:
        err << "error: command does not take a hypergraph\n";
        return kInternalError;
    }
    if (config.stats) print_stats(err, stats);
  } catch (const RankError& e) {
    err << "error: " << e.what() << '\n';
    return kRankMismatch;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kOk;
}

namespace {

int verify_measure(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Weights weights = Weights::rank3_table();
  if (config.weights_path) {
    std::ifstream file(*config.weights_path);
    if (!file) {
      err << "error: cannot open " << *config.weights_path << '\n';
      return kParseFailure;
    }
    try {
      weights = parse_weights(file);
    } catch (const ParseError& e) {
      err << "error: " << *config.weights_path << ": " << e.what() << '\n';
      return kParseFailure;
    }
  }

  const ConstraintReport report = verify_weights(weights, config.tolerance);
  out << std::setprecision(9) << std::fixed;
  for (const auto& s : report.summaries()) {
    out << "family " << family_name(s.family) << " tuples=" << s.tuples << " failures=" << s.failures
        << " max_lhs=" << s.max_lhs << " min_slack=" << std::scientific << std::setprecision(3)
        << s.min_slack << std::fixed << std::setprecision(9) << ' '
        << (s.failures == 0 ? "PASS" : "FAIL") << '\n';
  }
  for (const auto& r : report.records) {
    if (!r.pass) out << "violated " << r.describe() << " lhs=" << r.lhs << " rhs=" << r.rhs << '\n';
  }
  for (const auto& r : report.tight(config.tolerance)) {
    out << "tight " << r.describe() << " lhs=" << r.lhs << " slack=" << std::scientific
        << std::setprecision(3) << r.slack() << std::fixed << std::setprecision(9) << '\n';
  }
  out << "max_lhs " << report.max_lhs << '\n';
  out << "growth_base 2^omega_5=" << std::exp2(weights.w(5)) << '\n';
  out << "overall " << (report.pass ? "PASS" : "FAIL") << '\n';
  return report.pass ? kOk : kCheckFailed;
}

int print_bounds_table(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.kmax < 2) {
    err << "error: --kmax must be at least 2\n";
    return kParseFailure;
  }
  out << "k lower upper\n";
  for (const auto& row : bounds_table(config.kmax)) {
    out << row.k << ' ' << std::fixed << std::setprecision(row.lower_decimals) << row.lower << ' '
        << std::setprecision(row.upper_decimals) << row.upper << '\n';
  }
  return kOk;
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::generate:
      try {
        write_hypergraph(out, generate(config.generator));
      } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kParseFailure;
      }
      return kOk;
    case Command::verify_measure:
      return verify_measure(config, out, err);
    case Command::bounds_table:
      return print_bounds_table(config, out, err);
    default:
      break;
  }

  Hypergraph h;
  const bool from_stdin = config.input.empty() || config.input == "-";
  try {
    if (from_stdin) {
      h = parse_hypergraph(in);
    } else {
      std::ifstream file(config.input);
      if (!file) {
        err << "error: cannot open " << config.input << '\n';
        return kParseFailure;
      }
      h = parse_hypergraph(file);
    }
  } catch (const ParseError& e) {
    err << "error: " << (from_stdin ? "<stdin>" : config.input) << ": " << e.what() << '\n';
    return kParseFailure;
  }
  return dispatch(config, h, out, err);
}

}  // namespace mhs::cli
