// Acceptance suite: one PASS/FAIL line per criterion. argv[1] is the path of
// the mhs executable (criterion 7 runs it as a subprocess).

#include <unistd.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mhs/analysis.hpp"
#include "mhs/cli.hpp"
#include "mhs/compression.hpp"
#include "mhs/instances.hpp"
#include "mhs/rank3.hpp"
#include "mhs/rankk.hpp"

namespace fs = std::filesystem;
using namespace mhs;

namespace {

// Pinned tolerances.
constexpr double kConstraintTolerance = 1e-6;
constexpr double kTightSlack = 1e-6;
constexpr double kGrowthLow = 1.67547;
constexpr double kGrowthHigh = 1.67550;
constexpr double kTableTolerance = 5e-5;
constexpr double kTableTolerance20 = 5e-8;
constexpr double kAuditTolerance = 1e-9;
constexpr double kGrowthBase = 1.6755;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

std::vector<VertexSet> canonical(const std::function<SearchStats(const TransversalSink&)>& engine) {
  std::vector<VertexSet> out;
  engine([&](std::span<const Vertex> t) { out.emplace_back(t.begin(), t.end()); });
  std::sort(out.begin(), out.end());
  return out;
}

Hypergraph random_instance(std::uint64_t seed, int k, std::size_t n, std::size_t m) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::random;
  spec.k = k;
  spec.n = n;
  spec.m = std::min<std::uint64_t>(m, count_candidate_edges(k, n));
  spec.seed = seed;
  return gen_random(spec);
}

Outcome oracle_equivalence(double& limit_seconds) {
  limit_seconds = 300;
  Outcome o;
  std::size_t instances = 0;
  std::size_t runs = 0;
  std::array<std::size_t, 7> by_rank{};
  for (std::uint64_t seed = 1; seed <= 600; ++seed) {
    const int k = 2 + static_cast<int>(seed % 5);
    const std::size_t n = 2 + seed % 11;
    const std::size_t m = 1 + (seed * 7) % 24;
    const auto h = random_instance(seed, k, n, m);
    const auto expected = brute_force_enumerate(h);
    ++instances;
    ++by_rank[std::min<std::size_t>(h.rank(), 6)];

    auto check = [&](const char* name, const std::vector<VertexSet>& got) {
      ++runs;
      if (got != expected && o.pass) {
        o.pass = false;
        o.detail = std::string(name) + " differs on seed " + std::to_string(seed);
      }
    };
    if (h.rank() <= 3) check("rank3", canonical([&](auto& s) { return enumerate_rank3(h, s); }));
    check("rankk", canonical([&](auto& s) { return enumerate_rankk(h, s); }));
    if (h.rank() == 4) {
      CompressionConfig cfg;
      check("compression", canonical([&](auto& s) { return enumerate_compression(h, cfg, s); }));
    }
  }
  if (o.pass) {
    std::ostringstream d;
    d << instances << " instances, " << runs << " engine runs, ranks";
    for (std::size_t r = 0; r < by_rank.size(); ++r) {
      if (by_rank[r]) d << ' ' << r << ':' << by_rank[r];
    }
    o.detail = d.str();
  }
  return o;
}

Outcome lower_bound_counts(double& limit_seconds) {
  limit_seconds = 60;
  Outcome o;
  const std::array<std::array<int, 3>, 6> cases = {{{2, 3, 3}, {2, 9, 27}, {3, 5, 10},
                                                    {3, 12, 100}, {4, 7, 35}, {4, 14, 1225}}};
  std::ostringstream d;
  for (const auto& [k, n, expected] : cases) {
    cli::RunConfig cfg;
    cfg.command = cli::Command::count;
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::dispatch(cfg, gen_lower_bound(k, static_cast<std::size_t>(n)), out, err);
    const std::string got = out.str().substr(0, out.str().find('\n'));
    d << "(" << k << "," << n << ")=" << got << ' ';
    if (code != 0 || got != std::to_string(expected)) o.pass = false;
  }
  o.detail = d.str();
  return o;
}

Outcome measure_verification(double& limit_seconds) {
  limit_seconds = 1;
  Outcome o;
  const auto w = Weights::rank3_table();
  const auto report = verify_weights(w, kConstraintTolerance);
  std::ostringstream d;
  d << std::setprecision(10);

  std::size_t failing = 0;
  for (const auto& s : report.summaries()) failing += s.failures ? 1 : 0;
  d << "families passing " << (kAllFamilies.size() - failing) << "/" << kAllFamilies.size();
  if (!report.pass) o.pass = false;

  const double growth = std::exp2(w.w(5));
  const bool growth_ok = growth >= kGrowthLow && growth <= kGrowthHigh;
  d << "; 2^omega_5=" << growth << (growth_ok ? " in " : " outside ") << "[" << kGrowthLow << ", "
    << kGrowthHigh << "]";
  if (!growth_ok) o.pass = false;

  const std::vector<std::pair<ConstraintFamily, std::vector<int>>> expected_tight = {
      {ConstraintFamily::rule2_1, {5, 5}},      {ConstraintFamily::rule2_1, {6, 5}},
      {ConstraintFamily::rule2_1, {6, 6}},      {ConstraintFamily::rule3_1, {2, 1}},
      {ConstraintFamily::rule3_2, {2, 6, 6, 2}}, {ConstraintFamily::rule3_2, {2, 6, 6, 3}},
      {ConstraintFamily::rule3_2, {2, 6, 6, 4}}, {ConstraintFamily::rule4_1, {3}},
      {ConstraintFamily::rule4_1, {4}},         {ConstraintFamily::rule4_1, {5}},
      {ConstraintFamily::rule4_1, {6}},
  };
  const auto tight = report.tight(kTightSlack);
  std::size_t listed = 0;
  for (const auto& [family, params] : expected_tight) {
    const bool found = std::any_of(tight.begin(), tight.end(), [&](const ConstraintRecord& r) {
      return r.family == family && r.params == params && std::abs(r.slack()) <= kTightSlack;
    });
    if (found) {
      ++listed;
    } else {
      o.pass = false;
    }
  }
  d << "; tight tuples listed " << listed << "/" << expected_tight.size();
  o.detail = d.str();
  return o;
}

Outcome table_reproduction(double& limit_seconds) {
  limit_seconds = 1;
  Outcome o;
  const auto rows = bounds_table(20);
  const std::array<double, 9> lower = {1.4422, 1.5848, 1.6618, 1.7114, 1.7467,
                                       1.7734, 1.7943, 1.8112, 1.8253};
  const std::array<double, 6> upper = {1.9538, 1.9779, 1.9893, 1.9947, 1.9974, 1.9987};
  double worst = 0.0;
  auto compare = [&](double got, double want, double tol, const std::string& what) {
    const double diff = std::abs(got - want);
    worst = std::max(worst, diff / tol);
    if (diff > tol && o.pass) {
      o.pass = false;
      std::ostringstream d;
      d << std::setprecision(10) << what << " got " << got << " want " << want;
      o.detail = d.str();
    }
  };
  auto row = [&](int k) { return rows.at(static_cast<std::size_t>(k - 2)); };
  for (int k = 2; k <= 10; ++k) {
    compare(row(k).lower, lower[static_cast<std::size_t>(k - 2)], kTableTolerance,
            "lower k=" + std::to_string(k));
  }
  compare(row(20).lower, 1.8962, kTableTolerance, "lower k=20");
  for (int k = 5; k <= 10; ++k) {
    compare(row(k).upper, upper[static_cast<std::size_t>(k - 5)], kTableTolerance,
            "upper k=" + std::to_string(k));
  }
  compare(row(20).upper, 1.9999988, kTableTolerance20, "upper k=20");
  if (o.pass) {
    std::ostringstream d;
    d << "16 entries match; worst |diff|/tolerance " << std::setprecision(3) << worst;
    o.detail = d.str();
  }
  return o;
}

Outcome growth_sanity(double& limit_seconds) {
  limit_seconds = 120;
  Outcome o;
  std::ostringstream d;
  for (std::size_t n : {5, 10, 15, 20, 25}) {
    MeasureAudit audit;
    audit.tolerance = kAuditTolerance;
    Rank3Options opts;
    opts.audit = &audit;
    const auto stats = enumerate_rank3(gen_lower_bound(3, n), [](std::span<const Vertex>) {}, opts);
    const double bound = std::pow(static_cast<double>(n), 3) * std::pow(kGrowthBase, static_cast<double>(n));
    const bool ok = static_cast<double>(stats.leaves) <= bound && audit.violations == 0;
    if (!ok) o.pass = false;
    d << "n=" << n << " leaves=" << stats.leaves << " audited=" << audit.checked
      << " violations=" << audit.violations << "; ";
  }
  o.detail = d.str();
  return o;
}

Outcome compression_internals(double& limit_seconds) {
  limit_seconds = 300;
  Outcome o;
  std::size_t pairs = 0;
  std::size_t instances = 0;
  for (std::uint64_t seed = 1; instances < 100; ++seed) {
    const std::size_t n = 4 + seed % 7;
    const auto h = random_instance(seed * 101, 4, n, 4 + seed % 16);
    if (h.rank() != 4) continue;
    ++instances;
    const auto oracle = brute_force_enumerate(h);

    CompressionConfig cfg;
    cfg.on_projection = [&](const VertexSet& x, const VertexSet& nset, const Hypergraph& projected) {
      ++pairs;
      const auto inner = brute_force_enumerate(projected);
      // T ∩ X = N  implies  T \ X is a minimal transversal of the projection.
      for (const auto& t : oracle) {
        VertexSet in_x;
        VertexSet rest;
        for (Vertex v : t) (std::binary_search(x.begin(), x.end(), v) ? in_x : rest).push_back(v);
        if (in_x != nset) continue;
        if (!std::binary_search(inner.begin(), inner.end(), rest) && o.pass) {
          o.pass = false;
          o.detail = "projection correspondence fails on seed " + std::to_string(seed);
        }
      }
    };
    std::vector<VertexSet> first;
    for (double alpha : {0.5, kDefaultAlpha, 0.8}) {
      cfg.alpha = alpha;
      const auto got = canonical([&](auto& s) { return enumerate_compression(h, cfg, s); });
      if (alpha == 0.5) first = got;
      if ((got != first || got != oracle) && o.pass) {
        o.pass = false;
        o.detail = "alpha " + std::to_string(alpha) + " output differs on seed " + std::to_string(seed);
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(instances) + " rank-4 instances, " + std::to_string(pairs) +
               " (X, N) pairs checked, alpha in {0.5, 0.66938, 0.8}";
  }
  return o;
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  out += "\n[status " + std::to_string(status) + "]";
  return out;
}

Outcome determinism(const std::string& tool, double& limit_seconds) {
  limit_seconds = 300;
  Outcome o;
  if (tool.empty()) return {false, "no executable path given"};
  const fs::path dir = fs::temp_directory_path() / ("mhs_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);

  std::vector<std::string> files;
  for (int i = 0; i < 20; ++i) {
    Hypergraph h;
    if (i < 4) {
      h = gen_lower_bound(2 + i % 3, 7 + static_cast<std::size_t>(i));
    } else {
      h = random_instance(1000 + static_cast<std::uint64_t>(i), 2 + i % 5, 6 + static_cast<std::size_t>(i % 7),
                          5 + static_cast<std::size_t>(i));
    }
    const auto path = (dir / ("instance" + std::to_string(i) + ".hg")).string();
    std::ofstream file(path);
    write_hypergraph(file, h);
    files.push_back(path);
  }

  const std::string quoted = "'" + tool + "'";
  std::vector<std::string> commands;
  for (const auto& f : files) {
    for (const char* sub : {"enumerate", "count", "minimum", "count-minimum", "bench"}) {
      commands.push_back(quoted + " " + sub + " '" + f + "' 2>/dev/null");
    }
    commands.push_back(quoted + " enumerate --canonical --algorithm rankk '" + f + "' 2>/dev/null");
  }
  for (int i = 0; i < 20; ++i) {
    commands.push_back(quoted + " generate --kind random --k " + std::to_string(2 + i % 5) + " --n " +
                       std::to_string(6 + i) + " --m " + std::to_string(4 + i) + " --seed " +
                       std::to_string(i) + " 2>/dev/null");
  }
  commands.push_back(quoted + " generate --kind lb --k 3 --n 10 2>/dev/null");
  commands.push_back(quoted + " verify-measure 2>/dev/null");
  commands.push_back(quoted + " bounds-table --kmax 20 2>/dev/null");

  for (const auto& c : commands) {
    const std::string first = capture(c);
    for (int rep = 1; rep < 3; ++rep) {
      if (capture(c) != first && o.pass) {
        o.pass = false;
        o.detail = "output differs: " + c;
      }
    }
    if (first.find("[status 0]") == std::string::npos && o.pass) {
      o.pass = false;
      o.detail = "nonzero exit: " + c;
    }
  }
  fs::remove_all(dir);
  if (o.pass) o.detail = std::to_string(commands.size()) + " commands x 3 runs identical";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string tool = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome(double&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence", oracle_equivalence},
      {2, "lower-bound counts", lower_bound_counts},
      {3, "measure verification", measure_verification},
      {4, "bounds table", table_reproduction},
      {5, "search-tree growth", growth_sanity},
      {6, "compression internals", compression_internals},
      {7, "determinism", [&](double& limit) { return determinism(tool, limit); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    double limit = 0;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run(limit);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const std::chrono::duration<double> took = Clock::now() - start;
    if (took.count() > limit) {
      o.pass = false;
      o.detail += " (took " + std::to_string(took.count()) + " s, limit " + std::to_string(limit) + " s)";
    }
    if (!o.pass) ++failures;
    std::cout << "criterion " << c.id << " [" << c.name << "]: " << (o.pass ? "PASS" : "FAIL") << " ("
              << std::fixed << std::setprecision(2) << took.count() << " s) " << o.detail << '\n';
    std::cout.unsetf(std::ios::fixed);
  }
  std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL") << '\n';
  return failures == 0 ? 0 : 1;
}
