#include "mhs/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <sstream>

namespace mhs {

Weights Weights::rank3_table() {
  Weights w;
  w.omega = {0.0, 0.580392137, 0.699175718, 0.730706814, 0.742114220, 0.744541491, 0.744541491};
  w.psi = {0.566096928, 0.436314617, 0.306532603, 0.211986294, 0.119795899, 0.035202514, 0.0};
  return w;
}

Weights parse_weights(std::istream& in) {
  Weights w;
  std::array<bool, 14> seen{};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string label;
    std::string value;
    if (!(ss >> label) || label[0] == '#') continue;
    if (!(ss >> value)) throw ParseError(line_no, "missing value for '" + label + "'");
    std::string extra;
    if (ss >> extra) throw ParseError(line_no, "unexpected token '" + extra + "'");

    bool is_omega = label.rfind("omega_", 0) == 0;
    bool is_psi = label.rfind("psi_", 0) == 0;
    std::string index_text = is_omega ? label.substr(6) : is_psi ? label.substr(4) : "";
    int index = -1;
    auto [ptr, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
    if ((!is_omega && !is_psi) || ec != std::errc{} || ptr != index_text.data() + index_text.size() ||
        index < 0 || index > 6) {
      throw ParseError(line_no, "unknown label '" + label + "'");
    }
    double x = 0.0;
    try {
      std::size_t used = 0;
      x = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw ParseError(line_no, "invalid decimal '" + value + "'");
    }
    auto slot = static_cast<std::size_t>(index) + (is_psi ? 7 : 0);
    if (seen[slot]) throw ParseError(line_no, "duplicate label '" + label + "'");
    seen[slot] = true;
    (is_psi ? w.psi : w.omega)[static_cast<std::size_t>(index)] = x;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      std::string name = (i < 7 ? "omega_" : "psi_") + std::to_string(i % 7);
      throw ParseError(line_no + 1, "missing weight '" + name + "'");
    }
  }
  return w;
}

double measure(const Hypergraph& h, const Weights& weights) {
  if (h.rank() > 3) throw RankError("measure is defined for rank <= 3");
  std::size_t small_edges = 0;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (h.edge_size(i) <= 2) ++small_edges;
  }
  const auto deg = h.degrees();
  double total = weights.p(static_cast<int>(std::min<std::size_t>(small_edges, 6)));
  for (Vertex v : h.vertices()) total += weights.w(static_cast<int>(std::min<std::uint32_t>(deg[v], 6)));
  return total;
}

std::string_view family_name(ConstraintFamily f) {
  switch (f) {
    case ConstraintFamily::deltas: return "deltas";
    case ConstraintFamily::rule1_2: return "rule1_2";
    case ConstraintFamily::rule2_1: return "rule2_1";
    case ConstraintFamily::rule2_2: return "rule2_2";
    case ConstraintFamily::rule2_3: return "rule2_3";
    case ConstraintFamily::rule3_1: return "rule3_1";
    case ConstraintFamily::rule3_2: return "rule3_2";
    case ConstraintFamily::rule3_3: return "rule3_3";
    case ConstraintFamily::rule4_1: return "rule4_1";
    case ConstraintFamily::rule4_2: return "rule4_2";
    case ConstraintFamily::rule4_3: return "rule4_3";
  }
  return "?";
}

std::vector<std::string_view> family_parameters(ConstraintFamily f) {
  switch (f) {
    case ConstraintFamily::deltas: return {"i", "check"};
    case ConstraintFamily::rule1_2: return {"i"};
    case ConstraintFamily::rule2_1: return {"d(u)", "m<=2"};
    case ConstraintFamily::rule3_1: return {"d(u1)", "m<=2"};
    case ConstraintFamily::rule3_2: return {"d(v)", "d(u1)", "d(u2)", "m<=2"};
    case ConstraintFamily::rule3_3: return {"d2(v)", "m<=2", "d(u1)", "d(u2)", "d(u3)"};
    case ConstraintFamily::rule4_1: return {"d(v)"};
    default: return {};
  }
}

std::string ConstraintRecord::describe() const {
  std::ostringstream out;
  out << family_name(family);
  const auto names = family_parameters(family);
  for (std::size_t i = 0; i < params.size(); ++i) {
    out << ' ' << (i < names.size() ? names[i] : "p") << '=' << params[i];
  }
  return out.str();
}

namespace {

bool is_branching(ConstraintFamily f) {
  return f != ConstraintFamily::deltas && f != ConstraintFamily::rule1_2;
}

class ReportBuilder {
 public:
  explicit ReportBuilder(double tolerance) { report_.tolerance = tolerance; }

  void add(ConstraintFamily f, std::vector<int> params, double lhs, double rhs) {
    ConstraintRecord r{f, std::move(params), lhs, rhs, lhs <= rhs + report_.tolerance};
    report_.records.push_back(std::move(r));
  }

  ConstraintReport finish() {
    report_.pass = std::all_of(report_.records.begin(), report_.records.end(),
                               [](const ConstraintRecord& r) { return r.pass; });
    report_.max_lhs = 0.0;
    for (const auto& r : report_.records) {
      if (is_branching(r.family)) report_.max_lhs = std::max(report_.max_lhs, r.lhs);
    }
    return std::move(report_);
  }

 private:
  ConstraintReport report_;
};

double pow2(double x) { return std::exp2(x); }

}  // namespace

ConstraintReport verify_weights(const Weights& W, double tolerance) {
  using F = ConstraintFamily;
  ReportBuilder b(tolerance);

  // Monotone differences, extension convention and non-negativity.
  for (int i = 1; i <= 5; ++i) {
    b.add(F::deltas, {i, 0}, -W.dw(i + 1), 0.0);
    b.add(F::deltas, {i, 1}, W.dw(i + 1), W.dw(i));
    b.add(F::deltas, {i, 2}, W.dp(i + 1), 0.0);
    b.add(F::deltas, {i, 3}, W.dp(i), W.dp(i + 1));
  }
  b.add(F::deltas, {6, 4}, std::abs(W.omega[6] - W.omega[5]), 0.0);
  b.add(F::deltas, {6, 5}, std::abs(W.psi[6]), 0.0);
  for (int i = 0; i <= 6; ++i) {
    b.add(F::deltas, {i, 6}, -W.omega[static_cast<std::size_t>(i)], 0.0);
    b.add(F::deltas, {i, 7}, -W.psi[static_cast<std::size_t>(i)], 0.0);
  }

  // Selecting the vertex of a size-1 edge never increases the measure.
  for (int i = 1; i <= 6; ++i) b.add(F::rule1_2, {i}, W.p(0) - W.p(i), W.w(i));

  for (int du = 1; du <= 6; ++du) {
    for (int m = 1; m <= 6; ++m) {
      double lhs = pow2(-W.w(1) - W.w(du) - W.dp(m)) +
                   pow2(-W.w(1) - W.w(du) - W.p(m) + W.p(std::max(m - du, 0)));
      b.add(F::rule2_1, {du, m}, lhs, 1.0);
    }
  }

  b.add(F::rule2_2, {}, 3.0 * pow2(-3.0 * W.w(1)), 1.0);
  b.add(F::rule2_3, {}, pow2(-2.0 * W.w(1) - W.w(2)) + pow2(-W.w(1)), 1.0);

  for (int d = 2; d <= 6; ++d) {
    for (int m = 1; m <= 6; ++m) {
      double lhs = pow2(-W.w(d) - W.dw(d) - W.dp(m)) + pow2(-2.0 * W.w(d) - W.p(m) + W.p(m + d - 2));
      b.add(F::rule3_1, {d, m}, lhs, 1.0);
    }
  }

  for (int dv = 2; dv <= 6; ++dv) {
    for (int d1 = 2; d1 <= 6; ++d1) {
      for (int d2 = 2; d2 <= 6; ++d2) {
        for (int m = 2; m <= 6; ++m) {
          double lhs = pow2(-W.w(dv) - W.dw(d1) - W.dw(d2) - W.p(m) + W.p(m - 2)) +
                       pow2(-W.w(dv) - W.w(d1) - W.w(d2) - W.p(m) + W.p(std::max(m - 4, 0) + dv - 2));
          b.add(F::rule3_2, {dv, d1, d2, m}, lhs, 1.0);
        }
      }
    }
  }

  for (int d2v = 3; d2v <= 6; ++d2v) {
    for (int m = d2v; m <= 6; ++m) {
      for (int a = 2; a <= 6; ++a) {
        for (int c = 2; c <= 6; ++c) {
          for (int e = 2; e <= 6; ++e) {
            double lhs =
                pow2(-W.w(d2v) - W.dw(a) - W.dw(c) - W.dw(e) - W.p(m) + W.p(m - d2v)) +
                pow2(-W.w(d2v) - W.w(a) - W.w(c) - W.w(e) - (d2v - 3) * W.w(2) - W.p(m) +
                     W.p(std::max(m - a - c - e, 0)));
            b.add(F::rule3_3, {d2v, m, a, c, e}, lhs, 1.0);
          }
        }
      }
    }
  }

  for (int d = 3; d <= 6; ++d) {
    double lhs = pow2(-W.w(d) - 2.0 * d * W.dw(d)) + pow2(-W.w(d) - W.p(0) + W.p(d));
    b.add(F::rule4_1, {d}, lhs, 1.0);
  }

  b.add(F::rule4_2, {}, pow2(-2.0 * W.w(2) - 2.0 * W.dw(2)) + pow2(-W.w(2) - W.p(0) + W.p(2)), 1.0);
  b.add(F::rule4_3, {},
        pow2(-4.0 * W.w(2) - W.dw(2) + W.dp(1)) + pow2(-2.0 * W.w(2) - 3.0 * W.dw(2) + W.dp(1)) +
            pow2(-W.w(2) + W.dp(2)),
        1.0);

  return b.finish();
}

std::vector<FamilySummary> ConstraintReport::summaries() const {
  std::vector<FamilySummary> out;
  for (ConstraintFamily f : kAllFamilies) {
    FamilySummary s{f, 0, 0, -std::numeric_limits<double>::infinity(),
                    std::numeric_limits<double>::infinity()};
    for (const auto& r : records) {
      if (r.family != f) continue;
      ++s.tuples;
      if (!r.pass) ++s.failures;
      s.max_lhs = std::max(s.max_lhs, r.lhs);
      s.min_slack = std::min(s.min_slack, r.slack());
    }
    out.push_back(s);
  }
  return out;
}

std::vector<ConstraintRecord> ConstraintReport::tight(double within) const {
  std::vector<ConstraintRecord> out;
  for (const auto& r : records) {
    if (is_branching(r.family) && std::abs(r.slack()) <= within) out.push_back(r);
  }
  return out;
}

double beta_polynomial(int k, double x) {
  double sum = -1.0 + 1.0 / x;
  for (int i = 3; i <= k; ++i) sum += (i - 2) * std::pow(x, -i);
  for (int i = k + 1; i <= 2 * k - 1; ++i) sum += (2 * k - i) * std::pow(x, -i);
  return sum;
}

double beta_k(int k, double tolerance) {
  if (k < 2) throw std::invalid_argument("beta_k requires k >= 2");
  // Strictly decreasing in x: positive at 1, negative at 2.
  double lo = 1.0;
  double hi = 2.0;
  while (hi - lo > tolerance) {
    double mid = 0.5 * (lo + hi);
    if (beta_polynomial(k, mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double lower_bound_base(int k) {
  if (k < 1) throw std::invalid_argument("lower_bound_base requires k >= 1");
  // log of binom(2k-1, k), summed to stay finite for large k
  double log_binom = 0.0;
  for (int i = 1; i <= k; ++i) log_binom += std::log(static_cast<double>(k - 1 + i)) - std::log(i);
  return std::exp(log_binom / (2 * k - 1));
}

double round_down(double x, int decimals) {
  const double scale = std::pow(10.0, decimals);
  // absorbs representation error, e.g. 1.8863 * 1e4 = 18863.000000000002
  return std::floor(x * scale + 1e-7) / scale;
}

double round_up(double x, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::ceil(x * scale - 1e-7) / scale;
}

std::vector<BoundsRow> bounds_table(int k_max) {
  if (k_max < 2) throw std::invalid_argument("bounds_table requires k_max >= 2");
  const Weights table = Weights::rank3_table();
  std::vector<BoundsRow> rows;
  for (int k = 2; k <= k_max; ++k) {
    BoundsRow row;
    row.k = k;
    row.lower = round_down(lower_bound_base(k), 4);
    double upper = 0.0;
    if (k == 2) {
      upper = kRank2UpperBound;
    } else if (k == 3) {
      upper = std::exp2(table.w(5));
    } else if (k == 4) {
      upper = kRank4UpperBound;
    } else {
      upper = beta_k(k);
    }
    int decimals = 4;
    if (upper < 2.0) {
      decimals = std::max(4, static_cast<int>(std::ceil(-std::log10(2.0 - upper))) + 1);
    }
    row.upper_decimals = decimals;
    row.upper = round_up(upper, decimals);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace mhs
