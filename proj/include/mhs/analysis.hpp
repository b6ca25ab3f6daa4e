#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mhs/hypergraph.hpp"

namespace mhs {

/// Vertex-degree weights omega_0..omega_6 and size-2-edge weights
/// psi(0)..psi(6) of the rank-3 measure. Indices above 6 follow the
/// extension convention omega_i = omega_5, psi(i) = 0.
struct Weights {
  std::array<double, 7> omega{};
  std::array<double, 7> psi{};

  double w(int i) const { return omega[static_cast<std::size_t>(i < 6 ? i : 6)]; }
  double p(int i) const { return i < 6 ? psi[static_cast<std::size_t>(i)] : 0.0; }
  double dw(int i) const { return w(i) - w(i - 1); }
  double dp(int i) const { return p(i) - p(i - 1); }

  /// The weight table under which the rank-3 engine runs in O(1.6755^n).
  static Weights rank3_table();
};

/// Reads 14 lines `omega_<i> <decimal>` / `psi_<i> <decimal>`, i = 0..6, in
/// any order. Comment lines (`#`) and blank lines are skipped.
Weights parse_weights(std::istream& in);

/// psi(min(m_{<=2}, 6)) + sum over v in V of omega_{min(d(v), 6)}.
/// Throws RankError when rank(h) > 3.
double measure(const Hypergraph& h, const Weights& weights);

enum class ConstraintFamily {
  deltas,
  rule1_2,
  rule2_1,
  rule2_2,
  rule2_3,
  rule3_1,
  rule3_2,
  rule3_3,
  rule4_1,
  rule4_2,
  rule4_3,
};

inline constexpr std::array<ConstraintFamily, 11> kAllFamilies = {
    ConstraintFamily::deltas,  ConstraintFamily::rule1_2, ConstraintFamily::rule2_1,
    ConstraintFamily::rule2_2, ConstraintFamily::rule2_3, ConstraintFamily::rule3_1,
    ConstraintFamily::rule3_2, ConstraintFamily::rule3_3, ConstraintFamily::rule4_1,
    ConstraintFamily::rule4_2, ConstraintFamily::rule4_3,
};

std::string_view family_name(ConstraintFamily f);
/// Names of the tuple parameters of a family, in `ConstraintRecord::params` order.
std::vector<std::string_view> family_parameters(ConstraintFamily f);

/// One instantiated constraint, always in the form lhs <= rhs.
struct ConstraintRecord {
  ConstraintFamily family;
  std::vector<int> params;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;

  double slack() const { return rhs - lhs; }
  std::string describe() const;
};

struct FamilySummary {
  ConstraintFamily family;
  std::size_t tuples = 0;
  std::size_t failures = 0;
  double max_lhs = 0.0;
  double min_slack = 0.0;
};

struct ConstraintReport {
  std::vector<ConstraintRecord> records;
  bool pass = false;
  double max_lhs = 0.0;  // over branching families (rhs = 1)
  double tolerance = 0.0;

  std::vector<FamilySummary> summaries() const;
  /// Branching-family tuples whose |slack| is within the tolerance.
  std::vector<ConstraintRecord> tight(double within) const;
};

/// Instantiates every constraint family over its full parameter range.
ConstraintReport verify_weights(const Weights& weights, double tolerance = 1e-6);

/// -1 + x^-1 + sum_{i=3..k} (i-2) x^-i + sum_{i=k+1..2k-1} (2k-i) x^-i
double beta_polynomial(int k, double x);

/// Positive root of beta_polynomial(k, .), by bisection on [1, 2].
double beta_k(int k, double tolerance = 1e-10);

/// binom(2k-1, k)^(1/(2k-1)).
double lower_bound_base(int k);

inline constexpr double kRank2UpperBound = 1.4423;  // Moon-Moser bound
inline constexpr double kRank4UpperBound = 1.8863;  // iterative compression over rank 3

struct BoundsRow {
  int k = 0;
  double lower = 0.0;  // rounded down
  double upper = 0.0;  // rounded up
  int lower_decimals = 4;
  int upper_decimals = 4;
};

/// Rows for k = 2..k_max of the (lower, upper) growth bases for the maximum
/// number of minimal transversals of rank-k hypergraphs. Lower bounds are
/// rounded down and upper bounds up to 4 decimals; an upper bound so close to
/// 2 that 4 decimals would print 2.0000 keeps two significant digits of its
/// gap to 2.
std::vector<BoundsRow> bounds_table(int k_max);

double round_down(double x, int decimals);
double round_up(double x, int decimals);

}  // namespace mhs
