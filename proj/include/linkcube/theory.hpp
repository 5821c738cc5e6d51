#pragma once

#include <optional>
#include <stdexcept>

namespace linkcube {

struct MissingQPrime : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct OutOfRange : std::domain_error {
  using std::domain_error::domain_error;
};

// Runtime constants for the closed forms.  The default q is the long-run
// triangle-route estimate; q' has no default and is required by the writhe
// formulas only.
struct TheoryParams {
  double q = 0.033867;
  std::optional<double> qprime;
};

// Mean squared linking number of disjoint uniform k- and l-cycles: k*l*q/2.
double expected_pair_sq_link(int k, int l, const TheoryParams& params);

// Mean sum of squared linking numbers over all disjoint cycle pairs of K_n:
// (q/16) * sum_{i=6}^{n} n!/(n-i)! (i-5).  Integer sums are exact; q scales
// at the end.
double expected_mean_sum_sq_link_complete(int n, const TheoryParams& params);

// Same for an (n,p)-graph: (q/16) * sum_{i=6}^{n} p^i n!/(n-i)! (i-5).
// p = 1 reduces to the complete-graph value.
double expected_mean_sum_sq_link_np(int n, double p, const TheoryParams& params);

// Sphere-averaged squared writhe of a uniform k-cycle: q k^2 - (6q - q') k.
// Reliable for k >= 6; reported but not certified below that.
double expected_mean_sq_writhe(int k, const TheoryParams& params);

// Sum over all cycles of K_n: sum_k (q k^2 - (6q-q') k) n!/((n-k)! 2k).
double expected_sum_sq_writhe_complete(int n, const TheoryParams& params);

// Probability that a linear embedding of K6 has exactly one Hopf link:
// (3 - 45q)/2.
double k6_p1(const TheoryParams& params);

// Lower bound for the one-nontrivial-link probability of K_{3,3,1}:
// (3 - 54q)/2.
double k331_p1_lower(const TheoryParams& params);

// Expected sum of squared linking numbers of K_{3,3,1}: 54q (nine (3,4)
// pairs at 6q each).
double k331_expected_sum(const TheoryParams& params);

}  // namespace linkcube
