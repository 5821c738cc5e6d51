#include "linkcube/theory.hpp"

#include <cmath>

#include "linkcube/biguint.hpp"
#include "linkcube/cycles.hpp"

namespace linkcube {

double expected_pair_sq_link(int k, int l, const TheoryParams& params) {
  if (k < 3 || l < 3) throw std::invalid_argument("cycle lengths must be >= 3");
  return 0.5 * static_cast<double>(k) * static_cast<double>(l) * params.q;
}

double expected_mean_sum_sq_link_complete(int n, const TheoryParams& params) {
  if (n < 6) throw std::invalid_argument("need n >= 6");
  BigUint sum(0);
  for (int i = 6; i <= n; ++i) {
    BigUint term = BigUint::falling_factorial(static_cast<unsigned>(n), static_cast<unsigned>(i));
    term *= static_cast<std::uint64_t>(i - 5);
    sum += term;
  }
  return params.q / 16.0 * sum.to_double();
}

double expected_mean_sum_sq_link_np(int n, double p, const TheoryParams& params) {
  if (n < 6) throw std::invalid_argument("need n >= 6");
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("need p in (0,1]");
  double sum = 0.0;
  for (int i = 6; i <= n; ++i) {
    double ff =
        BigUint::falling_factorial(static_cast<unsigned>(n), static_cast<unsigned>(i)).to_double();
    sum += std::pow(p, i) * ff * static_cast<double>(i - 5);
  }
  return params.q / 16.0 * sum;
}

double expected_mean_sq_writhe(int k, const TheoryParams& params) {
  if (k < 3) throw std::invalid_argument("need k >= 3");
  if (!params.qprime) throw MissingQPrime("q' required for writhe formulas");
  double kk = static_cast<double>(k);
  return params.q * kk * kk - (6.0 * params.q - *params.qprime) * kk;
}

double expected_sum_sq_writhe_complete(int n, const TheoryParams& params) {
  if (n < 3) throw std::invalid_argument("need n >= 3");
  if (!params.qprime) throw MissingQPrime("q' required for writhe formulas");
  // sum_k k^2 count(n,k) and sum_k k count(n,k), exactly.
  BigUint quad(0), lin(0);
  for (int k = 3; k <= n; ++k) {
    BigUint c = count_cycles_closed_form(n, k);
    BigUint ck = c * static_cast<std::uint64_t>(k);
    lin += ck;
    quad += ck * static_cast<std::uint64_t>(k);
  }
  return params.q * quad.to_double() - (6.0 * params.q - *params.qprime) * lin.to_double();
}

double k6_p1(const TheoryParams& params) {
  double p1 = (3.0 - 45.0 * params.q) / 2.0;
  if (p1 < 0.0 || p1 > 1.0) throw OutOfRange("k6_p1 outside [0,1]");
  return p1;
}

double k331_p1_lower(const TheoryParams& params) {
  double p1 = (3.0 - 54.0 * params.q) / 2.0;
  if (p1 < 0.0 || p1 > 1.0) throw OutOfRange("k331_p1_lower outside [0,1]");
  return p1;
}

double k331_expected_sum(const TheoryParams& params) { return 54.0 * params.q; }

}  // namespace linkcube
