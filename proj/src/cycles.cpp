#include "linkcube/cycles.hpp"

namespace linkcube {

BigUint count_cycles_closed_form(int n, int k) {
  if (k < 3 || k > n) throw std::invalid_argument("count_cycles_closed_form: need 3 <= k <= n");
  BigUint r = BigUint::falling_factorial(static_cast<unsigned>(n), static_cast<unsigned>(k));
  r.div_exact(2u * static_cast<unsigned>(k));
  return r;
}

BigUint count_pairs_closed_form(int n, int k, int l) {
  if (k < 3 || l < 3 || k + l > n)
    throw std::invalid_argument("count_pairs_closed_form: need k,l >= 3 and k+l <= n");
  BigUint r = BigUint::binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) *
              BigUint::binomial(static_cast<unsigned>(n - k), static_cast<unsigned>(l));
  r = r * BigUint::factorial(static_cast<unsigned>(k - 1));
  r = r * BigUint::factorial(static_cast<unsigned>(l - 1));
  r.div_exact(4);
  if (k == l) r.div_exact(2);
  return r;
}

std::pair<BigUint, BigUint> counting_identity(int n) {
  if (n < 6) throw std::invalid_argument("counting_identity: need n >= 6");
  BigUint lhs(0), rhs(0);
  for (int k = 3; k <= n - 3; ++k)
    for (int l = 3; l <= n - k; ++l)
      lhs += BigUint::falling_factorial(static_cast<unsigned>(n), static_cast<unsigned>(k + l));
  for (int i = 6; i <= n; ++i) {
    BigUint term =
        BigUint::falling_factorial(static_cast<unsigned>(n), static_cast<unsigned>(i));
    term *= static_cast<std::uint64_t>(i - 5);
    rhs += term;
  }
  return {lhs, rhs};
}

}  // namespace linkcube
