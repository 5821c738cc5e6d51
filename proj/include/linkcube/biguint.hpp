#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace linkcube {

// Minimal arbitrary-precision unsigned integer: enough for exact factorial
// sums and pair counts (n! no longer fits in 64 bits at n = 21).
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v);  // NOLINT(google-explicit-constructor)

  BigUint& operator+=(const BigUint& o);
  BigUint& operator*=(std::uint64_t m);
  BigUint operator*(const BigUint& o) const;

  // Division by a small divisor; asserts the division is exact.
  BigUint& div_exact(std::uint64_t d);

  bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
  bool operator!=(const BigUint& o) const { return limbs_ != o.limbs_; }
  bool operator<(const BigUint& o) const;

  bool is_zero() const { return limbs_.empty(); }
  double to_double() const;
  std::string to_string() const;

  static BigUint factorial(unsigned n);
  // n * (n-1) * ... * (n-k+1); 1 when k == 0.
  static BigUint falling_factorial(unsigned n, unsigned k);
  static BigUint binomial(unsigned n, unsigned k);

 private:
  void trim();
  // Remainder of division by d, quotient stored in place.
  std::uint64_t divmod_small(std::uint64_t d);

  std::vector<std::uint64_t> limbs_;  // little-endian base 2^64, no trailing zeros
};

inline BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
inline BigUint operator*(BigUint a, std::uint64_t m) { return a *= m; }

}  // namespace linkcube
