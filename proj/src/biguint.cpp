#include "linkcube/biguint.hpp"

#include <cmath>
#include <stdexcept>

namespace linkcube {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigUint::BigUint(u64 v) {
  if (v != 0) limbs_.push_back(v);
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& o) {
  if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
  u64 carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    u128 s = static_cast<u128>(limbs_[i]) + carry;
    if (i < o.limbs_.size()) s += o.limbs_[i];
    limbs_[i] = static_cast<u64>(s);
    carry = static_cast<u64>(s >> 64);
  }
  if (carry) limbs_.push_back(carry);
  return *this;
}

BigUint& BigUint::operator*=(u64 m) {
  if (m == 0 || limbs_.empty()) {
    limbs_.clear();
    return *this;
  }
  u64 carry = 0;
  for (auto& limb : limbs_) {
    u128 p = static_cast<u128>(limb) * m + carry;
    limb = static_cast<u64>(p);
    carry = static_cast<u64>(p >> 64);
  }
  if (carry) limbs_.push_back(carry);
  return *this;
}

BigUint BigUint::operator*(const BigUint& o) const {
  BigUint r;
  if (limbs_.empty() || o.limbs_.empty()) return r;
  r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    u64 carry = 0;
    for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
      u128 p = static_cast<u128>(limbs_[i]) * o.limbs_[j] + r.limbs_[i + j] + carry;
      r.limbs_[i + j] = static_cast<u64>(p);
      carry = static_cast<u64>(p >> 64);
    }
    r.limbs_[i + o.limbs_.size()] += carry;
  }
  r.trim();
  return r;
}

u64 BigUint::divmod_small(u64 d) {
  if (d == 0) throw std::domain_error("BigUint: division by zero");
  u128 rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    u128 cur = (rem << 64) | limbs_[i];
    limbs_[i] = static_cast<u64>(cur / d);
    rem = cur % d;
  }
  trim();
  return static_cast<u64>(rem);
}

BigUint& BigUint::div_exact(u64 d) {
  u64 rem = divmod_small(d);
  if (rem != 0) throw std::logic_error("BigUint::div_exact: inexact division");
  return *this;
}

bool BigUint::operator<(const BigUint& o) const {
  if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i];
  }
  return false;
}

double BigUint::to_double() const {
  double v = 0.0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    v = v * 18446744073709551616.0 + static_cast<double>(limbs_[i]);
  }
  return v;
}

std::string BigUint::to_string() const {
  if (limbs_.empty()) return "0";
  BigUint tmp = *this;
  std::string out;
  while (!tmp.limbs_.empty()) {
    u64 chunk = tmp.divmod_small(1000000000000000000ULL);
    std::string part = std::to_string(chunk);
    if (tmp.limbs_.empty()) {
      out = part + out;
    } else {
      out = std::string(18 - part.size(), '0') + part + out;
    }
  }
  return out;
}

BigUint BigUint::factorial(unsigned n) { return falling_factorial(n, n); }

BigUint BigUint::falling_factorial(unsigned n, unsigned k) {
  if (k > n) return BigUint(0);
  BigUint r(1);
  for (unsigned i = 0; i < k; ++i) r *= (n - i);
  return r;
}

BigUint BigUint::binomial(unsigned n, unsigned k) {
  if (k > n) return BigUint(0);
  if (k > n - k) k = n - k;
  BigUint r(1);
  for (unsigned i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r.div_exact(i);  // each prefix is itself a binomial coefficient
  }
  return r;
}

}  // namespace linkcube
