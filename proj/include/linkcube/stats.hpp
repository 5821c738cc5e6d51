#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace linkcube {

// Two-sided 99% normal quantile.
inline constexpr double kZ99 = 2.5758293035489004;

struct InsufficientSamples : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Streaming mean/variance (Welford update, Chan merge).  Merge is associative
// up to floating-point roundoff; callers that need bit-reproducible results
// must merge in a fixed order.
struct RunningMoments {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x) {
    ++count;
    double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const RunningMoments& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    double n1 = static_cast<double>(count);
    double n2 = static_cast<double>(o.count);
    double delta = o.mean - mean;
    double n = n1 + n2;
    mean += delta * (n2 / n);
    m2 += o.m2 + delta * delta * (n1 * n2 / n);
    count += o.count;
  }

  // Sample variance (n-1 denominator).
  double variance() const {
    if (count < 2) throw InsufficientSamples("variance needs >= 2 samples");
    return m2 / static_cast<double>(count - 1);
  }

  double stderr_of_mean() const {
    return std::sqrt(variance() / static_cast<double>(count));
  }
};

struct BernoulliCI {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double estimate = 0.0;
  double ci99_halfwidth = 0.0;
};

// Normal-approximation 99% half-width.  Degenerates to width 0 at p in {0,1}.
inline BernoulliCI bernoulli_ci99(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) throw InsufficientSamples("bernoulli_ci99 needs >= 1 trial");
  double p = static_cast<double>(successes) / static_cast<double>(trials);
  double hw = kZ99 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  return BernoulliCI{successes, trials, p, hw};
}

}  // namespace linkcube
