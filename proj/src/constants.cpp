#include "linkcube/constants.hpp"

#include <cmath>

#include "linkcube/geometry.hpp"
#include "linkcube/parallel.hpp"
#include "linkcube/stats.hpp"

namespace linkcube {
namespace {

constexpr std::uint64_t kBlock = 1 << 16;

// Stream tags so the five estimators never share a sample stream.
constexpr std::uint64_t kTagTriangles = 0x7472690000000001ULL;
constexpr std::uint64_t kTagS = 0x636f6e7300000001ULL;
constexpr std::uint64_t kTagU = 0x636f6e7300000002ULL;
constexpr std::uint64_t kTagV = 0x636f6e7300000003ULL;
constexpr std::uint64_t kTagW = 0x636f6e7300000004ULL;

Point3 draw_point(Pcg32& rng) {
  return {rng.uniform01(), rng.uniform01(), rng.uniform01()};
}

struct BernoulliAgg {
  std::uint64_t hits = 0;
  std::uint64_t resamples = 0;
  void merge(const BernoulliAgg& o) {
    hits += o.hits;
    resamples += o.resamples;
  }
};

struct ProductAgg {
  std::int64_t sum = 0;
  std::uint64_t sum_sq = 0;  // products are in {-1,0,1}
  std::uint64_t resamples = 0;
  void merge(const ProductAgg& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
    resamples += o.resamples;
  }
};

// Runs `eval` on fresh point configurations, redrawing the sample on
// degeneracy with a bumped attempt stream.
template <class Agg, class Eval>
Agg run_config_sampler(std::uint64_t samples, std::uint64_t sub_seed, unsigned threads,
                       Eval&& eval) {
  return blocked_reduce<Agg>(samples, kBlock, threads,
                             [&](Agg& agg, std::uint64_t first, std::uint64_t last) {
                               for (std::uint64_t i = first; i < last; ++i) {
                                 for (std::uint64_t attempt = 0;; ++attempt) {
                                   Pcg32 rng = sample_rng({sub_seed, i}, attempt);
                                   try {
                                     eval(agg, rng);
                                     break;
                                   } catch (const DegenerateProjection&) {
                                     ++agg.resamples;
                                   }
                                 }
                               }
                             });
}

ConstantEstimate product_estimate(std::string name, std::uint64_t samples,
                                  const ProductAgg& agg) {
  double n = static_cast<double>(samples);
  double mean = static_cast<double>(agg.sum) / n;
  double var = 0.0;
  if (samples > 1) {
    var = (static_cast<double>(agg.sum_sq) - n * mean * mean) / (n - 1.0);
    if (var < 0) var = 0;
  }
  ConstantEstimate est;
  est.name = std::move(name);
  est.value = mean;
  est.samples = samples;
  est.ci99_halfwidth = kZ99 * std::sqrt(var / n);
  est.resamples = agg.resamples;
  return est;
}

}  // namespace

ConstantEstimate estimate_q_triangles(std::uint64_t samples, std::uint64_t master_seed,
                                      unsigned threads) {
  const Direction& dir = Direction::plus_z();
  auto agg = run_config_sampler<BernoulliAgg>(
      samples, substream_seed(master_seed, kTagTriangles), threads,
      [&](BernoulliAgg& a, Pcg32& rng) {
        Point3 p[6];
        for (auto& q : p) q = draw_point(rng);
        int sum = 0;
        for (int i = 0; i < 3; ++i) {
          Segment ea{p[i], p[(i + 1) % 3]};
          for (int j = 0; j < 3; ++j) {
            sum += signed_crossing(ea, {p[3 + j], p[3 + (j + 1) % 3]}, dir);
          }
        }
        if (sum != 0 && sum != 2 && sum != -2)
          throw OddCrossingSum("two disjoint triangles must have |lk| <= 1");
        if (sum != 0) ++a.hits;
      });

  BernoulliCI ci = bernoulli_ci99(agg.hits, samples);
  ConstantEstimate est;
  est.name = "q";
  est.value = ci.estimate * (2.0 / 9.0);
  est.samples = samples;
  est.ci99_halfwidth = ci.ci99_halfwidth * (2.0 / 9.0);
  est.resamples = agg.resamples;
  return est;
}

ConstantEstimate estimate_s(std::uint64_t samples, std::uint64_t master_seed, unsigned threads) {
  const Direction& dir = Direction::plus_z();
  auto agg = run_config_sampler<BernoulliAgg>(
      samples, substream_seed(master_seed, kTagS), threads, [&](BernoulliAgg& a, Pcg32& rng) {
        Point3 p0 = draw_point(rng), p1 = draw_point(rng);
        Point3 p2 = draw_point(rng), p3 = draw_point(rng);
        if (signed_crossing({p0, p1}, {p2, p3}, dir) != 0) ++a.hits;
      });

  BernoulliCI ci = bernoulli_ci99(agg.hits, samples);
  ConstantEstimate est;
  est.name = "s";
  est.value = 0.5 * ci.estimate;
  est.samples = samples;
  est.ci99_halfwidth = 0.5 * ci.ci99_halfwidth;
  est.resamples = agg.resamples;
  return est;
}

ConstantEstimate estimate_u(std::uint64_t samples, std::uint64_t master_seed, unsigned threads) {
  const Direction& dir = Direction::plus_z();
  auto agg = run_config_sampler<ProductAgg>(
      samples, substream_seed(master_seed, kTagU), threads, [&](ProductAgg& a, Pcg32& rng) {
        Point3 s0 = draw_point(rng), s1 = draw_point(rng);  // l1 = l2
        Point3 c = draw_point(rng), d = draw_point(rng), e = draw_point(rng);
        int e1 = signed_crossing({s0, s1}, {c, d}, dir);
        int e2 = signed_crossing({s0, s1}, {d, e}, dir);
        int prod = e1 * e2;
        a.sum += prod;
        a.sum_sq += static_cast<std::uint64_t>(prod != 0);
      });
  return product_estimate("u", samples, agg);
}

ConstantEstimate estimate_v(std::uint64_t samples, std::uint64_t master_seed, unsigned threads) {
  const Direction& dir = Direction::plus_z();
  auto agg = run_config_sampler<ProductAgg>(
      samples, substream_seed(master_seed, kTagV), threads, [&](ProductAgg& a, Pcg32& rng) {
        Point3 a0 = draw_point(rng), a1 = draw_point(rng), a2 = draw_point(rng);
        Point3 b0 = draw_point(rng), b1 = draw_point(rng), b2 = draw_point(rng);
        int e1 = signed_crossing({a0, a1}, {b0, b1}, dir);
        int e2 = signed_crossing({a1, a2}, {b1, b2}, dir);
        int prod = e1 * e2;
        a.sum += prod;
        a.sum_sq += static_cast<std::uint64_t>(prod != 0);
      });
  return product_estimate("v", samples, agg);
}

ConstantEstimate estimate_w(std::uint64_t samples, std::uint64_t master_seed, unsigned threads) {
  const Direction& dir = Direction::plus_z();
  auto agg = run_config_sampler<ProductAgg>(
      samples, substream_seed(master_seed, kTagW), threads, [&](ProductAgg& a, Pcg32& rng) {
        Point3 p0 = draw_point(rng), p1 = draw_point(rng), p2 = draw_point(rng);
        Point3 p3 = draw_point(rng), p4 = draw_point(rng);
        int e1 = signed_crossing({p0, p1}, {p2, p3}, dir);
        int e2 = signed_crossing({p1, p2}, {p3, p4}, dir);
        int prod = e1 * e2;
        a.sum += prod;
        a.sum_sq += static_cast<std::uint64_t>(prod != 0);
      });
  return product_estimate("w", samples, agg);
}

ConstantEstimate derive_q(const ConstantEstimate& s, const ConstantEstimate& u,
                          const ConstantEstimate& v) {
  ConstantEstimate est;
  est.name = "q";
  est.value = s.value + 2.0 * (u.value + v.value);
  est.samples = std::min(s.samples, std::min(u.samples, v.samples));
  est.ci99_halfwidth = std::sqrt(s.ci99_halfwidth * s.ci99_halfwidth +
                                 4.0 * u.ci99_halfwidth * u.ci99_halfwidth +
                                 4.0 * v.ci99_halfwidth * v.ci99_halfwidth);
  est.resamples = s.resamples + u.resamples + v.resamples;
  est.sample_counts_differ = !(s.samples == u.samples && u.samples == v.samples);
  return est;
}

ConstantEstimate derive_qprime(const ConstantEstimate& s, const ConstantEstimate& u,
                               const ConstantEstimate& v, const ConstantEstimate& w) {
  ConstantEstimate est;
  est.name = "qprime";
  est.value = 3.0 * s.value + 2.0 * (2.0 * u.value + v.value + w.value);
  est.samples = std::min(std::min(s.samples, u.samples), std::min(v.samples, w.samples));
  est.ci99_halfwidth = std::sqrt(9.0 * s.ci99_halfwidth * s.ci99_halfwidth +
                                 16.0 * u.ci99_halfwidth * u.ci99_halfwidth +
                                 4.0 * v.ci99_halfwidth * v.ci99_halfwidth +
                                 4.0 * w.ci99_halfwidth * w.ci99_halfwidth);
  est.resamples = s.resamples + u.resamples + v.resamples + w.resamples;
  est.sample_counts_differ = !(s.samples == u.samples && u.samples == v.samples &&
                               v.samples == w.samples);
  return est;
}

}  // namespace linkcube
