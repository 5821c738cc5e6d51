#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "linkcube/cycles.hpp"
#include "linkcube/embedding.hpp"
#include "linkcube/geometry.hpp"
#include "linkcube/stats.hpp"

namespace linkcube {

struct NoPairs : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A sampled embedding violating a proven census is a geometry bug, never a
// statistical fluctuation; callers fail loudly.
struct CensusViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Per-embedding tally of |lk| over all disjoint cycle pairs.
struct LinkTally {
  std::vector<std::uint64_t> count_by_abs_lk;  // index |lk|
  std::uint64_t total_pairs = 0;
  std::uint64_t sum_sq = 0;
  std::uint64_t sum_abs = 0;

  void add(int lk) {
    std::uint64_t a = static_cast<std::uint64_t>(lk < 0 ? -lk : lk);
    if (a >= count_by_abs_lk.size()) count_by_abs_lk.resize(a + 1, 0);
    ++count_by_abs_lk[a];
    ++total_pairs;
    sum_sq += a * a;
    sum_abs += a;
  }

  std::uint64_t count(std::size_t abs_lk) const {
    return abs_lk < count_by_abs_lk.size() ? count_by_abs_lk[abs_lk] : 0;
  }
  std::uint64_t nontrivial_pairs() const { return total_pairs - count(0); }
};

// Linking numbers of every disjoint cycle pair along +z.  Signed crossings
// are precomputed once per disjoint edge pair; each cycle pair is then an
// O(k*l) table walk.  DegenerateProjection aborts the whole embedding.
LinkTally link_tally(const LinearEmbedding& e);

// Mergeable per-sample statistics over LinkTally streams.
class LinkStatsAccumulator {
 public:
  void push(const LinkTally& t);
  void merge(const LinkStatsAccumulator& o);

  std::uint64_t samples() const { return sum_sq_.count; }

  // Mean and standard error of the per-embedding sum of squared linking
  // numbers; needs >= 2 samples.
  std::pair<double, double> mean_sum_sq() const;

  // (mean average squared, mean average absolute) linking number, averaged
  // per embedding over its pairs, then over embeddings with >= 1 pair.
  std::pair<double, double> mean_average() const;

  // Pooled proportion of pairs attaining each |lk| across all samples.
  std::vector<double> proportion_by_lk() const;

  std::uint64_t pooled_pairs() const { return pooled_pairs_; }

 private:
  RunningMoments sum_sq_;
  RunningMoments avg_sq_;
  RunningMoments avg_abs_;
  std::vector<std::uint64_t> pooled_counts_;
  std::uint64_t pooled_pairs_ = 0;
};

struct WritheEstimate {
  int length = 0;
  double mean_sq = 0.0;       // average of squared directional writhe
  int directions = 0;
  std::uint64_t retries = 0;  // degenerate directions redrawn
};

// Monte Carlo estimate of the sphere-averaged squared writhe of one polygon:
// squared directional writhe averaged over `directions` uniform directions.
WritheEstimate mean_squared_writhe(std::span<const Point3> poly, int directions, Pcg32& rng);

// Sum of mean_squared_writhe estimates over every cycle of the embedding.
double sum_sq_writhe(const LinearEmbedding& e, int directions, Pcg32& rng,
                     std::uint64_t* retries = nullptr);

// Census checks (throw CensusViolation with the tally spelled out).
// K6: exactly 10 pairs, all |lk| <= 1, nontrivial count 1 or 3.
void check_k6_census(const LinkTally& t);
// K_{3,3,1}: exactly 9 pairs, 1..5 nontrivial, all |lk| <= 2; an even
// nontrivial count has exactly one |lk| = 2, an odd count has none.
void check_k331_census(const LinkTally& t);

}  // namespace linkcube
