#pragma once

#include <cstdint>
#include <string>

#include "linkcube/rng.hpp"

namespace linkcube {

struct ConstantEstimate {
  std::string name;
  double value = 0.0;
  std::uint64_t samples = 0;
  double ci99_halfwidth = 0.0;
  std::uint64_t resamples = 0;          // degenerate configurations redrawn
  bool sample_counts_differ = false;    // set by derive_* when inputs mismatch
};

// Triangle route: two disjoint triangles on 6 uniform points are linked with
// probability 18q/4, so q = (2/9) * P(linked).
ConstantEstimate estimate_q_triangles(std::uint64_t samples, std::uint64_t master_seed,
                                      unsigned threads = 1);

// Configuration routes.  All crossings are taken along +z; consecutive path
// edges are oriented head-to-tail.
//   s: half the probability that two disjoint segments (4 points) cross.
//   u: E[e1*e2], one segment against both edges of a 2-edge path (5 points).
//   v: E[e1*e2], first-with-first and second-with-second edges of two
//      disjoint 2-edge paths (6 points).
//   w: E[e1*e2] over four consecutive path edges a,b,c,d (5 points), pairing
//      the only disjoint edges: e1 = (a,c), e2 = (b,d).
ConstantEstimate estimate_s(std::uint64_t samples, std::uint64_t master_seed,
                            unsigned threads = 1);
ConstantEstimate estimate_u(std::uint64_t samples, std::uint64_t master_seed,
                            unsigned threads = 1);
ConstantEstimate estimate_v(std::uint64_t samples, std::uint64_t master_seed,
                            unsigned threads = 1);
ConstantEstimate estimate_w(std::uint64_t samples, std::uint64_t master_seed,
                            unsigned threads = 1);

// q = s + 2(u + v); q' = 3s + 2(2u + v + w).  Half-widths combine in
// quadrature with the same coefficients; inputs must come from independent
// streams.
ConstantEstimate derive_q(const ConstantEstimate& s, const ConstantEstimate& u,
                          const ConstantEstimate& v);
ConstantEstimate derive_qprime(const ConstantEstimate& s, const ConstantEstimate& u,
                               const ConstantEstimate& v, const ConstantEstimate& w);

}  // namespace linkcube
