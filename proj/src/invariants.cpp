#include "linkcube/invariants.hpp"

#include <string>

namespace linkcube {

LinkTally link_tally(const LinearEmbedding& e) {
  const Graph& g = e.graph;
  const auto& edges = g.edges();
  const auto& pts = e.coords;
  std::size_t m = edges.size();
  const Direction& dir = Direction::plus_z();

  // eps[a*m+b]: signed crossing of edges a, b taken low->high vertex; only
  // vertex-disjoint pairs are filled (others never appear in disjoint cycles).
  std::vector<signed char> eps(m * m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    auto [a0, a1] = edges[a];
    Segment sa{pts[a0], pts[a1]};
    for (std::size_t b = a + 1; b < m; ++b) {
      auto [b0, b1] = edges[b];
      if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1) continue;
      int v;
      try {
        v = signed_crossing(sa, Segment{pts[b0], pts[b1]}, dir);
      } catch (const DegenerateProjection&) {
        throw DegenerateProjection("degenerate projection for edge pair (" +
                                   std::to_string(a0) + "," + std::to_string(a1) + ")x(" +
                                   std::to_string(b0) + "," + std::to_string(b1) + ")");
      }
      eps[a * m + b] = static_cast<signed char>(v);
      eps[b * m + a] = static_cast<signed char>(v);
    }
  }

  LinkTally tally;
  enumerate_disjoint_pairs(g, [&](std::span<const int> c1, std::span<const int> c2) {
    int sum = 0;
    std::size_t k = c1.size(), l = c2.size();
    for (std::size_t i = 0; i < k; ++i) {
      int u = c1[i], v = c1[(i + 1) % k];
      int ea = g.edge_index(u, v);
      int s1 = u < v ? 1 : -1;
      const signed char* row = eps.data() + static_cast<std::size_t>(ea) * m;
      for (std::size_t j = 0; j < l; ++j) {
        int p = c2[j], q = c2[(j + 1) % l];
        int s2 = p < q ? 1 : -1;
        sum += s1 * s2 * row[g.edge_index(p, q)];
      }
    }
    if (sum % 2 != 0) throw OddCrossingSum("odd crossing sum in link tally");
    tally.add(sum / 2);
  });
  return tally;
}

void LinkStatsAccumulator::push(const LinkTally& t) {
  sum_sq_.push(static_cast<double>(t.sum_sq));
  if (t.total_pairs > 0) {
    double pairs = static_cast<double>(t.total_pairs);
    avg_sq_.push(static_cast<double>(t.sum_sq) / pairs);
    avg_abs_.push(static_cast<double>(t.sum_abs) / pairs);
  }
  if (t.count_by_abs_lk.size() > pooled_counts_.size())
    pooled_counts_.resize(t.count_by_abs_lk.size(), 0);
  for (std::size_t i = 0; i < t.count_by_abs_lk.size(); ++i)
    pooled_counts_[i] += t.count_by_abs_lk[i];
  pooled_pairs_ += t.total_pairs;
}

void LinkStatsAccumulator::merge(const LinkStatsAccumulator& o) {
  sum_sq_.merge(o.sum_sq_);
  avg_sq_.merge(o.avg_sq_);
  avg_abs_.merge(o.avg_abs_);
  if (o.pooled_counts_.size() > pooled_counts_.size())
    pooled_counts_.resize(o.pooled_counts_.size(), 0);
  for (std::size_t i = 0; i < o.pooled_counts_.size(); ++i)
    pooled_counts_[i] += o.pooled_counts_[i];
  pooled_pairs_ += o.pooled_pairs_;
}

std::pair<double, double> LinkStatsAccumulator::mean_sum_sq() const {
  if (sum_sq_.count < 2) throw InsufficientSamples("mean_sum_sq needs >= 2 samples");
  return {sum_sq_.mean, sum_sq_.stderr_of_mean()};
}

std::pair<double, double> LinkStatsAccumulator::mean_average() const {
  if (avg_sq_.count == 0) throw NoPairs("no sample contained a disjoint cycle pair");
  return {avg_sq_.mean, avg_abs_.mean};
}

std::vector<double> LinkStatsAccumulator::proportion_by_lk() const {
  if (pooled_pairs_ == 0) throw NoPairs("no pairs pooled");
  std::vector<double> out(pooled_counts_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<double>(pooled_counts_[i]) / static_cast<double>(pooled_pairs_);
  return out;
}

WritheEstimate mean_squared_writhe(std::span<const Point3> poly, int directions, Pcg32& rng) {
  if (directions < 1) throw std::invalid_argument("mean_squared_writhe: directions >= 1");
  WritheEstimate est;
  est.length = static_cast<int>(poly.size());
  est.directions = directions;
  double acc = 0.0;
  for (int d = 0; d < directions; ++d) {
    for (;;) {
      Direction dir = sample_direction(rng);
      try {
        double w = static_cast<double>(directional_writhe(poly, dir));
        acc += w * w;
        break;
      } catch (const DegenerateProjection&) {
        if (++est.retries > 1000000)
          throw DegenerateProjection("polygon degenerate in every sampled direction");
      }
    }
  }
  est.mean_sq = acc / static_cast<double>(directions);
  return est;
}

double sum_sq_writhe(const LinearEmbedding& e, int directions, Pcg32& rng,
                     std::uint64_t* retries) {
  double total = 0.0;
  std::vector<Point3> poly;
  enumerate_cycles(e.graph, 3, e.graph.vertex_count(), [&](std::span<const int> c) {
    poly.clear();
    for (int v : c) poly.push_back(e.coords[v]);
    WritheEstimate est = mean_squared_writhe(poly, directions, rng);
    total += est.mean_sq;
    if (retries) *retries += est.retries;
  });
  return total;
}

namespace {

std::string tally_summary(const LinkTally& t) {
  std::string s = "pairs=" + std::to_string(t.total_pairs) +
                  " sum_sq=" + std::to_string(t.sum_sq) + " counts=[";
  for (std::size_t i = 0; i < t.count_by_abs_lk.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t.count_by_abs_lk[i]);
  }
  return s + "]";
}

}  // namespace

void check_k6_census(const LinkTally& t) {
  bool ok = t.total_pairs == 10 && t.count_by_abs_lk.size() <= 2;
  std::uint64_t nontrivial = t.nontrivial_pairs();
  ok = ok && (nontrivial == 1 || nontrivial == 3);
  if (!ok) throw CensusViolation("K6 census violated: " + tally_summary(t));
}

void check_k331_census(const LinkTally& t) {
  std::uint64_t nontrivial = t.nontrivial_pairs();
  bool ok = t.total_pairs == 9 && t.count_by_abs_lk.size() <= 3;
  ok = ok && nontrivial >= 1 && nontrivial <= 5;
  if (ok) {
    std::uint64_t torus = t.count(2);
    ok = nontrivial % 2 == 0 ? torus == 1 : torus == 0;
  }
  if (!ok) throw CensusViolation("K331 census violated: " + tally_summary(t));
}

}  // namespace linkcube
