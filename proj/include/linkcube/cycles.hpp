#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "linkcube/biguint.hpp"
#include "linkcube/graph.hpp"

namespace linkcube {

// Canonical form: minimum vertex first, then its smaller cycle-neighbor, so
// each undirected simple cycle has exactly one representative.
using Cycle = std::vector<int>;

struct CyclePair {
  Cycle first;   // contains the smaller minimum vertex
  Cycle second;
};

struct EnumerationLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Backtracking enumeration over the vertices selected by `allowed`, rooted at
// each cycle's minimum vertex.  Paths extend only through vertices greater
// than the root; a cycle is emitted when the tip closes back to the root and
// path[1] < tip fixes the traversal direction.  Visitors receive the cycle as
// a span over the live path buffer.
template <class Visit>
class CycleEnumerator {
 public:
  CycleEnumerator(const Graph& g, int min_len, int max_len, Visit& visit)
      : g_(g), min_len_(min_len), max_len_(max_len), visit_(visit) {
    if (g.vertex_count() > 64)
      throw EnumerationLimit("cycle enumeration supports at most 64 vertices");
    path_.reserve(static_cast<std::size_t>(max_len));
  }

  void run(std::uint64_t allowed, int min_root) {
    int n = g_.vertex_count();
    for (int root = min_root; root < n; ++root) {
      if (!(allowed >> root & 1)) continue;
      allowed_ = allowed;
      root_ = root;
      path_.assign(1, root);
      on_path_ = std::uint64_t{1} << root;
      extend(root);
    }
  }

 private:
  void extend(int v) {
    int len = static_cast<int>(path_.size());
    for (int nb : g_.neighbors(v)) {
      if (nb <= root_) {
        // Closing edge back to the root; direction rule kills the mirror copy.
        if (nb == root_ && len >= min_len_ && path_[1] < v) {
          visit_(std::span<const int>(path_));
        }
        continue;
      }
      if (!(allowed_ >> nb & 1) || (on_path_ >> nb & 1)) continue;
      if (len == max_len_) continue;
      path_.push_back(nb);
      on_path_ |= std::uint64_t{1} << nb;
      extend(nb);
      on_path_ &= ~(std::uint64_t{1} << nb);
      path_.pop_back();
    }
  }

  const Graph& g_;
  int min_len_, max_len_;
  Visit& visit_;
  std::uint64_t allowed_ = 0, on_path_ = 0;
  int root_ = 0;
  std::vector<int> path_;
};

inline std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace detail

// Streams every simple cycle with length in [min_len, max_len] exactly once,
// in canonical form.
template <class Visit>
void enumerate_cycles(const Graph& g, int min_len, int max_len, Visit&& visit) {
  if (min_len < 3 || min_len > max_len) throw std::invalid_argument("bad cycle length range");
  detail::CycleEnumerator<Visit> e(g, min_len, max_len, visit);
  e.run(detail::full_mask(g.vertex_count()), 0);
}

// Streams every unordered pair of vertex-disjoint cycles exactly once; the
// first cycle of each pair is the one with the smaller minimum vertex.
template <class Visit>
void enumerate_disjoint_pairs(const Graph& g, Visit&& visit) {
  int n = g.vertex_count();
  std::uint64_t all = detail::full_mask(n);
  auto outer = [&](std::span<const int> first) {
    std::uint64_t used = 0;
    for (int v : first) used |= std::uint64_t{1} << v;
    auto inner = [&](std::span<const int> second) { visit(first, second); };
    detail::CycleEnumerator<decltype(inner)> e(g, 3, n, inner);
    e.run(all & ~used, first[0] + 1);
  };
  detail::CycleEnumerator<decltype(outer)> e(g, 3, n, outer);
  e.run(all, 0);
}

// n!/((n-k)! * 2k): simple cycles of length k in the complete graph K_n.
BigUint count_cycles_closed_form(int n, int k);

// C(n,k) C(n-k,l) (k-1)!/2 (l-1)!/2, halved when k == l: unordered disjoint
// (k,l)-cycle pairs in K_n.
BigUint count_pairs_closed_form(int n, int k, int l);

// lhs = sum_{k=3}^{n-3} sum_{l=3}^{n-k} n!/(n-k-l)!
// rhs = sum_{i=6}^{n} n!/(n-i)! (i-5)
// Equal for every n >= 6: both count ordered disjoint (>=3,>=3) selections.
std::pair<BigUint, BigUint> counting_identity(int n);

}  // namespace linkcube
