#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "linkcube/geometry.hpp"
#include "linkcube/graph.hpp"
#include "linkcube/rng.hpp"

namespace linkcube {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_number(line) {}
  int line_number;
};
struct DuplicateEdge : ParseError {
  using ParseError::ParseError;
};
struct IndexOutOfRange : ParseError {
  using ParseError::ParseError;
};

struct LinearEmbedding {
  Graph graph;
  std::vector<Point3> coords;  // one per vertex

  bool in_unit_cube() const;
};

// One coordinate triple per vertex, i.i.d. uniform in (0,1), drawn from the
// stream of (seed, attempt).  General position is not enforced here; callers
// bump `attempt` when downstream predicates report a degeneracy.
LinearEmbedding sample_embedding(const Graph& g, const SeedSpec& seed, std::uint64_t attempt = 0);

// Plain-text embedding format:
//   line 1: n m
//   n lines: x y z
//   m lines: i j     (0-based, i < j)
// '#' starts a comment; blank lines are ignored.
LinearEmbedding load_embedding(std::istream& in);
LinearEmbedding load_embedding(const std::string& text);
std::string format_embedding(const LinearEmbedding& e);

}  // namespace linkcube
