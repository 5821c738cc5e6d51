#include "linkcube/embedding.hpp"

#include <cstdio>
#include <istream>
#include <sstream>

namespace linkcube {

bool LinearEmbedding::in_unit_cube() const {
  for (const auto& p : coords) {
    if (p.x < 0 || p.x > 1 || p.y < 0 || p.y > 1 || p.z < 0 || p.z > 1) return false;
  }
  return true;
}

LinearEmbedding sample_embedding(const Graph& g, const SeedSpec& seed, std::uint64_t attempt) {
  Pcg32 rng = sample_rng(seed, attempt);
  std::vector<Point3> coords(g.vertex_count());
  for (auto& p : coords) {
    p.x = rng.uniform01();
    p.y = rng.uniform01();
    p.z = rng.uniform01();
  }
  return LinearEmbedding{g, std::move(coords)};
}

namespace {

// Strips comments, skips blank lines, tracks the source line number.
bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

LinearEmbedding load_embedding(std::istream& in) {
  std::string line;
  int line_no = 0;

  if (!next_content_line(in, line, line_no)) throw ParseError("missing header", line_no);
  long n = 0, m = 0;
  {
    std::istringstream ss(line);
    if (!(ss >> n >> m) || n < 1 || m < 0) throw ParseError("bad header 'n m'", line_no);
  }

  std::vector<Point3> coords(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    if (!next_content_line(in, line, line_no))
      throw ParseError("expected vertex coordinates", line_no);
    std::istringstream ss(line);
    if (!(ss >> coords[i].x >> coords[i].y >> coords[i].z))
      throw ParseError("bad coordinate line", line_no);
    if (!std::isfinite(coords[i].x) || !std::isfinite(coords[i].y) || !std::isfinite(coords[i].z))
      throw ParseError("non-finite coordinate", line_no);
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long e = 0; e < m; ++e) {
    if (!next_content_line(in, line, line_no)) throw ParseError("expected edge line", line_no);
    std::istringstream ss(line);
    long i = 0, j = 0;
    if (!(ss >> i >> j)) throw ParseError("bad edge line", line_no);
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw IndexOutOfRange("edge index out of range", line_no);
    if (i == j) throw ParseError("self-loop edge", line_no);
    if (i > j) std::swap(i, j);
    edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DuplicateEdge("duplicate edge", line_no);

  Graph g = Graph::from_edges(static_cast<int>(n), std::move(edges));
  return LinearEmbedding{std::move(g), std::move(coords)};
}

LinearEmbedding load_embedding(const std::string& text) {
  std::istringstream ss(text);
  return load_embedding(ss);
}

std::string format_embedding(const LinearEmbedding& e) {
  std::ostringstream out;
  out << e.graph.vertex_count() << ' ' << e.graph.edge_count() << '\n';
  char buf[96];
  for (const auto& p : e.coords) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", p.x, p.y, p.z);
    out << buf;
  }
  for (const auto& [i, j] : e.graph.edges()) out << i << ' ' << j << '\n';
  return out.str();
}

}  // namespace linkcube
