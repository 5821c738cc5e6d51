// linkcube CLI: samples random straight-line graph embeddings in the unit
// cube, tallies linking numbers and writhes over all cycles, estimates the
// crossing-product constants q and q', and evaluates the matching closed
// forms.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "linkcube/constants.hpp"
#include "linkcube/cycles.hpp"
#include "linkcube/embedding.hpp"
#include "linkcube/geometry.hpp"
#include "linkcube/invariants.hpp"
#include "linkcube/parallel.hpp"
#include "linkcube/stats.hpp"
#include "linkcube/theory.hpp"

using json = nlohmann::ordered_json;
using namespace linkcube;

namespace {

constexpr std::uint64_t kTagGraph = 0x677261706800ULL;
constexpr std::uint64_t kTagCoords = 0x636f6f726400ULL;
constexpr std::uint64_t kTagWrithe = 0x777269746800ULL;
constexpr std::uint64_t kSimBlock = 16;
constexpr int kEnumCap = 12;  // full pair enumeration beyond this needs --allow-large-n

int g_exit_code = 0;

struct CommonOpts {
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0 = hardware
  std::string format = "csv";
  std::string out_path;
  bool timing = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--seed", c.seed, "master seed");
  cmd->add_option("--threads", c.threads, "worker threads (0 = hardware)");
  cmd->add_option("--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", c.out_path, "write output to file instead of stdout");
  cmd->add_flag("--timing", c.timing, "fill the wall_ms column (off by default so "
                                      "identical runs are byte-identical)");
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// Rows carry typed json values; CSV rendering stringifies them.
struct Report {
  json config = json::object();
  std::vector<std::string> columns;
  std::vector<json> rows;

  json& add_row() {
    rows.emplace_back(json::object());
    return rows.back();
  }

  void emit(const CommonOpts& c) const {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!c.out_path.empty()) {
      file.open(c.out_path);
      if (!file) throw std::runtime_error("cannot open output file: " + c.out_path);
      os = &file;
    }
    if (c.format == "json") {
      json doc;
      doc["config"] = config;
      doc["rows"] = rows;
      *os << doc.dump(2) << '\n';
      return;
    }
    for (std::size_t i = 0; i < columns.size(); ++i)
      *os << (i ? "," : "") << columns[i];
    *os << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) *os << ',';
        if (!row.contains(columns[i])) continue;
        const json& v = row[columns[i]];
        if (v.is_string())
          *os << v.get<std::string>();
        else if (v.is_number_float())
          *os << fmt_double(v.get<double>());
        else
          *os << v.dump();
      }
      *os << '\n';
    }
  }
};

class WallClock {
 public:
  explicit WallClock(bool enabled) : enabled_(enabled), start_(clock::now()) {}
  std::int64_t ms() const {
    if (!enabled_) return 0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  bool enabled_;
  clock::time_point start_;
};

struct Range {
  int lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
  Range r;
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, dots));
      r.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n", "expected an integer or lo..hi range");
  }
  if (r.lo > r.hi) throw CLI::ValidationError("--n", "range lo exceeds hi");
  return r;
}

json estimate_to_row(const ConstantEstimate& e, std::uint64_t seed, std::int64_t wall_ms) {
  json row;
  row["name"] = e.name;
  row["estimate"] = e.value;
  row["ci99_halfwidth"] = e.ci99_halfwidth;
  row["samples"] = e.samples;
  row["resamples"] = e.resamples;
  row["seed"] = seed;
  row["wall_ms"] = wall_ms;
  return row;
}

// ---------------------------------------------------------------- estimate-q

struct EstimateQOpts {
  CommonOpts common;
  std::uint64_t samples = 10000000;
  std::string method = "triangles";
};

int cmd_estimate_q(const EstimateQOpts& o) {
  WallClock clock(o.common.timing);
  Report rep;
  rep.columns = {"name", "estimate", "ci99_halfwidth", "samples", "resamples", "seed", "wall_ms"};
  rep.config = {{"command", "estimate-q"}, {"samples", o.samples},
                {"seed", o.common.seed},  {"threads", o.common.threads},
                {"method", o.method}};

  std::optional<ConstantEstimate> tri, cfg;
  if (o.method == "triangles" || o.method == "both")
    tri = estimate_q_triangles(o.samples, o.common.seed, o.common.threads);
  if (o.method == "configs" || o.method == "both") {
    ConstantEstimate s = estimate_s(o.samples, o.common.seed, o.common.threads);
    ConstantEstimate u = estimate_u(o.samples, o.common.seed, o.common.threads);
    ConstantEstimate v = estimate_v(o.samples, o.common.seed, o.common.threads);
    cfg = derive_q(s, u, v);
    for (const auto& e : {s, u, v})
      rep.rows.push_back(estimate_to_row(e, o.common.seed, clock.ms()));
  }
  if (tri) {
    ConstantEstimate e = *tri;
    e.name = o.method == "both" ? "q_triangles" : "q";
    rep.rows.insert(rep.rows.begin(), estimate_to_row(e, o.common.seed, clock.ms()));
  }
  if (cfg) {
    ConstantEstimate e = *cfg;
    e.name = o.method == "both" ? "q_configs" : "q";
    rep.rows.push_back(estimate_to_row(e, o.common.seed, clock.ms()));
  }
  rep.emit(o.common);
  return 0;
}

// ----------------------------------------------------------- estimate-qprime

struct EstimateQprimeOpts {
  CommonOpts common;
  std::uint64_t samples = 10000000;
};

int cmd_estimate_qprime(const EstimateQprimeOpts& o) {
  WallClock clock(o.common.timing);
  ConstantEstimate s = estimate_s(o.samples, o.common.seed, o.common.threads);
  ConstantEstimate u = estimate_u(o.samples, o.common.seed, o.common.threads);
  ConstantEstimate v = estimate_v(o.samples, o.common.seed, o.common.threads);
  ConstantEstimate w = estimate_w(o.samples, o.common.seed, o.common.threads);

  Report rep;
  rep.columns = {"name", "estimate", "ci99_halfwidth", "samples", "resamples", "seed", "wall_ms"};
  rep.config = {{"command", "estimate-qprime"},
                {"samples", o.samples},
                {"seed", o.common.seed},
                {"threads", o.common.threads}};
  for (const auto& e : {s, u, v, w, derive_q(s, u, v), derive_qprime(s, u, v, w)})
    rep.rows.push_back(estimate_to_row(e, o.common.seed, clock.ms()));
  rep.emit(o.common);
  return 0;
}

// ------------------------------------------------------------------ simulate

struct SimulateOpts {
  CommonOpts common;
  std::string graph = "complete";
  std::string n_text = "6";
  double p = 0.5;
  int k = 3, l = 3;
  std::uint64_t samples = 1000;
  bool writhe = false;
  int directions = 100;
  double q = 0.033867;
  double qprime = 0.0;  // 0 = unset
  bool allow_large_n = false;
};

struct SimAgg {
  LinkStatsAccumulator stats;
  RunningMoments writhe;
  std::uint64_t resamples = 0;
  void merge(const SimAgg& o) {
    stats.merge(o.stats);
    writhe.merge(o.writhe);
    resamples += o.resamples;
  }
};

// One clean (non-degenerate) embedding per sample index; degenerate draws are
// redone with a bumped attempt stream and counted.  `fixed` is the shared
// immutable graph; when null, a gnp graph is drawn per sample from its own
// substream (thread-local, never shared).
SimAgg run_simulation(std::uint64_t samples, std::uint64_t seed, unsigned threads,
                      const Graph* fixed, int gnp_n, double gnp_p, bool writhe, int directions) {
  std::uint64_t graph_master = substream_seed(seed, kTagGraph);
  std::uint64_t coords_master = substream_seed(seed, kTagCoords);
  std::uint64_t writhe_master = substream_seed(seed, kTagWrithe);
  return blocked_reduce<SimAgg>(
      samples, kSimBlock, threads, [&](SimAgg& agg, std::uint64_t first, std::uint64_t last) {
        Graph local;
        for (std::uint64_t i = first; i < last; ++i) {
          for (std::uint64_t attempt = 0;; ++attempt) {
            if (!fixed) local = Graph::gnp(gnp_n, gnp_p, {graph_master, i}, attempt);
            const Graph& g = fixed ? *fixed : local;
            LinearEmbedding e = sample_embedding(g, {coords_master, i}, attempt);
            try {
              LinkTally t = link_tally(e);
              if (writhe) {
                Pcg32 rng = sample_rng({writhe_master, i}, attempt);
                agg.writhe.push(sum_sq_writhe(e, directions, rng));
              }
              agg.stats.push(t);
              break;
            } catch (const DegenerateProjection&) {
              ++agg.resamples;
            }
          }
        }
      });
}

void check_enum_cap(int n, bool allow_large) {
  if (n > kEnumCap && !allow_large)
    throw CLI::ValidationError(
        "--n", "full enumeration above n=12 is factorially expensive; pass --allow-large-n");
}

int cmd_simulate(const SimulateOpts& o) {
  Report rep;
  rep.columns = {"model",          "n",
                 "p",              "samples",
                 "seed",           "mean_sum_sq_lk",
                 "stderr",         "expected",
                 "mean_avg_sq_lk", "mean_avg_abs_lk",
                 "prop_lk0",       "prop_lk1",
                 "prop_lk2",       "resamples",
                 "wall_ms"};
  if (o.writhe) {
    rep.columns.insert(rep.columns.end(),
                       {"mean_sum_sq_wr", "stderr_wr", "expected_wr", "directions"});
  }
  rep.config = {{"command", "simulate"}, {"graph", o.graph},   {"n", o.n_text},
                {"p", o.p},              {"k", o.k},           {"l", o.l},
                {"samples", o.samples},  {"seed", o.common.seed},
                {"threads", o.common.threads}, {"writhe", o.writhe},
                {"directions", o.directions},  {"q", o.q}};

  TheoryParams params{o.q, o.qprime > 0 ? std::optional<double>(o.qprime) : std::nullopt};

  struct Job {
    std::string model;
    int n;
    double p;
    Graph fixed;      // unused for gnp
    bool is_gnp;
    double expected;
  };
  std::vector<Job> jobs;

  if (o.graph == "complete") {
    Range r = parse_range(o.n_text);
    if (r.lo < 6) throw CLI::ValidationError("--n", "complete-graph simulation needs n >= 6");
    for (int n = r.lo; n <= r.hi; ++n) {
      check_enum_cap(n, o.allow_large_n);
      jobs.push_back({"complete", n, 1.0, Graph::complete(n), false,
                      expected_mean_sum_sq_link_complete(n, params)});
    }
  } else if (o.graph == "gnp") {
    Range r = parse_range(o.n_text);
    if (r.lo < 6) throw CLI::ValidationError("--n", "gnp simulation needs n >= 6");
    if (!(o.p > 0.0 && o.p < 1.0)) throw CLI::ValidationError("--p", "need p in (0,1)");
    for (int n = r.lo; n <= r.hi; ++n) {
      check_enum_cap(n, o.allow_large_n);
      jobs.push_back({"gnp", n, o.p, Graph::complete(1), true,
                      expected_mean_sum_sq_link_np(n, o.p, params)});
    }
  } else if (o.graph == "tripartite331") {
    jobs.push_back({"tripartite331", 7, 1.0, Graph::tripartite331(), false,
                    k331_expected_sum(params)});
  } else if (o.graph == "cycles") {
    if (o.k < 3 || o.l < 3) throw CLI::ValidationError("--k/--l", "cycles need length >= 3");
    check_enum_cap(o.k + o.l, o.allow_large_n);
    jobs.push_back({"cycles", o.k + o.l, 1.0, Graph::disjoint_cycles(o.k, o.l), false,
                    expected_pair_sq_link(o.k, o.l, params)});
  } else {
    throw CLI::ValidationError("--graph", "unknown model: " + o.graph);
  }

  for (const Job& job : jobs) {
    WallClock clock(o.common.timing);
    SimAgg agg = run_simulation(o.samples, o.common.seed, o.common.threads,
                                job.is_gnp ? nullptr : &job.fixed, job.n, job.p, o.writhe,
                                o.directions);

    auto [mean, se] = agg.stats.mean_sum_sq();
    json& row = rep.add_row();
    row["model"] = job.model;
    row["n"] = job.n;
    row["p"] = job.p;
    row["samples"] = o.samples;
    row["seed"] = o.common.seed;
    row["mean_sum_sq_lk"] = mean;
    row["stderr"] = se;
    row["expected"] = job.expected;
    try {
      auto [avg_sq, avg_abs] = agg.stats.mean_average();
      row["mean_avg_sq_lk"] = avg_sq;
      row["mean_avg_abs_lk"] = avg_abs;
    } catch (const NoPairs&) {
      row["mean_avg_sq_lk"] = "nan";
      row["mean_avg_abs_lk"] = "nan";
    }
    try {
      std::vector<double> prop = agg.stats.proportion_by_lk();
      prop.resize(std::max<std::size_t>(prop.size(), 3), 0.0);
      row["prop_lk0"] = prop[0];
      row["prop_lk1"] = prop[1];
      row["prop_lk2"] = prop[2];
    } catch (const NoPairs&) {
      row["prop_lk0"] = "nan";
      row["prop_lk1"] = "nan";
      row["prop_lk2"] = "nan";
    }
    row["resamples"] = agg.resamples;
    row["wall_ms"] = clock.ms();
    if (o.writhe) {
      row["mean_sum_sq_wr"] = agg.writhe.mean;
      row["stderr_wr"] = agg.writhe.count > 1 ? agg.writhe.stderr_of_mean() : 0.0;
      if (params.qprime && job.model == "complete")
        row["expected_wr"] = expected_sum_sq_writhe_complete(job.n, params);
      else
        row["expected_wr"] = "nan";
      row["directions"] = o.directions;
    }
  }
  rep.emit(o.common);
  return 0;
}

// -------------------------------------------------------------------- census

struct CensusOpts {
  CommonOpts common;
  std::uint64_t samples = 1000;
  double q = 0.033867;
};

struct CensusAgg {
  std::uint64_t by_nontrivial[6] = {0, 0, 0, 0, 0, 0};
  std::uint64_t torus_links = 0;  // |lk| = 2 pairs seen (K331 only)
  std::uint64_t resamples = 0;
  void merge(const CensusAgg& o) {
    for (int i = 0; i < 6; ++i) by_nontrivial[i] += o.by_nontrivial[i];
    torus_links += o.torus_links;
    resamples += o.resamples;
  }
};

CensusAgg run_census(const Graph& g, bool k6, std::uint64_t samples, std::uint64_t seed,
                     unsigned threads) {
  std::uint64_t coords_master = substream_seed(seed, kTagCoords);
  return blocked_reduce<CensusAgg>(
      samples, kSimBlock, threads, [&](CensusAgg& agg, std::uint64_t first, std::uint64_t last) {
        for (std::uint64_t i = first; i < last; ++i) {
          for (std::uint64_t attempt = 0;; ++attempt) {
            LinearEmbedding e = sample_embedding(g, {coords_master, i}, attempt);
            try {
              LinkTally t = link_tally(e);
              try {
                if (k6)
                  check_k6_census(t);
                else
                  check_k331_census(t);
              } catch (const CensusViolation& cv) {
                // A violated census means the geometry is wrong; dump the
                // exact embedding so the failure is reproducible.
                throw CensusViolation(std::string(cv.what()) + "\nsample_index=" +
                                      std::to_string(i) + " attempt=" + std::to_string(attempt) +
                                      "\nembedding:\n" + format_embedding(e));
              }
              agg.by_nontrivial[t.nontrivial_pairs()]++;
              agg.torus_links += t.count(2);
              break;
            } catch (const DegenerateProjection&) {
              ++agg.resamples;
            }
          }
        }
      });
}

int cmd_census_k6(const CensusOpts& o) {
  WallClock clock(o.common.timing);
  CensusAgg agg;
  try {
    agg = run_census(Graph::complete(6), true, o.samples, o.common.seed, o.common.threads);
  } catch (const CensusViolation& cv) {
    std::cerr << "census violation: " << cv.what() << '\n';
    return 2;
  }
  BernoulliCI ci = bernoulli_ci99(agg.by_nontrivial[1], o.samples);
  Report rep;
  rep.columns = {"graph",   "samples", "seed",    "p1_hat",    "ci99_halfwidth", "p1_theory",
                 "count_1", "count_3", "resamples", "wall_ms"};
  rep.config = {{"command", "census-k6"}, {"samples", o.samples}, {"seed", o.common.seed},
                {"threads", o.common.threads}, {"q", o.q}};
  json& row = rep.add_row();
  row["graph"] = "K6";
  row["samples"] = o.samples;
  row["seed"] = o.common.seed;
  row["p1_hat"] = ci.estimate;
  row["ci99_halfwidth"] = ci.ci99_halfwidth;
  row["p1_theory"] = k6_p1(TheoryParams{o.q, std::nullopt});
  row["count_1"] = agg.by_nontrivial[1];
  row["count_3"] = agg.by_nontrivial[3];
  row["resamples"] = agg.resamples;
  row["wall_ms"] = clock.ms();
  rep.emit(o.common);
  return 0;
}

int cmd_census_k331(const CensusOpts& o) {
  WallClock clock(o.common.timing);
  CensusAgg agg;
  try {
    agg = run_census(Graph::tripartite331(), false, o.samples, o.common.seed, o.common.threads);
  } catch (const CensusViolation& cv) {
    std::cerr << "census violation: " << cv.what() << '\n';
    return 2;
  }
  BernoulliCI ci = bernoulli_ci99(agg.by_nontrivial[1], o.samples);
  Report rep;
  rep.columns = {"graph",   "samples", "seed",    "p1_hat",  "ci99_halfwidth", "p1_lower_bound",
                 "count_1", "count_2", "count_3", "count_4", "count_5",        "torus_links",
                 "resamples", "wall_ms"};
  rep.config = {{"command", "census-k331"}, {"samples", o.samples}, {"seed", o.common.seed},
                {"threads", o.common.threads}, {"q", o.q}};
  json& row = rep.add_row();
  row["graph"] = "K331";
  row["samples"] = o.samples;
  row["seed"] = o.common.seed;
  row["p1_hat"] = ci.estimate;
  row["ci99_halfwidth"] = ci.ci99_halfwidth;
  row["p1_lower_bound"] = k331_p1_lower(TheoryParams{o.q, std::nullopt});
  for (int m = 1; m <= 5; ++m) row["count_" + std::to_string(m)] = agg.by_nontrivial[m];
  row["torus_links"] = agg.torus_links;
  row["resamples"] = agg.resamples;
  row["wall_ms"] = clock.ms();
  rep.emit(o.common);
  return 0;
}

// -------------------------------------------------------------------- theory

struct TheoryOpts {
  CommonOpts common;
  std::string graph = "complete";
  std::string n_text = "6..12";
  double p = 1.0;
  double q = 0.033867;
  double qprime = 0.0;
};

int cmd_theory(const TheoryOpts& o) {
  if (o.graph != "complete" && o.graph != "gnp")
    throw CLI::ValidationError("--graph", "theory supports complete or gnp");
  Range r = parse_range(o.n_text);
  if (r.lo < 6) throw CLI::ValidationError("--n", "closed forms need n >= 6");
  TheoryParams params{o.q, o.qprime > 0 ? std::optional<double>(o.qprime) : std::nullopt};

  Report rep;
  rep.columns = {"model", "n", "p", "q", "qprime", "expected_mean_sum_sq_lk",
                 "expected_sum_sq_wr"};
  rep.config = {{"command", "theory"}, {"graph", o.graph}, {"n", o.n_text},
                {"p", o.p},            {"q", o.q},         {"qprime", o.qprime}};
  for (int n = r.lo; n <= r.hi; ++n) {
    json& row = rep.add_row();
    row["model"] = o.graph;
    row["n"] = n;
    row["p"] = o.graph == "gnp" ? o.p : 1.0;
    row["q"] = o.q;
    row["qprime"] = o.qprime > 0 ? json(o.qprime) : json("");
    row["expected_mean_sum_sq_lk"] = o.graph == "gnp"
                                         ? expected_mean_sum_sq_link_np(n, o.p, params)
                                         : expected_mean_sum_sq_link_complete(n, params);
    if (params.qprime && o.graph == "complete")
      row["expected_sum_sq_wr"] = expected_sum_sq_writhe_complete(n, params);
    else
      row["expected_sum_sq_wr"] = "";
  }
  rep.emit(o.common);
  return 0;
}

// ------------------------------------------------------------------- analyze

struct AnalyzeOpts {
  CommonOpts common;
  std::string file;
};

int cmd_analyze(const AnalyzeOpts& o) {
  std::ifstream in(o.file);
  if (!in) {
    std::cerr << "error: cannot open " << o.file << '\n';
    return 3;
  }
  LinearEmbedding e;
  try {
    e = load_embedding(in);
  } catch (const ParseError& pe) {
    std::cerr << "parse error: " << pe.what() << '\n';
    return 3;
  }
  if (e.graph.vertex_count() > 64) {
    std::cerr << "error: analysis supports at most 64 vertices\n";
    return 3;
  }
  if (!e.in_unit_cube())
    std::cerr << "note: coordinates extend outside the unit cube\n";

  Report rep;
  rep.columns = {"kind", "first", "second", "value"};
  rep.config = {{"command", "analyze"}, {"file", o.file},
                {"n", e.graph.vertex_count()}, {"m", e.graph.edge_count()},
                {"in_unit_cube", e.in_unit_cube()}};

  auto cycle_str = [](std::span<const int> c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += '-';
      s += std::to_string(c[i]);
    }
    return s;
  };

  const Direction& dir = Direction::plus_z();
  std::uint64_t sum_sq = 0;
  std::vector<Point3> pa, pb;
  try {
    enumerate_disjoint_pairs(e.graph, [&](std::span<const int> a, std::span<const int> b) {
      pa.clear();
      pb.clear();
      for (int v : a) pa.push_back(e.coords[v]);
      for (int v : b) pb.push_back(e.coords[v]);
      int lk;
      try {
        lk = linking_number(pa, pb, dir);
      } catch (const DegenerateProjection& d) {
        throw DegenerateProjection("pair (" + cycle_str(a) + ") x (" + cycle_str(b) +
                                   "): " + d.what());
      }
      sum_sq += static_cast<std::uint64_t>(lk) * static_cast<std::uint64_t>(lk);
      json& row = rep.add_row();
      row["kind"] = "pair";
      row["first"] = cycle_str(a);
      row["second"] = cycle_str(b);
      row["value"] = lk;
    });
    enumerate_cycles(e.graph, 3, e.graph.vertex_count(), [&](std::span<const int> c) {
      pa.clear();
      for (int v : c) pa.push_back(e.coords[v]);
      int wr;
      try {
        wr = directional_writhe(pa, dir);
      } catch (const DegenerateProjection& d) {
        throw DegenerateProjection("cycle (" + cycle_str(c) + "): " + d.what());
      }
      json& row = rep.add_row();
      row["kind"] = "cycle";
      row["first"] = cycle_str(c);
      row["second"] = "";
      row["value"] = wr;
    });
  } catch (const DegenerateProjection& d) {
    std::cerr << "degenerate input: " << d.what() << '\n';
    return 3;
  }
  json& row = rep.add_row();
  row["kind"] = "sum_sq_lk";
  row["first"] = "";
  row["second"] = "";
  row["value"] = sum_sq;
  rep.emit(o.common);
  return 0;
}

// ------------------------------------------------------------ identity-check

struct IdentityOpts {
  CommonOpts common;
  std::string n_text = "6..20";
};

int cmd_identity_check(const IdentityOpts& o) {
  Range r = parse_range(o.n_text);
  if (r.lo < 6) throw CLI::ValidationError("--n", "identity needs n >= 6");
  Report rep;
  rep.columns = {"n", "lhs", "rhs", "equal"};
  rep.config = {{"command", "identity-check"}, {"n", o.n_text}};
  bool all_equal = true;
  for (int n = r.lo; n <= r.hi; ++n) {
    auto [lhs, rhs] = counting_identity(n);
    bool eq = lhs == rhs;
    all_equal = all_equal && eq;
    json& row = rep.add_row();
    row["n"] = n;
    row["lhs"] = lhs.to_string();
    row["rhs"] = rhs.to_string();
    row["equal"] = eq;
  }
  rep.emit(o.common);
  if (!all_equal) {
    std::cerr << "counting identity FAILED\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random linear graph embeddings in the unit cube: linking numbers, "
               "writhe, and the constants that govern them"};
  app.require_subcommand(1);

  EstimateQOpts qo;
  auto* eq = app.add_subcommand("estimate-q", "Monte Carlo estimate of q");
  add_common(eq, qo.common);
  eq->add_option("--samples", qo.samples, "sample count")->check(CLI::PositiveNumber);
  eq->add_option("--method", qo.method, "triangles | configs | both")
      ->check(CLI::IsMember({"triangles", "configs", "both"}));
  eq->callback([&] { g_exit_code = cmd_estimate_q(qo); });

  EstimateQprimeOpts qpo;
  auto* eqp = app.add_subcommand("estimate-qprime", "estimate s,u,v,w and derive q and q'");
  add_common(eqp, qpo.common);
  eqp->add_option("--samples", qpo.samples, "sample count per constant")
      ->check(CLI::PositiveNumber);
  eqp->callback([&] { g_exit_code = cmd_estimate_qprime(qpo); });

  SimulateOpts so;
  auto* sim = app.add_subcommand("simulate", "sample embeddings and tally linking statistics");
  add_common(sim, so.common);
  sim->add_option("--graph", so.graph, "complete | gnp | tripartite331 | cycles")
      ->check(CLI::IsMember({"complete", "gnp", "tripartite331", "cycles"}));
  sim->add_option("--n", so.n_text, "vertex count or lo..hi range");
  sim->add_option("--p", so.p, "edge probability (gnp)");
  sim->add_option("--k", so.k, "first cycle length (cycles model)");
  sim->add_option("--l", so.l, "second cycle length (cycles model)");
  sim->add_option("--samples", so.samples, "embeddings per row")->check(CLI::PositiveNumber);
  sim->add_flag("--writhe", so.writhe, "also estimate the sum of squared writhe");
  sim->add_option("--directions", so.directions, "directions per cycle for writhe")
      ->check(CLI::PositiveNumber);
  sim->add_option("--q", so.q, "q for the expected column");
  sim->add_option("--qprime", so.qprime, "q' for the expected writhe column");
  sim->add_flag("--allow-large-n", so.allow_large_n, "lift the n<=12 enumeration cap");
  sim->callback([&] { g_exit_code = cmd_simulate(so); });

  CensusOpts c6o;
  auto* c6 = app.add_subcommand("census-k6", "verify the K6 link census on sampled embeddings");
  add_common(c6, c6o.common);
  c6->add_option("--samples", c6o.samples, "embeddings")->check(CLI::PositiveNumber);
  c6->add_option("--q", c6o.q, "q for the theory column");
  c6->callback([&] { g_exit_code = cmd_census_k6(c6o); });

  CensusOpts c331o;
  auto* c331 =
      app.add_subcommand("census-k331", "verify the K_{3,3,1} link census on sampled embeddings");
  add_common(c331, c331o.common);
  c331->add_option("--samples", c331o.samples, "embeddings")->check(CLI::PositiveNumber);
  c331->add_option("--q", c331o.q, "q for the bound column");
  c331->callback([&] { g_exit_code = cmd_census_k331(c331o); });

  TheoryOpts to;
  auto* th = app.add_subcommand("theory", "print closed-form expected values");
  add_common(th, to.common);
  th->add_option("--graph", to.graph, "complete | gnp");
  th->add_option("--n", to.n_text, "vertex count or lo..hi range");
  th->add_option("--p", to.p, "edge probability (gnp)");
  th->add_option("--q", to.q, "q");
  th->add_option("--qprime", to.qprime, "q' (enables the writhe column)");
  th->callback([&] { g_exit_code = cmd_theory(to); });

  AnalyzeOpts ao;
  auto* an = app.add_subcommand("analyze", "linking numbers and writhes of a custom embedding");
  add_common(an, ao.common);
  an->add_option("file", ao.file, "embedding file")->required();
  an->callback([&] { g_exit_code = cmd_analyze(ao); });

  IdentityOpts io;
  auto* id = app.add_subcommand("identity-check", "verify the exact counting identity");
  add_common(id, io.common);
  id->add_option("--n", io.n_text, "vertex count or lo..hi range");
  id->callback([&] { g_exit_code = cmd_identity_check(io); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return g_exit_code;
}
