// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fail.  argv[1] is the path to the linkcube CLI binary; criteria phrased as
// commands run the real binary and parse its CSV output.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "linkcube/constants.hpp"
#include "linkcube/cycles.hpp"
#include "linkcube/embedding.hpp"
#include "linkcube/geometry.hpp"
#include "linkcube/invariants.hpp"
#include "linkcube/stats.hpp"
#include "linkcube/theory.hpp"

using namespace linkcube;

namespace {

std::string g_cli = "./linkcube";
int g_failures = 0;

void report(int criterion, bool pass, const std::string& label, const std::string& detail) {
  std::printf("[%s] %2d. %s: %s\n", pass ? "PASS" : "FAIL", criterion, label.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

struct CmdResult {
  int exit_code = -1;
  std::string out;
  double seconds = 0.0;
};

CmdResult run_cli(const std::string& args) {
  CmdResult r;
  std::string cmd = "\"" + g_cli + "\" " + args;
  auto t0 = std::chrono::steady_clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    r.out = "popen failed";
    return r;
  }
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Minimal CSV reader for the CLI's own output.
struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  static Csv parse(const std::string& text) {
    Csv csv;
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string::npos) eol = text.size();
      std::string line = text.substr(pos, eol - pos);
      pos = eol + 1;
      if (line.empty()) continue;
      std::vector<std::string> cells;
      std::size_t p = 0;
      while (true) {
        std::size_t comma = line.find(',', p);
        if (comma == std::string::npos) {
          cells.push_back(line.substr(p));
          break;
        }
        cells.push_back(line.substr(p, comma - p));
        p = comma + 1;
      }
      if (first) {
        csv.header = cells;
        first = false;
      } else {
        csv.rows.push_back(cells);
      }
    }
    return csv;
  }

  std::string get(std::size_t row, const std::string& col) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == col) return i < rows[row].size() ? rows[row][i] : "";
    return "";
  }
  double get_num(std::size_t row, const std::string& col) const {
    std::string s = get(row, col);
    return s.empty() ? std::nan("") : std::stod(s);
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Point3 rand_point(Pcg32& rng) { return {rng.uniform01(), rng.uniform01(), rng.uniform01()}; }

// ---------------------------------------------------------------------------

void criterion_1_q_reproduction() {
  CmdResult single = run_cli("estimate-q --samples 10000000 --seed 42 --threads 1");
  Csv csv = Csv::parse(single.out);
  double q = csv.rows.empty() ? std::nan("") : csv.get_num(0, "estimate");
  bool accuracy = std::abs(q - 0.033867) <= 0.0005;
  bool in_time = single.seconds <= 60.0;

  unsigned hw = std::thread::hardware_concurrency();
  unsigned par = std::min(hw ? hw : 1u, 8u);
  std::string speed_note = "single-core " + fmt(single.seconds) + "s";
  bool scaling_ok = true;
  if (par >= 2) {
    CmdResult multi =
        run_cli("estimate-q --samples 10000000 --seed 42 --threads " + std::to_string(par));
    double speedup = single.seconds / std::max(multi.seconds, 1e-9);
    scaling_ok = speedup >= 1.2;
    speed_note += ", x" + fmt(speedup) + " speedup at " + std::to_string(par) + " threads (" +
                  std::to_string(hw) + " cores available)";
  } else {
    speed_note += ", single core machine: scaling not measurable";
  }
  report(1, single.exit_code == 0 && accuracy && in_time && scaling_ok, "q reproduction",
         "q=" + fmt(q) + " |diff|=" + fmt(std::abs(q - 0.033867)) + " <= 0.0005, " + speed_note);
}

void criterion_2_two_route_q() {
  const std::uint64_t n = 10000000;
  ConstantEstimate tri = estimate_q_triangles(n, 1001, 0);
  ConstantEstimate s = estimate_s(n, 1001, 0);
  ConstantEstimate u = estimate_u(n, 1001, 0);
  ConstantEstimate v = estimate_v(n, 1001, 0);
  ConstantEstimate cfg = derive_q(s, u, v);
  double gap = std::abs(tri.value - cfg.value);
  double budget = tri.ci99_halfwidth + cfg.ci99_halfwidth;
  report(2, gap <= budget, "two-route q agreement",
         "triangles " + fmt(tri.value) + " +- " + fmt(tri.ci99_halfwidth) + " vs configs " +
             fmt(cfg.value) + " +- " + fmt(cfg.ci99_halfwidth) + ", gap " + fmt(gap) +
             " <= " + fmt(budget));
}

void criterion_3_k6_census() {
  CmdResult r = run_cli("census-k6 --samples 1000 --seed 1");
  Csv csv = Csv::parse(r.out);
  double p1 = csv.rows.empty() ? std::nan("") : csv.get_num(0, "p1_hat");
  bool ok = r.exit_code == 0 && p1 >= 0.69 && p1 <= 0.79;
  report(3, ok, "K6 census",
         "exit=" + std::to_string(r.exit_code) + " (0 means every sample had 1 or 3 Hopf "
         "links), p1_hat=" + fmt(p1) + " in [0.69,0.79], theory 0.7380");
}

void criterion_4_k331_census() {
  CmdResult r = run_cli("census-k331 --samples 1000 --seed 1");
  Csv csv = Csv::parse(r.out);
  double p1 = csv.rows.empty() ? std::nan("") : csv.get_num(0, "p1_hat");
  bool ok = r.exit_code == 0 && p1 >= 0.55;
  report(4, ok, "K331 census",
         "exit=" + std::to_string(r.exit_code) + " (0 means 1..5 nontrivial links and torus "
         "parity in every sample), p1_hat=" + fmt(p1) + " >= 0.55 (bound 0.5856)");
}

void criterion_5_figure1() {
  CmdResult r = run_cli("simulate --graph complete --n 6..9 --samples 1000 --seed 1");
  Csv csv = Csv::parse(r.out);
  const std::array<double, 4> expect{1.52402, 32.0043, 469.397, 6272.85};
  bool ok = r.exit_code == 0 && csv.rows.size() == 4 && r.seconds <= 600.0;
  std::string detail;
  for (std::size_t i = 0; ok && i < 4; ++i) {
    double mean = csv.get_num(i, "mean_sum_sq_lk");
    double rel = std::abs(mean - expect[i]) / expect[i];
    if (i) detail += " ";
    detail += "n=" + std::to_string(6 + i) + ":" + fmt(mean) + "(" + fmt(rel * 100) + "%)";
    ok = ok && rel <= 0.10;
  }
  report(5, ok, "Figure 1 reproduction",
         detail + " all within 10%, wall " + fmt(r.seconds) + "s <= 600s");
}

void criterion_6_figure23_spots() {
  CmdResult a = run_cli("simulate --graph gnp --n 8 --p 0.5 --samples 1000 --seed 1");
  Csv ca = Csv::parse(a.out);
  double ma = ca.rows.empty() ? std::nan("") : ca.get_num(0, "mean_sum_sq_lk");
  double rel_a = std::abs(ma - 3.0004) / 3.0004;

  CmdResult b = run_cli("simulate --graph gnp --n 10 --p 0.25 --samples 50000 --seed 1");
  Csv cb = Csv::parse(b.out);
  double mb = cb.rows.empty() ? std::nan("") : cb.get_num(0, "mean_sum_sq_lk");
  double rel_b = std::abs(mb - 0.564041) / 0.564041;

  report(6, a.exit_code == 0 && b.exit_code == 0 && rel_a <= 0.30 && rel_b <= 0.15,
         "Figure 2/3 spot checks",
         "(8,0.5): " + fmt(ma) + " vs 3.0004 (" + fmt(rel_a * 100) + "% <= 30%); (10,0.25): " +
             fmt(mb) + " vs 0.564041 (" + fmt(rel_b * 100) + "% <= 15%)");
}

void criterion_7_figure7_spot() {
  CmdResult r = run_cli("simulate --graph complete --n 6 --samples 1000 --seed 1");
  Csv csv = Csv::parse(r.out);
  double p1 = csv.rows.empty() ? std::nan("") : csv.get_num(0, "prop_lk1");
  double p2 = csv.rows.empty() ? std::nan("") : csv.get_num(0, "prop_lk2");
  bool ok = r.exit_code == 0 && std::abs(p1 - 0.1542) <= 0.02 && p2 == 0.0;
  report(7, ok, "Figure 7 spot check",
         "prop(|lk|=1)=" + fmt(p1) + " within 0.02 of 0.1542; prop(|lk|=2)=" + fmt(p2) +
             " == 0");
}

void criterion_8_oracle_equivalence() {
  Pcg32 pick(4004, 0);
  std::uint64_t mismatches = 0, degenerate = 0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    int k = 3 + static_cast<int>(pick.next() % 5);
    int l = 3 + static_cast<int>(pick.next() % 5);
    for (std::uint64_t attempt = 0;; ++attempt) {
      Pcg32 rng = sample_rng({5005, i}, attempt);
      std::vector<Point3> a(k), b(l);
      for (auto& p : a) p = rand_point(rng);
      for (auto& p : b) p = rand_point(rng);
      try {
        if (linking_number(a, b, Direction::plus_z()) != linking_number_oracle(a, b))
          ++mismatches;
        break;
      } catch (const DegenerateProjection&) {
        ++degenerate;
      } catch (const DegenerateIntersection&) {
        ++degenerate;
      }
    }
  }
  report(8, mismatches == 0, "oracle equivalence",
         "10000 random (k,l) cycle pairs, 3<=k,l<=7: " + std::to_string(mismatches) +
             " mismatches (" + std::to_string(degenerate) + " degenerate redraws)");
}

void criterion_9_projection_invariance() {
  Pcg32 pick(6006, 0);
  std::uint64_t violations = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    int k = 3 + static_cast<int>(pick.next() % 4);
    int l = 3 + static_cast<int>(pick.next() % 4);
    Graph g = Graph::disjoint_cycles(k, l);
    std::vector<Point3> a, b;
    int ref = 0;
    for (std::uint64_t attempt = 0;; ++attempt) {
      LinearEmbedding e = sample_embedding(g, {7007, i}, attempt);
      a.assign(e.coords.begin(), e.coords.begin() + k);
      b.assign(e.coords.begin() + k, e.coords.end());
      try {
        ref = linking_number(a, b, Direction::plus_z());
        break;
      } catch (const DegenerateProjection&) {
      }
    }
    Pcg32 dir_rng(8008, i);
    for (int d = 0; d < 100; ++d) {
      for (;;) {
        Direction dir = sample_direction(dir_rng);
        try {
          if (linking_number(a, b, dir) != ref) ++violations;
          break;
        } catch (const DegenerateProjection&) {
        }
      }
    }
  }
  report(9, violations == 0, "projection invariance",
         "100 pairs x 100 random directions: " + std::to_string(violations) +
             " direction-dependent linking numbers");
}

void criterion_10_counting() {
  bool ok = true;
  std::string note;
  for (int n = 6; n <= 9 && ok; ++n) {
    Graph g = Graph::complete(n);
    std::map<int, std::uint64_t> cyc;
    enumerate_cycles(g, 3, n, [&](std::span<const int> c) { ++cyc[(int)c.size()]; });
    for (int k = 3; k <= n; ++k)
      ok = ok && cyc[k] == static_cast<std::uint64_t>(count_cycles_closed_form(n, k).to_double());
    std::map<std::pair<int, int>, std::uint64_t> pairs;
    enumerate_disjoint_pairs(g, [&](std::span<const int> a, std::span<const int> b) {
      ++pairs[{(int)std::min(a.size(), b.size()), (int)std::max(a.size(), b.size())}];
    });
    for (int k = 3; k <= n - 3; ++k)
      for (int l = k; l <= n - k; ++l)
        ok = ok &&
             pairs[{k, l}] == static_cast<std::uint64_t>(count_pairs_closed_form(n, k, l).to_double());
    if (!ok) note = "mismatch at n=" + std::to_string(n);
  }
  bool identity = true;
  for (int n = 6; n <= 20; ++n) {
    auto [lhs, rhs] = counting_identity(n);
    identity = identity && lhs == rhs;
  }
  report(10, ok && identity, "counting cross-validation",
         note.empty() ? "cycle and pair streams equal closed forms for n<=9; identity exact "
                        "for 6<=n<=20"
                      : note);
}

void criterion_11_writhe() {
  const std::uint64_t n = 10000000;
  ConstantEstimate qt = estimate_q_triangles(n, 1001, 0);
  ConstantEstimate s = estimate_s(n, 1001, 0);
  ConstantEstimate u = estimate_u(n, 1001, 0);
  ConstantEstimate v = estimate_v(n, 1001, 0);
  ConstantEstimate w = estimate_w(n, 1001, 0);
  ConstantEstimate qp = derive_qprime(s, u, v, w);
  TheoryParams params{qt.value, qp.value};

  // (a) random 7-gons vs q k^2 - (6q - q') k at k = 7
  Graph g7 = Graph::disjoint_cycles(7, 3);
  RunningMoments m7;
  Pcg32 dir_rng(9009, 1);
  for (std::uint64_t i = 0; i < 10000; ++i) {
    LinearEmbedding e = sample_embedding(g7, {1100, i});
    std::vector<Point3> poly(e.coords.begin(), e.coords.begin() + 7);
    m7.push(mean_squared_writhe(poly, 100, dir_rng).mean_sq);
  }
  double expect7 = expected_mean_sq_writhe(7, params);
  double rel7 = std::abs(m7.mean - expect7) / expect7;

  // (b) triangles have identically zero directional writhe
  std::uint64_t nonzero_triangles = 0;
  Pcg32 tri_rng(2200, 0);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Point3> tri{rand_point(tri_rng), rand_point(tri_rng), rand_point(tri_rng)};
    for (int d = 0; d < 30; ++d) {
      Direction dir = sample_direction(tri_rng);
      if (directional_writhe(tri, dir) != 0) ++nonzero_triangles;
    }
  }

  // (c) K6 sum of squared writhe simulation vs the closed form
  Graph k6 = Graph::complete(6);
  RunningMoments mk6;
  Pcg32 k6_rng(3300, 0);
  for (std::uint64_t i = 0; i < 1000; ++i) {
    LinearEmbedding e = sample_embedding(k6, {4400, i});
    mk6.push(sum_sq_writhe(e, 100, k6_rng));
  }
  double expect_k6 = expected_sum_sq_writhe_complete(6, params);
  double rel_k6 = std::abs(mk6.mean - expect_k6) / expect_k6;

  report(11, rel7 <= 0.15 && nonzero_triangles == 0 && rel_k6 <= 0.15,
         "writhe formula at desk scale",
         "7-gon: " + fmt(m7.mean) + " vs " + fmt(expect7) + " (" + fmt(rel7 * 100) +
             "% <= 15%); triangles nonzero " + std::to_string(nonzero_triangles) +
             "; K6 sum: " + fmt(mk6.mean) + " vs " + fmt(expect_k6) + " (" + fmt(rel_k6 * 100) +
             "% <= 15%)  [q=" + fmt(qt.value) + ", q'=" + fmt(qp.value) + "]");
}

void criterion_12_bounds() {
  TheoryParams params{0.033867, std::nullopt};
  bool ok = true;
  for (double p : {0.25, 0.5, 1.0}) {
    for (int n = 11; n <= 20; ++n) {
      double value = expected_mean_sum_sq_link_np(n, p, params);
      double nfact = BigUint::factorial(static_cast<unsigned>(n)).to_double();
      double lower = params.q / 32.0 * std::pow(p, n) * n * nfact;
      double upper = params.q / 16.0 * std::exp(1.0 / p) * std::pow(p, n) * n * nfact;
      ok = ok && lower <= value && value <= upper;
    }
  }
  report(12, ok, "theorem bound checks",
         "q/32 p^n n n! <= formula <= q/16 e^{1/p} p^n n n! for 11<=n<=20, p in {0.25,0.5,1}");
}

void criterion_13_determinism() {
  // A fixed K6 embedding file so the analyze command is covered too.
  std::string k6_file = "linkcube_acceptance_k6.txt";
  {
    LinearEmbedding e = sample_embedding(Graph::complete(6), {515, 0});
    std::string text = format_embedding(e);
    FILE* f = std::fopen(k6_file.c_str(), "w");
    if (f) {
      std::fwrite(text.data(), 1, text.size(), f);
      std::fclose(f);
    }
  }
  const std::vector<std::string> commands{
      "simulate --graph complete --n 6 --samples 200 --seed 5",
      "simulate --graph gnp --n 8 --p 0.5 --samples 300 --seed 5 --writhe --qprime 0.1724",
      "simulate --graph cycles --k 3 --l 4 --samples 500 --seed 5",
      "estimate-q --samples 200000 --seed 5 --method both",
      "estimate-qprime --samples 100000 --seed 5",
      "census-k6 --samples 200 --seed 5",
      "census-k331 --samples 200 --seed 5",
      "theory --graph gnp --n 6..12 --p 0.25",
      "identity-check --n 6..20",
      "analyze " + k6_file,
  };
  int bad = 0;
  for (const auto& cmd : commands) {
    CmdResult t1 = run_cli(cmd + " --threads 1");
    CmdResult t4 = run_cli(cmd + " --threads 4");
    CmdResult t8 = run_cli(cmd + " --threads 8");
    if (t1.exit_code != 0 || t1.out != t4.out || t1.out != t8.out) {
      ++bad;
      std::printf("      not reproducible: %s\n", cmd.c_str());
    }
  }
  // The analyzed K6 embedding must also satisfy its census.
  Csv an = Csv::parse(run_cli("analyze " + k6_file).out);
  std::uint64_t pairs = 0, sum_sq = 0;
  for (std::size_t i = 0; i < an.rows.size(); ++i) {
    if (an.get(i, "kind") == "pair") ++pairs;
    if (an.get(i, "kind") == "sum_sq_lk") sum_sq = static_cast<std::uint64_t>(an.get_num(i, "value"));
  }
  std::remove(k6_file.c_str());
  bool census_ok = pairs == 10 && (sum_sq == 1 || sum_sq == 3);
  if (!census_ok)
    std::printf("      analyze census: pairs=%llu sum_sq=%llu\n", (unsigned long long)pairs,
                (unsigned long long)sum_sq);
  report(13, bad == 0 && census_ok, "determinism",
         std::to_string(commands.size()) + " commands byte-identical at 1, 4, and 8 threads");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  CmdResult probe = run_cli("--help");
  if (probe.exit_code != 0) {
    std::fprintf(stderr, "cannot run CLI at %s\n", g_cli.c_str());
    return 99;
  }
  auto t0 = std::chrono::steady_clock::now();
  criterion_1_q_reproduction();
  criterion_2_two_route_q();
  criterion_3_k6_census();
  criterion_4_k331_census();
  criterion_5_figure1();
  criterion_6_figure23_spots();
  criterion_7_figure7_spot();
  criterion_8_oracle_equivalence();
  criterion_9_projection_invariance();
  criterion_10_counting();
  criterion_11_writhe();
  criterion_12_bounds();
  criterion_13_determinism();
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d/13 criteria passed (%.1fs)\n", 13 - g_failures, total);
  return g_failures == 0 ? 0 : 1;
}
