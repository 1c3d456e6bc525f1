// Acceptance gate: nine numbered criteria, one PASS/FAIL line each, nonzero
// exit if any fail. Each criterion carries its own wall-clock budget.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "graphspec/bounds.hpp"
#include "graphspec/separators.hpp"
#include "graphspec/shallow.hpp"
#include "graphspec/spectra.hpp"

using namespace graphspec;
using namespace graphspec::generators;

namespace {

struct Criterion {
  int id;
  std::string name;
  bool pass = true;
  std::string detail;
  long long budget_ms;
  long long elapsed_ms = 0;
};

std::vector<Criterion> results;

struct Runner {
  Criterion c;
  std::chrono::steady_clock::time_point t0;

  Runner(int id, std::string name, long long budget_ms)
      : c{id, std::move(name), true, "", budget_ms}, t0(std::chrono::steady_clock::now()) {}

  void fail(const std::string& why) {
    if (c.pass) c.detail = why;
    c.pass = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }

  ~Runner() {
    c.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    if (c.elapsed_ms > c.budget_ms)
      fail("over time budget: " + std::to_string(c.elapsed_ms) + " ms");
    results.push_back(c);
  }
};

// --------------------------------------------------------------------------
// 1. Join-spectrum exactness on 200 seeded random pairs.

void criterion1() {
  Runner r(1, "join spectrum formula vs eigensolve (200 pairs)", 30000);
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 200; ++trial) {
    int n1 = 1 + (int)(rng() % 12), n2 = 1 + (int)(rng() % 12);
    int m1 = n1 < 2 ? 0 : (int)(rng() % (n1 * (n1 - 1) / 2 + 1));
    int m2 = n2 < 2 ? 0 : (int)(rng() % (n2 * (n2 - 1) / 2 + 1));
    Graph g1 = random_graph(n1, m1, rng());
    Graph g2 = random_graph(n2, m2, rng());
    double l1 = n1 >= 2 ? fiedler_value(g1) : lambda2_singleton;
    double l2 = n2 >= 2 ? fiedler_value(g2) : lambda2_singleton;
    double formula = join_lambda2(l1, n1, l2, n2);
    double solved = fiedler_value(complete_join(g1, g2));
    r.require(std::abs(formula - solved) <= 1e-8,
              "pair " + std::to_string(trial) + ": formula " + fmt12(formula) +
                  " vs eigensolve " + fmt12(solved));
  }
}

// --------------------------------------------------------------------------
// 2. First witness family floor.

void criterion2() {
  Runner r(2, "witness family lambda2 = h-2 (h in 3..8, n in h..60)", 30000);
  for (int h = 3; h <= 8; ++h)
    for (int n = h; n <= 60; ++n) {
      double l2 = fiedler_value(thm1_witness(h, n));
      r.require(std::abs(l2 - (h - 2.0)) <= 1e-8,
                "h=" + std::to_string(h) + " n=" + std::to_string(n) + ": " + fmt12(l2));
    }
}

// --------------------------------------------------------------------------
// 3. Second witness family closed form.

void criterion3() {
  Runner r(3, "second witness family lambda2 closed form (n in 4..200)", 60000);
  for (int n = 4; n <= 200; ++n) {
    double l2 = fiedler_value(thm2_witness(n));
    double cf = 4.0 - 2.0 * std::cos(std::numbers::pi / (n - 2));
    r.require(std::abs(l2 - cf) <= 1e-8,
              "n=" + std::to_string(n) + ": " + fmt12(l2) + " vs " + fmt12(cf));
    r.require(l2 > 2.0, "n=" + std::to_string(n) + ": not strictly above 2");
    if (n >= 50) {
      double scaled = (l2 - 2.0) * (double)(n - 2) * (double)(n - 2);
      r.require(scaled >= 9.5 && scaled <= 10.5,
                "n=" + std::to_string(n) + ": scaled gap " + fmt12(scaled));
    }
  }
}

// --------------------------------------------------------------------------
// 4. Four-point solver invariants.

void criterion4() {
  Runner r(4, "four-point solver on 1000 quadruples + chain/polygon check", 10000);
  std::mt19937_64 rng(1004);
  int done = 0;
  while (done < 1000) {
    long long n11 = 1 + (long long)(rng() % 50);
    long long n12 = n11 + (long long)(rng() % (n11 + 1));
    long long n21 = 1 + (long long)(rng() % 50);
    long long n22 = n21 + (long long)(rng() % (n21 + 1));
    if (n11 + n12 > n21 + n22) {
      std::swap(n11, n21);
      std::swap(n12, n22);
    }
    if (!fourpoint_preconditions_hold(n11, n12, n21, n22)) continue;
    if (n11 > 50 || n12 > 50 || n21 > 50 || n22 > 50) continue;
    auto sol = four_point_solve(n11, n12, n21, n22);
    for (auto z : sol.points)
      r.require(std::abs(std::abs(z) - 1.0) <= 1e-12, "modulus off the unit circle");
    r.require(sol.defect() <= 1e-9 * (double)sol.weight_sum(), "weighted-sum defect");
    ++done;
  }
  for (long long a = 1; a <= 12; ++a)
    for (long long b = 1; b <= 12; ++b)
      for (long long c = 1; c <= 12; ++c)
        for (long long d = 1; d <= 12; ++d)
          if (fourpoint_preconditions_hold(a, b, c, d)) {
            long long mx = std::max({a, b, c, d});
            r.require(mx <= a + b + c + d - mx, "chains without polygon inequality");
          }
}

// --------------------------------------------------------------------------
// 5. Separator bound end to end on 100 graphs.

void criterion5() {
  Runner r(5, "separator bound end-to-end on 100 graphs (n up to 400)", 180000);
  std::vector<Graph> corpus;
  for (int side = 3; side <= 20; ++side) corpus.push_back(grid(side, side));
  for (std::uint64_t seed = 1; corpus.size() < 100; ++seed) {
    int n = 20 + (int)((seed * 97) % 381);  // 20..400
    corpus.push_back(random_planar(n, seed));
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    try {
      auto res = sep_upper_bound(g, SplitStrategy::BfsLevel);
      res.decomposition.check(g);
      r.require(std::abs(res.bound - res.rayleigh) <= 1e-9,
                "graph " + std::to_string(i) + ": bound vs Rayleigh mismatch");
      double l2 = fiedler_value(g);
      r.require(l2 <= res.bound + 1e-9,
                "graph " + std::to_string(i) + ": lambda2 " + fmt12(l2) + " above bound " +
                    fmt12(res.bound));
    } catch (const std::exception& e) {
      r.fail("graph " + std::to_string(i) + ": " + e.what());
    }
  }
}

// --------------------------------------------------------------------------
// 6. Oracle equivalences (independent brute-force implementations).

Rational brute_densest(const Graph& g) {
  int n = g.order();
  Rational best(0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    long long inside = 0;
    for (auto [u, v] : g.edges())
      if ((mask >> u & 1) && (mask >> v & 1)) ++inside;
    Rational d(inside, std::popcount(mask));
    if (best < d) best = d;
  }
  return best;
}

bool naive_k_sub(const Graph& g, int k) {
  int n = g.order();
  std::vector<int> branch;
  auto assign = [&](auto&& self, const std::vector<std::pair<int, int>>& need,
                    std::size_t i, std::uint32_t used) -> bool {
    if (i == need.size()) return true;
    auto [u, v] = need[i];
    for (int w = 0; w < n; ++w) {
      if (used >> w & 1) continue;
      if (std::find(branch.begin(), branch.end(), w) != branch.end()) continue;
      if (g.has_edge(u, w) && g.has_edge(w, v) &&
          self(self, need, i + 1, used | (1u << w)))
        return true;
    }
    return false;
  };
  auto rec = [&](auto&& self, int start) -> bool {
    if ((int)branch.size() == k) {
      std::vector<std::pair<int, int>> need;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (!g.has_edge(branch[i], branch[j])) need.emplace_back(branch[i], branch[j]);
      return assign(assign, need, 0, 0);
    }
    for (int v = start; v < n; ++v) {
      branch.push_back(v);
      if (self(self, v + 1)) return true;
      branch.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

int brute_min_separator(const Graph& g) {
  int n = g.order();
  for (int size = 0; size <= n - 2; ++size) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != size) continue;
      VertexSet rest;
      for (int v = 0; v < n; ++v)
        if (!(mask >> v & 1)) rest.push_back(v);
      auto comps = components(induced_subgraph(g, rest));
      if (comps.size() < 2) continue;
      int k = (int)comps.size();
      for (std::uint32_t cm = 1; cm + 1 < (1u << k); ++cm) {
        std::size_t z1 = 0, z2 = 0;
        for (int i = 0; i < k; ++i) (cm >> i & 1 ? z1 : z2) += comps[i].size();
        auto lo = std::min(z1, z2), hi = std::max(z1, z2);
        if (lo >= 1 && hi <= 2 * lo) return size;
      }
    }
  }
  return -1;
}

void criterion6() {
  Runner r(6, "oracle equivalences (densest, subdivision, separator)", 120000);
  std::mt19937_64 rng(1006);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + (int)(rng() % 11);
    Graph g = random_graph(n, (int)(rng() % (n * (n - 1) / 2 + 1)), rng());
    if (!(densest_subgraph(g).density == brute_densest(g)))
      r.fail("densest mismatch on trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + (int)(rng() % 7);
    Graph g = random_graph(n, (int)(rng() % (n * (n - 1) / 2 + 1)), rng());
    for (int k = 2; k <= 4; ++k) {
      auto res = contains_k_sub(g, k);
      if (res.state == TriState::Unknown) {
        r.fail("subdivision search hit its budget on trial " + std::to_string(trial));
        continue;
      }
      if ((res.state == TriState::Yes) != naive_k_sub(g, k))
        r.fail("subdivision mismatch on trial " + std::to_string(trial) +
               " k=" + std::to_string(k));
    }
  }
  for (int trial = 0; trial < 50; ++trial) {
    int n = 4 + (int)(rng() % 11);  // 4..14
    Graph g = random_graph(n, (int)(rng() % (n * (n - 1) / 2 + 1)), rng());
    int oracle = brute_min_separator(g);
    try {
      auto bs = find_balanced_split(g, SplitStrategy::Exhaustive);
      bs.check(g);
      if (oracle != (int)bs.S.size())
        r.fail("separator size mismatch on trial " + std::to_string(trial));
    } catch (const split_error&) {
      if (oracle >= 0) r.fail("missed existing separator on trial " + std::to_string(trial));
    }
  }
}

// --------------------------------------------------------------------------
// 7. Bipartite density suites with exact grads.

void criterion7() {
  Runner r(7, "bipartite density checks on 100 exact-grad instances", 120000);
  int instances = 0;
  for (std::uint64_t seed = 1; instances < 100; ++seed) {
    if (seed > 500) {
      r.fail("could not assemble 100 instances");
      break;
    }
    Graph g = random_planar(10 + (int)(seed % 7), seed);
    VertexSet a, b;
    std::mt19937_64 rng(seed * 77);
    for (int v = 0; v < g.order(); ++v) (rng() % 4 ? a : b).push_back(v);
    if (b.empty() || a.size() < b.size()) continue;

    auto rep = bipdens_check(g, a, b);  // omega computed exactly, grads exact
    ++instances;
    r.require(rep.exact, "instance not exact at seed " + std::to_string(seed));
    r.require(rep.slack >= 0, "negative slack at seed " + std::to_string(seed));
    r.require(rep.direct_slack >= 0, "negative direct slack at seed " + std::to_string(seed));
    r.require(rep.certified, "uncertified at seed " + std::to_string(seed));
    r.require(!rep.cert.clique_violation,
              "clique violation with exact omega at seed " + std::to_string(seed));

    // planar hosts contain no K_33 subgraph, so p = 3 is legitimate
    auto rep2 = bipdens2_check(g, a, b, 3);
    ++instances;
    r.require(rep2.exact, "triple instance not exact at seed " + std::to_string(seed));
    r.require(rep2.slack >= 0, "negative triple slack at seed " + std::to_string(seed));
    r.require(rep2.direct_slack >= 0,
              "negative triple direct slack at seed " + std::to_string(seed));
    r.require(!rep2.cert.kpq_witness, "kpq witness on a planar host at seed " +
                                          std::to_string(seed));
    r.require(rep2.triangle_bound_ok, "triangle bound at seed " + std::to_string(seed));
  }

  // Deliberately provoked witnesses must verify as genuine subgraph patterns.
  {
    Graph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    auto cert = greedy_half_minor(k23, {2, 3, 4}, {0, 1}, 2);
    r.require(cert.clique_violation, "expected clique violation on the bipartite host");
    if (cert.clique_violation) {
      // witness = x plus its B-neighborhood, all adjacent to x
      int x = -1;
      for (int v : cert.violation_witness)
        if (!contains(cert.B, v)) x = v;
      r.require(x >= 0, "violation witness missing the A vertex");
      for (int v : cert.violation_witness)
        if (v != x) r.require(k23.has_edge(x, v), "violation witness not adjacent");
    }
    std::vector<std::pair<int, int>> e;
    for (int bside = 0; bside < 3; ++bside)
      for (int aside = 3; aside < 9; ++aside) e.emplace_back(bside, aside);
    Graph k36(9, e);
    auto cert2 = greedy_half_minor_triples(k36, {3, 4, 5, 6, 7, 8}, {0, 1, 2}, 3);
    r.require(cert2.kpq_witness, "expected kpq witness on K_36");
    if (cert2.kpq_witness) {
      r.require((int)cert2.kpq_avertices.size() == 3, "witness A side has wrong size");
      for (int av : cert2.kpq_avertices)
        for (int bv : cert2.kpq_triple)
          r.require(k36.has_edge(av, bv), "kpq witness is not a subgraph");
    }
  }
}

// --------------------------------------------------------------------------
// 8. Planar omega consistency.

void criterion8() {
  Runner r(8, "omega of depth-half minors <= 4 on 50 planar graphs", 120000);
  std::mt19937_64 rng(1008);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 10 + (int)(rng() % 31);  // 10..40
    Graph g = random_planar(n, 2000 + trial);
    auto res = contains_k_sub(g, 5);
    if (res.state == TriState::Unknown)
      r.fail("K5 search hit its budget at trial " + std::to_string(trial));
    else if (res.state == TriState::Yes)
      r.fail("K5 <=1-subdivision reported inside a planar graph, trial " +
             std::to_string(trial));
  }
}

// --------------------------------------------------------------------------
// 9. Determinism: identical seeds give byte-identical reports.

std::string sweep_fingerprint() {
  auto rows = sweep(ClassDescriptor::genus_class(0), {16, 25, 36, 40}, {1, 2, 3},
                    SplitStrategy::BfsLevel);
  for (auto& row : rows) row.runtime_ms = 0;  // wall clock is not part of the contract
  return sweep_csv(rows);
}

std::string solver_fingerprint() {
  std::ostringstream out;
  std::mt19937_64 rng(1009);
  for (int trial = 0; trial < 50; ++trial) {
    long long n11 = 1 + (long long)(rng() % 20);
    long long n12 = n11 + (long long)(rng() % (n11 + 1));
    long long n21 = n11 + (long long)(rng() % 20);
    long long n22 = n21 + (long long)(rng() % (n21 + 1));
    if (!fourpoint_preconditions_hold(n11, n12, n21, n22)) continue;
    auto sol = four_point_solve(n11, n12, n21, n22);
    for (auto z : sol.points) out << fmt12(z.real()) << ',' << fmt12(z.imag()) << ';';
    out << '\n';
  }
  for (int n : {10, 20, 33}) {
    out << fmt12(fiedler_value(random_planar(n, 5))) << '\n';
    auto spec = laplacian_spectrum(random_planar(n, 6), true);
    for (double l : spec.eigenvalues) out << fmt12(l) << ';';
    out << '\n';
  }
  return out.str();
}

void criterion9() {
  Runner r(9, "byte-identical reports under identical seeds", 120000);
  r.require(sweep_fingerprint() == sweep_fingerprint(), "sweep CSV not reproducible");
  r.require(solver_fingerprint() == solver_fingerprint(), "solver output not reproducible");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();

  bool all = true;
  for (const auto& c : results) {
    std::printf("%s criterion %d: %s (%lld ms)%s%s\n", c.pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), c.elapsed_ms, c.pass ? "" : " -- ",
                c.pass ? "" : c.detail.c_str());
    all = all && c.pass;
  }
  std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
