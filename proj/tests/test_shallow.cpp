#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>
#include <set>

#include "graphspec/shallow.hpp"

using namespace graphspec;
using namespace graphspec::generators;

static Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(i + 5, (i + 2) % 5 + 5);  // pentagram
  }
  return Graph(10, e);
}

// Oracle: densest subgraph by direct subset enumeration.
static Rational brute_densest(const Graph& g) {
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

TEST_CASE("densest subgraph on hand examples") {
  Graph k4e(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});  // K4 minus an edge
  CHECK(densest_subgraph(k4e).density == Rational(5, 4));
  CHECK(densest_subgraph(complete(5)).density == Rational(2));
  CHECK(densest_subgraph(petersen()).density == Rational(3, 2));
  CHECK(densest_subgraph(star(8)).density == Rational(7, 8));
  CHECK(densest_subgraph(empty_graph(4)).density == Rational(0));
  // a dense core inside a sparse graph is found, not averaged away
  Graph g(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
  auto r = densest_subgraph(g);
  CHECK(r.density == Rational(3, 2));
  CHECK(r.set == VertexSet{0, 1, 2, 3});
}

TEST_CASE("densest subgraph against brute force") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + (int)(rng() % 11);  // 2..12
    int m = (int)(rng() % (n * (n - 1) / 2 + 1));
    Graph g = random_graph(n, m, rng());
    CHECK(densest_subgraph(g).density == brute_densest(g));
  }
}

TEST_CASE("maximum average degree") {
  CHECK(mad(cycle(5)) == Rational(2));
  CHECK(mad(complete(4)) == Rational(3));
  CHECK(mad(star(5)) == Rational(8, 5));
  CHECK(mad(grid(3, 3)) == Rational(8, 3));
}

// Oracle: naive search for a <=1-subdivision of K_k. Enumerates branch sets,
// then all internal-vertex assignments by recursive choice (no matching).
static bool naive_k_sub(const Graph& g, int k) {
  int n = g.order();
  std::vector<int> branch;
  auto assign = [&](auto&& self, const std::vector<std::pair<int, int>>& need,
                    std::size_t i, std::uint32_t used) -> bool {
    if (i == need.size()) return true;
    auto [u, v] = need[i];
    for (int w = 0; w < n; ++w) {
      if (used >> w & 1) continue;
      bool is_branch = std::find(branch.begin(), branch.end(), w) != branch.end();
      if (is_branch) continue;
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

TEST_CASE("subdivision detection on hand examples") {
  CHECK(contains_k_sub(cycle(4), 3).state == TriState::Yes);   // C4 = K3 with one edge split... via matching
  CHECK(contains_k_sub(star(4), 3).state == TriState::No);
  CHECK(contains_k_sub(complete(5), 5).state == TriState::Yes);
  CHECK(contains_k_sub(path(6), 3).state == TriState::No);
  // 1-subdivision of K5: 5 branches plus 10 internal vertices
  {
    std::vector<std::pair<int, int>> e;
    int internal = 5;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        e.emplace_back(i, internal);
        e.emplace_back(j, internal);
        ++internal;
      }
    Graph sub(15, e);
    auto res = contains_k_sub(sub, 5);
    REQUIRE(res.state == TriState::Yes);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->branches.size() == 5);
    CHECK(res.witness->paths.size() == 10);
  }
  CHECK_THROWS_AS(contains_k_sub(path(3), 1), shallow_error);
}

TEST_CASE("subdivision witness realizes the subdivision") {
  auto res = contains_k_sub(grid(3, 3), 3);
  REQUIRE(res.state == TriState::Yes);
  const auto& w = *res.witness;
  Graph g = grid(3, 3);
  std::set<int> used(w.branches.begin(), w.branches.end());
  for (auto [u, v, x] : w.paths) {
    CHECK(g.has_edge(u, x));
    CHECK(g.has_edge(x, v));
    CHECK(used.insert(x).second);  // internal vertices distinct from everything
  }
}

TEST_CASE("subdivision detection against the naive oracle") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + (int)(rng() % 7);  // 3..9
    int m = (int)(rng() % (n * (n - 1) / 2 + 1));
    Graph g = random_graph(n, m, rng());
    for (int k = 2; k <= 4; ++k) {
      auto res = contains_k_sub(g, k);
      REQUIRE(res.state != TriState::Unknown);
      CHECK((res.state == TriState::Yes) == naive_k_sub(g, k));
    }
  }
}

TEST_CASE("subdivision search budget produces Unknown, never a wrong answer") {
  Graph g = random_graph(12, 40, 5);
  auto res = contains_k_sub(g, 6, 2);  // absurdly small budget
  CHECK(res.state == TriState::Unknown);
}

TEST_CASE("omega of the depth-half minors") {
  CHECK(omega_half(cycle(4)).value() == 3);
  CHECK(omega_half(complete(5)).value() == 5);
  CHECK(omega_half(path(8)).value() == 2);
  CHECK(omega_half(star(6)).value() == 2);
  CHECK(omega_half(grid(3, 3)).value() == 3);
  CHECK(omega_half(empty_graph(3)).value() == 1);
  OmegaResult inexact;
  inexact.exact = false;
  CHECK_THROWS_AS(inexact.value(), shallow_error);
}

TEST_CASE("exact depth-half grad") {
  CHECK(nabla_half_exact(complete(4)) == Rational(3, 2));
  CHECK(nabla_half_exact(cycle(6)) == Rational(1));
  CHECK(nabla_half_exact(path(5)) == Rational(4, 5));
  CHECK(nabla_half_exact(star(6)) == Rational(5, 6));
  // cross-checked against an independent implementation
  CHECK(nabla_half_exact(grid(4, 4)) == Rational(7, 4));
  CHECK_THROWS_AS(nabla_half_exact(grid(5, 4)), shallow_error);  // over the cap
  // never below the depth-0 grad
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + (int)(rng() % 9);
    Graph g = random_graph(n, (int)(rng() % (n * (n - 1) / 2 + 1)), rng());
    Rational nh = nabla_half_exact(g);
    CHECK_FALSE(nh < densest_subgraph(g).density);
  }
}

TEST_CASE("greedy minor construction on complete bipartite hosts") {
  // B = the 2-side of K_{2,3}: with omega = 3 every A-vertex has low B-degree
  Graph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  VertexSet b{0, 1}, a{2, 3, 4};
  auto cert3 = greedy_half_minor(k23, a, b, 3);
  CHECK(cert3.A1.size() == 3);
  CHECK(cert3.A2.empty());
  CHECK(cert3.H.size() == 0);
  CHECK_FALSE(cert3.clique_violation);
  // with omega = 2 the first A-vertex adds the edge, the second finds H
  // complete on its neighborhood and certifies a larger clique
  auto cert2 = greedy_half_minor(k23, a, b, 2);
  CHECK(cert2.clique_violation);
  CHECK(cert2.H.size() == 1);
  CHECK(cert2.Z0 == VertexSet{2});
  CHECK(cert2.violation_witness == VertexSet{0, 1, 3});
}

TEST_CASE("triple variant completes on K_33 without a witness") {
  Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  auto cert = greedy_half_minor_triples(k33, {3, 4, 5}, {0, 1, 2}, 3);
  CHECK_FALSE(cert.kpq_witness);
  CHECK(cert.H.size() == 3);  // H fills up to a triangle
  CHECK(cert.Z0.size() == 3);
}

TEST_CASE("triple variant emits a genuine K_3p witness on K_36") {
  std::vector<std::pair<int, int>> e;
  for (int bside = 0; bside < 3; ++bside)
    for (int aside = 3; aside < 9; ++aside) e.emplace_back(bside, aside);
  Graph k36(9, e);
  VertexSet a{3, 4, 5, 6, 7, 8}, b{0, 1, 2};
  auto cert = greedy_half_minor_triples(k36, a, b, 3);
  REQUIRE(cert.kpq_witness);
  CHECK(cert.kpq_triple == VertexSet{0, 1, 2});
  CHECK(cert.kpq_avertices.size() == 3);
  for (int av : cert.kpq_avertices)
    for (int bv : cert.kpq_triple) CHECK(k36.has_edge(av, bv));
}

TEST_CASE("bipartite density check on a clean instance") {
  Graph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  auto rep = bipdens_check(k23, {2, 3, 4}, {0, 1});
  CHECK(rep.lhs == 6);
  CHECK(rep.exact);
  CHECK(rep.certified);
  CHECK(rep.slack >= 0);
  CHECK(rep.direct_slack >= 0);
  CHECK(rep.omega == 3);
  CHECK_FALSE(rep.omega_assumed);
  CHECK_THROWS_AS(bipdens_check(k23, {2, 3}, {0, 1, 4}), shallow_error);
  CHECK_THROWS_AS(bipdens_check(k23, {0, 2, 3}, {0, 1}), shallow_error);
}

TEST_CASE("bipartite density bound, substituted form can fail") {
  // grid(4,4) split into its two color classes: all grads exact, yet the
  // grad-product right-hand side drops below e(A,B). The unsubstituted form
  // with |A2| holds. This pins down why `certified` demands a nonnegative
  // coefficient or nonnegative slack rather than assuming the product form.
  Graph g = grid(4, 4);
  VertexSet a, b;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) ((i + j) % 2 == 0 ? a : b).push_back(i * 4 + j);
  auto rep = bipdens_check(g, a, b);
  CHECK(rep.lhs == 24);  // every edge crosses the bipartition
  CHECK(rep.exact);
  CHECK(rep.omega == 3);
  CHECK(rep.nabla0 == Rational(3, 2));
  CHECK(rep.nabla_half == Rational(7, 4));
  CHECK_FALSE(rep.coeff_nonneg);
  // (omega-1) n + (nabla0-omega+1)(nabla_half+1)|B| = 32 - (1/2)(11/4)(8) = 21
  CHECK(rep.rhs == doctest::Approx(21.0));
  CHECK(rep.slack < 0);
  CHECK_FALSE(rep.certified);
  CHECK(rep.direct_slack >= 0);
}

TEST_CASE("triple-variant density check on planar hosts") {
  for (std::uint64_t seed : {1ull, 4ull, 9ull}) {
    Graph g = random_planar(14, seed);
    VertexSet a, b;
    std::mt19937_64 rng(seed);
    for (int v = 0; v < g.order(); ++v) (rng() % 4 ? a : b).push_back(v);
    if (b.empty() || a.size() < b.size()) continue;
    auto rep = bipdens2_check(g, a, b, 3);  // planar graphs have no K_33 subgraph
    CHECK(rep.exact);
    CHECK(rep.slack >= 0);
    CHECK(rep.direct_slack >= 0);
    CHECK_FALSE(rep.cert.kpq_witness);
    CHECK(rep.triangle_bound_ok);
  }
  Graph g = grid(5, 5);
  VertexSet a, b;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) ((i + j) % 2 == 0 ? a : b).push_back(i * 5 + j);
  auto rep = bipdens2_check(g, a, b, 3);
  CHECK(rep.lhs == 40);
  CHECK_FALSE(rep.coeff_nonneg);  // nabla0 = 8/5 < 2
  CHECK(rep.direct_slack >= 0);
  CHECK_THROWS_AS(bipdens2_check(g, a, b, 1), shallow_error);
}

TEST_CASE("empty B side certifies trivially") {
  Graph g = path(4);
  auto rep = bipdens_check(g, {0, 1, 2, 3}, {});
  CHECK(rep.certified);
  CHECK(rep.lhs == 0);
  auto rep2 = bipdens2_check(g, {0, 1, 2, 3}, {}, 3);
  CHECK(rep2.certified);
}

TEST_CASE("triangle count") {
  CHECK(count_triangles(complete(4)) == 4);
  CHECK(count_triangles(complete(5)) == 10);
  CHECK(count_triangles(cycle(5)) == 0);
  CHECK(count_triangles(grid(3, 3)) == 0);
  CHECK(count_triangles(random_planar(20, 3)) >= 20 * 1 - 4);  // triangulation faces
}
