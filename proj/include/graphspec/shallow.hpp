#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "graphspec/graph.hpp"
#include "graphspec/maxflow.hpp"
#include "graphspec/rational.hpp"

namespace graphspec {

struct shallow_error : graph_error {
  using graph_error::graph_error;
};

// ---------------------------------------------------------------------------
// Exact densest subgraph (depth-0 topological grad) via max-flow.

struct DensestResult {
  VertexSet set;
  Rational density;
};

// Goldberg's construction: for a guess a/b there is a subgraph of strictly
// larger density iff the min cut drops below b*m*n. Iterating on the exact
// density of the extracted side terminates at the maximizer.
inline DensestResult densest_subgraph(const Graph& g) {
  int n = g.order();
  if (n < 1) throw shallow_error("densest_subgraph: n >= 1");
  long long m = g.size();
  VertexSet best;
  for (int v = 0; v < n; ++v) best.push_back(v);
  Rational dens(m, n);
  if (m == 0) return {best, Rational(0)};
  while (true) {
    long long a = dens.num, b = dens.den;
    MaxFlow flow(n + 2);
    int src = n, sink = n + 1;
    for (int v = 0; v < n; ++v) {
      flow.add_edge(src, v, b * m);
      flow.add_edge(v, sink, b * (m - g.degree(v)) + 2 * a);
    }
    for (auto [u, v] : g.edges()) {
      flow.add_edge(u, v, b);
      flow.add_edge(v, u, b);
    }
    long long cut = flow.solve(src, sink);
    if (cut >= b * m * n) break;
    auto side = flow.min_cut_side();
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if (side[v]) s.push_back(v);
    if (s.empty()) break;
    long long edges_inside = 0;
    for (auto [u, v] : g.edges())
      if (contains(s, u) && contains(s, v)) ++edges_inside;
    Rational cand(edges_inside, (long long)s.size());
    if (!(dens < cand)) break;
    dens = cand;
    best = s;
  }
  return {best, dens};
}

inline Rational mad(const Graph& g) {
  auto d = densest_subgraph(g).density;
  return Rational(2 * d.num, d.den);
}

// ---------------------------------------------------------------------------
// <=1-subdivision detection (omega of the depth-1/2 shallow minors).

enum class TriState { No, Yes, Unknown };

struct SubdivWitness {
  VertexSet branches;
  // For each branch pair realized by a 2-path: (u, v, internal vertex).
  std::vector<std::tuple<int, int, int>> paths;
};

struct SubdivResult {
  TriState state = TriState::No;
  std::optional<SubdivWitness> witness;
};

namespace detail {

// Kuhn augmenting-path matching: left items each carry a candidate list of
// right vertices. Returns matched right vertex per left item, or nullopt if
// some item stays unmatched.
inline std::optional<std::vector<int>> perfect_left_matching(
    const std::vector<std::vector<int>>& cand, int n_right) {
  int L = (int)cand.size();
  std::vector<int> match_right(n_right, -1), match_left(L, -1);
  for (int i = 0; i < L; ++i) {
    std::vector<char> used(n_right, 0);
    std::vector<int> stack;
    // recursive augmenting search
    auto dfs = [&](auto&& self, int u) -> bool {
      for (int r : cand[u]) {
        if (used[r]) continue;
        used[r] = 1;
        if (match_right[r] < 0 || self(self, match_right[r])) {
          match_right[r] = u;
          match_left[u] = r;
          return true;
        }
      }
      return false;
    };
    if (!dfs(dfs, i)) return std::nullopt;
  }
  return match_left;
}

}  // namespace detail

// Does G contain a <=1-subdivision of K_k? Branch candidates need degree
// >= k-1 and pairwise distance <= 2; internal vertices are assigned by
// bipartite matching so they stay distinct. "Unknown" when the search budget
// runs out; never a wrong answer.
inline SubdivResult contains_k_sub(const Graph& g, int k,
                                   long long budget = 20'000'000) {
  if (k < 2) throw shallow_error("contains_k_sub: k >= 2");
  int n = g.order();
  if (n < k) return {TriState::No, std::nullopt};

  std::vector<int> cands;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= k - 1) cands.push_back(v);
  if ((int)cands.size() < k) return {TriState::No, std::nullopt};

  // close(u,v): adjacent or sharing a neighbor (necessary for any branch pair)
  std::vector<std::vector<char>> close(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u) {
    for (int w : g.neighbors(u)) {
      close[u][w] = 1;
      for (int x : g.neighbors(w)) close[u][x] = 1;
    }
    close[u][u] = 0;
  }

  long long steps = 0;
  std::vector<int> chosen;
  bool exceeded = false;
  SubdivResult result;

  auto try_complete = [&](const std::vector<int>& branch) -> bool {
    ++steps;
    std::vector<std::pair<int, int>> need;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (!g.has_edge(branch[i], branch[j])) need.emplace_back(branch[i], branch[j]);
    std::vector<std::vector<int>> cand_lists;
    for (auto [u, v] : need) {
      std::vector<int> common;
      for (int w : g.neighbors(u))
        if (g.has_edge(w, v) &&
            std::find(branch.begin(), branch.end(), w) == branch.end())
          common.push_back(w);
      if (common.empty()) return false;
      cand_lists.push_back(std::move(common));
    }
    auto match = detail::perfect_left_matching(cand_lists, n);
    if (!match) return false;
    SubdivWitness w;
    w.branches = make_vertex_set(branch);
    for (std::size_t i = 0; i < need.size(); ++i)
      w.paths.emplace_back(need[i].first, need[i].second, (*match)[i]);
    result = {TriState::Yes, w};
    return true;
  };

  auto rec = [&](auto&& self, std::size_t start) -> bool {
    if (exceeded) return false;
    if (++steps > budget) {
      exceeded = true;
      return false;
    }
    if ((int)chosen.size() == k) return try_complete(chosen);
    for (std::size_t i = start; i < cands.size(); ++i) {
      int v = cands[i];
      bool ok = true;
      for (int u : chosen)
        if (!close[u][v]) { ok = false; break; }
      if (!ok) continue;
      chosen.push_back(v);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  if (rec(rec, 0)) return result;
  if (exceeded) return {TriState::Unknown, std::nullopt};
  return {TriState::No, std::nullopt};
}

struct OmegaResult {
  int lo = 1;   // largest k with an affirmative certificate
  int hi = 1;   // upper end; equals lo when exact
  bool exact = true;

  int value() const {
    if (!exact) throw shallow_error("omega_half: result not exact");
    return lo;
  }
};

// Largest k with a <=1-subdivision of K_k in G. Monotone in k, so we stop at
// the first negative answer.
inline OmegaResult omega_half(const Graph& g, int k_cap = 8,
                              long long budget = 20'000'000) {
  OmegaResult r;
  if (g.order() < 1) throw shallow_error("omega_half: n >= 1");
  r.lo = r.hi = 1;
  for (int k = 2; k <= std::min(k_cap, g.order()); ++k) {
    auto res = contains_k_sub(g, k, budget);
    if (res.state == TriState::Yes) {
      r.lo = r.hi = k;
    } else if (res.state == TriState::No) {
      return r;
    } else {
      r.hi = k_cap;
      r.exact = false;
      return r;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Greedy shallow-minor constructions on a bipartition (A, B).

struct ShallowMinorCertificate {
  VertexSet B, A1, A2, Z0;
  Graph H;  // vertex i of H corresponds to B[i]
  std::vector<std::tuple<int, int, int>> edge_witness;  // (host u, host v, host x in A2)

  bool clique_violation = false;
  VertexSet violation_witness;  // x plus its B-neighborhood

  // triple bookkeeping for the K_{3,p} route (empty on the plain route)
  int p = 0;
  std::vector<std::vector<std::pair<std::array<int, 3>, int>>> triple_sets;  // Z_1..Z_{p-1}
  bool kpq_witness = false;
  VertexSet kpq_triple;     // three B vertices
  VertexSet kpq_avertices;  // p vertices of A adjacent to all three

  Rational density() const {
    if (B.empty()) return Rational(0);
    return Rational((long long)H.size(), (long long)B.size());
  }

  void check(const Graph& host) const {
    VertexSet used;
    for (auto [u, v, x] : edge_witness) {
      if (!host.has_edge(x, u) || !host.has_edge(x, v))
        throw shallow_error("certificate: witness not adjacent to both endpoints");
      used.push_back(x);
    }
    if (make_vertex_set(used).size() != edge_witness.size())
      throw shallow_error("certificate: witnesses not distinct");
    if ((std::size_t)H.size() != edge_witness.size())
      throw shallow_error("certificate: ||H|| != witness count");
    if (!clique_violation && !kpq_witness && H.size() != (int)Z0.size())
      throw shallow_error("certificate: ||H|| != |Z0|");
    auto b_index = [&](int hostv) {
      auto it = std::lower_bound(B.begin(), B.end(), hostv);
      if (it == B.end() || *it != hostv) throw shallow_error("certificate: vertex not in B");
      return (int)(it - B.begin());
    };
    for (auto [u, v, x] : edge_witness)
      if (!H.has_edge(b_index(u), b_index(v)))
        throw shallow_error("certificate: H missing a witnessed edge");
    for (const auto& zi : triple_sets)
      for (const auto& [t, x] : zi) {
        int a = b_index(t[0]), b = b_index(t[1]), c = b_index(t[2]);
        if (!H.has_edge(a, b) || !H.has_edge(a, c) || !H.has_edge(b, c))
          throw shallow_error("certificate: triple is not a triangle of H");
        for (int tv : t)
          if (!host.has_edge(x, tv))
            throw shallow_error("certificate: triple witness not adjacent");
      }
    if (kpq_witness) {
      if ((int)kpq_avertices.size() != p)
        throw shallow_error("certificate: K_{3,p} witness needs p A-vertices");
      for (int a : kpq_avertices)
        for (int b : kpq_triple)
          if (!host.has_edge(a, b))
            throw shallow_error("certificate: K_{3,p} witness not a subgraph");
    }
  }
};

namespace detail {

inline std::vector<int> b_neighbors(const Graph& g, int x, const VertexSet& b) {
  std::vector<int> out;
  for (int w : g.neighbors(x))
    if (contains(b, w)) out.push_back(w);
  return out;
}

}  // namespace detail

// Greedy construction from the bipartite edge bound: vertices of A with
// B-degree >= omega each contribute one new H-edge, or expose a clique of
// size > omega in the depth-1/2 minors (a useful certificate, not a failure).
inline ShallowMinorCertificate greedy_half_minor(const Graph& g, const VertexSet& a,
                                                 const VertexSet& b, int omega) {
  if (!sets_disjoint(a, b)) throw shallow_error("greedy_half_minor: A, B overlap");
  if (omega < 2) throw shallow_error("greedy_half_minor: omega >= 2");
  ShallowMinorCertificate cert;
  cert.B = b;
  int nb = (int)b.size();
  auto b_index = [&](int v) {
    return (int)(std::lower_bound(b.begin(), b.end(), v) - b.begin());
  };
  std::vector<std::vector<char>> hadj(nb, std::vector<char>(nb, 0));
  std::vector<std::pair<int, int>> hedges;
  for (int x : a) {
    auto nbrs = detail::b_neighbors(g, x, b);
    if ((int)nbrs.size() <= omega - 1) {
      cert.A1.push_back(x);
      continue;
    }
    cert.A2.push_back(x);
    bool added = false;
    for (std::size_t i = 0; i < nbrs.size() && !added; ++i)
      for (std::size_t j = i + 1; j < nbrs.size() && !added; ++j) {
        int u = b_index(nbrs[i]), v = b_index(nbrs[j]);
        if (!hadj[u][v]) {
          hadj[u][v] = hadj[v][u] = 1;
          hedges.emplace_back(u, v);
          cert.edge_witness.emplace_back(nbrs[i], nbrs[j], x);
          cert.Z0.push_back(x);
          added = true;
        }
      }
    if (!added) {
      cert.clique_violation = true;
      cert.violation_witness = make_vertex_set([&] {
        std::vector<int> w = nbrs;
        w.push_back(x);
        return w;
      }());
      break;
    }
  }
  cert.H = Graph(nb, std::move(hedges));
  cert.check(g);
  return cert;
}

// K_{3,p} variant: when a vertex of A2 cannot add an H-edge, its neighborhood
// triples (all triangles of H) are first-fit inserted into Z_1..Z_{p-1}; a
// triple saturating every set yields a K_{3,p} subgraph witness.
inline ShallowMinorCertificate greedy_half_minor_triples(const Graph& g, const VertexSet& a,
                                                         const VertexSet& b, int p) {
  if (!sets_disjoint(a, b)) throw shallow_error("greedy_half_minor_triples: A, B overlap");
  if (p < 2) throw shallow_error("greedy_half_minor_triples: p >= 2");
  ShallowMinorCertificate cert;
  cert.B = b;
  cert.p = p;
  cert.triple_sets.assign(p - 1, {});
  int nb = (int)b.size();
  auto b_index = [&](int v) {
    return (int)(std::lower_bound(b.begin(), b.end(), v) - b.begin());
  };
  std::vector<std::vector<char>> hadj(nb, std::vector<char>(nb, 0));
  std::vector<std::pair<int, int>> hedges;
  std::vector<std::set<std::array<int, 3>>> zsets(p - 1);
  for (int x : a) {
    auto nbrs = detail::b_neighbors(g, x, b);
    if ((int)nbrs.size() <= 2) {
      cert.A1.push_back(x);
      continue;
    }
    cert.A2.push_back(x);
    bool added = false;
    for (std::size_t i = 0; i < nbrs.size() && !added; ++i)
      for (std::size_t j = i + 1; j < nbrs.size() && !added; ++j) {
        int u = b_index(nbrs[i]), v = b_index(nbrs[j]);
        if (!hadj[u][v]) {
          hadj[u][v] = hadj[v][u] = 1;
          hedges.emplace_back(u, v);
          cert.edge_witness.emplace_back(nbrs[i], nbrs[j], x);
          cert.Z0.push_back(x);
          added = true;
        }
      }
    if (added) continue;
    // All B-neighbor pairs adjacent in H: every neighbor triple is a triangle.
    bool placed = false;
    for (std::size_t i = 0; i < nbrs.size() && !placed; ++i)
      for (std::size_t j = i + 1; j < nbrs.size() && !placed; ++j)
        for (std::size_t k = j + 1; k < nbrs.size() && !placed; ++k) {
          std::array<int, 3> t{nbrs[i], nbrs[j], nbrs[k]};
          for (int zi = 0; zi < p - 1; ++zi)
            if (!zsets[zi].count(t)) {
              zsets[zi].insert(t);
              cert.triple_sets[zi].emplace_back(t, x);
              placed = true;
              break;
            }
        }
    if (!placed) {
      // Smallest triple saturates Z_1..Z_{p-1}: its p-1 recorded witnesses
      // plus x give p vertices of A all adjacent to the same three B vertices.
      std::array<int, 3> t{nbrs[0], nbrs[1], nbrs[2]};
      cert.kpq_witness = true;
      cert.kpq_triple = {t[0], t[1], t[2]};
      std::vector<int> avs{x};
      for (int zi = 0; zi < p - 1; ++zi)
        for (const auto& [tt, w] : cert.triple_sets[zi])
          if (tt == t) avs.push_back(w);
      cert.kpq_avertices = make_vertex_set(avs);
      break;
    }
  }
  cert.H = Graph(nb, std::move(hedges));
  cert.check(g);
  return cert;
}

// ---------------------------------------------------------------------------
// Exact depth-1/2 topological grad by enumeration (small n).

inline Rational nabla_half_exact(const Graph& g, int n_cap = 16) {
  int n = g.order();
  if (n > n_cap || n > 30)
    throw shallow_error("nabla_half_exact: size budget exceeded");
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  Rational best(0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int sz = std::popcount(mask);
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) verts.push_back(v);
    int direct = 0;
    std::vector<std::pair<int, int>> nonadj;
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        if (adj[verts[i]] >> verts[j] & 1)
          ++direct;
        else if (adj[verts[i]] & adj[verts[j]] & ~mask)
          nonadj.emplace_back(verts[i], verts[j]);
      }
    int ub = direct + std::min((int)nonadj.size(), n - sz);
    if (!(best < Rational(ub, sz))) continue;
    // maximum realizable edges = direct + max matching pairs <-> external
    // subdivision vertices
    std::vector<std::vector<int>> cand;
    for (auto [u, v] : nonadj) {
      std::uint32_t common = adj[u] & adj[v] & ~mask;
      std::vector<int> c;
      for (int w = 0; w < n; ++w)
        if (common >> w & 1) c.push_back(w);
      cand.push_back(std::move(c));
    }
    // greedy-free exact matching via Kuhn, one pair at a time
    std::vector<int> match_right(n, -1);
    int matched = 0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      std::vector<char> used(n, 0);
      auto dfs = [&](auto&& self, int u) -> bool {
        for (int r : cand[u]) {
          if (used[r]) continue;
          used[r] = 1;
          if (match_right[r] < 0 || self(self, match_right[r])) {
            match_right[r] = (int)u;
            return true;
          }
        }
        return false;
      };
      if (dfs(dfs, (int)i)) ++matched;
    }
    Rational d(direct + matched, sz);
    if (best < d) best = d;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Grad report and the two bipartite edge bounds.

struct GradReport {
  Rational nabla0;
  Rational nabla_half_lower;
  std::optional<Rational> nabla_half_exact_value;
  OmegaResult omega;
};

inline GradReport grad_report(const Graph& g, int exact_cap = 16) {
  GradReport r;
  r.nabla0 = densest_subgraph(g).density;
  if (g.order() <= exact_cap) {
    r.nabla_half_exact_value = nabla_half_exact(g, exact_cap);
    r.nabla_half_lower = *r.nabla_half_exact_value;
  } else {
    r.nabla_half_lower = r.nabla0;  // subgraphs are depth-1/2 minors
  }
  r.omega = omega_half(g);
  return r;
}

struct BipdensReport {
  long long lhs = 0;  // e(A,B)
  double rhs = 0;
  double slack = 0;
  bool exact = false;      // every grad in the RHS is exact
  bool certified = false;  // nonneg slack implies the true inequality
  double direct_rhs = 0;   // with |A2| + |B| in place of the grad product
  double direct_slack = 0;
  bool coeff_nonneg = false;
  int omega = 0;
  bool omega_assumed = false;
  Rational nabla0;
  Rational nabla_half;
  bool nabla_half_is_exact = false;
  bool a2_check_applicable = false;
  bool a2_check_ok = false;  // |A2| <= nabla_half * |B|
  ShallowMinorCertificate cert;
};

// e(A,B) <= (omega-1) n + (nabla0 - omega + 1)(nabla_half + 1) |B|.
// With only a lower bound on nabla_half the check certifies the true
// inequality only when the nabla_half coefficient is nonnegative.
inline BipdensReport bipdens_check(const Graph& g, const VertexSet& a, const VertexSet& b,
                                   std::optional<int> omega_bound = std::nullopt,
                                   int exact_cap = 16) {
  if (a.size() < b.size()) throw shallow_error("bipdens_check: need |A| >= |B|");
  if (!sets_disjoint(a, b)) throw shallow_error("bipdens_check: A, B overlap");
  BipdensReport rep;
  rep.lhs = cut_size(g, a, b);
  if (b.empty()) {
    rep.rhs = 0;
    rep.slack = 0;
    rep.exact = true;
    rep.certified = true;
    rep.cert.H = Graph(0, {});
    return rep;
  }
  if (omega_bound) {
    rep.omega = *omega_bound;
    rep.omega_assumed = true;
  } else {
    rep.omega = omega_half(g).value();
  }
  rep.nabla0 = densest_subgraph(g).density;
  rep.cert = greedy_half_minor(g, a, b, rep.omega);
  if (g.order() <= exact_cap) {
    rep.nabla_half = nabla_half_exact(g, exact_cap);
    rep.nabla_half_is_exact = true;
  } else {
    rep.nabla_half = std::max(rep.nabla0, rep.cert.density());
  }
  long long n = (long long)a.size() + (long long)b.size();
  Rational coeff = rep.nabla0 - Rational(rep.omega - 1);
  rep.coeff_nonneg = coeff >= Rational(0);
  Rational rhs = Rational((rep.omega - 1) * n) +
                 coeff * (rep.nabla_half + Rational(1)) * Rational((long long)b.size());
  rep.rhs = rhs.to_double();
  rep.slack = (rhs - Rational(rep.lhs)).to_double();
  // Unsubstituted form: counts |A2| itself, valid for any coefficient sign.
  Rational direct = Rational((rep.omega - 1) * n) +
                    coeff * Rational((long long)(rep.cert.A2.size() + b.size()));
  rep.direct_rhs = direct.to_double();
  rep.direct_slack = (direct - Rational(rep.lhs)).to_double();
  rep.exact = rep.nabla_half_is_exact && !rep.omega_assumed;
  bool sound = rep.nabla_half_is_exact || coeff >= Rational(0);
  rep.certified = sound && rep.slack >= 0 && !rep.cert.clique_violation;
  if (rep.nabla_half_is_exact) {
    rep.a2_check_applicable = true;
    rep.a2_check_ok = Rational((long long)rep.cert.A2.size()) <=
                      rep.nabla_half * Rational((long long)b.size());
  }
  return rep;
}

struct Bipdens2Report {
  long long lhs = 0;
  double rhs = 0;
  double slack = 0;
  bool exact = false;
  bool certified = false;
  double direct_rhs = 0;
  double direct_slack = 0;
  bool coeff_nonneg = false;
  int p = 0;
  Rational nabla0;
  Rational nabla_half;
  bool nabla_half_is_exact = false;
  long long h_triangles = 0;
  bool triangle_bound_ok = false;  // triangles(H) <= 2 nabla0(H)^2 |H|
  ShallowMinorCertificate cert;
};

inline long long count_triangles(const Graph& g) {
  long long t = 0;
  for (auto [u, v] : g.edges())
    for (int w : g.neighbors(u))
      if (w > v && g.has_edge(v, w)) ++t;
  return t;
}

// e(A,B) <= 2n + (nabla0 - 2)((p-1) nabla_half^2 + nabla_half + 1) |B|,
// for K_{3,p}-free hosts (caller asserts freeness).
inline Bipdens2Report bipdens2_check(const Graph& g, const VertexSet& a, const VertexSet& b,
                                     int p, int exact_cap = 16) {
  if (a.size() < b.size()) throw shallow_error("bipdens2_check: need |A| >= |B|");
  if (!sets_disjoint(a, b)) throw shallow_error("bipdens2_check: A, B overlap");
  if (p < 2) throw shallow_error("bipdens2_check: p >= 2");
  Bipdens2Report rep;
  rep.p = p;
  rep.lhs = cut_size(g, a, b);
  if (b.empty()) {
    rep.exact = true;
    rep.certified = true;
    rep.triangle_bound_ok = true;
    rep.cert.H = Graph(0, {});
    return rep;
  }
  rep.nabla0 = densest_subgraph(g).density;
  rep.cert = greedy_half_minor_triples(g, a, b, p);
  if (g.order() <= exact_cap) {
    rep.nabla_half = nabla_half_exact(g, exact_cap);
    rep.nabla_half_is_exact = true;
  } else {
    rep.nabla_half = std::max(rep.nabla0, rep.cert.density());
  }
  rep.h_triangles = count_triangles(rep.cert.H);
  Rational h0 = densest_subgraph(rep.cert.H).density;
  rep.triangle_bound_ok =
      Rational(rep.h_triangles) <=
      Rational(2) * h0 * h0 * Rational((long long)rep.cert.H.order());
  long long n = (long long)a.size() + (long long)b.size();
  Rational nh = rep.nabla_half;
  Rational coeff = rep.nabla0 - Rational(2);
  rep.coeff_nonneg = coeff >= Rational(0);
  Rational rhs = Rational(2 * n) +
                 coeff * (Rational(p - 1) * nh * nh + nh + Rational(1)) *
                     Rational((long long)b.size());
  rep.rhs = rhs.to_double();
  rep.slack = (rhs - Rational(rep.lhs)).to_double();
  Rational direct = Rational(2 * n) +
                    coeff * Rational((long long)(rep.cert.A2.size() + b.size()));
  rep.direct_rhs = direct.to_double();
  rep.direct_slack = (direct - Rational(rep.lhs)).to_double();
  rep.exact = rep.nabla_half_is_exact;
  bool sound = rep.nabla_half_is_exact || coeff >= Rational(0);
  rep.certified = sound && rep.slack >= 0 && !rep.cert.kpq_witness;
  return rep;
}

}  // namespace graphspec
