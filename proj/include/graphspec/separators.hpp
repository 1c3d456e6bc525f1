#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "graphspec/fourpoint.hpp"
#include "graphspec/graph.hpp"
#include "graphspec/spectra.hpp"

namespace graphspec {

struct split_error : graph_error {
  using graph_error::graph_error;
};

enum class SplitStrategy { Exhaustive, BfsLevel, DegeneracyColoring, FiedlerSweep };

inline const char* strategy_name(SplitStrategy s) {
  switch (s) {
    case SplitStrategy::Exhaustive: return "exhaustive";
    case SplitStrategy::BfsLevel: return "bfs-level";
    case SplitStrategy::DegeneracyColoring: return "degeneracy-coloring";
    case SplitStrategy::FiedlerSweep: return "fiedler-sweep";
  }
  return "?";
}

inline SplitStrategy parse_strategy(const std::string& s) {
  if (s == "exhaustive") return SplitStrategy::Exhaustive;
  if (s == "bfs-level") return SplitStrategy::BfsLevel;
  if (s == "degeneracy-coloring") return SplitStrategy::DegeneracyColoring;
  if (s == "fiedler-sweep") return SplitStrategy::FiedlerSweep;
  throw split_error("unknown strategy: " + s);
}

// {S, Z1, Z2} partition V, no Z1-Z2 edge, |Z1| <= |Z2| <= 2|Z1|.
struct BalancedSplit {
  VertexSet S, Z1, Z2;

  void check(const Graph& g) const {
    if (!sets_disjoint(S, Z1) || !sets_disjoint(S, Z2) || !sets_disjoint(Z1, Z2))
      throw split_error("BalancedSplit: sets overlap");
    if ((int)(S.size() + Z1.size() + Z2.size()) != g.order())
      throw split_error("BalancedSplit: not a partition");
    if (Z1.empty() || Z2.empty()) throw split_error("BalancedSplit: empty side");
    if (!(Z1.size() <= Z2.size() && Z2.size() <= 2 * Z1.size()))
      throw split_error("BalancedSplit: balance violated");
    if (cut_size(g, Z1, Z2) != 0) throw split_error("BalancedSplit: crossing edge");
  }
};

struct SeparatorDecomposition {
  VertexSet S0, S1, S2;
  std::array<VertexSet, 4> parts;   // Z11, Z12, Z21, Z22 (global ids)
  std::array<int, 4> assignment{0, 1, 2, 3};  // weight-chain role k -> part index
  bool fallback = false;            // no role permutation met the weight chains

  VertexSet separator() const { return set_union(set_union(S0, S1), S2); }

  void check(const Graph& g) const {
    std::vector<const VertexSet*> all{&S0, &S1, &S2, &parts[0], &parts[1], &parts[2], &parts[3]};
    std::size_t total = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      total += all[i]->size();
      for (std::size_t j = i + 1; j < all.size(); ++j)
        if (!sets_disjoint(*all[i], *all[j]))
          throw split_error("SeparatorDecomposition: sets overlap");
    }
    if ((int)total != g.order()) throw split_error("SeparatorDecomposition: not a partition");
    for (int i = 0; i < 4; ++i) {
      if (parts[i].empty()) throw split_error("SeparatorDecomposition: empty part");
      for (int j = i + 1; j < 4; ++j)
        if (cut_size(g, parts[i], parts[j]) != 0)
          throw split_error("SeparatorDecomposition: edge between parts");
    }
    std::array<int, 4> seen{0, 0, 0, 0};
    for (int k = 0; k < 4; ++k) seen[assignment[k]]++;
    for (int c : seen)
      if (c != 1) throw split_error("SeparatorDecomposition: bad assignment");
    if (!fallback) {
      auto w = [&](int k) { return (long long)parts[assignment[k]].size(); };
      if (!fourpoint_preconditions_hold(w(0), w(1), w(2), w(3)))
        throw split_error("SeparatorDecomposition: weight chains violated");
    }
  }
};

namespace detail {

// Can the component sizes be grouped into two bins z1 <= z2 <= 2*z1?
// Subset-sum DP with reconstruction; t = total size.
inline std::optional<std::vector<int>> balanced_grouping(const std::vector<int>& sizes) {
  int t = std::accumulate(sizes.begin(), sizes.end(), 0);
  if (t < 2) return std::nullopt;
  int lo = (t + 2) / 3, hi = t / 2;
  std::vector<int> reach(t + 1, -2);
  reach[0] = -1;
  for (int i = 0; i < (int)sizes.size(); ++i)
    for (int s = t; s >= sizes[i]; --s)
      if (reach[s] == -2 && reach[s - sizes[i]] != -2) reach[s] = i;
  for (int s = lo; s <= hi; ++s) {
    if (reach[s] == -2) continue;
    std::vector<int> picked;
    int cur = s;
    while (cur > 0) {
      picked.push_back(reach[cur]);
      cur -= sizes[reach[cur]];
    }
    return picked;  // component indices forming the lighter bin
  }
  return std::nullopt;
}

inline std::optional<BalancedSplit> split_from_grouping(const Graph& g, const VertexSet& s) {
  Graph rest = induced_subgraph(g, [&] {
    VertexSet comp;
    for (int v = 0; v < g.order(); ++v)
      if (!contains(s, v)) comp.push_back(v);
    return comp;
  }());
  VertexSet remaining;
  for (int v = 0; v < g.order(); ++v)
    if (!contains(s, v)) remaining.push_back(v);
  auto comps = components(rest);
  if (comps.size() < 2) return std::nullopt;
  std::vector<int> sizes;
  for (auto& c : comps) sizes.push_back((int)c.size());
  auto pick = balanced_grouping(sizes);
  if (!pick) return std::nullopt;
  std::vector<char> in1(comps.size(), 0);
  for (int i : *pick) in1[i] = 1;
  BalancedSplit bs;
  bs.S = s;
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (int v : comps[i]) (in1[i] ? bs.Z1 : bs.Z2).push_back(remaining[v]);
  std::sort(bs.Z1.begin(), bs.Z1.end());
  std::sort(bs.Z2.begin(), bs.Z2.end());
  if (bs.Z1.size() > bs.Z2.size()) std::swap(bs.Z1, bs.Z2);
  bs.check(g);
  return bs;
}

// First-fit decreasing into the lighter bin; the packing the heuristics use.
inline std::optional<BalancedSplit> first_fit_grouping(const Graph& g, const VertexSet& s) {
  VertexSet remaining;
  for (int v = 0; v < g.order(); ++v)
    if (!contains(s, v)) remaining.push_back(v);
  Graph rest = induced_subgraph(g, remaining);
  auto comps = components(rest);
  if (comps.size() < 2) return std::nullopt;
  std::vector<int> order(comps.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return comps[a].size() > comps[b].size(); });
  VertexSet z1, z2;
  std::size_t s1 = 0, s2 = 0;
  for (int i : order) {
    auto& bin = (s1 <= s2) ? z1 : z2;
    auto& sz = (s1 <= s2) ? s1 : s2;
    for (int v : comps[i]) bin.push_back(remaining[v]);
    sz += comps[i].size();
  }
  if (z1.size() > z2.size()) std::swap(z1, z2);
  if (z1.empty() || z2.size() > 2 * z1.size()) return std::nullopt;
  BalancedSplit bs;
  bs.S = s;
  bs.Z1 = make_vertex_set(z1);
  bs.Z2 = make_vertex_set(z2);
  bs.check(g);
  return bs;
}

inline std::vector<std::vector<int>> bfs_levels(const Graph& g, int start) {
  std::vector<int> dist(g.order(), -1);
  std::vector<std::vector<int>> levels;
  std::queue<int> q;
  q.push(start);
  dist[start] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if ((int)levels.size() <= dist[u]) levels.resize(dist[u] + 1);
    levels[dist[u]].push_back(u);
    for (int w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return levels;
}

inline std::vector<VertexSet> candidate_separators(const Graph& g, SplitStrategy strat);

// Heuristic packing with re-splitting: if the components cannot be balanced,
// split the largest one with the same strategy and absorb its separator.
inline std::optional<BalancedSplit> pack_or_resplit(const Graph& g, VertexSet s,
                                                    SplitStrategy strat, int depth) {
  auto direct = first_fit_grouping(g, s);
  if (direct) return direct;
  if (depth <= 0) return std::nullopt;
  VertexSet remaining;
  for (int v = 0; v < g.order(); ++v)
    if (!contains(s, v)) remaining.push_back(v);
  if (remaining.size() < 3) return std::nullopt;
  Graph rest = induced_subgraph(g, remaining);
  auto comps = components(rest);
  auto big = std::max_element(comps.begin(), comps.end(),
                              [](const VertexSet& a, const VertexSet& b) {
                                return a.size() < b.size();
                              });
  if (big->size() < 2) return std::nullopt;
  VertexSet big_global;
  for (int v : *big) big_global.push_back(remaining[v]);
  Graph sub = induced_subgraph(g, big_global);
  for (const auto& cand : candidate_separators(sub, strat)) {
    if (cand.empty()) continue;
    VertexSet merged = s;
    for (int v : cand) merged.push_back(big_global[v]);
    merged = make_vertex_set(merged);
    if (auto r = pack_or_resplit(g, merged, strat, depth - 1)) return r;
  }
  return std::nullopt;
}

inline std::vector<VertexSet> candidate_separators(const Graph& g, SplitStrategy strat) {
  std::vector<VertexSet> cands;
  if (components(g).size() > 1) cands.push_back({});
  switch (strat) {
    case SplitStrategy::Exhaustive:
      throw split_error("candidate_separators: exhaustive handled separately");
    case SplitStrategy::BfsLevel: {
      for (int s = 0; s < g.order(); ++s) {
        auto levels = bfs_levels(g, s);
        for (std::size_t k = 1; k + 1 < levels.size(); ++k)
          cands.push_back(make_vertex_set(levels[k]));
      }
      break;
    }
    case SplitStrategy::DegeneracyColoring: {
      // Proper coloring in reverse degeneracy order; the separator is
      // everything outside the largest color class.
      auto [order, d] = degeneracy_order(g);
      std::vector<int> color(g.order(), -1);
      int ncolors = 0;
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::vector<char> used(d + 2, 0);
        for (int w : g.neighbors(v))
          if (color[w] >= 0) used[color[w]] = 1;
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
        ncolors = std::max(ncolors, c + 1);
      }
      std::vector<int> count(ncolors, 0);
      for (int v = 0; v < g.order(); ++v) count[color[v]]++;
      int biggest = (int)(std::max_element(count.begin(), count.end()) - count.begin());
      VertexSet s;
      for (int v = 0; v < g.order(); ++v)
        if (color[v] != biggest) s.push_back(v);
      cands.push_back(s);
      break;
    }
    case SplitStrategy::FiedlerSweep: {
      if (g.order() < 2) break;
      Embedding fv = fiedler_vector(g);
      std::vector<int> order(g.order());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return fv.at(a, 0) < fv.at(b, 0); });
      int half = g.order() / 2;
      std::vector<char> left(g.order(), 0);
      for (int i = 0; i < half; ++i) left[order[i]] = 1;
      bool left_smaller = half <= g.order() - half;
      VertexSet s;
      for (auto [u, v] : g.edges()) {
        if (left[u] == left[v]) continue;
        int on_left = left[u] ? u : v;
        int on_right = left[u] ? v : u;
        s.push_back(left_smaller ? on_left : on_right);
      }
      cands.push_back(make_vertex_set(s));
      break;
    }
  }
  // Smallest candidates first; keep order stable and duplicates dropped.
  std::stable_sort(cands.begin(), cands.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  return cands;
}

}  // namespace detail

// Balanced vertex separator search. Exhaustive returns a minimum-size
// separator (n <= 18); heuristics return the smallest split their candidate
// policy reaches, re-splitting oversized components when needed.
inline BalancedSplit find_balanced_split(const Graph& g, SplitStrategy strat) {
  if (g.order() < 2) throw split_error("find_balanced_split: n >= 2 required");
  if (strat == SplitStrategy::Exhaustive) {
    if (g.order() > 18) throw split_error("find_balanced_split: exhaustive capped at n = 18");
    int n = g.order();
    for (int size = 0; size <= n - 2; ++size) {
      // All size-subsets in lexicographic order. Among the minimum size, the
      // separator with the fewest outgoing edges wins (first in lex on ties).
      std::optional<BalancedSplit> best;
      long long best_cut = 0;
      std::vector<int> idx(size);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        VertexSet s(idx.begin(), idx.end());
        if (auto r = detail::split_from_grouping(g, s)) {
          long long cut = cut_size(g, r->Z1, r->S) + cut_size(g, r->Z2, r->S);
          if (!best || cut < best_cut) {
            best = *r;
            best_cut = cut;
          }
        }
        int i = size - 1;
        while (i >= 0 && idx[i] == n - size + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
      }
      if (best) return *best;
    }
    throw split_error("find_balanced_split: no balanced separator exists (exhaustive)");
  }
  for (const auto& cand : detail::candidate_separators(g, strat))
    if (auto r = detail::pack_or_resplit(g, cand, strat, 16)) return *r;
  throw split_error(std::string("find_balanced_split: no valid split found (strategy ") +
                    strategy_name(strat) + ")");
}

// Two-level decomposition: split G, then each side, and pick a role
// permutation for the four parts satisfying the four-point weight chains.
inline SeparatorDecomposition recursive_split(const Graph& g, SplitStrategy strat) {
  if (g.order() < 8) throw split_error("recursive_split: n >= 8 required");
  BalancedSplit top = find_balanced_split(g, strat);

  auto split_side = [&](const VertexSet& z, VertexSet& s_out, VertexSet& a_out,
                        VertexSet& b_out) {
    Graph sub = induced_subgraph(g, z);
    BalancedSplit bs = find_balanced_split(sub, strat);
    for (int v : bs.S) s_out.push_back(z[v]);
    for (int v : bs.Z1) a_out.push_back(z[v]);
    for (int v : bs.Z2) b_out.push_back(z[v]);
    std::sort(s_out.begin(), s_out.end());
    std::sort(a_out.begin(), a_out.end());
    std::sort(b_out.begin(), b_out.end());
  };

  SeparatorDecomposition d;
  d.S0 = top.S;
  split_side(top.Z1, d.S1, d.parts[0], d.parts[1]);
  split_side(top.Z2, d.S2, d.parts[2], d.parts[3]);

  // <= 8 permutations: swap within each pair, swap the pairs.
  bool found = false;
  for (int pair_swap = 0; pair_swap < 2 && !found; ++pair_swap)
    for (int sw1 = 0; sw1 < 2 && !found; ++sw1)
      for (int sw2 = 0; sw2 < 2 && !found; ++sw2) {
        std::array<int, 4> asg;
        int p1a = 0 ^ sw1, p1b = 1 ^ sw1;
        int p2a = 2 + (0 ^ sw2), p2b = 2 + (1 ^ sw2);
        if (pair_swap == 0)
          asg = {p1a, p1b, p2a, p2b};
        else
          asg = {p2a, p2b, p1a, p1b};
        auto w = [&](int k) { return (long long)d.parts[asg[k]].size(); };
        if (fourpoint_preconditions_hold(w(0), w(1), w(2), w(3))) {
          d.assignment = asg;
          found = true;
        }
      }
  d.fallback = !found;
  d.check(g);
  return d;
}

// phi(v) = z_{role(part containing v)}, 0 on the separator.
inline Embedding test_vector(const Graph& g, const SeparatorDecomposition& d,
                             const FourPointSolution& sol) {
  Embedding phi = Embedding::zeros(g.order(), 2);
  for (int k = 0; k < 4; ++k) {
    auto z = sol.points[k];
    for (int v : d.parts[d.assignment[k]]) {
      phi.at(v, 0) = z.real();
      phi.at(v, 1) = z.imag();
    }
  }
  return phi;
}

struct SepBoundResult {
  double bound;
  SeparatorDecomposition decomposition;
  FourPointSolution solution;
  Embedding phi;
  double rayleigh;
};

// lambda_2(G) <= e(S, V-S) / (n - |S|), realized as the Rayleigh quotient of
// the unit test vector constant on parts. Both routes are computed and must
// agree to 1e-9.
inline SepBoundResult sep_upper_bound(const Graph& g, SplitStrategy strat) {
  SeparatorDecomposition d = recursive_split(g, strat);
  if (d.fallback) {
    // The polygon route needs max weight <= sum of the others; shrink an
    // oversized part into the separator (still a valid decomposition, the
    // bound just weakens along with n - |S|).
    auto heaviest = [&] {
      int b = 0;
      for (int k = 1; k < 4; ++k)
        if (d.parts[k].size() > d.parts[b].size()) b = k;
      return b;
    };
    for (int b = heaviest();
         (long long)d.parts[b].size() >
         (long long)(d.parts[0].size() + d.parts[1].size() + d.parts[2].size() +
                     d.parts[3].size() - d.parts[b].size());
         b = heaviest()) {
      d.S0 = set_union(d.S0, {d.parts[b].back()});
      d.parts[b].pop_back();
    }
    d.check(g);
  }
  std::array<long long, 4> w;
  for (int k = 0; k < 4; ++k) w[k] = (long long)d.parts[d.assignment[k]].size();
  FourPointSolution sol = d.fallback ? polygon_solve(w[0], w[1], w[2], w[3])
                                     : four_point_solve(w[0], w[1], w[2], w[3]);
  Embedding phi = test_vector(g, d, sol);
  VertexSet s = d.separator();
  VertexSet rest;
  for (int v = 0; v < g.order(); ++v)
    if (!contains(s, v)) rest.push_back(v);
  double bound = (double)cut_size(g, s, rest) / (double)rest.size();
  double rq = rayleigh_quotient(g, phi);
  if (std::abs(bound - rq) > 1e-9)
    throw split_error("sep_upper_bound: Rayleigh cross-check failed");
  return {bound, std::move(d), sol, std::move(phi), rq};
}

}  // namespace graphspec
