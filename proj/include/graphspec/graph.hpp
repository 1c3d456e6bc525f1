#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphspec {

struct graph_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sorted, duplicate-free vertex ids.
using VertexSet = std::vector<int>;

inline VertexSet make_vertex_set(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool sets_disjoint(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out.empty();
}

// Undirected simple graph on dense 0-based vertex ids. Immutable after
// construction; edges are stored normalized (u < v) and sorted.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw graph_error("Graph: negative order");
    for (auto& [u, v] : edges) {
      if (u == v) throw graph_error("Graph: self-loop at vertex " + std::to_string(u));
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw graph_error("Graph: endpoint out of range");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw graph_error("Graph: parallel edge");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  int order() const { return n_; }                     // |G|
  int size() const { return (int)edges_.size(); }      // ||G||
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return (int)adj_[v].size(); }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

// ---------------------------------------------------------------------------
// Basic graph operations

inline int cut_size(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (!sets_disjoint(a, b)) throw graph_error("cut_size: sets overlap");
  int count = 0;
  for (auto [u, v] : g.edges()) {
    bool ua = contains(a, u), ub = contains(b, u);
    bool va = contains(a, v), vb = contains(b, v);
    if ((ua && vb) || (ub && va)) ++count;
  }
  return count;
}

// Vertex i of the result corresponds to s[i].
inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < (int)s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.order()) throw graph_error("induced_subgraph: bad vertex");
    pos[s[i]] = i;
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (pos[u] >= 0 && pos[v] >= 0) edges.emplace_back(pos[u], pos[v]);
  return Graph((int)s.size(), std::move(edges));
}

// Connected components, ordered by smallest contained vertex.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> comps;
  std::vector<char> seen(g.order(), 0);
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : g.neighbors(u))
        if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Complete join: all of g1, g2 (ids shifted by |g1|), and every cross pair.
inline Graph complete_join(const Graph& g1, const Graph& g2) {
  int n1 = g1.order(), n2 = g2.order();
  std::vector<std::pair<int, int>> edges = g1.edges();
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) edges.emplace_back(u, n1 + v);
  return Graph(n1 + n2, std::move(edges));
}

// Smallest-last (degeneracy) ordering; returns the order and the degeneracy d.
inline std::pair<std::vector<int>, int> degeneracy_order(const Graph& g) {
  int n = g.order();
  std::vector<int> deg(n), order;
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  int d = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
    d = std::max(d, deg[best]);
    removed[best] = 1;
    order.push_back(best);
    for (int w : g.neighbors(best))
      if (!removed[w]) --deg[w];
  }
  return {order, d};
}

// ---------------------------------------------------------------------------
// Generators

namespace generators {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw graph_error("generator: " + what);
}

inline Graph empty_graph(int m) {
  require(m >= 0, "empty: m >= 0");
  return Graph(m, {});
}

inline Graph path(int m) {
  require(m >= 1, "path: m >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < m; ++i) e.emplace_back(i, i + 1);
  return Graph(m, std::move(e));
}

inline Graph cycle(int m) {
  require(m >= 3, "cycle: m >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i) e.emplace_back(i, (i + 1) % m);
  return Graph(m, std::move(e));
}

inline Graph complete(int m) {
  require(m >= 1, "complete: m >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) e.emplace_back(i, j);
  return Graph(m, std::move(e));
}

// m vertices total, center 0.
inline Graph star(int m) {
  require(m >= 2, "star: m >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < m; ++i) e.emplace_back(0, i);
  return Graph(m, std::move(e));
}

inline Graph grid(int a, int b) {
  require(a >= 1 && b >= 1, "grid: a,b >= 1");
  auto id = [b](int i, int j) { return i * b + j; };
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      if (i + 1 < a) e.emplace_back(id(i, j), id(i + 1, j));
      if (j + 1 < b) e.emplace_back(id(i, j), id(i, j + 1));
    }
  return Graph(a * b, std::move(e));
}

// Maximal planar graph by incremental combinatorial triangulation: start from
// a triangle, repeatedly pick a seeded-random face and join a new vertex to its
// three corners. 3n-6 edges, planar and 3-degenerate by construction.
inline Graph random_planar(int n, std::uint64_t seed) {
  require(n >= 3, "random_planar: n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 2}};
  std::vector<std::pair<int, int>> e{{0, 1}, {0, 2}, {1, 2}};
  for (int v = 3; v < n; ++v) {
    std::size_t f = rng() % faces.size();
    auto [a, b, c] = faces[f];
    e.emplace_back(v, a);
    e.emplace_back(v, b);
    e.emplace_back(v, c);
    faces[f] = {a, b, v};
    faces.push_back({a, c, v});
    faces.push_back({b, c, v});
  }
  return Graph(n, std::move(e));
}

// K_{h-2} join (n-h+2) isolated vertices.
inline Graph thm1_witness(int h, int n) {
  require(h >= 2 && n >= h, "thm1_witness: h >= 2, n >= h");
  Graph core = h > 2 ? complete(h - 2) : empty_graph(0);
  return complete_join(core, empty_graph(n - h + 2));
}

// K_2 join P_{n-2}.
inline Graph thm2_witness(int n) {
  require(n >= 4, "thm2_witness: n >= 4");
  return complete_join(complete(2), path(n - 2));
}

/// Seeded G(n,m)-style graph: m distinct edges drawn without replacement.
// Test/sweep plumbing, not one of the named families.
inline Graph random_graph(int n, int m, std::uint64_t seed) {
  require(n >= 1 && m >= 0, "random_graph: n >= 1, m >= 0");
  long long all = (long long)n * (n - 1) / 2;
  require(m <= all, "random_graph: too many edges");
  std::vector<std::pair<int, int>> pool;
  pool.reserve(all);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pool.emplace_back(i, j);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < pool.size(); ++i)
    std::swap(pool[i], pool[i + rng() % (pool.size() - i)]);
  pool.resize(m);
  return Graph(n, std::move(pool));
}

}  // namespace generators

// ---------------------------------------------------------------------------
// Edge-list text I/O: line 1 "n m", then m lines "u v" (0-based, u < v).

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  long long m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m)) continue;  // skip leading blank lines
      continue;
    }
    int u, v;
    if (!(ls >> u >> v)) continue;  // blank line
    if (u >= v) throw graph_error("edge list: expected u < v");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw graph_error("edge list: missing header");
  if ((long long)edges.size() != m) throw graph_error("edge list: edge count mismatch");
  return Graph(n, std::move(edges));  // constructor rejects dups/self-loops
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace graphspec
