#pragma once

#include <limits>
#include <queue>
#include <vector>

namespace graphspec {

// Dinic max-flow on integer capacities. Deterministic: arcs are explored in
// insertion order.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : head_(n, -1), level_(n), it_(n) {}

  void add_edge(int u, int v, long long cap) {
    arcs_.push_back({v, head_[u], cap});
    head_[u] = (int)arcs_.size() - 1;
    arcs_.push_back({u, head_[v], 0});
    head_[v] = (int)arcs_.size() - 1;
  }

  long long solve(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      it_ = head_;
      long long f;
      while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0) flow += f;
    }
    s_ = s;
    return flow;
  }

  // After solve: vertices reachable from s in the residual graph.
  std::vector<char> min_cut_side() const {
    std::vector<char> side(head_.size(), 0);
    std::queue<int> q;
    q.push(s_);
    side[s_] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int e = head_[u]; e >= 0; e = arcs_[e].next)
        if (arcs_[e].cap > 0 && !side[arcs_[e].to]) {
          side[arcs_[e].to] = 1;
          q.push(arcs_[e].to);
        }
    }
    return side;
  }

 private:
  struct Arc {
    int to, next;
    long long cap;
  };

  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    q.push(s);
    level_[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int e = head_[u]; e >= 0; e = arcs_[e].next)
        if (arcs_[e].cap > 0 && level_[arcs_[e].to] < 0) {
          level_[arcs_[e].to] = level_[u] + 1;
          q.push(arcs_[e].to);
        }
    }
    return level_[t] >= 0;
  }

  long long dfs(int u, int t, long long limit) {
    if (u == t) return limit;
    for (int& e = it_[u]; e >= 0; e = arcs_[e].next) {
      Arc& a = arcs_[e];
      if (a.cap > 0 && level_[a.to] == level_[u] + 1) {
        long long f = dfs(a.to, t, std::min(limit, a.cap));
        if (f > 0) {
          a.cap -= f;
          arcs_[e ^ 1].cap += f;
          return f;
        }
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_, level_, it_;
  int s_ = 0;
};

}  // namespace graphspec
