#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "graphspec/graph.hpp"
#include "graphspec/separators.hpp"
#include "graphspec/shallow.hpp"
#include "graphspec/spectra.hpp"

namespace graphspec {

// Format with 12 significant digits; the reproducibility contract for all
// floating-point output.
inline std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

struct ClassDescriptor {
  enum class Kind { MinorFree, Genus, Custom };
  Kind kind = Kind::Custom;
  int h = 0;      // forbidden clique minor order (MinorFree)
  int genus = 0;  // Genus

  static ClassDescriptor minor_free(int h) {
    if (h < 2) throw graph_error("minor_free: h >= 2");
    ClassDescriptor c;
    c.kind = Kind::MinorFree;
    c.h = h;
    return c;
  }
  static ClassDescriptor genus_class(int g) {
    if (g < 0) throw graph_error("genus: g >= 0");
    ClassDescriptor c;
    c.kind = Kind::Genus;
    c.genus = g;
    return c;
  }

  // Any subdivision of K_h is a K_h minor, so omega of the depth-1/2 minors
  // is at most h-1 for K_h-minor-free graphs; subdivisions of K_5 are
  // non-planar, and the genus route works through K_{3,4g+3} instead.
  int omega_half_bound() const {
    switch (kind) {
      case Kind::MinorFree: return h - 1;
      case Kind::Genus: return 4;
      case Kind::Custom: return 4;
    }
    return 4;
  }

  std::optional<int> kpq_p() const {
    if (kind == Kind::Genus) return 4 * genus + 3;
    return std::nullopt;
  }

  std::string name() const {
    switch (kind) {
      case Kind::MinorFree: return "minor_free(" + std::to_string(h) + ")";
      case Kind::Genus: return "genus(" + std::to_string(genus) + ")";
      case Kind::Custom: return "custom";
    }
    return "?";
  }
};

// ---------------------------------------------------------------------------

struct TheoremInterval {
  double lower = 0;
  std::string upper_form;
  Graph witness;
};

inline TheoremInterval theorem1_interval(int h, int n) {
  if (h < 2 || n < h) throw graph_error("theorem1_interval: h >= 2, n >= h");
  TheoremInterval t;
  t.lower = h - 2;
  t.witness = generators::thm1_witness(h, n);
  t.upper_form = "h-2 plus the measured separator slack of sep_upper_bound";
  return t;
}

inline TheoremInterval theorem2_interval(int g, int n) {
  if (g < 0 || n < 4) throw graph_error("theorem2_interval: g >= 0, n >= 4");
  TheoremInterval t;
  t.witness = generators::thm2_witness(n);
  t.lower = fiedler_value(t.witness);  // 4 - 2 cos(pi/(n-2)), strictly above 2
  t.upper_form = "2 plus the measured sep_upper_bound / bipdens2 slack with p = " +
                 std::to_string(4 * g + 3);
  return t;
}

// ---------------------------------------------------------------------------

struct BoundReport {
  std::string graph_id;
  double lambda2 = 0;
  std::optional<double> sep_bound;
  int sep_size = 0;
  double omega_term = 0;      // omega bound - 1
  double residual_term = 0;   // measured O(s(n)/n) part of the decomposition
  std::optional<BipdensReport> bip;
  std::vector<std::string> flags;
  bool lambda2_le_sep = false;
  bool lambda2_le_omega_plus_slack = false;
};

// Ties the pipeline together for one graph: separator bound, then the
// bipartite decomposition of the cut with A = V-S, B = S.
inline BoundReport theorem_main_certificate(const Graph& g, const ClassDescriptor& c,
                                            SplitStrategy strat = SplitStrategy::BfsLevel) {
  BoundReport rep;
  rep.graph_id = c.name() + "/n=" + std::to_string(g.order());
  rep.lambda2 = fiedler_value(g);
  rep.omega_term = c.omega_half_bound() - 1;
  SepBoundResult sep;
  try {
    sep = sep_upper_bound(g, strat);
  } catch (const split_error& e) {
    rep.flags.push_back(std::string("separator-failure: ") + e.what());
    return rep;
  }
  VertexSet s = sep.decomposition.separator();
  rep.sep_bound = sep.bound;
  rep.sep_size = (int)s.size();
  rep.lambda2_le_sep = rep.lambda2 <= sep.bound + 1e-9;
  if (!rep.lambda2_le_sep) rep.flags.push_back("lambda2-exceeds-sep-bound");
  VertexSet rest;
  for (int v = 0; v < g.order(); ++v)
    if (!contains(s, v)) rest.push_back(v);
  if (rest.size() < s.size()) {
    rep.flags.push_back("separator-too-large-for-bipdens");
  } else {
    rep.bip = bipdens_check(g, rest, s, c.omega_half_bound());
    // e(S,V-S)/(n-|S|) <= (omega-1) n/(n-|S|) + coeff-term |S|/(n-|S|)
    double n = g.order(), ns = (double)rest.size();
    rep.residual_term = rep.omega_term * (n / ns - 1.0) +
                        (rep.bip->rhs - rep.omega_term * n) / ns;
    rep.lambda2_le_omega_plus_slack =
        rep.lambda2 <= rep.omega_term + rep.residual_term + 1e-9;
    if (!rep.bip->certified) rep.flags.push_back("bipdens-not-certified");
  }
  return rep;
}

struct JoinMonotonicityVerdict {
  bool applicable = false;
  bool ok = false;
  double lambda2_before = 0, lambda2_after = 0;
};

// lambda_2(K_1 + W) = lambda_2(W) + 1 for the join witness family W, checked
// by eigensolve against the join formula.
inline JoinMonotonicityVerdict join_monotonicity_check(int h, int n) {
  if (h < 3) throw graph_error("join_monotonicity_check: h >= 3");
  JoinMonotonicityVerdict v;
  if (n <= h) return v;  // degenerate, skipped
  v.applicable = true;
  Graph w = generators::thm1_witness(h, n);
  Graph joined = complete_join(generators::complete(1), w);
  v.lambda2_before = fiedler_value(w);
  v.lambda2_after = fiedler_value(joined);
  double formula = join_lambda2(lambda2_singleton, 1, v.lambda2_before, n);
  v.ok = std::abs(v.lambda2_after - (v.lambda2_before + 1.0)) <= 1e-8 &&
         std::abs(v.lambda2_after - formula) <= 1e-8;
  return v;
}

// ---------------------------------------------------------------------------
// Sweep

struct SweepRow {
  int n = 0;
  std::uint64_t seed = 0;
  std::string family;
  std::optional<double> lambda2, sep_bound;
  int sep_size = 0;
  double omega_term = 0;
  std::optional<double> witness_floor;
  std::vector<std::string> flags;
  long long runtime_ms = 0;
};

inline Graph class_member(const ClassDescriptor& c, int n, std::uint64_t seed,
                          std::string& family) {
  if (c.kind == ClassDescriptor::Kind::Genus) {
    int r = (int)std::lround(std::sqrt((double)n));
    if (r * r == n) {
      family = "grid";
      return generators::grid(r, r);
    }
  }
  if (c.kind == ClassDescriptor::Kind::MinorFree && c.h < 5)
    throw graph_error("sweep: minor_free members generated only for h >= 5 (planar)");
  family = "random_planar";
  return generators::random_planar(n, seed);
}

inline SweepRow sweep_row(const ClassDescriptor& c, int n, std::uint64_t seed,
                          SplitStrategy strat) {
  SweepRow row;
  row.n = n;
  row.seed = seed;
  auto t0 = std::chrono::steady_clock::now();
  try {
    Graph g = class_member(c, n, seed, row.family);
    row.lambda2 = fiedler_value(g);
    row.omega_term = c.omega_half_bound() - 1;
    if (c.kind == ClassDescriptor::Kind::MinorFree && n >= c.h)
      row.witness_floor = (double)(c.h - 2);
    else if (c.kind == ClassDescriptor::Kind::Genus && n >= 4)
      row.witness_floor = closed_form_lambda2("thm2_witness", n);
    if (g.order() >= 8) {
      auto sep = sep_upper_bound(g, strat);
      row.sep_bound = sep.bound;
      row.sep_size = (int)sep.decomposition.separator().size();
      if (*row.lambda2 > *row.sep_bound + 1e-9) row.flags.push_back("bound-violated");
    } else {
      row.flags.push_back("too-small-for-separator");
    }
  } catch (const std::exception& e) {
    row.flags.push_back(std::string("error: ") + e.what());
  }
  row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return row;
}

inline std::vector<SweepRow> sweep(const ClassDescriptor& c, const std::vector<int>& n_list,
                                   const std::vector<std::uint64_t>& seeds,
                                   SplitStrategy strat, int jobs = 1) {
  std::vector<std::pair<int, std::uint64_t>> tasks;
  for (int n : n_list)
    for (auto s : seeds) tasks.emplace_back(n, s);
  std::vector<SweepRow> rows(tasks.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i)
      rows[i] = sweep_row(c, tasks[i].first, tasks[i].second, strat);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();)
        rows[i] = sweep_row(c, tasks[i].first, tasks[i].second, strat);
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

inline constexpr const char* sweep_csv_header =
    "n,seed,family,lambda2,sep_bound,sep_size,omega_term,witness_floor,flags,runtime_ms";

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << sweep_csv_header << '\n';
  auto opt = [](const std::optional<double>& x) { return x ? fmt12(*x) : std::string(); };
  for (const auto& r : rows) {
    std::string flags;
    for (std::size_t i = 0; i < r.flags.size(); ++i)
      flags += (i ? ";" : "") + r.flags[i];
    out << r.n << ',' << r.seed << ',' << r.family << ',' << opt(r.lambda2) << ','
        << opt(r.sep_bound) << ',' << r.sep_size << ',' << fmt12(r.omega_term) << ','
        << opt(r.witness_floor) << ',' << flags << ',' << r.runtime_ms << '\n';
  }
  return out.str();
}

}  // namespace graphspec
