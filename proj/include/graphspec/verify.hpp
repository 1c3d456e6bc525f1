#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "graphspec/bounds.hpp"
#include "graphspec/graph.hpp"
#include "graphspec/separators.hpp"
#include "graphspec/shallow.hpp"
#include "graphspec/spectra.hpp"

namespace graphspec {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  SplitStrategy strategy = SplitStrategy::BfsLevel;
  std::uint64_t seed = 1;
  int random_embeddings = 200;
  std::string family;  // when known, enables the closed-form check
  int family_param = 0;
  std::optional<int> bipdens2_p;       // run the K_{3,p} pipeline with this p
  std::optional<int> omega_bound;      // class omega bound for bipdens on larger graphs
};

inline Embedding random_zero_sum_embedding(int n, std::mt19937_64& rng) {
  Embedding e = Embedding::zeros(n, 1);
  double sum = 0;
  for (int v = 0; v < n; ++v) {
    // uniform in [-1, 1); raw engine output keeps this stdlib-independent
    double x = (double)(rng() >> 11) * (2.0 / 9007199254740992.0) - 1.0;
    e.at(v, 0) = x;
    sum += x;
  }
  for (int v = 0; v < n; ++v) e.at(v, 0) -= sum / n;
  return e;
}

// Runs the applicable invariant battery on one graph. Each entry is one
// numbered check with a pass flag and a short detail line.
inline std::vector<CheckResult> verify_graph(const Graph& g, const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
    out.push_back({name, pass, detail});
  };

  auto spec = laplacian_spectrum(g, g.order() <= 300);
  int n = g.order();
  double l1 = spec.eigenvalues.empty() ? 0 : spec.eigenvalues.front();
  add("laplacian-kernel", std::abs(l1) <= 1e-9, "lambda1 = " + fmt12(l1));
  bool psd = true, capped = true;
  for (double l : spec.eigenvalues) {
    psd = psd && l >= -1e-9;
    capped = capped && l <= n + 1e-9;
  }
  add("laplacian-psd", psd);
  add("eigenvalues-at-most-n", capped);
  double trace = 0, degsum = 0;
  for (double l : spec.eigenvalues) trace += l;
  for (int v = 0; v < n; ++v) degsum += g.degree(v);
  add("trace-equals-degree-sum", std::abs(trace - degsum) <= 1e-8 * std::max(1, n),
      fmt12(trace) + " vs " + fmt12(degsum));
  if (spec.residual)
    add("eigen-residual", *spec.residual <= 1e-10 * std::max(1.0, laplacian(g).inf_norm()),
        "residual = " + fmt12(*spec.residual));

  if (n >= 2) {
    double l2 = spec.eigenvalues[1];
    Embedding fv = fiedler_vector(g);
    double rq = rayleigh_quotient(g, fv);
    add("rayleigh-tight-at-fiedler-vector", std::abs(rq - l2) <= 1e-8,
        fmt12(rq) + " vs " + fmt12(l2));
    std::mt19937_64 rng(opt.seed);
    bool all_above = true;
    for (int i = 0; i < opt.random_embeddings; ++i) {
      Embedding e = random_zero_sum_embedding(n, rng);
      if (rayleigh_quotient(g, e) < l2 - 1e-8) {
        all_above = false;
        break;
      }
    }
    add("rayleigh-dominates-lambda2", all_above,
        std::to_string(opt.random_embeddings) + " random zero-sum embeddings");

    if (!opt.family.empty()) {
      try {
        double cf = closed_form_lambda2(opt.family, opt.family_param);
        add("closed-form-vs-eigensolve", std::abs(cf - l2) <= 1e-8,
            fmt12(cf) + " vs " + fmt12(l2));
      } catch (const graph_error&) {
        // family without a closed form; nothing to check
      }
    }

    if (n >= 8) {
      try {
        auto sep = sep_upper_bound(g, opt.strategy);
        add("sep-bound-equals-rayleigh", std::abs(sep.bound - sep.rayleigh) <= 1e-9,
            fmt12(sep.bound) + " vs " + fmt12(sep.rayleigh));
        add("sep-bound-dominates-lambda2", l2 <= sep.bound + 1e-9,
            "bound = " + fmt12(sep.bound) + ", lambda2 = " + fmt12(l2));
        add("four-point-zero-sum",
            sep.solution.defect() <= 1e-9 * (double)sep.solution.weight_sum(),
            "defect = " + fmt12(sep.solution.defect()));

        if (opt.bipdens2_p) {
          VertexSet s = sep.decomposition.separator(), rest;
          for (int v = 0; v < n; ++v)
            if (!contains(s, v)) rest.push_back(v);
          if (rest.size() >= s.size() && !s.empty()) {
            auto rep = bipdens2_check(g, rest, s, *opt.bipdens2_p);
            add("bipdens2-no-kpq-witness", !rep.cert.kpq_witness);
            if (!rep.cert.kpq_witness)
              add("bipdens2-direct-slack", rep.direct_slack >= 0,
                  "direct slack = " + fmt12(rep.direct_slack));
            // The grad-product form only follows when the coefficient is
            // nonnegative; with a negative coefficient it can genuinely fail.
            if (rep.coeff_nonneg)
              add("bipdens2-nonneg-slack", rep.slack >= 0, "slack = " + fmt12(rep.slack));
            add("bipdens2-triangle-bound", rep.triangle_bound_ok,
                std::to_string(rep.h_triangles) + " triangles in H");
          }
          if (opt.omega_bound && rest.size() >= s.size() && !s.empty()) {
            auto rep = bipdens_check(g, rest, s, *opt.omega_bound);
            if (!rep.cert.clique_violation)
              add("bipdens-direct-slack", rep.direct_slack >= 0,
                  "direct slack = " + fmt12(rep.direct_slack));
            if (rep.coeff_nonneg)
              add("bipdens-nonneg-slack", rep.slack >= 0, "slack = " + fmt12(rep.slack));
          }
        }
      } catch (const split_error& e) {
        add("sep-bound", false, e.what());
      }
    }
  }
  return out;
}

}  // namespace graphspec
