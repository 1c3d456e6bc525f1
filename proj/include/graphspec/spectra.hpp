#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "graphspec/eigen.hpp"
#include "graphspec/graph.hpp"

namespace graphspec {

// Per-vertex vectors in R^m with the zero-sum side condition of the embedding
// (Rayleigh) characterization of lambda_2. Complex test vectors use m = 2.
struct Embedding {
  int dim = 1;
  std::vector<double> data;  // vertex v occupies data[v*dim .. v*dim+dim)

  int order() const { return (int)data.size() / dim; }
  double at(int v, int k) const { return data[(std::size_t)v * dim + k]; }
  double& at(int v, int k) { return data[(std::size_t)v * dim + k]; }

  static Embedding zeros(int n, int m) {
    Embedding e;
    e.dim = m;
    e.data.assign((std::size_t)n * m, 0.0);
    return e;
  }
};

inline SymmetricMatrix laplacian(const Graph& g) {
  SymmetricMatrix m(g.order());
  for (int v = 0; v < g.order(); ++v) m.set(v, v, g.degree(v));
  for (auto [u, v] : g.edges()) m.set(u, v, -1.0);
  return m;
}

inline SpectrumResult laplacian_spectrum(const Graph& g, bool want_vectors = false) {
  return eigen_spectrum(laplacian(g), want_vectors);
}

inline double fiedler_value(const Graph& g) {
  if (g.order() < 2) throw graph_error("fiedler_value: n >= 2 required");
  return laplacian_spectrum(g).eigenvalues[1];
}

// Unit-norm, zero-sum eigenvector for lambda_2. For disconnected graphs the
// lambda_2 eigenspace can meet the all-ones direction, so we project it out.
inline Embedding fiedler_vector(const Graph& g) {
  if (g.order() < 2) throw graph_error("fiedler_vector: n >= 2 required");
  auto spec = laplacian_spectrum(g, true);
  int n = g.order();
  std::vector<double> v = spec.eigenvectors[1];
  double mean = 0;
  for (double x : v) mean += x;
  mean /= n;
  double norm = 0;
  for (double& x : v) {
    x -= mean;
    norm += x * x;
  }
  norm = std::sqrt(norm);
  if (norm == 0.0) throw eigen_error("fiedler_vector: degenerate eigenvector");
  Embedding e = Embedding::zeros(n, 1);
  for (int i = 0; i < n; ++i) e.at(i, 0) = v[i] / norm;
  return e;
}

// Sum over edges of ||v_i - v_j||^2 divided by sum of ||v_i||^2.
// Always >= lambda_2(G) up to roundoff for zero-sum embeddings.
inline double rayleigh_quotient(const Graph& g, const Embedding& emb) {
  int n = g.order();
  if (emb.order() != n) throw graph_error("rayleigh_quotient: size mismatch");
  double den = 0;
  std::vector<double> colsum(emb.dim, 0.0);
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < emb.dim; ++k) {
      colsum[k] += emb.at(v, k);
      den += emb.at(v, k) * emb.at(v, k);
    }
  if (den == 0.0) throw graph_error("rayleigh_quotient: zero embedding");
  double scale = std::max(1.0, std::sqrt(den) * std::sqrt((double)n));
  for (double s : colsum)
    if (std::abs(s) > 1e-9 * scale)
      throw graph_error("rayleigh_quotient: embedding not zero-sum");
  double num = 0;
  for (auto [u, v] : g.edges())
    for (int k = 0; k < emb.dim; ++k) {
      double d = emb.at(u, k) - emb.at(v, k);
      num += d * d;
    }
  return num / den;
}

// Join spectrum formula: lambda_2(H1 + H2) = min(l1 + n2, l2 + n1, n1 + n2).
// The n1+n2 term covers singleton operands, whose lambda_2 is the +inf sentinel.
inline double join_lambda2(double l1, int n1, double l2, int n2) {
  if (n1 < 1 || n2 < 1) throw graph_error("join_lambda2: operand orders >= 1");
  return std::min({l1 + n2, l2 + n1, (double)(n1 + n2)});
}

inline constexpr double lambda2_singleton = std::numeric_limits<double>::infinity();

inline double closed_form_lambda2(const std::string& family, int m) {
  const double pi = std::numbers::pi;
  if (family == "path") {
    if (m < 2) throw graph_error("closed_form_lambda2: path m >= 2");
    return 2.0 - 2.0 * std::cos(pi / m);
  }
  if (family == "cycle") {
    if (m < 3) throw graph_error("closed_form_lambda2: cycle m >= 3");
    return 2.0 - 2.0 * std::cos(2.0 * pi / m);
  }
  if (family == "complete") {
    if (m < 2) throw graph_error("closed_form_lambda2: complete m >= 2");
    return (double)m;
  }
  if (family == "star") {
    if (m < 3) throw graph_error("closed_form_lambda2: star m >= 3");
    return 1.0;
  }
  if (family == "thm2_witness") {
    // Join formula with the path spectrum gives argument n-2; the n = 4
    // instance is K4 with lambda_2 = 4, which pins the argument down.
    if (m < 4) throw graph_error("closed_form_lambda2: thm2_witness n >= 4");
    return 4.0 - 2.0 * std::cos(pi / (m - 2));
  }
  throw graph_error("closed_form_lambda2: unsupported family " + family);
}

}  // namespace graphspec
