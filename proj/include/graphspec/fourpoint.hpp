#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace graphspec {

struct fourpoint_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Four unit complex numbers balancing four positive integer weights:
// n11*z11 + n12*z12 + n21*z21 + n22*z22 = 0.
struct FourPointSolution {
  std::array<long long, 4> weights;      // n11, n12, n21, n22
  std::array<std::complex<double>, 4> points;  // z11, z12, z21, z22
  double x1 = 0, x2 = 0;                 // pair barycenter anchors (0 for polygon route)

  double defect() const {
    std::complex<double> s{0, 0};
    for (int i = 0; i < 4; ++i) s += (double)weights[i] * points[i];
    return std::abs(s);
  }
  long long weight_sum() const { return weights[0] + weights[1] + weights[2] + weights[3]; }

  void check_invariants() const {
    for (auto z : points)
      if (std::abs(std::abs(z) - 1.0) > 1e-12)
        throw fourpoint_error("FourPointSolution: point off the unit circle");
    if (defect() > 1e-9 * (double)weight_sum())
      throw fourpoint_error("FourPointSolution: weighted sum defect too large");
  }
};

inline bool fourpoint_preconditions_hold(long long n11, long long n12, long long n21,
                                         long long n22) {
  if (n11 <= 0 || n12 <= 0 || n21 <= 0 || n22 <= 0) return false;
  long long p1 = n11 + n12, p2 = n21 + n22;
  return n11 <= n12 && n12 <= 2 * n11 && n21 <= n22 && n22 <= 2 * n21 && p1 <= p2 &&
         p2 <= 2 * p1;
}

namespace detail {

// g(x, e^{i theta}) = (1 - x^2) / (1 + x^2 - 2 x cos(theta)); the chord ratio
// |f_x(z) - x| / |x - z| for z on the unit circle, monotone in theta for x != 0.
inline double chord_ratio(double x, double theta) {
  return (1.0 - x * x) / (1.0 + x * x - 2.0 * x * std::cos(theta));
}

// Solve g(x, e^{i theta}) = target by bisection on [0, pi].
inline double solve_theta(double x, double target) {
  double lo = 0.0, hi = std::numbers::pi;
  double glo = chord_ratio(x, lo), ghi = chord_ratio(x, hi);
  bool increasing = ghi > glo;
  assert((target >= std::min(glo, ghi) - 1e-12) && (target <= std::max(glo, ghi) + 1e-12));
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    double mid = 0.5 * (lo + hi);
    double gm = chord_ratio(x, mid);
    if ((gm < target) == increasing)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// Second intersection of the unit circle with the line through z and the real
// anchor x: f_x(z) = z + t*(x - z), t* = 2(1 - x Re z) / |x - z|^2.
inline std::complex<double> chord_image(double x, std::complex<double> z) {
  std::complex<double> d = std::complex<double>(x, 0) - z;
  double t = 2.0 * (1.0 - x * z.real()) / std::norm(d);
  std::complex<double> w = z + t * d;
  return w / std::abs(w);  // renormalize away roundoff
}

}  // namespace detail

// Constructive four-unit-numbers balance: anchors x1 = 2/3 and
// x2 = -(2/3)(n1/n2); within each pair the first point solves the chord-ratio
// equation g(x, z) = n_first/n_second and the second is its chord image.
inline FourPointSolution four_point_solve(long long n11, long long n12, long long n21,
                                          long long n22) {
  if (!fourpoint_preconditions_hold(n11, n12, n21, n22))
    throw fourpoint_error("four_point_solve: precondition chains violated");
  double n1 = (double)(n11 + n12), n2 = (double)(n21 + n22);
  double x1 = 2.0 / 3.0;
  double x2 = -(2.0 / 3.0) * (n1 / n2);  // so n1*x1 + n2*x2 = 0, x2 in [-2/3,-1/3]

  double th1 = detail::solve_theta(x1, (double)n11 / (double)n12);
  std::complex<double> z11 = std::polar(1.0, th1);
  std::complex<double> z12 = detail::chord_image(x1, z11);

  double th2 = detail::solve_theta(x2, (double)n21 / (double)n22);
  std::complex<double> z21 = std::polar(1.0, th2);
  std::complex<double> z22 = detail::chord_image(x2, z21);

  FourPointSolution sol;
  sol.weights = {n11, n12, n21, n22};
  sol.points = {z11, z12, z21, z22};
  sol.x1 = x1;
  sol.x2 = x2;
  sol.check_invariants();
  return sol;
}

// Fallback for weight quadruples outside the precondition chains.
// Needs only the polygon inequality: max weight <= sum of the others.
inline FourPointSolution polygon_solve(long long w0, long long w1, long long w2, long long w3) {
  std::array<long long, 4> w{w0, w1, w2, w3};
  for (long long x : w)
    if (x <= 0) throw fourpoint_error("polygon_solve: weights must be positive");
  long long total = w0 + w1 + w2 + w3;
  for (long long x : w)
    if (x > total - x) throw fourpoint_error("polygon_solve: polygon inequality violated");

  // Pair the weights so pair sums are as equal as possible; pairings keep
  // index 0 in the first pair.
  static const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  int best = 0;
  long long bestdiff = -1;
  for (int c = 0; c < 3; ++c) {
    const int* p = pairings[c];
    long long diff = std::llabs((w[p[0]] + w[p[1]]) - (w[p[2]] + w[p[3]]));
    if (bestdiff < 0 || diff < bestdiff) {
      bestdiff = diff;
      best = c;
    }
  }
  const int* p = pairings[best];
  double a = (double)w[p[0]], b = (double)w[p[1]];
  double c = (double)w[p[2]], d = (double)w[p[3]];

  // Both pair resultants have magnitude R, pointed along +x and -x.
  double lo = std::max(std::abs(a - b), std::abs(c - d));
  double hi = std::min(a + b, c + d);
  assert(lo <= hi + 1e-9);
  double R = 0.5 * (lo + hi);

  auto place = [](double pw, double qw, double R, double dir) {
    // pw*e^{i alpha} + qw*e^{-i beta} = R*dir with alpha, beta from the
    // triangle with sides pw, qw and base R (law of cosines).
    std::complex<double> zp, zq;
    if (R < 1e-12) {
      zp = {1.0, 0.0};
      zq = {-1.0, 0.0};  // only reachable when pw == qw
    } else {
      double ca = std::clamp((R * R + pw * pw - qw * qw) / (2.0 * R * pw), -1.0, 1.0);
      double alpha = std::acos(ca);
      zp = std::polar(1.0, alpha);
      // Solve for the partner exactly from the resultant.
      std::complex<double> rest = std::complex<double>(R, 0) - pw * zp;
      zq = rest / std::abs(rest);
    }
    if (dir < 0) {
      zp = -zp;
      zq = -zq;
    }
    return std::pair<std::complex<double>, std::complex<double>>(zp, zq);
  };

  auto [za, zb] = place(a, b, R, +1.0);
  auto [zc, zd] = place(c, d, R, -1.0);

  FourPointSolution sol;
  sol.weights = {w0, w1, w2, w3};
  std::array<std::complex<double>, 4> pts;
  pts[p[0]] = za;
  pts[p[1]] = zb;
  pts[p[2]] = zc;
  pts[p[3]] = zd;
  sol.points = pts;
  sol.check_invariants();
  return sol;
}

}  // namespace graphspec
