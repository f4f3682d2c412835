#pragma once

// Independent numerical oracles used by the test suites. Everything here
// deliberately avoids the library's own evaluation paths: plain adaptive
// Simpson quadrature, RK4 time stepping, Sturm-sequence bisection for
// tridiagonal eigenvalues, and a brute-force Fourier transform.

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracles {

namespace detail {

inline double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive_step(F&& f, double a, double b, double fa, double fm, double fb,
                     double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(a, m, fa, flm, fm);
  const double right = simpson(m, b, fm, frm, fb);
  if (depth <= 0) return left + right;
  if (std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

template <typename F>
double adaptive_simpson(F&& f, double a, double b, double tol = 1e-13) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = detail::simpson(a, b, fa, fm, fb);
  return detail::adaptive_step(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Ei(x) for x < 0 as -integral_{-x}^{inf} e^{-t}/t dt, truncated where the
// tail drops below 1e-18.
inline double expint_ei_quadrature(double x) {
  if (!(x < 0.0)) throw std::invalid_argument("oracle Ei: x must be < 0");
  const double a = -x;
  double upper = a + 60.0;
  while (std::exp(-upper) / upper > 1e-18) upper += 10.0;
  const auto f = [](double t) { return std::exp(-t) / t; };
  return -adaptive_simpson(f, a, upper, 1e-15);
}

// RK4 for dy/dt = f(t, y) over [0, t_end], complex state.
template <typename F>
std::complex<double> rk4_complex(F&& f, std::complex<double> y0, double t_end,
                                 int steps) {
  std::complex<double> y = y0;
  const double h = t_end / steps;
  double t = 0.0;
  for (int i = 0; i < steps; ++i) {
    const auto k1 = f(t, y);
    const auto k2 = f(t + 0.5 * h, y + 0.5 * h * k1);
    const auto k3 = f(t + 0.5 * h, y + 0.5 * h * k2);
    const auto k4 = f(t + h, y + h * k3);
    y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += h;
  }
  return y;
}

// Lowest eigenvalues of a symmetric tridiagonal matrix (diag d, off-diag e)
// by Sturm-sequence counting and bisection.
inline std::vector<double> tridiag_lowest_eigenvalues(const std::vector<double>& d,
                                                      const std::vector<double>& e,
                                                      int count) {
  const int n = static_cast<int>(d.size());
  const auto count_below = [&](double lambda) {
    int cnt = 0;
    double q = 1.0;
    for (int i = 0; i < n; ++i) {
      const double off = (i == 0) ? 0.0 : e[i - 1];
      q = d[i] - lambda - ((q == 0.0) ? std::abs(off) / 1e-30 : off * off / q);
      if (q < 0.0) ++cnt;
    }
    return cnt;
  };

  double lo = d[0];
  double hi = d[0];
  for (int i = 0; i < n; ++i) {
    const double r = std::abs(i > 0 ? e[i - 1] : 0.0) + std::abs(i + 1 < n ? e[i] : 0.0);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }

  std::vector<double> out;
  for (int k = 1; k <= count; ++k) {
    double a = lo;
    double b = hi;
    for (int it = 0; it < 200; ++it) {
      const double m = 0.5 * (a + b);
      if (count_below(m) >= k)
        b = m;
      else
        a = m;
      if (b - a <= 1e-12 * std::max(1.0, std::abs(b))) break;
    }
    out.push_back(0.5 * (a + b));
  }
  return out;
}

// integral e^{ikx} f(x) dx for f decaying like exp(-a x^2), brute force on
// a wide uniform grid (trapezoid; the integrand is smooth and the domain
// cut where the envelope is ~1e-18).
template <typename F>
std::complex<double> fourier_transform(F&& f, double k, double half_width,
                                       int points = 20001) {
  const double h = 2.0 * half_width / (points - 1);
  std::complex<double> acc = 0.0;
  for (int i = 0; i < points; ++i) {
    const double x = -half_width + i * h;
    const double w = (i == 0 || i == points - 1) ? 0.5 : 1.0;
    acc += w * std::exp(std::complex<double>(0.0, k * x)) * f(x) * h;
  }
  return acc;
}

}  // namespace oracles
