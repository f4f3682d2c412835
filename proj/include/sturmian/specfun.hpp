#pragma once

// Special functions and numeric kernels used by the Sturmian oscillator
// code: Hermite polynomials, Gauss-Hermite quadrature, the exponential
// integral Ei on the negative axis, associated Laguerre L_k^{-1/2},
// the confluent hypergeometric 1F1(k+3/2; 3/2; x), and polynomial roots.
//
// All functions are pure and keep no global state.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace sturmian::specfun {

using Complex = std::complex<double>;

// Physicists' Hermite polynomial H_n(x), three-term recurrence
// H_{n+1} = 2 x H_n - 2 n H_{n-1}.
double hermite(int n, double x);

// Same recurrence over complex arguments. For purely imaginary z the
// result is real (n even) or purely imaginary (n odd).
Complex hermite_complex(int n, Complex z);

// Gauss-Hermite rule for the weight e^{-u^2} on (-inf, inf).
struct QuadratureRule {
  int order = 0;
  std::vector<double> nodes;    // strictly increasing, symmetric about 0
  std::vector<double> weights;  // positive, sum = sqrt(pi)

  // integral of f(u) e^{-u^2} du
  template <typename F>
  auto integrate(F&& f) const {
    auto acc = weights[0] * f(nodes[0]);
    for (std::size_t i = 1; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }

  // integral of f(x) e^{-a x^2} dx, a > 0, via x = u / sqrt(a)
  template <typename F>
  auto integrate_scaled(double a, F&& f) const {
    const double s = 1.0 / std::sqrt(a);
    auto acc = weights[0] * f(nodes[0] * s);
    for (std::size_t i = 1; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i] * s);
    return acc * s;
  }
};

// Nodes and weights by Newton refinement of the Hermite roots (largest
// root first, asymptotic initial guesses), to 1e-15 on the nodes.
// Valid for 1 <= order <= 200.
QuadratureRule gauss_hermite(int order);

// Exponential integral Ei(x) on x < 0 (as -E1(-x)) and 0 < x <= 1 via the
// power series. Rejects x = 0 (pole) and x > 1 (unused, unsupported).
double expint_ei(double x);

// Associated Laguerre polynomial L_k^{-1/2}(x) by recurrence.
double laguerre_half(int k, double x);

// Monomial coefficients of L_k^{-1/2}(x), ascending degree.
std::vector<double> laguerre_half_coeffs(int k);

// Kummer confluent hypergeometric 1F1(k + 3/2; 3/2; x) by series,
// term-ratio stopping at 1e-15 relative. Requires |x| <= 50.
double kummer_1f1_half(int k, double x);

// Coefficients of the terminating polynomial e^{-x} 1F1(k+3/2; 3/2; x)
// = 1F1(-k; 3/2; -x), ascending degree (degree k).
std::vector<double> kummer_1f1_half_poly_coeffs(int k);

struct PolyRoots {
  std::vector<Complex> roots;     // sorted by (Re, Im)
  std::vector<double> residuals;  // |p(root)| per root
};

// All complex roots of a polynomial with coefficients in ascending degree.
// Closed forms for degree <= 3, companion-matrix eigenvalues above.
PolyRoots poly_roots(const std::vector<Complex>& coeffs);
PolyRoots poly_roots(const std::vector<double>& coeffs);

}  // namespace sturmian::specfun
