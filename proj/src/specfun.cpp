#include "sturmian/specfun.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sturmian::specfun {

namespace {
constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
}  // namespace

double hermite(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite: n must be >= 0");
  double h0 = 1.0;
  if (n == 0) return h0;
  double h1 = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double h2 = 2.0 * x * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

Complex hermite_complex(int n, Complex z) {
  if (n < 0) throw std::invalid_argument("hermite_complex: n must be >= 0");
  Complex h0 = 1.0;
  if (n == 0) return h0;
  Complex h1 = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    const Complex h2 = 2.0 * z * h1 - 2.0 * static_cast<double>(k) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

QuadratureRule gauss_hermite(int order) {
  if (order < 1 || order > 200)
    throw std::invalid_argument("gauss_hermite: order must be in [1, 200]");

  // Newton on the orthonormal Hermite recurrence, largest root first.
  const double pim4 = 0.7511255444649424828587030047762276930510;  // pi^{-1/4}
  const int m = (order + 1) / 2;
  std::vector<double> pos(m);      // positive roots, descending
  std::vector<double> wpos(m);     // matching weights
  double z = 0.0;
  for (int i = 0; i < m; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * order + 1.0) -
          1.85575 * std::pow(2.0 * order + 1.0, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(order), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * pos[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * pos[1];
    } else {
      z = 2.0 * z - pos[i - 2];
    }
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = pim4;
      double p2 = 0.0;
      for (int j = 0; j < order; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 -
             std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * order) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15) break;
    }
    pos[i] = z;
    wpos[i] = 2.0 / (pp * pp);
  }

  QuadratureRule rule;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < m; ++i) {
    rule.nodes[i] = -pos[i];
    rule.nodes[order - 1 - i] = pos[i];
    rule.weights[i] = wpos[i];
    rule.weights[order - 1 - i] = wpos[i];
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;  // exact middle root
  return rule;
}

namespace {

// E1(z) for z > 1 by the standard continued fraction (modified Lentz).
double expint_e1_cf(double z) {
  const double tiny = 1e-300;
  double b = z + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int k = 1; k <= 300; ++k) {
    const double a = -static_cast<double>(k) * k;
    b += 2.0;
    d = a * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) <= 1e-16) break;
  }
  return std::exp(-z) * h;
}

// Ei(x) = gamma + ln|x| + sum x^k/(k k!), |x| <= 1.
double expint_ei_series(double x) {
  double sum = 0.0;
  double term = 1.0;
  for (int k = 1; k <= 60; ++k) {
    term *= x / k;
    const double add = term / k;
    sum += add;
    if (std::abs(add) <= 1e-17 * std::abs(sum)) break;
  }
  return kEulerGamma + std::log(std::abs(x)) + sum;
}

}  // namespace

double expint_ei(double x) {
  if (x == 0.0) throw std::domain_error("expint_ei: pole at x = 0");
  if (x > 1.0)
    throw std::domain_error("expint_ei: positive axis beyond 1 unsupported");
  if (x >= -1.0) return expint_ei_series(x);
  return -expint_e1_cf(-x);
}

double laguerre_half(int k, double x) {
  if (k < 0) throw std::invalid_argument("laguerre_half: k must be >= 0");
  const double a = -0.5;
  double l0 = 1.0;
  if (k == 0) return l0;
  double l1 = 1.0 + a - x;
  for (int j = 1; j < k; ++j) {
    const double l2 = ((2.0 * j + 1.0 + a - x) * l1 - (j + a) * l0) / (j + 1.0);
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

std::vector<double> laguerre_half_coeffs(int k) {
  if (k < 0) throw std::invalid_argument("laguerre_half_coeffs: k must be >= 0");
  const double a = -0.5;
  std::vector<double> l0 = {1.0};
  if (k == 0) return l0;
  std::vector<double> l1 = {1.0 + a, -1.0};
  for (int j = 1; j < k; ++j) {
    std::vector<double> l2(j + 2, 0.0);
    for (std::size_t i = 0; i < l1.size(); ++i) {
      l2[i] += (2.0 * j + 1.0 + a) * l1[i];
      l2[i + 1] -= l1[i];
    }
    for (std::size_t i = 0; i < l0.size(); ++i) l2[i] -= (j + a) * l0[i];
    for (auto& c : l2) c /= (j + 1.0);
    l0 = std::move(l1);
    l1 = std::move(l2);
  }
  return l1;
}

double kummer_1f1_half(int k, double x) {
  if (k < 0) throw std::invalid_argument("kummer_1f1_half: k must be >= 0");
  if (std::abs(x) > 50.0)
    throw std::domain_error("kummer_1f1_half: |x| > 50 out of supported range");
  const double a = k + 1.5;
  const double b = 1.5;
  double term = 1.0;
  double sum = 1.0;
  for (int j = 0; j < 400; ++j) {
    term *= (a + j) / (b + j) * x / (j + 1.0);
    sum += term;
    if (std::abs(term) <= 1e-15 * std::abs(sum)) break;
  }
  return sum;
}

std::vector<double> kummer_1f1_half_poly_coeffs(int k) {
  if (k < 0)
    throw std::invalid_argument("kummer_1f1_half_poly_coeffs: k must be >= 0");
  // e^{-x} 1F1(k+3/2; 3/2; x) = 1F1(-k; 3/2; -x), a degree-k polynomial:
  // coefficient of x^j is [k!/(k-j)!] / ((3/2)_j j!).
  std::vector<double> c(k + 1, 0.0);
  double falling = 1.0;    // k!/(k-j)!
  double poch = 1.0;       // (3/2)_j
  double fact = 1.0;       // j!
  c[0] = 1.0;
  for (int j = 1; j <= k; ++j) {
    falling *= (k - j + 1);
    poch *= (0.5 + j);
    fact *= j;
    c[j] = falling / (poch * fact);
  }
  return c;
}

namespace {

Complex horner(const std::vector<Complex>& coeffs, Complex x) {
  Complex acc = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

void sort_roots(std::vector<Complex>& r) {
  // (Re, Im) lexicographic with a tolerance on Re so that conjugate pairs
  // whose real parts differ only in roundoff order by imaginary part
  std::sort(r.begin(), r.end(), [](const Complex& a, const Complex& b) {
    const double scale = std::max({1.0, std::abs(a.real()), std::abs(b.real())});
    if (std::abs(a.real() - b.real()) > 1e-9 * scale) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

std::vector<Complex> quadratic_roots(Complex b, Complex c) {
  // monic x^2 + b x + c
  const Complex s = std::sqrt(b * b - 4.0 * c);
  const Complex u = (std::norm(b + s) >= std::norm(b - s)) ? b + s : b - s;
  if (std::norm(u) == 0.0) return {Complex(0.0), Complex(0.0)};
  const Complex r1 = -u / 2.0;
  return {r1, c / r1};
}

std::vector<Complex> cubic_roots(Complex a, Complex b, Complex c) {
  // monic x^3 + a x^2 + b x + c, Cardano with the larger cube-root branch
  const Complex shift = a / 3.0;
  const Complex p = b - a * a / 3.0;
  const Complex q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const Complex disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  Complex w = -q / 2.0 + disc;
  if (std::norm(-q / 2.0 - disc) > std::norm(w)) w = -q / 2.0 - disc;
  std::vector<Complex> out(3);
  if (std::norm(w) == 0.0 && std::norm(p) == 0.0) {
    out[0] = out[1] = out[2] = -shift;  // triple root
    return out;
  }
  const Complex u = std::pow(w, 1.0 / 3.0);
  const Complex v = -p / (3.0 * u);
  const Complex omega(-0.5, std::sqrt(3.0) / 2.0);
  Complex uk = u, vk = v;
  for (int k = 0; k < 3; ++k) {
    out[k] = uk + vk - shift;
    uk *= omega;
    vk *= std::conj(omega);
  }
  return out;
}

std::vector<Complex> companion_roots(const std::vector<Complex>& low_coeffs) {
  const int deg = static_cast<int>(low_coeffs.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) m(i, deg - 1) = -low_coeffs[i];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("poly_roots: companion eigensolver failed");
  std::vector<Complex> out(deg);
  for (int i = 0; i < deg; ++i) out[i] = solver.eigenvalues()(i);
  return out;
}

}  // namespace

PolyRoots poly_roots(const std::vector<Complex>& coeffs) {
  if (coeffs.size() < 2)
    throw std::invalid_argument("poly_roots: degree must be >= 1");
  if (std::norm(coeffs.back()) == 0.0)
    throw std::invalid_argument("poly_roots: leading coefficient is zero");

  const int deg = static_cast<int>(coeffs.size()) - 1;
  std::vector<Complex> monic(coeffs.size() - 1);
  for (int i = 0; i < deg; ++i) monic[i] = coeffs[i] / coeffs.back();

  std::vector<Complex> roots;
  switch (deg) {
    case 1:
      roots = {-monic[0]};
      break;
    case 2:
      roots = quadratic_roots(monic[1], monic[0]);
      break;
    case 3:
      roots = cubic_roots(monic[2], monic[1], monic[0]);
      break;
    default:
      roots = companion_roots(monic);
      break;
  }

  sort_roots(roots);
  PolyRoots result;
  result.roots = roots;
  result.residuals.reserve(roots.size());
  for (const auto& r : roots) result.residuals.push_back(std::abs(horner(coeffs, r)));
  return result;
}

PolyRoots poly_roots(const std::vector<double>& coeffs) {
  std::vector<Complex> c(coeffs.begin(), coeffs.end());
  return poly_roots(c);
}

}  // namespace sturmian::specfun
