#include "sturmian/matrix_elements.hpp"

#include <cmath>
#include <stdexcept>

#include "sturmian/specfun.hpp"

namespace sturmian::matelem {

namespace {

constexpr int kMaxPower = 12;
constexpr double kPi = 3.141592653589793238462643383279502884;

void check_power(int k) {
  if (k < 0 || k > kMaxPower)
    throw std::invalid_argument("matrix elements: power k must be in [0, 12]");
}

// <psi_n| x^k (damp ? e^{-x^2} : 1) |psi_n'> by exact quadrature after
// the rescale u = s x, s^2 = (sqrt(beta_n) + sqrt(beta_n'))/2 (+1 damped).
double element(double energy, int n, int np, int k, bool damp) {
  const double bn = std::sqrt(basis::beta(energy, n));    // beta^{1/2}
  const double bp = std::sqrt(basis::beta(energy, np));
  const double a = 0.5 * (bn + bp) + (damp ? 1.0 : 0.0);
  const double cn = std::sqrt(bn);  // beta^{1/4}
  const double cp = std::sqrt(bp);
  const int order = (n + np + k) / 2 + 4;
  const auto rule = specfun::gauss_hermite(order);
  const double integral = rule.integrate_scaled(a, [&](double x) {
    return specfun::hermite(n, cn * x) * specfun::hermite(np, cp * x) *
           std::pow(x, k);
  });
  return basis::prefactor(n) * basis::prefactor(np) * integral;
}

SymMatrix build(const basis::BasisSpec& spec, int k, bool damp) {
  check_power(k);
  const int dim = spec.size();
  SymMatrix out(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      const int n = spec.indices[i];
      const int np = spec.indices[j];
      if ((n + np + k) % 2 == 1) {
        out.set(i, j, 0.0);  // parity selection rule
      } else {
        out.set(i, j, element(spec.energy, n, np, k, damp));
      }
    }
  return out;
}

}  // namespace

SymMatrix& SymMatrix::add_scaled(const SymMatrix& other, double factor) {
  if (other.dim_ != dim_) throw std::invalid_argument("SymMatrix: dim mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += factor * other.data_[i];
  return *this;
}

SymMatrix overlap_T(const basis::BasisSpec& spec) { return build(spec, 0, false); }

SymMatrix power_W(const basis::BasisSpec& spec, int k) { return build(spec, k, false); }

SymMatrix gaussian_damped_W(const basis::BasisSpec& spec, int k) {
  return build(spec, k, true);
}

SymMatrix term_matrix(const basis::BasisSpec& spec, const PotentialTerm& term) {
  switch (term.kind) {
    case PotentialTerm::Kind::PowerX: {
      SymMatrix out(spec.size());
      out.add_scaled(power_W(spec, term.power), term.coefficient);
      return out;
    }
    case PotentialTerm::Kind::Constant: {
      SymMatrix out(spec.size());
      out.add_scaled(overlap_T(spec), term.coefficient);
      return out;
    }
    case PotentialTerm::Kind::GaussianDampedPower: {
      SymMatrix out(spec.size());
      out.add_scaled(gaussian_damped_W(spec, term.power), term.coefficient);
      return out;
    }
    case PotentialTerm::Kind::HarmonicRescale: {
      SymMatrix out(spec.size());
      out.add_scaled(power_W(spec, 2), 0.5 * term.coefficient);
      return out;
    }
  }
  throw std::logic_error("term_matrix: unknown kind");
}

SymMatrix terms_matrix(const basis::BasisSpec& spec,
                       const std::vector<PotentialTerm>& terms) {
  SymMatrix out(spec.size());
  for (const auto& term : terms) out.add_scaled(term_matrix(spec, term), 1.0);
  return out;
}

namespace {

// Truncated bivariate polynomial in (s, t), coefficient grid c[i][j].
struct Poly2 {
  int max_deg;
  std::vector<double> c;  // (max_deg+1)^2

  explicit Poly2(int d) : max_deg(d), c(static_cast<std::size_t>(d + 1) * (d + 1), 0.0) {}
  double& at(int i, int j) { return c[static_cast<std::size_t>(i) * (max_deg + 1) + j]; }
  double get(int i, int j) const {
    return c[static_cast<std::size_t>(i) * (max_deg + 1) + j];
  }
};

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double binom(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// exp(css s^2 + cst s t + ctt t^2) truncated at total degree max_deg
Poly2 exp_quadratic(double css, double cst, double ctt, int max_deg) {
  Poly2 out(max_deg);
  for (int p = 0; 2 * p <= max_deg; ++p)
    for (int q = 0; 2 * p + q <= max_deg; ++q)
      for (int r = 0; q + 2 * r <= max_deg; ++r) {
        out.at(2 * p + q, q + 2 * r) +=
            std::pow(css, p) * std::pow(cst, q) * std::pow(ctt, r) /
            (factorial(p) * factorial(q) * factorial(r));
      }
  return out;
}

// Polynomial part Q_gamma(a) of the generating integral, i.e. the closed
// form with the Gaussian e^{a^2/(2 delta)} factored out:
//   gamma = 2k:   Q(a) = 2^{k+1} delta^{-1-k} k! sqrt(pi delta / 2)
//                        L_k^{-1/2}(-a^2/(2 delta))
//   gamma = 2k+1: Q(a) = 2^{k+3/2} delta^{-k-3/2} Gamma(k+3/2) a
//                        [e^{-y} 1F1(k+3/2; 3/2; y)]|_{y = a^2/(2 delta)}
// returned as coefficients of a^j, ascending.
std::vector<double> q_poly_coeffs(int gamma, double delta) {
  if (gamma % 2 == 0) {
    const int k = gamma / 2;
    const double cnorm =
        std::pow(2.0, k + 1) * std::pow(delta, -1.0 - k) * factorial(k) *
        std::sqrt(0.5 * kPi * delta);
    const auto lag = specfun::laguerre_half_coeffs(k);
    std::vector<double> q(gamma + 1, 0.0);
    for (int j = 0; j <= k; ++j)
      q[2 * j] = cnorm * lag[j] * std::pow(-0.5 / delta, j);
    return q;
  }
  const int k = (gamma - 1) / 2;
  const double cnorm = std::pow(2.0, k + 1.5) * std::pow(delta, -k - 1.5) *
                       std::tgamma(k + 1.5);
  const auto kum = specfun::kummer_1f1_half_poly_coeffs(k);
  std::vector<double> q(gamma + 1, 0.0);
  for (int j = 0; j <= k; ++j)
    q[2 * j + 1] = cnorm * kum[j] * std::pow(0.5 / delta, j);
  return q;
}

// Full generating function G(s,t) = e^{-s^2-t^2+2(alpha s+beta t)^2/delta}
//                                   Q_gamma(2(alpha s + beta t)),
// truncated at total degree max_deg; I_nm = n! m! [s^n t^m] G.
Poly2 generating_poly(double alpha, double beta, int gamma, double delta,
                      int max_deg) {
  const double css = 2.0 * alpha * alpha / delta - 1.0;
  const double cst = 4.0 * alpha * beta / delta;
  const double ctt = 2.0 * beta * beta / delta - 1.0;
  const Poly2 expo = exp_quadratic(css, cst, ctt, max_deg);

  const auto q = q_poly_coeffs(gamma, delta);
  // Q(2(alpha s + beta t)) as a bivariate polynomial
  Poly2 qp(max_deg);
  for (int j = 0; j < static_cast<int>(q.size()); ++j) {
    if (q[j] == 0.0 || j > max_deg) continue;
    const double scale = q[j] * std::pow(2.0, j);
    for (int i = 0; i <= j; ++i)
      qp.at(i, j - i) += scale * binom(j, i) * std::pow(alpha, i) * std::pow(beta, j - i);
  }

  Poly2 out(max_deg);
  for (int i1 = 0; i1 <= max_deg; ++i1)
    for (int j1 = 0; j1 <= max_deg; ++j1) {
      const double e = expo.get(i1, j1);
      if (e == 0.0) continue;
      for (int i2 = 0; i1 + i2 <= max_deg; ++i2)
        for (int j2 = 0; j1 + j2 <= max_deg; ++j2) {
          const double f = qp.get(i2, j2);
          if (f == 0.0) continue;
          out.at(i1 + i2, j1 + j2) += e * f;
        }
    }
  return out;
}

}  // namespace

double inm_closed_form(double alpha, double beta, int gamma, double delta,
                       int n, int m) {
  if (!(delta > 0.0)) throw std::invalid_argument("inm_closed_form: delta must be > 0");
  if (gamma < 0 || n < 0 || m < 0)
    throw std::invalid_argument("inm_closed_form: gamma, n, m must be >= 0");
  const int max_deg = n + m;
  const Poly2 g = generating_poly(alpha, beta, gamma, delta, max_deg);
  return factorial(n) * factorial(m) * g.get(n, m);
}

double inm_quadrature(double alpha, double beta, int gamma, double delta,
                      int n, int m) {
  if (!(delta > 0.0)) throw std::invalid_argument("inm_quadrature: delta must be > 0");
  if ((n + m + gamma) % 2 == 1) return 0.0;
  const int order = (n + m + gamma) / 2 + 4;
  const auto rule = specfun::gauss_hermite(order);
  return rule.integrate_scaled(0.5 * delta, [&](double x) {
    return specfun::hermite(n, alpha * x) * specfun::hermite(m, beta * x) *
           std::pow(x, gamma);
  });
}

std::vector<double> taylor_relations_check(double alpha, double beta, int gamma,
                                           double delta, int order) {
  if (order < 1 || order > 8)
    throw std::invalid_argument("taylor_relations_check: order must be in [1, 8]");

  // closed-form coefficients of the equal-argument generating integral
  const Poly2 g = generating_poly(alpha, beta, gamma, delta, order);
  std::vector<double> residuals(order + 1, 0.0);
  for (int k = 0; k <= order; ++k) {
    double closed = 0.0;  // [s^k] G(s, s)
    for (int n = 0; n <= k; ++n) closed += g.get(n, k - n);
    double quad = 0.0;  // sum_{n+m=k} I_nm / (n! m!) by quadrature
    for (int n = 0; n <= k; ++n)
      quad += inm_quadrature(alpha, beta, gamma, delta, n, k - n) /
              (factorial(n) * factorial(k - n));
    residuals[k] = std::abs(quad - closed);
  }
  return residuals;
}

}  // namespace sturmian::matelem
