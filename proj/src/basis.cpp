#include "sturmian/basis.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sturmian/specfun.hpp"

namespace sturmian::basis {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

void require_positive_energy(double energy) {
  if (!(energy > 0.0))
    throw std::invalid_argument("sturmian basis: energy must be > 0");
}
}  // namespace

BasisSpec::BasisSpec(double e, std::vector<int> idx, int dim)
    : energy(e), indices(std::move(idx)), dimension(dim) {
  require_positive_energy(energy);
  if (dimension < 1) throw std::invalid_argument("BasisSpec: dimension >= 1");
  if (indices.empty()) throw std::invalid_argument("BasisSpec: empty index list");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0) throw std::invalid_argument("BasisSpec: negative index");
    if (i > 0 && indices[i] <= indices[i - 1])
      throw std::invalid_argument("BasisSpec: indices must be ascending and distinct");
  }
}

BasisSpec BasisSpec::first(double e, int count) {
  if (count < 1) throw std::invalid_argument("BasisSpec::first: count >= 1");
  std::vector<int> idx(count);
  std::iota(idx.begin(), idx.end(), 0);
  return BasisSpec(e, std::move(idx));
}

double beta(double energy, int n) {
  require_positive_energy(energy);
  if (n < 0) throw std::invalid_argument("beta: n must be >= 0");
  const double r = energy / (n + 0.5);
  return r * r;
}

double prefactor(int n) {
  if (n < 0) throw std::invalid_argument("prefactor: n must be >= 0");
  double nfact = 1.0;
  for (int k = 2; k <= n; ++k) nfact *= k;
  return std::pow(kPi, -0.25) / std::sqrt(nfact * std::pow(2.0, n));
}

double sturmian_eval(double energy, int n, double x) {
  const double b = std::pow(beta(energy, n), 0.25);
  return prefactor(n) * specfun::hermite(n, b * x) * std::exp(-0.5 * b * b * x * x);
}

double sturmian_eval_multi(double energy, const std::vector<int>& n,
                           const std::vector<double>& x) {
  require_positive_energy(energy);
  if (n.size() != x.size() || n.empty())
    throw std::invalid_argument("sturmian_eval_multi: length mismatch");
  const int d = static_cast<int>(n.size());
  int total = 0;
  for (int ni : n) {
    if (ni < 0) throw std::invalid_argument("sturmian_eval_multi: negative index");
    total += ni;
  }
  // E = omega (n + d/2) inverted: beta = (E/(n + d/2))^2
  const double ratio = energy / (total + 0.5 * d);
  const double b = std::sqrt(ratio);  // beta^{1/4}
  double value = std::pow(kPi, -0.25 * d);
  double r2 = 0.0;
  for (int i = 0; i < d; ++i) {
    double nfact = 1.0;
    for (int k = 2; k <= n[i]; ++k) nfact *= k;
    value *= specfun::hermite(n[i], b * x[i]) / std::sqrt(nfact * std::pow(2.0, n[i]));
    r2 += x[i] * x[i];
  }
  return value * std::exp(-0.5 * b * b * r2);
}

double normalization_N(double energy, int n) {
  require_positive_energy(energy);
  if (n < 0) throw std::invalid_argument("normalization_N: n must be >= 0");
  const double tn1 = 2.0 * n + 1.0;
  return std::pow(tn1, 2.5) / (8.0 * std::sqrt(2.0)) * std::pow(energy, -1.5);
}

Complex momentum_sturmian(double energy, int n, double k) {
  const double b = std::pow(beta(energy, n), 0.25);
  const Complex i_pow_n = std::pow(Complex(0.0, 1.0), n);
  const double envelope = std::exp(-0.5 * k * k / (b * b));
  const double radial =
      prefactor(n) * std::sqrt(2.0 * kPi) / b * specfun::hermite(n, k / b) * envelope;
  return i_pow_n * radial;
}

BathSpec::BathSpec(std::vector<double> xs, std::vector<double> gs)
    : positions(std::move(xs)), couplings(std::move(gs)) {
  if (positions.empty() || positions.size() != couplings.size())
    throw std::invalid_argument("BathSpec: positions/couplings size mismatch");
  double gbar = 0.0;
  for (double g : couplings) gbar += g;
  if (!(gbar > 0.0)) throw std::invalid_argument("BathSpec: sum of couplings must be > 0");
}

ReducedOscillator bath_reduce(const BathSpec& spec) {
  ReducedOscillator red;
  for (std::size_t i = 0; i < spec.positions.size(); ++i) {
    const double g = spec.couplings[i];
    const double x = spec.positions[i];
    red.gbar += g;
    red.c1 += g * x;
    red.c2 += 0.5 * g * x * x;
  }
  return red;
}

double beta_tilde(const BathSpec& spec, double energy, int n) {
  if (n < 0) throw std::invalid_argument("beta_tilde: n must be >= 0");
  const ReducedOscillator red = bath_reduce(spec);
  const double shifted = energy - red.energy_shift();
  if (!(shifted > 0.0))
    throw std::invalid_argument("beta_tilde: shifted energy E - c2 + c1^2/(4 gbar) must be > 0");
  const double r = shifted / (n + 0.5);
  return red.gbar * r * r;
}

double bath_sturmian_eval(const BathSpec& spec, double energy, int n, double x) {
  const ReducedOscillator red = bath_reduce(spec);
  const double bt = beta_tilde(spec, energy, n);
  const double b = std::pow(bt, 0.25);
  const double y = x - red.centre();
  return prefactor(n) * specfun::hermite(n, b * y) * std::exp(-0.5 * b * b * y * y);
}

}  // namespace sturmian::basis
