#include "sturmian/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sturmian/specfun.hpp"

namespace sturmian::models {

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
}

std::vector<AnharmonicRow> anharmonic_table(AnharmonicKind kind, double alpha,
                                            const std::vector<int>& n_values) {
  if (alpha < 0.0) throw std::invalid_argument("anharmonic_table: alpha must be >= 0");
  const int power = (kind == AnharmonicKind::Cubic) ? 3 : 4;
  const std::vector<matelem::PotentialTerm> terms = {
      matelem::PotentialTerm::power_x(power, alpha)};
  std::vector<AnharmonicRow> rows;
  for (int count : n_values) {
    std::vector<int> indices(count);
    for (int i = 0; i < count; ++i) indices[i] = i;
    const auto res = secular::solve_self_consistent(indices, terms, {0.05, 2.0});
    rows.push_back({count, res.energies,
                    res.energies.empty() ? kNan : res.energies.front()});
  }
  return rows;
}

std::vector<AnharmonicRow> damped_anharmonic_table(int k, double alpha,
                                                   const std::vector<int>& n_values) {
  const std::vector<matelem::PotentialTerm> terms = {
      matelem::PotentialTerm::gaussian_damped(k, alpha)};
  std::vector<AnharmonicRow> rows;
  for (int count : n_values) {
    std::vector<int> indices(count);
    for (int i = 0; i < count; ++i) indices[i] = i;
    const auto res = secular::solve_self_consistent(indices, terms, {0.05, 2.0});
    rows.push_back({count, res.energies,
                    res.energies.empty() ? kNan : res.energies.front()});
  }
  return rows;
}

FixedReferenceResult quartic_excited_fixed(int n, int n_basis, double alpha,
                                           double mass, double omega) {
  if (n < 0 || n_basis < 1 || n_basis > 2)
    throw std::invalid_argument("quartic_excited_fixed: n >= 0, n_basis in {1, 2}");
  if (!(mass > 0.0) || !(omega > 0.0))
    throw std::invalid_argument("quartic_excited_fixed: mass, omega must be > 0");

  // mass-weighted coordinates: x^4 -> y^4 / m^2
  const double a = alpha / (mass * mass);
  const double e_ref = omega * (n + 0.5);

  const basis::BasisSpec spec(e_ref, n_basis == 1 ? std::vector<int>{n}
                                                  : std::vector<int>{n, n + 1});
  const matelem::SymMatrix t = matelem::overlap_T(spec);
  const matelem::SymMatrix w4 = matelem::power_W(spec, 4);

  FixedReferenceResult out;
  if (n_basis == 1) {
    out.e_state = e_ref + a * w4(0, 0) / t(0, 0);
    out.roots = {out.e_state};
    return out;
  }

  // the printed two-function quadratic in (E - E'):
  //   (E-E')^2 T00 T11 + a (E-E') (T00 W11 + T11 W00) + a^2 W00 W11 = 0
  const double qa = t(0, 0) * t(1, 1);
  const double qb = a * (t(0, 0) * w4(1, 1) + t(1, 1) * w4(0, 0));
  const double qc = a * a * w4(0, 0) * w4(1, 1);
  const double disc = std::sqrt(qb * qb - 4.0 * qa * qc);
  const double l1 = (-qb + disc) / (2.0 * qa);
  const double l2 = (-qb - disc) / (2.0 * qa);
  const double e1 = e_ref - l1;
  const double e2 = e_ref - l2;
  out.roots = {std::min(e1, e2), std::max(e1, e2)};
  // the state-n root continues the single-function value a W00/T00
  out.e_state = e_ref + a * w4(0, 0) / t(0, 0);
  return out;
}

double quartic_ground_closed_form(double alpha) {
  if (!(alpha > 0.0))
    throw std::invalid_argument("quartic_ground_closed_form: alpha must be > 0");
  // 8E^3 - 2E - 3a = 0, depressed: E^3 + p E + q with p = -1/4, q = -3a/8
  const double p = -0.25;
  const double q = -3.0 * alpha / 8.0;
  const double disc = -4.0 * p * p * p - 27.0 * q * q;
  if (disc > 0.0) {
    // three real roots; the trigonometric form, k chosen for the positive one
    const double r = 2.0 * std::sqrt(-p / 3.0);
    const double arg = 3.0 * q / (2.0 * p) * std::sqrt(-3.0 / p);
    const double phi = std::acos(std::clamp(arg, -1.0, 1.0)) / 3.0;
    double best = -1.0;
    for (int k = 0; k < 3; ++k) {
      const double root = r * std::cos(phi - 2.0 * 3.141592653589793 * k / 3.0);
      if (root > best) best = root;
    }
    return best;  // largest real root is the positive physical one
  }
  // single real root: hyperbolic form (p < 0, |q| large)
  const double r = 2.0 * std::sqrt(-p / 3.0);
  const double arg = -3.0 * std::abs(q) / (2.0 * p) * std::sqrt(-3.0 / p);
  const double root = r * std::cosh(std::acosh(arg) / 3.0);
  return (q < 0.0) ? root : -root;
}

double quartic_ground_z_formula(double alpha) {
  const double rad = 6718464.0 * alpha * alpha - 6912.0;
  if (rad < 0.0)
    throw std::domain_error("quartic_ground_z_formula: square root is imaginary here");
  const double z = 2.0 / (2592.0 * alpha + std::sqrt(rad));
  return std::cbrt(z) + 1.0 / (12.0 * std::cbrt(z));
}

double perturbation_reference(AnharmonicKind kind, double alpha, double mass,
                              double omega, double hbar) {
  if (!(mass > 0.0) || !(omega > 0.0) || !(hbar > 0.0))
    throw std::invalid_argument("perturbation_reference: parameters must be > 0");
  const double e0 = 0.5 * hbar * omega;
  if (kind == AnharmonicKind::Cubic)
    return e0 - (11.0 / 8.0) * hbar * hbar * alpha * alpha /
                    (mass * mass * mass * omega * omega * omega * omega);
  return e0 + (3.0 / 16.0) * hbar * hbar * alpha / (mass * mass * omega * omega) -
         (23.0 / 4.0) * hbar * alpha * alpha / (mass * mass * omega * omega * omega);
}

double variational_bound(double energy, int n,
                         const std::vector<matelem::PotentialTerm>& terms,
                         bool include_v0) {
  const basis::BasisSpec spec(energy, {n});
  const double t = matelem::overlap_T(spec)(0, 0);
  const double v0_ratio = basis::normalization_N(energy, n) / t;
  const double vp_ratio = matelem::terms_matrix(spec, terms)(0, 0) / t;
  const double b = basis::beta(energy, n);
  const double coeff = include_v0 ? 1.0 + b : b;
  return energy + coeff * v0_ratio + vp_ratio;
}

double damped_omega0(double energy, int n) {
  const double t = std::pow(basis::beta(energy, n), -0.25);  // T_nn
  return (1.0 - basis::beta(energy, n)) * basis::normalization_N(energy, n) / t +
         energy;
}

double damped_xi(double gamma, double t) {
  return std::exp(2.0 - 2.0 * std::exp(-2.0 * gamma * t));
}

double damped_omega_t(const DampedSpec& spec, double t) {
  if (t < 0.0) throw std::invalid_argument("damped_omega_t: t must be >= 0");
  if (!(spec.gamma > 0.0)) throw std::invalid_argument("damped oscillator: gamma > 0");
  const double b = basis::beta(spec.energy, spec.n);
  if (b == 1.0) return 0.0;  // on shell, phase is -iEt exactly
  const double tnn = std::pow(b, -0.25);
  const double ratio = basis::normalization_N(spec.energy, spec.n) / tnn;
  const double e2 = std::exp(2.0);
  const double ei_diff = specfun::expint_ei(-2.0) -
                         specfun::expint_ei(-2.0 * std::exp(-2.0 * spec.gamma * t));
  return (1.0 - b) * ratio * e2 / (2.0 * spec.gamma) * ei_diff;
}

Complex damped_coefficient(const DampedSpec& spec, double t) {
  const double phase = damped_omega0(spec.energy, spec.n) * t + damped_omega_t(spec, t);
  return spec.c0 * std::exp(Complex(0.0, -phase));
}

DampedField damped_field(double gamma, double energy,
                         const std::vector<double>& xs,
                         const std::vector<double>& ts) {
  if (!(gamma > 0.0) || !(energy > 0.0))
    throw std::invalid_argument("damped_field: gamma, energy must be > 0");
  DampedField field;
  const std::size_t total = xs.size() * ts.size();
  field.x.reserve(total);
  field.t.reserve(total);
  field.re.reserve(total);
  field.im.reserve(total);
  DampedSpec spec{gamma, energy, 0, 1.0};
  for (double t : ts) {
    const Complex c = damped_coefficient(spec, t);
    for (double x : xs) {
      const Complex value = c * basis::sturmian_eval(energy, 0, x);
      field.x.push_back(x);
      field.t.push_back(t);
      field.re.push_back(value.real());
      field.im.push_back(value.imag());
    }
  }
  return field;
}

double bath_energy(const basis::BathSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("bath_energy: n must be >= 0");
  const basis::ReducedOscillator red = basis::bath_reduce(spec);
  return (n + 0.5) / std::sqrt(red.gbar) - red.c2 +
         red.c1 * red.c1 / (4.0 * red.gbar);
}

ReducedQuartic coupled_reduce(const std::vector<double>& positions,
                              const std::vector<double>& couplings,
                              const std::vector<std::vector<double>>& lambda) {
  const std::size_t m = positions.size();
  if (couplings.size() != m || lambda.size() != m)
    throw std::invalid_argument("coupled_reduce: dimension mismatch");
  for (std::size_t i = 0; i < m; ++i) {
    if (lambda[i].size() != m)
      throw std::invalid_argument("coupled_reduce: lambda must be square");
    if (lambda[i][i] != 0.0)
      throw std::invalid_argument("coupled_reduce: lambda diagonal must be zero");
    for (std::size_t j = 0; j < m; ++j)
      if (lambda[i][j] != lambda[j][i])
        throw std::invalid_argument("coupled_reduce: lambda must be symmetric");
  }

  ReducedQuartic red;
  for (std::size_t i = 0; i < m; ++i) {
    red.gbar += couplings[i];
    double lam_sum = 0.0;
    double xsq_sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      lam_sum += lambda[i][j] * (positions[j] * positions[j] +
                                 positions[j] * positions[i]);
      xsq_sum += positions[j] * positions[j];
      red.c3 += lambda[i][j] * (positions[i] + positions[j]);
      red.c4 += 0.5 * lambda[i][j];
    }
    red.c1 += 2.0 * (couplings[i] - lam_sum) * positions[i];
    red.c2 += 0.5 * (couplings[i] + xsq_sum) * positions[i] * positions[i];
  }
  return red;
}

namespace {

// Laurent polynomial in u = sqrt(E); key is twice the power of E.
using HalfPoly = std::map<int, double>;

HalfPoly hp_mul(const HalfPoly& a, const HalfPoly& b) {
  HalfPoly out;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) out[pa + pb] += ca * cb;
  return out;
}

void hp_add(HalfPoly& a, const HalfPoly& b, double factor) {
  for (const auto& [p, c] : b) a[p] += factor * c;
}

// determinant of a matrix of Laurent polynomials by cofactor expansion
HalfPoly hp_det(const std::vector<std::vector<HalfPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  HalfPoly out;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<HalfPoly>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<HalfPoly> row;
      row.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    const HalfPoly sub = hp_mul(m[0][col], hp_det(minor));
    hp_add(out, sub, (col % 2 == 0) ? 1.0 : -1.0);
  }
  return out;
}

void sort_conjugate_pairs(std::vector<Complex>& roots, std::vector<double>& residuals) {
  std::vector<std::size_t> order(roots.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double ra = roots[a].real();
    const double rb = roots[b].real();
    const double scale = std::max({1.0, std::abs(ra), std::abs(rb)});
    if (std::abs(ra - rb) > 1e-9 * scale) return ra < rb;
    return roots[a].imag() > roots[b].imag();  // positive-imaginary member first
  });
  std::vector<Complex> r(roots.size());
  std::vector<double> s(roots.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    r[i] = roots[order[i]];
    s[i] = residuals.empty() ? 0.0 : residuals[order[i]];
  }
  roots = std::move(r);
  if (!residuals.empty()) residuals = std::move(s);
}

}  // namespace

CoupledSpectrum coupled_spectrum(const ReducedQuartic& red, int n_basis,
                                 CoupledMode mode) {
  if (n_basis < 1 || n_basis > 5)
    throw std::invalid_argument("coupled_spectrum: n_basis must be in [1, 5]");

  CoupledSpectrum out;

  if (mode == CoupledMode::Consistent) {
    const std::vector<matelem::PotentialTerm> terms = {
        matelem::PotentialTerm::harmonic_rescale(red.gbar - 1.0),
        matelem::PotentialTerm::power_x(1, -red.c1),
        matelem::PotentialTerm::constant(red.c2),
        matelem::PotentialTerm::power_x(3, -red.c3),
        matelem::PotentialTerm::power_x(4, red.c4)};
    std::vector<int> indices(n_basis);
    for (int i = 0; i < n_basis; ++i) indices[i] = i;
    const auto res = secular::solve_self_consistent(indices, terms, {0.05, 3.0});
    for (std::size_t i = 0; i < res.energies.size(); ++i) {
      out.roots.emplace_back(res.energies[i], 0.0);
      out.residuals.push_back(res.residuals[i]);
    }
    return out;
  }

  if (n_basis == 1) {
    // the literal printed cubic gbar - 3 c4 E + 4 E^2 + 16 c2 E^3 = 0
    const std::vector<double> coeffs = {red.gbar, -3.0 * red.c4, 4.0, 16.0 * red.c2};
    const auto pr = specfun::poly_roots(coeffs);
    out.roots = pr.roots;
    out.residuals = pr.residuals;
    sort_conjugate_pairs(out.roots, out.residuals);
    return out;
  }

  // printed sign structure with the actual matrices; entries carry pure
  // powers of E, so evaluate them at E = 1 and attach the powers
  std::vector<int> indices(n_basis);
  for (int i = 0; i < n_basis; ++i) indices[i] = i;
  const basis::BasisSpec unit(1.0, indices);
  const matelem::SymMatrix t = matelem::overlap_T(unit);
  const matelem::SymMatrix w1 = matelem::power_W(unit, 1);
  const matelem::SymMatrix w3 = matelem::power_W(unit, 3);
  const matelem::SymMatrix w4 = matelem::power_W(unit, 4);

  std::vector<std::vector<HalfPoly>> d(n_basis, std::vector<HalfPoly>(n_basis));
  for (int i = 0; i < n_basis; ++i)
    for (int j = 0; j < n_basis; ++j) {
      HalfPoly& entry = d[i][j];
      if (i == j) {
        const double nn = basis::normalization_N(1.0, indices[i]);
        const double bn = basis::beta(1.0, indices[i]);
        entry[1] += bn * nn;           // beta_n N_n ~ E^{1/2}
        entry[-3] += red.gbar * nn;    // gbar N_n ~ E^{-3/2}
      }
      entry[-2] += -red.c1 * w1(i, j);  // E^{-1}
      entry[-1] += red.c2 * t(i, j);    // E^{-1/2}
      entry[-4] += -red.c3 * w3(i, j);  // E^{-2}
      entry[-5] += -red.c4 * w4(i, j);  // E^{-5/2}
    }

  const HalfPoly det = hp_det(d);

  int pmin = 0;
  int pmax = 0;
  double peak = 0.0;
  for (const auto& [p, c] : det) peak = std::max(peak, std::abs(c));
  bool first = true;
  for (const auto& [p, c] : det) {
    if (std::abs(c) <= 1e-14 * peak) continue;
    if (first) {
      pmin = pmax = p;
      first = false;
    } else {
      pmin = std::min(pmin, p);
      pmax = std::max(pmax, p);
    }
  }
  if (first) return out;  // identically zero determinant

  // u^{-pmin} det as a polynomial in u = sqrt(E); coefficients falling
  // below the numerical-zero cut are dropped with the powers outside
  // [pmin, pmax]
  std::vector<double> ucoeffs(pmax - pmin + 1, 0.0);
  for (const auto& [p, c] : det)
    if (p >= pmin && p <= pmax) ucoeffs[p - pmin] = c;

  bool even = true;
  for (std::size_t i = 1; i < ucoeffs.size(); i += 2)
    if (std::abs(ucoeffs[i]) > 1e-12 * peak) even = false;

  // scale so the reported residuals are relative to the largest coefficient
  double cmax = 0.0;
  for (double c : ucoeffs) cmax = std::max(cmax, std::abs(c));
  for (double& c : ucoeffs) c /= cmax;

  if (even) {
    std::vector<double> ecoeffs;
    for (std::size_t i = 0; i < ucoeffs.size(); i += 2) ecoeffs.push_back(ucoeffs[i]);
    const auto pr = specfun::poly_roots(ecoeffs);
    out.roots = pr.roots;
    out.residuals = pr.residuals;
  } else {
    const auto pr = specfun::poly_roots(ucoeffs);
    // map u roots to E = u^2 and drop the +/- duplicates
    std::vector<Complex> kept;
    std::vector<double> res;
    for (std::size_t i = 0; i < pr.roots.size(); ++i) {
      const Complex e = pr.roots[i] * pr.roots[i];
      bool dup = false;
      for (const Complex& k : kept)
        if (std::abs(e - k) <= 1e-8 * (1.0 + std::abs(e))) dup = true;
      if (!dup) {
        kept.push_back(e);
        res.push_back(pr.residuals[i]);
      }
    }
    out.roots = std::move(kept);
    out.residuals = std::move(res);
  }
  sort_conjugate_pairs(out.roots, out.residuals);
  return out;
}

}  // namespace sturmian::models
