#pragma once

// Model problems built on the Sturmian solver: cubic/quartic anharmonic
// oscillators (self-consistent and fixed-reference modes), perturbation
// theory reference values, variational bounds, the Caldirola-Kanai
// damped oscillator, baths of oscillators, coupled oscillators and the
// Gaussian-damped anharmonic oscillator.

#include <complex>
#include <vector>

#include "sturmian/basis.hpp"
#include "sturmian/matrix_elements.hpp"
#include "sturmian/secular.hpp"

namespace sturmian::models {

using Complex = std::complex<double>;

enum class AnharmonicKind { Cubic, Quartic };

struct AnharmonicRow {
  int n_sturmians = 0;
  std::vector<double> roots;  // all self-consistent roots in the bracket
  double ground = 0.0;        // smallest root (NaN when none found)
};

// Ground-state roots of V' = alpha x^k (k = 3 or 4) with the first N
// Sturmians, self-consistent mode, bracket (0.05, 2).
std::vector<AnharmonicRow> anharmonic_table(AnharmonicKind kind, double alpha,
                                            const std::vector<int>& n_values);

// Same sweep for the Gaussian-damped potential V' = alpha x^k e^{-x^2}.
std::vector<AnharmonicRow> damped_anharmonic_table(int k, double alpha,
                                                   const std::vector<int>& n_values);

struct FixedReferenceResult {
  double e_state = 0.0;             // root continuing the state n
  std::vector<double> roots;        // all roots, ascending
};

// Quartic anharmonic oscillator, fixed-reference mode at E = omega(n+1/2)
// with the x -> sqrt(m) x mass-weighted conversion (V' = alpha x^4 becomes
// (alpha/m^2) y^4). n_basis = 1 uses the single-function formula, 2 the
// two-function quadratic with basis {n, n+1}.
FixedReferenceResult quartic_excited_fixed(int n, int n_basis, double alpha,
                                           double mass, double omega);

// Positive root of the N = 1 self-consistent cubic 8E^3 - 2E - 3alpha = 0.
double quartic_ground_closed_form(double alpha);

// The z-expression printed alongside it, evaluated verbatim (errata use;
// requires alpha large enough to keep the square root real).
double quartic_ground_z_formula(double alpha);

// Second-order Rayleigh-Schroedinger values, exactly the two printed
// formulas: E0 - (11/8) hbar^2 alpha^2 / (m^3 omega^4) for the cubic and
// E0 + (3/16) hbar^2 alpha / (m^2 omega^2) - (23/4) hbar alpha^2 /
// (m^2 omega^3) for the quartic.
double perturbation_reference(AnharmonicKind kind, double alpha, double mass,
                              double omega, double hbar);

// Rayleigh-quotient upper bound from the single Sturmian psi_n:
//   E + (1 + beta_n) <V0> / <1> + <V'> / <1>   (include_v0)
//   E +      beta_n  <V0> / <1> + <V'> / <1>   (otherwise)
double variational_bound(double energy, int n,
                         const std::vector<matelem::PotentialTerm>& terms,
                         bool include_v0);

// Caldirola-Kanai damped oscillator, N = 1 coefficient evolution.
struct DampedSpec {
  double gamma = 1.0;    // friction, > 0
  double energy = 1.0;   // Sturmian energy E > 0
  int n = 0;
  Complex c0 = 1.0;
};

// omega_0 = (1 - beta_n) N_n / T_nn + E
double damped_omega0(double energy, int n);

// omega(t) = (1 - beta_n) (N_n / T_nn) (e^2 / 2 gamma)
//            (Ei(-2) - Ei(-2 e^{-2 gamma t}))
double damped_omega_t(const DampedSpec& spec, double t);

// c_n(t) = c_n(0) e^{-i omega_0 t - i omega(t)}
Complex damped_coefficient(const DampedSpec& spec, double t);

// e^{2 - 2 e^{-2 gamma t}}, the time-dependence factor of V'.
double damped_xi(double gamma, double t);

struct DampedField {
  std::vector<double> x;   // flattened grid, x fastest
  std::vector<double> t;
  std::vector<double> re;  // Re c_0(t) psi_0(x)
  std::vector<double> im;
};

DampedField damped_field(double gamma, double energy,
                         const std::vector<double>& xs,
                         const std::vector<double>& ts);

// E_n = (n + 1/2) gbar^{-1/2} - c2 + c1^2/(4 gbar), as printed; diagonal
// secular equation, so independent of the basis size.
double bath_energy(const basis::BathSpec& spec, int n);

// Coupled-oscillator reduction to a single anharmonic potential
// V = gbar x^2/2 - c1 x + c2 - c3 x^3 + c4 x^4 (printed sums).
struct ReducedQuartic {
  double gbar = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
};

ReducedQuartic coupled_reduce(const std::vector<double>& positions,
                              const std::vector<double>& couplings,
                              const std::vector<std::vector<double>>& lambda);

enum class CoupledMode { AsPrinted, Consistent };

struct CoupledSpectrum {
  std::vector<Complex> roots;      // conjugate pairs: positive imag first
  std::vector<double> residuals;   // |polynomial(root)| (as-printed mode)
};

// as_printed: N = 1 is the literal cubic gbar - 3 c4 E + 4 E^2 + 16 c2 E^3;
// N >= 2 builds the printed-sign determinant
//   det[(beta_n + gbar) N_n delta - c1 W1 + c2 T - c3 W3 - c4 W4] = 0,
// clears half powers with u = sqrt(E) and returns roots in E = u^2.
// consistent: assembles the standard secular equation with
// V' = (gbar-1) HarmonicRescale - c1 x + c2 - c3 x^3 + c4 x^4 and solves
// self-consistently (real roots in (0.05, 3)).
CoupledSpectrum coupled_spectrum(const ReducedQuartic& red, int n_basis,
                                 CoupledMode mode);

}  // namespace sturmian::models
