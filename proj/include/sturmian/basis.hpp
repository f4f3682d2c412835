#pragma once

// Harmonic-oscillator Sturmian basis functions. The basis is built by
// fixing the energy E and letting the coupling beta_n = (E/(n+1/2))^2
// scale the base potential V0 = x^2/2 so that every index n shares the
// same E. Mass-weighted units, hbar = m = 1.

#include <complex>
#include <vector>

namespace sturmian::basis {

using Complex = std::complex<double>;

// A Sturmian basis set: the shared energy plus an ordered index list.
struct BasisSpec {
  double energy = 1.0;        // E > 0
  std::vector<int> indices;   // distinct, ascending, >= 0
  int dimension = 1;

  BasisSpec(double e, std::vector<int> idx, int dim = 1);

  // first N indices 0..N-1
  static BasisSpec first(double e, int count);

  int size() const { return static_cast<int>(indices.size()); }
};

// Effective coupling beta_n = (E/(n+1/2))^2.
double beta(double energy, int n);

// psi_n(x) = pi^{-1/4} (n!)^{-1/2} 2^{-n/2} H_n(beta^{1/4} x)
//            e^{-beta^{1/2} x^2 / 2}
double sturmian_eval(double energy, int n, double x);

// Product form in d dimensions; beta depends only on sum(n) through
// beta_n = (E/(n + d/2))^2.
double sturmian_eval_multi(double energy, const std::vector<int>& n,
                           const std::vector<double>& x);

// N_n = <psi_n| x^2/2 |psi_n> = (2n+1)^{5/2} / (8 sqrt 2) * E^{-3/2}.
double normalization_N(double energy, int n);

// pi^{-1/4} (n!)^{-1/2} 2^{-n/2}, the Hermite-function prefactor.
double prefactor(int n);

// Fourier transform phi_n(k) = integral e^{ikx} psi_n(x) dx:
//   phi_n(k) = i^n sqrt(2 pi) beta^{-1/4} prefactor(n)
//              H_n(k / beta^{1/4}) e^{-k^2 / (2 sqrt(beta))}
// Real for even n, imaginary for odd n.
Complex momentum_sturmian(double energy, int n, double k);

// A bath of oscillators at positions x_i with couplings g_i,
// V = (1/2) sum_i g_i (x - x_i)^2.
struct BathSpec {
  std::vector<double> positions;
  std::vector<double> couplings;

  BathSpec(std::vector<double> xs, std::vector<double> gs);
};

// V rewritten as gbar*V0 - c1*x + c2.
struct ReducedOscillator {
  double gbar = 0.0;  // sum g_i
  double c1 = 0.0;    // sum g_i x_i
  double c2 = 0.0;    // (1/2) sum g_i x_i^2

  double centre() const { return c1 / (2.0 * gbar); }
  double energy_shift() const { return c2 - c1 * c1 / (4.0 * gbar); }
};

ReducedOscillator bath_reduce(const BathSpec& spec);

// beta~_n = gbar ((E - c2 + c1^2/(4 gbar)) / (n+1/2))^2; requires the
// shifted energy to be positive.
double beta_tilde(const BathSpec& spec, double energy, int n);

// Bath Sturmian: the psi_n form with beta~_n and argument x - c1/(2 gbar).
double bath_sturmian_eval(const BathSpec& spec, double energy, int n, double x);

}  // namespace sturmian::basis
