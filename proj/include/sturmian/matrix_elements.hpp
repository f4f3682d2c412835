#pragma once

// Matrix elements between Sturmians: the overlap T, powers of x (W^k),
// and Gaussian-damped powers (W~^k). All elements are Gauss-Hermite
// quadratures of polynomial integrands, hence exact up to roundoff.
// The appendix-style closed form I_nm (Laguerre / 1F1 generating
// function) is kept as an independent route for cross-checking.

#include <vector>

#include "sturmian/basis.hpp"

namespace sturmian::matelem {

// Dense symmetric real matrix of basis-pair values.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim, 0.0) {}

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return data_[idx(i, j)]; }

  // writes both (i,j) and (j,i)
  void set(int i, int j, double value) {
    data_[idx(i, j)] = value;
    data_[idx(j, i)] = value;
  }

  SymMatrix& add_scaled(const SymMatrix& other, double factor);

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * dim_ + j; }

  int dim_ = 0;
  std::vector<double> data_;
};

// One tagged term of a perturbing potential V'.
struct PotentialTerm {
  enum class Kind { PowerX, GaussianDampedPower, Constant, HarmonicRescale };

  Kind kind = Kind::Constant;
  int power = 0;
  double coefficient = 0.0;

  static PotentialTerm power_x(int k, double coeff) { return {Kind::PowerX, k, coeff}; }
  static PotentialTerm gaussian_damped(int k, double coeff) {
    return {Kind::GaussianDampedPower, k, coeff};
  }
  static PotentialTerm constant(double coeff) { return {Kind::Constant, 0, coeff}; }
  static PotentialTerm harmonic_rescale(double coeff) {
    return {Kind::HarmonicRescale, 0, coeff};
  }
};

// T_nn' = <psi_n|psi_n'>
SymMatrix overlap_T(const basis::BasisSpec& spec);

// W^(k)_nn' = <psi_n| x^k |psi_n'>, k <= 12
SymMatrix power_W(const basis::BasisSpec& spec, int k);

// W~^(k)_nn' = <psi_n| x^k e^{-x^2} |psi_n'>, k <= 12
SymMatrix gaussian_damped_W(const basis::BasisSpec& spec, int k);

// coefficient * {T | W^k | W~^k | 0.5 W^2} per term kind
SymMatrix term_matrix(const basis::BasisSpec& spec, const PotentialTerm& term);

SymMatrix terms_matrix(const basis::BasisSpec& spec,
                       const std::vector<PotentialTerm>& terms);

// I_nm(alpha, beta, gamma, delta) = integral H_n(alpha x) H_m(beta x)
// x^gamma e^{-delta x^2 / 2} dx, from the closed-form generating
// integral expanded in separate formal parameters for the two Hermite
// indices (coefficient of s^n t^m). gamma is a non-negative integer:
// even -> Laguerre branch, odd -> 1F1 branch.
double inm_closed_form(double alpha, double beta, int gamma, double delta,
                       int n, int m);

// Same integral evaluated by Gauss-Hermite quadrature.
double inm_quadrature(double alpha, double beta, int gamma, double delta,
                      int n, int m);

// Residuals of the equal-argument Taylor relations
//   sum_{n+m=k} I_nm/(n! m!) = Icoef_k / k!,   k = 0..order,
// with the I_nm from quadrature and Icoef_k from the closed form.
std::vector<double> taylor_relations_check(double alpha, double beta, int gamma,
                                           double delta, int order);

}  // namespace sturmian::matelem
