#pragma once

// Assembly and solution of the Sturmian secular equation
//   sum_n [ (1-beta_n) N_n delta_nn' + <psi_n'|V'|psi_n>
//           + (E-E') <psi_n'|psi_n> ] c_n = 0
// in two modes: fixed-reference (E held fixed, generalized symmetric
// eigenproblem for E') and self-consistent (E' = E, root-find the
// secular determinant in E).

#include <stdexcept>
#include <utility>
#include <vector>

#include "sturmian/basis.hpp"
#include "sturmian/matrix_elements.hpp"

namespace sturmian::secular {

struct SecularSystem {
  basis::BasisSpec spec;
  std::vector<double> diagonal;        // (1 - beta_n) N_n
  matelem::SymMatrix perturbation;     // sum of V' term matrices
  matelem::SymMatrix overlap;          // T
};

SecularSystem assemble(const basis::BasisSpec& spec,
                       const std::vector<matelem::PotentialTerm>& terms);

// thrown when the B matrix of the generalized problem fails Cholesky
class NotPositiveDefinite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EigenSolution {
  std::vector<double> values;                 // ascending
  std::vector<std::vector<double>> vectors;   // vectors[i] belongs to values[i],
                                              // B-orthonormal, first nonzero
                                              // component positive
};

// A c = lambda B c via Cholesky B = L L^T and cyclic Jacobi on L^-1 A L^-T.
EigenSolution generalized_sym_eig(const matelem::SymMatrix& a,
                                  const matelem::SymMatrix& b);

enum class SolveMode { FixedReference, SelfConsistent };

struct SpectralResult {
  SolveMode mode = SolveMode::FixedReference;
  std::vector<double> energies;                  // E' or located roots E
  std::vector<std::vector<double>> coefficients; // fixed-reference only
  std::vector<double> residuals;                 // per energy
  std::vector<std::pair<double, double>> brackets;  // self-consistent only
};

// Solves (diag + W') c = (E' - E) T c; energies are E' = E + lambda.
SpectralResult solve_fixed_reference(const SecularSystem& system, double energy);

// det[(1-beta_n) N_n delta + W'(E)] at the given E; all matrices are
// rebuilt at E since beta, N and W all depend on it.
double secular_det(const std::vector<int>& indices, double energy,
                   const std::vector<matelem::PotentialTerm>& terms);

// Scans det(E) on a uniform grid over [lo, hi], brackets sign changes and
// refines each by a bisection/secant hybrid. Requires lo >= 0.05 (N_n and
// W diverge as E -> 0). No sign change found is an empty result, not an
// error.
SpectralResult solve_self_consistent(const std::vector<int>& indices,
                                     const std::vector<matelem::PotentialTerm>& terms,
                                     std::pair<double, double> bracket,
                                     int scan_points = 400);

// LU determinant with partial pivoting (dense, row-major square matrix).
double det_lu(std::vector<double> m, int dim);

}  // namespace sturmian::secular
