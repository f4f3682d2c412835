#include "sturmian/secular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sturmian::secular {

SecularSystem assemble(const basis::BasisSpec& spec,
                       const std::vector<matelem::PotentialTerm>& terms) {
  SecularSystem sys{spec, {}, matelem::SymMatrix(spec.size()), matelem::SymMatrix(spec.size())};
  sys.diagonal.reserve(spec.indices.size());
  for (int n : spec.indices)
    sys.diagonal.push_back((1.0 - basis::beta(spec.energy, n)) *
                           basis::normalization_N(spec.energy, n));
  sys.perturbation = matelem::terms_matrix(spec, terms);
  sys.overlap = matelem::overlap_T(spec);
  return sys;
}

namespace {

// Cholesky B = L L^T, lower triangle, row-major dense.
std::vector<double> cholesky(const matelem::SymMatrix& b) {
  const int n = b.dim();
  std::vector<double> l(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double sum = b(i, j);
      for (int k = 0; k < j; ++k) sum -= l[i * n + k] * l[j * n + k];
      if (i == j) {
        if (!(sum > 0.0))
          throw NotPositiveDefinite("generalized_sym_eig: overlap matrix not positive definite");
        l[i * n + i] = std::sqrt(sum);
      } else {
        l[i * n + j] = sum / l[j * n + j];
      }
    }
  }
  return l;
}

// Cyclic Jacobi on a symmetric dense matrix; returns eigenvalues in place
// of the diagonal and accumulates rotations into v (row-major, columns are
// eigenvectors).
void jacobi_eigen(std::vector<double>& m, std::vector<double>& v, int n) {
  v.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    double total = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double x = m[i * n + j] * m[i * n + j];
        total += x;
        if (j > i) off += x;
      }
    if (off <= 1e-28 * total || total == 0.0) return;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = m[p * n + q];
        if (std::abs(apq) <= 1e-300) continue;
        const double app = m[p * n + p];
        const double aqq = m[q * n + q];
        const double theta = 0.5 * (aqq - app) / apq;
        const double t = (theta >= 0.0)
                             ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                             : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double mkp = m[k * n + p];
          const double mkq = m[k * n + q];
          m[k * n + p] = c * mkp - s * mkq;
          m[k * n + q] = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          const double mpk = m[p * n + k];
          const double mqk = m[q * n + k];
          m[p * n + k] = c * mpk - s * mqk;
          m[q * n + k] = s * mpk + c * mqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
  }
}

}  // namespace

EigenSolution generalized_sym_eig(const matelem::SymMatrix& a,
                                  const matelem::SymMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("generalized_sym_eig: dim mismatch");
  const int n = a.dim();
  const std::vector<double> l = cholesky(b);

  // C = L^-1 A by forward substitution on columns of A
  std::vector<double> c(static_cast<std::size_t>(n) * n, 0.0);
  for (int col = 0; col < n; ++col)
    for (int i = 0; i < n; ++i) {
      double sum = a(i, col);
      for (int k = 0; k < i; ++k) sum -= l[i * n + k] * c[k * n + col];
      c[i * n + col] = sum / l[i * n + i];
    }
  // M = C L^-T, i.e. M^T = L^-1 C^T; M is symmetric
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  for (int row = 0; row < n; ++row)
    for (int i = 0; i < n; ++i) {
      double sum = c[row * n + i];
      for (int k = 0; k < i; ++k) sum -= l[i * n + k] * m[row * n + k];
      m[row * n + i] = sum / l[i * n + i];
    }

  std::vector<double> v;
  jacobi_eigen(m, v, n);

  // back-transform columns: solve L^T x = y
  std::vector<std::pair<double, std::vector<double>>> pairs(n);
  for (int col = 0; col < n; ++col) {
    std::vector<double> x(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
      double sum = v[i * n + col];
      for (int k = i + 1; k < n; ++k) sum -= l[k * n + i] * x[k];
      x[i] = sum / l[i * n + i];
    }
    pairs[col] = {m[col * n + col], std::move(x)};
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });

  EigenSolution out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (auto& [value, vec] : pairs) {
    double peak = 0.0;
    for (double x : vec) peak = std::max(peak, std::abs(x));
    for (double x : vec) {
      if (std::abs(x) > 1e-12 * peak) {
        if (x < 0.0)
          for (double& y : vec) y = -y;
        break;
      }
    }
    out.values.push_back(value);
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

SpectralResult solve_fixed_reference(const SecularSystem& system, double energy) {
  const int n = system.spec.size();
  matelem::SymMatrix a(n);
  a.add_scaled(system.perturbation, 1.0);
  for (int i = 0; i < n; ++i) a.set(i, i, a(i, i) + system.diagonal[i]);

  const EigenSolution eig = generalized_sym_eig(a, system.overlap);

  SpectralResult result;
  result.mode = SolveMode::FixedReference;
  for (int i = 0; i < n; ++i) {
    result.energies.push_back(energy + eig.values[i]);
    // residual ||(A - lambda B) c||
    double r2 = 0.0;
    for (int row = 0; row < n; ++row) {
      double acc = 0.0;
      for (int col = 0; col < n; ++col)
        acc += (a(row, col) - eig.values[i] * system.overlap(row, col)) *
               eig.vectors[i][col];
      r2 += acc * acc;
    }
    result.residuals.push_back(std::sqrt(r2));
  }
  result.coefficients = eig.vectors;
  return result;
}

double det_lu(std::vector<double> m, int dim) {
  double det = 1.0;
  for (int col = 0; col < dim; ++col) {
    int pivot = col;
    for (int row = col + 1; row < dim; ++row)
      if (std::abs(m[row * dim + col]) > std::abs(m[pivot * dim + col])) pivot = row;
    if (m[pivot * dim + col] == 0.0) return 0.0;
    if (pivot != col) {
      for (int k = 0; k < dim; ++k) std::swap(m[pivot * dim + k], m[col * dim + k]);
      det = -det;
    }
    det *= m[col * dim + col];
    for (int row = col + 1; row < dim; ++row) {
      const double f = m[row * dim + col] / m[col * dim + col];
      for (int k = col; k < dim; ++k) m[row * dim + k] -= f * m[col * dim + k];
    }
  }
  return det;
}

double secular_det(const std::vector<int>& indices, double energy,
                   const std::vector<matelem::PotentialTerm>& terms) {
  if (!(energy > 0.0)) throw std::invalid_argument("secular_det: energy must be > 0");
  const basis::BasisSpec spec(energy, indices);
  const matelem::SymMatrix pert = matelem::terms_matrix(spec, terms);
  const int n = spec.size();
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i * n + j] = pert(i, j);
  for (int i = 0; i < n; ++i)
    m[i * n + i] += (1.0 - basis::beta(energy, spec.indices[i])) *
                    basis::normalization_N(energy, spec.indices[i]);
  return det_lu(std::move(m), n);
}

namespace {

// bisection/secant hybrid on a bracketing interval
template <typename F>
double refine_root(F&& f, double a, double b, double fa, double fb) {
  for (int it = 0; it < 200; ++it) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    double mid = 0.5 * (a + b);
    double cand = mid;
    const double denom = fb - fa;
    if (denom != 0.0) {
      const double sec = b - fb * (b - a) / denom;
      if (sec > a && sec < b) cand = sec;
    }
    // guard against stagnation at an endpoint
    if (cand <= a || cand >= b) cand = mid;
    const double fc = f(cand);
    if (fc == 0.0) return cand;
    if ((fa < 0.0) != (fc < 0.0)) {
      b = cand;
      fb = fc;
    } else {
      a = cand;
      fa = fc;
    }
    if (b - a <= 1e-13 * std::max(1.0, std::abs(b))) break;
  }
  return 0.5 * (a + b);
}

}  // namespace

SpectralResult solve_self_consistent(const std::vector<int>& indices,
                                     const std::vector<matelem::PotentialTerm>& terms,
                                     std::pair<double, double> bracket,
                                     int scan_points) {
  const auto [lo, hi] = bracket;
  if (!(lo >= 0.05) || !(hi > lo))
    throw std::invalid_argument("solve_self_consistent: need 0.05 <= lo < hi");
  if (scan_points < 2)
    throw std::invalid_argument("solve_self_consistent: need at least 2 scan points");

  const auto f = [&](double e) { return secular_det(indices, e, terms); };

  SpectralResult result;
  result.mode = SolveMode::SelfConsistent;
  double eprev = lo;
  double fprev = f(eprev);
  for (int i = 1; i < scan_points; ++i) {
    const double e = lo + (hi - lo) * i / (scan_points - 1);
    const double fe = f(e);
    if (fprev == 0.0) {
      result.energies.push_back(eprev);
      result.residuals.push_back(0.0);
      result.brackets.emplace_back(eprev, eprev);
    } else if ((fprev < 0.0) != (fe < 0.0)) {
      const double root = refine_root(f, eprev, e, fprev, fe);
      result.energies.push_back(root);
      result.residuals.push_back(std::abs(f(root)));
      result.brackets.emplace_back(eprev, e);
    }
    eprev = e;
    fprev = fe;
  }
  if (fprev == 0.0) {
    result.energies.push_back(eprev);
    result.residuals.push_back(0.0);
    result.brackets.emplace_back(eprev, eprev);
  }
  return result;
}

}  // namespace sturmian::secular
