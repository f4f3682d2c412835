#include "sturmian/audit.hpp"

#include <cmath>
#include <limits>

#include "sturmian/basis.hpp"
#include "sturmian/io.hpp"
#include "sturmian/matrix_elements.hpp"
#include "sturmian/models.hpp"
#include "sturmian/secular.hpp"
#include "sturmian/specfun.hpp"

namespace sturmian::audit {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double s(double x) { return std::sqrt(x); }

PrintedMatrix make_T() {
  const double a = 1.0 / s(2.0);
  const double b = -s(5.0 / 3.0) / 3.0;
  const double c = 12.0 / 25.0 * s(3.0 / 5.0);
  const double d = -21.0 / 25.0 * s(3.0 / 5.0);
  const double e = -132.0 / 343.0 * s(30.0 / 7.0);
  return {"T",
          -0.5,
          {{a, 0, b, 0, c},
           {0, s(3.0 / 2.0), 0, d, 0},
           {b, 0, s(5.0 / 2.0), 0, e},
           {0, d, 0, s(7.0 / 2.0), 0},
           {c, 0, e, 0, 3.0 / s(2.0)}}};
}

PrintedMatrix make_W1() {
  const double a = 3.0 / 8.0;
  const double b = -21.0 / 128.0 * s(3.0);
  const double c = 75.0 / 128.0 * s(3.0);
  const double d = -81.0 / (64.0 * s(2.0));
  const double e = 1925.0 / 1728.0 * s(5.0);
  const double f = 508599.0 / 131072.0;
  return {"W1",
          -1.0,
          {{0, a, 0, b, 0},
           {a, 0, c, 0, d},
           {0, c, 0, e, 0},
           {b, 0, e, 0, f},
           {0, d, 0, f, 0}}};
}

PrintedMatrix make_W3() {
  const double a = 27.0 / 64.0;
  const double b = -343.0 * s(3.0) / 2048.0;
  const double c = 7425.0 * s(5.0) / 2048.0;
  const double d = -3159.0 / (512.0 * s(2.0));
  const double e = 677425.0 * s(5.0) / 41472.0;
  const double f = 431831169.0 / 4194304.0;
  return {"W3",
          -2.0,
          {{0, a, 0, b, 0},
           {a, 0, c, 0, d},
           {0, c, 0, e, 0},
           {b, 0, e, 0, f},
           {0, d, 0, f, 0}}};
}

PrintedMatrix make_W4() {
  const double a = 3.0 / (16.0 * s(2.0));
  const double b = 25.0 / 144.0 * s(5.0 / 3.0);
  const double c = -243.0 / 1000.0 * s(3.0 / 5.0);
  const double d = 135.0 / 16.0 * s(3.0 / 2.0);
  const double e = 27783.0 / 2000.0 * s(3.0 / 5.0);
  const double f = 975.0 / 16.0 * s(5.0 / 2.0);
  const double g = 625725.0 / 9604.0 * s(15.0 / 14.0);
  const double h = 3675.0 / 16.0 * s(7.0 / 2.0);
  const double i = 29889.0 / (16.0 * s(2.0));
  return {"W4",
          -2.5,
          {{a, 0, b, 0, c},
           {0, d, 0, e, 0},
           {b, 0, f, 0, g},
           {0, e, 0, h, 0},
           {c, 0, g, 0, i}}};
}

}  // namespace

const PrintedMatrix& printed_T() {
  static const PrintedMatrix m = make_T();
  return m;
}
const PrintedMatrix& printed_W1() {
  static const PrintedMatrix m = make_W1();
  return m;
}
const PrintedMatrix& printed_W3() {
  static const PrintedMatrix m = make_W3();
  return m;
}
const PrintedMatrix& printed_W4() {
  static const PrintedMatrix m = make_W4();
  return m;
}

double printed_W3_damped(int i, int j, double energy) {
  if (i > j) std::swap(i, j);
  const double e = energy;
  const double pre = s(e);  // overall E^{1/2} factor of the display
  if (i == 0 && j == 1) return pre * 27.0 / (2.0 * std::pow(3.0 + 4.0 * e, 2.5));
  if (i == 1 && j == 2)
    return pre * -225.0 * (15.0 - 22.0 * e) /
           (4.0 * s(1.0 / 6.0 + 4.0 * e / 45.0) * std::pow(15.0 + 8.0 * e, 3.0));
  if (i == 0 && j == 3)
    return pre * -s(3.0 / 2.0) * 343.0 * (3.0 + 2.0 * e) /
           (2.0 * std::pow(7.0 + 8.0 * e, 3.5));
  if (i == 1 && j == 4)
    return pre * 81.0 * (243.0 - 324.0 * e - 52.0 * e * e) /
           (4.0 * s(2.0 + 8.0 * e / 9.0) * std::pow(9.0 + 4.0 * e, 4.0));
  if (i == 2 && j == 3)
    return pre * 1225.0 * (525.0 - 940.0 * e + 316.0 * e * e) * s(21.0) /
           (4.0 * s(1.0 + 12.0 * e / 35.0) * std::pow(35.0 + 12.0 * e, 4.0));
  if (i == 3 && j == 4)
    return pre * -250047.0 *
           (107163.0 - 207522.0 * e + 94356.0 * e * e - 13816.0 * e * e * e) /
           (8.0 * std::pow(63.0 + 16.0 * e, 5.5));
  if ((i + j + 3) % 2 == 1) return 0.0;  // parity zeros are implicit
  return kNan;
}

double printed_W4_damped(int i, int j, double energy) {
  if (i > j) std::swap(i, j);
  const double e = energy;
  if (i == 0 && j == 0) return 3.0 / (4.0 * std::pow(1.0 + 2.0 * e, 2.5));
  if (i == 0 && j == 2)
    return -75.0 * (5.0 - 4.0 * e) /
           (8.0 * s(0.5 + 3.0 * e / 5.0) * std::pow(5.0 + 6.0 * e, 3.0));
  if (i == 1 && j == 1) return 5.0 / (2.0 * std::pow(1.0 + 2.0 * e / 3.0, 3.5));
  if (i == 0 && j == 4)
    return 243.0 * (243.0 - 160.0 * e * e) /
           (16.0 * s(1.5 + 5.0 * e / 3.0) * std::pow(9.0 + 10.0 * e, 4.0));
  if (i == 1 && j == 3)
    return -19845.0 * e * (21.0 - 4.0 * e) /
           (4.0 * s(1.0 / 14.0 + 5.0 * e / 147.0) * std::pow(21.0 + 10.0 * e, 4.0));
  if (i == 2 && j == 2)
    return 75.0 * (25.0 - 80.0 * e + 104.0 * e * e) /
           (8.0 * s(1.0 + 2.0 * e / 5.0) * std::pow(5.0 + 4.0 * e, 4.0));
  if (i == 2 && j == 4)
    return -2025.0 *
           (273375.0 - 899100.0 * e + 1219680.0 * e * e - 92288.0 * e * e * e) /
           (16.0 * s(1.0 / 3.0 + 14.0 * e / 135.0) * std::pow(45.0 + 14.0 * e, 5.0));
  if (i == 3 && j == 3)
    return 735.0 * e * (147.0 - 112.0 * e + 40.0 * e * e) /
           (4.0 * s(1.0 + 2.0 * e / 7.0) * std::pow(7.0 + 2.0 * e, 5.0));
  if (i == 4 && j == 4)
    return 729.0 *
           (19683.0 - 69984.0 * e + 106272.0 * e * e - 32256.0 * e * e * e +
            5248.0 * e * e * e * e) /
           (32.0 * std::pow(9.0 + 2.0 * e, 6.5));
  if ((i + j + 4) % 2 == 1) return 0.0;
  return kNan;
}

double printed_table1_coeff(int n) {
  switch (n) {
    case 0: return 1.0 / (8.0 * s(2.0));
    case 1: return 9.0 / 8.0 * s(3.0 / 2.0);
    case 2: return 25.0 / 8.0 * s(5.0 / 2.0);
    case 3: return 49.0 / 8.0 * s(7.0 / 2.0);
    case 4: return 243.0 / s(2.0);  // the factor-8 misprint
    case 5: return 121.0 / 8.0 * s(11.0 / 2.0);
    case 6: return 169.0 / 8.0 * s(13.0 / 2.0);
    case 7: return 225.0 / 8.0 * s(15.0 / 2.0);
    case 8: return 289.0 / 8.0 * s(17.0 / 2.0);
    case 9: return 361.0 / 8.0 * s(19.0 / 2.0);
  }
  return kNan;
}

double printed_table2(bool quartic, int n_sturmians) {
  if (quartic) {
    switch (n_sturmians) {
      case 1: return 0.562709;
      case 2: return 0.562709;
      case 3: return 0.562709;
      case 4: return 0.562544;
      case 5: return 0.562516;
      case 10: return 0.533858;
    }
  } else {
    switch (n_sturmians) {
      case 1: return 0.500000;
      case 2: return 0.014628;
      case 3: return 0.112767;
      case 4: return 0.351135;
      case 5: return 0.102981;
      case 10: return 1.27012;
    }
  }
  return kNan;
}

double printed_table3_sturmian(int n, int n_basis) {
  static const double n1[] = {1.07500, 3.37500, 5.97500, 8.87500, 12.0750};
  static const double n2[] = {1.07500, 3.37500, 5.97500, 7.00152, 9.30093};
  if (n < 0 || n > 4) return kNan;
  return n_basis == 1 ? n1[n] : n2[n];
}

double printed_table3_reference(int n) {
  static const double v[] = {1.06529, 3.30687, 5.74795, 8.35268, 11.09860};
  return (n >= 0 && n <= 4) ? v[n] : kNan;
}

double printed_table3_difference(int n, int n_basis) {
  static const double d1[] = {-0.00971, -0.06813, -0.22705, -0.52232, -0.97640};
  static const double d2[] = {-0.00971, -0.06813, -0.22705, 1.35116, 1.79767};
  if (n < 0 || n > 4) return kNan;
  return n_basis == 1 ? d1[n] : d2[n];
}

double printed_table4(int k, int n_sturmians) {
  if (k == 3) {
    switch (n_sturmians) {
      case 1: return 0.500000;
      case 2: return 0.495852;
      case 3: return 0.491822;
      case 4: return 0.491282;
      case 5: return 0.491282;
    }
  } else if (k == 4) {
    switch (n_sturmians) {
      case 1: return 0.622877;
      case 2: return 0.622877;
      case 3: return 0.622878;
      case 4: return 0.622877;
      case 5: return 0.622878;
    }
  }
  return kNan;
}

namespace {

void compare(std::vector<ErrataEntry>& out, const std::string& location,
             double printed, double computed, double tol) {
  ErrataEntry entry;
  entry.location = location;
  entry.printed = io::format_number(printed);
  entry.computed = io::format_number(computed);
  entry.abs_diff = std::abs(printed - computed);
  entry.verdict = (entry.abs_diff <= tol) ? "confirmed" : "mismatch";
  out.push_back(std::move(entry));
}

void note(std::vector<ErrataEntry>& out, const std::string& location,
          const std::string& printed, const std::string& computed) {
  out.push_back({location, printed, computed, kNan, "note"});
}

std::string ij(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void audit_matrix(std::vector<ErrataEntry>& out, const PrintedMatrix& fixture,
                  const matelem::SymMatrix& computed) {
  for (int i = 0; i < 5; ++i)
    for (int j = i; j < 5; ++j)
      compare(out, "sec 2/3/6 " + fixture.name + " display, entry " + ij(i, j),
              fixture.coeff[i][j], computed(i, j), 1e-10);
}

}  // namespace

std::vector<ErrataEntry> run_errata() {
  std::vector<ErrataEntry> out;

  // --- Table 1: normalisation constants ---
  const auto quad_rule = specfun::gauss_hermite(30);
  for (int n = 0; n <= 9; ++n) {
    const double b = std::sqrt(basis::beta(1.0, n));
    const double quad =
        quad_rule.integrate_scaled(b, [&](double x) {
          const double h = specfun::hermite(n, std::sqrt(b) * x);
          return 0.5 * x * x * h * h;
        }) *
        basis::prefactor(n) * basis::prefactor(n);
    compare(out, "Table 1, N_" + std::to_string(n), printed_table1_coeff(n), quad,
            1e-10);
  }
  note(out,
       "sec 2 inline formula N_n = (2n+1)^{3/2}/(8 sqrt 2) E^{-3/2}",
       io::format_number(std::pow(3.0, 1.5) / (8.0 * std::sqrt(2.0))),
       io::format_number(basis::normalization_N(1.0, 1)) +
           " (integral gives (2n+1)^{5/2}/(8 sqrt 2) E^{-3/2}; shown at n=1)");

  // --- matrix displays at E = 1 ---
  const basis::BasisSpec unit(1.0, {0, 1, 2, 3, 4});
  audit_matrix(out, printed_T(), matelem::overlap_T(unit));
  audit_matrix(out, printed_W1(), matelem::power_W(unit, 1));
  audit_matrix(out, printed_W3(), matelem::power_W(unit, 3));
  audit_matrix(out, printed_W4(), matelem::power_W(unit, 4));

  // --- Gaussian-damped displays at E = 1 and E = 0.7 ---
  for (double e : {1.0, 0.7}) {
    const basis::BasisSpec at_e(e, {0, 1, 2, 3, 4});
    const auto w3 = matelem::gaussian_damped_W(at_e, 3);
    const auto w4 = matelem::gaussian_damped_W(at_e, 4);
    const std::string suffix = " at E=" + io::format_number(e);
    for (int i = 0; i < 5; ++i)
      for (int j = i; j < 5; ++j) {
        const double p3 = printed_W3_damped(i, j, e);
        if (!std::isnan(p3))
          compare(out, "sec 7 W~3 display, entry " + ij(i, j) + suffix, p3, w3(i, j),
                  1e-10);
        const double p4 = printed_W4_damped(i, j, e);
        if (!std::isnan(p4))
          compare(out, "sec 7 W~4 display, entry " + ij(i, j) + suffix, p4, w4(i, j),
                  1e-10);
      }
  }

  // --- Table 2 vs self-consistent roots ---
  const auto t2_quartic =
      models::anharmonic_table(models::AnharmonicKind::Quartic, 0.1, {1, 2, 3, 4, 5, 10});
  const auto t2_cubic =
      models::anharmonic_table(models::AnharmonicKind::Cubic, 0.1, {1, 2, 3, 4, 5, 10});
  const int t2_n[] = {1, 2, 3, 4, 5, 10};
  for (int i = 0; i < 6; ++i) {
    compare(out, "Table 2, x^4 column, N=" + std::to_string(t2_n[i]),
            printed_table2(true, t2_n[i]), t2_quartic[i].ground, 5e-6);
    compare(out, "Table 2, x^3 column, N=" + std::to_string(t2_n[i]),
            printed_table2(false, t2_n[i]), t2_cubic[i].ground, 5e-6);
  }
  note(out, "Table 2, x^4 column, N=10 instability claim",
       "0.533858 (unstable ground value)",
       io::format_number(t2_quartic[5].ground) +
           " (the exact determinant root sequence converges; no instability "
           "reproduced)");
  // the printed x^3 N=2 root lies below the E >= 0.05 solver floor; locate
  // it by direct determinant bisection for the comparison
  {
    const std::vector<matelem::PotentialTerm> cubic_terms = {
        matelem::PotentialTerm::power_x(3, 0.1)};
    double lo = 0.005, hi = 0.05;
    double flo = secular::secular_det({0, 1}, lo, cubic_terms);
    double root = kNan;
    const int steps = 400;
    for (int i = 1; i <= steps; ++i) {
      const double e = lo + (hi - lo) * i / steps;
      const double fe = secular::secular_det({0, 1}, e, cubic_terms);
      if ((flo < 0) != (fe < 0)) {
        double a = lo + (hi - lo) * (i - 1) / steps, b = e;
        for (int it = 0; it < 100; ++it) {
          const double m = 0.5 * (a + b);
          ((secular::secular_det({0, 1}, m, cubic_terms) < 0) !=
           (secular::secular_det({0, 1}, a, cubic_terms) < 0))
              ? b = m
              : a = m;
        }
        root = 0.5 * (a + b);
        break;
      }
      flo = fe;
    }
    compare(out, "Table 2, x^3 column, N=2 (root below bracket floor)", 0.014628,
            root, 5e-6);
  }

  // --- Table 3 ---
  for (int n = 0; n <= 4; ++n) {
    const auto one = models::quartic_excited_fixed(n, 1, 0.1, 0.5, 2.0);
    const auto two = models::quartic_excited_fixed(n, 2, 0.1, 0.5, 2.0);
    compare(out, "Table 3, Sturmian N=1, n=" + std::to_string(n),
            printed_table3_sturmian(n, 1), one.e_state, 5e-5);
    compare(out, "Table 3, Sturmian N=2, n=" + std::to_string(n),
            printed_table3_sturmian(n, 2), two.e_state, 5e-5);
    compare(out, "Table 3, difference N=1, n=" + std::to_string(n),
            printed_table3_difference(n, 1), printed_table3_reference(n) - one.e_state,
            1e-4);
  }
  note(out, "Table 3, N=2 rows n=3,4",
       "7.00152, 9.30093",
       "the printed two-function quadratic factorizes to the N=1 values "
       "8.87500, 12.07500; the printed numbers follow from neither");

  // --- Table 4 ---
  const auto t4_x3 = models::damped_anharmonic_table(3, 1.0, {1, 2, 3, 4, 5});
  const auto t4_x4 = models::damped_anharmonic_table(4, 1.0, {1, 2, 3, 4, 5});
  for (int n = 1; n <= 5; ++n) {
    compare(out, "Table 4, x^3 e^{-x^2} column, N=" + std::to_string(n),
            printed_table4(3, n), t4_x3[n - 1].ground, 5e-6);
    compare(out, "Table 4, x^4 e^{-x^2} column, N=" + std::to_string(n),
            printed_table4(4, n), t4_x4[n - 1].ground, 5e-6);
  }

  // --- closed forms and quoted numbers in sec 3 ---
  compare(out, "sec 3 z-formula for E0'(alpha) at alpha=0.1 vs Table 2",
          models::quartic_ground_z_formula(0.1),
          models::quartic_ground_closed_form(0.1), 5e-6);
  compare(out, "sec 3 quoted cubic perturbation value 0.3625 vs its formula", 0.3625,
          models::perturbation_reference(models::AnharmonicKind::Cubic, 0.1, 1.0, 1.0,
                                         1.0),
          5e-5);
  compare(out, "sec 3 quoted quartic perturbation value 0.46125 vs its formula",
          0.46125,
          models::perturbation_reference(models::AnharmonicKind::Quartic, 0.1, 1.0, 1.0,
                                         1.0),
          1e-12);
  compare(out, "Table 3 caption perturbative value 0.4900 (m=1/2, omega=2)", 0.4900,
          models::perturbation_reference(models::AnharmonicKind::Quartic, 0.1, 0.5, 2.0,
                                         1.0),
          5e-5);

  // --- sec 4 damped oscillator explicit n=0 frequency ---
  for (double e : {0.7, 1.0})
    compare(out, "sec 4 omega_0 = (1+4E^2)/(8E) at E=" + io::format_number(e),
            (1.0 + 4.0 * e * e) / (8.0 * e), models::damped_omega0(e, 0), 1e-12);

  // --- sec 5 bath energy vs the on-shell inversion ---
  {
    const basis::BathSpec one({1.0}, {1.0});
    const auto red = basis::bath_reduce(one);
    const double printed = models::bath_energy(one, 0);  // n + 1/4 at M=1
    const double inverted = 0.5 / std::sqrt(red.gbar) + red.energy_shift();
    compare(out,
            "sec 5 E_n display vs beta~_n = 1 inversion (M=1, n=0; sign of "
            "c2 - c1^2/4g)",
            printed, inverted, 1e-12);
  }

  // --- sec 6 ---
  {
    // printed N=1 cubic vs the one assembled from the printed secular
    // structure and the actual matrix elements (gbar = c2 = c4 = 1):
    // (beta_0+gbar)N_0 + c2 T_00 - c4 W4_00 = 0 clears to
    // 8E^3 + 16 c2 E^2 + 2 gbar E - 3 c4 = 0
    note(out, "sec 6 printed N=1 cubic gbar - 3 c4 E + 4E^2 + 16 c2 E^3",
         "coefficients (gbar, -3c4, 4, 16c2)",
         "matrix elements give (-3c4, 2gbar, 16c2, 8); the printed cubic is "
         "not derivable from the printed matrices; as-printed mode keeps the "
         "literal cubic");
    const double sq = std::sqrt(1.0 + 8.0 * std::sqrt(14.0));
    const double x1 = 0.25 * (1.0 - sq);
    const double g1 = 0.5 + 28175.0 / 110608.0 * sq;
    const auto foot =
        models::coupled_reduce({x1, 0.5 - x1}, {g1, 1.0 - g1}, {{0, 1}, {1, 0}});
    compare(out, "sec 6 footnote parameters: gbar", 1.0, foot.gbar, 1e-10);
    compare(out, "sec 6 footnote parameters: c1", 1.0, foot.c1, 1e-10);
    compare(out, "sec 6 footnote parameters: c2", 1.0, foot.c2, 1e-10);
    compare(out, "sec 6 footnote parameters: c3", 1.0, foot.c3, 1e-10);
    compare(out, "sec 6 footnote parameters: c4", 1.0, foot.c4, 1e-10);
    const auto printed_roots = models::coupled_spectrum(
        models::ReducedQuartic{1, 1, 1, 1, 1}, 2, models::CoupledMode::AsPrinted);
    std::string got;
    for (const auto& r : printed_roots.roots) {
      if (!got.empty()) got += "; ";
      got += io::format_number(r.real());
      if (std::abs(r.imag()) > 1e-10 * (1.0 + std::abs(r.real())))
        got += (r.imag() > 0 ? "+" : "") + io::format_number(r.imag()) + "i";
    }
    note(out, "sec 6 N=2 root list (-9.91107, -1.51155, 0.129506+-0.435961i, "
              "0.537995+-1.32394i)",
         "see location", got + " (printed-sign determinant; the printed list is "
                               "not reproducible under tested sign choices)");
  }

  // --- momentum space and generating function remarks ---
  note(out, "sec 2 momentum-space phi_n display",
       "growing factor e^{+k^2/(2 sqrt beta)} and prefactor (1 + beta^{1/4}/2)",
       "the appendix Gaussian integral yields the decaying envelope "
       "e^{-k^2/(2 sqrt beta)}; implemented form validated against direct "
       "numerical Fourier transforms");
  note(out, "appendix generating function e^{-s^2+sx}",
       "exponent -s^2 + sx",
       "physicists' convention e^{-s^2+2sx} generates the H_n used by every "
       "other formula; verified by the generating-function identity test");
  note(out, "sec 5 printed Psi_n argument shift c1^2/(4 gbar)",
       "x + c1^2/(4 gbar)",
       "the completed square of the printed V has centre c1/(2 gbar); that "
       "centre is used");

  return out;
}

}  // namespace sturmian::audit
