#include "sturmian/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <limits>

#include "sturmian/audit.hpp"
#include "sturmian/basis.hpp"
#include "sturmian/io.hpp"
#include "sturmian/models.hpp"
#include "sturmian/secular.hpp"
#include "sturmian/specfun.hpp"

namespace sturmian::cli {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct Options {
  std::string format = "csv";
  std::string out_path;
  double alpha = 0.1;
  double energy = 1.0;
  double mass = 0.5;
  double omega = 2.0;
  std::pair<double, double> bracket{0.05, 2.0};
  int points = 400;
  int n_sturmians = 5;
  std::vector<std::string> terms;
};

std::string render(const std::vector<io::Dataset>& datasets, const std::string& format) {
  if (datasets.size() == 1)
    return format == "json" ? io::to_json(datasets[0]) : io::to_csv(datasets[0]);
  return format == "json" ? io::to_json(datasets) : io::to_csv(datasets);
}

void emit(const std::vector<io::Dataset>& datasets, const Options& opt,
          std::ostream& out) {
  const std::string text = render(datasets, opt.format);
  if (opt.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + opt.out_path);
  file << text;
  if (!file) throw std::runtime_error("write failed for " + opt.out_path);
}

matelem::PotentialTerm parse_term(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw CLI::ValidationError("--term", "expected KIND:K:COEFF, got '" + text + "'");
  const std::string kind = text.substr(0, first);
  const int k = std::stoi(text.substr(first + 1, second - first - 1));
  const double coeff = std::stod(text.substr(second + 1));
  if (kind == "power") return matelem::PotentialTerm::power_x(k, coeff);
  if (kind == "damped") return matelem::PotentialTerm::gaussian_damped(k, coeff);
  if (kind == "const") return matelem::PotentialTerm::constant(coeff);
  if (kind == "rescale") return matelem::PotentialTerm::harmonic_rescale(coeff);
  throw CLI::ValidationError(
      "--term", "kind must be one of power, damped, const, rescale; got '" + kind + "'");
}

io::Dataset dataset_table1() {
  io::Dataset data;
  data.name = "table1";
  data.columns = {"n", "closed_form", "quadrature", "printed", "match"};
  const auto rule = specfun::gauss_hermite(30);
  for (int n = 0; n <= 9; ++n) {
    const double b = std::sqrt(basis::beta(1.0, n));
    const double quad = rule.integrate_scaled(b, [&](double x) {
                          const double h = specfun::hermite(n, std::sqrt(b) * x);
                          return 0.5 * x * x * h * h;
                        }) *
                        basis::prefactor(n) * basis::prefactor(n);
    const double closed = basis::normalization_N(1.0, n);
    const double printed = audit::printed_table1_coeff(n);
    data.add_row({static_cast<long long>(n), closed, quad, printed,
                  std::abs(printed - quad) <= 1e-10});
  }
  return data;
}

io::Dataset dataset_table2(double alpha, std::pair<double, double> bracket, int points) {
  io::Dataset data;
  data.name = "table2";
  data.columns = {"kind", "n_sturmians", "ground", "printed", "delta", "match", "roots"};
  const std::vector<int> counts = {1, 2, 3, 4, 5, 10};
  for (const bool quartic : {false, true}) {
    for (int count : counts) {
      std::vector<int> idx(count);
      for (int i = 0; i < count; ++i) idx[i] = i;
      const int power = quartic ? 4 : 3;
      const auto res = secular::solve_self_consistent(
          idx, {matelem::PotentialTerm::power_x(power, alpha)}, bracket, points);
      const double ground = res.energies.empty() ? kNan : res.energies.front();
      const double printed =
          (alpha == 0.1) ? audit::printed_table2(quartic, count) : kNan;
      std::string roots;
      for (double r : res.energies) {
        if (!roots.empty()) roots += ';';
        roots += io::format_number(r);
      }
      data.add_row({std::string(quartic ? "x4" : "x3"), static_cast<long long>(count),
                    ground, printed, printed - ground,
                    std::abs(printed - ground) <= 5e-6, roots});
    }
  }
  return data;
}

io::Dataset dataset_table3(double alpha, double mass, double omega) {
  io::Dataset data;
  data.name = "table3";
  data.columns = {"n",       "sturmian_n1", "sturmian_n2", "reference",
                  "diff_n1", "diff_n2",     "printed_n2",  "printed_diff_n1"};
  for (int n = 0; n <= 4; ++n) {
    const auto one = models::quartic_excited_fixed(n, 1, alpha, mass, omega);
    const auto two = models::quartic_excited_fixed(n, 2, alpha, mass, omega);
    const double reference = audit::printed_table3_reference(n);
    data.add_row({static_cast<long long>(n), one.e_state, two.e_state, reference,
                  reference - one.e_state, reference - two.e_state,
                  audit::printed_table3_sturmian(n, 2),
                  audit::printed_table3_difference(n, 1)});
  }
  return data;
}

io::Dataset dataset_table4(std::pair<double, double> bracket, int points) {
  io::Dataset data;
  data.name = "table4";
  data.columns = {"kind", "n_sturmians", "ground", "printed", "delta", "match"};
  for (int k : {3, 4}) {
    for (int count = 1; count <= 5; ++count) {
      std::vector<int> idx(count);
      for (int i = 0; i < count; ++i) idx[i] = i;
      const auto res = secular::solve_self_consistent(
          idx, {matelem::PotentialTerm::gaussian_damped(k, 1.0)}, bracket, points);
      const double ground = res.energies.empty() ? kNan : res.energies.front();
      const double printed = audit::printed_table4(k, count);
      data.add_row({std::string(k == 3 ? "x3exp" : "x4exp"),
                    static_cast<long long>(count), ground, printed, printed - ground,
                    std::abs(printed - ground) <= 5e-6});
    }
  }
  return data;
}

io::Dataset dataset_basis_grid(const std::string& name, double energy, int points) {
  io::Dataset data;
  data.name = name;
  data.columns = {"x"};
  for (int n = 0; n <= 9; ++n) data.columns.push_back("psi" + std::to_string(n));
  for (int i = 0; i < points; ++i) {
    const double x = -15.0 + 30.0 * i / (points - 1);
    std::vector<io::Cell> row = {x};
    for (int n = 0; n <= 9; ++n) row.emplace_back(basis::sturmian_eval(energy, n, x));
    data.add_row(std::move(row));
  }
  return data;
}

io::Dataset dataset_figure2() {
  // caption grid: t in [0, 10], x in [0, 5], E = gamma = 1, 200x200
  std::vector<double> xs(200), ts(200);
  for (int i = 0; i < 200; ++i) {
    xs[i] = 5.0 * i / 199.0;
    ts[i] = 10.0 * i / 199.0;
  }
  const auto field = models::damped_field(1.0, 1.0, xs, ts);
  io::Dataset data;
  data.name = "figure2";
  data.columns = {"x", "t", "re", "im"};
  for (std::size_t i = 0; i < field.x.size(); ++i)
    data.add_row({field.x[i], field.t[i], field.re[i], field.im[i]});
  return data;
}

io::Dataset dataset_errata() {
  io::Dataset data;
  data.name = "errata";
  data.columns = {"location", "printed", "computed", "abs_diff", "verdict"};
  for (const auto& entry : audit::run_errata())
    data.add_row({entry.location, entry.printed, entry.computed, entry.abs_diff,
                  entry.verdict});
  return data;
}

io::Dataset dataset_solve(const Options& opt, bool fixed_reference) {
  std::vector<matelem::PotentialTerm> terms;
  for (const auto& t : opt.terms) terms.push_back(parse_term(t));
  std::vector<int> idx(opt.n_sturmians);
  for (int i = 0; i < opt.n_sturmians; ++i) idx[i] = i;

  io::Dataset data;
  data.name = "solve";
  if (fixed_reference) {
    const basis::BasisSpec spec(opt.energy, idx);
    const auto res =
        secular::solve_fixed_reference(secular::assemble(spec, terms), opt.energy);
    data.columns = {"index", "energy", "residual"};
    for (int i = 0; i < opt.n_sturmians; ++i) data.columns.push_back("c" + std::to_string(i));
    for (std::size_t i = 0; i < res.energies.size(); ++i) {
      std::vector<io::Cell> row = {static_cast<long long>(i), res.energies[i],
                                   res.residuals[i]};
      for (double c : res.coefficients[i]) row.emplace_back(c);
      data.add_row(std::move(row));
    }
  } else {
    const auto res = secular::solve_self_consistent(idx, terms, opt.bracket, opt.points);
    data.columns = {"index", "energy", "residual", "bracket_lo", "bracket_hi"};
    for (std::size_t i = 0; i < res.energies.size(); ++i)
      data.add_row({static_cast<long long>(i), res.energies[i], res.residuals[i],
                    res.brackets[i].first, res.brackets[i].second});
  }
  return data;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sturmian basis-set tool for harmonic and anharmonic oscillators"};
  app.require_subcommand(1);

  Options opt;
  bool energy_given = false;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opt.out_path, "output path (default stdout)");
    return cmd;
  };

  auto* table1 = add_common(app.add_subcommand("table1", "normalisation constants"));
  auto* table2 = add_common(app.add_subcommand("table2", "anharmonic ground states"));
  table2->add_option("--alpha", opt.alpha, "perturbation strength");
  table2->add_option("--bracket", opt.bracket, "energy bracket LO,HI")->delimiter(',');
  table2->add_option("--points", opt.points, "determinant scan points");
  auto* table3 = add_common(app.add_subcommand("table3", "quartic excited states"));
  table3->add_option("--alpha", opt.alpha, "perturbation strength");
  table3->add_option("--mass", opt.mass, "particle mass");
  table3->add_option("--omega", opt.omega, "oscillator frequency");
  auto* table4 = add_common(app.add_subcommand("table4", "gaussian-damped ground states"));
  table4->add_option("--bracket", opt.bracket, "energy bracket LO,HI")->delimiter(',');
  table4->add_option("--points", opt.points, "determinant scan points");
  auto* figures = add_common(app.add_subcommand("figures", "figure datasets"));
  auto* errata = add_common(app.add_subcommand("errata", "printed-value audit"));
  auto* basis_cmd = add_common(app.add_subcommand("basis", "evaluate psi_0..psi_9"));
  basis_cmd->add_option("--energy", opt.energy, "Sturmian energy E");
  basis_cmd->add_option("--points", opt.points, "grid points")->default_val(601);
  auto* solve = add_common(app.add_subcommand("solve", "solve an ad-hoc potential"));
  solve->add_option("--term", opt.terms, "potential term KIND:K:COEFF (repeatable)");
  solve->add_option("--energy", opt.energy, "fixed reference energy (fixed mode)")
      ->trigger_on_parse()
      ->each([&](const std::string&) { energy_given = true; });
  solve->add_option("--bracket", opt.bracket, "energy bracket LO,HI")->delimiter(',');
  solve->add_option("--points", opt.points, "determinant scan points");
  solve->add_option("--nsturm", opt.n_sturmians, "basis size (first N Sturmians)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return e.get_exit_code();
  }

  try {
    if (table1->parsed()) {
      emit({dataset_table1()}, opt, out);
    } else if (table2->parsed()) {
      emit({dataset_table2(opt.alpha, opt.bracket, opt.points)}, opt, out);
    } else if (table3->parsed()) {
      emit({dataset_table3(opt.alpha, opt.mass, opt.omega)}, opt, out);
    } else if (table4->parsed()) {
      emit({dataset_table4(opt.bracket, opt.points)}, opt, out);
    } else if (figures->parsed()) {
      emit({dataset_basis_grid("figure1", 1.0, 601), dataset_figure2()}, opt, out);
    } else if (errata->parsed()) {
      emit({dataset_errata()}, opt, out);
    } else if (basis_cmd->parsed()) {
      if (opt.points < 2) throw std::invalid_argument("basis: need at least 2 points");
      emit({dataset_basis_grid("basis", opt.energy, opt.points)}, opt, out);
    } else if (solve->parsed()) {
      emit({dataset_solve(opt, energy_given)}, opt, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace sturmian::cli
