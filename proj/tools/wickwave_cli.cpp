#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wickwave/caputo.hpp"
#include "wickwave/config.hpp"
#include "wickwave/errors.hpp"
#include "wickwave/gridrun.hpp"
#include "wickwave/nls_families.hpp"
#include "wickwave/noise.hpp"
#include "wickwave/rlw_families.hpp"
#include "wickwave/wick_series.hpp"

namespace {

using nlohmann::json;
using namespace wickwave;

constexpr int kExitVerifyFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

json residual_to_json(const ResidualReport& rep) { return json::parse(rep.to_json()); }

// ---- verify suites ---------------------------------------------------------

json verify_wick(bool* pass) {
  std::mt19937_64 rng(20240817u);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_int_distribution<int> n_terms(1, 6);

  const Trunc trunc{3, 6};
  std::vector<MultiIndex> low_degree;  // degree <= 3 so products stay exact
  for (uint32_t a = 0; a <= 3; ++a)
    for (uint32_t b = 0; a + b <= 3; ++b)
      for (uint32_t c = 0; a + b + c <= 3; ++c) low_degree.push_back(MultiIndex({a, b, c}));
  std::uniform_int_distribution<size_t> pick(0, low_degree.size() - 1);

  auto random_series = [&]() {
    WickSeries::TermMap terms;
    const int n = n_terms(rng);
    for (int i = 0; i < n; ++i)
      terms[low_degree[pick(rng)]] = Complex(coeff(rng), coeff(rng));
    return WickSeries(trunc, std::move(terms));
  };

  double worst = 0.0;
  for (int trial = 0; trial < 60; ++trial) {
    const WickSeries f = random_series();
    const WickSeries g = random_series();
    const WickSeries fg = wick_product(f, g);
    for (int j = 0; j < 4; ++j) {
      std::vector<Complex> z(3);
      for (auto& zc : z) zc = Complex(coeff(rng), coeff(rng));
      const Complex lhs = hermite_transform(fg, z);
      const Complex a = hermite_transform(f, z);
      const Complex b = hermite_transform(g, z);
      const double scale = 1.0 + std::abs(a) * std::abs(b);
      worst = std::max(worst, std::abs(lhs - a * b) / scale);
    }
  }
  const bool ok = worst < 1e-12;
  *pass = ok;
  return json{{"name", "hermite transform is multiplicative on wick products"},
              {"pairs", 60},
              {"worst_relative_error", worst},
              {"tolerance", 1e-12},
              {"pass", ok}};
}

NlsParams pinned_nls_params() {
  NlsParams par;
  par.p = [](double) { return 2.0; };
  par.q = [](double) { return 1.0; };
  par.alpha = constant(Complex(1.0, 0.0));
  par.beta = constant(Complex(-2.0, 0.0));
  par.lambda = constant(Complex(0.0, 0.0));
  return par;
}

json verify_nls_ode(bool* pass) {
  json checks = json::array();
  bool all_ok = true;
  const NlsParams par = pinned_nls_params();
  const GridSpec1D grid{-5.0, 5.0, 201};
  for (int family = 1; family <= 3; ++family) {
    for (int sign : {+1, -1}) {
      const ResidualReport rep = nls_ode_residual(par, family, sign, 0.0, grid);
      const bool ok = rep.sup_norm < 1e-10;
      all_ok = all_ok && ok;
      checks.push_back(json{{"family", family},
                            {"sign", sign},
                            {"report", residual_to_json(rep)},
                            {"pass", ok}});
    }
  }
  *pass = all_ok;
  return checks;
}

json verify_nls_pde(bool* pass) {
  // constant-coefficient regime where the phase vanishes and the solution is
  // an exact classical solution, so both cubic readings coincide
  NlsParams par;
  par.p = [](double) { return 1.0; };
  par.q = [](double) { return -1.0; };
  par.alpha = constant(Complex(0.0, -1.5));
  par.lambda = constant(Complex(0.0, -12.0));
  par.c = -0.5;
  const GridSpec2D grid{-2.0, 2.0, 33, 0.0, 1.0, 33};
  const ResidualReport rep = nls_pde_residual(par, 1, +1, grid, 2);
  double order = rep.convergence_order.value_or(0.0);
  const bool ok = order > 1.8 && order < 2.2 && !rep.order_saturated;
  *pass = ok;
  return json{{"name", "finite-difference residual shrinks at second order"},
              {"observed_order", order},
              {"expected", 2.0},
              {"window", 0.2},
              {"report", residual_to_json(rep)},
              {"pass", ok}};
}

RlwParams pinned_rlw_params(int family) {
  RlwParams par;
  par.k = 1.0;
  par.alpha = 1.0;
  par.family = family;
  par.mu = [](double) { return -1.0; };
  par.p = [](double) { return 0.5; };
  par.q = [](double) { return 2.0; };
  par.r = [](double) { return 0.0; };
  par.s = [](double) { return 1.0; };
  return par;
}

json verify_rlw_ode(bool* pass) {
  json checks = json::array();
  bool all_ok = true;
  const GridSpec1D grid{-5.0, 5.0, 201};
  for (int family = 1; family <= 6; ++family) {
    const ResidualReport rep = rlw_ode_residual(pinned_rlw_params(family), 0.0, grid);
    const bool ok = rep.sup_norm < 1e-10;
    all_ok = all_ok && ok;
    checks.push_back(
        json{{"family", family}, {"report", residual_to_json(rep)}, {"pass", ok}});
  }
  *pass = all_ok;
  return checks;
}

json verify_rlw_alpha1(bool* pass) {
  json checks = json::array();
  bool all_ok = true;
  const GridSpec2D grid{-2.0, 2.0, 41, 0.0, 1.0, 41};
  for (int variant : {1, 2, 5}) {
    const ResidualReport rep = rlw_bbm_residual(variant, 0.05, -3.0, grid, 2);
    const double order = rep.convergence_order.value_or(0.0);
    const bool ok = order > 1.8 && order < 2.2 && !rep.order_saturated;
    all_ok = all_ok && ok;
    checks.push_back(json{{"variant", variant},
                          {"observed_order", order},
                          {"report", residual_to_json(rep)},
                          {"pass", ok}});
  }
  *pass = all_ok;
  return checks;
}

json verify_caputo(bool* pass) {
  json checks = json::array();
  bool all_ok = true;
  for (double r : {1.0, 2.0, 3.0}) {
    for (double alpha : {0.25, 0.5, 0.75}) {
      const RealFn f = [r](double t) { return std::pow(t, r); };
      const double exact = caputo_power(r, alpha, 1.0);
      std::vector<std::pair<double, double>> fit;
      double err_fine = 0.0;
      for (double h : {4e-3, 2e-3, 1e-3}) {
        const double approx = caputo_l1(f, alpha, 1.0, h);
        const double err = std::abs(approx - exact);
        fit.emplace_back(h, err);
        err_fine = err;
      }
      // for r = 1 the L1 sum telescopes to the closed form, so the errors sit
      // at rounding level and no order can be measured; anything below 1e-11
      // is unambiguously that exact case (true truncation here is >= ~1e-6)
      bool exact_case = true;
      for (const auto& [h, err] : fit) exact_case = exact_case && err < 1e-11;
      const OrderFit of = convergence_order(fit);
      const double expected_order = 2.0 - alpha;
      const bool order_ok = exact_case || std::abs(of.order - expected_order) < 0.25;
      const bool ok = err_fine < 1e-3 && order_ok;
      all_ok = all_ok && ok;
      json entry{{"r", r},
                 {"alpha", alpha},
                 {"error_at_h_1e-3", err_fine},
                 {"expected_order", expected_order},
                 {"pass", ok}};
      if (exact_case)
        entry["observed_order"] = "exact to rounding, order n/a";
      else
        entry["observed_order"] = of.order;
      checks.push_back(std::move(entry));
    }
  }
  *pass = all_ok;
  return checks;
}

int run_verify(const std::string& suite, const std::string& out_path) {
  bool pass = false;
  json body;
  if (suite == "wick")
    body = verify_wick(&pass);
  else if (suite == "nls-ode")
    body = verify_nls_ode(&pass);
  else if (suite == "nls-pde")
    body = verify_nls_pde(&pass);
  else if (suite == "rlw-ode")
    body = verify_rlw_ode(&pass);
  else if (suite == "rlw-alpha1")
    body = verify_rlw_alpha1(&pass);
  else if (suite == "caputo")
    body = verify_caputo(&pass);
  else
    throw ConfigError("unknown verify suite '" + suite + "'");

  const json report{{"suite", suite}, {"pass", pass}, {"checks", body}};
  if (out_path.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + out_path + "' for writing");
    out << report.dump(2) << "\n";
    std::cout << (pass ? "PASS " : "FAIL ") << suite << " -> " << out_path << "\n";
  }
  return pass ? 0 : kExitVerifyFail;
}

// ---- eval ------------------------------------------------------------------

int run_eval(const std::string& config_path, const std::string& csv_override,
             const std::string& svg_override, int threads) {
  RunConfig cfg = parse_config_file(config_path);
  if (!csv_override.empty()) cfg.csv_path = csv_override;
  if (!svg_override.empty()) cfg.svg_path = svg_override;
  if (cfg.csv_path.empty()) cfg.csv_path = "out.csv";

  const GridResult res = evaluate_grid(cfg, threads);
  write_csv(res, cfg.csv_path);
  if (!cfg.svg_path.empty()) write_svg_heatmap(res, cfg.svg_path);

  const double frac =
      static_cast<double>(res.excluded_points) / static_cast<double>(res.total_points());
  std::cout << "wrote " << cfg.csv_path << " (" << res.grid.nx << "x" << res.grid.nt
            << " points, " << res.excluded_points << " excluded)";
  if (!cfg.svg_path.empty()) std::cout << " and " << cfg.svg_path;
  std::cout << "\n";
  if (frac > 0.10) {
    std::cerr << "more than 10% of grid points hit poles or numeric failures\n";
    return kExitNumeric;
  }
  return 0;
}

// ---- families catalog ------------------------------------------------------

void print_families() {
  std::cout <<
      R"(nls families (psi = (A1 h(eta) + A0) e^{i theta(t)}, h' = (p-q)h - p h^2,
s = sqrt(-2 alpha/beta), A1 = sign p s, sign = +1 or -1):
  1  A0 = 0,              omega = -3i alpha (p-q),  theta = lambda - 2 alpha (p-q)^2
  2  A0 = -sign (p-q)s,   omega = +3i alpha (p-q),  theta = lambda - 2 alpha (p-q)^2
  3  A0 = -sign (p-q)s/2, omega = 0,                theta = lambda - alpha (p-q)^2 / 2
  eta = x - int_0^t omega; beta may be given directly or derived as alpha/c.

rlw families (V = A0 + A1 h(zeta) + A2 h(zeta)^2, h' = Lambda h - lambda h^2,
Lambda = lambda - mu, zeta = k x^alpha/Gamma(1+alpha) + int_0^T c):
  lambda constraint        A0
  1  (r - s mu)/s          0
  2  -(r - 6 s mu)/s       0
  3  (r + 4 s mu)/(6 s)    0
  4  (r - s mu)/s          -2 k c s Lambda^2 / q
  5  -(r - 6 s mu)/s       -2 k c s Lambda^2 / q
  6  (r + 4 s mu)/(6 s)    -2 k c s Lambda^2 / q
  A1 = 12 k c s lambda Lambda / q, A2 = -12 k c s lambda^2 / q,
  c = -kp/(1 + k^2 s Lambda^2) for 1-3, c = -kp/(1 - k^2 s Lambda^2) for 4-6.
  Exact solutions require r = 0; the expressions stay defined otherwise.

alpha = 1 specializations (v_t + v_x + v v_x - v_txx = 0, constant mu):
  variants 1, 2, 5 via rlw-alpha1 verify suite or rlw_alpha1_special().
)";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed-form traveling waves for a stochastic NLS equation and a "
               "stochastic fractional RLW-Burgers equation"};
  app.require_subcommand(1);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a configured solution on a grid");
  std::string config_path, csv_override, svg_override;
  int threads = 0;
  eval_cmd->add_option("-c,--config", config_path, "JSON config file")->required();
  eval_cmd->add_option("--csv", csv_override, "override the CSV output path");
  eval_cmd->add_option("--svg", svg_override, "also write an SVG heatmap");
  eval_cmd->add_option("--threads", threads, "worker threads (default: auto)");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite, verify_out;
  verify_cmd
      ->add_option("-s,--suite", suite,
                   "one of nls-ode, nls-pde, rlw-ode, rlw-alpha1, wick, caputo")
      ->required();
  verify_cmd->add_option("-o,--out", verify_out, "write the JSON report here");

  auto* figure_cmd = app.add_subcommand("figure", "reproduce a named figure dataset");
  std::string figure_name, outdir = ".";
  int fig_nx = 0, fig_nt = 0;
  figure_cmd->add_option("name", figure_name, "fig1, fig2, fig3 or fig4")->required();
  figure_cmd->add_option("-d,--outdir", outdir, "output directory (default .)");
  figure_cmd->add_option("--nx", fig_nx, "override grid points in x");
  figure_cmd->add_option("--nt", fig_nt, "override grid points in t");

  auto* noise_cmd = app.add_subcommand("noise-gen", "export a seeded Brownian path");
  std::uint64_t seed = 0;
  double t_end = 25.0, dt = 1e-3;
  std::string noise_out = "noise.csv";
  noise_cmd->add_option("--seed", seed, "path seed")->required();
  noise_cmd->add_option("--t-end", t_end, "path length (default 25)");
  noise_cmd->add_option("--dt", dt, "time step (default 1e-3)");
  noise_cmd->add_option("-o,--out", noise_out, "output CSV (default noise.csv)");

  auto* families_cmd = app.add_subcommand("families", "list the implemented families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (eval_cmd->parsed()) return run_eval(config_path, csv_override, svg_override, threads);
    if (verify_cmd->parsed()) return run_verify(suite, verify_out);
    if (figure_cmd->parsed()) {
      GridSpec2D grid{-10.0, 10.0, 201, 0.0, 20.0, 201};
      const GridSpec2D* override_ptr = nullptr;
      if (fig_nx > 0 || fig_nt > 0) {
        if (fig_nx > 1) grid.nx = static_cast<std::size_t>(fig_nx);
        if (fig_nt > 1) grid.nt = static_cast<std::size_t>(fig_nt);
        override_ptr = &grid;
      }
      for (const std::string& path : run_figure(figure_name, outdir, override_ptr))
        std::cout << "wrote " << path << "\n";
      return 0;
    }
    if (noise_cmd->parsed()) {
      write_noise_csv(seed, t_end, dt, noise_out);
      std::cout << "wrote " << noise_out << "\n";
      return 0;
    }
    if (families_cmd->parsed()) {
      print_families();
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const PoleEncountered& e) {
    std::cerr << "pole encountered: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const DegenerateAnsatz& e) {
    std::cerr << "degenerate ansatz: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return 0;
}
