#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "wickwave/config.hpp"
#include "wickwave/errors.hpp"
#include "wickwave/expression.hpp"
#include "wickwave/gridrun.hpp"
#include "wickwave/noise.hpp"

#include "reference_values.hpp"

using namespace wickwave;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char ch : text)
    if (ch == '\n') ++n;
  return n;
}

std::filesystem::path scratch_dir(const char* leaf) {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / leaf;
  std::filesystem::create_directories(dir);
  return dir;
}

json valid_rlw_doc() {
  return json{{"equation", "rlw"},
              {"family", 1},
              {"params",
               {{"k", 0.05},
                {"alpha", 0.5},
                {"mu", -3},
                {"p", -0.2},
                {"q", 10},
                {"r", 0},
                {"s", "0.01*cos(0.5*t)"}}},
              {"grid", {{"x0", 0.5}, {"x1", 2.0}, {"nx", 5}, {"t0", 0.0}, {"t1", 1.0}, {"nt", 4}}}};
}

}  // namespace

TEST_CASE("expression grammar evaluates the documented forms") {
  CHECK(parse_time_function("2+3*t")(2.0).real() == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(parse_time_function("sin(pi*t)")(0.5).real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(parse_time_function("cos(\xcf\x80*t)")(1.0).real() ==
        doctest::Approx(-1.0).epsilon(1e-14));
  const Complex v = parse_time_function("i*cos(0.1*t)")(0.0);
  CHECK(v.real() == 0.0);
  CHECK(v.imag() == doctest::Approx(1.0).epsilon(1e-15));
  // exponentiation associates to the right
  CHECK(parse_time_function("2^3^2")(0.0).real() == doctest::Approx(512.0).epsilon(1e-14));
  const Complex root = parse_time_function("(-1)^0.5")(0.0);
  CHECK(std::abs(root - Complex(0.0, 1.0)) < 1e-14);
  CHECK(parse_time_function("exp(1)-2/4")(0.0).real() ==
        doctest::Approx(std::exp(1.0) - 0.5).epsilon(1e-15));
}

TEST_CASE("expression errors carry a byte position") {
  for (const char* bad : {"2+*3", "sin t", "cos(t", "t t", "foo(t)", ""}) {
    try {
      parse_time_function(bad);
      FAIL("no error for: ", bad);
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
  }
}

TEST_CASE("real-valued wrapper rejects complex values at call time") {
  // imaginary part vanishes at t = 0, so parsing succeeds
  const RealFn fn = parse_real_time_function("i*t");
  CHECK(fn(0.0) == 0.0);
  CHECK_THROWS_AS(fn(1.0), DomainError);
  CHECK_THROWS_AS(parse_real_time_function("i+t"), DomainError);
  CHECK(parse_real_time_function("3*t-1")(2.0) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("a complete nls document parses") {
  const json doc = {{"equation", "nls"},
                    {"family", 2},
                    {"sign", -1},
                    {"params",
                     {{"p", -1},
                      {"q", 0.2},
                      {"alpha", "-1.5*i*cos(0.2*t)"},
                      {"lambda", "i*cos(0.2*t)"},
                      {"c", -0.01}}},
                    {"noise", {{"type", "deterministic"}, {"expr", "i*cos(0.1*t)"}}},
                    {"grid", {{"x0", -2.0}, {"x1", 2.0}, {"nx", 11}, {"t1", 5.0}, {"nt", 6}}},
                    {"output", {{"csv", "psi.csv"}, {"svg", "psi.svg"}}}};
  const RunConfig cfg = parse_config(doc);
  CHECK(cfg.equation == "nls");
  CHECK(cfg.family == 2);
  CHECK(cfg.sign == -1);
  CHECK(cfg.nls.p(0.0) == -1.0);
  CHECK(cfg.nls.q(3.0) == 0.2);
  REQUIRE(cfg.nls.c.has_value());
  CHECK(*cfg.nls.c == -0.01);
  CHECK(std::abs(cfg.nls.alpha(0.0) - Complex(0.0, -1.5)) < 1e-15);
  // effective alpha folds the noise in
  CHECK(std::abs(cfg.nls.alpha_eff(0.0) - Complex(0.0, -0.5)) < 1e-15);
  CHECK(cfg.grid.nx == 11);
  CHECK(cfg.grid.nt == 6);
  CHECK(cfg.grid.t0 == 0.0);
  CHECK(cfg.csv_path == "psi.csv");
  CHECK(cfg.svg_path == "psi.svg");
}

TEST_CASE("a complete rlw document parses and weights route the noise") {
  json doc = valid_rlw_doc();
  doc["noise"] = {{"type", "deterministic"}, {"expr", "sin(0.5*t)"}};
  doc["noise_weights"] = {{"c1", 1.0}, {"c2", 1.0}, {"c3", 0.0}, {"c4", 1.0}};
  const RunConfig cfg = parse_config(doc);
  CHECK(cfg.rlw.k == 0.05);
  CHECK(cfg.rlw.alpha == 0.5);
  CHECK(cfg.rlw.family == 1);
  const double t = 3.14159;
  const double w = std::sin(0.5 * t);
  CHECK(cfg.rlw.p(t) == doctest::Approx(-0.2 + w).epsilon(1e-15));
  CHECK(cfg.rlw.q(t) == doctest::Approx(10.0 + w).epsilon(1e-15));
  CHECK(cfg.rlw.r(t) == 0.0);  // weight zero keeps r clean
  CHECK(cfg.rlw.s(t) == doctest::Approx(0.01 * std::cos(0.5 * t) + w).epsilon(1e-13));
  CHECK(cfg.rlw.mu(t) == -3.0);  // mu never sees the noise
}

TEST_CASE("document validation failures name the offending key") {
  json doc = valid_rlw_doc();

  json missing = doc;
  missing["params"].erase("k");
  CHECK_THROWS_AS(parse_config(missing), ConfigError);

  json unknown_top = doc;
  unknown_top["extra"] = 1;
  CHECK_THROWS_AS(parse_config(unknown_top), ConfigError);

  json unknown_param = doc;
  unknown_param["params"]["beta"] = 1;
  CHECK_THROWS_AS(parse_config(unknown_param), ConfigError);

  json bad_grid = doc;
  bad_grid["grid"]["nx"] = 1;
  CHECK_THROWS_AS(parse_config(bad_grid), ConfigError);

  json negative_grid = doc;
  negative_grid["grid"]["nx"] = -5;
  CHECK_THROWS_AS(parse_config(negative_grid), ConfigError);

  json bad_family = doc;
  bad_family["family"] = 7;
  CHECK_THROWS_AS(parse_config(bad_family), ConfigError);

  json bad_noise = doc;
  bad_noise["noise"] = {{"type", "brownian"}};  // seed required
  CHECK_THROWS_AS(parse_config(bad_noise), ConfigError);

  json unknown_noise = doc;
  unknown_noise["noise"] = {{"type", "zero"}, {"scale", 2}};
  CHECK_THROWS_AS(parse_config(unknown_noise), ConfigError);

  const json nls_weights = {{"equation", "nls"},
                            {"family", 1},
                            {"params",
                             {{"p", 2}, {"q", 1}, {"alpha", 1}, {"lambda", 0}, {"beta", -2}}},
                            {"noise_weights", {{"c1", 1.0}}}};
  CHECK_THROWS_AS(parse_config(nls_weights), ConfigError);

  const json both = {{"equation", "nls"},
                     {"family", 1},
                     {"params",
                      {{"p", 2}, {"q", 1}, {"alpha", 1}, {"lambda", 0}, {"beta", -2}, {"c", 1}}}};
  CHECK_THROWS_AS(parse_config(both), ConfigError);
}

TEST_CASE("config files parse and malformed JSON becomes a config error") {
  const auto dir = scratch_dir("wickwave_cfg");
  const auto good = dir / "good.json";
  {
    std::ofstream out(good);
    out << valid_rlw_doc().dump(2);
  }
  const RunConfig cfg = parse_config_file(good.string());
  CHECK(cfg.equation == "rlw");

  const auto bad = dir / "bad.json";
  {
    std::ofstream out(bad);
    out << "{not json";
  }
  CHECK_THROWS_AS(parse_config_file(bad.string()), ConfigError);
  CHECK_THROWS_AS(parse_config_file((dir / "absent.json").string()), ConfigError);
}

TEST_CASE("grid evaluation turns poles into counted NaN cells") {
  // family 3 has zero transport speed, so eta = x; p=2, q=1 puts the pole
  // at x = -ln 2, which the middle grid node hits exactly
  const double pole = -std::log(2.0);
  json doc = {{"equation", "nls"},
              {"family", 3},
              {"params", {{"p", 2}, {"q", 1}, {"alpha", 1}, {"lambda", 0}, {"beta", -2}}},
              {"grid",
               {{"x0", pole - 1.0},
                {"x1", pole + 1.0},
                {"nx", 3},
                {"t0", 0.0},
                {"t1", 1.0},
                {"nt", 5}}}};
  const RunConfig cfg = parse_config(doc);
  const GridResult res = evaluate_grid(cfg);
  CHECK(res.complex_valued);
  CHECK(res.total_points() == 15);
  CHECK(res.excluded_points == 5);
  for (std::size_t it = 0; it < 5; ++it) {
    CHECK(std::isnan(res.values[it * 3 + 1].real()));
    CHECK(std::isfinite(res.values[it * 3 + 0].real()));
    CHECK(std::isfinite(res.values[it * 3 + 2].real()));
  }
}

TEST_CASE("csv output is byte-stable with the documented header") {
  json doc = valid_rlw_doc();
  const RunConfig cfg = parse_config(doc);
  const GridResult res = evaluate_grid(cfg);
  const auto dir = scratch_dir("wickwave_csv");
  const auto a = dir / "a.csv";
  const auto b = dir / "b.csv";
  write_csv(res, a.string());
  write_csv(res, b.string());
  const std::string bytes_a = slurp(a.string());
  CHECK(bytes_a == slurp(b.string()));
  CHECK(bytes_a.rfind("x,t,value\n", 0) == 0);
  CHECK(count_lines(bytes_a) == cfg.grid.nx * cfg.grid.nt + 1);
  CHECK(bytes_a.find('\r') == std::string::npos);

  // complex fields switch to the five-column header
  json cdoc = {{"equation", "nls"},
               {"family", 1},
               {"params", {{"p", 2}, {"q", 1}, {"alpha", 1}, {"lambda", 0}, {"beta", -2}}},
               {"grid", {{"x0", 1.0}, {"x1", 2.0}, {"nx", 3}, {"t1", 1.0}, {"nt", 2}}}};
  const GridResult cres = evaluate_grid(parse_config(cdoc));
  const auto c = dir / "c.csv";
  write_csv(cres, c.string());
  CHECK(slurp(c.string()).rfind("x,t,re,im,abs\n", 0) == 0);

  const auto svg = dir / "a.svg";
  write_svg_heatmap(res, svg.string());
  const std::string svg_bytes = slurp(svg.string());
  CHECK(svg_bytes.find("<svg") != std::string::npos);
  CHECK(svg_bytes.find("<rect") != std::string::npos);
}

TEST_CASE("noise table starts at the origin and matches the seeded path") {
  const auto dir = scratch_dir("wickwave_noise");
  const auto path = dir / "noise.csv";
  write_noise_csv(42u, 0.01, 1e-3, path.string());
  const std::string bytes = slurp(path.string());
  CHECK(bytes.rfind("t,B\n0,0\n", 0) == 0);
  CHECK(count_lines(bytes) == 12);  // header + 11 samples

  // third line holds B(dt) = g0 sqrt(dt)
  std::istringstream in(bytes);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  std::getline(in, line);
  const auto comma = line.find(',');
  REQUIRE(comma != std::string::npos);
  const double b1 = std::stod(line.substr(comma + 1));
  CHECK(b1 == doctest::Approx(refvals::gauss_seed42_g0 * std::sqrt(1e-3)).epsilon(1e-14));
}

TEST_CASE("figure presets write one file per panel") {
  const auto dir = scratch_dir("wickwave_fig");
  const GridSpec2D tiny{-2.0, 2.0, 9, 0.0, 1.0, 7};
  const auto files = run_figure("fig1", dir.string(), &tiny);
  REQUIRE(files.size() == 2);
  for (const auto& f : files) {
    const std::string bytes = slurp(f);
    CHECK(bytes.rfind("x,t,re,im,abs\n", 0) == 0);
    CHECK(count_lines(bytes) == 9 * 7 + 1);
  }
  CHECK(files[0].find("fig1a.csv") != std::string::npos);
  CHECK(files[1].find("fig1b.csv") != std::string::npos);
  CHECK_THROWS_AS(run_figure("fig9", dir.string(), &tiny), ConfigError);
}
