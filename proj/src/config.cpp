#include "wickwave/config.hpp"

#include <cstdint>
#include <fstream>
#include <set>
#include <string>

#include "wickwave/errors.hpp"
#include "wickwave/expression.hpp"
#include "wickwave/noise.hpp"

namespace wickwave {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError("config: " + msg); }

const json& member(const json& j, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) fail("missing field '" + key + "'");
  return *it;
}

double number_field(const json& j, const std::string& key) {
  const json& v = member(j, key);
  if (!v.is_number()) fail("field '" + key + "' must be a number");
  return v.get<double>();
}

double number_or(const json& j, const std::string& key, double dflt) {
  auto it = j.find(key);
  if (it == j.end()) return dflt;
  if (!it->is_number()) fail("field '" + key + "' must be a number");
  return it->get<double>();
}

int int_field(const json& j, const std::string& key, int dflt) {
  auto it = j.find(key);
  if (it == j.end()) return dflt;
  if (!it->is_number_integer()) fail("field '" + key + "' must be an integer");
  return it->get<int>();
}

std::string string_field(const json& j, const std::string& key) {
  const json& v = member(j, key);
  if (!v.is_string()) fail("field '" + key + "' must be a string");
  return v.get<std::string>();
}

std::uint64_t seed_field(const json& j, const std::string& key) {
  const json& v = member(j, key);
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() &&
                                 v.get<std::int64_t>() < 0))
    fail("field '" + key + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

// A coefficient entry is either a numeric constant or an expression string.
TimeFn fn_field(const json& j, const std::string& key) {
  const json& v = member(j, key);
  if (v.is_number()) return constant(Complex(v.get<double>(), 0.0));
  if (v.is_string()) {
    try {
      return parse_time_function(v.get<std::string>());
    } catch (const ConfigError& e) {
      fail("field '" + key + "': " + e.what());
    }
  }
  fail("field '" + key + "' must be a number or an expression string");
}

RealFn real_fn_field(const json& j, const std::string& key) {
  const json& v = member(j, key);
  if (v.is_number()) {
    const double x = v.get<double>();
    return [x](double) { return x; };
  }
  if (v.is_string()) {
    try {
      return parse_real_time_function(v.get<std::string>());
    } catch (const ConfigError& e) {
      fail("field '" + key + "': " + e.what());
    } catch (const DomainError& e) {
      fail("field '" + key + "': " + e.what());
    }
  }
  fail("field '" + key + "' must be a number or an expression string");
}

void reject_unknown(const json& j, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) fail("unknown field '" + where + it.key() + "'");
  }
}

NoiseModel noise_from(const json& doc) {
  auto it = doc.find("noise");
  if (it == doc.end()) return NoiseModel::zero();
  const json& n = *it;
  if (!n.is_object()) fail("field 'noise' must be an object");
  reject_unknown(n, {"type", "expr", "seed", "dt", "smoothing", "horizon"}, "noise.");
  const std::string type = string_field(n, "type");
  if (type == "zero") return NoiseModel::zero();
  if (type == "deterministic") return NoiseModel::deterministic(fn_field(n, "expr"));
  if (type == "brownian") {
    const std::uint64_t seed = seed_field(n, "seed");
    const double dt = number_or(n, "dt", 1e-3);
    const double smoothing = number_or(n, "smoothing", -1.0);
    const double horizon = number_or(n, "horizon", 25.0);
    return NoiseModel::brownian(seed, dt, smoothing, horizon);
  }
  fail("noise type must be 'zero', 'deterministic' or 'brownian'");
}

void grid_from(const json& doc, GridSpec2D* grid) {
  auto it = doc.find("grid");
  if (it == doc.end()) return;
  const json& g = *it;
  if (!g.is_object()) fail("field 'grid' must be an object");
  reject_unknown(g, {"x0", "x1", "nx", "t0", "t1", "nt"}, "grid.");
  grid->x0 = number_or(g, "x0", grid->x0);
  grid->x1 = number_or(g, "x1", grid->x1);
  grid->t0 = number_or(g, "t0", grid->t0);
  grid->t1 = number_or(g, "t1", grid->t1);
  const int nx = int_field(g, "nx", static_cast<int>(grid->nx));
  const int nt = int_field(g, "nt", static_cast<int>(grid->nt));
  if (!(grid->x1 > grid->x0)) fail("grid needs x1 > x0");
  if (!(grid->t1 > grid->t0)) fail("grid needs t1 > t0");
  if (nx < 2 || nt < 2) fail("grid needs nx >= 2 and nt >= 2");
  grid->nx = static_cast<std::size_t>(nx);
  grid->nt = static_cast<std::size_t>(nt);
}

void nls_from(const json& params, const NoiseModel& noise, RunConfig* cfg) {
  reject_unknown(params, {"p", "q", "alpha", "lambda", "beta", "c"}, "params.");
  cfg->nls.p = real_fn_field(params, "p");
  cfg->nls.q = real_fn_field(params, "q");
  cfg->nls.alpha = fn_field(params, "alpha");
  cfg->nls.lambda = fn_field(params, "lambda");
  const bool has_beta = params.contains("beta");
  const bool has_c = params.contains("c");
  if (has_beta == has_c) fail("params must provide exactly one of 'beta' and 'c'");
  if (has_c) {
    const double c = number_field(params, "c");
    if (c == 0.0) fail("field 'params.c' must be nonzero");
    cfg->nls.c = c;
  } else {
    cfg->nls.beta = fn_field(params, "beta");
  }
  cfg->nls.noise = noise;
  if (cfg->family < 1 || cfg->family > 3) fail("nls family must be 1, 2 or 3");
  if (cfg->sign != 1 && cfg->sign != -1) fail("sign must be +1 or -1");
}

void rlw_from(const json& doc, const json& params, const NoiseModel& noise,
              RunConfig* cfg) {
  reject_unknown(params, {"k", "alpha", "mu", "p", "q", "r", "s"}, "params.");
  cfg->rlw.k = number_field(params, "k");
  cfg->rlw.alpha = number_or(params, "alpha", 1.0);
  cfg->rlw.family = cfg->family;
  cfg->rlw.mu = real_fn_field(params, "mu");
  RealFn p = real_fn_field(params, "p");
  RealFn q = real_fn_field(params, "q");
  RealFn r = real_fn_field(params, "r");
  RealFn s = real_fn_field(params, "s");
  double w[4] = {1.0, 1.0, 1.0, 1.0};
  if (doc.contains("noise_weights")) {
    const json& nw = doc["noise_weights"];
    if (!nw.is_object()) fail("field 'noise_weights' must be an object");
    reject_unknown(nw, {"c1", "c2", "c3", "c4"}, "noise_weights.");
    w[0] = number_or(nw, "c1", 1.0);
    w[1] = number_or(nw, "c2", 1.0);
    w[2] = number_or(nw, "c3", 1.0);
    w[3] = number_or(nw, "c4", 1.0);
  }
  if (noise.kind() != NoiseModel::Kind::Zero) {
    p = with_noise_real(p, w[0], noise);
    q = with_noise_real(q, w[1], noise);
    r = with_noise_real(r, w[2], noise);
    s = with_noise_real(s, w[3], noise);
  }
  cfg->rlw.p = std::move(p);
  cfg->rlw.q = std::move(q);
  cfg->rlw.r = std::move(r);
  cfg->rlw.s = std::move(s);
  if (cfg->family < 1 || cfg->family > 6) fail("rlw family must be in 1..6");
}

}  // namespace

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) fail("top-level document must be an object");
  reject_unknown(doc,
                 {"equation", "family", "sign", "params", "noise", "noise_weights",
                  "grid", "output"},
                 "");
  RunConfig cfg;
  cfg.equation = string_field(doc, "equation");
  if (cfg.equation != "nls" && cfg.equation != "rlw")
    fail("equation must be 'nls' or 'rlw'");
  cfg.family = int_field(doc, "family", 1);
  cfg.sign = int_field(doc, "sign", +1);
  const json& params = member(doc, "params");
  if (!params.is_object()) fail("field 'params' must be an object");
  const NoiseModel noise = noise_from(doc);
  if (cfg.equation == "nls") {
    if (doc.contains("noise_weights"))
      fail("field 'noise_weights' only applies to rlw configs");
    nls_from(params, noise, &cfg);
  } else {
    rlw_from(doc, params, noise, &cfg);
  }
  grid_from(doc, &cfg.grid);
  if (doc.contains("output")) {
    const json& o = doc["output"];
    if (!o.is_object()) fail("field 'output' must be an object");
    reject_unknown(o, {"csv", "svg"}, "output.");
    if (o.contains("csv")) cfg.csv_path = string_field(o, "csv");
    if (o.contains("svg")) cfg.svg_path = string_field(o, "svg");
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail("invalid JSON in '" + path + "': " + e.what());
  }
  return parse_config(doc);
}

}  // namespace wickwave
