#include "wickwave/wick_series.hpp"

#include <json.hpp>

#include <cmath>
#include <utility>

#include "wickwave/errors.hpp"
#include "wickwave/quadrature.hpp"

namespace wickwave {

namespace {
constexpr double kPruneTol = 1e-14;
constexpr double kPi = 3.141592653589793238462643383279502884;
}  // namespace

WickSeries::WickSeries(Trunc trunc, TermMap terms, bool truncated)
    : trunc_(trunc), truncated_(truncated) {
  if (trunc.k < 1 || trunc.dmax < 0) throw ConfigError("invalid truncation parameters");
  for (auto& [idx, a] : terms) {
    if (std::abs(a) < kPruneTol) continue;
    if (idx.dimension() > static_cast<size_t>(trunc.k))
      throw DimensionError("multi-index refers past the last chaos variable");
    if (idx.degree() > static_cast<uint32_t>(trunc.dmax)) {
      truncated_ = true;
      continue;
    }
    terms_.emplace(idx, a);
  }
}

std::complex<double> WickSeries::coeff(const MultiIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? std::complex<double>(0.0) : it->second;
}

int WickSeries::min_degree() const {
  int m = -1;
  for (const auto& [idx, a] : terms_) {
    int d = static_cast<int>(idx.degree());
    if (m < 0 || d < m) m = d;
  }
  return m;
}

int WickSeries::max_degree() const {
  int m = -1;
  for (const auto& [idx, a] : terms_) m = std::max(m, static_cast<int>(idx.degree()));
  return m;
}

WickSeries operator+(const WickSeries& a, const WickSeries& b) {
  if (!(a.trunc_ == b.trunc_)) throw ConfigError("truncation parameters differ");
  WickSeries::TermMap sum = a.terms_;
  for (const auto& [idx, v] : b.terms_) sum[idx] += v;
  return WickSeries(a.trunc_, std::move(sum), a.truncated_ || b.truncated_);
}

WickSeries operator-(const WickSeries& a, const WickSeries& b) {
  return a + (std::complex<double>(-1.0) * b);
}

WickSeries operator*(std::complex<double> scalar, const WickSeries& a) {
  WickSeries::TermMap scaled = a.terms_;
  for (auto& [idx, v] : scaled) v *= scalar;
  return WickSeries(a.trunc_, std::move(scaled), a.truncated_);
}

WickSeries wick_product(const WickSeries& f, const WickSeries& g) {
  if (!(f.trunc() == g.trunc())) throw ConfigError("truncation parameters differ");
  const int dmax = f.trunc().dmax;
  WickSeries::TermMap prod;
  bool lost = f.truncated() || g.truncated();
  for (const auto& [ia, a] : f.terms()) {
    const int da = static_cast<int>(ia.degree());
    for (const auto& [ib, b] : g.terms()) {
      if (da + static_cast<int>(ib.degree()) > dmax) {
        lost = true;
        continue;
      }
      prod[ia + ib] += a * b;
    }
  }
  return WickSeries(f.trunc(), std::move(prod), lost);
}

WickSeries wick_power(const WickSeries& f, int n) {
  if (n < 0) throw DomainError("negative Wick power");
  WickSeries acc = WickSeries::unit(f.trunc());
  for (int i = 0; i < n; ++i) acc = wick_product(acc, f);
  return acc;
}

WickSeries wick_exp(const WickSeries& f) {
  const std::complex<double> a0 = f.coeff(MultiIndex{});
  WickSeries rest = f - a0 * WickSeries::unit(f.trunc());
  WickSeries sum = WickSeries::unit(f.trunc());
  WickSeries term = WickSeries::unit(f.trunc());
  // every term of `rest` has degree >= 1, so powers past dmax vanish
  for (int n = 1; n <= f.trunc().dmax; ++n) {
    term = wick_product(term, rest);
    if (term.is_zero() && !term.truncated()) break;
    sum = sum + (std::complex<double>(1.0 / std::tgamma(n + 1.0)) * term);
  }
  return std::exp(a0) * sum;
}

std::complex<double> hermite_transform(const WickSeries& f,
                                       const std::vector<std::complex<double>>& z) {
  if (z.size() < static_cast<size_t>(f.trunc().k))
    throw DimensionError("evaluation point has fewer entries than the truncation dimension");
  std::complex<double> acc(0.0);
  for (const auto& [idx, a] : f.terms()) {
    std::complex<double> mono(1.0);
    const auto& comps = idx.components();
    for (size_t i = 0; i < comps.size(); ++i)
      for (uint32_t rep = 0; rep < comps[i]; ++rep) mono *= z[i];
    acc += a * mono;
  }
  return acc;
}

double hermite_basis_fn(int k, double s) {
  if (k < 1) throw DomainError("basis index must be >= 1");
  // physicists' Hermite polynomials by recurrence
  double h0 = 1.0, h1 = 2.0 * s;
  double h = (k - 1 == 0) ? h0 : h1;
  for (int n = 1; n < k - 1; ++n) {
    double hn = 2.0 * s * h1 - 2.0 * n * h0;
    h0 = h1;
    h1 = hn;
    h = hn;
  }
  double log_norm = 0.25 * std::log(kPi) + 0.5 * (k - 1) * std::log(2.0) +
                    0.5 * std::lgamma(static_cast<double>(k));
  return std::exp(-0.5 * s * s - log_norm) * h;
}

WickSeries white_noise_series(double t, int k_vars, int dmax) {
  if (t < 0.0) throw DomainError("time must be nonnegative");
  if (k_vars < 1) throw DomainError("need at least one chaos variable");
  WickSeries::TermMap terms;
  for (int k = 1; k <= k_vars; ++k) {
    if (t == 0.0) break;
    double v = integrate_real([k](double s) { return hermite_basis_fn(k, s); }, 0.0, t, 1e-12);
    terms[MultiIndex::unit(k)] = v;
  }
  return WickSeries(Trunc{k_vars, dmax}, std::move(terms));
}

std::string wick_to_json(const WickSeries& f) {
  nlohmann::json j;
  j["trunc"] = {{"k", f.trunc().k}, {"dmax", f.trunc().dmax}};
  j["terms"] = nlohmann::json::array();
  for (const auto& [idx, a] : f.terms()) {
    nlohmann::json term;
    term["idx"] = idx.components();
    term["re"] = a.real();
    term["im"] = a.imag();
    j["terms"].push_back(std::move(term));
  }
  return j.dump();
}

WickSeries wick_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad series JSON: ") + e.what());
  }
  try {
    Trunc tr{j.at("trunc").at("k").get<int>(), j.at("trunc").at("dmax").get<int>()};
    WickSeries::TermMap terms;
    for (const auto& term : j.at("terms")) {
      MultiIndex idx(term.at("idx").get<std::vector<uint32_t>>());
      terms[idx] += std::complex<double>(term.at("re").get<double>(), term.at("im").get<double>());
    }
    return WickSeries(tr, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad series JSON: ") + e.what());
  }
}

TimeFn chaos_drift(int k_vars, std::vector<std::complex<double>> z) {
  if (k_vars < 1) throw DimensionError("chaos_drift: need at least one chaos variable");
  if (z.size() < static_cast<std::size_t>(k_vars))
    throw DimensionError("chaos_drift: evaluation point has too few components");
  return [k_vars, z = std::move(z)](double t) {
    return hermite_transform(white_noise_series(t, k_vars), z);
  };
}

}  // namespace wickwave
