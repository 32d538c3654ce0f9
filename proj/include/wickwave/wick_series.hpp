#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "wickwave/multi_index.hpp"
#include "wickwave/time_function.hpp"

namespace wickwave {

struct Trunc {
  int k = 4;     // number of chaos variables
  int dmax = 6;  // maximum total degree kept
  bool operator==(const Trunc&) const = default;
};

// Truncated formal chaos expansion sum_alpha a_alpha H_alpha with complex
// coefficients. Immutable after construction; construction canonicalizes
// (prunes coefficients below 1e-14, drops terms past the truncation and
// records that loss in truncated()).
class WickSeries {
 public:
  using TermMap = std::map<MultiIndex, std::complex<double>>;

  WickSeries(Trunc trunc, TermMap terms, bool truncated = false);

  static WickSeries zero(Trunc trunc) { return WickSeries(trunc, {}); }
  static WickSeries unit(Trunc trunc) {
    return WickSeries(trunc, {{MultiIndex{}, std::complex<double>(1.0)}});
  }

  const Trunc& trunc() const { return trunc_; }
  const TermMap& terms() const { return terms_; }
  bool truncated() const { return truncated_; }
  bool is_zero() const { return terms_.empty(); }

  std::complex<double> coeff(const MultiIndex& idx) const;

  // Smallest total degree among stored terms; -1 for the zero series.
  int min_degree() const;
  int max_degree() const;

  friend WickSeries operator+(const WickSeries& a, const WickSeries& b);
  friend WickSeries operator-(const WickSeries& a, const WickSeries& b);
  friend WickSeries operator*(std::complex<double> scalar, const WickSeries& a);

 private:
  Trunc trunc_;
  TermMap terms_;
  bool truncated_ = false;
};

WickSeries wick_product(const WickSeries& f, const WickSeries& g);
WickSeries wick_power(const WickSeries& f, int n);

// exp with the constant term split off and exponentiated as a scalar, so the
// remaining Taylor sum terminates exactly within the truncation (every term
// of f - a0 has degree >= 1).
WickSeries wick_exp(const WickSeries& f);

std::complex<double> hermite_transform(const WickSeries& f, const std::vector<std::complex<double>>& z);

// Degree-1 series with coefficient of e_k equal to the integral of the k-th
// normalized Hermite function over [0, t].
WickSeries white_noise_series(double t, int k_vars, int dmax = 6);

// Normalized Hermite function (1-based k), orthonormal on the real line.
double hermite_basis_fn(int k, double s);

std::string wick_to_json(const WickSeries& f);
WickSeries wick_from_json(const std::string& text);

// Deterministic time function t -> H(white_noise_series(t, k_vars))(z): the
// smooth drift a fixed chaos point z sees, usable wherever a noise term is.
TimeFn chaos_drift(int k_vars, std::vector<std::complex<double>> z);

}  // namespace wickwave
