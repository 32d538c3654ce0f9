#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wickwave/errors.hpp"
#include "wickwave/time_function.hpp"

namespace wickwave {

struct GridSpec1D {
  double a = 0.0, b = 1.0;
  std::size_t n = 101;  // number of nodes, endpoints included
  double step() const { return n > 1 ? (b - a) / static_cast<double>(n - 1) : 0.0; }
  double node(std::size_t i) const { return a + step() * static_cast<double>(i); }
};

struct GridSpec2D {
  double x0 = 0.0, x1 = 1.0;
  std::size_t nx = 101;
  double t0 = 0.0, t1 = 1.0;
  std::size_t nt = 101;
  double hx() const { return nx > 1 ? (x1 - x0) / static_cast<double>(nx - 1) : 0.0; }
  double ht() const { return nt > 1 ? (t1 - t0) / static_cast<double>(nt - 1) : 0.0; }
  double x_at(std::size_t i) const { return x0 + hx() * static_cast<double>(i); }
  double t_at(std::size_t j) const { return t0 + ht() * static_cast<double>(j); }
};

// Dense complex samples on a 2D grid, t varying slowest.
struct Field2D {
  std::size_t nx = 0, nt = 0;
  double hx = 0.0, ht = 0.0;
  std::vector<Complex> data;

  Field2D() = default;
  Field2D(std::size_t nx_, std::size_t nt_, double hx_, double ht_)
      : nx(nx_), nt(nt_), hx(hx_), ht(ht_), data(nx_ * nt_) {}
  Complex& at(std::size_t ix, std::size_t it) { return data[it * nx + ix]; }
  const Complex& at(std::size_t ix, std::size_t it) const { return data[it * nx + ix]; }
};

struct ResidualReport {
  std::string grid_desc;
  double sup_norm = 0.0;
  double l2_norm = 0.0;
  std::size_t excluded_points = 0;
  std::size_t total_points = 0;
  double rounding_floor = 0.0;
  std::optional<double> convergence_order;
  bool order_saturated = false;
  std::vector<std::pair<std::string, double>> variants;

  std::string to_json() const;
};

// Central finite differences; entries too close to the boundary for the
// stencil come back as NaN.
std::vector<double> fd_derivative(const std::vector<double>& f, double h, int order,
                                  int accuracy = 2);
std::vector<Complex> fd_derivative(const std::vector<Complex>& f, double h, int order,
                                   int accuracy = 2);
// axis 0 differentiates in x, axis 1 in t.
Field2D fd_derivative(const Field2D& f, int axis, int order, int accuracy = 2);

int fd_halfwidth(int order, int accuracy);

struct OrderFit {
  double order = 0.0;
  bool saturated = false;
};

// Least-squares slope of log(norm) against log(h); h must decrease strictly.
OrderFit convergence_order(const std::vector<std::pair<double, double>>& h_and_norm);

// Magnitude below which a residual is indistinguishable from rounding noise.
double rounding_floor(double max_term_magnitude);

}  // namespace wickwave
