#include "wickwave/verify.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

namespace wickwave {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Stencil {
  int halfwidth;
  // offsets[k] multiplies f[i - halfwidth + k]; divide by h^order * scale.
  std::vector<double> weights;
  double scale;
};

Stencil stencil_for(int order, int accuracy) {
  if (accuracy != 2 && accuracy != 4)
    throw DomainError("fd_derivative: accuracy must be 2 or 4");
  switch (order) {
    case 1:
      if (accuracy == 2) return {1, {-1.0, 0.0, 1.0}, 2.0};
      return {2, {1.0, -8.0, 0.0, 8.0, -1.0}, 12.0};
    case 2:
      if (accuracy == 2) return {1, {1.0, -2.0, 1.0}, 1.0};
      return {2, {-1.0, 16.0, -30.0, 16.0, -1.0}, 12.0};
    case 3:
      if (accuracy == 2) return {2, {-1.0, 2.0, 0.0, -2.0, 1.0}, 2.0};
      return {3, {1.0, -8.0, 13.0, 0.0, -13.0, 8.0, -1.0}, 8.0};
    default:
      throw DomainError("fd_derivative: order must be 1, 2 or 3");
  }
}

template <typename T>
std::vector<T> fd_1d(const std::vector<T>& f, double h, int order, int accuracy) {
  if (!(h > 0.0)) throw DomainError("fd_derivative: step must be positive");
  const Stencil st = stencil_for(order, accuracy);
  const auto w = static_cast<std::size_t>(st.halfwidth);
  if (f.size() < 2 * w + 1)
    throw DomainError("fd_derivative: grid too small for the requested stencil");
  const double denom = st.scale * std::pow(h, order);
  std::vector<T> out(f.size(), T{} + kNaN);
  for (std::size_t i = w; i + w < f.size(); ++i) {
    T acc{};
    for (std::size_t k = 0; k < st.weights.size(); ++k)
      acc += st.weights[k] * f[i - w + k];
    out[i] = acc / denom;
  }
  return out;
}

}  // namespace

int fd_halfwidth(int order, int accuracy) { return stencil_for(order, accuracy).halfwidth; }

std::vector<double> fd_derivative(const std::vector<double>& f, double h, int order,
                                  int accuracy) {
  return fd_1d(f, h, order, accuracy);
}

std::vector<Complex> fd_derivative(const std::vector<Complex>& f, double h, int order,
                                   int accuracy) {
  return fd_1d(f, h, order, accuracy);
}

Field2D fd_derivative(const Field2D& f, int axis, int order, int accuracy) {
  if (axis != 0 && axis != 1) throw DomainError("fd_derivative: axis must be 0 or 1");
  Field2D out(f.nx, f.nt, f.hx, f.ht);
  if (axis == 0) {
    std::vector<Complex> line(f.nx);
    for (std::size_t it = 0; it < f.nt; ++it) {
      for (std::size_t ix = 0; ix < f.nx; ++ix) line[ix] = f.at(ix, it);
      const auto d = fd_1d(line, f.hx, order, accuracy);
      for (std::size_t ix = 0; ix < f.nx; ++ix) out.at(ix, it) = d[ix];
    }
  } else {
    std::vector<Complex> line(f.nt);
    for (std::size_t ix = 0; ix < f.nx; ++ix) {
      for (std::size_t it = 0; it < f.nt; ++it) line[it] = f.at(ix, it);
      const auto d = fd_1d(line, f.ht, order, accuracy);
      for (std::size_t it = 0; it < f.nt; ++it) out.at(ix, it) = d[it];
    }
  }
  return out;
}

OrderFit convergence_order(const std::vector<std::pair<double, double>>& h_and_norm) {
  if (h_and_norm.size() < 2)
    throw DomainError("convergence_order: need at least two (h, norm) pairs");
  for (std::size_t i = 1; i < h_and_norm.size(); ++i)
    if (!(h_and_norm[i].first < h_and_norm[i - 1].first))
      throw DomainError("convergence_order: h must decrease strictly");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto n = static_cast<double>(h_and_norm.size());
  for (const auto& [h, norm] : h_and_norm) {
    const double x = std::log(h);
    const double y = std::log(std::max(norm, 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  OrderFit fit;
  fit.order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.saturated = fit.order < 0.5;
  return fit;
}

double rounding_floor(double max_term_magnitude) {
  return 1e3 * std::numeric_limits<double>::epsilon() * max_term_magnitude;
}

std::string ResidualReport::to_json() const {
  nlohmann::json j;
  j["grid"] = grid_desc;
  j["sup_norm"] = sup_norm;
  j["l2_norm"] = l2_norm;
  j["excluded_points"] = excluded_points;
  j["total_points"] = total_points;
  j["rounding_floor"] = rounding_floor;
  if (convergence_order) {
    j["convergence_order"] = *convergence_order;
    j["order_saturated"] = order_saturated;
  }
  if (!variants.empty()) {
    nlohmann::json v = nlohmann::json::object();
    for (const auto& [name, value] : variants) v[name] = value;
    j["variants"] = v;
  }
  return j.dump(2);
}

}  // namespace wickwave
