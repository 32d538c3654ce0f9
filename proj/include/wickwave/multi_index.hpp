#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

namespace wickwave {

// Finitely supported multi-index. Canonical form strips trailing zeros, so
// (1,0,2) stays and (1,0,2,0,0) collapses to it; the empty index is the
// constant term.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<uint32_t> v) : idx_(std::move(v)) { canonicalize(); }

  // e_k with 1-based k, matching the basis numbering.
  static MultiIndex unit(size_t k) {
    std::vector<uint32_t> v(k, 0);
    v[k - 1] = 1;
    return MultiIndex(std::move(v));
  }

  const std::vector<uint32_t>& components() const { return idx_; }

  uint32_t degree() const { return std::accumulate(idx_.begin(), idx_.end(), uint32_t{0}); }

  // Highest referenced basis index (0 for the constant term).
  size_t dimension() const { return idx_.size(); }

  bool is_constant() const { return idx_.empty(); }

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    std::vector<uint32_t> v(std::max(a.idx_.size(), b.idx_.size()), 0);
    for (size_t i = 0; i < a.idx_.size(); ++i) v[i] += a.idx_[i];
    for (size_t i = 0; i < b.idx_.size(); ++i) v[i] += b.idx_[i];
    return MultiIndex(std::move(v));
  }

  auto operator<=>(const MultiIndex&) const = default;

 private:
  void canonicalize() {
    while (!idx_.empty() && idx_.back() == 0) idx_.pop_back();
  }

  std::vector<uint32_t> idx_;
};

}  // namespace wickwave
