#ifndef INTAPPROX_INTERVAL_FUNCTION_HPP
#define INTAPPROX_INTERVAL_FUNCTION_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "intapprox/errors.hpp"
#include "intapprox/interval.hpp"
#include "intapprox/interval_poset.hpp"

namespace intapprox {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("interval function value overflow");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("interval function value overflow");
  return out;
}

inline std::int64_t checked_abs(std::int64_t a) {
  if (a == INT64_MIN) throw std::overflow_error("interval function value overflow");
  return a < 0 ? -a : a;
}

}  // namespace detail

/// An integer on every interval of one grid, stored in canonical order.
class IntervalFunction {
 public:
  IntervalFunction() : IntervalFunction(Grid{}) {}
  explicit IntervalFunction(Grid g) : IntervalFunction(IntervalCatalog::shared(g.m, g.n)) {}
  explicit IntervalFunction(std::shared_ptr<const IntervalCatalog> catalog)
      : catalog_(std::move(catalog)), values_(catalog_->size(), 0) {}

  const Grid& grid() const noexcept { return catalog_->grid(); }
  const IntervalCatalog& catalog() const noexcept { return *catalog_; }
  const std::shared_ptr<const IntervalCatalog>& catalog_ptr() const noexcept { return catalog_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::int64_t operator[](const Interval& iv) const { return values_[catalog_->index_of(iv)]; }
  std::int64_t& operator[](const Interval& iv) { return values_[catalog_->index_of(iv)]; }

  std::int64_t at_index(std::size_t k) const { return values_.at(k); }
  std::int64_t& at_index(std::size_t k) { return values_.at(k); }
  const std::vector<std::int64_t>& values() const noexcept { return values_; }

  bool is_zero() const noexcept {
    for (std::int64_t v : values_) {
      if (v != 0) return false;
    }
    return true;
  }

  IntervalFunction& operator+=(const IntervalFunction& other) {
    require_same_grid(other);
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] = detail::checked_add(values_[k], other.values_[k]);
    return *this;
  }
  IntervalFunction& operator-=(const IntervalFunction& other) {
    require_same_grid(other);
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] = detail::checked_sub(values_[k], other.values_[k]);
    return *this;
  }
  friend IntervalFunction operator+(IntervalFunction a, const IntervalFunction& b) { return a += b; }
  friend IntervalFunction operator-(IntervalFunction a, const IntervalFunction& b) { return a -= b; }

  friend bool operator==(const IntervalFunction& a, const IntervalFunction& b) {
    return a.grid() == b.grid() && a.values_ == b.values_;
  }

  /// "<value> <interval>" per line for nonzero values, canonical order.
  std::string format() const {
    std::string out;
    for (std::size_t k = 0; k < values_.size(); ++k) {
      if (values_[k] == 0) continue;
      out += std::to_string(values_[k]) + " " + (*catalog_)[k].to_string() + "\n";
    }
    return out;
  }

 private:
  void require_same_grid(const IntervalFunction& other) const {
    if (!(grid() == other.grid())) throw PreconditionError("interval functions live on different grids");
  }

  std::shared_ptr<const IntervalCatalog> catalog_;
  std::vector<std::int64_t> values_;
};

/// Sum of |f(I)| over all intervals.
inline std::int64_t l1_norm(const IntervalFunction& f) {
  std::int64_t total = 0;
  for (std::int64_t v : f.values()) total = detail::checked_add(total, detail::checked_abs(v));
  return total;
}

}  // namespace intapprox

#endif  // INTAPPROX_INTERVAL_FUNCTION_HPP
