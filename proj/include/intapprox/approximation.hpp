#ifndef INTAPPROX_APPROXIMATION_HPP
#define INTAPPROX_APPROXIMATION_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "intapprox/compression.hpp"
#include "intapprox/errors.hpp"
#include "intapprox/grid.hpp"
#include "intapprox/interval.hpp"
#include "intapprox/interval_function.hpp"
#include "intapprox/mobius.hpp"
#include "intapprox/module.hpp"

namespace intapprox {

/// A formal integer combination of interval modules, sum of c_I <V_I>, with
/// only nonzero coefficients stored.
class SignedIntervalSum {
 public:
  SignedIntervalSum() = default;
  explicit SignedIntervalSum(Grid grid) : grid_(grid) {}

  static SignedIntervalSum from_function(const IntervalFunction& f) {
    SignedIntervalSum out(f.grid());
    const IntervalCatalog& cat = f.catalog();
    for (std::size_t k = 0; k < cat.size(); ++k) out.add(cat[k], f.at_index(k));
    return out;
  }

  /// Rebuilds a sum from its positive and negative parts (multisets).
  static SignedIntervalSum from_parts(Grid grid, std::span<const Interval> positive,
                                      std::span<const Interval> negative) {
    SignedIntervalSum out(grid);
    for (const Interval& iv : positive) out.add(iv, 1);
    for (const Interval& iv : negative) out.add(iv, -1);
    return out;
  }

  const Grid& grid() const noexcept { return grid_; }
  const std::map<Interval, std::int64_t>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  std::int64_t coefficient(const Interval& iv) const {
    auto it = terms_.find(iv);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const Interval& iv, std::int64_t c) {
    if (c == 0) return;
    if (!iv.fits(grid_)) throw PreconditionError("interval " + iv.to_string() + " exceeds the grid");
    auto [it, inserted] = terms_.emplace(iv, c);
    if (!inserted) {
      it->second = detail::checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Each interval with positive coefficient c, repeated c times.
  std::vector<Interval> positive_part() const { return part(1); }
  /// Each interval with negative coefficient -c, repeated c times.
  std::vector<Interval> negative_part() const { return part(-1); }

  IntervalFunction to_function() const {
    IntervalFunction out(grid_);
    for (const auto& [iv, c] : terms_) out[iv] = c;
    return out;
  }

  /// "APPROX ss" followed by "<coeff> <interval>" lines in canonical order.
  std::string format() const {
    std::string out = "APPROX ss\n";
    for (const auto& [iv, c] : terms_) out += std::to_string(c) + " " + iv.to_string() + "\n";
    return out;
  }

  friend bool operator==(const SignedIntervalSum&, const SignedIntervalSum&) = default;

 private:
  std::vector<Interval> part(int sign) const {
    std::vector<Interval> out;
    for (const auto& [iv, c] : terms_) {
      if ((c > 0) != (sign > 0)) continue;
      for (std::int64_t r = 0; r < detail::checked_abs(c); ++r) out.push_back(iv);
    }
    return out;
  }

  Grid grid_{};
  std::map<Interval, std::int64_t> terms_;
};

/// Möbius inversion of the ss-compressed multiplicity function of M.
inline SignedIntervalSum interval_approximation(const PersistenceModule& mod, unsigned threads = 0) {
  return SignedIntervalSum::from_function(mobius_invert(compressed_multiplicity_function(mod, threads), threads));
}

inline VertexFunction dimvec_of_sum(const SignedIntervalSum& sum) {
  VertexFunction out(sum.grid());
  for (const auto& [iv, c] : sum.terms()) {
    for (Vertex v : iv.vertices()) out[v] = detail::checked_add(out[v], c);
  }
  return out;
}

/// Sum of the coefficients of the intervals containing the rectangle src..dst,
/// i.e. the rank of src -> dst in the formal sum.
inline std::int64_t rank_of_sum(const SignedIntervalSum& sum, Vertex src, Vertex dst) {
  if (!precedes(src, dst)) {
    throw PreconditionError("rank_of_sum: " + to_string(src) + " does not precede " + to_string(dst));
  }
  const Interval rect = Interval::rectangle(src, dst);
  std::int64_t total = 0;
  for (const auto& [iv, c] : sum.terms()) {
    if (leq(rect, iv)) total = detail::checked_add(total, c);
  }
  return total;
}

/// Multiplicities of the interval summands of an interval-decomposable module
/// from its compressed multiplicity function.
inline IntervalFunction recover_multiplicities(const IntervalFunction& f) { return mobius_invert(f); }

inline std::int64_t l1_norm(const SignedIntervalSum& sum) {
  std::int64_t total = 0;
  for (const auto& [iv, c] : sum.terms()) total = detail::checked_add(total, detail::checked_abs(c));
  return total;
}

}  // namespace intapprox

#endif  // INTAPPROX_APPROXIMATION_HPP
