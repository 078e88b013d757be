#ifndef INTAPPROX_MOBIUS_HPP
#define INTAPPROX_MOBIUS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "intapprox/compression.hpp"
#include "intapprox/errors.hpp"
#include "intapprox/grid.hpp"
#include "intapprox/interval.hpp"
#include "intapprox/interval_function.hpp"
#include "intapprox/interval_poset.hpp"

namespace intapprox {

/// The Möbius value on [I, J] from joins of cover subsets: 1 when I = J,
/// otherwise the sum of (-1)^|S| over nonempty S in Cov(I) with join J.
inline std::int64_t mu_prime(const Interval& lower, const Interval& upper, const Grid& g) {
  if (!leq(lower, upper)) throw PreconditionError("mu_prime: " + lower.to_string() + " is not below " + upper.to_string());
  if (!upper.fits(g)) throw PreconditionError("mu_prime: interval exceeds the grid");
  if (lower == upper) return 1;
  const auto cov = cover_structure(lower, g);
  std::int64_t total = 0;
  for (unsigned mask = 1; mask < (1u << cov.size()); ++mask) {
    if (join_of_covers(lower, cov, mask) == upper) total += (std::popcount(mask) % 2 == 0) ? 1 : -1;
  }
  return total;
}

inline std::int64_t mu_prime(const Interval& lower, const Interval& upper, int m, int n) {
  return mu_prime(lower, upper, Grid(m, n));
}

/// g(I) = f(I) + sum over nonempty S in Cov(I) of (-1)^|S| f(join S).
inline IntervalFunction mobius_invert(const IntervalFunction& f, unsigned threads = 1) {
  IntervalFunction out(f.catalog_ptr());
  const IntervalCatalog& cat = f.catalog();
  const Grid& g = cat.grid();
  std::vector<std::int64_t> values(cat.size(), 0);
  detail::parallel_for(cat.size(), threads, [&](std::size_t k) {
    const Interval& iv = cat[k];
    const auto cov = cover_structure(iv, g);
    std::int64_t acc = f.at_index(k);
    for (unsigned mask = 1; mask < (1u << cov.size()); ++mask) {
      const std::int64_t term = f.at_index(cat.index_of(join_of_covers(iv, cov, mask)));
      acc = std::popcount(mask) % 2 == 0 ? detail::checked_add(acc, term) : detail::checked_sub(acc, term);
    }
    values[k] = acc;
  });
  for (std::size_t k = 0; k < values.size(); ++k) out.at_index(k) = values[k];
  return out;
}

/// f(I) = sum of g(J) over J >= I.
inline IntervalFunction zeta_act(const IntervalFunction& g) {
  IntervalFunction out(g.catalog_ptr());
  const IntervalCatalog& cat = g.catalog();
  for (std::size_t j = 0; j < cat.size(); ++j) {
    const std::int64_t v = g.at_index(j);
    if (v == 0) continue;
    for (std::size_t i = 0; i < cat.size(); ++i) {
      if (leq(cat[i], cat[j])) out.at_index(i) = detail::checked_add(out.at_index(i), v);
    }
  }
  return out;
}

}  // namespace intapprox

#endif  // INTAPPROX_MOBIUS_HPP
