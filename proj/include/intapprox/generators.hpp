#ifndef INTAPPROX_GENERATORS_HPP
#define INTAPPROX_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "intapprox/errors.hpp"
#include "intapprox/field.hpp"
#include "intapprox/grid.hpp"
#include "intapprox/interval.hpp"
#include "intapprox/interval_function.hpp"
#include "intapprox/interval_poset.hpp"
#include "intapprox/linalg.hpp"
#include "intapprox/matrix.hpp"
#include "intapprox/module.hpp"

namespace intapprox {

/// A random module over the 2 x n grid with every space of dimension d.
///
/// The top row and the rightmost vertical map are drawn uniformly. Then each
/// square, right to left, is completed through the pullback of its top arrow
/// f and right arrow g: with (phi1, phi2) a pullback basis of dimension k and
/// phi3 a random k x d matrix, the left arrow is phi1*phi3 and the bottom
/// arrow is phi2*phi3.
inline PersistenceModule random_module(int n, std::size_t d, FieldSpec field, Rng& rng) {
  const Grid g(2, n);
  PersistenceModule out(g, field, std::vector<std::size_t>(g.vertex_count(), d));
  for (int j = 1; j < n; ++j) out.set_hmap({2, j}, random_matrix(d, d, field, rng));
  out.set_vmap({1, n}, random_matrix(d, d, field, rng));
  for (int j = n - 1; j >= 1; --j) {
    const Pullback pb = pullback_basis(out.hmap({2, j}), out.vmap({1, j + 1}));
    const FFMatrix phi3 = random_matrix(pb.phi1.cols(), d, field, rng);
    out.set_vmap({1, j}, multiply(pb.phi1, phi3));
    out.set_hmap({1, j}, multiply(pb.phi2, phi3));
  }
  return out;
}

struct DecomposableSample {
  PersistenceModule module;
  IntervalFunction multiplicities;
  std::vector<Interval> summands;  // in draw order
};

/// A direct sum of k intervals drawn uniformly from the grid's intervals,
/// optionally disguised by a random change of basis at every vertex. The
/// intervals are drawn before the bases, so the same seed yields the same
/// summands with or without the disguise.
inline DecomposableSample random_interval_decomposable(int m, int n, std::size_t k, FieldSpec field, Rng& rng,
                                                       bool disguise) {
  const Grid g(m, n);
  auto cat = IntervalCatalog::shared(m, n);
  DecomposableSample out{PersistenceModule(g, field), IntervalFunction(cat), {}};
  std::uniform_int_distribution<std::size_t> pick(0, cat->size() - 1);
  for (std::size_t r = 0; r < k; ++r) {
    const std::size_t idx = pick(rng);
    out.summands.push_back((*cat)[idx]);
    ++out.multiplicities.at_index(idx);
  }
  for (const Interval& iv : out.summands) out.module = direct_sum(out.module, interval_module(g, iv, field));
  if (disguise) {
    std::vector<FFMatrix> bases;
    for (Vertex v : g.vertices()) bases.push_back(random_invertible(out.module.dim(v), field, rng));
    out.module = conjugate(out.module, bases);
  }
  return out;
}

namespace detail {

// Writes block into m with its top-left corner at (r0, c0).
inline void put(FFMatrix& m, std::size_t r0, std::size_t c0, const FFMatrix& block) {
  for (std::size_t i = 0; i < block.rows(); ++i) {
    for (std::size_t j = 0; j < block.cols(); ++j) m.at(r0 + i, c0 + j) = block(i, j);
  }
}

}  // namespace detail

/// An indecomposable, non-interval module over the 2 x 5 grid with spaces of
/// dimension up to 2l. E is the l x l identity and J the l x l Jordan block
/// with eigenvalue 1. The two maps between the 2l-dimensional spaces are
/// identities.
inline PersistenceModule buchet_module(std::size_t l, FieldSpec field = FieldSpec{}) {
  if (l < 1) throw PreconditionError("buchet_module: l must be positive");
  const Grid g(2, 5);
  // Dimensions row-major from the bottom row.
  std::vector<std::size_t> dims{0, l, 2 * l, 2 * l, l, l, 2 * l, 2 * l, l, 0};
  PersistenceModule out(g, field, dims);
  const FFMatrix e = FFMatrix::identity(l, field);
  FFMatrix jordan = e;
  for (std::size_t i = 0; i + 1 < l; ++i) jordan.at(i, i + 1) = 1;

  FFMatrix e_over_0(2 * l, l, field);  // [E; 0]
  detail::put(e_over_0, 0, 0, e);
  FFMatrix e_then_0(l, 2 * l, field);  // [E 0]
  detail::put(e_then_0, 0, 0, e);
  FFMatrix e_over_e(2 * l, l, field);  // [E; E]
  detail::put(e_over_e, 0, 0, e);
  detail::put(e_over_e, l, 0, e);
  FFMatrix e_beside_e(l, 2 * l, field);  // [E E]
  detail::put(e_beside_e, 0, 0, e);
  detail::put(e_beside_e, 0, l, e);
  FFMatrix middle(2 * l, 2 * l, field);  // [E E; E J]
  detail::put(middle, 0, 0, e);
  detail::put(middle, 0, l, e);
  detail::put(middle, l, 0, e);
  detail::put(middle, l, l, jordan);
  const FFMatrix id2 = FFMatrix::identity(2 * l, field);

  out.set_hmap({2, 1}, e_over_0);
  out.set_hmap({2, 2}, id2);
  out.set_hmap({2, 3}, e_then_0);
  out.set_hmap({1, 2}, e_over_0);
  out.set_hmap({1, 3}, id2);
  out.set_hmap({1, 4}, e_then_0);
  out.set_vmap({1, 2}, e_over_e);
  out.set_vmap({1, 3}, middle);
  out.set_vmap({1, 4}, e_beside_e);
  return out;
}

/// The 2 x 3 module whose interval approximation has a negative coefficient:
/// top row K -[1;1]-> K^2 -[0 1]-> K, bottom row 0 -> K -1-> K, vertical maps
/// [0;1] at column 2 and 1 at column 3.
inline PersistenceModule example_negativedtilde(FieldSpec field = FieldSpec{}) {
  const Grid g(2, 3);
  PersistenceModule out(g, field, {0, 1, 1, 1, 2, 1});
  out.set_hmap({2, 1}, FFMatrix::from_rows(field, {{1}, {1}}));
  out.set_hmap({2, 2}, FFMatrix::from_rows(field, {{0, 1}}));
  out.set_hmap({1, 2}, FFMatrix::from_rows(field, {{1}}));
  out.set_vmap({1, 2}, FFMatrix::from_rows(field, {{0}, {1}}));
  out.set_vmap({1, 3}, FFMatrix::from_rows(field, {{1}}));
  return out;
}

}  // namespace intapprox

#endif  // INTAPPROX_GENERATORS_HPP
