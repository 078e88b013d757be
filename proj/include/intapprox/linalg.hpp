#ifndef INTAPPROX_LINALG_HPP
#define INTAPPROX_LINALG_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "intapprox/errors.hpp"
#include "intapprox/field.hpp"
#include "intapprox/matrix.hpp"

namespace intapprox {

/// Deterministic pseudo-random source used by every generator in the library.
using Rng = std::mt19937_64;

namespace detail {

inline void require_same_field(const FFMatrix& a, const FFMatrix& b, const char* op) {
  if (!(a.field() == b.field())) {
    throw ShapeError(std::string(op) + ": operands live over different fields");
  }
}

inline std::string shape_str(const FFMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// Bit-packed GF(2) matrix, one row per run of 64-bit words.
struct BitRows {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;

  explicit BitRows(const FFMatrix& m)
      : rows(m.rows()), cols(m.cols()), words((m.cols() + 63) / 64), bits(rows * words, 0) {
    for (std::size_t i = 0; i < rows; ++i) {
      auto src = m.row(i);
      std::uint64_t* dst = bits.data() + i * words;
      for (std::size_t j = 0; j < cols; ++j) {
        if (src[j] != 0) dst[j >> 6] |= std::uint64_t{1} << (j & 63);
      }
    }
  }

  std::uint64_t* row(std::size_t i) noexcept { return bits.data() + i * words; }
  const std::uint64_t* row(std::size_t i) const noexcept { return bits.data() + i * words; }
};

// Reduces m in place to reduced row echelon form and returns the pivot columns.
inline std::vector<std::size_t> rref_in_place(FFMatrix& m) {
  const FieldSpec f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(r).begin());
    const Residue scale = f.inv(m(r, c));
    for (Residue& e : m.row(r)) e = f.mul(e, scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Residue factor = m(i, c);
      if (factor == 0) continue;
      auto target = m.row(i);
      auto source = m.row(r);
      for (std::size_t j = c; j < m.cols(); ++j) target[j] = f.sub(target[j], f.mul(factor, source[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

/// Rank by row reduction with explicit modular arithmetic; valid for every p.
inline std::size_t rank_generic(const FFMatrix& a) {
  if (a.empty()) return 0;
  const FieldSpec f = a.field();
  FFMatrix m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(r).begin());
    const Residue inv = f.inv(m(r, c));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Residue factor = f.mul(m(i, c), inv);
      if (factor == 0) continue;
      auto target = m.row(i);
      auto source = m.row(r);
      for (std::size_t j = c; j < m.cols(); ++j) target[j] = f.sub(target[j], f.mul(factor, source[j]));
    }
    ++r;
  }
  return r;
}

/// Rank over GF(2) with rows packed into 64-bit words.
inline std::size_t rank_gf2(const FFMatrix& a) {
  if (!a.field().is_gf2()) throw PreconditionError("rank_gf2 requires a matrix over GF(2)");
  if (a.empty()) return 0;
  detail::BitRows m(a);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    const std::size_t w = c >> 6;
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    std::size_t piv = r;
    while (piv < m.rows && (m.row(piv)[w] & bit) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r) std::swap_ranges(m.row(piv) + w, m.row(piv) + m.words, m.row(r) + w);
    const std::uint64_t* src = m.row(r);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      std::uint64_t* dst = m.row(i);
      if ((dst[w] & bit) == 0) continue;
      for (std::size_t k = w; k < m.words; ++k) dst[k] ^= src[k];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const FFMatrix& a) { return a.field().is_gf2() ? rank_gf2(a) : rank_generic(a); }

inline FFMatrix transpose(const FFMatrix& a) {
  FFMatrix out(a.cols(), a.rows(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(j, i) = a(i, j);
  }
  return out;
}

/// Matrix product a*b over GF(p).
inline FFMatrix multiply(const FFMatrix& a, const FFMatrix& b) {
  detail::require_same_field(a, b, "multiply");
  if (a.cols() != b.rows()) {
    throw ShapeError("multiply: cannot compose " + detail::shape_str(a) + " with " + detail::shape_str(b));
  }
  const FieldSpec f = a.field();
  FFMatrix out(a.rows(), b.cols(), f);
  if (out.empty() || a.cols() == 0) return out;

  if (f.is_gf2()) {
    const detail::BitRows packed(b);
    std::vector<std::uint64_t> acc(packed.words);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      auto arow = a.row(i);
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (arow[k] == 0) continue;
        const std::uint64_t* brow = packed.row(k);
        for (std::size_t w = 0; w < packed.words; ++w) acc[w] ^= brow[w];
      }
      auto orow = out.row(i);
      for (std::size_t w = 0; w < packed.words; ++w) {
        std::uint64_t word = acc[w];
        while (word != 0) {
          const int bitpos = std::countr_zero(word);
          orow[w * 64 + static_cast<std::size_t>(bitpos)] = 1;
          word &= word - 1;
        }
      }
    }
    return out;
  }

  // Accumulate in 64 bits and reduce once per row; p < 2^16 keeps each
  // product below 2^32, so 2^32 terms fit before overflow.
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    auto arow = a.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t aik = arow[k];
      if (aik == 0) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) acc[j] += aik * brow[j];
    }
    auto orow = out.row(i);
    for (std::size_t j = 0; j < b.cols(); ++j) orow[j] = static_cast<Residue>(acc[j] % f.p());
  }
  return out;
}

inline FFMatrix add(const FFMatrix& a, const FFMatrix& b) {
  detail::require_same_field(a, b, "add");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("add: shapes " + detail::shape_str(a) + " and " + detail::shape_str(b) + " differ");
  }
  FFMatrix out = a;
  const FieldSpec f = a.field();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = f.add(a(i, j), b(i, j));
  }
  return out;
}

inline FFMatrix negate(const FFMatrix& a) {
  FFMatrix out = a;
  const FieldSpec f = a.field();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (Residue& e : out.row(i)) e = f.neg(e);
  }
  return out;
}

/// [a | b]
inline FFMatrix hstack(const FFMatrix& a, const FFMatrix& b) {
  detail::require_same_field(a, b, "hstack");
  if (a.rows() != b.rows()) {
    throw ShapeError("hstack: row counts differ (" + detail::shape_str(a) + " vs " + detail::shape_str(b) + ")");
  }
  FFMatrix out(a.rows(), a.cols() + b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    std::copy(a.row(i).begin(), a.row(i).end(), dst.begin());
    std::copy(b.row(i).begin(), b.row(i).end(), dst.begin() + static_cast<std::ptrdiff_t>(a.cols()));
  }
  return out;
}

/// [a ; b]
inline FFMatrix vstack(const FFMatrix& a, const FFMatrix& b) {
  detail::require_same_field(a, b, "vstack");
  if (a.cols() != b.cols()) {
    throw ShapeError("vstack: column counts differ (" + detail::shape_str(a) + " vs " + detail::shape_str(b) +
                     ")");
  }
  FFMatrix out(a.rows() + b.rows(), a.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) std::copy(a.row(i).begin(), a.row(i).end(), out.row(i).begin());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    std::copy(b.row(i).begin(), b.row(i).end(), out.row(a.rows() + i).begin());
  }
  return out;
}

/// Placeholder for a zero block whose shape is forced by its neighbours.
struct ZeroBlock {};

using BlockOperand = std::variant<std::reference_wrapper<const FFMatrix>, ZeroBlock>;

/// [a b ; c d], where at most one block per block-row and per block-column
/// may be a ZeroBlock.
inline FFMatrix block2x2(BlockOperand a, BlockOperand b, BlockOperand c, BlockOperand d) {
  auto get = [](const BlockOperand& op) -> const FFMatrix* {
    if (auto* ref = std::get_if<std::reference_wrapper<const FFMatrix>>(&op)) return &ref->get();
    return nullptr;
  };
  const FFMatrix* blk[4] = {get(a), get(b), get(c), get(d)};
  const FFMatrix* any = nullptr;
  for (const FFMatrix* m : blk) {
    if (m != nullptr) {
      if (any != nullptr) detail::require_same_field(*any, *m, "block2x2");
      any = m;
    }
  }
  if (any == nullptr) throw ShapeError("block2x2: every block is an unsized zero");

  auto pick = [](const FFMatrix* x, const FFMatrix* y, bool by_rows, const char* what) -> std::size_t {
    if (x != nullptr && y != nullptr) {
      const std::size_t vx = by_rows ? x->rows() : x->cols();
      const std::size_t vy = by_rows ? y->rows() : y->cols();
      if (vx != vy) throw ShapeError(std::string("block2x2: inconsistent ") + what);
      return vx;
    }
    if (x != nullptr) return by_rows ? x->rows() : x->cols();
    if (y != nullptr) return by_rows ? y->rows() : y->cols();
    throw ShapeError(std::string("block2x2: cannot infer ") + what + " of zero blocks");
  };
  const std::size_t top = pick(blk[0], blk[1], true, "top block-row height");
  const std::size_t bottom = pick(blk[2], blk[3], true, "bottom block-row height");
  const std::size_t left = pick(blk[0], blk[2], false, "left block-column width");
  const std::size_t right = pick(blk[1], blk[3], false, "right block-column width");

  FFMatrix out(top + bottom, left + right, any->field());
  const std::size_t row_off[4] = {0, 0, top, top};
  const std::size_t col_off[4] = {0, left, 0, left};
  for (int k = 0; k < 4; ++k) {
    if (blk[k] == nullptr) continue;
    for (std::size_t i = 0; i < blk[k]->rows(); ++i) {
      auto src = blk[k]->row(i);
      std::copy(src.begin(), src.end(), out.row(row_off[k] + i).begin() + static_cast<std::ptrdiff_t>(col_off[k]));
    }
  }
  return out;
}

/// Columns form a basis of the null space {x : a x = 0}.
inline FFMatrix kernel_basis(const FFMatrix& a) {
  FFMatrix r = a;
  const std::vector<std::size_t> pivots = detail::rref_in_place(r);
  const FieldSpec f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  FFMatrix basis(a.cols(), a.cols() - pivots.size(), f);
  std::size_t k = 0;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis.at(free, k) = 1;
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) basis.at(pivots[pi], k) = f.neg(r(pi, free));
    ++k;
  }
  return basis;
}

/// Inverse of a square matrix; throws PreconditionError when singular.
inline FFMatrix inverse(const FFMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeError("inverse: matrix is not square (" + detail::shape_str(a) + ")");
  const std::size_t n = a.rows();
  FFMatrix aug = hstack(a, FFMatrix::identity(n, a.field()));
  const std::vector<std::size_t> pivots = detail::rref_in_place(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
    throw PreconditionError("inverse: matrix is singular");
  }
  FFMatrix out(n, n, a.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug(i, n + j);
  }
  return out;
}

struct Pullback {
  FFMatrix phi1;  // into the domain of f
  FFMatrix phi2;  // into the domain of g
};

/// Basis of the pullback {(x, y) : f x = g y} of two maps with a common
/// codomain, split into its two projections. f * phi1 == g * phi2 holds exactly.
inline Pullback pullback_basis(const FFMatrix& f, const FFMatrix& g) {
  detail::require_same_field(f, g, "pullback_basis");
  if (f.rows() != g.rows()) {
    throw ShapeError("pullback_basis: codomains differ (" + detail::shape_str(f) + " vs " + detail::shape_str(g) +
                     ")");
  }
  const FFMatrix basis = kernel_basis(hstack(f, negate(g)));
  Pullback out{FFMatrix(f.cols(), basis.cols(), f.field()), FFMatrix(g.cols(), basis.cols(), f.field())};
  for (std::size_t i = 0; i < f.cols(); ++i) {
    std::copy(basis.row(i).begin(), basis.row(i).end(), out.phi1.row(i).begin());
  }
  for (std::size_t i = 0; i < g.cols(); ++i) {
    std::copy(basis.row(f.cols() + i).begin(), basis.row(f.cols() + i).end(), out.phi2.row(i).begin());
  }
  return out;
}

/// Matrix with independent entries drawn uniformly from [0, p).
inline FFMatrix random_matrix(std::size_t rows, std::size_t cols, FieldSpec field, Rng& rng) {
  std::uniform_int_distribution<Residue> dist(0, field.p() - 1);
  FFMatrix out(rows, cols, field);
  for (std::size_t i = 0; i < rows; ++i) {
    for (Residue& e : out.row(i)) e = dist(rng);
  }
  return out;
}

/// Uniformly random invertible d x d matrix (rejection sampling).
inline FFMatrix random_invertible(std::size_t d, FieldSpec field, Rng& rng) {
  for (;;) {
    FFMatrix candidate = random_matrix(d, d, field, rng);
    if (rank(candidate) == d) return candidate;
  }
}

}  // namespace intapprox

#endif  // INTAPPROX_LINALG_HPP
