#ifndef INTAPPROX_MATRIX_HPP
#define INTAPPROX_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "intapprox/errors.hpp"
#include "intapprox/field.hpp"

namespace intapprox {

/// Dense row-major matrix over GF(p).
///
/// Matrices act on column vectors from the left, so a linear map V -> W is a
/// dim(W) x dim(V) matrix. Matrices with zero rows or zero columns are legal
/// and stand for maps into or out of the zero space.
class FFMatrix {
 public:
  FFMatrix() = default;

  FFMatrix(std::size_t rows, std::size_t cols, FieldSpec field = FieldSpec{})
      : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, 0) {}

  FFMatrix(std::size_t rows, std::size_t cols, FieldSpec field, std::vector<Residue> entries)
      : rows_(rows), cols_(cols), field_(field), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw ShapeError("matrix entry count " + std::to_string(entries_.size()) + " does not match " +
                       std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    for (Residue e : entries_) {
      if (e >= field_.p()) throw std::invalid_argument("matrix entry out of range for GF(p)");
    }
  }

  /// Builds a matrix from nested rows; integer entries are reduced mod p.
  static FFMatrix from_rows(FieldSpec field, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    FFMatrix out(r, c, field);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw ShapeError("ragged row list");
      std::size_t j = 0;
      for (std::int64_t v : row) out.entries_[i * c + j++] = field.reduce(v);
      ++i;
    }
    return out;
  }

  static FFMatrix identity(std::size_t n, FieldSpec field = FieldSpec{}) {
    FFMatrix out(n, n, field);
    for (std::size_t i = 0; i < n; ++i) out.entries_[i * n + i] = 1;
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  FieldSpec field() const noexcept { return field_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Residue operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
  Residue& at(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }

  void set(std::size_t r, std::size_t c, std::int64_t v) { entries_[r * cols_ + c] = field_.reduce(v); }

  std::span<const Residue> row(std::size_t r) const noexcept {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<Residue> row(std::size_t r) noexcept { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Residue> entries() const noexcept { return entries_; }

  bool is_zero() const noexcept {
    for (Residue e : entries_) {
      if (e != 0) return false;
    }
    return true;
  }

  friend bool operator==(const FFMatrix& a, const FFMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.entries_ == b.entries_;
  }

  friend std::ostream& operator<<(std::ostream& os, const FFMatrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (i != 0) os << "; ";
      for (std::size_t j = 0; j < m.cols_; ++j) {
        if (j != 0) os << ' ';
        os << m(i, j);
      }
    }
    return os << "] (" << m.rows_ << "x" << m.cols_ << " over GF(" << m.field_.p() << "))";
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldSpec field_{};
  std::vector<Residue> entries_;
};

}  // namespace intapprox

#endif  // INTAPPROX_MATRIX_HPP
