#ifndef INTAPPROX_INTERVAL_HPP
#define INTAPPROX_INTERVAL_HPP

#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "intapprox/errors.hpp"
#include "intapprox/grid.hpp"

namespace intapprox {

/// The slice [b, d] of an interval on one row.
struct RowSpan {
  int b = 1;
  int d = 1;

  friend constexpr auto operator<=>(const RowSpan&, const RowSpan&) = default;
};

/// An interval subquiver of a commutative grid in staircase form: rows s..t,
/// row i covering columns [b_i, d_i], with b_{i+1} <= b_i <= d_{i+1} <= d_i.
///
/// Ordering is the canonical total order (s, t, rows lexicographic) used for
/// every emitted sequence of intervals.
class Interval {
 public:
  Interval() = default;

  Interval(int s, std::vector<RowSpan> rows) : s_(s), rows_(std::move(rows)) {
    if (!is_staircase(s_, rows_)) throw PreconditionError("not a staircase interval: " + to_string());
  }

  /// True iff (s, rows) satisfies the staircase condition (grid bounds aside).
  static bool is_staircase(int s, std::span<const RowSpan> rows) noexcept {
    if (s < 1 || rows.empty()) return false;
    for (const RowSpan& r : rows) {
      if (r.b < 1 || r.b > r.d) return false;
    }
    for (std::size_t k = 0; k + 1 < rows.size(); ++k) {
      const RowSpan& lo = rows[k];
      const RowSpan& hi = rows[k + 1];
      if (!(hi.b <= lo.b && lo.b <= hi.d && hi.d <= lo.d)) return false;
    }
    return true;
  }

  static std::optional<Interval> try_make(int s, std::vector<RowSpan> rows) {
    if (!is_staircase(s, rows)) return std::nullopt;
    Interval out;
    out.s_ = s;
    out.rows_ = std::move(rows);
    return out;
  }

  /// The rectangle with source src and sink dst.
  static Interval rectangle(Vertex src, Vertex dst) {
    if (!precedes(src, dst)) {
      throw PreconditionError("rectangle: " + intapprox::to_string(src) + " does not precede " +
                              intapprox::to_string(dst));
    }
    return Interval(src.row, std::vector<RowSpan>(static_cast<std::size_t>(dst.row - src.row + 1),
                                                  RowSpan{src.col, dst.col}));
  }

  static Interval single(Vertex v) { return rectangle(v, v); }

  int s() const noexcept { return s_; }
  int t() const noexcept { return s_ + static_cast<int>(rows_.size()) - 1; }
  std::span<const RowSpan> rows() const noexcept { return rows_; }
  bool has_row(int i) const noexcept { return i >= s_ && i <= t(); }
  const RowSpan& row(int i) const { return rows_.at(static_cast<std::size_t>(i - s_)); }

  bool contains(Vertex v) const noexcept {
    if (!has_row(v.row)) return false;
    const RowSpan& r = rows_[static_cast<std::size_t>(v.row - s_)];
    return r.b <= v.col && v.col <= r.d;
  }

  std::size_t vertex_count() const noexcept {
    std::size_t total = 0;
    for (const RowSpan& r : rows_) total += static_cast<std::size_t>(r.d - r.b + 1);
    return total;
  }

  bool fits(const Grid& g) const noexcept {
    if (t() > g.m) return false;
    for (const RowSpan& r : rows_) {
      if (r.d > g.n) return false;
    }
    return true;
  }

  bool is_rectangle() const noexcept {
    for (const RowSpan& r : rows_) {
      if (r != rows_.front()) return false;
    }
    return true;
  }

  /// Vertices row by row from the bottom, left to right.
  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    out.reserve(vertex_count());
    for (int i = s_; i <= t(); ++i) {
      for (int j = row(i).b; j <= row(i).d; ++j) out.push_back({i, j});
    }
    return out;
  }

  /// Text form "s..t:[b_s,d_s];...;[b_t,d_t]" with rows bottom to top.
  std::string to_string() const {
    std::string out = std::to_string(s_) + ".." + std::to_string(t()) + ":";
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (k != 0) out += ';';
      out += "[" + std::to_string(rows_[k].b) + "," + std::to_string(rows_[k].d) + "]";
    }
    return out;
  }

  friend bool operator==(const Interval& a, const Interval& b) noexcept {
    return a.s_ == b.s_ && a.rows_ == b.rows_;
  }
  friend std::strong_ordering operator<=>(const Interval& a, const Interval& b) noexcept {
    if (auto c = a.s_ <=> b.s_; c != 0) return c;
    if (auto c = a.t() <=> b.t(); c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

 private:
  int s_ = 1;
  std::vector<RowSpan> rows_{RowSpan{}};
};

inline std::ostream& operator<<(std::ostream& os, const Interval& i) { return os << i.to_string(); }

struct IntervalHash {
  std::size_t operator()(const Interval& iv) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(static_cast<std::uint64_t>(iv.s()));
    for (const RowSpan& r : iv.rows()) {
      mix(static_cast<std::uint64_t>(r.b));
      mix(static_cast<std::uint64_t>(r.d));
    }
    return static_cast<std::size_t>(h);
  }
};

/// Parses the text form produced by Interval::to_string.
inline Interval parse_interval(std::string_view text) {
  auto fail = [&text](const std::string& why) -> ParseError {
    return ParseError(ParseError::Kind::Syntax, 0, "bad interval '" + std::string(text) + "': " + why);
  };
  std::size_t pos = 0;
  auto read_int = [&](int& out) {
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr == first) throw fail("expected integer at offset " + std::to_string(pos));
    pos += static_cast<std::size_t>(ptr - first);
  };
  auto expect = [&](std::string_view lit) {
    if (text.substr(pos, lit.size()) != lit) throw fail("expected '" + std::string(lit) + "'");
    pos += lit.size();
  };

  int s = 0, t = 0;
  read_int(s);
  expect("..");
  read_int(t);
  expect(":");
  if (s < 1 || t < s) throw fail("row range must satisfy 1 <= s <= t");
  std::vector<RowSpan> rows;
  for (int i = s; i <= t; ++i) {
    if (i != s) expect(";");
    RowSpan r;
    expect("[");
    read_int(r.b);
    expect(",");
    read_int(r.d);
    expect("]");
    rows.push_back(r);
  }
  if (pos != text.size()) throw fail("trailing characters");
  auto iv = Interval::try_make(s, std::move(rows));
  if (!iv) throw fail("rows violate the staircase condition");
  return *iv;
}

/// I <= J iff the vertex set of I is contained in that of J.
inline bool leq(const Interval& i, const Interval& j) noexcept {
  if (i.s() < j.s() || i.t() > j.t()) return false;
  for (int r = i.s(); r <= i.t(); ++r) {
    const RowSpan& a = i.row(r);
    const RowSpan& b = j.row(r);
    if (a.b < b.b || a.d > b.d) return false;
  }
  return true;
}

inline Interval rectangle_from(Vertex src, Vertex dst) { return Interval::rectangle(src, dst); }

/// Whether I contains the rectangle spanned by src <= dst; equivalently,
/// whether V_I(src -> dst) has rank 1.
inline bool interval_contains_rectangle(const Interval& i, Vertex src, Vertex dst) {
  return leq(Interval::rectangle(src, dst), i);
}

/// A set of grid vertices, stored as a membership mask.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(Grid grid) : grid_(grid), mask_(grid.vertex_count(), 0) {}

  VertexSet(Grid grid, std::span<const Vertex> vs) : VertexSet(grid) {
    for (Vertex v : vs) insert(v);
  }

  static VertexSet of(const Interval& iv, Grid grid) {
    if (!iv.fits(grid)) throw PreconditionError("interval " + iv.to_string() + " exceeds the grid");
    VertexSet out(grid);
    for (Vertex v : iv.vertices()) out.insert(v);
    return out;
  }

  const Grid& grid() const noexcept { return grid_; }

  void insert(Vertex v) {
    if (!grid_.contains(v)) throw PreconditionError("vertex " + intapprox::to_string(v) + " outside the grid");
    char& slot = mask_[grid_.index(v)];
    if (slot == 0) {
      slot = 1;
      ++size_;
    }
  }
  bool contains(Vertex v) const noexcept { return grid_.contains(v) && mask_[grid_.index(v)] != 0; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    out.reserve(size_);
    for (std::size_t k = 0; k < mask_.size(); ++k) {
      if (mask_[k] != 0) out.push_back(grid_.vertex(k));
    }
    return out;
  }

  bool subset_of(const VertexSet& other) const noexcept {
    for (std::size_t k = 0; k < mask_.size(); ++k) {
      if (mask_[k] != 0 && (k >= other.mask_.size() || other.mask_[k] == 0)) return false;
    }
    return true;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  Grid grid_{};
  std::vector<char> mask_;
  std::size_t size_ = 0;
};

/// The interval with exactly these vertices, if the set is a staircase.
inline std::optional<Interval> interval_from_vertices(const VertexSet& set) {
  if (set.empty()) return std::nullopt;
  const Grid& g = set.grid();
  int s = 0, t = 0;
  std::vector<RowSpan> rows;
  for (int i = 1; i <= g.m; ++i) {
    int b = 0, d = 0;
    for (int j = 1; j <= g.n; ++j) {
      if (!set.contains({i, j})) continue;
      if (b == 0) {
        b = d = j;
      } else if (j == d + 1) {
        d = j;
      } else {
        return std::nullopt;  // row is not contiguous
      }
    }
    if (b == 0) {
      if (s != 0 && t == 0) t = i - 1;
      continue;
    }
    if (s == 0) s = i;
    if (t != 0) return std::nullopt;  // gap between occupied rows
    rows.push_back({b, d});
  }
  return Interval::try_make(s, std::move(rows));
}

}  // namespace intapprox

#endif  // INTAPPROX_INTERVAL_HPP
