#ifndef INTAPPROX_GRID_HPP
#define INTAPPROX_GRID_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "intapprox/errors.hpp"

namespace intapprox {

/// Grid vertex (row, col), both 1-based. Row 1 is the bottom row.
struct Vertex {
  int row = 1;
  int col = 1;

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Componentwise order: a path a -> b exists in the grid iff precedes(a, b).
constexpr bool precedes(Vertex a, Vertex b) noexcept { return a.row <= b.row && a.col <= b.col; }

inline std::string to_string(Vertex v) { return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")"; }

inline std::ostream& operator<<(std::ostream& os, Vertex v) { return os << to_string(v); }

/// The equioriented commutative grid with m rows and n columns. Horizontal
/// arrows point right, vertical arrows point up.
struct Grid {
  int m = 1;
  int n = 1;

  Grid() = default;
  Grid(int rows, int cols) : m(rows), n(cols) {
    if (rows < 1 || cols < 1) throw PreconditionError("grid dimensions must be positive");
  }

  std::size_t vertex_count() const noexcept { return static_cast<std::size_t>(m) * static_cast<std::size_t>(n); }
  bool contains(Vertex v) const noexcept { return v.row >= 1 && v.row <= m && v.col >= 1 && v.col <= n; }

  // Row-major from the bottom-left corner.
  std::size_t index(Vertex v) const noexcept {
    return static_cast<std::size_t>(v.row - 1) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v.col - 1);
  }
  Vertex vertex(std::size_t idx) const noexcept {
    return {static_cast<int>(idx / static_cast<std::size_t>(n)) + 1, static_cast<int>(idx % static_cast<std::size_t>(n)) + 1};
  }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    out.reserve(vertex_count());
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= n; ++j) out.push_back({i, j});
    }
    return out;
  }

  friend bool operator==(const Grid&, const Grid&) = default;
};

/// Integer-valued function on grid vertices (dimension vectors and their
/// signed counterparts).
class VertexFunction {
 public:
  VertexFunction() = default;
  explicit VertexFunction(Grid grid) : grid_(grid), values_(grid.vertex_count(), 0) {}

  const Grid& grid() const noexcept { return grid_; }
  std::int64_t operator[](Vertex v) const { return values_.at(grid_.index(v)); }
  std::int64_t& operator[](Vertex v) { return values_.at(grid_.index(v)); }

  friend bool operator==(const VertexFunction&, const VertexFunction&) = default;

  /// Rows listed top to bottom, e.g. "(1 2 1 / 0 1 1)".
  std::string to_string() const {
    std::string out = "(";
    for (int i = grid_.m; i >= 1; --i) {
      for (int j = 1; j <= grid_.n; ++j) {
        if (j != 1) out += ' ';
        out += std::to_string((*this)[Vertex{i, j}]);
      }
      if (i != 1) out += " / ";
    }
    return out + ")";
  }

 private:
  Grid grid_{};
  std::vector<std::int64_t> values_;
};

inline std::ostream& operator<<(std::ostream& os, const VertexFunction& f) { return os << f.to_string(); }

}  // namespace intapprox

#endif  // INTAPPROX_GRID_HPP
