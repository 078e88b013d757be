#ifndef INTAPPROX_MODULE_HPP
#define INTAPPROX_MODULE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intapprox/errors.hpp"
#include "intapprox/field.hpp"
#include "intapprox/grid.hpp"
#include "intapprox/interval.hpp"
#include "intapprox/linalg.hpp"
#include "intapprox/matrix.hpp"

namespace intapprox {

/// A representation of the commutative grid: a space per vertex and a matrix
/// per arrow. Arrow shapes are enforced on every write; commutativity is
/// checked separately by validate().
///
/// hmap(i,j) is the arrow (i,j) -> (i,j+1), of shape dim(i,j+1) x dim(i,j).
/// vmap(i,j) is the arrow (i,j) -> (i+1,j), of shape dim(i+1,j) x dim(i,j).
class PersistenceModule {
 public:
  PersistenceModule() : PersistenceModule(Grid{}, FieldSpec{}) {}

  /// The zero module.
  PersistenceModule(Grid grid, FieldSpec field) : PersistenceModule(grid, field, std::vector<std::size_t>(grid.vertex_count(), 0)) {}

  /// Spaces of the given dimensions (row-major from the bottom-left vertex)
  /// with every arrow zero.
  PersistenceModule(Grid grid, FieldSpec field, std::vector<std::size_t> dims)
      : grid_(grid), field_(field), dims_(std::move(dims)) {
    if (dims_.size() != grid_.vertex_count()) throw ShapeError("dimension list does not match the grid size");
    hmaps_.resize(grid_.vertex_count());
    vmaps_.resize(grid_.vertex_count());
    for (Vertex v : grid_.vertices()) {
      if (v.col < grid_.n) hmaps_[grid_.index(v)] = FFMatrix(dim({v.row, v.col + 1}), dim(v), field_);
      if (v.row < grid_.m) vmaps_[grid_.index(v)] = FFMatrix(dim({v.row + 1, v.col}), dim(v), field_);
    }
  }

  const Grid& grid() const noexcept { return grid_; }
  FieldSpec field() const noexcept { return field_; }

  std::size_t dim(Vertex v) const {
    require_vertex(v);
    return dims_[grid_.index(v)];
  }
  std::size_t total_dim() const noexcept {
    std::size_t total = 0;
    for (std::size_t d : dims_) total += d;
    return total;
  }

  const FFMatrix& hmap(Vertex v) const {
    require_arrow(v, true);
    return hmaps_[grid_.index(v)];
  }
  const FFMatrix& vmap(Vertex v) const {
    require_arrow(v, false);
    return vmaps_[grid_.index(v)];
  }

  void set_hmap(Vertex v, FFMatrix a) {
    require_arrow(v, true);
    check_shape(a, dim({v.row, v.col + 1}), dim(v), "h", v);
    hmaps_[grid_.index(v)] = std::move(a);
  }
  void set_vmap(Vertex v, FFMatrix a) {
    require_arrow(v, false);
    check_shape(a, dim({v.row + 1, v.col}), dim(v), "v", v);
    vmaps_[grid_.index(v)] = std::move(a);
  }

  /// The matrix of the arrow src -> dst; the two vertices must be adjacent.
  const FFMatrix& arrow(Vertex src, Vertex dst) const {
    if (dst.row == src.row && dst.col == src.col + 1) return hmap(src);
    if (dst.col == src.col && dst.row == src.row + 1) return vmap(src);
    throw PreconditionError("no arrow " + to_string(src) + " -> " + to_string(dst));
  }

  friend bool operator==(const PersistenceModule&, const PersistenceModule&) = default;

 private:
  void require_vertex(Vertex v) const {
    if (!grid_.contains(v)) throw PreconditionError("vertex " + to_string(v) + " is outside the grid");
  }
  void require_arrow(Vertex v, bool horizontal) const {
    require_vertex(v);
    if (horizontal ? v.col >= grid_.n : v.row >= grid_.m) {
      throw PreconditionError(std::string(horizontal ? "horizontal" : "vertical") + " arrow at " + to_string(v) +
                              " leaves the grid");
    }
  }
  void check_shape(const FFMatrix& a, std::size_t rows, std::size_t cols, const char* kind, Vertex v) const {
    if (a.rows() != rows || a.cols() != cols) {
      throw ShapeError(std::string(kind) + " map at " + to_string(v) + " must be " + std::to_string(rows) + "x" +
                       std::to_string(cols) + ", got " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    if (!(a.field() == field_)) throw ShapeError("map at " + to_string(v) + " lives over a different field");
  }

  Grid grid_;
  FieldSpec field_;
  std::vector<std::size_t> dims_;
  std::vector<FFMatrix> hmaps_;
  std::vector<FFMatrix> vmaps_;
};

/// The square with lower-left corner `square` fails to commute.
struct CommutativityViolation {
  Vertex square;
};

/// Checks every elementary square, bottom row first, left to right.
inline std::optional<CommutativityViolation> validate(const PersistenceModule& mod) {
  const Grid& g = mod.grid();
  for (int i = 1; i < g.m; ++i) {
    for (int j = 1; j < g.n; ++j) {
      const Vertex v{i, j};
      const FFMatrix right_then_up = multiply(mod.vmap({i, j + 1}), mod.hmap(v));
      const FFMatrix up_then_right = multiply(mod.hmap({i + 1, j}), mod.vmap(v));
      if (!(right_then_up == up_then_right)) return CommutativityViolation{v};
    }
  }
  return std::nullopt;
}

/// M(src -> dst) for every comparable pair, together with its rank.
///
/// Pairs are filled from the top-right corner backwards so each entry costs a
/// single product: the first arrow out of src, followed by the stored path
/// map from that arrow's head.
class PathMapTable {
 public:
  explicit PathMapTable(const PersistenceModule& mod) : grid_(mod.grid()), field_(mod.field()) {
    const std::size_t nv = grid_.vertex_count();
    slot_.assign(nv * nv, kNone);
    for (std::size_t si = nv; si-- > 0;) {
      const Vertex src = grid_.vertex(si);
      for (int r = src.row; r <= grid_.m; ++r) {
        for (int c = src.col; c <= grid_.n; ++c) {
          const Vertex dst{r, c};
          FFMatrix m;
          if (dst == src) {
            m = FFMatrix::identity(mod.dim(src), field_);
          } else if (c > src.col) {
            m = multiply(at({src.row, src.col + 1}, dst), mod.hmap(src));
            ++products_;
          } else {
            m = multiply(at({src.row + 1, src.col}, dst), mod.vmap(src));
            ++products_;
          }
          slot_[si * nv + grid_.index(dst)] = maps_.size();
          ranks_.push_back(intapprox::rank(m));
          maps_.push_back(std::move(m));
        }
      }
    }
  }

  const Grid& grid() const noexcept { return grid_; }
  FieldSpec field() const noexcept { return field_; }

  const FFMatrix& at(Vertex src, Vertex dst) const { return maps_[slot(src, dst)]; }
  std::size_t rank(Vertex src, Vertex dst) const { return ranks_[slot(src, dst)]; }

  /// Number of stored comparable pairs.
  std::size_t size() const noexcept { return maps_.size(); }
  /// Matrix products performed while building the table.
  std::size_t products() const noexcept { return products_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t slot(Vertex src, Vertex dst) const {
    if (!grid_.contains(src) || !grid_.contains(dst) || !precedes(src, dst)) {
      throw PreconditionError("no path " + to_string(src) + " -> " + to_string(dst));
    }
    return slot_[grid_.index(src) * grid_.vertex_count() + grid_.index(dst)];
  }

  Grid grid_;
  FieldSpec field_;
  std::vector<std::size_t> slot_;
  std::vector<FFMatrix> maps_;
  std::vector<std::size_t> ranks_;
  std::size_t products_ = 0;
};

inline PathMapTable path_map_table(const PersistenceModule& mod) { return PathMapTable(mod); }

using RankInvariant = std::map<std::pair<Vertex, Vertex>, std::size_t>;

inline RankInvariant rank_invariant(const PathMapTable& table) {
  RankInvariant out;
  const Grid& g = table.grid();
  for (Vertex src : g.vertices()) {
    for (Vertex dst : g.vertices()) {
      if (precedes(src, dst)) out.emplace(std::pair{src, dst}, table.rank(src, dst));
    }
  }
  return out;
}

inline RankInvariant rank_invariant(const PersistenceModule& mod) { return rank_invariant(PathMapTable(mod)); }

inline VertexFunction dimension_vector(const PersistenceModule& mod) {
  VertexFunction out(mod.grid());
  for (Vertex v : mod.grid().vertices()) out[v] = static_cast<std::int64_t>(mod.dim(v));
  return out;
}

namespace detail {

inline FFMatrix block_diag(const FFMatrix& a, const FFMatrix& b) {
  FFMatrix out(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return out;
}

}  // namespace detail

/// Blockwise direct sum; A's basis vectors come first at every vertex.
inline PersistenceModule direct_sum(const PersistenceModule& a, const PersistenceModule& b) {
  if (!(a.grid() == b.grid())) throw PreconditionError("direct_sum: modules live on different grids");
  if (!(a.field() == b.field())) throw PreconditionError("direct_sum: modules live over different fields");
  const Grid& g = a.grid();
  std::vector<std::size_t> dims;
  for (Vertex v : g.vertices()) dims.push_back(a.dim(v) + b.dim(v));
  PersistenceModule out(g, a.field(), std::move(dims));
  for (Vertex v : g.vertices()) {
    if (v.col < g.n) out.set_hmap(v, detail::block_diag(a.hmap(v), b.hmap(v)));
    if (v.row < g.m) out.set_vmap(v, detail::block_diag(a.vmap(v), b.vmap(v)));
  }
  return out;
}

/// Change of basis: the arrow u -> v becomes B_v * M(u -> v) * B_u^{-1}.
/// `bases` is indexed like Grid::index.
inline PersistenceModule conjugate(const PersistenceModule& mod, const std::vector<FFMatrix>& bases) {
  const Grid& g = mod.grid();
  if (bases.size() != g.vertex_count()) throw ShapeError("conjugate: need one basis matrix per vertex");
  std::vector<FFMatrix> inv(bases.size());
  for (Vertex v : g.vertices()) {
    const FFMatrix& b = bases[g.index(v)];
    if (b.rows() != mod.dim(v) || b.cols() != mod.dim(v)) {
      throw ShapeError("conjugate: basis at " + to_string(v) + " has the wrong size");
    }
    inv[g.index(v)] = inverse(b);
  }
  std::vector<std::size_t> dims;
  for (Vertex v : g.vertices()) dims.push_back(mod.dim(v));
  PersistenceModule out(g, mod.field(), std::move(dims));
  for (Vertex v : g.vertices()) {
    if (v.col < g.n) {
      const Vertex w{v.row, v.col + 1};
      out.set_hmap(v, multiply(bases[g.index(w)], multiply(mod.hmap(v), inv[g.index(v)])));
    }
    if (v.row < g.m) {
      const Vertex w{v.row + 1, v.col};
      out.set_vmap(v, multiply(bases[g.index(w)], multiply(mod.vmap(v), inv[g.index(v)])));
    }
  }
  return out;
}

/// V_I: K on the vertices of I, identity on arrows inside I, zero elsewhere.
inline PersistenceModule interval_module(const Grid& g, const Interval& iv, FieldSpec field = FieldSpec{}) {
  if (!iv.fits(g)) throw PreconditionError("interval " + iv.to_string() + " exceeds the grid");
  std::vector<std::size_t> dims;
  for (Vertex v : g.vertices()) dims.push_back(iv.contains(v) ? 1 : 0);
  PersistenceModule out(g, field, std::move(dims));
  const FFMatrix one = FFMatrix::identity(1, field);
  for (Vertex v : iv.vertices()) {
    if (iv.contains({v.row, v.col + 1})) out.set_hmap(v, one);
    if (iv.contains({v.row + 1, v.col})) out.set_vmap(v, one);
  }
  return out;
}

}  // namespace intapprox

#endif  // INTAPPROX_MODULE_HPP
