#ifndef INTAPPROX_INTERVAL_POSET_HPP
#define INTAPPROX_INTERVAL_POSET_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "intapprox/errors.hpp"
#include "intapprox/grid.hpp"
#include "intapprox/interval.hpp"

namespace intapprox {

namespace detail {

inline void extend_rows(const Grid& g, int s, int t, std::vector<RowSpan>& rows, std::vector<Interval>& out) {
  const int level = s + static_cast<int>(rows.size());
  if (level > t) {
    out.push_back(*Interval::try_make(s, rows));
    return;
  }
  if (rows.empty()) {
    for (int b = 1; b <= g.n; ++b) {
      for (int d = b; d <= g.n; ++d) {
        rows.push_back({b, d});
        extend_rows(g, s, t, rows, out);
        rows.pop_back();
      }
    }
    return;
  }
  const RowSpan lo = rows.back();
  for (int b = 1; b <= lo.b; ++b) {
    for (int d = lo.b; d <= lo.d; ++d) {
      rows.push_back({b, d});
      extend_rows(g, s, t, rows, out);
      rows.pop_back();
    }
  }
}

}  // namespace detail

/// All intervals of the m x n grid, in canonical order.
inline std::vector<Interval> enumerate_intervals(int m, int n) {
  const Grid g(m, n);
  std::vector<Interval> out;
  std::vector<RowSpan> rows;
  for (int s = 1; s <= m; ++s) {
    for (int t = s; t <= m; ++t) detail::extend_rows(g, s, t, rows, out);
  }
  return out;
}

/// The intervals of one grid with a reverse index. Shared read-only between
/// interval functions over the same grid.
class IntervalCatalog {
 public:
  explicit IntervalCatalog(Grid grid) : grid_(grid), intervals_(enumerate_intervals(grid.m, grid.n)) {
    index_.reserve(intervals_.size());
    for (std::size_t k = 0; k < intervals_.size(); ++k) index_.emplace(intervals_[k], k);
  }

  /// Process-wide cached catalog for the m x n grid.
  static std::shared_ptr<const IntervalCatalog> shared(int m, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const IntervalCatalog>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{m, n}];
    if (!slot) slot = std::make_shared<const IntervalCatalog>(Grid(m, n));
    return slot;
  }

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return intervals_.size(); }
  const Interval& operator[](std::size_t k) const { return intervals_.at(k); }
  std::span<const Interval> intervals() const noexcept { return intervals_; }

  std::optional<std::size_t> find(const Interval& iv) const {
    auto it = index_.find(iv);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index_of(const Interval& iv) const {
    auto k = find(iv);
    if (!k) throw PreconditionError("interval " + iv.to_string() + " is not in the grid");
    return *k;
  }

 private:
  Grid grid_;
  std::vector<Interval> intervals_;
  std::unordered_map<Interval, std::size_t, IntervalHash> index_;
};

/// The four covers that can force an extra corner vertex into a join.
enum CoverRole : unsigned {
  kCoverTopLeft = 1u,      // top row extended one step left
  kCoverTop = 2u,          // vertex added above the upper-left vertex
  kCoverBottomRight = 4u,  // bottom row extended one step right
  kCoverBottom = 8u,       // vertex added below the lower-right vertex
};

struct Cover {
  Interval interval;
  Vertex added;
  unsigned roles = 0;
};

/// Cov(I) with the vertex each cover adds, in canonical order.
inline std::vector<Cover> cover_structure(const Interval& iv, const Grid& g) {
  if (!iv.fits(g)) throw PreconditionError("interval " + iv.to_string() + " exceeds the grid");
  std::vector<Cover> out;
  const int s = iv.s(), t = iv.t();
  auto consider = [&](int s2, std::vector<RowSpan> rows, Vertex added, unsigned roles) {
    auto c = Interval::try_make(s2, std::move(rows));
    if (c && c->fits(g)) out.push_back({std::move(*c), added, roles});
  };
  const std::vector<RowSpan> base(iv.rows().begin(), iv.rows().end());
  for (int i = s; i <= t; ++i) {
    const auto k = static_cast<std::size_t>(i - s);
    if (base[k].b > 1) {
      auto rows = base;
      --rows[k].b;
      consider(s, std::move(rows), {i, base[k].b - 1}, i == t ? kCoverTopLeft : 0u);
    }
    if (base[k].d < g.n) {
      auto rows = base;
      ++rows[k].d;
      consider(s, std::move(rows), {i, base[k].d + 1}, i == s ? kCoverBottomRight : 0u);
    }
  }
  if (t < g.m) {
    auto rows = base;
    rows.push_back({base.back().b, base.back().b});
    consider(s, std::move(rows), {t + 1, base.back().b}, kCoverTop);
  }
  if (s > 1) {
    std::vector<RowSpan> rows{{base.front().d, base.front().d}};
    rows.insert(rows.end(), base.begin(), base.end());
    consider(s - 1, std::move(rows), {s - 1, base.front().d}, kCoverBottom);
  }
  std::sort(out.begin(), out.end(), [](const Cover& a, const Cover& b) { return a.interval < b.interval; });
  return out;
}

/// Cov(I): the intervals with exactly one more vertex than I that contain it.
inline std::vector<Interval> covers(const Interval& iv, const Grid& g) {
  std::vector<Interval> out;
  for (Cover& c : cover_structure(iv, g)) out.push_back(std::move(c.interval));
  return out;
}

inline std::vector<Interval> covers(const Interval& iv, int m, int n) { return covers(iv, Grid(m, n)); }

/// The join of the covers selected by `mask` (bit k picks cov[k]). The result
/// is I plus the added vertices, plus a forced corner at the top left when
/// both the top-left and top covers are present, and at the bottom right when
/// both the bottom-right and bottom covers are present.
inline Interval join_of_covers(const Interval& iv, std::span<const Cover> cov, unsigned mask) {
  int s = iv.s();
  std::vector<RowSpan> rows(iv.rows().begin(), iv.rows().end());
  unsigned roles = 0;
  auto add = [&](Vertex v) {
    if (v.row == s - 1) {
      rows.insert(rows.begin(), RowSpan{v.col, v.col});
      --s;
    } else if (v.row == s + static_cast<int>(rows.size())) {
      rows.push_back({v.col, v.col});
    } else {
      RowSpan& r = rows[static_cast<std::size_t>(v.row - s)];
      r.b = std::min(r.b, v.col);
      r.d = std::max(r.d, v.col);
    }
  };
  for (std::size_t k = 0; k < cov.size(); ++k) {
    if ((mask >> k & 1u) == 0) continue;
    add(cov[k].added);
    roles |= cov[k].roles;
  }
  if ((roles & (kCoverTopLeft | kCoverTop)) == (kCoverTopLeft | kCoverTop)) {
    add({iv.t() + 1, iv.row(iv.t()).b - 1});
  }
  if ((roles & (kCoverBottomRight | kCoverBottom)) == (kCoverBottomRight | kCoverBottom)) {
    add({iv.s() - 1, iv.row(iv.s()).d + 1});
  }
  auto out = Interval::try_make(s, std::move(rows));
  if (!out) throw std::logic_error("join of covers of " + iv.to_string() + " is not an interval");
  return *out;
}

/// The join over I of a nonempty set S of covers of I.
inline Interval join_covers(const Interval& iv, std::span<const Interval> selected, const Grid& g) {
  if (selected.empty()) throw PreconditionError("join_covers: empty cover set");
  const auto cov = cover_structure(iv, g);
  unsigned mask = 0;
  for (const Interval& c : selected) {
    auto it = std::find_if(cov.begin(), cov.end(), [&c](const Cover& x) { return x.interval == c; });
    if (it == cov.end()) {
      throw PreconditionError("join_covers: " + c.to_string() + " is not a cover of " + iv.to_string());
    }
    mask |= 1u << static_cast<unsigned>(it - cov.begin());
  }
  return join_of_covers(iv, cov, mask);
}

namespace detail {

// Connected components of a vertex set under grid adjacency, in row-major
// order of their first vertex.
inline std::vector<VertexSet> components(const VertexSet& set) {
  const Grid& g = set.grid();
  std::vector<VertexSet> out;
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex start : set.vertices()) {
    if (seen[g.index(start)] != 0) continue;
    VertexSet comp(g);
    std::vector<Vertex> stack{start};
    seen[g.index(start)] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.insert(v);
      const Vertex nbrs[] = {{v.row + 1, v.col}, {v.row - 1, v.col}, {v.row, v.col + 1}, {v.row, v.col - 1}};
      for (Vertex w : nbrs) {
        if (set.contains(w) && seen[g.index(w)] == 0) {
          seen[g.index(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace detail

/// The smallest interval containing S. Adds every vertex lying on a path
/// between two present vertices until nothing changes.
inline Interval convex_closure(const VertexSet& set) {
  if (set.empty()) throw PreconditionError("convex_closure: empty vertex set");
  if (detail::components(set).size() != 1) throw NoJoinError("convex_closure: vertex set is disconnected");
  const Grid& g = set.grid();
  VertexSet cur = set;
  for (bool changed = true; changed;) {
    changed = false;
    const auto present = cur.vertices();
    for (Vertex z : g.vertices()) {
      if (cur.contains(z)) continue;
      bool below = false, above = false;
      for (Vertex x : present) {
        below = below || precedes(x, z);
        above = above || precedes(z, x);
      }
      if (below && above) {
        cur.insert(z);
        changed = true;
      }
    }
  }
  auto out = interval_from_vertices(cur);
  if (!out) throw std::logic_error("convex closure is not a staircase");
  return *out;
}

inline Interval convex_closure(const VertexSet& set, int m, int n) {
  if (!(set.grid() == Grid(m, n))) throw PreconditionError("convex_closure: vertex set belongs to another grid");
  return convex_closure(set);
}

/// Connected components of I and J's common vertices, canonically ordered.
inline std::vector<Interval> intersection_components(const Interval& a, const Interval& b) {
  int m = std::max(a.t(), b.t());
  int n = 1;
  for (const RowSpan& r : a.rows()) n = std::max(n, r.d);
  for (const RowSpan& r : b.rows()) n = std::max(n, r.d);
  const Grid g(m, n);
  VertexSet common(g);
  for (Vertex v : a.vertices()) {
    if (b.contains(v)) common.insert(v);
  }
  std::vector<Interval> out;
  for (const VertexSet& comp : detail::components(common)) {
    auto iv = interval_from_vertices(comp);
    if (!iv) throw std::logic_error("intersection component is not a staircase");
    out.push_back(std::move(*iv));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The meet of J1 and J2 over a common lower bound I: the component of their
/// intersection that contains I.
inline Interval meet_over(const Interval& lower, const Interval& j1, const Interval& j2) {
  if (!leq(lower, j1) || !leq(lower, j2)) {
    throw PreconditionError("meet_over: " + lower.to_string() + " is not below both arguments");
  }
  for (Interval& c : intersection_components(j1, j2)) {
    if (leq(lower, c)) return std::move(c);
  }
  throw std::logic_error("meet_over: no component contains the lower bound");
}

namespace detail {

inline Grid enclosing_grid(const Interval& iv) {
  int n = 1;
  for (const RowSpan& r : iv.rows()) n = std::max(n, r.d);
  return Grid(iv.t(), n);
}

}  // namespace detail

/// Sources and sinks of I.
inline VertexSet ss_essential(const Interval& iv, const Grid& g) {
  VertexSet out(g);
  for (Vertex v : iv.vertices()) {
    const bool source = !iv.contains({v.row - 1, v.col}) && !iv.contains({v.row, v.col - 1});
    const bool sink = !iv.contains({v.row + 1, v.col}) && !iv.contains({v.row, v.col + 1});
    if (source || sink) out.insert(v);
  }
  return out;
}

inline VertexSet ss_essential(const Interval& iv) { return ss_essential(iv, detail::enclosing_grid(iv)); }

/// (pr1 I^ss x pr2 I^ss) restricted to I.
inline VertexSet cc_essential(const Interval& iv, const Grid& g) {
  const auto ss = ss_essential(iv, g).vertices();
  VertexSet out(g);
  for (Vertex a : ss) {
    for (Vertex b : ss) {
      const Vertex v{a.row, b.col};
      if (iv.contains(v)) out.insert(v);
    }
  }
  return out;
}

inline VertexSet cc_essential(const Interval& iv) { return cc_essential(iv, detail::enclosing_grid(iv)); }

}  // namespace intapprox

#endif  // INTAPPROX_INTERVAL_POSET_HPP
