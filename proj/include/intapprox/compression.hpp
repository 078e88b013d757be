#ifndef INTAPPROX_COMPRESSION_HPP
#define INTAPPROX_COMPRESSION_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
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

enum class SsKind { Point, Arrow, TwoSourcesOneSink, OneSourceTwoSinks, TwoSourcesTwoSinks };

inline const char* to_string(SsKind k) {
  switch (k) {
    case SsKind::Point: return "Point";
    case SsKind::Arrow: return "Arrow";
    case SsKind::TwoSourcesOneSink: return "TwoSourcesOneSink";
    case SsKind::OneSourceTwoSinks: return "OneSourceTwoSinks";
    case SsKind::TwoSourcesTwoSinks: return "TwoSourcesTwoSinks";
  }
  return "?";
}

/// Source/sink census of an interval with at most two rows.
///
/// Point and Arrow (rectangles) use `source` and `sink`. The other kinds use
/// s1, t1 for vertices on the lower row and s2, t2 for the upper row; roles
/// a kind does not have are left at their defaults.
struct SsShape {
  SsKind kind = SsKind::Point;
  Vertex source, sink;
  Vertex s1, s2, t1, t2;

  friend bool operator==(const SsShape&, const SsShape&) = default;
};

inline SsShape classify_ss(const Interval& iv) {
  if (iv.t() - iv.s() > 1) {
    throw UnsupportedError("ss classification needs an interval with at most two rows, got " + iv.to_string());
  }
  SsShape out;
  const int lo = iv.s();
  if (iv.is_rectangle()) {
    out.source = {lo, iv.row(lo).b};
    out.sink = {iv.t(), iv.row(lo).d};
    out.kind = out.source == out.sink ? SsKind::Point : SsKind::Arrow;
    return out;
  }
  const RowSpan r1 = iv.row(lo);
  const RowSpan r2 = iv.row(lo + 1);
  out.s1 = {lo, r1.b};
  out.t2 = {lo + 1, r2.d};
  if (r2.b < r1.b) out.s2 = {lo + 1, r2.b};
  if (r2.d < r1.d) out.t1 = {lo, r1.d};
  if (r2.b < r1.b && r2.d < r1.d) {
    out.kind = SsKind::TwoSourcesTwoSinks;
  } else if (r2.b < r1.b) {
    out.kind = SsKind::TwoSourcesOneSink;
  } else {
    out.kind = SsKind::OneSourceTwoSinks;
  }
  return out;
}

/// Arrows of the ss-compressed quiver: one per comparable (source, sink) pair.
inline std::vector<std::pair<Vertex, Vertex>> ss_arrows(const SsShape& sh) {
  switch (sh.kind) {
    case SsKind::Point: return {};
    case SsKind::Arrow: return {{sh.source, sh.sink}};
    case SsKind::TwoSourcesOneSink: return {{sh.s1, sh.t2}, {sh.s2, sh.t2}};
    case SsKind::OneSourceTwoSinks: return {{sh.s1, sh.t1}, {sh.s1, sh.t2}};
    case SsKind::TwoSourcesTwoSinks: return {{sh.s1, sh.t1}, {sh.s1, sh.t2}, {sh.s2, sh.t2}};
  }
  return {};
}

/// A representation of a small quiver given by an explicit arrow list.
struct QuiverRep {
  FieldSpec field;
  std::vector<Vertex> vertices;  // labels only; arrows refer to positions
  std::vector<std::size_t> dims;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  std::vector<FFMatrix> maps;

  void check() const {
    if (dims.size() != vertices.size()) throw ShapeError("quiver representation: one dimension per vertex");
    if (maps.size() != arrows.size()) throw ShapeError("quiver representation: one matrix per arrow");
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      const auto [u, w] = arrows[a];
      if (u >= dims.size() || w >= dims.size()) throw ShapeError("quiver representation: arrow endpoint out of range");
      if (maps[a].rows() != dims[w] || maps[a].cols() != dims[u]) {
        throw ShapeError("quiver representation: arrow " + std::to_string(a) + " has the wrong shape");
      }
    }
  }

  std::size_t total_dim() const noexcept {
    std::size_t t = 0;
    for (std::size_t d : dims) t += d;
    return t;
  }
};

/// dim Hom(A, B): the families (f_v) with f_w A(a) = B(a) f_u for each arrow
/// a: u -> w, counted as the nullity of the stacked linear system.
inline std::size_t hom_dim(const QuiverRep& a, const QuiverRep& b) {
  a.check();
  b.check();
  if (a.dims.size() != b.dims.size() || a.arrows != b.arrows) {
    throw ShapeError("hom_dim: representations of different quivers");
  }
  if (!(a.field == b.field)) throw ShapeError("hom_dim: representations over different fields");
  const std::size_t nv = a.dims.size();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + b.dims[v] * a.dims[v];
  const std::size_t unknowns = offset[nv];
  if (unknowns == 0) return 0;

  std::size_t equations = 0;
  for (const auto& [u, w] : a.arrows) equations += b.dims[w] * a.dims[u];
  const FieldSpec f = a.field;
  FFMatrix sys(equations, unknowns, f);
  // Unknown f_v(r, c) lives at offset[v] + r * dimA(v) + c.
  std::size_t row = 0;
  for (std::size_t k = 0; k < a.arrows.size(); ++k) {
    const auto [u, w] = a.arrows[k];
    const FFMatrix& am = a.maps[k];
    const FFMatrix& bm = b.maps[k];
    for (std::size_t r = 0; r < b.dims[w]; ++r) {
      for (std::size_t c = 0; c < a.dims[u]; ++c, ++row) {
        for (std::size_t j = 0; j < a.dims[w]; ++j) {
          auto& e = sys.at(row, offset[w] + r * a.dims[w] + j);
          e = f.add(e, am(j, c));
        }
        for (std::size_t j = 0; j < b.dims[u]; ++j) {
          auto& e = sys.at(row, offset[u] + j * a.dims[u] + c);
          e = f.sub(e, bm(r, j));
        }
      }
    }
  }
  return unknowns - rank(sys);
}

/// Restriction of M to the vertices E with composite path maps on `arrows`.
/// Vertices keep E's row-major order.
inline QuiverRep restrict(const PersistenceModule& mod, const PathMapTable& table, const VertexSet& keep,
                          const std::vector<std::pair<Vertex, Vertex>>& arrows) {
  QuiverRep out;
  out.field = mod.field();
  out.vertices = keep.vertices();
  for (Vertex v : out.vertices) out.dims.push_back(mod.dim(v));
  auto pos = [&out](Vertex v) -> std::size_t {
    auto it = std::find(out.vertices.begin(), out.vertices.end(), v);
    if (it == out.vertices.end()) throw PreconditionError("restrict: arrow endpoint " + to_string(v) + " not kept");
    return static_cast<std::size_t>(it - out.vertices.begin());
  };
  for (const auto& [src, dst] : arrows) {
    if (!precedes(src, dst)) throw PreconditionError("restrict: arrow endpoints are not comparable");
    out.arrows.emplace_back(pos(src), pos(dst));
    out.maps.push_back(table.at(src, dst));
  }
  return out;
}

/// The middle and end terms B, C of the almost split sequence starting at the
/// ss-compressed interval of a two-sources-two-sinks shape, laid out like
/// restrict() lays out that shape (vertices s1, t1, s2, t2; arrows
/// s1->t1, s1->t2, s2->t2).
struct AlmostSplitFixtures {
  QuiverRep b;
  QuiverRep c;
};

inline AlmostSplitFixtures almost_split_fixtures(const SsShape& sh, FieldSpec field = FieldSpec{}) {
  if (sh.kind != SsKind::TwoSourcesTwoSinks) {
    throw PreconditionError(std::string("almost_split_fixtures: shape ") + to_string(sh.kind) +
                            " does not use an almost split sequence");
  }
  AlmostSplitFixtures out;
  const std::vector<Vertex> verts{sh.s1, sh.t1, sh.s2, sh.t2};
  const std::vector<std::pair<std::size_t, std::size_t>> arrows{{0, 1}, {0, 3}, {2, 3}};
  out.b = QuiverRep{field, verts, {2, 1, 1, 1}, arrows,
                    {FFMatrix::from_rows(field, {{0, 1}}), FFMatrix::from_rows(field, {{1, 0}}),
                     FFMatrix::identity(1, field)}};
  out.c = QuiverRep{field, verts, {1, 0, 0, 0}, arrows,
                    {FFMatrix(0, 1, field), FFMatrix(0, 1, field), FFMatrix(0, 0, field)}};
  out.b.check();
  out.c.check();
  return out;
}

namespace detail {

inline void require_low_grid(const PersistenceModule& mod) {
  if (mod.grid().m > 2) {
    throw UnsupportedError("ss-compressed multiplicities are implemented for grids with at most two rows");
  }
}

}  // namespace detail

/// The ss-compressed multiplicity of I in M from the closed-form rank formulas.
inline std::int64_t ss_compressed_multiplicity(const PersistenceModule& mod, const PathMapTable& table,
                                               const Interval& iv) {
  detail::require_low_grid(mod);
  if (!iv.fits(mod.grid())) throw PreconditionError("interval " + iv.to_string() + " exceeds the grid");
  const SsShape sh = classify_ss(iv);
  auto rk = [](const FFMatrix& m) { return static_cast<std::int64_t>(rank(m)); };
  auto prk = [&table](Vertex a, Vertex b) { return static_cast<std::int64_t>(table.rank(a, b)); };
  switch (sh.kind) {
    case SsKind::Point:
    case SsKind::Arrow:
      return prk(sh.source, sh.sink);
    case SsKind::TwoSourcesOneSink:
      return prk(sh.s2, sh.t2) + prk(sh.s1, sh.t2) - rk(hstack(table.at(sh.s2, sh.t2), table.at(sh.s1, sh.t2)));
    case SsKind::OneSourceTwoSinks:
      return prk(sh.s1, sh.t2) + prk(sh.s1, sh.t1) - rk(vstack(table.at(sh.s1, sh.t2), table.at(sh.s1, sh.t1)));
    case SsKind::TwoSourcesTwoSinks: {
      const FFMatrix& a = table.at(sh.s2, sh.t2);
      const FFMatrix& b = table.at(sh.s1, sh.t2);
      const FFMatrix& c = table.at(sh.s1, sh.t1);
      return rk(block2x2(a, b, ZeroBlock{}, c)) + prk(sh.s1, sh.t2) - rk(vstack(b, c)) - rk(hstack(a, b));
    }
  }
  throw std::logic_error("unreachable");
}

inline std::int64_t ss_compressed_multiplicity(const PersistenceModule& mod, const Interval& iv) {
  return ss_compressed_multiplicity(mod, PathMapTable(mod), iv);
}

enum class Compression { ss, cc, tot };

/// Compressed multiplicity by the chosen compression. cc and tot are only
/// available on rectangles, where all three coincide with the rank invariant.
inline std::int64_t compressed_multiplicity(const PersistenceModule& mod, const PathMapTable& table,
                                            const Interval& iv, Compression method) {
  if (method == Compression::ss) return ss_compressed_multiplicity(mod, table, iv);
  if (!iv.is_rectangle()) {
    throw UnsupportedError("cc and tot compressed multiplicities are only computed for rectangles");
  }
  if (!iv.fits(mod.grid())) throw PreconditionError("interval " + iv.to_string() + " exceeds the grid");
  return static_cast<std::int64_t>(table.rank({iv.s(), iv.row(iv.s()).b}, {iv.t(), iv.row(iv.s()).d}));
}

/// Work counters for one run of the compressed-multiplicity pipeline.
struct PipelineStats {
  std::size_t intervals = 0;
  std::size_t path_products = 0;
  std::size_t path_pairs = 0;
};

namespace detail {

inline unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Calls body(k) for k in [0, count) on up to `threads` workers. The first
// exception thrown by any worker is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  threads = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    try {
      for (std::size_t k = next.fetch_add(1); k < count; k = next.fetch_add(1)) body(k);
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next.store(count);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

/// The ss-compressed multiplicity of every interval of M's grid.
/// `threads` = 0 uses the hardware concurrency; the result does not depend on it.
inline IntervalFunction compressed_multiplicity_function(const PersistenceModule& mod, const PathMapTable& table,
                                                         unsigned threads = 0, PipelineStats* stats = nullptr) {
  detail::require_low_grid(mod);
  IntervalFunction out(mod.grid());
  const IntervalCatalog& cat = out.catalog();
  std::vector<std::int64_t> values(cat.size(), 0);
  detail::parallel_for(cat.size(), threads,
                       [&](std::size_t k) { values[k] = ss_compressed_multiplicity(mod, table, cat[k]); });
  for (std::size_t k = 0; k < values.size(); ++k) out.at_index(k) = values[k];
  if (stats != nullptr) {
    stats->intervals += cat.size();
    stats->path_products += table.products();
    stats->path_pairs += table.size();
  }
  return out;
}

inline IntervalFunction compressed_multiplicity_function(const PersistenceModule& mod, unsigned threads = 0,
                                                         PipelineStats* stats = nullptr) {
  detail::require_low_grid(mod);
  return compressed_multiplicity_function(mod, PathMapTable(mod), threads, stats);
}

}  // namespace intapprox

#endif  // INTAPPROX_COMPRESSION_HPP
