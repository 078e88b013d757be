#ifndef INTAPPROX_PMOD_HPP
#define INTAPPROX_PMOD_HPP

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "intapprox/errors.hpp"
#include "intapprox/field.hpp"
#include "intapprox/grid.hpp"
#include "intapprox/matrix.hpp"
#include "intapprox/module.hpp"

// PMOD text format, one directive per line:
//
//   PMOD 1
//   field <p>
//   grid <m> <n>
//   dim <i> <j> <k>          one per vertex, before any map
//   map h|v <i> <j>          followed by one line per codomain dimension,
//   <residues...>            each with one entry per domain dimension
//   END
//
// Blank lines and lines starting with '#' are ignored. Arrows with a
// zero-dimensional end are omitted; every other arrow must appear once.

namespace intapprox {

namespace detail {

struct PmodLine {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

inline std::vector<PmodLine> pmod_lines(std::string_view text) {
  std::vector<PmodLine> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    PmodLine pl{number, {}};
    std::istringstream ss{std::string(line)};
    for (std::string tok; ss >> tok;) pl.tokens.push_back(tok);
    out.push_back(std::move(pl));
    if (end == text.size()) break;
  }
  return out;
}

inline std::int64_t pmod_int(const std::string& tok, std::size_t line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(ParseError::Kind::Syntax, line, "expected an integer, got '" + tok + "'");
  }
  return v;
}

}  // namespace detail

/// Parses and validates a PMOD document. Throws ParseError.
inline PersistenceModule parse_pmod(std::string_view text) {
  using Kind = ParseError::Kind;
  const auto lines = detail::pmod_lines(text);
  std::size_t at = 0;
  auto syntax = [](std::size_t line, const std::string& why) { return ParseError(Kind::Syntax, line, why); };
  auto next = [&](const char* what) -> const detail::PmodLine& {
    if (at >= lines.size()) throw syntax(0, std::string("unexpected end of input, expected ") + what);
    return lines[at++];
  };
  auto expect_fields = [&](const detail::PmodLine& l, const char* head, std::size_t count) {
    if (l.tokens[0] != head) throw syntax(l.number, std::string("expected '") + head + "', got '" + l.tokens[0] + "'");
    if (l.tokens.size() != count) {
      throw syntax(l.number, std::string("'") + head + "' takes " + std::to_string(count - 1) + " arguments");
    }
  };

  const auto& header = next("header");
  if (header.tokens.size() != 2 || header.tokens[0] != "PMOD" || header.tokens[1] != "1") {
    throw syntax(header.number, "expected header 'PMOD 1'");
  }

  const auto& fl = next("field");
  expect_fields(fl, "field", 2);
  const std::int64_t p = detail::pmod_int(fl.tokens[1], fl.number);
  std::optional<FieldSpec> field;
  try {
    if (p < 0 || p > static_cast<std::int64_t>(FieldSpec::kMaxPrime)) throw std::invalid_argument("range");
    field = FieldSpec(static_cast<std::uint32_t>(p));
  } catch (const std::invalid_argument&) {
    throw syntax(fl.number, "field modulus must be a prime below 65536");
  }

  const auto& gl = next("grid");
  expect_fields(gl, "grid", 3);
  const std::int64_t m = detail::pmod_int(gl.tokens[1], gl.number);
  const std::int64_t n = detail::pmod_int(gl.tokens[2], gl.number);
  if (m < 1 || n < 1 || m > 1024 || n > 1024) throw syntax(gl.number, "grid dimensions must lie in 1..1024");
  const Grid grid(static_cast<int>(m), static_cast<int>(n));

  auto read_vertex = [&](const detail::PmodLine& l, std::size_t i_tok) {
    const std::int64_t i = detail::pmod_int(l.tokens[i_tok], l.number);
    const std::int64_t j = detail::pmod_int(l.tokens[i_tok + 1], l.number);
    const Vertex v{static_cast<int>(i), static_cast<int>(j)};
    if (i < 1 || j < 1 || i > m || j > n) throw syntax(l.number, "vertex " + to_string(v) + " is outside the grid");
    return v;
  };

  std::vector<std::optional<std::size_t>> dims(grid.vertex_count());
  while (at < lines.size() && lines[at].tokens[0] == "dim") {
    const auto& l = lines[at++];
    expect_fields(l, "dim", 4);
    const Vertex v = read_vertex(l, 1);
    const std::int64_t k = detail::pmod_int(l.tokens[3], l.number);
    if (k < 0 || k > 100000) throw syntax(l.number, "dimension must lie in 0..100000");
    auto& slot = dims[grid.index(v)];
    if (slot) throw syntax(l.number, "duplicate dim for vertex " + to_string(v));
    slot = static_cast<std::size_t>(k);
  }
  const std::size_t after_dims = at < lines.size() ? lines[at].number : 0;
  std::vector<std::size_t> dimv;
  for (Vertex v : grid.vertices()) {
    if (!dims[grid.index(v)]) throw syntax(after_dims, "missing dim for vertex " + to_string(v));
    dimv.push_back(*dims[grid.index(v)]);
  }
  PersistenceModule mod(grid, *field, dimv);

  std::vector<char> seen_h(grid.vertex_count(), 0), seen_v(grid.vertex_count(), 0);
  bool ended = false;
  while (at < lines.size()) {
    const auto& l = lines[at++];
    if (l.tokens[0] == "END") {
      if (l.tokens.size() != 1) throw syntax(l.number, "'END' takes no arguments");
      ended = true;
      break;
    }
    if (l.tokens[0] == "dim") throw syntax(l.number, "dim lines must precede all maps");
    expect_fields(l, "map", 4);
    const bool horizontal = l.tokens[1] == "h";
    if (!horizontal && l.tokens[1] != "v") throw syntax(l.number, "map kind must be 'h' or 'v'");
    const Vertex src = read_vertex(l, 2);
    const Vertex dst = horizontal ? Vertex{src.row, src.col + 1} : Vertex{src.row + 1, src.col};
    if (!grid.contains(dst)) throw syntax(l.number, "arrow from " + to_string(src) + " leaves the grid");
    auto& seen = horizontal ? seen_h : seen_v;
    if (seen[grid.index(src)] != 0) throw syntax(l.number, "duplicate map block for this arrow");
    seen[grid.index(src)] = 1;
    const std::size_t rows = mod.dim(dst), cols = mod.dim(src);
    if (rows == 0 || cols == 0) {
      throw ParseError(Kind::Shape, l.number, "arrow " + to_string(src) + " -> " + to_string(dst) +
                                                  " has a zero-dimensional end and must be omitted");
    }
    FFMatrix a(rows, cols, *field);
    for (std::size_t r = 0; r < rows; ++r) {
      if (at >= lines.size()) throw syntax(0, "unexpected end of input inside a map block");
      const auto& row = lines[at++];
      if (row.tokens.size() != cols) {
        throw ParseError(Kind::Shape, row.number,
                         "expected " + std::to_string(cols) + " entries, got " + std::to_string(row.tokens.size()));
      }
      for (std::size_t c = 0; c < cols; ++c) {
        const std::int64_t e = detail::pmod_int(row.tokens[c], row.number);
        if (e < 0 || e >= static_cast<std::int64_t>(field->p())) {
          throw syntax(row.number, "entry " + row.tokens[c] + " is not a residue mod " + std::to_string(field->p()));
        }
        a.at(r, c) = static_cast<Residue>(e);
      }
    }
    if (horizontal) {
      mod.set_hmap(src, std::move(a));
    } else {
      mod.set_vmap(src, std::move(a));
    }
  }
  if (!ended) throw syntax(0, "missing END");
  if (at < lines.size()) throw syntax(lines[at].number, "content after END");

  for (Vertex v : grid.vertices()) {
    const std::size_t k = grid.index(v);
    if (v.col < grid.n && seen_h[k] == 0 && mod.dim(v) != 0 && mod.dim({v.row, v.col + 1}) != 0) {
      throw syntax(0, "missing map h " + std::to_string(v.row) + " " + std::to_string(v.col));
    }
    if (v.row < grid.m && seen_v[k] == 0 && mod.dim(v) != 0 && mod.dim({v.row + 1, v.col}) != 0) {
      throw syntax(0, "missing map v " + std::to_string(v.row) + " " + std::to_string(v.col));
    }
  }
  if (auto bad = validate(mod)) {
    throw ParseError(Kind::Commutativity, 0, "square " + to_string(bad->square) + " does not commute");
  }
  return mod;
}

/// Canonical PMOD text: dims row-major from the bottom row, then horizontal
/// maps, then vertical maps, each in row-major order.
inline std::string print_pmod(const PersistenceModule& mod) {
  const Grid& g = mod.grid();
  std::string out = "PMOD 1\nfield " + std::to_string(mod.field().p()) + "\ngrid " + std::to_string(g.m) + " " +
                    std::to_string(g.n) + "\n";
  for (Vertex v : g.vertices()) {
    out += "dim " + std::to_string(v.row) + " " + std::to_string(v.col) + " " + std::to_string(mod.dim(v)) + "\n";
  }
  auto emit = [&out](const char* kind, Vertex v, const FFMatrix& a) {
    if (a.empty()) return;
    out += std::string("map ") + kind + " " + std::to_string(v.row) + " " + std::to_string(v.col) + "\n";
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        if (c != 0) out += ' ';
        out += std::to_string(a(r, c));
      }
      out += '\n';
    }
  };
  for (Vertex v : g.vertices()) {
    if (v.col < g.n) emit("h", v, mod.hmap(v));
  }
  for (Vertex v : g.vertices()) {
    if (v.row < g.m) emit("v", v, mod.vmap(v));
  }
  return out + "END\n";
}

}  // namespace intapprox

#endif  // INTAPPROX_PMOD_HPP
