#include <gtest/gtest.h>

#include <string>

#include "intapprox/intapprox.hpp"

using namespace intapprox;

namespace {

const char* const kFixture =
    "PMOD 1\n"
    "field 2\n"
    "grid 2 3\n"
    "dim 1 1 0\n"
    "dim 1 2 1\n"
    "dim 1 3 1\n"
    "dim 2 1 1\n"
    "dim 2 2 2\n"
    "dim 2 3 1\n"
    "map h 1 2\n"
    "1\n"
    "map h 2 1\n"
    "1\n"
    "1\n"
    "map h 2 2\n"
    "0 1\n"
    "map v 1 2\n"
    "0\n"
    "1\n"
    "map v 1 3\n"
    "1\n"
    "END\n";

std::string replace(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  if (pos == std::string::npos) throw std::logic_error("fixture text lacks '" + from + "'");
  return text.replace(pos, from.size(), to);
}

ParseError::Kind kind_of(const std::string& text) {
  try {
    parse_pmod(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  throw std::logic_error("document was accepted");
}

TEST(Pmod, PrintsFixtureCanonically) { EXPECT_EQ(print_pmod(example_negativedtilde()), kFixture); }

TEST(Pmod, RoundTrips) {
  EXPECT_EQ(parse_pmod(kFixture), example_negativedtilde());
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const FieldSpec f = trial % 3 == 0 ? FieldSpec(7) : FieldSpec(2);
    const PersistenceModule mod = trial % 2 == 0 ? random_module(1 + trial % 5, trial % 4, f, rng)
                                                 : random_interval_decomposable(2, 4, 5, f, rng, true).module;
    const std::string text = print_pmod(mod);
    EXPECT_EQ(parse_pmod(text), mod);
    EXPECT_EQ(print_pmod(parse_pmod(text)), text);
  }
  for (std::size_t l = 1; l <= 2; ++l) EXPECT_EQ(parse_pmod(print_pmod(buchet_module(l))), buchet_module(l));
}

TEST(Pmod, AcceptsCommentsBlankLinesAndAnyDimOrder) {
  std::string text = replace(kFixture, "grid 2 3\n", "grid 2 3\n# spaces\n\n   \n");
  text = replace(text, "dim 1 1 0\n", "");
  text = replace(text, "dim 2 3 1\n", "dim 2 3 1\ndim 1 1 0\n");
  text = replace(text, "map v 1 3\n", "  # last block\nmap v 1 3\n");
  EXPECT_EQ(parse_pmod(text), example_negativedtilde());
  std::string crlf;
  for (char c : std::string(kFixture)) crlf += c == '\n' ? std::string("\r\n") : std::string(1, c);
  EXPECT_EQ(parse_pmod(crlf), example_negativedtilde());
  EXPECT_EQ(parse_pmod(replace(kFixture, "END\n", "END")), example_negativedtilde());
}

TEST(Pmod, ThreeRowGridParses) {
  const PersistenceModule mod = interval_module(Grid(3, 2), Interval(1, {{2, 2}, {1, 2}, {1, 1}}));
  EXPECT_EQ(parse_pmod(print_pmod(mod)), mod);
}

TEST(Pmod, MissingDimNamesTheVertex) {
  try {
    parse_pmod(replace(kFixture, "dim 1 3 1\n", ""));
    FAIL() << "accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::Syntax);
    EXPECT_NE(std::string(e.what()).find("(1,3)"), std::string::npos) << e.what();
  }
}

TEST(Pmod, FlippedEntryReportsSquare) {
  try {
    parse_pmod(replace(kFixture, "map h 1 2\n1\n", "map h 1 2\n0\n"));
    FAIL() << "accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::Commutativity);
    EXPECT_NE(std::string(e.what()).find("square (1,2)"), std::string::npos) << e.what();
  }
}

TEST(Pmod, SyntaxErrorsCarryLineNumbers) {
  try {
    parse_pmod(replace(kFixture, "0 1\n", "0 x\n"));
    FAIL() << "accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 16u);
    EXPECT_NE(std::string(e.what()).find("line 16"), std::string::npos) << e.what();
  }
}

struct Rejection {
  const char* name;
  std::string text;
  ParseError::Kind kind;
};

TEST(Pmod, RejectionCorpus) {
  using K = ParseError::Kind;
  const std::string f = kFixture;
  const std::vector<Rejection> corpus{
      {"empty document", "", K::Syntax},
      {"wrong version", replace(f, "PMOD 1", "PMOD 2"), K::Syntax},
      {"missing field line", replace(f, "field 2\n", ""), K::Syntax},
      {"composite modulus", replace(f, "field 2", "field 4"), K::Syntax},
      {"empty grid", replace(f, "grid 2 3", "grid 0 3"), K::Syntax},
      {"grid arity", replace(f, "grid 2 3", "grid 2"), K::Syntax},
      {"missing dim", replace(f, "dim 2 2 2\n", ""), K::Syntax},
      {"duplicate dim", replace(f, "dim 1 2 1\n", "dim 1 2 1\ndim 1 2 1\n"), K::Syntax},
      {"dim outside grid", replace(f, "dim 2 3 1\n", "dim 2 3 1\ndim 3 1 1\n"), K::Syntax},
      {"negative dim", replace(f, "dim 1 1 0", "dim 1 1 -1"), K::Syntax},
      {"dim after maps", replace(replace(f, "dim 2 3 1\n", ""), "END", "dim 2 3 1\nEND"), K::Syntax},
      {"unknown map kind", replace(f, "map h 1 2", "map d 1 2"), K::Syntax},
      {"arrow leaves grid", replace(f, "END", "map h 1 3\n1\nEND"), K::Syntax},
      {"block on zero-dimensional arrow", replace(f, "END", "map h 1 1\nEND"), K::Shape},
      {"wrong entry count", replace(f, "0 1\n", "0 1 1\n"), K::Shape},
      {"entry out of range", replace(f, "0 1\n", "0 2\n"), K::Syntax},
      {"non-integer entry", replace(f, "0 1\n", "0 x\n"), K::Syntax},
      {"duplicate block", replace(f, "END", "map v 1 3\n1\nEND"), K::Syntax},
      {"missing block", replace(f, "map v 1 3\n1\n", ""), K::Syntax},
      {"truncated block", "PMOD 1\nfield 2\ngrid 1 2\ndim 1 1 2\ndim 1 2 2\nmap h 1 1\n1 0\n", K::Syntax},
      {"missing END", replace(f, "END\n", ""), K::Syntax},
      {"content after END", f + "map h 1 2\n1\n", K::Syntax},
      {"non-commuting square", replace(f, "map v 1 3\n1\n", "map v 1 3\n0\n"), K::Commutativity},
  };
  EXPECT_GE(corpus.size(), 20u);
  for (const Rejection& r : corpus) {
    ParseError::Kind got{};
    ASSERT_NO_THROW(got = kind_of(r.text)) << r.name;
    EXPECT_EQ(got, r.kind) << r.name;
  }
}

}  // namespace
