#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "qdisk/io.hpp"
#include "qdisk/random_gen.hpp"

using namespace qdisk;

TEST_CASE("free series round trip") {
  SeriesGen gen(70);
  for (int it = 0; it < 50; ++it) {
    auto f = gen.free_series(3, 6, 5);
    std::istringstream in(serialize(f));
    CHECK(peek_kind(in) == SeriesKind::free_series);
    auto g = parse_free_series(in);
    CHECK(g.terms() == f.terms());
    CHECK(g.alphabet() == f.alphabet());
    CHECK(g.degree_cap() == f.degree_cap());
  }
}

TEST_CASE("q series round trip") {
  SeriesGen gen(71);
  ExactComplex q(Rational(3, 5), Rational(4, 5));
  for (int it = 0; it < 50; ++it) {
    auto f = gen.q_series(2, 6, 5);
    std::istringstream in(serialize(f, q));
    CHECK(peek_kind(in) == SeriesKind::q_series);
    auto parsed = parse_q_series(in);
    CHECK(parsed.series == f);
    CHECK(parsed.q == q);
  }
}

TEST_CASE("defo series round trip") {
  SeriesGen gen(72);
  for (int it = 0; it < 50; ++it) {
    auto f = gen.defo_series(2, 6, 30, 5, 4, 10);
    std::istringstream in(serialize(f));
    CHECK(peek_kind(in) == SeriesKind::defo_series);
    CHECK(parse_defo_series(in) == f);
  }
}

TEST_CASE("parsing tolerates blank lines, comments, and float coefficients") {
  std::istringstream in(
      "# a comment\n"
      "freeseries n=2 cap=4\n"
      "\n"
      "1/2+1/3*i [1,2]\n"
      "(0.25,-1) [2]\n");
  auto f = parse_free_series(in);
  CHECK(f.coeff(Word(2, {1, 2})) == ExactComplex(Rational(1, 2), Rational(1, 3)));
  CHECK(f.coeff(Word(2, {2})) == ExactComplex(Rational(1, 4), Rational(-1)));
}

TEST_CASE("parse errors carry line numbers") {
  std::istringstream bad_header("fseries n=2 cap=4\n");
  CHECK_THROWS_AS(parse_free_series(bad_header), parse_error);

  std::istringstream bad_term(
      "freeseries n=2 cap=4\n"
      "1/2 [1,5]\n");
  try {
    parse_free_series(bad_term);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line_number == 2);
  }

  std::istringstream over_cap(
      "qseries n=2 cap=2 q=1/2\n"
      "1 (2,1)\n");
  CHECK_THROWS_AS(parse_q_series(over_cap), parse_error);

  std::istringstream zero_q("qseries n=2 cap=2 q=0\n");
  CHECK_THROWS_AS(parse_q_series(zero_q), parse_error);

  std::istringstream missing_p(
      "defoseries n=2 cap=4 zwin=5\n"
      "1 (1,1)\n");
  CHECK_THROWS_AS(parse_defo_series(missing_p), parse_error);
}

TEST_CASE("kind detection rejects unknown headers") {
  std::istringstream in("garbage n=1\n");
  CHECK_THROWS_AS(peek_kind(in), parse_error);
}

TEST_CASE("empty series serialize to header only and parse back") {
  FreeSeries<ExactComplex> f(2, 3);
  std::istringstream in(serialize(f));
  CHECK(parse_free_series(in).is_zero());
}
