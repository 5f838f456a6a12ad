#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qdisk/random_gen.hpp"
#include "qdisk/starprod.hpp"

using namespace qdisk;
using EQ = QSeries<ExactComplex>;

TEST_CASE("star product on generators") {
  EQ x1 = EQ::generator(2, 6, 1), x2 = EQ::generator(2, 6, 2);
  MultiIndex k11{1, 1};

  // x_2 * x_1 = e^{-ih} x^{(1,1)}: coefficient of h^m is (-i)^m / m!
  HSeries s = star(x2, x1, 4);
  ExactComplex term(1);
  for (int m = 0; m <= 4; ++m) {
    CHECK(s.coeff(m).coeff(k11) == term);
    CHECK(s.coeff(m).terms().size() == 1);
    term = term * ExactComplex(Rational(0), Rational(-1, m + 1));
  }

  // x_1 * x_2 has no h-dependence
  HSeries t = star(x1, x2, 4);
  CHECK(t.coeff(0).coeff(k11) == ExactComplex(1));
  for (int m = 1; m <= 4; ++m) CHECK(t.coeff(m).is_zero());

  // unit
  SeriesGen gen(1);
  EQ f = gen.q_series(2, 6, 4);
  CHECK(star(f, EQ::one(2, 6), 4) == HSeries::lift(f, 4));
  CHECK(star(EQ::one(2, 6), f, 4) == HSeries::lift(f, 4));
}

TEST_CASE("order-zero term is the commutative product, order one gives the bracket") {
  SeriesGen gen(2);
  QContext comm(3, ExactComplex(1));
  for (int it = 0; it < 100; ++it) {
    int n = static_cast<int>(gen.uniform(1, 3));
    QContext one(n, ExactComplex(1));
    EQ f = gen.q_series(n, 10, 4, 4);
    EQ g = gen.q_series(n, 10, 4, 4);

    HSeries fg = star(f, g, 2);
    CHECK(fg.coeff(0) == qmul(f, g, one));

    // h^1 coefficient of the star commutator equals i {f,g}
    HSeries commutator = star(f, g, 2) - star(g, f, 2);
    CHECK(commutator.coeff(1) == poisson(f, g).scaled(ExactComplex::i()));
  }
}

TEST_CASE("star associativity to the order cap") {
  SeriesGen gen(3);
  for (int it = 0; it < 60; ++it) {
    int n = static_cast<int>(gen.uniform(1, 3));
    EQ f = gen.q_series(n, 12, 3, 4);
    EQ g = gen.q_series(n, 12, 3, 4);
    EQ w = gen.q_series(n, 12, 3, 4);
    int N = 5;
    HSeries lhs = star(star(f, g, N), HSeries::lift(w, N));
    HSeries rhs = star(HSeries::lift(f, N), star(g, w, N));
    CHECK((lhs - rhs).is_zero());
  }
}

TEST_CASE("poisson bracket") {
  EQ x1 = EQ::generator(2, 6, 1), x2 = EQ::generator(2, 6, 2);

  CHECK(poisson(x1, x2) == EQ::monomial(2, 6, MultiIndex{1, 1}, ExactComplex(1)));

  // {x_1^2, x_2} = 2 x^{(2,1)}
  EQ x1sq = EQ::monomial(2, 6, MultiIndex{2, 0}, ExactComplex(1));
  CHECK(poisson(x1sq, x2) == EQ::monomial(2, 6, MultiIndex{2, 1}, ExactComplex(2)));

  SeriesGen gen(4);
  QContext one(3, ExactComplex(1));
  for (int it = 0; it < 100; ++it) {
    int n = static_cast<int>(gen.uniform(1, 3));
    QContext comm(n, ExactComplex(1));
    EQ f = gen.q_series(n, 12, 3, 4);
    EQ g = gen.q_series(n, 12, 3, 4);
    EQ h = gen.q_series(n, 12, 3, 4);

    // antisymmetry
    CHECK((poisson(f, g) + poisson(g, f)).is_zero());
    CHECK(poisson(f, f).is_zero());

    // Leibniz: {f, gh} = {f,g}h + g{f,h} (commutative product)
    EQ lhs = poisson(f, qmul(g, h, comm));
    EQ rhs = qmul(poisson(f, g), h, comm) + qmul(g, poisson(f, h), comm);
    CHECK(lhs == rhs);

    // Jacobi
    EQ jac = poisson(f, poisson(g, h)) + poisson(g, poisson(h, f)) + poisson(h, poisson(f, g));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("star specializes to the twisted product at q = e^{ih}") {
  EQ x1 = EQ::generator(2, 6, 1), x2 = EQ::generator(2, 6, 2);
  CHECK(star_fiber_compare(x2, x1, 0.3) <= 1e-12);
  CHECK(star_fiber_compare(x2, x1, 0.0) == 0.0);

  SeriesGen gen(5);
  for (int it = 0; it < 100; ++it) {
    int n = static_cast<int>(gen.uniform(1, 3));
    EQ f = gen.q_series(n, 8, 4, 4);
    EQ g = gen.q_series(n, 8, 4, 4);
    for (double h : {0.1, 1.0}) CHECK(star_fiber_compare(f, g, h) <= 1e-10);
  }
}

TEST_CASE("telescoping section words") {
  CHECK(u_section_check(MultiIndex{1, 1}, 3));
  CHECK(u_section_check(MultiIndex{4}, 4)); // single word, trivially
  for (int n = 1; n <= 3; ++n)
    for (const auto& k : multi_indices_up_to(n, 6)) CHECK(u_section_check(k, 4));
}

TEST_CASE("rieffel defect") {
  EQ x1 = EQ::generator(2, 6, 1), x2 = EQ::generator(2, 6, 2);

  // equal arguments commute: defect identically zero
  SeriesGen gen(6);
  for (double h : {0.5, 0.01}) {
    EQ f = gen.q_series(2, 8, 4, 4);
    CHECK(rieffel_defect(f, f, h, 0.5) == doctest::Approx(0.0));
  }

  // generators: defect is O(h); check the explicit small-h value
  double h = 1e-3, rho = 0.5;
  double d = rieffel_defect(x1, x2, h, rho);
  // |(1 - e^{-ih})/h - i| * w_q((1,1)) rho^2, with w_q = 1 on the unit circle
  std::complex<double> expct = (1.0 - std::exp(std::complex<double>(0, -h))) / h -
                               std::complex<double>(0, 1);
  CHECK(d == doctest::Approx(std::abs(expct) * rho * rho).epsilon(1e-9));

  // log-log slope over decades of h stays near 1 for random pairs
  for (int it = 0; it < 20; ++it) {
    EQ f = gen.q_series(2, 8, 3, 4);
    EQ g = gen.q_series(2, 8, 3, 4);
    std::vector<double> hs = {1e-1, 1e-2, 1e-3, 1e-4}, ds;
    for (double hv : hs) ds.push_back(rieffel_defect(f, g, hv, 0.5));
    if (ds.back() < 1e-14) continue; // commuting pair
    double slope = (std::log(ds.front()) - std::log(ds.back())) /
                   (std::log(hs.front()) - std::log(hs.back()));
    CHECK(slope >= 0.9);
  }
}
