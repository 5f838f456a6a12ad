#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "qdisk/deformation.hpp"
#include "qdisk/random_gen.hpp"

using namespace qdisk;
using ED = DefoSeries<ExactComplex>;
using EQ = QSeries<ExactComplex>;

TEST_CASE("omega clamp") {
  MultiIndex k11{1, 1};
  CHECK(omega(k11, -1) == 0);  // -1 + sigma(k,k) = 0
  CHECK(omega(k11, 2) == 2);   // nonnegative p passes through
  CHECK(omega(k11, -3) == -2); // -3 + 1 = -2 still negative
  CHECK(omega(MultiIndex::zero(2), -5) == -5);
  CHECK(omega(MultiIndex{3, 2}, -4) == 0); // sigma = 6 covers it

  // |omega(k,p)| = min |lambda| over [p, p + sigma(k,k)], exhaustively
  for (int n = 1; n <= 3; ++n)
    for (const auto& k : multi_indices_up_to(n, 4))
      for (long p = -20; p <= 20; ++p) {
        long lo = p, hi = p + sigma(k, k);
        long best = std::min(std::labs(lo), std::labs(hi));
        if (lo <= 0 && 0 <= hi) best = 0;
        CHECK(std::labs(omega(k, p)) == best);
      }
}

TEST_CASE("z-twisted product") {
  ED x1 = ED::generator(2, 6, 10, 1), x2 = ED::generator(2, 6, 10, 2);
  ED z = ED::z_power(2, 6, 10, 1), zi = ED::z_power(2, 6, 10, -1);

  // x_2 x_1 = x^{(1,1)} z^{-1}
  ED p = dmul(x2, x1);
  CHECK(p.coeff({MultiIndex{1, 1}, -1}) == ExactComplex(1));
  CHECK(p.terms().size() == 1);

  // x_1 x_2 = x^{(1,1)}
  CHECK(dmul(x1, x2).coeff({MultiIndex{1, 1}, 0}) == ExactComplex(1));

  // z z^{-1} = 1
  CHECK(dmul(z, zi) == ED::one(2, 6, 10));

  // x_1 x_2 = z x_2 x_1, and z is central
  CHECK(dmul(x1, x2) == dmul(z, dmul(x2, x1)));
  CHECK(dmul(z, x1) == dmul(x1, z));
  CHECK(dmul(z, x2) == dmul(x2, z));

  // window truncation flag
  ED zp = ED::z_power(2, 6, 2, 2);
  ED over = dmul(zp, zp);
  CHECK(over.is_zero());
  CHECK(over.truncated());
}

TEST_CASE("deformation norm") {
  // x^{(1,1)} z^{-1} has omega = 0, so tau drops out
  ED a(2, 4, 10);
  a.set({MultiIndex{1, 1}, -1}, ExactComplex(1));
  CHECK(dnorm(a, 0.7, 3.0) == doctest::Approx(0.49));

  // z^p costs tau^|p|
  for (long pz : {-3L, 0L, 4L})
    CHECK(dnorm(ED::z_power(2, 4, 10, pz), 0.7, 3.0) ==
          doctest::Approx(std::pow(3.0, std::labs(pz))));

  CHECK_THROWS_AS(dnorm(a, 0.0, 2.0), error);
  CHECK_THROWS_AS(dnorm(a, 1.0, 0.5), error);
}

TEST_CASE("dnorm submultiplicative on monomials, exhaustive") {
  // integer-exponent comparison: |omega(k+l, p+s-sigma(l,k))| <= |omega(k,p)| + |omega(l,s)|
  for (const auto& k : multi_indices_up_to(2, 4))
    for (const auto& l : multi_indices_up_to(2, 4))
      for (long p = -8; p <= 8; ++p)
        for (long s = -8; s <= 8; ++s) {
          long lhs = std::labs(omega(k + l, p + s - sigma(l, k)));
          CHECK(lhs <= std::labs(omega(k, p)) + std::labs(omega(l, s)));
        }
}

TEST_CASE("dnorm submultiplicative on random series") {
  SeriesGen gen(303);
  for (int it = 0; it < 200; ++it) {
    int n = static_cast<int>(gen.uniform(1, 3));
    ED a = gen.defo_series(n, 8, 60, 4, 4, 8);
    ED b = gen.defo_series(n, 8, 60, 4, 4, 8);
    ED ab = dmul(a, b);
    REQUIRE_FALSE(ab.truncated());
    for (double rho : {0.5, 1.5})
      for (double tau : {1.0, 2.5})
        CHECK(dnorm(ab, rho, tau) <= dnorm(a, rho, tau) * dnorm(b, rho, tau) * (1 + 1e-9) + 1e-15);
  }
}

TEST_CASE("inversion-targeted words") {
  // pinned: k=(2,1)
  CHECK(alpha_with_inversions(MultiIndex{2, 1}, 0) == delta_word(MultiIndex{2, 1}));
  CHECK(alpha_with_inversions(MultiIndex{2, 1}, 1) == Word(2, {1, 2, 1}));
  CHECK(alpha_with_inversions(MultiIndex{2, 1}, 2) == Word(2, {2, 1, 1}));

  CHECK_THROWS_AS(alpha_with_inversions(MultiIndex{2, 1}, 3), error);
  CHECK_THROWS_AS(alpha_with_inversions(MultiIndex{2, 1}, -1), error);

  // exhaustive: every reachable inversion count, with bounded adjacency stat
  for (int n = 1; n <= 4; ++n)
    for (const auto& k : multi_indices_up_to(n, 6))
      for (long m = 0; m <= sigma(k, k); ++m) {
        Word w = alpha_with_inversions(k, m);
        WordStats st = word_stats(w);
        CHECK(st.p == k);
        CHECK(st.m == m);
        CHECK(st.s <= n + 2);
      }
}

TEST_CASE("canonical split and rebuild") {
  // x^{(1,1)} z^{-1}: omega = 0, so the word must carry one inversion
  ED a(2, 4, 10);
  a.set({MultiIndex{1, 1}, -1}, ExactComplex(1));
  auto terms = canonical_split(a);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].z_exponent == 0);
  CHECK(terms[0].word == Word(2, {2, 1}));

  // nonnegative p: omega = p and the word is ascending
  ED b(2, 4, 10);
  b.set({MultiIndex{2, 1}, 2}, ExactComplex(Rational(1, 3)));
  auto tb = canonical_split(b);
  REQUIRE(tb.size() == 1);
  CHECK(tb[0].z_exponent == 2);
  CHECK(tb[0].word == delta_word(MultiIndex{2, 1}));

  // round trip on random series
  SeriesGen gen(404);
  for (int it = 0; it < 200; ++it) {
    int n = static_cast<int>(gen.uniform(1, 3));
    ED f = gen.defo_series(n, 6, 40, 5, 4, 12);
    CHECK(rebuild_from_split(n, 6, 40, canonical_split(f)) == f);
  }
}

TEST_CASE("fiber evaluation") {
  QContext ctx(2, ExactComplex(Rational(1, 2)));

  // x^{(1,1)} z^{-1} at q -> q^{-1} x^{(1,1)}
  ED a(2, 4, 10);
  a.set({MultiIndex{1, 1}, -1}, ExactComplex(1));
  EQ fa = fiber_eval(a, ctx);
  CHECK(fa.coeff(MultiIndex{1, 1}) == ctx.q.pow(-1));

  // z - q0 vanishes at q = q0
  ED zm = ED::z_power(2, 4, 10, 1);
  zm.add_to({MultiIndex::zero(2), 0}, -ctx.q);
  CHECK(fiber_eval(zm, ctx).is_zero());
}

TEST_CASE("fiber evaluation is an algebra homomorphism") {
  SeriesGen gen(505);
  for (const auto& q : {ExactComplex(Rational(1, 2)), ExactComplex(2),
                        ExactComplex(Rational(3, 5), Rational(4, 5))}) {
    for (int it = 0; it < 200; ++it) {
      int n = static_cast<int>(gen.uniform(1, 3));
      QContext ctx(n, q);
      ED a = gen.defo_series(n, 8, 80, 4, 4, 8);
      ED b = gen.defo_series(n, 8, 80, 4, 4, 8);
      CHECK(fiber_eval(dmul(a, b), ctx) == qmul(fiber_eval(a, ctx), fiber_eval(b, ctx), ctx));
    }
    // unital
    QContext ctx(2, q);
    CHECK(fiber_eval(ED::one(2, 4, 10), ctx) == EQ::one(2, 4));
  }
}

TEST_CASE("fiber norm profiles") {
  // x^{(1,1)}: polydisk fiber norm is min(|q|,1) rho^2
  ED a(2, 4, 10);
  a.set({MultiIndex{1, 1}, 0}, ExactComplex(1));
  std::vector<FloatComplex> grid;
  for (double t = 0.5; t <= 2.0 + 1e-12; t += 0.05) grid.emplace_back(t, 0.0);
  auto prof = fiber_norm_profile(a, 1.0, Geometry::polydisk, grid);
  REQUIRE(prof.size() == grid.size());
  for (size_t i = 0; i < grid.size(); ++i)
    CHECK(prof[i] == doctest::Approx(std::min(grid[i].real(), 1.0)).epsilon(1e-12));

  // a = z: the norm is |q| in either geometry
  ED z = ED::z_power(1, 2, 4, 1);
  for (auto geo : {Geometry::polydisk, Geometry::ball}) {
    auto pz = fiber_norm_profile(z, 1.0, geo, grid);
    for (size_t i = 0; i < grid.size(); ++i)
      CHECK(pz[i] == doctest::Approx(std::abs(grid[i])));
  }

  CHECK_THROWS_AS(fiber_norm_profile(z, 1.0, Geometry::ball, {FloatComplex(0.0, 0.0)}), error);
}

TEST_CASE("grid refinement shrinks adjacent jumps") {
  SeriesGen gen(606);
  for (int it = 0; it < 20; ++it) {
    ED a = gen.defo_series(2, 5, 30, 4, 4, 5);
    auto max_jump = [&](int steps) {
      std::vector<FloatComplex> grid;
      for (int i = 0; i <= steps; ++i)
        grid.emplace_back(0.5 + 1.5 * i / double(steps), 0.0);
      auto prof = fiber_norm_profile(a, 0.8, Geometry::polydisk, grid);
      double m = 0;
      for (size_t i = 1; i < prof.size(); ++i) m = std::max(m, std::abs(prof[i] - prof[i - 1]));
      return m;
    };
    double coarse = max_jump(40), fine = max_jump(80);
    CHECK(fine <= coarse / 2.0 * 4.0 + 1e-12); // halving the step: within factor 4
  }
}
