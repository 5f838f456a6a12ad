#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "qdisk/combinatorics.hpp"

using namespace qdisk;

TEST_CASE("word stats on named examples") {
  // empty word
  auto st = word_stats(Word(2, {}));
  CHECK(st.p == MultiIndex({0, 0}));
  CHECK(st.m == 0);
  CHECK(st.s == -1);

  // single letter
  st = word_stats(Word(3, {2}));
  CHECK(st.p == MultiIndex({0, 1, 0}));
  CHECK(st.m == 0);
  CHECK(st.s == 0);

  // [2,1,2,1]: inversions (2,1),(2,1),(2,1); all adjacent pairs unequal
  st = word_stats(Word(2, {2, 1, 2, 1}));
  CHECK(st.p == MultiIndex({2, 2}));
  CHECK(st.m == 3);
  CHECK(st.s == 3);

  // constant word: no inversions, no unequal adjacencies
  st = word_stats(Word(2, {1, 1, 1, 1}));
  CHECK(st.m == 0);
  CHECK(st.s == 0);

  // fully descending word over {1,2,3} attains m = sigma(k,k)
  st = word_stats(Word(3, {3, 2, 1}));
  CHECK(st.m == 3);
  MultiIndex k{1, 1, 1};
  CHECK(st.m == sigma(k, k));
}

TEST_CASE("delta word and preimage enumeration") {
  MultiIndex k{2, 1};
  CHECK(delta_word(k) == Word(2, {1, 1, 2}));
  CHECK(word_stats(delta_word(k)).m == 0);

  auto pre = enumerate_preimage(k);
  REQUIRE(pre.size() == 3);
  CHECK(pre[0] == delta_word(k)); // delta comes first
  CHECK(preimage_count(k) == 3);

  // every enumerated word has the right letter counts, all distinct
  std::set<std::vector<std::uint8_t>> seen;
  for (const auto& w : pre) {
    CHECK(word_stats(w).p == k);
    CHECK(seen.insert(w.letters).second);
  }

  // larger case: |k|!/k! = 6!/(2!2!2!) = 90
  MultiIndex k3{2, 2, 2};
  CHECK(preimage_count(k3) == 90);
  CHECK(enumerate_preimage(k3).size() == 90);

  // zero multi-index -> just the empty word
  auto emp = enumerate_preimage(MultiIndex::zero(2));
  REQUIRE(emp.size() == 1);
  CHECK(emp[0].empty());
}

TEST_CASE("enumeration cap honoured") {
  setenv("QDISK_MAX_ENUM", "10", 1);
  CHECK(max_enumeration_cap() == 10);
  CHECK_THROWS_AS(enumerate_preimage(MultiIndex{2, 2, 2}), enumeration_too_large);
  unsetenv("QDISK_MAX_ENUM");
  CHECK(max_enumeration_cap() == 1000000);
  CHECK(enumerate_preimage(MultiIndex{2, 2, 2}).size() == 90);
}

TEST_CASE("sigma bilinear form") {
  CHECK(sigma(MultiIndex{1, 2}, MultiIndex{3, 4}) == 4); // k_1*l_2 = 1*4
  CHECK(sigma(MultiIndex{3, 4}, MultiIndex{1, 2}) == 6);
  CHECK(sigma(MultiIndex{1, 1, 1}, MultiIndex{1, 1, 1}) == 3);
  CHECK(sigma(MultiIndex::zero(3), MultiIndex{5, 5, 5}) == 0);
  // bilinearity spot check
  MultiIndex a{1, 0, 2}, b{0, 3, 1}, c{2, 1, 0};
  CHECK(sigma(a, b + c) == sigma(a, b) + sigma(a, c));
}

TEST_CASE("q-integers and q-factorials") {
  // [3]_q = 1 + q + q^2
  LaurentPoly three = q_integer_poly(3);
  CHECK(three.coeff(0) == ExactComplex(1));
  CHECK(three.coeff(1) == ExactComplex(1));
  CHECK(three.coeff(2) == ExactComplex(1));
  CHECK(three.coeff(3) == ExactComplex(0));

  CHECK(q_integer_poly(0).is_zero());
  CHECK(q_integer_poly(1) == LaurentPoly::one());

  // [2]_q evaluated at q = 1/2 is 3/2
  CHECK(q_integer(2, ExactComplex(Rational(1, 2))) == ExactComplex(Rational(3, 2)));
  // q = 1 degenerates to the ordinary integer
  CHECK(q_integer(5, ExactComplex(1)) == ExactComplex(5));

  // [k]_q! at q = 1 is the ordinary factorial product
  CHECK(q_factorial(MultiIndex{3, 2}, ExactComplex(1)) == ExactComplex(12));
}

TEST_CASE("gaussian multinomial equals inversion polynomial") {
  // the division route and the enumeration route must agree exactly
  for (int n = 1; n <= 3; ++n)
    for (const auto& k : multi_indices_up_to(n, 6)) {
      if (preimage_count(k) > 5000) continue;
      QRatio r = q_ratio(k);
      CHECK(r.ratio == r.inv_poly);
      CHECK(r.ratio.evaluate(ExactComplex(1)) ==
            ExactComplex(Rational(preimage_count(k))));
    }

  // frozen value: k = (2,1) gives 1 + q + q^2
  QRatio r21 = q_ratio(MultiIndex{2, 1});
  CHECK(r21.ratio == q_integer_poly(3));
}

TEST_CASE("inversion range over a fibre") {
  // m ranges over [0, sigma(k,k)], with both ends attained
  for (const auto& k : multi_indices_up_to(3, 5)) {
    long lo = 1L << 40, hi = -1;
    for_each_preimage(k, [&](const Word& w) {
      long m = word_stats(w).m;
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    });
    CHECK(lo == 0);
    CHECK(hi == sigma(k, k));
  }
}

TEST_CASE("multi-index generation") {
  CHECK(multi_indices_of_degree(2, 3).size() == 4);
  CHECK(multi_indices_of_degree(3, 0).size() == 1);
  CHECK(multi_indices_up_to(2, 3).size() == 10); // 1+2+3+4
  auto all = multi_indices_up_to(3, 4);
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("word / multi-index text round trip") {
  Word w(3, {1, 3, 2, 2});
  CHECK(Word::parse(w.str(), 3) == w);
  CHECK(Word::parse("[]", 2).empty());
  CHECK_THROWS_AS(Word::parse("[1,4]", 3), error);

  MultiIndex k{0, 5, 2};
  CHECK(MultiIndex::parse(k.str()) == k);
  CHECK_THROWS_AS(MultiIndex::parse("(1,-2)"), error);
}
