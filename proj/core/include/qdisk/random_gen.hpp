#ifndef QDISK_RANDOM_GEN_HPP
#define QDISK_RANDOM_GEN_HPP

#include <random>

#include "qdisk/deformation.hpp"
#include "qdisk/free_series.hpp"
#include "qdisk/quantum.hpp"

namespace qdisk {

/// Seeded generator for sparse random series with small-denominator Gaussian
/// rational coefficients. Deterministic for a given seed.
class SeriesGen {
 public:
  explicit SeriesGen(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

  Rational rational() {
    long num = uniform(-9, 9);
    long den = uniform(1, 9);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  ExactComplex exact_complex(bool allow_zero = false) {
    ExactComplex c(rational(), rational());
    if (!allow_zero && c.is_zero()) return ExactComplex(Rational(1, uniform(1, 9)));
    return c;
  }

  Word word(int n, int max_len) {
    int len = static_cast<int>(uniform(0, max_len));
    std::vector<std::uint8_t> ls;
    for (int i = 0; i < len; ++i) ls.push_back(static_cast<std::uint8_t>(uniform(1, n)));
    return Word(n, std::move(ls));
  }

  MultiIndex multi_index(int n, int max_total) {
    std::vector<int> e(n, 0);
    int total = static_cast<int>(uniform(0, max_total));
    for (int i = 0; i < total; ++i) e[uniform(0, n - 1)]++;
    return MultiIndex(std::move(e));
  }

  FreeSeries<ExactComplex> free_series(int n, int cap, int terms, int max_len = -1) {
    if (max_len < 0) max_len = cap;
    FreeSeries<ExactComplex> f(n, cap);
    for (int t = 0; t < terms; ++t) f.add_to(word(n, max_len), exact_complex());
    return f;
  }

  QSeries<ExactComplex> q_series(int n, int cap, int terms, int max_total = -1) {
    if (max_total < 0) max_total = cap;
    QSeries<ExactComplex> f(n, cap);
    for (int t = 0; t < terms; ++t) f.add_to(multi_index(n, max_total), exact_complex());
    return f;
  }

  DefoSeries<ExactComplex> defo_series(int n, int cap, long zwin, int terms, int max_total,
                                       long max_abs_p) {
    DefoSeries<ExactComplex> f(n, cap, zwin);
    for (int t = 0; t < terms; ++t)
      f.add_to({multi_index(n, max_total), uniform(-max_abs_p, max_abs_p)}, exact_complex());
    return f;
  }

 private:
  std::mt19937_64 rng_;
};

} // namespace qdisk

#endif
