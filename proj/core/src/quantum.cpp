#include "qdisk/quantum.hpp"

namespace qdisk {

Rational weight_u_sq(const MultiIndex& k, const QContext& ctx) {
  return rational_pow(abs_q_sq(ctx), sigma(k, k));
}

Rational weight_w_sq(const MultiIndex& k, const QContext& ctx) {
  Rational u = weight_u_sq(k, ctx);
  return u < 1 ? u : Rational(1);
}

Rational weight_w_sq_bruteforce(const MultiIndex& k, const QContext& ctx) {
  if (preimage_count(k) > max_enumeration_cap())
    throw enumeration_too_large("weight_w_sq_bruteforce: preimage too large");
  Rational s = abs_q_sq(ctx);
  bool first = true;
  Rational best;
  for_each_preimage(k, [&](const Word& w) {
    Rational v = rational_pow(s, word_stats(w).m);
    if (first || v < best) {
      best = v;
      first = false;
    }
  });
  return best;
}

double q_integer_real(int j, double s) {
  double acc = 0, pw = 1;
  for (int e = 0; e < j; ++e) {
    acc += pw;
    pw *= s;
  }
  return acc;
}

double q_factorial_real(const MultiIndex& k, double s) {
  double acc = 1;
  for (int v : k.entries)
    for (int j = 1; j <= v; ++j) acc *= q_integer_real(j, s);
  return acc;
}

} // namespace qdisk
