#include "qdisk/deformation.hpp"

namespace qdisk {

long omega(const MultiIndex& k, long p) {
  if (p >= 0) return p;
  long top = p + sigma(k, k);
  return top >= 0 ? 0 : top;
}

Word alpha_with_inversions(const MultiIndex& k, long m) {
  long cap = sigma(k, k);
  if (m < 0 || m > cap) throw error("alpha_with_inversions: m out of range");
  Word w = delta_word(k);
  if (m == 0) return w;
  long d = w.length();
  long count = 0;
  // Bubble the current first letter to the end of the shrinking active prefix;
  // each swap of distinct letters adds one inversion.
  for (long stop = d; stop >= 2; --stop) {
    for (long i = 1; i < stop; ++i) {
      bool distinct = w.letters[i - 1] != w.letters[i];
      std::swap(w.letters[i - 1], w.letters[i]);
      if (distinct && ++count == m) return w;
    }
  }
  throw error("alpha_with_inversions: procedure exhausted before reaching m");
}

std::vector<SplitTerm> canonical_split(const DefoSeries<ExactComplex>& a) {
  std::vector<SplitTerm> out;
  out.reserve(a.terms().size());
  for (auto& [key, c] : a.terms()) {
    long e = omega(key.k, key.p);
    out.push_back({e, alpha_with_inversions(key.k, e - key.p), c});
  }
  return out;
}

DefoSeries<ExactComplex> rebuild_from_split(int n, int degree_cap, long z_window,
                                            const std::vector<SplitTerm>& terms) {
  DefoSeries<ExactComplex> a(n, degree_cap, z_window);
  for (auto& t : terms) {
    WordStats st = word_stats(t.word);
    a.add_to({st.p, t.z_exponent - st.m}, t.coeff);
  }
  return a;
}

std::vector<double> fiber_norm_profile(const DefoSeries<ExactComplex>& a, double rho,
                                       Geometry geometry,
                                       const std::vector<FloatComplex>& q_grid) {
  std::vector<double> out;
  out.reserve(q_grid.size());
  QNormFamily fam = geometry == Geometry::polydisk ? QNormFamily::polydisk(rho)
                                                   : QNormFamily::ball(rho);
  for (auto& q : q_grid) {
    if (q == FloatComplex(0.0, 0.0)) throw error("fiber_norm_profile: q = 0 on grid");
    FloatQContext ctx(a.n(), q);
    out.push_back(qnorm(fiber_eval<ExactComplex, FloatComplex>(a, ctx), ctx, fam));
  }
  return out;
}

} // namespace qdisk
