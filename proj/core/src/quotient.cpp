#include "qdisk/quotient.hpp"

#include <algorithm>

namespace qdisk {

namespace {

struct PreimageData {
  std::vector<Word> words;
  std::vector<long> m; // inversion count per word
};

PreimageData preimage_data(const MultiIndex& k) {
  PreimageData d;
  d.words = enumerate_preimage(k);
  d.m.reserve(d.words.size());
  for (auto& w : d.words) d.m.push_back(word_stats(w).m);
  return d;
}

// l^1 minimum of |c| over single-word preimage solutions c_alpha = g q^{m},
// with an exhaustive pairwise convex-combination check.
double polydisk_oracle_monomial(const MultiIndex& k, double abs_g, double abs_q, double rho) {
  PreimageData d = preimage_data(k);
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> cost(d.words.size());
  for (size_t i = 0; i < d.words.size(); ++i) {
    cost[i] = abs_g * std::pow(abs_q, static_cast<double>(d.m[i]));
    best = std::min(best, cost[i]);
  }
  // Extreme points of the l^1 sublevel sets on one affine constraint are
  // single-support; confirm no two-word convex combination improves.
  for (size_t i = 0; i < d.words.size(); ++i)
    for (size_t j = i + 1; j < d.words.size(); ++j)
      for (double t : {0.25, 0.5, 0.75}) {
        double mixed = t * cost[i] + (1.0 - t) * cost[j];
        if (mixed < best * (1.0 - 1e-12))
          throw error("polydisk oracle: convex combination beat a vertex");
      }
  return best * std::pow(rho, k.total());
}

// Minimum-norm solution of sum_alpha c_alpha q^{-m(alpha)} = g in l^2:
// c = conj(a) g / ||a||^2 with a_alpha = q^{-m(alpha)}.
double ball_oracle_monomial(const MultiIndex& k, const FloatComplex& g, const FloatComplex& q,
                            double rho, double* residual_out) {
  PreimageData d = preimage_data(k);
  std::vector<FloatComplex> a(d.words.size());
  double norm_a_sq = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    a[i] = std::pow(q, static_cast<double>(-d.m[i]));
    norm_a_sq += std::norm(a[i]);
  }
  FloatComplex lambda = g / norm_a_sq;
  double norm_c_sq = 0;
  FloatComplex constraint(0, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    FloatComplex c = std::conj(a[i]) * lambda;
    norm_c_sq += std::norm(c);
    constraint += c * a[i];
  }
  if (residual_out) {
    double res = std::abs(constraint - g) / std::max(std::abs(g), 1e-300);
    *residual_out = std::max(*residual_out, res);
  }
  return std::sqrt(norm_c_sq) * std::pow(rho, k.total());
}

} // namespace

QuotientResult quotient_norm(const QuotientProblem& prob, QuotientMode mode) {
  if (prob.rho <= 0) throw error("quotient_norm: rho must be positive");
  QuotientResult res;
  if (mode == QuotientMode::closed_form) {
    QNormFamily fam = prob.geometry == Geometry::polydisk ? QNormFamily::polydisk(prob.rho)
                                                          : QNormFamily::ball(prob.rho);
    res.value = qnorm(prob.target, prob.ctx, fam);
    return res;
  }

  double total = 0;
  FloatComplex qf = prob.ctx.q.to_complex();
  for (auto& [k, c] : prob.target.terms()) {
    if (prob.geometry == Geometry::polydisk)
      total += polydisk_oracle_monomial(k, c.abs(), std::abs(qf), prob.rho);
    else
      total += ball_oracle_monomial(k, c.to_complex(), qf, prob.rho, &res.max_normal_eq_residual);
  }
  res.value = total;
  return res;
}

FreeSeries<ExactComplex> section_kappa(const MultiIndex& k, const QContext& ctx,
                                       Geometry geometry) {
  int cap = std::max(k.total(), 1);
  FreeSeries<ExactComplex> sec(ctx.n, cap);

  if (geometry == Geometry::polydisk) {
    Word star = delta_word(k);
    if (abs_q_sq(ctx) < 1) std::reverse(star.letters.begin(), star.letters.end());
    sec.set(star, ctx.q.pow(word_stats(star).m));
    return sec;
  }

  // Ball: Lagrange optimum c0_alpha = |q|^{-2m} / sum |q|^{-2m}, exact in the
  // squared modulus.
  Rational s = abs_q_sq(ctx);
  std::vector<Word> words = enumerate_preimage(k);
  Rational denom(0);
  std::vector<long> m(words.size());
  for (size_t i = 0; i < words.size(); ++i) {
    m[i] = word_stats(words[i]).m;
    denom += rational_pow(s, -m[i]);
  }
  for (size_t i = 0; i < words.size(); ++i) {
    ExactComplex c0(rational_pow(s, -m[i]) / denom);
    sec.set(words[i], c0 * ctx.q.pow(m[i]));
  }
  return sec;
}

bool verify_ideal(const QContext& ctx, int i, int j, const FreeSeries<ExactComplex>& probe,
                  const FreeSeries<ExactComplex>& probe2) {
  if (!(i < j)) throw error("verify_ideal: need i < j");
  int cap = probe.degree_cap() + probe2.degree_cap() + 2;
  FreeSeries<ExactComplex> rel(ctx.n, cap);
  rel.set(Word(ctx.n, {i, j}), ExactComplex(1));
  rel.add_to(Word(ctx.n, {j, i}), -ctx.q);

  auto widen = [&](const FreeSeries<ExactComplex>& f) {
    FreeSeries<ExactComplex> g(ctx.n, cap);
    for (auto& [w, c] : f.terms()) g.set(w, c);
    return g;
  };
  FreeSeries<ExactComplex> prod = fmul(fmul(widen(probe), rel), widen(probe2));
  if (prod.truncated()) throw error("verify_ideal: degree cap too small");
  return normal_order(prod, ctx).is_zero();
}

} // namespace qdisk
