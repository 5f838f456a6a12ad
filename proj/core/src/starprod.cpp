#include "qdisk/starprod.hpp"

namespace qdisk {

HSeries operator+(const HSeries& a, const HSeries& b) {
  if (a.n_ != b.n_) throw error("HSeries: dimension mismatch");
  HSeries r(a.n_, std::min(a.cap_, b.cap_), std::min(a.order_, b.order_));
  for (int m = 0; m <= r.order_; ++m) r.coeffs_[m] = a.coeffs_[m] + b.coeffs_[m];
  return r;
}

HSeries operator-(const HSeries& a, const HSeries& b) {
  if (a.n_ != b.n_) throw error("HSeries: dimension mismatch");
  HSeries r(a.n_, std::min(a.cap_, b.cap_), std::min(a.order_, b.order_));
  for (int m = 0; m <= r.order_; ++m) r.coeffs_[m] = a.coeffs_[m] - b.coeffs_[m];
  return r;
}

QSeries<FloatComplex> HSeries::evaluate(double h_val) const {
  QSeries<FloatComplex> out(n_, cap_);
  double hp = 1.0;
  for (int m = 0; m <= order_; ++m) {
    for (auto& [k, c] : coeffs_[m].terms()) out.add_to(k, c.to_complex() * hp);
    hp *= h_val;
  }
  return out;
}

HSeries star(const QSeries<ExactComplex>& f, const QSeries<ExactComplex>& g, int order_cap) {
  return star(HSeries::lift(f, order_cap), HSeries::lift(g, order_cap));
}

HSeries star(const HSeries& f, const HSeries& g) {
  if (f.n() != g.n()) throw error("star: dimension mismatch");
  int order = std::min(f.order_cap(), g.order_cap());
  int cap = std::min(f.degree_cap(), g.degree_cap());
  HSeries r(f.n(), cap, order);
  for (int m1 = 0; m1 <= order; ++m1)
    for (int m2 = 0; m1 + m2 <= order; ++m2)
      for (auto& [k, a] : f.coeff(m1).terms())
        for (auto& [l, b] : g.coeff(m2).terms()) {
          if (k.total() + l.total() > cap)
            throw error("star: degree cap exceeded; enlarge the cap");
          HPoly<ExactComplex> phase = hpoly_exp_factor(sigma(l, k), order - m1 - m2);
          ExactComplex ab = a * b;
          MultiIndex kl = k + l;
          for (int m3 = 0; m1 + m2 + m3 <= order; ++m3)
            r.coeff(m1 + m2 + m3).add_to(kl, ab * phase[m3]);
        }
  return r;
}

QSeries<ExactComplex> poisson(const QSeries<ExactComplex>& f, const QSeries<ExactComplex>& g) {
  if (f.n() != g.n()) throw error("poisson: dimension mismatch");
  int cap = std::min(f.degree_cap(), g.degree_cap());
  QSeries<ExactComplex> r(f.n(), cap);
  for (auto& [k, a] : f.terms())
    for (auto& [l, b] : g.terms()) {
      if (k.total() + l.total() > cap) throw error("poisson: degree cap exceeded");
      long w = sigma(k, l) - sigma(l, k);
      if (w != 0) r.add_to(k + l, a * b * ExactComplex(Rational(w)));
    }
  return r;
}

double rieffel_defect(const QSeries<ExactComplex>& f, const QSeries<ExactComplex>& g,
                      double h_val, double rho) {
  if (h_val == 0.0) throw error("rieffel_defect: h must be nonzero");
  if (rho <= 0) throw error("rieffel_defect: rho must be positive");
  const FloatComplex I(0.0, 1.0);
  QSeries<FloatComplex> defect(f.n(), f.degree_cap() + g.degree_cap());
  for (auto& [k, a] : f.terms())
    for (auto& [l, b] : g.terms()) {
      long skl = sigma(k, l), slk = sigma(l, k);
      FloatComplex phi = (std::exp(-I * (h_val * slk)) - std::exp(-I * (h_val * skl))) / h_val -
                         I * static_cast<double>(skl - slk);
      defect.add_to(k + l, a.to_complex() * b.to_complex() * phi);
    }
  FloatQContext ctx(f.n(), std::exp(I * h_val));
  return qnorm(defect, ctx, QNormFamily::polydisk(rho));
}

bool u_section_check(const MultiIndex& k, int order_cap) {
  if (preimage_count(k) > max_enumeration_cap())
    throw enumeration_too_large("u_section_check: preimage too large");
  mpz_class cnt = preimage_count(k);
  ExactComplex factor(Rational(1) / Rational(cnt)); // k!/|k|!

  // Termwise: (k!/|k|!) sum_alpha e^{i m h} * e^{-i m h}, truncated at h^N,
  // must telescope to the constant 1.
  HPoly<ExactComplex> acc(order_cap);
  for_each_preimage(k, [&](const Word& w) {
    long m = word_stats(w).m;
    HPoly<ExactComplex> prod = hpoly_exp_factor(-m, order_cap) * hpoly_exp_factor(m, order_cap);
    acc = acc + prod;
  });
  for (int m = 0; m <= order_cap; ++m) acc[m] *= factor;
  HPoly<ExactComplex> expected(order_cap);
  expected[0] = ExactComplex(1);
  return acc == expected;
}

double star_fiber_compare(const QSeries<ExactComplex>& f, const QSeries<ExactComplex>& g,
                          double h_val) {
  const FloatComplex I(0.0, 1.0);
  int cap = f.degree_cap() + g.degree_cap();
  // Route (i): closed-form star product evaluated at h.
  QSeries<FloatComplex> direct(f.n(), cap);
  for (auto& [k, a] : f.terms())
    for (auto& [l, b] : g.terms())
      direct.add_to(k + l,
                    a.to_complex() * b.to_complex() * std::exp(-I * (h_val * sigma(l, k))));

  // Route (ii): the fiber product at q = e^{ih}.
  FloatQContext ctx(f.n(), std::exp(I * h_val));
  auto widen = [&](const QSeries<ExactComplex>& s) {
    QSeries<FloatComplex> out(s.n(), cap);
    for (auto& [kk, cc] : s.terms()) out.set(kk, cc.to_complex());
    return out;
  };
  QSeries<FloatComplex> viaq = qmul(widen(f), widen(g), ctx);

  double max_dev = 0.0, scale = 0.0;
  for (auto& [kk, cc] : direct.terms()) scale = std::max(scale, std::abs(cc));
  scale = std::max(scale, 1e-300);
  auto keys = direct.terms();
  for (auto& [kk, cc] : viaq.terms())
    if (!keys.count(kk)) keys.emplace(kk, FloatComplex(0, 0));
  for (auto& [kk, _] : keys)
    max_dev = std::max(max_dev, std::abs(direct.coeff(kk) - viaq.coeff(kk)) / scale);
  return max_dev;
}

} // namespace qdisk
