#ifndef QDISK_QUANTUM_HPP
#define QDISK_QUANTUM_HPP

#include "qdisk/free_series.hpp"

namespace qdisk {

/// Deformation parameter context; q != 0. C is ExactComplex or FloatComplex.
template <class C>
struct QContextT {
  int n;
  C q;

  QContextT(int n_, C q_) : n(n_), q(std::move(q_)) {
    if (n < 1) throw error("QContext: n must be >= 1");
    if (coeff_is_zero(q)) throw error("QContext: q must be nonzero");
  }

  double abs_q() const { return coeff_abs(q); }
};

using QContext = QContextT<ExactComplex>;
using FloatQContext = QContextT<FloatComplex>;

/// |q|^2 exact (only for exact contexts).
inline Rational abs_q_sq(const QContext& ctx) { return ctx.q.abs_sq(); }

/// Truncated series sum c_k x^k in the commutative-monomial model of O_q.
template <class C>
class QSeries {
 public:
  QSeries(int n, int degree_cap) : n_(n), cap_(degree_cap) {
    if (n < 1 || degree_cap < 0) throw error("bad QSeries parameters");
  }

  static QSeries one(int n, int degree_cap) {
    QSeries f(n, degree_cap);
    f.set(MultiIndex::zero(n), C(1));
    return f;
  }
  static QSeries generator(int n, int degree_cap, int i) {
    std::vector<int> e(n, 0);
    e[i - 1] = 1;
    QSeries f(n, degree_cap);
    f.set(MultiIndex(std::move(e)), C(1));
    return f;
  }
  static QSeries monomial(int n, int degree_cap, const MultiIndex& k, C c) {
    QSeries f(n, degree_cap);
    f.set(k, std::move(c));
    return f;
  }

  int n() const { return n_; }
  int degree_cap() const { return cap_; }
  bool truncated() const { return truncated_; }
  void mark_truncated() { truncated_ = true; }
  const std::map<MultiIndex, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void set(const MultiIndex& k, C c) {
    if (k.n() != n_) throw error("multi-index dimension mismatch");
    if (k.total() > cap_) throw error("multi-index exceeds degree cap");
    if (coeff_is_zero(c))
      terms_.erase(k);
    else
      terms_[k] = std::move(c);
  }
  void add_to(const MultiIndex& k, const C& c) {
    auto it = terms_.find(k);
    set(k, it == terms_.end() ? c : C(it->second + c));
  }
  C coeff(const MultiIndex& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? C(0) : it->second;
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r = a;
    for (auto& [k, c] : b.terms_) r.add_to(k, c);
    r.truncated_ = a.truncated_ || b.truncated_;
    return r;
  }
  friend QSeries operator-(const QSeries& a, const QSeries& b) {
    QSeries r = a;
    for (auto& [k, c] : b.terms_) r.add_to(k, C(-c));
    r.truncated_ = a.truncated_ || b.truncated_;
    return r;
  }
  QSeries scaled(const C& s) const {
    QSeries r(n_, cap_);
    r.truncated_ = truncated_;
    for (auto& [k, c] : terms_) r.add_to(k, C(c * s));
    return r;
  }
  friend bool operator==(const QSeries& a, const QSeries& b) { return a.terms_ == b.terms_; }

 private:
  int n_, cap_;
  bool truncated_ = false;
  std::map<MultiIndex, C> terms_;
};

enum class Geometry { polydisk, ball };

enum class WeightKind { u, w, w_bruteforce };

/// u_q(k) = |q|^{sigma(k,k)}, w_q(k) = min{u_q(k), 1}; w_bruteforce is the
/// independent route min over p^{-1}(k) of |q|^{m(alpha)}.
template <class C>
double weight(const MultiIndex& k, const QContextT<C>& ctx, WeightKind which) {
  double aq = ctx.abs_q();
  switch (which) {
    case WeightKind::u:
      return std::pow(aq, static_cast<double>(sigma(k, k)));
    case WeightKind::w:
      return std::min(std::pow(aq, static_cast<double>(sigma(k, k))), 1.0);
    case WeightKind::w_bruteforce: {
      if (preimage_count(k) > max_enumeration_cap())
        throw enumeration_too_large("weight: preimage too large");
      double best = std::numeric_limits<double>::infinity();
      for_each_preimage(k, [&](const Word& w) {
        best = std::min(best, std::pow(aq, static_cast<double>(word_stats(w).m)));
      });
      return best;
    }
  }
  throw error("unreachable");
}

/// Exact squared weights for exactness-sensitive comparisons.
Rational weight_u_sq(const MultiIndex& k, const QContext& ctx);
Rational weight_w_sq(const MultiIndex& k, const QContext& ctx);
Rational weight_w_sq_bruteforce(const MultiIndex& k, const QContext& ctx);

/// Normal ordering pi: zeta_alpha -> q^{-m(alpha)} x^{p(alpha)}.
template <class C>
QSeries<C> normal_order(const FreeSeries<C>& f, const QContextT<C>& ctx) {
  if (f.alphabet() != ctx.n) throw error("normal_order: alphabet mismatch");
  QSeries<C> r(ctx.n, f.degree_cap());
  if (f.truncated()) r.mark_truncated();
  for (auto& [w, c] : f.terms()) {
    WordStats st = word_stats(w);
    r.add_to(st.p, C(c * ctx.q.pow(-st.m)));
  }
  return r;
}

inline FloatComplex cpow_long(const FloatComplex& q, long e) {
  return std::pow(q, static_cast<double>(e));
}
inline ExactComplex cpow_long(const ExactComplex& q, long e) { return q.pow(e); }

/// q-twisted product: x^k x^l = q^{-sigma(l,k)} x^{k+l}.
template <class C>
QSeries<C> qmul(const QSeries<C>& f, const QSeries<C>& g, const QContextT<C>& ctx) {
  if (f.n() != ctx.n || g.n() != ctx.n) throw error("qmul: context mismatch");
  int cap = std::min(f.degree_cap(), g.degree_cap());
  QSeries<C> r(ctx.n, cap);
  if (f.truncated() || g.truncated()) r.mark_truncated();
  for (auto& [k, a] : f.terms())
    for (auto& [l, b] : g.terms()) {
      if (k.total() + l.total() > cap) {
        r.mark_truncated();
        continue;
      }
      r.add_to(k + l, C(a * b * cpow_long(ctx.q, -sigma(l, k))));
    }
  return r;
}

/// Monomial lift: x^k -> zeta_{delta(k)}; section of normal_order.
template <class C>
FreeSeries<C> monomial_lift(const QSeries<C>& f) {
  FreeSeries<C> r(f.n(), f.degree_cap());
  for (auto& [k, c] : f.terms()) r.add_to(delta_word(k), c);
  return r;
}

enum class QNormKind { polydisk, ball, ball_alt };

struct QNormFamily {
  QNormKind kind;
  double rho;
  static QNormFamily polydisk(double rho) { return {QNormKind::polydisk, rho}; }
  static QNormFamily ball(double rho) { return {QNormKind::ball, rho}; }
  static QNormFamily ball_alt(double rho) { return {QNormKind::ball_alt, rho}; }
};

/// [j]_s with real s, as a double.
double q_integer_real(int j, double s);
/// [k]_s! with real s.
double q_factorial_real(const MultiIndex& k, double s);

/// polydisk: sum |c_k| w_q(k) rho^|k|
/// ball:     sum |c_k| ([k]_{|q|^2}! / [|k|]_{|q|^2}!)^{1/2} u_q(k) rho^|k|
/// ball_alt: sum |c_k| ([k]_{|q|^{-2}}! / [|k|]_{|q|^{-2}}!)^{1/2} rho^|k|
template <class C, class QC>
double qnorm(const QSeries<C>& f, const QContextT<QC>& ctx, const QNormFamily& fam) {
  if (fam.rho <= 0) throw error("qnorm: rho must be positive");
  double aq = ctx.abs_q();
  double s = aq * aq;
  double total = 0;
  for (auto& [k, c] : f.terms()) {
    double wgt;
    switch (fam.kind) {
      case QNormKind::polydisk:
        wgt = std::min(std::pow(aq, static_cast<double>(sigma(k, k))), 1.0);
        break;
      case QNormKind::ball: {
        double ratio = q_factorial_real(k, s) / q_factorial_real(MultiIndex({k.total()}), s);
        wgt = std::sqrt(ratio) * std::pow(aq, static_cast<double>(sigma(k, k)));
        break;
      }
      case QNormKind::ball_alt: {
        double si = 1.0 / s;
        wgt = std::sqrt(q_factorial_real(k, si) / q_factorial_real(MultiIndex({k.total()}), si));
        break;
      }
      default:
        throw error("unreachable");
    }
    total += coeff_abs(c) * wgt * std::pow(fam.rho, k.total());
  }
  return total;
}

} // namespace qdisk

#endif
