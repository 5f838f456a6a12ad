#ifndef QDISK_DEFORMATION_HPP
#define QDISK_DEFORMATION_HPP

#include "qdisk/quantum.hpp"

namespace qdisk {

/// omega(k,p): p clamped toward zero within [p, p + sigma(k,k)].
long omega(const MultiIndex& k, long p);

/// Monomial key of D_{n,r}: x^k z^p.
struct DefoKey {
  MultiIndex k;
  long p = 0;

  friend bool operator<(const DefoKey& a, const DefoKey& b) {
    if (!(a.k == b.k)) return a.k < b.k;
    return a.p < b.p;
  }
  friend bool operator==(const DefoKey& a, const DefoKey& b) {
    return a.k == b.k && a.p == b.p;
  }
};

/// Truncated element sum c_{kp} x^k z^p of D_{n,r}.
template <class C>
class DefoSeries {
 public:
  DefoSeries(int n, int degree_cap, long z_window)
      : n_(n), cap_(degree_cap), zwin_(z_window) {
    if (n < 1 || degree_cap < 0 || z_window < 0) throw error("bad DefoSeries parameters");
  }

  static DefoSeries one(int n, int degree_cap, long z_window) {
    DefoSeries f(n, degree_cap, z_window);
    f.set({MultiIndex::zero(n), 0}, C(1));
    return f;
  }
  static DefoSeries generator(int n, int degree_cap, long z_window, int i) {
    std::vector<int> e(n, 0);
    e[i - 1] = 1;
    DefoSeries f(n, degree_cap, z_window);
    f.set({MultiIndex(std::move(e)), 0}, C(1));
    return f;
  }
  static DefoSeries z_power(int n, int degree_cap, long z_window, long p) {
    DefoSeries f(n, degree_cap, z_window);
    f.set({MultiIndex::zero(n), p}, C(1));
    return f;
  }

  int n() const { return n_; }
  int degree_cap() const { return cap_; }
  long z_window() const { return zwin_; }
  bool truncated() const { return truncated_; }
  void mark_truncated() { truncated_ = true; }
  const std::map<DefoKey, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void set(const DefoKey& key, C c) {
    if (key.k.n() != n_) throw error("DefoSeries: dimension mismatch");
    if (key.k.total() > cap_) throw error("DefoSeries: degree cap exceeded");
    if (key.p < -zwin_ || key.p > zwin_) throw error("DefoSeries: z-exponent outside window");
    if (coeff_is_zero(c))
      terms_.erase(key);
    else
      terms_[key] = std::move(c);
  }
  void add_to(const DefoKey& key, const C& c) {
    auto it = terms_.find(key);
    set(key, it == terms_.end() ? c : C(it->second + c));
  }
  C coeff(const DefoKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? C(0) : it->second;
  }

  friend DefoSeries operator+(const DefoSeries& a, const DefoSeries& b) {
    DefoSeries r = a;
    for (auto& [key, c] : b.terms_) r.add_to(key, c);
    r.truncated_ = a.truncated_ || b.truncated_;
    return r;
  }
  friend DefoSeries operator-(const DefoSeries& a, const DefoSeries& b) {
    DefoSeries r = a;
    for (auto& [key, c] : b.terms_) r.add_to(key, C(-c));
    r.truncated_ = a.truncated_ || b.truncated_;
    return r;
  }
  friend bool operator==(const DefoSeries& a, const DefoSeries& b) {
    return a.terms_ == b.terms_;
  }

 private:
  int n_, cap_;
  long zwin_;
  bool truncated_ = false;
  std::map<DefoKey, C> terms_;
};

/// (x^k z^p)(x^l z^s) = x^{k+l} z^{p+s-sigma(l,k)}; truncation flagged when a
/// product leaves the degree cap or z window.
template <class C>
DefoSeries<C> dmul(const DefoSeries<C>& a, const DefoSeries<C>& b) {
  if (a.n() != b.n()) throw error("dmul: dimension mismatch");
  int cap = std::min(a.degree_cap(), b.degree_cap());
  long zwin = std::max(a.z_window(), b.z_window());
  DefoSeries<C> r(a.n(), cap, zwin);
  if (a.truncated() || b.truncated()) r.mark_truncated();
  for (auto& [ka, ca] : a.terms())
    for (auto& [kb, cb] : b.terms()) {
      MultiIndex k = ka.k + kb.k;
      long p = ka.p + kb.p - sigma(kb.k, ka.k);
      if (k.total() > cap || p < -zwin || p > zwin) {
        r.mark_truncated();
        continue;
      }
      r.add_to({std::move(k), p}, C(ca * cb));
    }
  return r;
}

/// ||a||_{rho,tau} = sum |c_{kp}| rho^|k| tau^{|omega(k,p)|}.
template <class C>
double dnorm(const DefoSeries<C>& a, double rho, double tau) {
  if (rho <= 0 || tau < 1) throw error("dnorm: need rho > 0, tau >= 1");
  double total = 0;
  for (auto& [key, c] : a.terms())
    total += coeff_abs(c) * std::pow(rho, key.k.total()) *
             std::pow(tau, static_cast<double>(std::abs(omega(key.k, key.p))));
  return total;
}

/// Word alpha with p(alpha) = k, m(alpha) = m, s(alpha) <= n+2, produced by
/// bubbling letters of delta(k) rightward and counting distinct-letter swaps.
Word alpha_with_inversions(const MultiIndex& k, long m);

struct SplitTerm {
  long z_exponent;
  Word word;
  ExactComplex coeff;
};

/// psi~: c x^k z^p -> c z^{omega(k,p)} (x) zeta_{alpha(k, omega(k,p)-p)}.
std::vector<SplitTerm> canonical_split(const DefoSeries<ExactComplex>& a);

/// Rebuild a DefoSeries from split terms (x_alpha z^e = z^{e - m(alpha)} x^{p(alpha)}).
DefoSeries<ExactComplex> rebuild_from_split(int n, int degree_cap, long z_window,
                                            const std::vector<SplitTerm>& terms);

/// Substitute z = q: coefficient of x^k is sum_p c_{kp} q^p.
template <class C, class QC>
QSeries<QC> fiber_eval(const DefoSeries<C>& a, const QContextT<QC>& ctx) {
  if (a.n() != ctx.n) throw error("fiber_eval: dimension mismatch");
  QSeries<QC> r(ctx.n, a.degree_cap());
  if (a.truncated()) r.mark_truncated();
  for (auto& [key, c] : a.terms()) {
    if constexpr (std::is_same_v<C, ExactComplex> && std::is_same_v<QC, FloatComplex>)
      r.add_to(key.k, QC(c.to_complex() * cpow_long(ctx.q, key.p)));
    else
      r.add_to(key.k, QC(c * cpow_long(ctx.q, key.p)));
  }
  return r;
}

/// ||a_q||_{geometry,q,rho} at each grid point (fiber_eval then qnorm).
std::vector<double> fiber_norm_profile(const DefoSeries<ExactComplex>& a, double rho,
                                       Geometry geometry,
                                       const std::vector<FloatComplex>& q_grid);

} // namespace qdisk

#endif
