#ifndef QDISK_STARPROD_HPP
#define QDISK_STARPROD_HPP

#include "qdisk/quantum.hpp"

namespace qdisk {

/// Element of the h-truncated formal deformation: sum_m f_m h^m with QSeries
/// coefficients, exact in Gaussian rationals.
class HSeries {
 public:
  HSeries(int n, int degree_cap, int order_cap)
      : n_(n), cap_(degree_cap), order_(order_cap),
        coeffs_(order_cap + 1, QSeries<ExactComplex>(n, degree_cap)) {
    if (order_cap < 0) throw error("HSeries: negative order cap");
  }

  static HSeries lift(const QSeries<ExactComplex>& f, int order_cap) {
    HSeries r(f.n(), f.degree_cap(), order_cap);
    r.coeffs_[0] = f;
    return r;
  }

  int n() const { return n_; }
  int degree_cap() const { return cap_; }
  int order_cap() const { return order_; }
  const QSeries<ExactComplex>& coeff(int m) const { return coeffs_.at(m); }
  QSeries<ExactComplex>& coeff(int m) { return coeffs_.at(m); }

  friend HSeries operator+(const HSeries& a, const HSeries& b);
  friend HSeries operator-(const HSeries& a, const HSeries& b);
  friend bool operator==(const HSeries& a, const HSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }
  bool is_zero() const {
    for (auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  /// Numeric evaluation at a real h value.
  QSeries<FloatComplex> evaluate(double h_val) const;

 private:
  int n_, cap_, order_;
  std::vector<QSeries<ExactComplex>> coeffs_;
};

/// x^k * x^l = e^{-ih sigma(l,k)} x^{k+l}, expanded in h to the order cap.
HSeries star(const QSeries<ExactComplex>& f, const QSeries<ExactComplex>& g, int order_cap);

/// Star product of h-series (needed for associativity checks).
HSeries star(const HSeries& f, const HSeries& g);

/// {f,g} = sum a_k b_l (sigma(k,l) - sigma(l,k)) x^{k+l}.
QSeries<ExactComplex> poisson(const QSeries<ExactComplex>& f, const QSeries<ExactComplex>& g);

/// Fiber norm of (f_h g_h - g_h f_h)/h - i{f,g}_h at q = e^{ih}, polydisk
/// weight, radius rho.
double rieffel_defect(const QSeries<ExactComplex>& f, const QSeries<ExactComplex>& g,
                      double h_val, double rho);

/// Verifies that u_k = (k!/|k|!) sum_alpha e^{i m(alpha) h} zeta_alpha maps to
/// x^k under normal ordering with q = e^{ih}, exactly to order N in h.
bool u_section_check(const MultiIndex& k, int order_cap);

/// Max relative coefficient deviation between the closed-form star product
/// evaluated at h and qmul at q = e^{ih}.
double star_fiber_compare(const QSeries<ExactComplex>& f, const QSeries<ExactComplex>& g,
                          double h_val);

} // namespace qdisk

#endif
