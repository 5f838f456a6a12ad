#ifndef QDISK_SCALARS_HPP
#define QDISK_SCALARS_HPP

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qdisk {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : error {
  parse_error(const std::string& msg, long line = -1)
      : error(line >= 0 ? "parse error (line " + std::to_string(line) + "): " + msg
                        : "parse error: " + msg),
        line_number(line) {}
  long line_number;
};

struct enumeration_too_large : error {
  using error::error;
};

using Rational = mpq_class;

/// Element of Q(i): exact complex number with rational real and imaginary parts.
class ExactComplex {
 public:
  ExactComplex() : re_(0), im_(0) {}
  ExactComplex(long re) : re_(re), im_(0) {}
  ExactComplex(Rational re) : re_(std::move(re)), im_(0) { canon(); }
  ExactComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) { canon(); }

  static ExactComplex i() { return ExactComplex(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  ExactComplex operator-() const { return ExactComplex(-re_, -im_); }
  ExactComplex conj() const { return ExactComplex(re_, -im_); }

  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return ExactComplex(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return ExactComplex(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return ExactComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
    Rational d = b.abs_sq();
    if (d == 0) throw error("division by zero in Q(i)");
    return ExactComplex((a.re_ * b.re_ + a.im_ * b.im_) / d,
                        (a.im_ * b.re_ - a.re_ * b.im_) / d);
  }
  ExactComplex& operator+=(const ExactComplex& b) { return *this = *this + b; }
  ExactComplex& operator-=(const ExactComplex& b) { return *this = *this - b; }
  ExactComplex& operator*=(const ExactComplex& b) { return *this = *this * b; }

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

  /// |z|^2 = re^2 + im^2, exact.
  Rational abs_sq() const { return re_ * re_ + im_ * im_; }

  double abs() const { return std::sqrt(mpq_get_d(abs_sq().get_mpq_t())); }

  std::complex<double> to_complex() const {
    return {mpq_get_d(re_.get_mpq_t()), mpq_get_d(im_.get_mpq_t())};
  }

  /// z^e for integer e; negative e requires z != 0.
  ExactComplex pow(long e) const {
    if (e < 0) {
      if (is_zero()) throw error("zero to a negative power");
      return (ExactComplex(1) / *this).pow(-e);
    }
    ExactComplex r(1), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  std::string str() const;
  static ExactComplex parse(const std::string& s);

 private:
  void canon() {
    re_.canonicalize();
    im_.canonicalize();
  }
  Rational re_, im_;
};

using FloatComplex = std::complex<double>;

// Coefficient traits shared by the series templates.
inline bool coeff_is_zero(const ExactComplex& c) { return c.is_zero(); }
inline bool coeff_is_zero(const FloatComplex& c) { return c == FloatComplex(0.0, 0.0); }
inline double coeff_abs(const ExactComplex& c) { return c.abs(); }
inline double coeff_abs(const FloatComplex& c) { return std::abs(c); }
inline FloatComplex coeff_to_complex(const ExactComplex& c) { return c.to_complex(); }
inline FloatComplex coeff_to_complex(const FloatComplex& c) { return c; }

inline double to_double(const Rational& r) { return mpq_get_d(r.get_mpq_t()); }

/// r^e for integer e (negative allowed when r != 0).
Rational rational_pow(const Rational& r, long e);

/// Laurent polynomial over Q(i) with exponent window [-P, P].
class LaurentPoly {
 public:
  explicit LaurentPoly(long window = kDefaultWindow) : window_(window) {}

  static LaurentPoly monomial(long exponent, ExactComplex c, long window = kDefaultWindow) {
    LaurentPoly f(window);
    f.set(exponent, std::move(c));
    return f;
  }
  static LaurentPoly one() { return monomial(0, ExactComplex(1)); }

  void set(long exponent, ExactComplex c) {
    if (exponent < -window_ || exponent > window_)
      throw error("Laurent exponent outside window");
    if (c.is_zero())
      coeffs_.erase(exponent);
    else
      coeffs_[exponent] = std::move(c);
  }
  void add_to(long exponent, const ExactComplex& c) {
    auto it = coeffs_.find(exponent);
    ExactComplex v = (it == coeffs_.end()) ? c : it->second + c;
    set(exponent, v);
  }

  const std::map<long, ExactComplex>& coeffs() const { return coeffs_; }
  long window() const { return window_; }
  bool is_zero() const { return coeffs_.empty(); }
  ExactComplex coeff(long e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? ExactComplex() : it->second;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Exact division; throws if the remainder is nonzero. Both operands must be
  /// ordinary polynomials (no negative exponents).
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  ExactComplex evaluate(const ExactComplex& z) const;

  static constexpr long kDefaultWindow = 1L << 30;

 private:
  long window_;
  std::map<long, ExactComplex> coeffs_;
};

/// ||f||_t = sum_n |c_n(f)| t^{|n|}; requires t >= 1.
double laurent_norm(const LaurentPoly& f, double t);

/// Polynomial in h truncated at order N: coeffs for h^0..h^N.
template <class C>
class HPoly {
 public:
  explicit HPoly(int order_cap) : cap_(order_cap), coeffs_(order_cap + 1) {
    if (order_cap < 0) throw error("negative h-order cap");
  }

  int order_cap() const { return cap_; }
  const C& operator[](int m) const { return coeffs_.at(m); }
  C& operator[](int m) { return coeffs_.at(m); }

  friend HPoly operator+(const HPoly& a, const HPoly& b) {
    HPoly r(std::min(a.cap_, b.cap_));
    for (int m = 0; m <= r.cap_; ++m) r.coeffs_[m] = a.coeffs_[m] + b.coeffs_[m];
    return r;
  }
  friend HPoly operator-(const HPoly& a, const HPoly& b) {
    HPoly r(std::min(a.cap_, b.cap_));
    for (int m = 0; m <= r.cap_; ++m) r.coeffs_[m] = a.coeffs_[m] - b.coeffs_[m];
    return r;
  }
  friend HPoly operator*(const HPoly& a, const HPoly& b) {
    HPoly r(std::min(a.cap_, b.cap_));
    for (int i = 0; i <= r.cap_; ++i)
      for (int j = 0; i + j <= r.cap_; ++j)
        if (i <= a.cap_ && j <= b.cap_) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return r;
  }
  friend bool operator==(const HPoly& a, const HPoly& b) {
    if (a.cap_ != b.cap_) return false;
    return a.coeffs_ == b.coeffs_;
  }

 private:
  int cap_;
  std::vector<C> coeffs_;
};

/// Truncation of e^{-ihs}: coefficient of h^m is (-is)^m / m!.
HPoly<ExactComplex> hpoly_exp_factor(long s, int order_cap);

} // namespace qdisk

#endif
