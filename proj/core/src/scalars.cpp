#include "qdisk/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qdisk {

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// Decimal literal -> exact rational ("0.25" -> 1/4). Used when parsing the
// "(re,im)" float pair syntax into exact coefficients.
Rational rational_from_decimal(const std::string& s) {
  std::string t = s;
  bool neg = false;
  size_t pos = 0;
  if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
    neg = t[pos] == '-';
    ++pos;
  }
  std::string digits;
  long frac_digits = 0;
  long exponent = 0;
  bool seen_dot = false, seen_digit = false;
  for (; pos < t.size(); ++pos) {
    char c = t[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if ((c == 'e' || c == 'E') && seen_digit) {
      exponent = std::stol(t.substr(pos + 1));
      break;
    } else {
      throw parse_error("bad numeric literal '" + s + "'");
    }
  }
  if (!seen_digit) throw parse_error("bad numeric literal '" + s + "'");
  // base must be explicit: leading zeros would otherwise trigger octal parsing
  mpz_class num(digits.empty() ? "0" : digits, 10);
  Rational r(num);
  long shift = exponent - frac_digits;
  mpz_class ten10;
  mpz_ui_pow_ui(ten10.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(shift)));
  if (shift > 0)
    r *= Rational(ten10);
  else if (shift < 0)
    r /= Rational(ten10);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

// "a/b" or decimal literal -> rational.
Rational parse_rational_token(const std::string& s) {
  if (s.find('/') != std::string::npos) {
    Rational r(s);
    r.canonicalize();
    return r;
  }
  return rational_from_decimal(s);
}

} // namespace

std::string ExactComplex::str() const {
  if (im_ == 0) return rational_str(re_);
  std::string s = rational_str(re_);
  s += (im_ >= 0 ? "+" : "-");
  Rational a = ::abs(im_);
  s += rational_str(a);
  s += "*i";
  return s;
}

ExactComplex ExactComplex::parse(const std::string& input) {
  std::string s;
  for (char c : input)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw parse_error("empty scalar");

  // Float pair syntax "(re,im)".
  if (s.front() == '(') {
    if (s.back() != ')') throw parse_error("unterminated pair in '" + input + "'");
    std::string body = s.substr(1, s.size() - 2);
    size_t comma = body.find(',');
    if (comma == std::string::npos) throw parse_error("missing ',' in pair '" + input + "'");
    return ExactComplex(parse_rational_token(body.substr(0, comma)),
                        parse_rational_token(body.substr(comma + 1)));
  }

  // "a/b+c/d*i" syntax; either part optional, "i" optionally suffixed "*i" or "i".
  auto strip_i = [](std::string t, bool* is_im) {
    *is_im = false;
    if (t.size() >= 2 && t.substr(t.size() - 2) == "*i") {
      *is_im = true;
      t = t.substr(0, t.size() - 2);
    } else if (!t.empty() && t.back() == 'i') {
      *is_im = true;
      t = t.substr(0, t.size() - 1);
      if (t.empty() || t == "+" ) t += "1";
      if (t == "-") t = "-1";
    }
    return t;
  };

  // Split into terms at '+'/'-' signs that are not leading.
  std::vector<std::string> terms;
  size_t start = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E' &&
        s[i - 1] != '/' && s[i - 1] != '+' && s[i - 1] != '-') {
      terms.push_back(s.substr(start, i - start));
      start = i;
    }
  }
  terms.push_back(s.substr(start));

  Rational re(0), im(0);
  for (auto& term : terms) {
    bool is_im = false;
    std::string t = strip_i(term, &is_im);
    Rational v = parse_rational_token(t[0] == '+' ? t.substr(1) : t);
    if (is_im)
      im += v;
    else
      re += v;
  }
  return ExactComplex(re, im);
}

Rational rational_pow(const Rational& r, long e) {
  if (e < 0) {
    if (r == 0) throw error("zero to a negative power");
    return rational_pow(Rational(1) / r, -e);
  }
  Rational acc(1), b = r;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(std::max(a.window_, b.window_));
  r.coeffs_ = a.coeffs_;
  for (auto& [e, c] : b.coeffs_) r.add_to(e, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(std::max(a.window_, b.window_));
  r.coeffs_ = a.coeffs_;
  for (auto& [e, c] : b.coeffs_) r.add_to(e, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(std::max(a.window_, b.window_));
  for (auto& [ea, ca] : a.coeffs_)
    for (auto& [eb, cb] : b.coeffs_) r.add_to(ea + eb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw error("division by zero polynomial");
  if (!coeffs_.empty() && coeffs_.begin()->first < 0)
    throw error("divide_exact requires nonnegative exponents");
  if (divisor.coeffs_.begin()->first < 0)
    throw error("divide_exact requires nonnegative exponents");

  LaurentPoly rem = *this;
  LaurentPoly quot(window_);
  long ddeg = divisor.coeffs_.rbegin()->first;
  const ExactComplex& lead = divisor.coeffs_.rbegin()->second;
  while (!rem.is_zero()) {
    long rdeg = rem.coeffs_.rbegin()->first;
    if (rdeg < ddeg) throw error("non-exact polynomial division");
    ExactComplex q = rem.coeffs_.rbegin()->second / lead;
    quot.add_to(rdeg - ddeg, q);
    for (auto& [e, c] : divisor.coeffs_) rem.add_to(e + rdeg - ddeg, -(q * c));
  }
  return quot;
}

ExactComplex LaurentPoly::evaluate(const ExactComplex& z) const {
  ExactComplex acc;
  for (auto& [e, c] : coeffs_) acc += c * z.pow(e);
  return acc;
}

double laurent_norm(const LaurentPoly& f, double t) {
  if (t < 1.0) throw error("laurent_norm requires t >= 1");
  double s = 0;
  for (auto& [e, c] : f.coeffs()) s += c.abs() * std::pow(t, std::abs(static_cast<double>(e)));
  return s;
}

HPoly<ExactComplex> hpoly_exp_factor(long s, int order_cap) {
  HPoly<ExactComplex> r(order_cap);
  ExactComplex term(1); // (-is)^m / m!
  r[0] = term;
  for (int m = 1; m <= order_cap; ++m) {
    term = term * ExactComplex(Rational(0), Rational(-s, m));
    r[m] = term;
  }
  return r;
}

} // namespace qdisk
