#ifndef QDISK_FREE_SERIES_HPP
#define QDISK_FREE_SERIES_HPP

#include <map>
#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "qdisk/combinatorics.hpp"
#include "qdisk/scalars.hpp"

namespace qdisk {

/// Degree-truncated noncommutative power series sum c_alpha zeta_alpha.
template <class C>
class FreeSeries {
 public:
  FreeSeries(int n, int degree_cap) : n_(n), cap_(degree_cap) {
    if (n < 1 || degree_cap < 0) throw error("bad FreeSeries parameters");
  }

  static FreeSeries one(int n, int degree_cap) {
    FreeSeries f(n, degree_cap);
    f.set(Word(n, {}), C(1));
    return f;
  }
  static FreeSeries generator(int n, int degree_cap, int i) {
    FreeSeries f(n, degree_cap);
    f.set(Word(n, {i}), C(1));
    return f;
  }
  static FreeSeries monomial(int n, int degree_cap, const Word& alpha, C c) {
    FreeSeries f(n, degree_cap);
    f.set(alpha, std::move(c));
    return f;
  }

  int alphabet() const { return n_; }
  int degree_cap() const { return cap_; }
  bool truncated() const { return truncated_; }
  void mark_truncated() { truncated_ = true; }
  const std::map<Word, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void set(const Word& alpha, C c) {
    check_word(alpha);
    if (coeff_is_zero(c))
      terms_.erase(alpha);
    else
      terms_[alpha] = std::move(c);
  }
  void add_to(const Word& alpha, const C& c) {
    auto it = terms_.find(alpha);
    set(alpha, it == terms_.end() ? c : C(it->second + c));
  }
  C coeff(const Word& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? C(0) : it->second;
  }

  int degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.length(); }

  friend FreeSeries operator+(const FreeSeries& a, const FreeSeries& b) {
    a.check_compat(b);
    FreeSeries r = a;
    for (auto& [w, c] : b.terms_) r.add_to(w, c);
    r.truncated_ = a.truncated_ || b.truncated_;
    return r;
  }
  friend FreeSeries operator-(const FreeSeries& a, const FreeSeries& b) {
    a.check_compat(b);
    FreeSeries r = a;
    for (auto& [w, c] : b.terms_) r.add_to(w, C(-c));
    r.truncated_ = a.truncated_ || b.truncated_;
    return r;
  }
  FreeSeries scaled(const C& s) const {
    FreeSeries r(n_, cap_);
    r.truncated_ = truncated_;
    for (auto& [w, c] : terms_) r.add_to(w, C(c * s));
    return r;
  }

 private:
  void check_word(const Word& alpha) const {
    if (alpha.n != n_) throw error("alphabet mismatch");
    if (alpha.length() > cap_) throw error("word exceeds degree cap");
    alpha.validate();
  }
  void check_compat(const FreeSeries& other) const {
    if (n_ != other.n_) throw error("alphabet mismatch");
  }

  int n_, cap_;
  bool truncated_ = false;
  std::map<Word, C> terms_;
};

/// Concatenation product; terms beyond the degree cap are dropped and the
/// result is flagged truncated.
template <class C>
FreeSeries<C> fmul(const FreeSeries<C>& f, const FreeSeries<C>& g) {
  if (f.alphabet() != g.alphabet()) throw error("fmul: alphabet mismatch");
  int cap = std::min(f.degree_cap(), g.degree_cap());
  FreeSeries<C> r(f.alphabet(), cap);
  if (f.truncated() || g.truncated()) r.mark_truncated();
  for (auto& [wa, ca] : f.terms())
    for (auto& [wb, cb] : g.terms()) {
      if (wa.length() + wb.length() > cap) {
        r.mark_truncated();
        continue;
      }
      r.add_to(wa.concat(wb), C(ca * cb));
    }
  return r;
}

enum class FreeNormKind { taylor, universal, ball_bullet, ball_circ, ball_sup };

struct FreeNormFamily {
  FreeNormKind kind;
  double rho;
  double tau = 1.0; // universal only

  static FreeNormFamily taylor(double rho) { return {FreeNormKind::taylor, rho}; }
  static FreeNormFamily universal(double rho, double tau) {
    return {FreeNormKind::universal, rho, tau};
  }
  static FreeNormFamily ball_bullet(double rho) { return {FreeNormKind::ball_bullet, rho}; }
  static FreeNormFamily ball_circ(double rho) { return {FreeNormKind::ball_circ, rho}; }
  static FreeNormFamily ball_sup(double rho) { return {FreeNormKind::ball_sup, rho}; }
};

/// taylor:      sum |c_a| rho^|a|
/// universal:   sum |c_a| rho^|a| tau^{s(a)+1}
/// ball_bullet: sum_d (sum_{|a|=d} |c_a|^2)^{1/2} rho^d
/// ball_circ:   sum_k (sum_{a in p^{-1}(k)} |c_a|^2)^{1/2} rho^|k|
/// ball_sup:    sup_d (sum_{|a|=d} |c_a|^2)^{1/2} rho^d   (not submultiplicative)
template <class C>
double fnorm(const FreeSeries<C>& f, const FreeNormFamily& fam) {
  if (fam.rho <= 0) throw error("fnorm: rho must be positive");
  if (fam.kind == FreeNormKind::universal && fam.tau < 1.0)
    throw error("fnorm: tau must be >= 1");

  switch (fam.kind) {
    case FreeNormKind::taylor: {
      double s = 0;
      for (auto& [w, c] : f.terms()) s += coeff_abs(c) * std::pow(fam.rho, w.length());
      return s;
    }
    case FreeNormKind::universal: {
      double s = 0;
      for (auto& [w, c] : f.terms())
        s += coeff_abs(c) * std::pow(fam.rho, w.length()) *
             std::pow(fam.tau, static_cast<double>(word_stats(w).s + 1));
      return s;
    }
    case FreeNormKind::ball_bullet:
    case FreeNormKind::ball_sup: {
      std::map<int, double> by_degree; // degree -> sum |c|^2
      for (auto& [w, c] : f.terms()) {
        double a = coeff_abs(c);
        by_degree[w.length()] += a * a;
      }
      double total = 0, sup = 0;
      for (auto& [d, sq] : by_degree) {
        double block = std::sqrt(sq) * std::pow(fam.rho, d);
        total += block;
        sup = std::max(sup, block);
      }
      return fam.kind == FreeNormKind::ball_bullet ? total : sup;
    }
    case FreeNormKind::ball_circ: {
      std::map<MultiIndex, double> by_block;
      for (auto& [w, c] : f.terms()) {
        double a = coeff_abs(c);
        by_block[word_stats(w).p] += a * a;
      }
      double total = 0;
      for (auto& [k, sq] : by_block) total += std::sqrt(sq) * std::pow(fam.rho, k.total());
      return total;
    }
  }
  throw error("unreachable");
}

using SparseMatrix = Eigen::SparseMatrix<std::complex<double>>;

/// Tuple of n equal-dimension square matrices.
struct MatrixTuple {
  std::vector<SparseMatrix> mats;

  int count() const { return static_cast<int>(mats.size()); }
  long dim() const { return mats.empty() ? 0 : mats[0].rows(); }
  void validate() const;
};

/// gamma_f(T) = sum c_alpha T_alpha with T_* = I.
template <class C>
SparseMatrix evaluate_free(const FreeSeries<C>& f, const MatrixTuple& T) {
  T.validate();
  if (T.count() != f.alphabet()) throw error("evaluate_free: tuple size != alphabet");
  long dim = T.dim();
  SparseMatrix acc(dim, dim);
  SparseMatrix id(dim, dim);
  id.setIdentity();
  for (auto& [w, c] : f.terms()) {
    SparseMatrix prod = id;
    for (auto l : w.letters) prod = (prod * T.mats[l - 1]).pruned();
    acc = acc + SparseMatrix(prod * coeff_to_complex(c));
  }
  return acc;
}

struct FockIndex {
  int n, depth;
  std::vector<Word> basis;          // all words |alpha| <= depth, graded-lex
  std::map<Word, long> index;

  FockIndex(int n, int depth);
  long dimension() const { return static_cast<long>(basis.size()); }
};

/// (rho S_1, ..., rho S_n) on the truncated full Fock space of tensor degree
/// <= depth; S_i e_alpha = e_{i alpha}, zero on the top degree.
MatrixTuple fock_tuple(int n, double rho, int depth, long size_cap = 2000);

/// Largest singular value via power iteration on M*M (deterministic all-ones
/// start, 200 iterations, relative tolerance 1e-10).
double operator_norm_estimate(const SparseMatrix& m, int max_iters = 200, double tol = 1e-10);

/// r_d = (sup over words of length d of eval(alpha))^{1/d}, d = 1..d_max.
std::vector<double> sprad_profile(int n, const std::function<double(const Word&)>& norm_eval,
                                  int d_max);

} // namespace qdisk

#endif
