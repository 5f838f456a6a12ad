#ifndef QDISK_COMBINATORICS_HPP
#define QDISK_COMBINATORICS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "qdisk/scalars.hpp"

namespace qdisk {

/// Word over the alphabet {1..n}; the empty word is the unit monomial index.
struct Word {
  int n = 1;
  std::vector<std::uint8_t> letters;

  Word() = default;
  Word(int alphabet, std::vector<std::uint8_t> ls) : n(alphabet), letters(std::move(ls)) {
    validate();
  }
  Word(int alphabet, std::initializer_list<int> ls) : n(alphabet) {
    for (int l : ls) letters.push_back(static_cast<std::uint8_t>(l));
    validate();
  }

  void validate() const {
    if (n < 1) throw error("alphabet size must be >= 1");
    for (auto l : letters)
      if (l < 1 || l > n) throw error("word letter out of range");
  }

  int length() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }

  Word concat(const Word& other) const {
    Word r = *this;
    r.letters.insert(r.letters.end(), other.letters.begin(), other.letters.end());
    return r;
  }

  // Graded order: by length, then lexicographic.
  friend bool operator<(const Word& a, const Word& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return a.letters < b.letters;
  }
  friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }

  std::string str() const;
  static Word parse(const std::string& s, int n);
};

/// Element of Z_+^n indexing a commutative monomial x^k.
struct MultiIndex {
  std::vector<int> entries;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> e) : entries(std::move(e)) { validate(); }
  MultiIndex(std::initializer_list<int> e) : entries(e) { validate(); }
  static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(n, 0)); }

  void validate() const {
    for (int v : entries)
      if (v < 0) throw error("multi-index entries must be nonnegative");
  }

  int n() const { return static_cast<int>(entries.size()); }
  int total() const {
    int s = 0;
    for (int v : entries) s += v;
    return s;
  }

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    if (a.n() != b.n()) throw error("multi-index dimension mismatch");
    MultiIndex r = a;
    for (int i = 0; i < r.n(); ++i) r.entries[i] += b.entries[i];
    return r;
  }

  // Graded lexicographic order.
  friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.entries < b.entries;
  }
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.entries == b.entries;
  }

  std::string str() const;
  static MultiIndex parse(const std::string& s);
};

struct WordStats {
  MultiIndex p; ///< letter-count vector
  long m;       ///< inversion count: pairs i<j with alpha_i > alpha_j
  long s;       ///< adjacent unequal pairs; |alpha|-1 when |alpha| <= 1
};

WordStats word_stats(const Word& alpha);

/// The ascending word delta(k) = 1^{k_1} 2^{k_2} ... n^{k_n}.
Word delta_word(const MultiIndex& k);

/// |k|! / k! as an exact integer.
mpz_class preimage_count(const MultiIndex& k);

/// Enumeration cap for p^{-1}(k); overridable via QDISK_MAX_ENUM.
long max_enumeration_cap();

/// Visit every word alpha with p(alpha) = k, starting at delta(k), in
/// lexicographic order. Streaming form; no cap applies.
void for_each_preimage(const MultiIndex& k, const std::function<void(const Word&)>& fn);

/// All words with p(alpha) = k; first element is delta(k).
/// Throws enumeration_too_large when |k|!/k! exceeds the cap.
std::vector<Word> enumerate_preimage(const MultiIndex& k);

/// All multi-indices in Z_+^n with |k| = d (lexicographic order).
std::vector<MultiIndex> multi_indices_of_degree(int n, int d);

/// All multi-indices in Z_+^n with |k| <= d_max, graded.
std::vector<MultiIndex> multi_indices_up_to(int n, int d_max);

/// sigma(k, l) = sum_{i<j} k_i l_j.
long sigma(const MultiIndex& k, const MultiIndex& l);

/// q-integer [j]_q = 1 + q + ... + q^{j-1} as a polynomial in q.
LaurentPoly q_integer_poly(int j);

/// [k]_q! = prod_i [k_i]_q! as a polynomial in q.
LaurentPoly q_factorial_poly(const MultiIndex& k);

struct QRatio {
  LaurentPoly qfact_k;  ///< [k]_q! (symbolic in q)
  LaurentPoly ratio;    ///< [|k|]_q! / [k]_q!, exact polynomial division
  LaurentPoly inv_poly; ///< sum over p^{-1}(k) of q^{m(alpha)}, by enumeration
};

/// The Gaussian multinomial and the inversion generating polynomial of
/// p^{-1}(k); the two routes are independent and must agree.
QRatio q_ratio(const MultiIndex& k);

/// [j]_q evaluated at an exact q.
ExactComplex q_integer(int j, const ExactComplex& q);

/// [k]_q! at an exact q.
ExactComplex q_factorial(const MultiIndex& k, const ExactComplex& q);

} // namespace qdisk

#endif
