#include "qdisk/combinatorics.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace qdisk {

std::string Word::str() const {
  std::string s = "[";
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(static_cast<int>(letters[i]));
  }
  return s + "]";
}

Word Word::parse(const std::string& s, int n) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw parse_error("word literal must look like [1,2,1]: '" + s + "'");
  Word w;
  w.n = n;
  std::string body = t.substr(1, t.size() - 2);
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      int l = std::stoi(item);
      if (l < 1 || l > n) throw parse_error("letter " + item + " out of range for n=" + std::to_string(n));
      w.letters.push_back(static_cast<std::uint8_t>(l));
    }
  }
  return w;
}

std::string MultiIndex::str() const {
  std::string s = "(";
  for (int i = 0; i < n(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries[i]);
  }
  return s + ")";
}

MultiIndex MultiIndex::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw parse_error("multi-index literal must look like (2,1,0): '" + s + "'");
  std::vector<int> e;
  std::stringstream ss(t.substr(1, t.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = std::stoi(item);
    if (v < 0) throw parse_error("multi-index entry must be nonnegative: '" + s + "'");
    e.push_back(v);
  }
  if (e.empty()) throw parse_error("empty multi-index: '" + s + "'");
  return MultiIndex(std::move(e));
}

WordStats word_stats(const Word& alpha) {
  WordStats st;
  std::vector<int> counts(alpha.n, 0);
  long m = 0, s = 0;
  const auto& ls = alpha.letters;
  for (size_t i = 0; i < ls.size(); ++i) {
    counts[ls[i] - 1]++;
    for (size_t j = i + 1; j < ls.size(); ++j)
      if (ls[i] > ls[j]) ++m;
    if (i + 1 < ls.size() && ls[i] != ls[i + 1]) ++s;
  }
  st.p = MultiIndex(std::move(counts));
  st.m = m;
  st.s = (alpha.length() <= 1) ? alpha.length() - 1 : s;
  return st;
}

Word delta_word(const MultiIndex& k) {
  Word w;
  w.n = k.n();
  for (int i = 0; i < k.n(); ++i)
    for (int c = 0; c < k.entries[i]; ++c) w.letters.push_back(static_cast<std::uint8_t>(i + 1));
  return w;
}

mpz_class preimage_count(const MultiIndex& k) {
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(k.total()));
  for (int v : k.entries) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(v));
    num /= f;
  }
  return num;
}

long max_enumeration_cap() {
  if (const char* env = std::getenv("QDISK_MAX_ENUM")) {
    long v = std::atol(env);
    if (v > 0) return v;
  }
  return 1000000L;
}

void for_each_preimage(const MultiIndex& k, const std::function<void(const Word&)>& fn) {
  Word w = delta_word(k);
  // next_permutation from the sorted word walks all multiset permutations in
  // lexicographic order, starting at delta(k).
  do {
    fn(w);
  } while (std::next_permutation(w.letters.begin(), w.letters.end()));
}

std::vector<Word> enumerate_preimage(const MultiIndex& k) {
  mpz_class count = preimage_count(k);
  if (count > max_enumeration_cap())
    throw enumeration_too_large("card p^{-1}(k) = " + count.get_str() +
                                " exceeds the enumeration cap");
  std::vector<Word> out;
  out.reserve(count.get_ui());
  for_each_preimage(k, [&](const Word& w) { out.push_back(w); });
  return out;
}

namespace {
void fill_degree(int n, int d, std::vector<int>& cur, std::vector<MultiIndex>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(d);
    out.push_back(MultiIndex(cur));
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= d; ++v) {
    cur.push_back(v);
    fill_degree(n, d - v, cur, out);
    cur.pop_back();
  }
}
} // namespace

std::vector<MultiIndex> multi_indices_of_degree(int n, int d) {
  std::vector<MultiIndex> out;
  std::vector<int> cur;
  fill_degree(n, d, cur, out);
  return out;
}

std::vector<MultiIndex> multi_indices_up_to(int n, int d_max) {
  std::vector<MultiIndex> out;
  for (int d = 0; d <= d_max; ++d) {
    auto level = multi_indices_of_degree(n, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

long sigma(const MultiIndex& k, const MultiIndex& l) {
  if (k.n() != l.n()) throw error("sigma: dimension mismatch");
  long s = 0;
  for (int i = 0; i < k.n(); ++i)
    for (int j = i + 1; j < k.n(); ++j) s += static_cast<long>(k.entries[i]) * l.entries[j];
  return s;
}

LaurentPoly q_integer_poly(int j) {
  LaurentPoly p;
  for (int e = 0; e < j; ++e) p.set(e, ExactComplex(1));
  return p;
}

LaurentPoly q_factorial_poly(const MultiIndex& k) {
  LaurentPoly p = LaurentPoly::one();
  for (int v : k.entries)
    for (int j = 1; j <= v; ++j) p = p * q_integer_poly(j);
  return p;
}

QRatio q_ratio(const MultiIndex& k) {
  QRatio r;
  r.qfact_k = q_factorial_poly(k);
  LaurentPoly num = q_factorial_poly(MultiIndex({k.total()}));
  r.ratio = num.divide_exact(r.qfact_k);

  mpz_class count = preimage_count(k);
  if (count > max_enumeration_cap())
    throw enumeration_too_large("q_ratio: preimage too large");
  for_each_preimage(k, [&](const Word& w) {
    r.inv_poly.add_to(word_stats(w).m, ExactComplex(1));
  });
  return r;
}

ExactComplex q_integer(int j, const ExactComplex& q) {
  ExactComplex acc, pw(1);
  for (int e = 0; e < j; ++e) {
    acc += pw;
    pw *= q;
  }
  return acc;
}

ExactComplex q_factorial(const MultiIndex& k, const ExactComplex& q) {
  ExactComplex acc(1);
  for (int v : k.entries)
    for (int j = 1; j <= v; ++j) acc *= q_integer(j, q);
  return acc;
}

} // namespace qdisk
