#include "qdisk/verify.hpp"

#include <chrono>

#include "qdisk/io.hpp"
#include "qdisk/quotient.hpp"
#include "qdisk/random_gen.hpp"
#include "qdisk/starprod.hpp"

namespace qdisk {

namespace {

class Checker {
 public:
  explicit Checker(std::string name, std::uint64_t seed) {
    rep_.suite = std::move(name);
    rep_.seed = seed;
    start_ = std::chrono::steady_clock::now();
  }

  void check(bool ok, double deviation = 0.0) {
    ++rep_.cases;
    if (ok) ++rep_.passes;
    rep_.max_deviation = std::max(rep_.max_deviation, deviation);
  }
  void check_rel(double a, double b, double tol) {
    double dev = std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
    check(dev <= tol, dev);
  }
  /// a <= b with relative slack.
  void check_le(double a, double b, double slack) {
    double excess = (a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
    check(excess <= slack, std::max(excess, 0.0));
  }

  SuiteReport finish() {
    auto end = std::chrono::steady_clock::now();
    rep_.wall_ms = std::chrono::duration<double, std::milli>(end - start_).count();
    return rep_;
  }

 private:
  SuiteReport rep_;
  std::chrono::steady_clock::time_point start_;
};

std::vector<ExactComplex> standard_q_values() {
  return {ExactComplex(Rational(1, 2)), ExactComplex(Rational(2)),
          ExactComplex(Rational(3, 5), Rational(4, 5)),
          ExactComplex(Rational(3, 4), Rational(1))}; // (3+4i)/4, off the unit circle
}

SuiteReport suite_combinatorics(const VerifyConfig& cfg) {
  Checker c("combinatorics", cfg.seed);

  for (int n = 1; n <= cfg.n_max; ++n) {
    for (auto& k : multi_indices_up_to(n, cfg.k_max)) {
      // Preimage count and the inversion generating identity.
      QRatio r = q_ratio(k);
      ExactComplex cnt = r.inv_poly.evaluate(ExactComplex(1));
      c.check(cnt == ExactComplex(Rational(preimage_count(k))));
      c.check(r.ratio == r.inv_poly);

      long sig = sigma(k, k);
      long m_min = sig, m_max = 0;
      bool stats_ok = true;
      for_each_preimage(k, [&](const Word& w) {
        WordStats st = word_stats(w);
        long len = w.length();
        if (!(st.p == k) || st.m < 0 || st.m > sig || st.m > len * len ||
            st.s + 1 > std::max(len, 1L))
          stats_ok = false;
        m_min = std::min(m_min, st.m);
        m_max = std::max(m_max, st.m);
      });
      c.check(stats_ok);
      c.check(m_min == 0 && m_max == sig);
    }

    // Concatenation: m(delta(k) delta(l)) = sigma(l, k).
    for (auto& k : multi_indices_up_to(n, 3))
      for (auto& l : multi_indices_up_to(n, 3)) {
        Word cat = delta_word(k).concat(delta_word(l));
        c.check(word_stats(cat).m == sigma(l, k));
      }
  }

  // s(*) = -1 and single letters.
  c.check(word_stats(Word(2, {})).s == -1);
  c.check(word_stats(Word(2, {2})).s == 0);
  return c.finish();
}

SuiteReport suite_norms(const VerifyConfig& cfg) {
  Checker c("norms", cfg.seed);
  SeriesGen gen(cfg.seed);
  double rho = cfg.rho, tau = cfg.tau;
  const int n = 2, cap = 8;

  for (int it = 0; it < cfg.random_pairs; ++it) {
    auto f = gen.free_series(n, cap, 6, 4);
    // Norm chain and ball inequalities.
    c.check_le(fnorm(f, FreeNormFamily::taylor(rho)),
               fnorm(f, FreeNormFamily::universal(rho, tau)), 1e-12);
    c.check_le(fnorm(f, FreeNormFamily::universal(rho, tau)),
               fnorm(f, FreeNormFamily::taylor(rho * tau)), 1e-12);
    c.check_le(fnorm(f, FreeNormFamily::ball_bullet(rho)),
               fnorm(f, FreeNormFamily::ball_circ(rho)), 1e-12);
    c.check_le(fnorm(f, FreeNormFamily::ball_sup(rho)),
               fnorm(f, FreeNormFamily::ball_bullet(rho)), 1e-12);
    double tau2 = rho * 2;
    c.check_le(fnorm(f, FreeNormFamily::ball_bullet(rho)),
               tau2 / (tau2 - rho) * fnorm(f, FreeNormFamily::ball_sup(tau2)), 1e-12);
    c.check_le(fnorm(f, FreeNormFamily::taylor(rho)),
               fnorm(f, FreeNormFamily::ball_bullet(rho * std::sqrt(double(n)))), 1e-12);

    // Submultiplicativity (ball_sup excluded).
    auto g = gen.free_series(n, cap, 6, 4);
    auto fg = fmul(f, g);
    if (!fg.truncated()) {
      for (auto fam : {FreeNormFamily::taylor(rho), FreeNormFamily::universal(rho, tau),
                       FreeNormFamily::ball_bullet(rho), FreeNormFamily::ball_circ(rho)})
        c.check_le(fnorm(fg, fam), fnorm(f, fam) * fnorm(g, fam), cfg.rel_tol);
    }
  }

  // q-side norms.
  for (auto& q : standard_q_values()) {
    QContext ctx(n, q);
    for (int it = 0; it < 50; ++it) {
      auto f = gen.q_series(n, cap, 5, 4);
      c.check_rel(qnorm(f, ctx, QNormFamily::ball(rho)), qnorm(f, ctx, QNormFamily::ball_alt(rho)),
                  1e-12);
      auto g = gen.q_series(n, cap, 5, 4);
      auto fg = qmul(f, g, ctx);
      if (!fg.truncated()) {
        c.check_le(qnorm(fg, ctx, QNormFamily::polydisk(rho)),
                   qnorm(f, ctx, QNormFamily::polydisk(rho)) *
                       qnorm(g, ctx, QNormFamily::polydisk(rho)),
                   cfg.rel_tol);
        c.check_le(qnorm(fg, ctx, QNormFamily::ball(rho)),
                   qnorm(f, ctx, QNormFamily::ball(rho)) * qnorm(g, ctx, QNormFamily::ball(rho)),
                   cfg.rel_tol);
      }
      // qmul vs normal_order(fmul(lift, lift)).
      auto lifted = normal_order(fmul(monomial_lift(f), monomial_lift(g)), ctx);
      if (!lifted.truncated() && !fg.truncated()) c.check(lifted == fg);
    }
  }

  // Weight identities on squares.
  for (int n2 = 1; n2 <= std::min(cfg.n_max, 4); ++n2)
    for (auto& q : standard_q_values()) {
      QContext ctx(n2, q);
      for (auto& k : multi_indices_up_to(n2, std::min(cfg.weight_k_max, 5)))
        c.check(weight_w_sq(k, ctx) == weight_w_sq_bruteforce(k, ctx));
    }

  // q = 1 degeneration: polydisk norm is sum |c_k| rho^|k|.
  {
    QContext ctx1(n, ExactComplex(1));
    for (int it = 0; it < 20; ++it) {
      auto f = gen.q_series(n, cap, 5, 4);
      double plain = 0;
      for (auto& [k, cc] : f.terms()) plain += cc.abs() * std::pow(rho, k.total());
      c.check_rel(qnorm(f, ctx1, QNormFamily::polydisk(rho)), plain, 1e-12);
      // ball norm at q=1 is sum |c_k| (k!/|k|!)^{1/2} rho^|k|
      double ball = 0;
      for (auto& [k, cc] : f.terms()) {
        Rational ratio = Rational(1) / Rational(preimage_count(k));
        ball += cc.abs() * std::sqrt(to_double(ratio)) * std::pow(rho, k.total());
      }
      c.check_rel(qnorm(f, ctx1, QNormFamily::ball(rho)), ball, 1e-12);
    }
  }
  return c.finish();
}

SuiteReport suite_quotient(const VerifyConfig& cfg) {
  Checker c("quotient", cfg.seed);
  SeriesGen gen(cfg.seed);
  const int n = 3;

  for (auto& q : standard_q_values()) {
    QContext ctx(n, q);
    for (auto& k : multi_indices_up_to(n, std::min(cfg.quotient_k_max, 5))) {
      if (k.total() == 0) continue;
      QSeries<ExactComplex> target =
          QSeries<ExactComplex>::monomial(n, k.total(), k, gen.exact_complex());
      for (auto geom : {Geometry::polydisk, Geometry::ball}) {
        QuotientProblem prob{target, ctx, cfg.rho, geom};
        double closed = quotient_norm(prob, QuotientMode::closed_form).value;
        QuotientResult oracle = quotient_norm(prob, QuotientMode::oracle);
        c.check_rel(closed, oracle.value, cfg.rel_tol);
        if (geom == Geometry::ball) c.check(oracle.max_normal_eq_residual <= 1e-12);
      }
      // Sections: pi(kappa(x^k)) = x^k exactly, norms attained.
      for (auto geom : {Geometry::polydisk, Geometry::ball}) {
        auto sec = section_kappa(k, ctx, geom);
        auto back = normal_order(sec, ctx);
        c.check(back == QSeries<ExactComplex>::monomial(n, k.total(), k, ExactComplex(1)));
        QSeries<ExactComplex> xk =
            QSeries<ExactComplex>::monomial(n, k.total(), k, ExactComplex(1));
        if (geom == Geometry::ball)
          c.check_rel(fnorm(sec, FreeNormFamily::ball_circ(cfg.rho)),
                      qnorm(xk, ctx, QNormFamily::ball(cfg.rho)), 1e-12);
        else
          c.check_rel(fnorm(sec, FreeNormFamily::taylor(cfg.rho)),
                      qnorm(xk, ctx, QNormFamily::polydisk(cfg.rho)), 1e-12);
      }
    }

    // Ideal membership maps to zero.
    for (int it = 0; it < 100; ++it) {
      auto probe = gen.free_series(n, 4, 3, 2);
      auto probe2 = gen.free_series(n, 4, 3, 2);
      c.check(verify_ideal(ctx, 1, 2, probe, probe2));
      c.check(verify_ideal(ctx, 2, 3, probe, probe2));
    }
  }
  return c.finish();
}

SuiteReport suite_deformation(const VerifyConfig& cfg) {
  Checker c("deformation", cfg.seed);
  SeriesGen gen(cfg.seed);

  // omega inequality, exhaustive.
  for (int n = 1; n <= 3; ++n) {
    auto idx = multi_indices_up_to(n, cfg.defo_k_max);
    for (auto& k : idx)
      for (auto& l : idx)
        for (long p = -cfg.defo_p_max; p <= cfg.defo_p_max; ++p)
          for (long s = -cfg.defo_p_max; s <= cfg.defo_p_max; s += 5) {
            long lhs = std::abs(omega(k + l, p + s - sigma(l, k)));
            long rhs = std::abs(omega(k, p)) + std::abs(omega(l, s));
            c.check(lhs <= rhs);
          }
  }

  // dnorm submultiplicativity: exhaustive monomials (integer exponent
  // comparison) and random series.
  {
    const int n = 2;
    auto idx = multi_indices_up_to(n, 3);
    for (auto& k : idx)
      for (auto& l : idx)
        for (long p = -6; p <= 6; p += 3)
          for (long s = -6; s <= 6; s += 3) {
            long wp = std::abs(omega(k, p)), ws = std::abs(omega(l, s));
            long wprod = std::abs(omega(k + l, p + s - sigma(l, k)));
            c.check(wprod <= wp + ws);
          }
    for (int it = 0; it < cfg.random_pairs / 5; ++it) {
      auto a = gen.defo_series(n, 8, 64, 4, 3, 6);
      auto b = gen.defo_series(n, 8, 64, 4, 3, 6);
      auto ab = dmul(a, b);
      if (!ab.truncated())
        c.check_le(dnorm(ab, cfg.rho, cfg.tau), dnorm(a, cfg.rho, cfg.tau) * dnorm(b, cfg.rho, cfg.tau),
                   cfg.rel_tol);
    }
  }

  // alpha_with_inversions, exhaustive.
  for (int n = 1; n <= cfg.n_max; ++n)
    for (auto& k : multi_indices_up_to(n, std::min(cfg.k_max, 6)))
      for (long m = 0; m <= sigma(k, k); ++m) {
        Word a = alpha_with_inversions(k, m);
        WordStats st = word_stats(a);
        c.check(st.p == k && st.m == m && st.s <= n + 2);
      }

  // canonical_split round trip, relations, fiber homomorphism.
  {
    const int n = 3;
    for (int it = 0; it < 200; ++it) {
      auto a = gen.defo_series(n, 8, 64, 4, 3, 6);
      auto back = rebuild_from_split(n, 8, 64, canonical_split(a));
      c.check(back == a);
    }
    // x_i x_j = z x_j x_i for i < j and z central.
    long zwin = 8;
    auto z = DefoSeries<ExactComplex>::z_power(n, 4, zwin, 1);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        auto xi = DefoSeries<ExactComplex>::generator(n, 4, zwin, i);
        auto xj = DefoSeries<ExactComplex>::generator(n, 4, zwin, j);
        c.check(dmul(xi, xj) == dmul(z, dmul(xj, xi)));
        c.check(dmul(dmul(xi, z), xj) == dmul(xi, dmul(z, xj)));
      }

    for (auto& q : standard_q_values()) {
      QContext ctx(n, q);
      for (int it = 0; it < 200; ++it) {
        auto a = gen.defo_series(n, 8, 64, 3, 2, 4);
        auto b = gen.defo_series(n, 8, 64, 3, 2, 4);
        auto ab = dmul(a, b);
        if (ab.truncated()) continue;
        auto lhs = fiber_eval<ExactComplex, ExactComplex>(ab, ctx);
        auto rhs = qmul(fiber_eval<ExactComplex, ExactComplex>(a, ctx),
                        fiber_eval<ExactComplex, ExactComplex>(b, ctx), ctx);
        c.check(lhs == rhs);
      }
    }
  }
  return c.finish();
}

SuiteReport suite_star(const VerifyConfig& cfg) {
  Checker c("star", cfg.seed);
  SeriesGen gen(cfg.seed);
  const int n = 2, cap = 16;
  const int N = cfg.star_order;

  // Generator relations to all stored orders.
  {
    auto x1 = QSeries<ExactComplex>::generator(n, cap, 1);
    auto x2 = QSeries<ExactComplex>::generator(n, cap, 2);
    HSeries lhs = star(x2, x1, N);
    HPoly<ExactComplex> phase = hpoly_exp_factor(1, N);
    MultiIndex k11({1, 1});
    bool ok = true;
    for (int m = 0; m <= N; ++m)
      if (!(lhs.coeff(m) ==
            QSeries<ExactComplex>::monomial(n, cap, k11, phase[m])))
        ok = false;
    c.check(ok);
    HSeries rhs = star(x1, x2, N);
    c.check(rhs.coeff(0) == QSeries<ExactComplex>::monomial(n, cap, k11, ExactComplex(1)));
    for (int m = 1; m <= N; ++m) c.check(rhs.coeff(m).is_zero());
  }

  for (int it = 0; it < cfg.random_triples; ++it) {
    auto f = gen.q_series(n, cap, 4, 4);
    auto g = gen.q_series(n, cap, 4, 4);
    auto w = gen.q_series(n, cap, 4, 4);

    // Associativity exact to order N.
    c.check((star(star(f, g, N), HSeries::lift(w, N)) -
             star(HSeries::lift(f, N), star(g, w, N)))
                .is_zero());

    // h^0 term is the commutative product; h^1 commutator equals i{f,g}.
    HSeries fg = star(f, g, N), gf = star(g, f, N);
    QSeries<ExactComplex> comm1 = fg.coeff(1) - gf.coeff(1);
    c.check(comm1 == poisson(f, g).scaled(ExactComplex::i()));
    QSeries<ExactComplex> sym(n, cap);
    for (auto& [k, a] : f.terms())
      for (auto& [l, b] : g.terms()) sym.add_to(k + l, a * b);
    c.check(fg.coeff(0) == sym);

    // Poisson algebra: antisymmetry, Leibniz, Jacobi.
    c.check(poisson(f, f).is_zero());
    auto fgq = [&](const QSeries<ExactComplex>& a, const QSeries<ExactComplex>& b) {
      QSeries<ExactComplex> r(n, cap);
      for (auto& [k, ca] : a.terms())
        for (auto& [l, cb] : b.terms()) r.add_to(k + l, ca * cb);
      return r;
    };
    c.check(poisson(f, fgq(g, w)) == fgq(poisson(f, g), w) + fgq(g, poisson(f, w)));
    auto jac = poisson(f, poisson(g, w)) + poisson(g, poisson(w, f)) + poisson(w, poisson(f, g));
    c.check(jac.is_zero());

    // Star vs fiber product at q = e^{ih}.
    for (double h : {0.1, 1.0}) c.check(star_fiber_compare(f, g, h) <= 1e-10);
  }

  // u_k sections.
  for (int n2 = 1; n2 <= 3; ++n2)
    for (auto& k : multi_indices_up_to(n2, 6))
      c.check(u_section_check(k, 4));

  // Rieffel defect decays roughly like h.
  for (int it = 0; it < 20; ++it) {
    auto f = gen.q_series(n, cap, 4, 4);
    auto g = gen.q_series(n, cap, 4, 4);
    std::vector<double> hs{1e-1, 1e-2, 1e-3, 1e-4}, ds;
    for (double h : hs) ds.push_back(rieffel_defect(f, g, h, 0.5));
    if (ds[0] == 0.0) {
      c.check(ds[3] == 0.0); // commuting pair: defect identically zero
      continue;
    }
    double slope = (std::log(ds[0]) - std::log(ds[3])) / (std::log(hs[0]) - std::log(hs[3]));
    c.check(slope >= 0.9, std::max(0.0, 0.9 - slope));
  }
  return c.finish();
}

SuiteReport suite_fock(const VerifyConfig& cfg) {
  Checker c("fock", cfg.seed);
  SeriesGen gen(cfg.seed);
  double rho = cfg.rho;

  for (auto [n, depth] : std::vector<std::pair<int, int>>{{1, 6}, {2, 5}, {3, 4}}) {
    MatrixTuple T = fock_tuple(n, rho, depth);
    // Row norm on basis vectors below the top degree: ||T_i e|| = rho.
    FockIndex fx(n, depth);
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXcd e = Eigen::VectorXcd::Zero(fx.dimension());
      e(0) = 1.0;
      c.check_rel((T.mats[i] * e).norm(), rho, 1e-12);
    }

    for (int it = 0; it < 40; ++it) {
      auto f = gen.free_series(n, depth - 1, 5, depth - 1);
      SparseMatrix M = evaluate_free(f, T);
      // Vacuum: ||f(rho S) e_0||^2 = sum |c_a|^2 rho^{2|a|}, exact route.
      Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(fx.dimension());
      e0(0) = 1.0;
      double vac = (M * e0).norm();
      double l2 = 0;
      for (auto& [w, cc] : f.terms()) l2 += std::norm(cc.to_complex()) * std::pow(rho, 2 * w.length());
      c.check_rel(vac, std::sqrt(l2), 1e-10);

      double op = operator_norm_estimate(M, 200, 1e-10);
      op = std::max(op, vac);
      c.check_le(fnorm(f, FreeNormFamily::ball_sup(rho)), op, 1e-8);
      c.check_le(op, fnorm(f, FreeNormFamily::ball_bullet(rho)), 1e-8);
    }
  }
  return c.finish();
}

} // namespace

std::vector<SuiteReport> run_verify(const std::string& suite, const VerifyConfig& cfg) {
  std::vector<SuiteReport> out;
  auto want = [&](const char* name) { return suite == "all" || suite == name; };
  bool known = suite == "all";
  if (want("combinatorics")) out.push_back(suite_combinatorics(cfg)), known = true;
  if (want("norms")) out.push_back(suite_norms(cfg)), known = true;
  if (want("quotient")) out.push_back(suite_quotient(cfg)), known = true;
  if (want("deformation")) out.push_back(suite_deformation(cfg)), known = true;
  if (want("star")) out.push_back(suite_star(cfg)), known = true;
  if (want("fock")) out.push_back(suite_fock(cfg)), known = true;
  if (!known) throw error("unknown suite '" + suite + "'");
  return out;
}

} // namespace qdisk
