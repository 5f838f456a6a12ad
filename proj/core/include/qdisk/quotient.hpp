#ifndef QDISK_QUOTIENT_HPP
#define QDISK_QUOTIENT_HPP

#include "qdisk/quantum.hpp"

namespace qdisk {

/// Quotient-norm instance: each multi-index of the target is an independent
/// subproblem (the defining ideal is graded).
struct QuotientProblem {
  QSeries<ExactComplex> target;
  QContext ctx;
  double rho;
  Geometry geometry;
};

enum class QuotientMode { closed_form, oracle };

struct QuotientResult {
  double value;
  double max_normal_eq_residual = 0.0; // ball oracle only
};

/// closed_form: the weighted qnorm of the target (the quotient norm equals it).
/// oracle: per-monomial minimization of the free norm over preimages —
/// l^1 vertex enumeration with pairwise-improvement check for the polydisk,
/// minimum-norm least squares for the ball.
QuotientResult quotient_norm(const QuotientProblem& prob, QuotientMode mode);

/// Continuous section kappa: a free-series preimage of x^k attaining the
/// quotient norm. Ball: the Lagrange-multiplier optimum
/// c0_alpha = |q|^{-2m(alpha)} / sum_beta |q|^{-2m(beta)}, term coefficient
/// c0_alpha q^{m(alpha)}. Polydisk: a single extremal word (delta(k) when
/// |q| >= 1, its reversal otherwise).
FreeSeries<ExactComplex> section_kappa(const MultiIndex& k, const QContext& ctx,
                                       Geometry geometry);

/// normal_order(probe * (zeta_i zeta_j - q zeta_j zeta_i) * probe2) == 0.
bool verify_ideal(const QContext& ctx, int i, int j, const FreeSeries<ExactComplex>& probe,
                  const FreeSeries<ExactComplex>& probe2);

} // namespace qdisk

#endif
