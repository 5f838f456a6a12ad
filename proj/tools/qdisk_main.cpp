// qdisk: quantum polydisk/ball series calculator and verification driver.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdisk/io.hpp"
#include "qdisk/quotient.hpp"
#include "qdisk/starprod.hpp"
#include "qdisk/verify.hpp"

using nlohmann::json;
using namespace qdisk;

namespace {

struct GlobalOpts {
  int n = 2;
  int cap = 8;
  std::string q = "1/2";
  double rho = 0.5;
  double tau = 2.0;
  std::uint64_t seed = 12345;
  bool json_out = false;
};

Geometry parse_geometry(const std::string& s) {
  if (s == "polydisk") return Geometry::polydisk;
  if (s == "ball") return Geometry::ball;
  throw CLI::ValidationError("--geometry", "must be 'polydisk' or 'ball'");
}

FreeNormFamily parse_family(const std::string& s, double rho, double tau) {
  if (s == "taylor") return FreeNormFamily::taylor(rho);
  if (s == "universal") return FreeNormFamily::universal(rho, tau);
  if (s == "bullet") return FreeNormFamily::ball_bullet(rho);
  if (s == "circ") return FreeNormFamily::ball_circ(rho);
  if (s == "sup") return FreeNormFamily::ball_sup(rho);
  throw CLI::ValidationError("--family", "unknown free norm family '" + s + "'");
}

std::vector<FloatComplex> parse_grid(const std::string& spec) {
  // "start:stop:steps" over |q| on the positive real axis.
  double a, b;
  int steps;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &a, &b, &steps) != 3 || steps < 2)
    throw error("grid spec must be start:stop:steps with steps >= 2");
  std::vector<FloatComplex> g;
  for (int i = 0; i < steps; ++i)
    g.emplace_back(a + (b - a) * i / (steps - 1), 0.0);
  return g;
}

json report_to_json(const SuiteReport& r) {
  return json{{"suite", r.suite},         {"cases", r.cases},   {"passes", r.passes},
              {"max_deviation", r.max_deviation}, {"wall_ms", r.wall_ms}, {"seed", r.seed},
              {"passed", r.passed()}};
}

int run(int argc, char** argv) {
  CLI::App app{"quantum polydisk/ball function algebras: series arithmetic, norms, "
               "quotient oracles, deformation fibers, and star products"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--n", g.n, "alphabet size / number of variables");
  app.add_option("--cap", g.cap, "degree cap");
  app.add_option("--q", g.q, "deformation parameter (exact scalar literal)");
  app.add_option("--rho", g.rho, "norm radius");
  app.add_option("--tau", g.tau, "universal-norm parameter (>= 1)");
  app.add_option("--seed", g.seed, "PRNG seed for randomized suites");
  app.add_flag("--json", g.json_out, "machine-readable output");

  // mul
  auto* mul = app.add_subcommand("mul", "multiply two series files of the same kind");
  std::vector<std::string> mul_files;
  mul->add_option("files", mul_files, "two series files")->expected(2);

  // normal-order
  auto* nord = app.add_subcommand("normal-order", "normal-order a free series at q");
  std::string nord_file;
  nord->add_option("file", nord_file, "free series file")->required();

  // norm
  auto* nrm = app.add_subcommand("norm", "norm of a series");
  std::string nrm_file, nrm_family = "taylor";
  nrm->add_option("file", nrm_file)->required();
  nrm->add_option("--family", nrm_family,
                  "taylor|universal|bullet|circ|sup (free) or polydisk|ball|ball_alt (q)");

  // quotient
  auto* quo = app.add_subcommand("quotient", "quotient norm: closed form vs oracle");
  std::string quo_geometry = "polydisk", quo_target;
  quo->add_option("--geometry", quo_geometry);
  quo->add_option("--target", quo_target, "qseries file")->required();

  // kappa
  auto* kap = app.add_subcommand("kappa", "norm-attaining section of a monomial");
  std::string kap_k, kap_geometry = "ball";
  kap->add_option("--k", kap_k, "multi-index, e.g. (2,1)")->required();
  kap->add_option("--geometry", kap_geometry);

  // fiber
  auto* fib = app.add_subcommand("fiber", "evaluate a defoseries at z = q");
  std::string fib_file;
  fib->add_option("file", fib_file)->required();

  // profile
  auto* prof = app.add_subcommand("profile", "fiber-norm profile over a |q| grid (CSV)");
  std::string prof_file, prof_geometry = "polydisk", prof_grid = "0.5:2.0:16";
  prof->add_option("file", prof_file)->required();
  prof->add_option("--geometry", prof_geometry);
  prof->add_option("--grid", prof_grid, "start:stop:steps");

  // star
  auto* st = app.add_subcommand("star", "truncated star product of two qseries");
  int st_order = 4;
  std::vector<std::string> st_files;
  st->add_option("--order", st_order, "h-order cap");
  st->add_option("files", st_files)->expected(2);

  // defect
  auto* def = app.add_subcommand("defect", "Rieffel defect norm at h");
  def->set_help_flag("--help", "print help");
  double def_h = 0.01;
  std::vector<std::string> def_files;
  def->add_option("--h", def_h)->required();
  def->add_option("files", def_files)->expected(2);

  // sprad
  auto* sp = app.add_subcommand("sprad", "joint-spectral-radius profile of the generators");
  std::string sp_family = "taylor";
  int sp_dmax = 10;
  sp->add_option("--family", sp_family, "taylor|universal|quantum");
  sp->add_option("--dmax", sp_dmax);

  // verify
  auto* ver = app.add_subcommand("verify", "run an invariant suite");
  std::string ver_suite = "all";
  ver->add_option("suite", ver_suite, "combinatorics|norms|quotient|deformation|star|fock|all");

  // Global flags may appear after the subcommand name.
  for (auto* sc : app.get_subcommands(nullptr)) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (mul->parsed()) {
    std::ifstream in(mul_files[0]);
    if (!in) throw error("cannot open '" + mul_files[0] + "'");
    switch (peek_kind(in)) {
      case SeriesKind::free_series:
        std::cout << serialize(fmul(load_free_series(mul_files[0]), load_free_series(mul_files[1])));
        break;
      case SeriesKind::q_series: {
        auto a = load_q_series(mul_files[0]);
        auto b = load_q_series(mul_files[1]);
        if (!(a.q == b.q)) throw error("q mismatch between operands");
        QContext ctx(a.series.n(), a.q);
        std::cout << serialize(qmul(a.series, b.series, ctx), a.q);
        break;
      }
      case SeriesKind::defo_series:
        std::cout << serialize(dmul(load_defo_series(mul_files[0]), load_defo_series(mul_files[1])));
        break;
    }
    return 0;
  }

  if (nord->parsed()) {
    auto f = load_free_series(nord_file);
    QContext ctx(f.alphabet(), ExactComplex::parse(g.q));
    std::cout << serialize(normal_order(f, ctx), ctx.q);
    return 0;
  }

  if (nrm->parsed()) {
    std::ifstream in(nrm_file);
    if (!in) throw error("cannot open '" + nrm_file + "'");
    double value;
    if (peek_kind(in) == SeriesKind::free_series) {
      value = fnorm(load_free_series(nrm_file), parse_family(nrm_family, g.rho, g.tau));
    } else {
      auto p = load_q_series(nrm_file);
      QContext ctx(p.series.n(), p.q);
      QNormFamily fam = nrm_family == "ball"     ? QNormFamily::ball(g.rho)
                        : nrm_family == "ball_alt" ? QNormFamily::ball_alt(g.rho)
                                                   : QNormFamily::polydisk(g.rho);
      value = qnorm(p.series, ctx, fam);
    }
    if (g.json_out)
      std::cout << json{{"norm", value}}.dump() << "\n";
    else
      std::cout << value << "\n";
    return 0;
  }

  if (quo->parsed()) {
    auto p = load_q_series(quo_target);
    QContext ctx(p.series.n(), ExactComplex::parse(g.q));
    QuotientProblem prob{p.series, ctx, g.rho, parse_geometry(quo_geometry)};
    double closed = quotient_norm(prob, QuotientMode::closed_form).value;
    double oracle = quotient_norm(prob, QuotientMode::oracle).value;
    double gap = std::abs(closed - oracle) / std::max({closed, oracle, 1e-300});
    if (g.json_out)
      std::cout << json{{"closed_form", closed}, {"oracle", oracle}, {"relative_gap", gap}}.dump()
                << "\n";
    else
      std::cout << "closed_form " << closed << "\noracle " << oracle << "\nrelative_gap " << gap
                << "\n";
    return 0;
  }

  if (kap->parsed()) {
    MultiIndex k = MultiIndex::parse(kap_k);
    QContext ctx(k.n(), ExactComplex::parse(g.q));
    Geometry geom = parse_geometry(kap_geometry);
    auto sec = section_kappa(k, ctx, geom);
    std::cout << serialize(sec);
    double free_norm = geom == Geometry::ball ? fnorm(sec, FreeNormFamily::ball_circ(g.rho))
                                              : fnorm(sec, FreeNormFamily::taylor(g.rho));
    auto xk = QSeries<ExactComplex>::monomial(k.n(), std::max(k.total(), 1), k, ExactComplex(1));
    QNormFamily qfam = geom == Geometry::ball ? QNormFamily::ball(g.rho)
                                              : QNormFamily::polydisk(g.rho);
    std::cout << "# free_norm " << free_norm << " quotient_norm " << qnorm(xk, ctx, qfam) << "\n";
    return 0;
  }

  if (fib->parsed()) {
    auto a = load_defo_series(fib_file);
    QContext ctx(a.n(), ExactComplex::parse(g.q));
    std::cout << serialize(fiber_eval<ExactComplex, ExactComplex>(a, ctx), ctx.q);
    return 0;
  }

  if (prof->parsed()) {
    auto a = load_defo_series(prof_file);
    auto grid = parse_grid(prof_grid);
    auto vals = fiber_norm_profile(a, g.rho, parse_geometry(prof_geometry), grid);
    std::cout << "abs_q,norm\n";
    for (size_t i = 0; i < grid.size(); ++i)
      std::cout << grid[i].real() << "," << vals[i] << "\n";
    return 0;
  }

  if (st->parsed()) {
    auto a = load_q_series(st_files[0]);
    auto b = load_q_series(st_files[1]);
    HSeries prod = star(a.series, b.series, st_order);
    for (int m = 0; m <= prod.order_cap(); ++m) {
      std::cout << "# h^" << m << "\n";
      std::cout << serialize(prod.coeff(m), a.q);
    }
    return 0;
  }

  if (def->parsed()) {
    auto a = load_q_series(def_files[0]);
    auto b = load_q_series(def_files[1]);
    double d = rieffel_defect(a.series, b.series, def_h, g.rho);
    if (g.json_out)
      std::cout << json{{"h", def_h}, {"defect", d}}.dump() << "\n";
    else
      std::cout << d << "\n";
    return 0;
  }

  if (sp->parsed()) {
    std::function<double(const Word&)> eval;
    if (sp_family == "taylor") {
      double rho = g.rho;
      eval = [rho](const Word& w) { return std::pow(rho, w.length()); };
    } else if (sp_family == "universal") {
      double rho = g.rho, tau = g.tau;
      eval = [rho, tau](const Word& w) {
        return std::pow(rho, w.length()) * std::pow(tau, double(word_stats(w).s + 1));
      };
    } else if (sp_family == "quantum") {
      ExactComplex q = ExactComplex::parse(g.q);
      double aq = q.abs(), rho = g.rho;
      eval = [aq, rho](const Word& w) {
        WordStats st = word_stats(w);
        double wq = std::min(std::pow(aq, double(sigma(st.p, st.p))), 1.0);
        return std::pow(aq, double(-st.m)) * wq * std::pow(rho, w.length());
      };
    } else {
      throw error("unknown sprad family '" + sp_family + "'");
    }
    auto prof_vals = sprad_profile(g.n, eval, sp_dmax);
    std::cout << "d,r_d\n";
    for (size_t d = 0; d < prof_vals.size(); ++d)
      std::cout << (d + 1) << "," << prof_vals[d] << "\n";
    return 0;
  }

  if (ver->parsed()) {
    VerifyConfig cfg;
    cfg.seed = g.seed;
    cfg.q = g.q;
    cfg.rho = g.rho;
    cfg.tau = g.tau;
    auto reports = run_verify(ver_suite, cfg);
    bool all_ok = true;
    for (auto& r : reports) {
      std::cout << report_to_json(r).dump() << "\n";
      all_ok = all_ok && r.passed();
    }
    return all_ok ? 0 : 1;
  }

  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const parse_error& e) {
    std::cerr << "qdisk: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << "qdisk: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "qdisk: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "qdisk: " << e.what() << "\n";
    return 1;
  }
}
