// Command-line driver: explicit height bounds and complete rational point
// sets for curves cut on the square of a rank-one elliptic curve.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mordell/bounds.hpp"
#include "mordell/dataset.hpp"
#include "mordell/errors.hpp"
#include "mordell/heights.hpp"
#include "mordell/lower.hpp"
#include "mordell/reports.hpp"
#include "mordell/sieve.hpp"

namespace {

using namespace mordell;

std::string point_str(const ECPoint& P) {
  if (P.infinity) return "O";
  return "(" + P.x.get_str() + "," + P.y.get_str() + ")";
}

std::string pair_str(const std::pair<ECPoint, ECPoint>& pr) {
  return point_str(pr.first) + "x" + point_str(pr.second);
}

IntPoly parse_poly(const std::string& csv) {
  IntPoly p;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    mpz_class c;
    if (mpz_set_str(c.get_mpz_t(), tok.c_str(), 10) != 0)
      throw ParseError("bad polynomial coefficient: " + tok);
    p.c.push_back(c);
  }
  p.trim();
  return p;
}

struct App {
  std::string curves_path;
  std::string format = "json";
  std::vector<Report> out;

  std::vector<CurveRecord> curves() const {
    return load_curves(curves_path.empty() ? default_curves_path()
                                           : curves_path);
  }

  void emit() const {
    std::cout << render_all(out, parse_format(format));
  }
};

void add_constants(Report& r, const ConstantTable& t) {
  r.add_real("c1", t.c1.value());
  r.add_real("c2", t.c2.value());
  r.add_real("c3", t.c3.value());
  r.add_real("c4", t.c4.value());
  r.add_real("c5", t.c5.value());
  r.add_real("c6", t.c6.value());
  r.add_real("c7", t.c7.value());
  r.add_real("h_weier", t.hWE.value());
}

FamilySpec family_from_flags(const EllipticCurveQ& E, const std::string& fam,
                             unsigned n, const std::string& poly_csv) {
  if (fam == "cn") return FamilySpec::power(E, n);
  if (fam == "dn") return FamilySpec::cyclo(E, n);
  if (fam == "poly") return FamilySpec::poly(E, parse_poly(poly_csv));
  throw ParseError("unknown family: " + fam);
}

RealLB generator_height_lb(const CurveRecord& rec, double eps) {
  return canonical_height(rec.curve, rec.generator, RealUB::exact(eps)).lo;
}

void run_constants(App& app, const std::string& label, bool general) {
  const auto cs = app.curves();
  const CurveRecord& rec = find_curve(cs, label);
  ConstantTable t = table1(rec.curve, !general);
  TheoremConstants th = theorem_constants(rec.curve, !general);
  Report r;
  r.name = "constants:" + label;
  r.add("curve", label);
  r.add("column", general ? "general" : "rational");
  add_constants(r, t);
  r.add_real("C1", th.C1.value());
  r.add_real("C2", th.C2.value());
  r.add_real("C3", th.C3.value());
  app.out.push_back(r);
}

void run_curve_info(App& app, const std::string& label, double eps) {
  const auto cs = app.curves();
  const CurveRecord& rec = find_curve(cs, label);
  Report r;
  r.name = "curve-info:" + label;
  r.add("curve", label);
  r.add("A", rec.curve.A);
  r.add("B", rec.curve.B);
  r.add("discriminant", rec.curve.discriminant);
  r.add("j_invariant", rec.curve.j_invariant);
  r.add_real("h_weier", h_weier(rec.curve).value());
  r.add("torsion_order", static_cast<long>(rec.torsion.size()));
  std::string tor;
  for (const ECPoint& T : rec.torsion) tor += (tor.empty() ? "" : " ") + point_str(T);
  r.add("torsion_points", tor);
  if (rec.rank > 0) {
    r.add("generator", point_str(rec.generator));
    RealInterval h = canonical_height(rec.curve, rec.generator,
                                      RealUB::exact(eps));
    r.add_real("hhat_generator_lo", h.lo.value());
    r.add_real("hhat_generator_hi", h.hi.value());
  }
  app.out.push_back(r);
}

void add_bound(Report& r, const BoundReport& b) {
  r.add_real("hhat_upper", b.hhat_upper.value());
  r.add("a_box", b.a_box);
  r.add("b_box", b.b_box);
  r.add("formula", b.formula_id);
}

void run_bound(App& app, const std::string& label, const std::string& fam,
               unsigned n, const std::string& poly_csv, const mpz_class& a,
               const mpz_class& b, double eps) {
  const auto cs = app.curves();
  const CurveRecord& rec = find_curve(cs, label);
  Report r;
  r.name = "bound:" + label + ":" + fam;
  r.add("curve", label);
  if (fam == "genus2") {
    RealLB hg = generator_height_lb(rec, eps);
    DemjanenkoBounds db =
        demjanenko_bounds(a, b, hg, silverman_band(rec.curve).c3);
    r.add("index_bound_general", db.general);
    r.add("index_bound_kulesz", db.kulesz);
  } else {
    FamilySpec fs = family_from_flags(rec.curve, fam, n, poly_csv);
    RealLB hg = generator_height_lb(rec, eps);
    BoundReport br;
    switch (fs.kind) {
      case FamilyKind::PowerCn: br = bound_Cn(rec.curve, fs.n, hg); break;
      case FamilyKind::CyclotomicDn: br = bound_Dn(rec.curve, fs.n, hg); break;
      default: br = bound_poly(rec.curve, fs.p, hg); break;
    }
    r.add("family", fs.id());
    add_bound(r, br);
  }
  app.out.push_back(r);
}

void run_lower(App& app, const std::string& label, const std::string& fam,
               unsigned n, const mpz_class& ell_flag, double eps) {
  const auto cs = app.curves();
  const CurveRecord& rec = find_curve(cs, label);
  RealLB hg = generator_height_lb(rec, eps);
  long phi = fam == "dn"
                 ? static_cast<long>(std::get<0>(phi_omega2_mu(n)))
                 : static_cast<long>(n);
  long d1 = 2 * phi;
  Report r;
  r.name = "lower-bound:" + label + ":" + fam + std::to_string(n);
  r.add("curve", label);
  r.add("n", static_cast<long>(n));
  CrossoverMode mode;
  mpz_class ell = ell_flag;
  if (ell == 0 && rec.torsion.size() == 1 && !rec.generator.is_integral())
    ell = witness_prime_factor(rec.generator.denominator_e());
  if (ell > 1) {
    mode.trivial = true;
    mode.ell = ell;
    r.add("route", "trivial(" + ell.get_str() + ")");
    if (d1 > 3)
      r.add_real("lambda",
                 lambda_trivial(rec.curve, rec.generator, hg, ell, d1, 3)
                     .value());
  } else {
    long m = 0;
    ECPoint acc = ECPoint::O();
    for (long k = 1; k <= 12; ++k) {
      acc = add(rec.curve, acc, rec.generator);
      if (!acc.is_integral()) break;
      m = k;
    }
    mode.m_integral = m;
    r.add("route", "general(" + std::to_string(m) + ")");
    if (d1 > 3) {
      LowerBoundInput in{rec.curve, rec.generator, hg, {}, d1, 3, m, 10000};
      r.add_real("lambda", lambda_lower(in).value());
    }
  }
  long cross = crossover_n(rec.curve, fam == "dn" ? Family::Dn : Family::Cn,
                           rec.generator, hg, mode);
  r.add("crossover_n", cross);
  app.out.push_back(r);
}

void run_sieve(App& app, const std::string& label, const std::string& fam,
               unsigned n, const std::string& poly_csv, long a_box,
               double eps, int ntest) {
  const auto cs = app.curves();
  const CurveRecord& rec = find_curve(cs, label);
  FamilySpec fs = family_from_flags(rec.curve, fam, n, poly_csv);
  if (a_box <= 0) {
    RealLB hg = generator_height_lb(rec, eps);
    BoundReport br = fs.kind == FamilyKind::PowerCn
                         ? bound_Cn(rec.curve, fs.n, hg)
                         : fs.kind == FamilyKind::CyclotomicDn
                               ? bound_Dn(rec.curve, fs.n, hg)
                               : bound_poly(rec.curve, fs.p, hg);
    a_box = static_cast<long>(br.a_box.get_si());
  }
  SieveConfig cfg;
  cfg.ntest = ntest;
  SieveOutcome so = sieve_a(rec.curve, rec.generator, fs.p, a_box, cfg);
  Report r;
  r.name = "sieve:" + label + ":" + fs.id();
  r.add("curve", label);
  r.add("a_box", a_box);
  r.add("rounds", static_cast<long>(so.rounds.size()));
  r.add("stop_reason", so.stop_reason == SieveStop::EmptyList
                           ? "empty-list"
                           : so.stop_reason == SieveStop::StableNtest
                                 ? "stable-ntest"
                                 : "guard-exceeded");
  std::string surv;
  for (long a : so.survivors) surv += (surv.empty() ? "" : " ") + std::to_string(a);
  r.add("survivors", surv);
  app.out.push_back(r);
  if (so.stop_reason == SieveStop::GuardExceededStop)
    throw StabilityNotReached("sieve did not stabilize");
}

void run_solve(App& app, const std::string& label, const std::string& fam,
               unsigned n, unsigned n_max, const std::string& poly_csv,
               double eps) {
  const auto cs = app.curves();
  const CurveRecord& rec = find_curve(cs, label);
  RealLB hg = generator_height_lb(rec, eps);
  unsigned lo = n, hi = n_max ? n_max : n;
  for (unsigned k = lo; k <= hi; ++k) {
    FamilySpec fs = family_from_flags(rec.curve, fam, k, poly_csv);
    RationalPointsReport rep =
        solve_family(rec.curve, rec.generator, rec.torsion, fs, hg);
    Report r;
    r.name = "solve:" + label + ":" + fs.id();
    r.add("curve", label);
    r.add("family", fs.id());
    add_bound(r, rep.bound);
    r.add("lower_route", rep.lower_route);
    if (rep.lambda > 0) r.add_real("lambda", rep.lambda);
    r.add("path", rep.integral_path ? "integral" : "sieve");
    std::string pts;
    for (const auto& pr : rep.points)
      pts += (pts.empty() ? "" : " ") + pair_str(pr);
    r.add("points", pts);
    r.add("point_count", static_cast<long>(rep.points.size()));
    r.add_real("elapsed_seconds", rep.elapsed_seconds);
    app.out.push_back(r);
    if (fam == "poly") break;
  }
}

void run_demjanenko(App& app, const std::string& label, const mpz_class& a,
                    const mpz_class& b, bool do_solve, double eps) {
  const auto cs = app.curves();
  const CurveRecord& rec = find_curve(cs, label);
  RealLB hg = generator_height_lb(rec, eps);
  DemjanenkoBounds db =
      demjanenko_bounds(a, b, hg, silverman_band(rec.curve).c3);
  Report r;
  r.name = "demjanenko:a=" + a.get_str() + ",b=" + b.get_str();
  r.add("host_curve", label);
  r.add("index_bound_general", db.general);
  r.add("index_bound_kulesz", db.kulesz);
  mpz_class best = db.general < db.kulesz ? db.general : db.kulesz;
  r.add("index_bound", best);
  if (do_solve) {
    auto pts = genus2_solve(a, b, static_cast<long>(best.get_si()),
                            rec.generator, rec.torsion);
    std::string s;
    for (const Genus2Point& P : pts) {
      std::string one =
          P.at_infinity
              ? std::string(P.infinity_sign >= 0 ? "inf+" : "inf-")
              : "(" + P.x.get_str() + "," + P.y.get_str() + ")";
      s += (s.empty() ? "" : " ") + one;
    }
    r.add("points", s);
    r.add("point_count", static_cast<long>(pts.size()));
  }
  app.out.push_back(r);
}

// Coefficient tables for the family bounds as polynomials in n, one row per
// curve: the height bound, the square of the a-box, and (power family only)
// the square of the b-box.
void run_table(App& app, const std::string& theorem,
               const std::string& only_label, double eps) {
  const auto cs = app.curves();
  for (const CurveRecord& rec : cs) {
    if (rec.label.rfind("E", 0) != 0) continue;
    if (!only_label.empty() && rec.label != only_label) continue;
    ConstantTable t = table1(rec.curve, true);
    RealLB hg = generator_height_lb(rec, eps);
    RealUB scale = RealUB::decimal("1300.518");
    RealUB base = t.c6 + t.c6 + RealUB::decimal("3.01") + t.c1 + t.c1;
    Report r;
    r.name = "table:" + theorem + ":" + rec.label;
    r.add("curve", rec.label);
    auto over_hg = [&](const RealUB& x) { return ceil_of(x / hg); };
    if (theorem == "cn") {
      RealUB Q = scale * base;
      r.add("hhat_n2", ceil_of(Q.scale(4)));
      r.add("hhat_n1", ceil_of(Q.scale(12)));
      r.add("hhat_n0", ceil_of(Q.scale(9) + t.c2.scale(4)));
      r.add("abox_n2", over_hg(Q.scale(12)));
      r.add("abox_n1", over_hg(Q.scale(36) + t.c3.scale(6)));
      r.add("abox_n0", over_hg(Q.scale(27) + t.c2.scale(12) + t.c5.scale(3)));
      r.add("bbox_n3", over_hg(Q.scale(8)));
      r.add("bbox_n2", over_hg(Q.scale(24)));
      r.add("bbox_n1", over_hg(Q.scale(18) + t.c2.scale(8) + t.c4.scale(6)));
      r.add("bbox_n0", over_hg(t.c3.scale(9) + t.c7.scale(3)));
    } else if (theorem == "dn") {
      // prime n: phi(n) = n - 1, one odd prime factor
      RealUB Qp = scale * (log2_const_ub() + log2_const_ub() + base);
      r.add("hhat_n2", ceil_of(Qp.scale(4)));
      r.add("hhat_n1", ceil_of(Qp.scale(4)));
      r.add("hhat_n0", ceil_of(Qp + t.c2.scale(4)));
      r.add("box_n2", over_hg(Qp.scale(4)));
      r.add("box_n1", over_hg(Qp.scale(4)));
      r.add("box_n0", over_hg(Qp + t.c2.scale(4)));
    } else {
      throw ParseError("unknown theorem table: " + theorem);
    }
    app.out.push_back(r);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"explicit height bounds and rational point search on curves "
               "in the square of a rank-one elliptic curve"};
  cli.require_subcommand(1);
  cli.fallthrough();
  App app;
  cli.add_option("--curves", app.curves_path, "curve dataset path (JSONL)");
  cli.add_option("--format", app.format, "output format: json|csv|text");

  std::string label, fam = "cn", poly_csv, theorem = "cn", only;
  unsigned n = 1, n_max = 0;
  double eps = 1e-3;
  long a_box = 0;
  int ntest = 25;
  bool general = false, do_solve = false;
  std::string a_str = "1", b_str = "1", ell_str = "0";

  auto* c_const = cli.add_subcommand("constants", "height comparison constants");
  c_const->add_option("curve", label)->required();
  c_const->add_flag("--general", general, "number-field column");

  auto* c_info = cli.add_subcommand("curve-info", "model invariants");
  c_info->add_option("curve", label)->required();
  c_info->add_option("--eps", eps);

  auto* c_bound = cli.add_subcommand("bound", "height bound and search boxes");
  c_bound->add_option("--curve", label)->required();
  c_bound->add_option("--family", fam, "cn|dn|poly|genus2");
  c_bound->add_option("--n", n);
  c_bound->add_option("--poly", poly_csv, "coefficients, low degree first");
  c_bound->add_option("--a", a_str);
  c_bound->add_option("--b", b_str);
  c_bound->add_option("--eps", eps);

  auto* c_lower = cli.add_subcommand("lower-bound", "height lower bound");
  c_lower->add_option("--curve", label)->required();
  c_lower->add_option("--family", fam, "cn|dn");
  c_lower->add_option("--n", n);
  c_lower->add_option("--ell", ell_str, "witness prime (0: automatic)");
  c_lower->add_option("--eps", eps);

  auto* c_sieve = cli.add_subcommand("sieve", "prime sieve on multiples");
  c_sieve->add_option("--curve", label)->required();
  c_sieve->add_option("--family", fam);
  c_sieve->add_option("--n", n);
  c_sieve->add_option("--poly", poly_csv);
  c_sieve->add_option("--a-box", a_box, "0: derive from the bound");
  c_sieve->add_option("--ntest", ntest);
  c_sieve->add_option("--eps", eps);

  auto* c_solve = cli.add_subcommand("solve", "complete rational point set");
  c_solve->add_option("--curve", label)->required();
  c_solve->add_option("--family", fam, "cn|dn|poly");
  c_solve->add_option("--n", n);
  c_solve->add_option("--batch", n_max, "solve n..batch");
  c_solve->add_option("--poly", poly_csv);
  c_solve->add_option("--eps", eps);

  auto* c_dem = cli.add_subcommand("demjanenko", "genus-2 index bounds");
  c_dem->add_option("--a", a_str)->required();
  c_dem->add_option("--b", b_str)->required();
  c_dem->add_option("--curve", label, "host curve record")->required();
  c_dem->add_flag("--solve", do_solve, "enumerate the rational points");
  c_dem->add_option("--eps", eps);

  auto* c_table = cli.add_subcommand("table", "family bound coefficient tables");
  c_table->add_option("--theorem", theorem, "cn|dn");
  c_table->add_option("--curve", only, "restrict to one curve");
  c_table->add_option("--eps", eps);

  CLI11_PARSE(cli, argc, argv);

  try {
    mpz_class a(a_str), b(b_str), ell(ell_str);
    if (c_const->parsed()) run_constants(app, label, general);
    if (c_info->parsed()) run_curve_info(app, label, eps);
    if (c_bound->parsed()) run_bound(app, label, fam, n, poly_csv, a, b, eps);
    if (c_lower->parsed()) run_lower(app, label, fam, n, ell, eps);
    if (c_sieve->parsed())
      run_sieve(app, label, fam, n, poly_csv, a_box, eps, ntest);
    if (c_solve->parsed()) run_solve(app, label, fam, n, n_max, poly_csv, eps);
    if (c_dem->parsed()) run_demjanenko(app, label, a, b, do_solve, eps);
    if (c_table->parsed()) run_table(app, theorem, only, eps);
    app.emit();
  } catch (const StabilityNotReached& e) {
    app.emit();
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
