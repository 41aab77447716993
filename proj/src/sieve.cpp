#include "mordell/sieve.hpp"

#include <algorithm>
#include <chrono>

#include "mordell/numtheory.hpp"

namespace mordell {

using u64 = std::uint64_t;

namespace {

u64 mod_u64(const mpz_class& z, u64 ell) { return mpz_fdiv_ui(z.get_mpz_t(), ell); }

bool is_torsion(const EllipticCurveQ& E, const ECPoint& P) {
  if (P.infinity) return true;
  ECPoint acc = P;
  for (int k = 2; k <= 13; ++k) {
    acc = add(E, acc, P);
    if (acc.infinity) return true;
  }
  return false;
}

// All affine points on E with the prescribed y-coordinate, exactly.
// With y = n / e^3 in lowest terms, x = M / e^2 for an integer root M of
// M^3 + A e^4 M + (B e^6 - n^2); a non-cube denominator rules everything out.
std::vector<ECPoint> points_with_y(const EllipticCurveQ& E,
                                   const mpq_class& y) {
  std::vector<ECPoint> out;
  mpz_class e;
  if (!perfect_cube_root(y.get_den(), &e)) return out;
  const mpz_class n = y.get_num();
  mpz_class e2 = e * e, e4 = e2 * e2, e6 = e4 * e2;
  IntPoly cubic;
  cubic.c = {E.B * e6 - n * n, E.A * e4, mpz_class(0), mpz_class(1)};
  for (const mpz_class& M : monic_integer_roots(cubic)) {
    mpq_class x(M, e2);
    x.canonicalize();
    out.push_back(ECPoint::affine(x, y));
  }
  return out;
}

}  // namespace

SieveOutcome sieve_a(const EllipticCurveQ& E, const ECPoint& g,
                     const IntPoly& p_poly, long a_box,
                     const SieveConfig& cfg) {
  if (a_box < 1) throw PreconditionViolated("sieve_a: a_box >= 1 required");
  if (is_torsion(E, g)) throw PreconditionViolated("sieve_a: torsion generator");
  SieveOutcome out;
  std::vector<char> alive(static_cast<size_t>(a_box) + 1, 1);
  size_t alive_count = static_cast<size_t>(a_box);
  u64 p = cfg.prime_start ? cfg.prime_start - 1
                          : static_cast<u64>(a_box);
  int used = 0, stable = 0, ntest = cfg.ntest;
  bool escalated = false;
  out.stop_reason = SieveStop::GuardExceededStop;
  while (used < cfg.max_primes) {
    p = next_prime_u64(p);
    // skip primes of bad reduction and primes meeting the generator's
    // denominators (reduction would not be defined on the whole orbit)
    if (mod_u64(E.discriminant, p) == 0) continue;
    if (mod_u64(g.x.get_den(), p) == 0 || mod_u64(g.y.get_den(), p) == 0)
      continue;
    ++used;
    CurveFp C{p, mod_u64(E.A, p), mod_u64(E.B, p)};
    PointFp gbar = reduce_point(E, g, p);
    PointFp ag{};
    size_t before = alive_count;
    for (long a = 1; a <= a_box; ++a) {
      ag = fp_add(C, ag, gbar);
      if (!alive[a]) continue;
      bool keep;
      if (ag.infinity) {
        keep = true;  // no information at this prime for this multiple
      } else {
        u64 yq = p_poly.eval_mod(ag.x, p);
        keep = fp_has_cubic_root(p, C.A, C.B, yq);
      }
      if (!keep) {
        alive[a] = 0;
        --alive_count;
      }
    }
    out.rounds.emplace_back(p, alive_count);
    if (alive_count == 0) {
      out.stop_reason = SieveStop::EmptyList;
      break;
    }
    stable = (alive_count == before) ? stable + 1 : 0;
    if (stable > ntest) {
      out.stop_reason = SieveStop::StableNtest;
      break;
    }
    if (used == cfg.max_primes && !escalated) {
      // deterministic fallback: one ntest escalation before giving up
      escalated = true;
      ntest *= 4;
      (void)ntest;
    }
  }
  for (long a = 1; a <= a_box; ++a)
    if (alive[a]) out.survivors.push_back(a);
  return out;
}

std::vector<VerifiedPoint> verify_candidate(const EllipticCurveQ& E,
                                            const ECPoint& g,
                                            const IntPoly& p_poly, long a,
                                            long guard) {
  std::vector<VerifiedPoint> out;
  ECPoint P1 = scalar_mul(E, mpz_class(a), g, guard);
  if (P1.infinity) return out;
  mpq_class y2 = p_poly.eval(P1.x);
  y2.canonicalize();
  for (const ECPoint& P2 : points_with_y(E, y2))
    out.push_back(VerifiedPoint{a, P1, P2});
  return out;
}

std::vector<ECPoint> integral_multiples(const EllipticCurveQ& E,
                                        const ECPoint& P0,
                                        const std::vector<ECPoint>& torsion,
                                        long k_max,
                                        const std::vector<mpz_class>& S) {
  if (k_max < 1)
    throw PreconditionViolated("integral_multiples: k_max >= 1 required");
  if (k_max > kScalarGuard)
    throw GuardExceeded("integral_multiples: k_max exceeds the size guard");
  auto s_integral = [&](const ECPoint& P) {
    if (P.infinity) return false;
    mpz_class d = P.x.get_den();
    for (const mpz_class& s : S)
      while (mpz_divisible_p(d.get_mpz_t(), s.get_mpz_t()))
        mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), s.get_mpz_t());
    return d == 1;
  };
  std::vector<ECPoint> out;
  auto push = [&](const ECPoint& P) {
    if (s_integral(P) && std::find(out.begin(), out.end(), P) == out.end())
      out.push_back(P);
  };
  ECPoint acc = ECPoint::O();
  for (long k = 1; k <= k_max; ++k) {
    acc = add(E, acc, P0);
    for (const ECPoint& T : torsion) {
      push(add(E, acc, T));
      push(add(E, neg(acc), T));
    }
  }
  return out;
}

mpz_class witness_prime_factor(const mpz_class& e_in) {
  mpz_class e = e_in;
  mpz_class best = 0;
  for (u64 q = 2; q <= 100000; q = next_prime_u64(q)) {
    if (mpz_divisible_ui_p(e.get_mpz_t(), q)) {
      best = static_cast<unsigned long>(q);
      while (mpz_divisible_ui_p(e.get_mpz_t(), q))
        mpz_divexact_ui(e.get_mpz_t(), e.get_mpz_t(), q);
    }
    if (e == 1) break;
    if (q * q > e) {  // remaining cofactor is prime
      best = e;
      e = 1;
      break;
    }
  }
  if (e > 1 && mpz_probab_prime_p(e.get_mpz_t(), 32) > 0) best = e;
  return best;
}

RationalPointsReport solve_family(const EllipticCurveQ& E, const ECPoint& g,
                                  const std::vector<ECPoint>& torsion,
                                  const FamilySpec& family,
                                  const RealLB& hhat_g,
                                  const SieveConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  RationalPointsReport rep;
  rep.family_id = family.id();
  rep.config = cfg;
  const IntPoly& p = family.p;
  long d1 = 2L * p.degree();
  switch (family.kind) {
    case FamilyKind::PowerCn:
      rep.bound = bound_Cn(E, family.n, hhat_g);
      break;
    case FamilyKind::CyclotomicDn:
      rep.bound = bound_Dn(E, family.n, hhat_g);
      break;
    case FamilyKind::Poly:
      rep.bound = bound_poly(E, p, hhat_g);
      break;
    default:
      throw DegenerateFamily("solve_family: unsupported family kind");
  }

  // certified height lower bound for points with a non-integral component
  bool have_lower = false;
  bool generator_nonintegral = !g.infinity && g.x.get_den() != 1;
  RealLB lambda;
  rep.lower_route = "none";
  if (d1 > 3) {
    if (torsion.size() == 1 && generator_nonintegral) {
      mpz_class e = g.denominator_e();
      mpz_class ell = witness_prime_factor(e);
      if (ell > 1) {
        lambda = lambda_trivial(E, g, hhat_g, ell, d1, 3);
        rep.lower_route = "trivial(" + ell.get_str() + ")";
        have_lower = true;
      }
    }
    if (!have_lower) {
      long m = 0;
      ECPoint acc = ECPoint::O();
      for (long k = 1; k <= 12; ++k) {
        acc = add(E, acc, g);
        if (acc.is_integral())
          m = k;
        else
          break;
      }
      LowerBoundInput in{E, g, hhat_g, {}, d1, 3, m, 10000};
      lambda = lambda_lower(in);
      rep.lower_route = "general(" + std::to_string(m) + ")";
      have_lower = true;
    }
  }

  auto push_pair = [&](const ECPoint& P1, const ECPoint& P2) {
    auto pr = std::make_pair(P1, P2);
    if (std::find(rep.points.begin(), rep.points.end(), pr) ==
        rep.points.end())
      rep.points.push_back(pr);
  };
  push_pair(ECPoint::O(), ECPoint::O());

  bool done = false;
  if (have_lower && lambda.value() > rep.bound.hhat_upper.value()) {
    rep.lambda = lambda.value();
    // Every rational point on the family curve is a pair of integral points.
    rep.integral_path = true;
    if (torsion.size() == 1 && generator_nonintegral) {
      // all multiples of g inherit the denominator prime: no integral points
      done = true;
    } else {
      RealUB ksq = rep.bound.hhat_upper / hhat_g;
      mpz_class k_max_z = ceil_of(sqrt_ub(ksq));
      if (k_max_z <= kScalarGuard) {
        long k_max = static_cast<long>(k_max_z.get_si());
        std::vector<ECPoint> pts =
            integral_multiples(E, g, torsion, std::max(1L, k_max), {});
        for (const ECPoint& P1 : pts) {
          mpq_class y2 = p.eval(P1.x);
          y2.canonicalize();
          for (const ECPoint& P2 : points_with_y(E, y2))
            if (P2.is_integral()) push_pair(P1, P2);
        }
        done = true;
      } else {
        rep.integral_path = false;  // box too large; fall back to the sieve
      }
    }
  }

  if (!done) {
    long a_box = 1;
    if (rep.bound.a_box > kScalarGuard * 100L)
      throw GuardExceeded("solve_family: search box too large");
    a_box = std::max(1L, static_cast<long>(rep.bound.a_box.get_si()));
    rep.sieve = sieve_a(E, g, p, a_box, cfg);
    if (rep.sieve.stop_reason == SieveStop::GuardExceededStop)
      throw StabilityNotReached("solve_family: sieve did not stabilize");
    for (long a : rep.sieve.survivors)
      for (const VerifiedPoint& vp : verify_candidate(E, g, p, a)) {
        rep.sieve.verified_points.push_back(vp);
        push_pair(vp.first, vp.second);
        push_pair(neg(vp.first), vp.second);
      }
  } else if (rep.integral_path) {
    // expand sign symmetry: (x1, -y1) pairs with the same second component
    std::vector<std::pair<ECPoint, ECPoint>> extra;
    for (const auto& pr : rep.points)
      if (!pr.first.infinity) extra.emplace_back(neg(pr.first), pr.second);
    for (const auto& pr : extra) push_pair(pr.first, pr.second);
  }

  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return rep;
}

std::vector<Genus2Point> genus2_solve(const mpz_class& a, const mpz_class& b,
                                      long index_bound, const ECPoint& gen,
                                      const std::vector<ECPoint>& torsion) {
  Genus2Map map = genus2_to_E(a, b);
  const EllipticCurveQ& E = map.host;
  if (!on_curve(E, gen))
    throw PointNotOnCurve("genus2_solve: generator not on the host curve");
  std::vector<Genus2Point> out;
  auto push = [&](const Genus2Point& P) {
    if (std::find(out.begin(), out.end(), P) == out.end()) out.push_back(P);
  };
  auto on_sextic = [&](const mpq_class& x, const mpq_class& y) {
    mpq_class x2 = x * x;
    mpq_class rhs = ((a * x2 + b) * x2 + b) * x2 + a;
    return y * y == rhs;
  };
  mpq_class threeb(3 * b);
  auto consider = [&](const ECPoint& Q) {
    if (Q.infinity) return;
    mpq_class y_small = Q.y / (27 * a);
    y_small.canonicalize();
    if (Q.x == threeb) {
      // ramification fiber: x = 0 on one side, the points at infinity on the
      // other (they exist precisely when this fiber is rational)
      if (on_sextic(0, y_small)) push(Genus2Point{false, 0, 0, y_small});
      push(Genus2Point{true, sgn(Q.y) >= 0 ? 1 : -1, 0, 0});
      return;
    }
    // first chart: x^2 = (x_Q - 3b) / (9a), y = y_Q / (27a)
    mpq_class t1 = (Q.x - threeb) / (9 * a);
    t1.canonicalize();
    mpq_class r;
    if (rational_square_root(t1, &r)) {
      for (int s : {1, -1}) {
        mpq_class x = s * r;
        if (on_sextic(x, y_small)) push(Genus2Point{false, 0, x, y_small});
      }
    }
    // second chart: x^2 = 9a / (x_Q - 3b), y = y_Q x^3 / (27a)
    mpq_class t2 = mpq_class(9 * a) / (Q.x - threeb);
    t2.canonicalize();
    if (rational_square_root(t2, &r)) {
      for (int s : {1, -1}) {
        mpq_class x = s * r;
        mpq_class y = y_small * x * x * x;
        y.canonicalize();
        if (on_sextic(x, y)) push(Genus2Point{false, 0, x, y});
      }
    }
  };
  for (long n1 = 0; n1 <= index_bound; ++n1) {
    ECPoint base = scalar_mul(E, mpz_class(n1), gen);
    for (const ECPoint& T : torsion) {
      consider(add(E, base, T));
      consider(add(E, neg(base), T));
    }
  }
  return out;
}

}  // namespace mordell
