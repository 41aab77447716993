#include "mordell/ec.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>

#include "mordell/numtheory.hpp"

namespace mordell {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

EllipticCurveQ curve_new(const mpz_class& A, const mpz_class& B) {
  mpz_class d = 4 * A * A * A + 27 * B * B;
  if (d == 0) throw SingularCurve("4A^3 + 27B^2 = 0");
  EllipticCurveQ E;
  E.A = A;
  E.B = B;
  E.discriminant = -16 * d;
  mpz_class fourA = 4 * A;
  E.j_invariant = mpq_class(-1728 * fourA * fourA * fourA, E.discriminant);
  E.j_invariant.canonicalize();
  return E;
}

mpz_class ECPoint::denominator_e() const {
  if (infinity) return 1;
  mpz_class e;
  mpz_sqrt(e.get_mpz_t(), x.get_den().get_mpz_t());
  return e;
}

bool on_curve(const EllipticCurveQ& E, const ECPoint& P) {
  if (P.infinity) return true;
  return P.y * P.y == P.x * P.x * P.x + E.A * P.x + E.B;
}

ECPoint neg(const ECPoint& P) {
  if (P.infinity) return P;
  return ECPoint::affine(P.x, -P.y);
}

ECPoint add(const EllipticCurveQ& E, const ECPoint& P, const ECPoint& Q) {
  if (!on_curve(E, P) || !on_curve(E, Q))
    throw PointNotOnCurve("add: operand not on curve");
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  mpq_class lambda;
  if (P.x == Q.x) {
    if (P.y != Q.y || P.y == 0) return ECPoint::O();  // inverse pair
    lambda = (3 * P.x * P.x + E.A) / (2 * P.y);
  } else {
    lambda = (Q.y - P.y) / (Q.x - P.x);
  }
  mpq_class x3 = lambda * lambda - P.x - Q.x;
  mpq_class y3 = lambda * (P.x - x3) - P.y;
  x3.canonicalize();
  y3.canonicalize();
  return ECPoint::affine(x3, y3);
}

ECPoint scalar_mul(const EllipticCurveQ& E, const mpz_class& n,
                   const ECPoint& P, long guard) {
  if (!on_curve(E, P)) throw PointNotOnCurve("scalar_mul: point not on curve");
  mpz_class a = abs(n);
  if (a > guard)
    throw GuardExceeded("scalar_mul: |n| exceeds the size guard");
  ECPoint base = (sgn(n) < 0) ? neg(P) : P;
  ECPoint acc = ECPoint::O();
  for (long i = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)); i-- > 0;) {
    acc = add(E, acc, acc);
    if (mpz_tstbit(a.get_mpz_t(), i)) acc = add(E, acc, base);
  }
  return acc;
}

// ---------- reduction mod small primes ----------

namespace {

u64 mod_u64(const mpz_class& z, u64 ell) {
  u64 r = mpz_fdiv_ui(z.get_mpz_t(), ell);
  return r;
}

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = static_cast<u64>(u128(r) * b % m);
    b = static_cast<u64>(u128(b) * b % m);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 ell) { return powmod(a % ell, ell - 2, ell); }

u64 addm(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  if (s >= m) s -= m;
  return s;
}
u64 subm(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }
u64 mulm(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

}  // namespace

CurveFp reduce_curve(const EllipticCurveQ& E, u64 ell) {
  if (mod_u64(E.discriminant, ell) == 0)
    throw BadReductionPrime("prime divides the discriminant");
  return CurveFp{ell, mod_u64(E.A, ell), mod_u64(E.B, ell)};
}

PointFp reduce_point(const EllipticCurveQ& E, const ECPoint& P, u64 ell) {
  if (mod_u64(E.discriminant, ell) == 0)
    throw BadReductionPrime("prime divides the discriminant");
  if (P.infinity) return PointFp{};
  if (mod_u64(P.x.get_den(), ell) == 0) return PointFp{};  // kernel of reduction
  PointFp R;
  R.infinity = false;
  R.x = mulm(mod_u64(P.x.get_num(), ell), invmod(mod_u64(P.x.get_den(), ell), ell), ell);
  R.y = mulm(mod_u64(P.y.get_num(), ell), invmod(mod_u64(P.y.get_den(), ell), ell), ell);
  return R;
}

PointFp fp_neg(const CurveFp& C, const PointFp& P) {
  if (P.infinity) return P;
  return PointFp{false, P.x, P.y ? C.ell - P.y : 0};
}

PointFp fp_add(const CurveFp& C, const PointFp& P, const PointFp& Q) {
  const u64 m = C.ell;
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  u64 lam;
  if (P.x == Q.x) {
    if (P.y != Q.y || P.y == 0) return PointFp{};
    lam = mulm(addm(mulm(3 % m, mulm(P.x, P.x, m), m), C.A % m, m),
               invmod(addm(P.y, P.y, m), m), m);
  } else {
    lam = mulm(subm(Q.y, P.y, m), invmod(subm(Q.x, P.x, m), m), m);
  }
  u64 x3 = subm(subm(mulm(lam, lam, m), P.x, m), Q.x, m);
  u64 y3 = subm(mulm(lam, subm(P.x, x3, m), m), P.y, m);
  return PointFp{false, x3, y3};
}

PointFp fp_scalar_mul(const CurveFp& C, u64 n, const PointFp& P) {
  PointFp acc{};
  PointFp base = P;
  while (n) {
    if (n & 1) acc = fp_add(C, acc, base);
    base = fp_add(C, base, base);
    n >>= 1;
  }
  return acc;
}

unsigned t_valuation(const ECPoint& P, const mpz_class& ell) {
  if (P.infinity) return 0;
  const mpz_class den = P.x.get_den();
  unsigned v = 0;
  mpz_class d = den;
  while (mpz_divisible_p(d.get_mpz_t(), ell.get_mpz_t())) {
    mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), ell.get_mpz_t());
    ++v;
  }
  assert(v % 2 == 0);  // den(x) = e^2
  return v / 2;
}

bool fp_has_cubic_root(u64 ell, u64 A, u64 B, u64 c) {
  const u64 m = ell;
  A %= m;
  B %= m;
  c %= m;
  u64 c2 = mulm(c, c, m);
  u64 b0 = subm(B, c2, m);  // f = X^3 + A X + b0
  if (ell < 64) {
    for (u64 x = 0; x < m; ++x) {
      u64 v = addm(addm(mulm(mulm(x, x, m), x, m), mulm(A, x, m), m), b0, m);
      if (v == 0) return true;
    }
    return false;
  }
  // g = X^ell mod f via square-and-multiply on residues of degree < 3,
  // then f has a root in F_ell iff gcd(g - X, f) is nonconstant.
  auto mul_mod_f = [&](const std::array<u64, 3>& p, const std::array<u64, 3>& q) {
    u64 r[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r[i + j] = addm(r[i + j], mulm(p[i], q[j], m), m);
    // reduce X^3 = -A X - b0 and X^4 = -A X^2 - b0 X
    for (int k = 4; k >= 3; --k) {
      u64 t = r[k];
      if (!t) continue;
      r[k] = 0;
      r[k - 2] = subm(r[k - 2], mulm(A, t, m), m);
      r[k - 3] = subm(r[k - 3], mulm(b0, t, m), m);
    }
    return std::array<u64, 3>{r[0], r[1], r[2]};
  };
  std::array<u64, 3> result{1, 0, 0}, base{0, 1, 0};
  u64 e = ell;
  while (e) {
    if (e & 1) result = mul_mod_f(result, base);
    base = mul_mod_f(base, base);
    e >>= 1;
  }
  // g - X
  std::array<u64, 3> g{result[0], subm(result[1], 1, m), result[2]};
  // gcd(f, g) over F_ell, f cubic monic, g of degree <= 2
  std::vector<u64> a{b0, A, 0, 1}, b{g[0], g[1], g[2]};
  auto deg = [](const std::vector<u64>& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[d] == 0) --d;
    return d;
  };
  while (true) {
    int db = deg(b);
    if (db < 0) return deg(a) >= 1;  // gcd is a itself
    if (db == 0) return false;       // gcd constant: no root
    // a = a mod b
    int da = deg(a);
    u64 inv = invmod(b[db], m);
    std::vector<u64> r = a;
    for (int k = da; k >= db; --k) {
      u64 f = mulm(r[k], inv, m);
      if (!f) continue;
      for (int i = 0; i <= db; ++i) r[k - db + i] = subm(r[k - db + i], mulm(f, b[i], m), m);
    }
    r.resize(db);
    a = b;
    b = r;
  }
}

std::uint64_t fp_curve_order(const CurveFp& C) {
  const u64 m = C.ell;
  std::vector<char> is_sq(m, 0);
  for (u64 t = 0; t < m; ++t) is_sq[mulm(t, t, m)] = 1;
  u64 count = 1;  // infinity
  for (u64 x = 0; x < m; ++x) {
    u64 rhs = addm(addm(mulm(mulm(x, x, m), x, m), mulm(C.A, x, m), m), C.B, m);
    if (rhs == 0)
      count += 1;
    else if (is_sq[rhs])
      count += 2;
  }
  return count;
}

std::uint64_t fp_point_order(const CurveFp& C, const PointFp& P) {
  if (P.infinity) return 1;
  u64 N = fp_curve_order(C);
  u64 order = N;
  u64 n = N;
  for (u64 q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    while (order % q == 0 && fp_scalar_mul(C, order / q, P).infinity)
      order /= q;
  }
  if (n > 1)
    while (order % n == 0 && fp_scalar_mul(C, order / n, P).infinity)
      order /= n;
  return order;
}

// ---------- torsion ----------

namespace {

// Is P a torsion point? By Mazur the order is at most 12.
bool has_finite_order(const EllipticCurveQ& E, const ECPoint& P) {
  ECPoint acc = P;
  for (int k = 2; k <= 13; ++k) {
    acc = add(E, acc, P);
    if (acc.infinity) return true;
  }
  return false;
}

void close_group(const EllipticCurveQ& E, std::vector<ECPoint>& G) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < G.size(); ++i)
      for (size_t j = 0; j < G.size(); ++j) {
        ECPoint s = add(E, G[i], G[j]);
        if (std::find(G.begin(), G.end(), s) == G.end()) {
          G.push_back(s);
          grew = true;
        }
      }
  }
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) - b.coeff(i);
  r.trim();
  return r;
}

IntPoly poly_scale(const mpz_class& k, const IntPoly& a) {
  IntPoly r = a;
  for (mpz_class& v : r.c) v *= k;
  r.trim();
  return r;
}

// f[m] for m >= 0: the m-th division polynomial as a polynomial in x alone
// (for even m, the cofactor of 2y). Roots of f[m] are exactly the
// x-coordinates of the affine points killed by [m].
std::vector<IntPoly> division_polys(const mpz_class& A, const mpz_class& B,
                                    int mmax) {
  std::vector<IntPoly> f(static_cast<size_t>(std::max(mmax, 4)) + 1);
  IntPoly R;  // x^3 + A x + B
  R.c = {B, A, mpz_class(0), mpz_class(1)};
  IntPoly R2 = R * R;
  f[0] = IntPoly{};  // 0
  f[1].c = {mpz_class(1)};
  f[2].c = {mpz_class(1)};
  f[3].c = {-A * A, 12 * B, 6 * A, mpz_class(0), mpz_class(3)};
  f[4].c = {-16 * B * B - 2 * A * A * A, -8 * A * B, -10 * A * A,
            40 * B,      10 * A,          mpz_class(0), mpz_class(2)};
  for (int m = 5; m <= mmax; ++m) {
    if (m % 2 == 1) {
      int k = (m - 1) / 2;
      IntPoly t1 = f[k + 2] * f[k] * f[k] * f[k];
      IntPoly t2 = f[k - 1] * f[k + 1] * f[k + 1] * f[k + 1];
      if (k % 2 == 0)
        f[m] = poly_sub(poly_scale(16, R2 * t1), t2);
      else
        f[m] = poly_sub(t1, poly_scale(16, R2 * t2));
    } else {
      int k = m / 2;
      IntPoly t1 = f[k + 2] * (f[k - 1] * f[k - 1]);
      IntPoly t2 = f[k - 2] * (f[k + 1] * f[k + 1]);
      f[m] = f[k] * poly_sub(t1, t2);
    }
  }
  return f;
}

// All rational roots of an integer polynomial, via the monic substitution
// u = (leading) x.
std::vector<mpq_class> rational_roots(const IntPoly& p) {
  std::vector<mpq_class> out;
  IntPoly q = p;
  q.trim();
  while (!q.c.empty() && q.c[0] == 0) {
    out.emplace_back(0);
    q.c.erase(q.c.begin());
  }
  if (q.degree() < 1) return out;
  mpz_class L = q.c.back();
  int d = q.degree();
  // u = L x turns q into the monic L^(d-1) q(u / L)
  IntPoly monic;
  monic.c.resize(q.c.size());
  monic.c[d] = 1;
  mpz_class pw = 1;  // L^(d-1-i)
  for (int i = d - 1; i >= 0; --i) {
    monic.c[i] = q.c[i] * pw;
    pw *= L;
  }
  for (const mpz_class& u : monic_integer_roots(monic)) {
    mpq_class x(u, L);
    x.canonicalize();
    out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<ECPoint> torsion_subgroup(const EllipticCurveQ& E) {
  // Step 1: bound the torsion order by gcd of #E(F_p) over good odd primes
  // (reduction is injective on torsion for odd primes of good reduction).
  u64 bound = 0;
  int used = 0;
  for (u64 p = 3; p < 3000 && used < 24; p = next_prime_u64(p)) {
    if (mod_u64(E.discriminant, p) == 0) continue;
    CurveFp C{p, mod_u64(E.A, p), mod_u64(E.B, p)};
    u64 n = fp_curve_order(C);
    bound = bound ? std::gcd(bound, n) : n;
    ++used;
    if (bound == 1) break;
  }
  std::vector<ECPoint> G{ECPoint::O()};
  if (bound == 1) return G;

  // Step 2: collect candidate torsion points.
  //  - 2-torsion: integer roots of the cubic.
  IntPoly cubic;
  cubic.c = {E.B, E.A, mpz_class(0), mpz_class(1)};
  std::vector<ECPoint> candidates;
  for (const mpz_class& r : monic_integer_roots(cubic))
    candidates.push_back(ECPoint::affine(mpq_class(r), mpq_class(0)));
  //  - full Nagell-Lutz enumeration (y^2 | disc) when the discriminant is
  //    small enough to scan; in that case the candidate list is provably
  //    complete.
  mpz_class absD = abs(E.discriminant);
  bool full_enumeration = absD <= mpz_class("1000000000000");
  if (full_enumeration) {
    for (mpz_class y = 1; y * y <= absD; ++y) {
      if (!mpz_divisible_p(absD.get_mpz_t(), mpz_class(y * y).get_mpz_t()))
        continue;
      IntPoly shifted = cubic;
      shifted.c[0] = E.B - y * y;
      for (const mpz_class& r : monic_integer_roots(shifted)) {
        candidates.push_back(ECPoint::affine(mpq_class(r), mpq_class(y)));
        candidates.push_back(ECPoint::affine(mpq_class(r), mpq_class(-y)));
      }
    }
  }
  //  - division polynomials: every torsion point is a sum of points of prime
  //    power order (at most 9, by the uniform bound on rational torsion), and
  //    the x-coordinates of the m-torsion points are exactly the rational
  //    roots of the m-th division polynomial. This closes any gap left by an
  //    isogeny-inflated reduction bound.
  auto absorb = [&](const std::vector<ECPoint>& cand) {
    for (const ECPoint& P : cand)
      if (has_finite_order(E, P) &&
          std::find(G.begin(), G.end(), P) == G.end())
        G.push_back(P);
    close_group(E, G);
  };
  absorb(candidates);
  if (full_enumeration) return G;

  //  - division polynomials: every torsion point is a sum of points of prime
  //    power order (at most 9, by the uniform bound on rational torsion), and
  //    the x-coordinates of the m-torsion points are exactly the rational
  //    roots of the m-th division polynomial. This closes any gap left by an
  //    isogeny-inflated reduction bound. A point of order m has a multiple of
  //    order m / q, so m is only checked once the smaller order is realized;
  //    this skips the expensive high-degree polynomials in the common case.
  auto f = division_polys(E.A, E.B, 9);
  auto has_order = [&](int m) {
    for (const ECPoint& P : G) {
      if (P.infinity) continue;
      ECPoint acc = P;
      int ord = 1;
      while (!acc.infinity && ord <= m) {
        acc = add(E, acc, P);
        ++ord;
      }
      if (ord == m) return true;
    }
    return false;
  };
  for (int m : {2, 3, 4, 5, 7, 8, 9}) {
    int q = (m % 2 == 0) ? 2 : (m == 9 ? 3 : m);
    if (bound % q != 0) continue;
    if ((m == 4 || m == 8 || m == 9) && !has_order(m / q)) continue;
    std::vector<ECPoint> cand;
    for (const mpq_class& x : rational_roots(f[static_cast<size_t>(m)])) {
      mpq_class rhs = x * x * x + E.A * x + E.B;
      mpq_class y;
      if (!rational_square_root(rhs, &y)) continue;
      cand.push_back(ECPoint::affine(x, y));
      cand.push_back(ECPoint::affine(x, -y));
    }
    absorb(cand);
  }
  return G;
}

}  // namespace mordell
