#include "mordell/numtheory.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mordell {

void IntPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly IntPoly::x_power(unsigned n) {
  IntPoly p;
  p.c.assign(n + 1, mpz_class(0));
  p.c[n] = 1;
  return p;
}

size_t IntPoly::nonzero_count() const {
  size_t k = 0;
  for (const auto& a : c)
    if (a != 0) ++k;
  return k;
}

mpz_class IntPoly::max_abs_coeff() const {
  mpz_class m = 0;
  for (const auto& a : c) {
    mpz_class v = abs(a);
    if (v > m) m = v;
  }
  return m;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::uint64_t IntPoly::eval_mod(std::uint64_t x, std::uint64_t ell) const {
  using u128 = unsigned __int128;
  std::uint64_t acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    std::uint64_t cm = mpz_fdiv_ui(it->get_mpz_t(), ell);
    acc = static_cast<std::uint64_t>((u128(acc) * x + cm) % ell);
  }
  return acc;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  IntPoly r;
  if (is_zero() || o.is_zero()) return r;
  r.c.assign(c.size() + o.c.size() - 1, mpz_class(0));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
  r.trim();
  return r;
}

IntPoly IntPoly::divide_exact(const IntPoly& o) const {
  assert(!o.is_zero());
  IntPoly rem = *this;
  IntPoly q;
  int dq = degree() - o.degree();
  if (dq < 0) throw std::invalid_argument("inexact polynomial division");
  q.c.assign(dq + 1, mpz_class(0));
  const mpz_class& lead = o.c.back();
  for (int k = dq; k >= 0; --k) {
    mpz_class num = rem.coeff(k + o.degree());
    if (num == 0) continue;
    mpz_class t, r;
    mpz_tdiv_qr(t.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
                lead.get_mpz_t());
    if (r != 0) throw std::invalid_argument("inexact polynomial division");
    q.c[k] = t;
    for (int i = 0; i <= o.degree(); ++i) {
      size_t idx = k + i;
      if (idx >= rem.c.size()) rem.c.resize(idx + 1, mpz_class(0));
      rem.c[idx] -= t * o.c[i];
    }
  }
  rem.trim();
  if (!rem.is_zero()) throw std::invalid_argument("inexact polynomial division");
  q.trim();
  return q;
}

IntPoly cyclotomic(unsigned n) {
  static std::map<unsigned, IntPoly> cache;
  static std::mutex mu;
  if (n == 0) throw std::invalid_argument("cyclotomic(0)");
  {
    std::lock_guard<std::mutex> g(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  IntPoly num = IntPoly::x_power(n);
  num.c[0] = -1;  // X^n - 1
  IntPoly result = num;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) result = result.divide_exact(cyclotomic(d));
  std::lock_guard<std::mutex> g(mu);
  cache.emplace(n, result);
  return result;
}

std::tuple<unsigned long, unsigned, int> phi_omega2_mu(unsigned long n) {
  if (n == 0) throw std::invalid_argument("phi_omega2_mu(0)");
  unsigned long phi = 1, m = n;
  unsigned omega2 = 0, omega_all = 0;
  bool squarefree = true;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    ++omega_all;
    if (p != 2) ++omega2;
    if (e > 1) squarefree = false;
    phi *= p - 1;
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  if (m > 1) {
    ++omega_all;
    if (m != 2) ++omega2;
    phi *= m - 1;
  }
  int mu = squarefree ? (omega_all % 2 ? -1 : 1) : 0;
  return {phi, omega2, mu};
}

bool is_prime_u64(std::uint64_t n) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return mpz_probab_prime_p(z.get_mpz_t(), 32) > 0;
}

std::uint64_t next_prime_u64(std::uint64_t n) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  mpz_class p;
  mpz_nextprime(p.get_mpz_t(), z.get_mpz_t());
  if (!p.fits_ulong_p()) throw std::overflow_error("prime exceeds 64 bits");
  return p.get_ui();
}

namespace {

// Rational polynomial, low degree first; only used internally by the Sturm
// sequence that isolates real roots of small monic integer polynomials.
struct QPoly {
  std::vector<mpq_class> c;
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  mpq_class eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  QPoly deriv() const {
    QPoly d;
    for (size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * long(i));
    d.trim();
    return d;
  }
};

QPoly neg_rem(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  r.trim();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    mpq_class f = r.c.back() / b.c.back();
    int shift = r.degree() - b.degree();
    for (int i = 0; i <= b.degree(); ++i) r.c[i + shift] -= f * b.c[i];
    r.trim();
  }
  for (auto& q : r.c) q = -q;
  return r;
}

int sign_variations(const std::vector<QPoly>& sturm, const mpq_class& t) {
  int var = 0, last = 0;
  for (const auto& p : sturm) {
    int s = sgn(p.eval(t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

}  // namespace

std::vector<mpz_class> monic_integer_roots(const IntPoly& p) {
  assert(!p.is_zero() && p.c.back() == 1);
  std::vector<mpz_class> roots;
  if (p.degree() == 0) return roots;
  // Cauchy bound: all real roots lie in (-M, M).
  mpz_class M = p.max_abs_coeff() + 1;

  QPoly q;
  for (const auto& a : p.c) q.c.emplace_back(a);
  std::vector<QPoly> sturm{q, q.deriv()};
  while (!sturm.back().is_zero() && sturm.back().degree() > 0)
    sturm.push_back(neg_rem(sturm[sturm.size() - 2], sturm.back()));
  if (sturm.back().is_zero()) sturm.pop_back();

  struct Seg {
    mpz_class lo, hi;
    int nroots;
  };
  mpq_class mlo(-M), mhi(M);
  if (p.eval(mpz_class(-M)) == 0) roots.push_back(-M);
  int total = sign_variations(sturm, mlo) - sign_variations(sturm, mhi);
  std::vector<Seg> work;
  if (total > 0) work.push_back({-M, M, total});
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    if (s.hi - s.lo <= 1) {
      // unit interval (lo, hi]: the only integer candidate is hi
      if (p.eval(s.hi) == 0) roots.push_back(s.hi);
      continue;
    }
    mpz_class mid = (s.lo + s.hi) / 2;  // floor; strictly between lo and hi
    int left = sign_variations(sturm, mpq_class(s.lo)) -
               sign_variations(sturm, mpq_class(mid));
    int right = s.nroots - left;
    if (left > 0) work.push_back({s.lo, mid, left});
    if (right > 0) work.push_back({mid, s.hi, right});
  }
  // dedupe (multiple roots can land twice via the -M endpoint check)
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

bool rational_square_root(const mpq_class& q, mpq_class* root) {
  if (sgn(q) < 0) return false;
  const mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  if (root) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    *root = mpq_class(rn, rd);
  }
  return true;
}

bool perfect_cube_root(const mpz_class& z, mpz_class* root) {
  mpz_class r;
  int exact = mpz_root(r.get_mpz_t(), z.get_mpz_t(), 3);
  if (!exact) return false;
  if (root) *root = r;
  return true;
}

}  // namespace mordell
