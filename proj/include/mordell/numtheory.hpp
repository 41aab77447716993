#pragma once
// Exact integer polynomials and elementary number-theoretic helpers used by
// the family definitions and the search pipeline.

#include <gmpxx.h>

#include <cstdint>
#include <tuple>
#include <vector>

namespace mordell {

// Dense integer polynomial, coefficients low degree first, trimmed.
struct IntPoly {
  std::vector<mpz_class> c;  // c[i] is the coefficient of X^i

  static IntPoly x_power(unsigned n);          // X^n
  static IntPoly from(std::vector<long> lows)  // convenience for tests
  {
    IntPoly p;
    for (long v : lows) p.c.emplace_back(v);
    p.trim();
    return p;
  }
  void trim();
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  mpz_class coeff(size_t i) const { return i < c.size() ? c[i] : mpz_class(0); }
  size_t nonzero_count() const;
  mpz_class max_abs_coeff() const;

  mpq_class eval(const mpq_class& x) const;
  mpz_class eval(const mpz_class& x) const;
  std::uint64_t eval_mod(std::uint64_t x, std::uint64_t ell) const;

  IntPoly operator*(const IntPoly& o) const;
  // Exact division (remainder must vanish); used by the cyclotomic builder.
  IntPoly divide_exact(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return c == o.c; }
};

// n-th cyclotomic polynomial, exact.
IntPoly cyclotomic(unsigned n);

// Euler totient, number of distinct odd prime factors, Moebius value.
std::tuple<unsigned long, unsigned, int> phi_omega2_mu(unsigned long n);

bool is_prime_u64(std::uint64_t n);
std::uint64_t next_prime_u64(std::uint64_t n);  // least prime > n

// Integer roots of a monic integer polynomial (degree >= 1), exact.
std::vector<mpz_class> monic_integer_roots(const IntPoly& p);

// Is q the square (resp. cube) of a rational? If so store the root.
bool rational_square_root(const mpq_class& q, mpq_class* root);
bool perfect_cube_root(const mpz_class& z, mpz_class* root);

}  // namespace mordell
