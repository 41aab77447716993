#include "mordell/families.hpp"

namespace mordell {

FamilySpec FamilySpec::poly(const EllipticCurveQ& E, const IntPoly& p) {
  if (p.degree() < 1) throw ConstantPolynomial("family polynomial is constant");
  return FamilySpec{FamilyKind::Poly, E, p, 0, 0, 0};
}

FamilySpec FamilySpec::power(const EllipticCurveQ& E, unsigned n) {
  if (n < 1) throw ConstantPolynomial("power family needs n >= 1");
  return FamilySpec{FamilyKind::PowerCn, E, IntPoly::x_power(n), n, 0, 0};
}

FamilySpec FamilySpec::cyclo(const EllipticCurveQ& E, unsigned n) {
  if (n < 1) throw ConstantPolynomial("cyclotomic family needs n >= 1");
  return FamilySpec{FamilyKind::CyclotomicDn, E, cyclotomic(n), n, 0, 0};
}

FamilySpec FamilySpec::genus2(const mpz_class& a, const mpz_class& b) {
  Genus2Map m = genus2_to_E(a, b);  // validates nondegeneracy
  FamilySpec f{FamilyKind::Genus2, m.host, IntPoly{}, 0, a, b};
  return f;
}

std::string FamilySpec::id() const {
  switch (kind) {
    case FamilyKind::Poly:
      return "poly_deg" + std::to_string(p.degree());
    case FamilyKind::PowerCn:
      return "C" + std::to_string(n);
    case FamilyKind::CyclotomicDn:
      return "D" + std::to_string(n);
    case FamilyKind::Genus2:
      return "genus2_a" + a.get_str() + "_b" + b.get_str();
  }
  return "?";
}

FamilyInvariants invariants_poly(const EllipticCurveQ& E, const IntPoly& p) {
  if (p.degree() < 1) throw ConstantPolynomial("constant polynomial");
  long n = p.degree();
  FamilyInvariants inv;
  inv.degree = 6 * n + 9;
  ConstantTable t = table1(E, true);
  // h_W of the projective coefficient tuple (1 : p_0 : ... : p_n)
  mpz_class mx = p.max_abs_coeff();
  RealUB hWp = mx <= 1 ? RealUB::exact(0L) : log_ub(mpq_class(mx));
  long m = static_cast<long>(p.nonzero_count());
  RealUB logm = m <= 1 ? RealUB::exact(0L) : log_ub(mpq_class(m));
  RealUB per_factor = hWp + logm + t.c6.scale(mpq_class(2));
  inv.h2_upper = per_factor.scale(mpq_class(6 * (2 * n + 3)));
  return inv;
}

FamilyInvariants invariants_Dn(const EllipticCurveQ& E, unsigned n) {
  if (n < 1) throw ConstantPolynomial("cyclotomic family needs n >= 1");
  auto [phi, omega2, mu] = phi_omega2_mu(n);
  (void)mu;
  FamilyInvariants inv;
  inv.degree = 6 * static_cast<long>(phi) + 9;
  ConstantTable t = table1(E, true);
  mpz_class two_pow = mpz_class(1) << omega2;
  RealUB per_factor = log2_const_ub().scale(mpq_class(two_pow)) +
                      t.c6.scale(mpq_class(2));
  inv.h2_upper = per_factor.scale(mpq_class(6 * (2 * phi + 3)));
  return inv;
}

GenusResult genus_Cn(const EllipticCurveQ& E, unsigned n) {
  auto is_square = [](const mpz_class& z) {
    return sgn(z) >= 0 && mpz_perfect_square_p(z.get_mpz_t());
  };
  if (is_square(mpz_class(-3 * E.A)))
    return {std::nullopt, "-3A is a square in Z"};
  if (is_square(mpz_class(-3 * E.discriminant)))
    return {std::nullopt, "-3*discriminant is a square in Z"};
  mpz_class A3 = E.A * E.A * E.A, B2 = E.B * E.B;
  if (E.B == 0 || 2 * A3 + B2 == 0 || 3 * A3 + 8 * B2 == 0)
    return {std::nullopt, "B(2A^3+B^2)(3A^3+8B^2) vanishes"};
  return {4L * n + 2, ""};
}

Genus2Map genus2_to_E(const mpz_class& a, const mpz_class& b) {
  if (a == 0 || a == -b || 3 * a == b)
    throw DegenerateFamily("genus-2 family needs a not in {0, -b, b/3}");
  Genus2Map m;
  m.a = a;
  m.b = b;
  m.long_a2 = b;
  m.long_a4 = a * b;
  m.long_a6 = a * a * a;
  mpz_class A = 27 * b * (3 * a - b);
  mpz_class B = 27 * (27 * a * a * a - 9 * a * b * b + 2 * b * b * b);
  m.host = curve_new(A, B);
  m.relation = 81 * a * a;
  return m;
}

ECPoint Genus2Map::embed(const mpq_class& x, const mpq_class& y) const {
  mpq_class X = 9 * a * x * x + 3 * b;
  mpq_class Y = 27 * a * y;
  X.canonicalize();
  Y.canonicalize();
  return ECPoint::affine(X, Y);
}

RealUB Genus2Map::h2_image_upper() const {
  mpz_class aa = abs(a), ab = abs(b);
  mpz_class inner =
      1456 * a * a * (aa + ab) + (9 * aa + 3 * ab) * (9 * aa + 3 * ab) + 1;
  return log_ub(mpq_class(inner)).scale(mpq_class(24));
}

}  // namespace mordell
