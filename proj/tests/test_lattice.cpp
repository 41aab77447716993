#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mordell/dataset.hpp"
#include "mordell/errors.hpp"
#include "mordell/lattice.hpp"

using namespace mordell;

TEST_CASE("normalized rank-one form: exact values") {
  LinearForm2 L = rank_one_form(3, -4);
  CHECK(L.norm_sq() == 25);
  CHECK(L.value_sq(4, 3) == 0);          // (4,3) is in the kernel
  CHECK(L.value_sq(1, 0) == mpq_class(9, 25));
  CHECK(L.value_sq(0, 1) == mpq_class(16, 25));
  CHECK(L.value_sq(1, 1) == mpq_class(1, 25));
  CHECK_THROWS_AS(rank_one_form(0, 0), ZeroVector);
}

TEST_CASE("short vector: exists whenever the strip condition holds") {
  // For kappa > 1 and T >= kappa / (sqrt(2) (kappa - 1)^{1/4}) a nonzero
  // integer vector with ||u|| <= T and |L(u)| <= kappa ||L|| / T must exist.
  const double kappas[] = {1.001, 1.01, 1.1, 2.0};
  const long pairs[][2] = {{1, 0}, {2, 3}, {7, -5}, {113, 355}, {1, 1000}};
  for (double kappa : kappas) {
    double Tmin = kappa / (std::sqrt(2.0) * std::pow(kappa - 1.0, 0.25));
    for (auto& pr : pairs) {
      LinearForm2 L = rank_one_form(pr[0], pr[1]);
      for (double T : {Tmin, Tmin * 2, Tmin * 10}) {
        auto u = short_vector(L, kappa, T);
        CAPTURE(kappa);
        CAPTURE(T);
        CAPTURE(pr[0]);
        CAPTURE(pr[1]);
        CHECK((u.first != 0 || u.second != 0));
        mpz_class nsq = u.first * u.first + u.second * u.second;
        CHECK(nsq.get_d() <= T * T * (1 + 1e-12));
        // |L(u)|^2 <= kappa^2 ||L||^2 / T^2, i.e. value_sq * T^2 <= kappa^2 nsqL
        double lhs = L.value_sq(u.first, u.second).get_d() * T * T;
        CHECK(lhs <= kappa * kappa * L.norm_sq().get_d() * (1 + 1e-9));
      }
    }
  }
}

TEST_CASE("short vector: kernel direction is found exactly") {
  LinearForm2 L = rank_one_form(5, -12);  // kernel generated by (12, 5), norm 13
  // kappa ||L|| / T < 1/13 leaves only the kernel direction inside the strip
  auto u = short_vector(L, 1.0001, 170.0);
  CHECK(L.value_sq(u.first, u.second) == 0);
  CHECK(u.first * u.first + u.second * u.second == 169);
}

TEST_CASE("translate certificate arithmetic") {
  auto cs = load_curves(default_curves_path());
  const EllipticCurveQ& E = cs[0].curve;
  std::pair<mpz_class, mpz_class> u{2, -1};
  RealUB hhat = RealUB::exact(1.5);
  TranslateCertificate tc = translate_certificate(u, E, hhat);
  CHECK(tc.deg_bound == 15);  // 3 * (4 + 1)
  double c1 = table1(E, true).c1.value();
  CHECK(tc.h2_bound.value() ==
        doctest::Approx(6 * 1.5 + 12 * 5 * c1).epsilon(1e-9));
}

TEST_CASE("proof parameters satisfy the stated relations") {
  auto cs = load_curves(default_curves_path());
  for (size_t i : {size_t{0}, size_t{1}, size_t{4}}) {
    const EllipticCurveQ& E = cs[i].curve;
    for (long degC : {2L, 5L, 20L}) {
      ProofParameters pp = proof_parameters(degC, RealUB::exact(30.0), E);
      double c8 = pp.c8.value(), c9 = pp.c9.value(), c10 = pp.c10.value();
      CAPTURE(i);
      CAPTURE(degC);
      CHECK(c8 == doctest::Approx(6.0 * degC));
      CHECK(pp.kappa > 1.0);
      CHECK(pp.kappa <= 1.0 + 1.0 / (16.0 * c8 * c8) + 1e-12);
      // 2 c8 kappa^2 <= T <= 2 c8 kappa^2 + c10 / (2 c9)
      double k2 = pp.kappa * pp.kappa;
      CHECK(pp.T >= 2 * c8 * k2 * (1 - 1e-9));
      CHECK(pp.T <= 2 * c8 * k2 + c10 / (2 * c9) + 1e-9);
      // final bound shape
      CHECK(pp.hhat_bound.value() >= 4 * c8 * c9 * k2 + 2 * c10 - 1e-6);
      // T must clear the strip-existence threshold for its own kappa
      double Tmin =
          pp.kappa / (std::sqrt(2.0) * std::pow(pp.kappa - 1.0, 0.25));
      CHECK(pp.T >= Tmin);
    }
  }
}
