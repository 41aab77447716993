#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mordell/dataset.hpp"
#include "mordell/errors.hpp"
#include "mordell/heights.hpp"
#include "mordell/lower.hpp"

using namespace mordell;

namespace {
std::vector<CurveRecord> curves() { return load_curves(default_curves_path()); }

RealLB hg_of(const CurveRecord& rec, double eps = 1e-3) {
  return canonical_height(rec.curve, rec.generator, RealUB::exact(eps)).lo;
}
}  // namespace

TEST_CASE("kernel membership: denominator divisibility") {
  auto cs = curves();
  const CurveRecord& e2 = cs[1];
  // den(x(g)) = 154665^2 = (3^2 5 7 491)^2
  CHECK(kernel_membership(e2.curve, e2.generator, 491, {}));
  CHECK(kernel_membership(e2.curve, e2.generator, 5, {}));
  CHECK(!kernel_membership(e2.curve, e2.generator, 2, {}));
  CHECK(!kernel_membership(e2.curve, e2.generator, 11, {}));
  CHECK_THROWS_AS(kernel_membership(e2.curve, e2.generator, 5, {mpz_class(5)}),
                  HypothesisFailed);
  // integral generator is in no kernel
  CHECK(!kernel_membership(cs[0].curve, cs[0].generator, 3, {}));
}

TEST_CASE("trivial-torsion lower bound scales as l^(2 ceil(d1/d2) - 2)") {
  auto cs = curves();
  const CurveRecord& e2 = cs[1];
  RealLB h = hg_of(e2);
  // d1 = 2n with n = 3, d2 = 3 -> exponent 2*ceil(2) - 2 = 2
  RealLB lam = lambda_trivial(e2.curve, e2.generator, h, 491, 6, 3);
  double want = h.value() * 491.0 * 491.0;
  CHECK(lam.value() == doctest::Approx(want).epsilon(1e-9));
  // d1 <= d2 gives no gain and must be rejected
  CHECK_THROWS_AS(lambda_trivial(e2.curve, e2.generator, h, 491, 3, 3),
                  DegreeOrderViolation);
  // exponent grows with ceil(d1/d2)
  RealLB lam2 = lambda_trivial(e2.curve, e2.generator, h, 491, 12, 3);
  CHECK(lam2.value() == doctest::Approx(h.value() * std::pow(491.0, 6)).epsilon(1e-9));
}

TEST_CASE("general lower bound with consecutive integral multiples") {
  auto cs = curves();
  const CurveRecord& e1 = cs[0];
  RealLB h = hg_of(e1);
  LowerBoundInput in;
  in.E = e1.curve;
  in.P0 = e1.generator;
  in.hhat_P0 = h;
  in.d1 = 8;  // n = 4
  in.d2 = 3;
  in.m_integral = 3;  // x([k]g) integral for k = 1, 2, 3
  in.sharpen_cap = 60;  // exact multiplier orders only for small primes
  RealLB lam = lambda_lower(in);
  // minimum over l of a_l^2 l^(2*ceil(8/3)-2) = a_l^2 l^4; a_2 = 4 at l = 2
  CHECK(lam.value() == doctest::Approx(h.value() * 16.0 * 16.0).epsilon(1e-6));
  CHECK(lam.value() > h.value());
}

TEST_CASE("crossover indices for the two families on all five curves") {
  auto cs = curves();
  struct Row {
    size_t idx;
    bool trivial;
    long ell;
    long m;
    long cn, dn;
  };
  const Row rows[] = {
      {0, false, 0, 3, 19, 61},
      {1, true, 491, 0, 3, 7},
      {2, true, 11, 0, 6, 19},
      {3, true, 1418579, 0, 3, 7},
      {4, true, 3956941, 0, 3, 7},
  };
  // loosest precision per curve that still certifies the printed floor
  const double eps[5] = {1e-3, 2.5e-4, 1e-3, 1e-4, 4.5e-4};
  for (const Row& r : rows) {
    const CurveRecord& rec = cs[r.idx];
    RealLB h = hg_of(rec, eps[r.idx]);
    CrossoverMode mode;
    mode.trivial = r.trivial;
    mode.ell = r.ell;
    mode.m_integral = r.m;
    if (r.trivial) {
      // the witness prime really divides the generator denominator
      CHECK(kernel_membership(rec.curve, rec.generator, r.ell, {}));
    }
    CAPTURE(r.idx);
    CHECK(crossover_n(rec.curve, Family::Cn, rec.generator, h, mode) == r.cn);
    CHECK(crossover_n(rec.curve, Family::Dn, rec.generator, h, mode) == r.dn);
  }
}
