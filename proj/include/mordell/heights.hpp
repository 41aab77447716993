#pragma once
// Weil height, the Euclidean-norm height h2, the archimedean part, and the
// canonical height in the normalization used throughout this library (three
// times the classical Neron-Tate height), with certified enclosures.

#include <gmpxx.h>

#include "mordell/ec.hpp"
#include "mordell/real.hpp"

namespace mordell {

struct HeightDiffConstants {
  RealUB c3, c4, c5;
};

// log max(|num|, |den|) in lowest terms; 0 for q = 0.
RealUB weil_height(const mpq_class& q);

// max(0, log|q|).
RealUB h_infty(const mpq_class& q);

// h2 of the projective point (1 : x : y); finite part is log e^3 from the
// denominator shape, archimedean part is (1/2) log(1 + x^2 + y^2).
RealInterval h2_point(const EllipticCurveQ& E, const ECPoint& P);

// Height-difference constants: c3, c4 bound hhat/3 - h_W(x)/2 from above and
// below, c5 bounds h_W - hhat from above (Zimmer-type, Q-sharp column).
HeightDiffConstants silverman_band(const EllipticCurveQ& E);

// Canonical height enclosure of width <= 2*eps via the doubling limit
// (3/2) h_W(x([2^k]P)) / 4^k with tail 3 max(c3,c4) / 4^k.
RealInterval canonical_height(const EllipticCurveQ& E, const ECPoint& P,
                              const RealUB& eps);

// log max(1, |A|^(1/2), |B|^(1/3)).
RealUB h_weier(const EllipticCurveQ& E);

}  // namespace mordell
