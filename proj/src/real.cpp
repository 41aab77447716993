#include "mordell/real.hpp"

#include <stdexcept>

namespace mordell {

RealUB RealUB::exact(double d) {
  RealUB u;
  mpfr_set_d(u.r.mut(), d, MPFR_RNDU);
  return u;
}
RealUB RealUB::exact(long n) {
  RealUB u;
  mpfr_set_si(u.r.mut(), n, MPFR_RNDU);
  return u;
}
RealUB RealUB::of(const mpz_class& z) {
  RealUB u;
  mpfr_set_z(u.r.mut(), z.get_mpz_t(), MPFR_RNDU);
  return u;
}
RealUB RealUB::of(const mpq_class& q) {
  RealUB u;
  mpfr_set_q(u.r.mut(), q.get_mpq_t(), MPFR_RNDU);
  return u;
}
RealUB RealUB::decimal(const std::string& s) {
  RealUB u;
  if (mpfr_set_str(u.r.mut(), s.c_str(), 10, MPFR_RNDU) != 0)
    throw std::invalid_argument("bad decimal literal: " + s);
  return u;
}

RealLB RealLB::exact(double d) {
  RealLB l;
  mpfr_set_d(l.r.mut(), d, MPFR_RNDD);
  return l;
}
RealLB RealLB::exact(long n) {
  RealLB l;
  mpfr_set_si(l.r.mut(), n, MPFR_RNDD);
  return l;
}
RealLB RealLB::of(const mpz_class& z) {
  RealLB l;
  mpfr_set_z(l.r.mut(), z.get_mpz_t(), MPFR_RNDD);
  return l;
}
RealLB RealLB::of(const mpq_class& q) {
  RealLB l;
  mpfr_set_q(l.r.mut(), q.get_mpq_t(), MPFR_RNDD);
  return l;
}
RealLB RealLB::decimal(const std::string& s) {
  RealLB l;
  if (mpfr_set_str(l.r.mut(), s.c_str(), 10, MPFR_RNDD) != 0)
    throw std::invalid_argument("bad decimal literal: " + s);
  return l;
}

RealUB RealUB::operator+(const RealUB& o) const {
  RealUB u;
  mpfr_add(u.r.mut(), r.get(), o.r.get(), MPFR_RNDU);
  return u;
}
RealUB RealUB::operator-(const RealLB& o) const {
  RealUB u;
  mpfr_sub(u.r.mut(), r.get(), o.r.get(), MPFR_RNDU);
  return u;
}
RealUB RealUB::operator*(const RealUB& o) const {
  assert(mpfr_sgn(r.get()) >= 0 && mpfr_sgn(o.r.get()) >= 0);
  RealUB u;
  mpfr_mul(u.r.mut(), r.get(), o.r.get(), MPFR_RNDU);
  return u;
}
RealUB RealUB::operator/(const RealLB& o) const {
  assert(mpfr_sgn(o.r.get()) > 0 && mpfr_sgn(r.get()) >= 0);
  RealUB u;
  mpfr_div(u.r.mut(), r.get(), o.r.get(), MPFR_RNDU);
  return u;
}
RealUB RealUB::scale(const mpq_class& f) const {
  assert(sgn(f) >= 0);
  RealUB u;
  mpfr_mul_q(u.r.mut(), r.get(), f.get_mpq_t(), MPFR_RNDU);
  return u;
}

RealLB RealLB::operator+(const RealLB& o) const {
  RealLB l;
  mpfr_add(l.r.mut(), r.get(), o.r.get(), MPFR_RNDD);
  return l;
}
RealLB RealLB::operator-(const RealUB& o) const {
  RealLB l;
  mpfr_sub(l.r.mut(), r.get(), o.r.get(), MPFR_RNDD);
  return l;
}
RealLB RealLB::operator*(const RealLB& o) const {
  assert(mpfr_sgn(r.get()) >= 0 && mpfr_sgn(o.r.get()) >= 0);
  RealLB l;
  mpfr_mul(l.r.mut(), r.get(), o.r.get(), MPFR_RNDD);
  return l;
}
RealLB RealLB::operator/(const RealUB& o) const {
  assert(mpfr_sgn(o.r.get()) > 0 && mpfr_sgn(r.get()) >= 0);
  RealLB l;
  mpfr_div(l.r.mut(), r.get(), o.r.get(), MPFR_RNDD);
  return l;
}
RealLB RealLB::scale(const mpq_class& f) const {
  assert(sgn(f) >= 0);
  RealLB l;
  mpfr_mul_q(l.r.mut(), r.get(), f.get_mpq_t(), MPFR_RNDD);
  return l;
}

RealUB max(const RealUB& a, const RealUB& b) {
  RealUB u;
  mpfr_max(u.r.mut(), a.r.get(), b.r.get(), MPFR_RNDU);
  return u;
}
RealUB min(const RealUB& a, const RealUB& b) {
  RealUB u;
  mpfr_min(u.r.mut(), a.r.get(), b.r.get(), MPFR_RNDU);
  return u;
}
RealLB max(const RealLB& a, const RealLB& b) {
  RealLB l;
  mpfr_max(l.r.mut(), a.r.get(), b.r.get(), MPFR_RNDD);
  return l;
}
RealLB min(const RealLB& a, const RealLB& b) {
  RealLB l;
  mpfr_min(l.r.mut(), a.r.get(), b.r.get(), MPFR_RNDD);
  return l;
}

RealUB log_ub(const mpq_class& q) {
  assert(sgn(q) > 0);
  RealUB t = RealUB::of(q);  // rounding up before a monotone map keeps UB
  RealUB u;
  mpfr_log(u.r.mut(), t.r.get(), MPFR_RNDU);
  return u;
}
RealLB log_lb(const mpq_class& q) {
  assert(sgn(q) > 0);
  RealLB t = RealLB::of(q);
  RealLB l;
  mpfr_log(l.r.mut(), t.r.get(), MPFR_RNDD);
  return l;
}
RealUB log_ub(const RealUB& x) {
  assert(mpfr_sgn(x.r.get()) > 0);
  RealUB u;
  mpfr_log(u.r.mut(), x.r.get(), MPFR_RNDU);
  return u;
}
RealLB log_lb(const RealLB& x) {
  assert(mpfr_sgn(x.r.get()) > 0);
  RealLB l;
  mpfr_log(l.r.mut(), x.r.get(), MPFR_RNDD);
  return l;
}
RealUB sqrt_ub(const RealUB& x) {
  assert(mpfr_sgn(x.r.get()) >= 0);
  RealUB u;
  mpfr_sqrt(u.r.mut(), x.r.get(), MPFR_RNDU);
  return u;
}
RealLB sqrt_lb(const RealLB& x) {
  RealLB l;
  if (mpfr_sgn(x.r.get()) < 0) {
    mpfr_set_zero(l.r.mut(), 1);
    return l;
  }
  mpfr_sqrt(l.r.mut(), x.r.get(), MPFR_RNDD);
  return l;
}
RealUB log2_const_ub() {
  RealUB u;
  mpfr_const_log2(u.r.mut(), MPFR_RNDU);
  return u;
}
RealLB log2_const_lb() {
  RealLB l;
  mpfr_const_log2(l.r.mut(), MPFR_RNDD);
  return l;
}

RealInterval RealInterval::exact(const mpq_class& q) {
  return RealInterval{RealLB::of(q), RealUB::of(q)};
}
RealInterval RealInterval::operator+(const RealInterval& o) const {
  return RealInterval{lo + o.lo, hi + o.hi};
}
RealInterval RealInterval::operator-(const RealInterval& o) const {
  return RealInterval{lo - o.hi, hi - o.lo};
}
RealInterval RealInterval::scale(const mpq_class& f) const {
  return RealInterval{lo.scale(f), hi.scale(f)};
}
double RealInterval::width() const {
  RealUB w = hi - lo;
  return w.value();
}

RealInterval log_interval(const mpq_class& q) {
  return RealInterval{log_lb(q), log_ub(q)};
}

mpz_class ceil_of(const RealUB& x) {
  Real c;
  mpfr_ceil(c.mut(), x.r.get());
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), c.get(), MPFR_RNDN);
  return z;
}
mpz_class floor_of(const RealUB& x) {
  Real c;
  mpfr_floor(c.mut(), x.r.get());
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), c.get(), MPFR_RNDN);
  return z;
}

}  // namespace mordell
