#pragma once
// Directed-rounding real values: every logarithmic or irrational quantity in
// the library is carried either as a certified upper bound (RealUB), a
// certified lower bound (RealLB), or a two-sided enclosure (RealInterval).
// Backed by MPFR at a fixed working precision well above double.

#include <gmpxx.h>
#include <mpfr.h>

#include <cassert>
#include <string>

namespace mordell {

inline constexpr mpfr_prec_t kRealPrec = 96;

// RAII wrapper around a single mpfr_t at the library precision.
class Real {
 public:
  Real() {
    mpfr_init2(x_, kRealPrec);
    mpfr_set_zero(x_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(x_, kRealPrec);
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(x_, kRealPrec);
    mpfr_swap(x_, o.x_);
  }
  Real& operator=(Real o) noexcept {
    mpfr_swap(x_, o.x_);
    return *this;
  }
  ~Real() { mpfr_clear(x_); }

  mpfr_ptr mut() { return x_; }
  mpfr_srcptr get() const { return x_; }

 private:
  mpfr_t x_;
};

struct RealLB;

// Certified upper bound: the true value is <= the stored number.
struct RealUB {
  Real r;

  RealUB() = default;
  static RealUB exact(double d);
  static RealUB exact(long n);
  static RealUB of(const mpz_class& z);
  static RealUB of(const mpq_class& q);
  // Decimal literal rounded toward +inf (for constants printed in sources).
  static RealUB decimal(const std::string& s);

  double value() const { return mpfr_get_d(r.get(), MPFR_RNDU); }

  RealUB operator+(const RealUB& o) const;
  RealUB operator-(const RealLB& o) const;
  // Product of nonnegative upper bounds (asserted); directionality of the
  // bound is only preserved for nonnegative factors.
  RealUB operator*(const RealUB& o) const;
  RealUB operator/(const RealLB& o) const;  // o must be certified positive
  RealUB scale(const mpq_class& nonneg_factor) const;

  bool operator<(const RealUB& o) const {
    return mpfr_less_p(r.get(), o.r.get());
  }
};

// Certified lower bound: the true value is >= the stored number.
struct RealLB {
  Real r;

  RealLB() = default;
  static RealLB exact(double d);
  static RealLB exact(long n);
  static RealLB of(const mpz_class& z);
  static RealLB of(const mpq_class& q);
  static RealLB decimal(const std::string& s);

  double value() const { return mpfr_get_d(r.get(), MPFR_RNDD); }

  RealLB operator+(const RealLB& o) const;
  RealLB operator-(const RealUB& o) const;
  RealLB operator*(const RealLB& o) const;  // nonnegative factors
  RealLB operator/(const RealUB& o) const;  // o must be certified positive
  RealLB scale(const mpq_class& nonneg_factor) const;
};

RealUB max(const RealUB& a, const RealUB& b);
RealUB min(const RealUB& a, const RealUB& b);
RealLB max(const RealLB& a, const RealLB& b);
RealLB min(const RealLB& a, const RealLB& b);

// log rounded toward +inf / -inf; argument must be positive.
RealUB log_ub(const mpq_class& q);
RealLB log_lb(const mpq_class& q);
RealUB log_ub(const RealUB& x);
RealLB log_lb(const RealLB& x);
RealUB sqrt_ub(const RealUB& x);
RealLB sqrt_lb(const RealLB& x);
RealUB log2_const_ub();  // log 2 rounded up
RealLB log2_const_lb();

// Two-sided enclosure lo <= value <= hi.
struct RealInterval {
  RealLB lo;
  RealUB hi;

  static RealInterval exact(const mpq_class& q);
  static RealInterval zero() { return exact(mpq_class(0)); }

  RealInterval operator+(const RealInterval& o) const;
  RealInterval operator-(const RealInterval& o) const;
  RealInterval scale(const mpq_class& nonneg_factor) const;
  double width() const;
  bool contains(double v) const { return lo.value() <= v && v <= hi.value(); }
};

// log of a positive rational, enclosed both ways.
RealInterval log_interval(const mpq_class& q);

// ceil of a certified nonnegative upper bound, as an exact integer.
mpz_class ceil_of(const RealUB& x);
mpz_class floor_of(const RealUB& x);

}  // namespace mordell
