#pragma once

// Closed real intervals with MPFR endpoints and outward rounding. Only the
// operations the bound engine needs.

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "tmpr/errors.hpp"

namespace tmpr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  Interval(Interval const& o) : Interval(o.prec_) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  Interval& operator=(Interval const& o) {
    if (this != &o) {
      mpfr_set_prec(lo_, o.prec_);
      mpfr_set_prec(hi_, o.prec_);
      prec_ = o.prec_;
      mpfr_set(lo_, o.lo_, MPFR_RNDD);
      mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
  }
  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static Interval from_int(BigInt const& v, mpfr_prec_t prec) {
    Interval out(prec);
    BigInt const mag = v < 0 ? BigInt(-v) : v;
    std::string const text = (v < 0 ? "-" : "") + mag.str(0, std::ios_base::hex);
    mpfr_set_str(out.lo_, text.c_str(), 16, MPFR_RNDD);
    mpfr_set_str(out.hi_, text.c_str(), 16, MPFR_RNDU);
    return out;
  }

  static Interval from_rational(Rational const& v, mpfr_prec_t prec) {
    return from_int(boost::multiprecision::numerator(v), prec) /
           from_int(boost::multiprecision::denominator(v), prec);
  }

  static Interval point(double v, mpfr_prec_t prec) {
    Interval out(prec);
    mpfr_set_d(out.lo_, v, MPFR_RNDD);
    mpfr_set_d(out.hi_, v, MPFR_RNDU);
    return out;
  }

  /// log2 of a positive integer. Large values keep only their top 256 bits.
  static Interval log2_of(BigInt const& v, mpfr_prec_t prec) {
    if (v <= 0) throw ContractError("log2 of a non-positive integer");
    std::size_t const bits = boost::multiprecision::msb(v) + 1;
    if (bits <= 256) return from_int(v, prec).log2();
    std::size_t const shift = bits - 256;
    BigInt const top = v >> shift;
    Interval lo = from_int(top, prec).log2();
    Interval hi = from_int(top + 1, prec).log2();
    Interval out(prec);
    mpfr_set(out.lo_, lo.lo_, MPFR_RNDD);
    mpfr_set(out.hi_, hi.hi_, MPFR_RNDU);
    return out + point(static_cast<double>(shift), prec);
  }

  static Interval log2_of(Rational const& v, mpfr_prec_t prec) {
    return log2_of(BigInt(boost::multiprecision::numerator(v)), prec) -
           log2_of(BigInt(boost::multiprecision::denominator(v)), prec);
  }

  mpfr_prec_t precision() const noexcept { return prec_; }
  mpfr_srcptr lo() const noexcept { return lo_; }
  mpfr_srcptr hi() const noexcept { return hi_; }
  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_double() const { return (lo_double() + hi_double()) / 2; }

  friend Interval operator+(Interval const& a, Interval const& b) {
    Interval out(std::max(a.prec_, b.prec_));
    mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return out;
  }
  friend Interval operator-(Interval const& a, Interval const& b) {
    Interval out(std::max(a.prec_, b.prec_));
    mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return out;
  }
  friend Interval operator*(Interval const& a, Interval const& b) {
    mpfr_prec_t const prec = std::max(a.prec_, b.prec_);
    Interval out(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    bool first = true;
    for (auto x : {a.lo_, a.hi_})
      for (auto y : {b.lo_, b.hi_}) {
        mpfr_mul(t, x, y, MPFR_RNDD);
        if (first || mpfr_less_p(t, out.lo_)) mpfr_set(out.lo_, t, MPFR_RNDD);
        mpfr_mul(t, x, y, MPFR_RNDU);
        if (first || mpfr_greater_p(t, out.hi_)) mpfr_set(out.hi_, t, MPFR_RNDU);
        first = false;
      }
    mpfr_clear(t);
    return out;
  }
  /// Divisor must be strictly positive.
  friend Interval operator/(Interval const& a, Interval const& b) {
    if (mpfr_sgn(b.lo_) <= 0) throw ContractError("interval division by a non-positive interval");
    mpfr_prec_t const prec = std::max(a.prec_, b.prec_);
    Interval out(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    bool first = true;
    for (auto x : {a.lo_, a.hi_})
      for (auto y : {b.lo_, b.hi_}) {
        mpfr_div(t, x, y, MPFR_RNDD);
        if (first || mpfr_less_p(t, out.lo_)) mpfr_set(out.lo_, t, MPFR_RNDD);
        mpfr_div(t, x, y, MPFR_RNDU);
        if (first || mpfr_greater_p(t, out.hi_)) mpfr_set(out.hi_, t, MPFR_RNDU);
        first = false;
      }
    mpfr_clear(t);
    return out;
  }

  Interval log2() const {
    if (mpfr_sgn(lo_) <= 0) throw ContractError("log2 of an interval reaching zero");
    Interval out(prec_);
    mpfr_log2(out.lo_, lo_, MPFR_RNDD);
    mpfr_log2(out.hi_, hi_, MPFR_RNDU);
    return out;
  }
  Interval exp2() const {
    Interval out(prec_);
    mpfr_exp2(out.lo_, lo_, MPFR_RNDD);
    mpfr_exp2(out.hi_, hi_, MPFR_RNDU);
    if (mpfr_inf_p(out.hi_)) throw ContractError("exp2 overflow in interval arithmetic");
    return out;
  }

  bool certainly_less(Interval const& o) const { return mpfr_less_p(hi_, o.lo_); }
  bool certainly_greater(Interval const& o) const { return mpfr_greater_p(lo_, o.hi_); }

  /// floor, when the whole interval has a single floor.
  std::optional<BigInt> certain_floor() const {
    mpfr_t a, b;
    mpfr_init2(a, prec_);
    mpfr_init2(b, prec_);
    mpfr_rint_floor(a, lo_, MPFR_RNDD);
    mpfr_rint_floor(b, hi_, MPFR_RNDD);
    std::optional<BigInt> out;
    if (mpfr_equal_p(a, b)) out = to_int(a);
    mpfr_clear(a);
    mpfr_clear(b);
    return out;
  }

  /// ceil, when the whole interval has a single ceiling.
  std::optional<BigInt> certain_ceil() const {
    mpfr_t a, b;
    mpfr_init2(a, prec_);
    mpfr_init2(b, prec_);
    mpfr_rint_ceil(a, lo_, MPFR_RNDU);
    mpfr_rint_ceil(b, hi_, MPFR_RNDU);
    std::optional<BigInt> out;
    if (mpfr_equal_p(a, b)) out = to_int(a);
    mpfr_clear(a);
    mpfr_clear(b);
    return out;
  }

 private:
  static BigInt to_int(mpfr_srcptr integral) {
    mpz_t z;
    mpz_init(z);
    mpfr_get_z(z, integral, MPFR_RNDN);
    char* s = mpz_get_str(nullptr, 16, z);
    std::string text(s);
    void (*freefunc)(void*, std::size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(s, text.size() + 1);
    mpz_clear(z);
    bool const neg = !text.empty() && text[0] == '-';
    BigInt out("0x" + (neg ? text.substr(1) : text));
    return neg ? BigInt(-out) : out;
  }

  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace tmpr
