#pragma once

#include <mpfr.h>

#include <cstddef>
#include <functional>
#include <string>

#include "quadcf/exact/bigint.hpp"

namespace quadcf {

// RAII handle for an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(BigFloat o) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return x_; }
  mpfr_srcptr get() const { return x_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(x_); }
  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  // Fixed-point decimal with the given number of fractional digits.
  std::string to_string(int digits) const;

 private:
  mpfr_t x_;
  bool live_ = true;
};

// Closed interval [lo, hi] with outward rounding on every operation.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  static Interval exact(const BigInt& v, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);
  static Interval log2(mpfr_prec_t prec);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  mpfr_prec_t precision() const { return lo_.precision(); }

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;  // o must exclude zero
  Interval operator-() const;
  Interval abs() const;
  Interval sqrt() const;  // lo >= 0
  Interval log() const;   // lo > 0
  Interval divided(unsigned long n) const;

  bool positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool negative() const { return mpfr_sgn(hi_.get()) < 0; }
  // Upper bound on hi - lo.
  BigFloat width() const;
  // True when every point of this lies strictly below every point of o.
  bool below(const Interval& o) const { return mpfr_less_p(hi_.get(), o.lo_.get()) != 0; }

 private:
  BigFloat lo_, hi_;
};

// Certified real: an enclosure whose half-width is at most 2^-prec_bits.
class PrecisionReal {
 public:
  PrecisionReal(Interval enclosure, std::size_t prec_bits);

  const Interval& enclosure() const { return iv_; }
  std::size_t prec_bits() const { return prec_bits_; }
  BigFloat midpoint() const;
  // Upper bound on |value - midpoint()|.
  double error_bound() const;
  double to_double() const { return midpoint().to_double(); }
  std::string to_string(int digits = 20) const { return midpoint().to_string(digits); }

 private:
  Interval iv_;
  std::size_t prec_bits_;
};

// Recomputes at doubling working precision until the enclosure is tight enough.
PrecisionReal refine(std::size_t prec_bits, const std::function<Interval(mpfr_prec_t)>& compute);

// |a - b| as an enclosure.
Interval abs_difference(const PrecisionReal& a, const PrecisionReal& b);

}  // namespace quadcf
