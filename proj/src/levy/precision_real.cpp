#include "quadcf/levy/precision_real.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "quadcf/error.hpp"

namespace quadcf {

BigFloat::BigFloat(mpfr_prec_t prec) { mpfr_init2(x_, prec); }

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(x_, o.precision());
  mpfr_set(x_, o.x_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  x_[0] = o.x_[0];
  o.live_ = false;
}

BigFloat& BigFloat::operator=(BigFloat o) noexcept {
  std::swap(x_[0], o.x_[0]);
  std::swap(live_, o.live_);
  return *this;
}

BigFloat::~BigFloat() {
  if (live_) mpfr_clear(x_);
}

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(mpfr_snprintf(nullptr, 0, "%.*Rf", digits, x_)) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", digits, x_);
  return buf.data();
}

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {
  mpfr_set_zero(lo_.get(), 1);
  mpfr_set_zero(hi_.get(), 1);
}

Interval Interval::exact(const BigInt& v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_.get(), v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_.get(), v.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::log2(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_log2(r.lo_.get(), MPFR_RNDD);
  mpfr_const_log2(r.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::operator+(const Interval& o) const {
  Interval r(precision());
  mpfr_add(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  Interval r(precision());
  mpfr_sub(r.lo_.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
  mpfr_sub(r.hi_.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::operator-() const {
  Interval r(precision());
  mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& o) const {
  Interval r(precision());
  BigFloat t(precision());
  const BigFloat* xs[2] = {&lo_, &hi_};
  const BigFloat* ys[2] = {&o.lo_, &o.hi_};
  bool first = true;
  for (auto* x : xs) {
    for (auto* y : ys) {
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), r.lo_.get())) mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), r.hi_.get())) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

Interval Interval::operator/(const Interval& o) const {
  if (!o.positive() && !o.negative()) throw ComputationError("interval division by a range containing zero");
  Interval inv(precision());
  mpfr_ui_div(inv.lo_.get(), 1, o.hi_.get(), MPFR_RNDD);
  mpfr_ui_div(inv.hi_.get(), 1, o.lo_.get(), MPFR_RNDU);
  return *this * inv;
}

Interval Interval::abs() const {
  if (mpfr_sgn(lo_.get()) >= 0) return *this;
  if (mpfr_sgn(hi_.get()) <= 0) return -*this;
  Interval r(precision());
  mpfr_set_zero(r.lo_.get(), 1);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  if (mpfr_greater_p(hi_.get(), r.hi_.get())) mpfr_set(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo_.get()) < 0) throw ComputationError("square root of a possibly negative range");
  Interval r(precision());
  mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::log() const {
  if (!positive()) throw ComputationError("logarithm of a possibly non-positive range");
  Interval r(precision());
  mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::divided(unsigned long n) const {
  Interval r(precision());
  mpfr_div_ui(r.lo_.get(), lo_.get(), n, MPFR_RNDD);
  mpfr_div_ui(r.hi_.get(), hi_.get(), n, MPFR_RNDU);
  return r;
}

BigFloat Interval::width() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

PrecisionReal::PrecisionReal(Interval enclosure, std::size_t prec_bits)
    : iv_(std::move(enclosure)), prec_bits_(prec_bits) {}

BigFloat PrecisionReal::midpoint() const {
  BigFloat m(iv_.precision() + 1);
  mpfr_add(m.get(), iv_.lo().get(), iv_.hi().get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

double PrecisionReal::error_bound() const {
  BigFloat w = iv_.width();
  return mpfr_get_d(w.get(), MPFR_RNDU);
}

PrecisionReal refine(std::size_t prec_bits, const std::function<Interval(mpfr_prec_t)>& compute) {
  if (prec_bits < 2) throw ComputationError("precision must be at least 2 bits");
  mpfr_prec_t w = static_cast<mpfr_prec_t>(prec_bits) + 32;
  for (int round = 0; round < 12; ++round, w *= 2) {
    Interval iv = compute(w);
    BigFloat width = iv.width();
    // Half-width <= 2^-prec_bits.
    if (mpfr_cmp_si_2exp(width.get(), 1, -static_cast<long>(prec_bits) + 1) <= 0) {
      return PrecisionReal(std::move(iv), prec_bits);
    }
  }
  throw ComputationError("working precision limit reached");
}

Interval abs_difference(const PrecisionReal& a, const PrecisionReal& b) {
  return (a.enclosure() - b.enclosure()).abs();
}

}  // namespace quadcf
