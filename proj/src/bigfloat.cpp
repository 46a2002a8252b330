#include "nsbound/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace nsbound {

void widen_exponent_range() {
  static const bool done = [] {
    mpfr_set_emax(mpfr_get_emax_max());
    mpfr_set_emin(mpfr_get_emin_min());
    return true;
  }();
  (void)done;
}

mpfr_rnd_t to_mpfr(Round rnd) {
  switch (rnd) {
  case Round::up:
    return MPFR_RNDU;
  case Round::down:
    return MPFR_RNDD;
  case Round::nearest:
    return MPFR_RNDN;
  }
  return MPFR_RNDN;
}

Round opposite(Round rnd) {
  switch (rnd) {
  case Round::up:
    return Round::down;
  case Round::down:
    return Round::up;
  case Round::nearest:
    return Round::nearest;
  }
  return Round::nearest;
}

BigFloat::BigFloat(mpfr_prec_t precision) {
  widen_exponent_range();
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat BigFloat::from_int(long value, mpfr_prec_t precision) {
  BigFloat out(std::max<mpfr_prec_t>(precision, 64));
  mpfr_set_si(out.value_, value, MPFR_RNDN);
  return out;
}

BigFloat::BigFloat(const mpz_class& value, Round rnd, mpfr_prec_t precision) {
  widen_exponent_range();
  mpfr_init2(value_, precision);
  mpfr_set_z(value_, value.get_mpz_t(), to_mpfr(rnd));
}

BigFloat::BigFloat(const mpq_class& value, Round rnd, mpfr_prec_t precision) {
  widen_exponent_range();
  mpfr_init2(value_, precision);
  mpfr_set_q(value_, value.get_mpq_t(), to_mpfr(rnd));
}

BigFloat::BigFloat(const std::string& decimal, Round rnd,
                   mpfr_prec_t precision) {
  widen_exponent_range();
  mpfr_init2(value_, precision);
  char* end = nullptr;
  mpfr_strtofr(value_, decimal.c_str(), &end, 10, to_mpfr(rnd));
  if (decimal.empty() || end == nullptr || *end != '\0') {
    mpfr_clear(value_);
    throw std::invalid_argument("not a decimal number: '" + decimal + "'");
  }
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) {
    if (precision() != other.precision())
      mpfr_set_prec(value_, other.precision());
    mpfr_swap(value_, other.value_);
  }
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

mpz_class BigFloat::to_integer(Round rnd) const {
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), value_, to_mpfr(rnd));
  return out;
}

namespace {

// Integers with at most `plain_limit` digits print without an exponent.
std::string render(mpfr_srcptr value, std::size_t digits, mpfr_rnd_t rnd,
                   mpfr_exp_t plain_limit) {
  if (mpfr_nan_p(value))
    return "nan";
  if (mpfr_inf_p(value))
    return mpfr_sgn(value) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(value))
    return "0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, digits, value, rnd);
  std::string mantissa(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (mantissa.front() == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  while (mantissa.size() > 1 && mantissa.back() == '0')
    mantissa.pop_back();
  // value = 0.mantissa * 10^exp10
  const auto len = static_cast<mpfr_exp_t>(mantissa.size());
  if (exp10 >= len && exp10 <= plain_limit)
    return sign + mantissa + std::string(static_cast<std::size_t>(exp10 - len), '0');
  if (exp10 > 0 && exp10 < len && exp10 <= 40)
    return sign + mantissa.substr(0, static_cast<std::size_t>(exp10)) + "." +
           mantissa.substr(static_cast<std::size_t>(exp10));
  std::string out = sign + mantissa.substr(0, 1);
  if (mantissa.size() > 1)
    out += "." + mantissa.substr(1);
  out += "e" + std::to_string(exp10 - 1);
  return out;
}

} // namespace

std::string BigFloat::to_string(Round rnd) const {
  const std::size_t digits = mpfr_get_str_ndigits(10, precision()) + 2;
  return render(value_, digits, to_mpfr(rnd), 40);
}

std::string BigFloat::to_short_string(int digits, Round rnd) const {
  const auto n = static_cast<std::size_t>(std::max(digits, 2));
  return render(value_, n, to_mpfr(rnd), static_cast<mpfr_exp_t>(n));
}

namespace {

mpfr_prec_t joint(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}

} // namespace

BigFloat add(const BigFloat& a, const BigFloat& b, Round rnd) {
  BigFloat out(joint(a, b));
  mpfr_add(out.get(), a.get(), b.get(), to_mpfr(rnd));
  return out;
}

BigFloat sub(const BigFloat& a, const BigFloat& b, Round rnd) {
  BigFloat out(joint(a, b));
  mpfr_sub(out.get(), a.get(), b.get(), to_mpfr(rnd));
  return out;
}

BigFloat mul(const BigFloat& a, const BigFloat& b, Round rnd) {
  BigFloat out(joint(a, b));
  mpfr_mul(out.get(), a.get(), b.get(), to_mpfr(rnd));
  return out;
}

BigFloat div(const BigFloat& a, const BigFloat& b, Round rnd) {
  BigFloat out(joint(a, b));
  mpfr_div(out.get(), a.get(), b.get(), to_mpfr(rnd));
  return out;
}

BigFloat pow(const BigFloat& base, const BigFloat& exponent, Round rnd) {
  BigFloat out(joint(base, exponent));
  mpfr_pow(out.get(), base.get(), exponent.get(), to_mpfr(rnd));
  return out;
}

BigFloat log2(const BigFloat& x, Round rnd) {
  BigFloat out(x.precision());
  mpfr_log2(out.get(), x.get(), to_mpfr(rnd));
  return out;
}

BigFloat exp2(const BigFloat& x, Round rnd) {
  BigFloat out(x.precision());
  mpfr_exp2(out.get(), x.get(), to_mpfr(rnd));
  return out;
}

BigFloat log2_of(const mpz_class& x, Round rnd, mpfr_prec_t precision) {
  if (sgn(x) <= 0)
    throw std::domain_error("log2 of a non-positive integer");
  // Monotone composition: rounding the input and the log in the same
  // direction yields a directed bound on log2(x).
  BigFloat in(x, rnd, precision);
  return log2(in, rnd);
}

} // namespace nsbound
