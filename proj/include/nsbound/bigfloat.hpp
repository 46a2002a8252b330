#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace nsbound {

enum class Round { up, down, nearest };

// Owning wrapper around mpfr_t. Every arithmetic entry point takes an
// explicit rounding direction; there is no implicit "nearest".
class BigFloat {
public:
  static constexpr mpfr_prec_t default_precision = 128;

  explicit BigFloat(mpfr_prec_t precision = default_precision);
  BigFloat(const mpz_class& value, Round rnd,
           mpfr_prec_t precision = default_precision);
  BigFloat(const mpq_class& value, Round rnd,
           mpfr_prec_t precision = default_precision);
  // Parses a decimal string (as produced by to_string).
  BigFloat(const std::string& decimal, Round rnd,
           mpfr_prec_t precision = default_precision);

  static BigFloat from_int(long value,
                           mpfr_prec_t precision = default_precision);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_inf() const { return mpfr_inf_p(value_) != 0; }
  bool is_nan() const { return mpfr_nan_p(value_) != 0; }
  bool is_integer() const { return mpfr_integer_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Exact when the value is an integer; otherwise rounded in direction rnd.
  mpz_class to_integer(Round rnd) const;

  // Decimal string rounded in direction rnd, with enough digits that parsing
  // it back with Round::nearest at the same precision recovers the value.
  std::string to_string(Round rnd = Round::up) const;
  // Short scientific rendering for human output.
  std::string to_short_string(int digits = 6, Round rnd = Round::up) const;

  friend int compare(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.value_, b.value_);
  }
  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }

private:
  mpfr_t value_;
};

mpfr_rnd_t to_mpfr(Round rnd);
Round opposite(Round rnd);

BigFloat add(const BigFloat& a, const BigFloat& b, Round rnd);
BigFloat sub(const BigFloat& a, const BigFloat& b, Round rnd);
BigFloat mul(const BigFloat& a, const BigFloat& b, Round rnd);
BigFloat div(const BigFloat& a, const BigFloat& b, Round rnd);
BigFloat pow(const BigFloat& base, const BigFloat& exponent, Round rnd);
BigFloat log2(const BigFloat& x, Round rnd);
BigFloat exp2(const BigFloat& x, Round rnd);

// log2 of a positive integer, directed.
BigFloat log2_of(const mpz_class& x, Round rnd,
                 mpfr_prec_t precision = BigFloat::default_precision);

// Raises the MPFR exponent range to its maximum so doubly-exponential
// quantities stay finite. Idempotent; called by every BigFloat constructor.
void widen_exponent_range();

} // namespace nsbound
