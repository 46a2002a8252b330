#pragma once

#include "nsbound/bigfloat.hpp"

#include <gmpxx.h>

#include <string>
#include <variant>

namespace nsbound {

struct TowerContext {
  mpfr_prec_t precision = BigFloat::default_precision;
  // Results whose binary length would exceed this are kept in log form.
  unsigned long exact_bit_limit = 1'000'000;
};

// A nonnegative quantity that is either exact or a certified upper bound:
//   exact  v        the integer v
//   log2   L        2^L, with L rounded up from the true log2
//   tower  (b, e)   2^(b^e), with e rounded up
// Arithmetic never rounds toward a smaller bound.
class TowerNumber {
public:
  enum class Kind { exact, log2, tower };

  // Exact zero.
  TowerNumber() : value_(Exact{0}) {}

  static TowerNumber exact(mpz_class value);
  static TowerNumber from_log2(BigFloat upper_log2);
  // Requires inner_base >= 2.
  static TowerNumber tower(mpz_class inner_base, BigFloat inner_exponent);

  Kind kind() const;
  bool is_exact() const { return kind() == Kind::exact; }

  // Accessors throw std::logic_error on the wrong kind.
  const mpz_class& exact_value() const;
  const BigFloat& log2_value() const;
  const mpz_class& inner_base() const;
  const BigFloat& inner_exponent() const;

  // Directed bound on log2 of the represented value (-inf for exact 0).
  BigFloat log2_bound(Round rnd, mpfr_prec_t precision = BigFloat::default_precision) const;

  // Compact form: "4096", "2^524288", "2^(2^216)".
  std::string to_string() const;
  // Human form with magnitude, e.g. "2^(2^216) ≈ 10^(3.25e64) (upper bound)".
  std::string describe(bool exact_digits = false) const;

  friend bool operator==(const TowerNumber& a, const TowerNumber& b);

private:
  struct Exact { mpz_class value; };
  struct Log2 { BigFloat upper; };
  struct Tower { mpz_class base; BigFloat exponent; };

  explicit TowerNumber(std::variant<Exact, Log2, Tower> v) : value_(std::move(v)) {}

  std::variant<Exact, Log2, Tower> value_;
};

enum class Ordering { less, equal, greater, incomparable };
std::string to_string(Ordering o);

// Compares represented values. Never returns a strict order that exact
// evaluation would contradict; returns `incomparable` when the enclosures
// overlap and no structural shortcut applies.
Ordering compare(const TowerNumber& a, const TowerNumber& b,
                 mpfr_prec_t precision = BigFloat::default_precision);

// base^exponent, exact when it fits the context's bit limit.
TowerNumber power(const mpz_class& base, const mpz_class& exponent,
                  const TowerContext& ctx = {});
// floor(base^exponent) for rational base >= 0; the floor is the tightest
// integer upper bound for integer-valued quantities below base^exponent.
TowerNumber power(const mpq_class& base, const mpz_class& exponent,
                  const TowerContext& ctx = {});
TowerNumber multiply(const TowerNumber& a, const TowerNumber& b,
                     const TowerContext& ctx = {});

} // namespace nsbound
