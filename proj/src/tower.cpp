#include "nsbound/tower.hpp"

#include <optional>
#include <stdexcept>

namespace nsbound {

namespace {

constexpr std::size_t kInlineDigits = 60;

BigFloat log10_of_two(Round rnd, mpfr_prec_t precision) {
  BigFloat two = BigFloat::from_int(2, precision);
  BigFloat out(precision);
  mpfr_log10(out.get(), two.get(), to_mpfr(rnd));
  return out;
}

std::string exponent_text(const BigFloat& e) {
  if (e.is_integer() && compare(e, BigFloat::from_int(0)) >= 0) {
    const mpz_class z = e.to_integer(Round::up);
    if (z.get_str().size() <= kInlineDigits)
      return z.get_str();
  }
  return e.to_short_string(10, Round::up);
}

} // namespace

TowerNumber TowerNumber::exact(mpz_class value) {
  if (sgn(value) < 0)
    throw std::invalid_argument("TowerNumber must be nonnegative");
  return TowerNumber(Exact{std::move(value)});
}

TowerNumber TowerNumber::from_log2(BigFloat upper_log2) {
  if (upper_log2.is_nan())
    throw std::invalid_argument("TowerNumber log2 value is NaN");
  return TowerNumber(Log2{std::move(upper_log2)});
}

TowerNumber TowerNumber::tower(mpz_class inner_base, BigFloat inner_exponent) {
  if (inner_base < 2)
    throw std::invalid_argument("tower inner base must be at least 2");
  if (inner_exponent.is_nan() || inner_exponent.sign() < 0)
    throw std::invalid_argument("tower inner exponent must be nonnegative");
  return TowerNumber(Tower{std::move(inner_base), std::move(inner_exponent)});
}

TowerNumber::Kind TowerNumber::kind() const {
  return static_cast<Kind>(value_.index());
}

const mpz_class& TowerNumber::exact_value() const {
  if (const auto* e = std::get_if<Exact>(&value_))
    return e->value;
  throw std::logic_error("TowerNumber is not exact");
}

const BigFloat& TowerNumber::log2_value() const {
  if (const auto* l = std::get_if<Log2>(&value_))
    return l->upper;
  throw std::logic_error("TowerNumber is not in log2 form");
}

const mpz_class& TowerNumber::inner_base() const {
  if (const auto* t = std::get_if<Tower>(&value_))
    return t->base;
  throw std::logic_error("TowerNumber is not in tower form");
}

const BigFloat& TowerNumber::inner_exponent() const {
  if (const auto* t = std::get_if<Tower>(&value_))
    return t->exponent;
  throw std::logic_error("TowerNumber is not in tower form");
}

BigFloat TowerNumber::log2_bound(Round rnd, mpfr_prec_t precision) const {
  switch (kind()) {
  case Kind::exact: {
    const mpz_class& v = exact_value();
    if (sgn(v) == 0) {
      BigFloat out(precision);
      mpfr_set_inf(out.get(), -1);
      return out;
    }
    return log2_of(v, rnd, precision);
  }
  case Kind::log2:
    return log2_value();
  case Kind::tower: {
    const auto& t = std::get<Tower>(value_);
    BigFloat base(t.base, rnd, precision);
    BigFloat exponent(precision);
    mpfr_set(exponent.get(), t.exponent.get(), to_mpfr(rnd));
    return pow(base, exponent, rnd);
  }
  }
  throw std::logic_error("unreachable");
}

std::string TowerNumber::to_string() const {
  switch (kind()) {
  case Kind::exact: {
    const std::string digits = exact_value().get_str();
    if (digits.size() <= kInlineDigits)
      return digits;
    return "2^" + log2_bound(Round::up).to_short_string(10, Round::up) +
           " (exact, " + std::to_string(digits.size()) + " digits)";
  }
  case Kind::log2:
    return "2^" + exponent_text(log2_value());
  case Kind::tower:
    return "2^(" + inner_base().get_str() + "^" + exponent_text(inner_exponent()) + ")";
  }
  throw std::logic_error("unreachable");
}

std::string TowerNumber::describe(bool exact_digits) const {
  if (is_exact()) {
    const std::string digits = exact_value().get_str();
    if (digits.size() <= kInlineDigits || exact_digits)
      return digits;
  }
  const BigFloat log10 = mul(log2_bound(Round::up), log10_of_two(Round::up, 128), Round::up);
  std::string out = to_string() + " ≈ 10^(" + log10.to_short_string(4, Round::up) + ")";
  out += is_exact() ? " (exponent rounded up)" : " (upper bound, rounded up)";
  return out;
}

bool operator==(const TowerNumber& a, const TowerNumber& b) {
  if (a.kind() != b.kind())
    return false;
  switch (a.kind()) {
  case TowerNumber::Kind::exact:
    return a.exact_value() == b.exact_value();
  case TowerNumber::Kind::log2:
    return a.log2_value() == b.log2_value();
  case TowerNumber::Kind::tower:
    return a.inner_base() == b.inner_base() && a.inner_exponent() == b.inner_exponent();
  }
  return false;
}

std::string to_string(Ordering o) {
  switch (o) {
  case Ordering::less:
    return "less";
  case Ordering::equal:
    return "equal";
  case Ordering::greater:
    return "greater";
  case Ordering::incomparable:
    return "incomparable";
  }
  return "incomparable";
}

namespace {

Ordering from_cmp(int c) {
  return c < 0 ? Ordering::less : c > 0 ? Ordering::greater : Ordering::equal;
}

Ordering compare_enclosures(const TowerNumber& a, const TowerNumber& b,
                            mpfr_prec_t precision) {
  const BigFloat a_lo = a.log2_bound(Round::down, precision);
  const BigFloat a_hi = a.log2_bound(Round::up, precision);
  const BigFloat b_lo = b.log2_bound(Round::down, precision);
  const BigFloat b_hi = b.log2_bound(Round::up, precision);
  if (compare(a_hi, b_lo) < 0)
    return Ordering::less;
  if (compare(a_lo, b_hi) > 0)
    return Ordering::greater;
  if (a_lo == a_hi && b_lo == b_hi && a_lo == b_lo)
    return Ordering::equal;
  return Ordering::incomparable;
}

// The represented integer, when it has an exact integer form of at most
// `bit_limit` bits.
std::optional<mpz_class> materialize(const TowerNumber& x, unsigned long bit_limit) {
  using K = TowerNumber::Kind;
  const auto two_to = [&](const BigFloat& e) -> std::optional<mpz_class> {
    if (!e.is_integer() || e.sign() < 0 || compare(e, BigFloat::from_int(long(bit_limit))) > 0)
      return std::nullopt;
    mpz_class out = 1;
    out <<= e.to_integer(Round::up).get_ui();
    return out;
  };
  switch (x.kind()) {
  case K::exact:
    return x.exact_value();
  case K::log2:
    return two_to(x.log2_value());
  case K::tower: {
    const BigFloat& e = x.inner_exponent();
    if (!e.is_integer() || compare(e, BigFloat::from_int(64)) > 0)
      return std::nullopt;
    mpz_class inner;
    mpz_pow_ui(inner.get_mpz_t(), x.inner_base().get_mpz_t(), e.to_integer(Round::up).get_ui());
    if (inner > bit_limit)
      return std::nullopt;
    return two_to(BigFloat(inner, Round::up));
  }
  }
  return std::nullopt;
}

constexpr unsigned long materialize_bit_limit = 1UL << 20;

} // namespace

Ordering compare(const TowerNumber& a, const TowerNumber& b, mpfr_prec_t precision) {
  using K = TowerNumber::Kind;
  if (a.kind() == K::exact && b.kind() == K::exact)
    return from_cmp(cmp(a.exact_value(), b.exact_value()));
  if (a.kind() == K::log2 && b.kind() == K::log2)
    return from_cmp(compare(a.log2_value(), b.log2_value()));
  if (a.kind() == K::tower && b.kind() == K::tower && a.inner_base() == b.inner_base())
    return from_cmp(compare(a.inner_exponent(), b.inner_exponent()));
  Ordering o = compare_enclosures(a, b, precision);
  if (o == Ordering::incomparable)
    o = compare_enclosures(a, b, precision * 4);
  if (o == Ordering::incomparable) {
    const auto x = materialize(a, materialize_bit_limit);
    const auto y = x ? materialize(b, materialize_bit_limit) : std::nullopt;
    if (x && y)
      return from_cmp(cmp(*x, *y));
  }
  return o;
}

TowerNumber power(const mpz_class& base, const mpz_class& exponent,
                  const TowerContext& ctx) {
  if (sgn(base) < 0 || sgn(exponent) < 0)
    throw std::invalid_argument("power: negative base or exponent");
  if (exponent == 0 || base == 1)
    return TowerNumber::exact(1);
  if (base == 0)
    return TowerNumber::exact(0);
  const BigFloat bits = mul(BigFloat(exponent, Round::up, ctx.precision),
                            log2_of(base, Round::up, ctx.precision), Round::up);
  if (compare(bits, BigFloat(mpz_class(ctx.exact_bit_limit), Round::down, ctx.precision)) < 0 &&
      exponent.fits_ulong_p()) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent.get_ui());
    return TowerNumber::exact(std::move(out));
  }
  return TowerNumber::from_log2(bits);
}

TowerNumber power(const mpq_class& base, const mpz_class& exponent,
                  const TowerContext& ctx) {
  if (sgn(base) < 0 || sgn(exponent) < 0)
    throw std::invalid_argument("power: negative base or exponent");
  if (base.get_den() == 1)
    return power(mpz_class(base.get_num()), exponent, ctx);
  if (exponent == 0)
    return TowerNumber::exact(1);
  if (sgn(base) == 0)
    return TowerNumber::exact(0);
  const BigFloat num_bits = mul(BigFloat(exponent, Round::up, ctx.precision),
                                log2_of(base.get_num(), Round::up, ctx.precision),
                                Round::up);
  if (compare(num_bits, BigFloat(mpz_class(ctx.exact_bit_limit), Round::down, ctx.precision)) < 0 &&
      exponent.fits_ulong_p()) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent.get_ui());
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent.get_ui());
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return TowerNumber::exact(std::move(out));
  }
  const BigFloat log_base = sub(log2_of(base.get_num(), Round::up, ctx.precision),
                                log2_of(base.get_den(), Round::down, ctx.precision),
                                Round::up);
  return TowerNumber::from_log2(
      mul(BigFloat(exponent, Round::up, ctx.precision), log_base, Round::up));
}

TowerNumber multiply(const TowerNumber& a, const TowerNumber& b,
                     const TowerContext& ctx) {
  const bool a_zero = a.is_exact() && sgn(a.exact_value()) == 0;
  const bool b_zero = b.is_exact() && sgn(b.exact_value()) == 0;
  if (a_zero || b_zero)
    return TowerNumber::exact(0);
  if (a.is_exact() && b.is_exact()) {
    const std::size_t bits = mpz_sizeinbase(a.exact_value().get_mpz_t(), 2) +
                             mpz_sizeinbase(b.exact_value().get_mpz_t(), 2);
    if (bits <= ctx.exact_bit_limit)
      return TowerNumber::exact(a.exact_value() * b.exact_value());
  }
  return TowerNumber::from_log2(add(a.log2_bound(Round::up, ctx.precision),
                                    b.log2_bound(Round::up, ctx.precision), Round::up));
}

} // namespace nsbound
