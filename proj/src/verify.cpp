#include "nsbound/verify.hpp"

#include "nsbound/bounds.hpp"
#include "nsbound/gotzmann.hpp"
#include "nsbound/hilbert.hpp"

#include <stdexcept>

namespace nsbound {

namespace {

constexpr unsigned long exact_bit_budget = 10'000'000;

mpz_class pow_ui(const mpz_class& base, unsigned long exponent) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

std::string show(const mpz_class& v) { return TowerNumber::exact(v).to_string(); }

double log2_margin(const mpz_class& left, const mpz_class& right) {
  if (left <= 0 || right <= 0)
    return 0.0;
  return sub(log2_of(right, Round::nearest), log2_of(left, Round::nearest), Round::nearest)
      .to_double();
}

VerificationOutcome make(std::string name, std::vector<std::pair<std::string, long>> params) {
  VerificationOutcome o;
  o.name = std::move(name);
  o.params = std::move(params);
  return o;
}

void require_chain_range(unsigned d, unsigned r, const char* what) {
  if (r < 3 || d < 2)
    throw std::invalid_argument(std::string(what) + ": requires r >= 3 and d >= 2");
}

// log2(x) / log2(d) rounded in direction rnd, for x > 0.
BigFloat log_base_d(const BigFloat& x, unsigned d, Round rnd) {
  const mpfr_prec_t prec = x.precision();
  return div(log2(x, rnd), log2_of(d, opposite(rnd), prec), rnd);
}

} // namespace

std::string VerificationOutcome::params_string() const {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty())
      out += ", ";
    out += k + "=" + std::to_string(v);
  }
  return out;
}

VerificationOutcome check_binom_lt_power(unsigned r, const mpz_class& t) {
  if (r < 2)
    throw std::invalid_argument("check_binom_lt_power: requires r >= 2");
  if (t < 8 * r)
    throw std::invalid_argument("check_binom_lt_power: requires t >= 8r");
  VerificationOutcome o = make("binom_lt_power", {{"r", r}, {"t", t.get_si()}});
  const mpz_class left = binomial(t + 1 + r, r);
  const mpz_class right = pow_ui(t, r);
  o.holds = left < right;
  o.left = show(left);
  o.right = show(right);
  o.margin = log2_margin(left, right);
  return o;
}

std::vector<VerificationOutcome> check_hoa_dominates_t_detail(unsigned d, unsigned r,
                                                              mpfr_prec_t precision) {
  require_chain_range(d, r, "check_hoa_dominates_t");
  const mpz_class t = closed_form_t(d, r);
  const mpz_class rd = mpz_class(r) * d;
  const unsigned long t_exponent = (r + 1) * (1UL << (r - 2));
  std::vector<VerificationOutcome> out;
  for (unsigned a = 1; a + 1 <= r; ++a) {
    VerificationOutcome o = make("hoa_dominates_t", {{"d", d}, {"r", r}, {"a", a}});
    const unsigned long e = a * (1UL << (a - 1));
    // (3/2 D^k + D)^e = (3 D^k + 2 D)^e / 2^e with D = rd, k = r + 1 - a.
    const mpz_class num = 3 * pow_ui(rd, r + 1 - a) + 2 * rd;
    const double bits = double(e) * double(mpz_sizeinbase(num.get_mpz_t(), 2));
    bool main_holds = false;
    if (bits < double(exact_bit_budget)) {
      const mpz_class rhs = pow_ui(num, e);
      const mpz_class lhs = t * pow_ui(2, e);
      main_holds = lhs >= rhs;
      o.margin = log2_margin(rhs, lhs);
      o.right = show(rhs / pow_ui(2, e)) + " (floor)";
    } else {
      const BigFloat t_lo = log2_of(t, Round::down, precision);
      const BigFloat hoa_hi = mul(BigFloat(mpz_class(e), Round::up, precision),
                                  sub(log2_of(num, Round::up, precision),
                                      BigFloat::from_int(1, precision), Round::up),
                                  Round::up);
      main_holds = compare(t_lo, hoa_hi) >= 0;
      o.margin = sub(t_lo, hoa_hi, Round::nearest).to_double();
      o.right = "2^" + hoa_hi.to_short_string(12, Round::up);
    }
    o.left = show(t);
    // Intermediate form: (2rd)^((r+1-a) a 2^(a-1)) <= (2rd)^((r+1) 2^(r-2)).
    const unsigned long mid_exponent = (r + 1 - a) * e;
    const bool mid_holds = mid_exponent <= t_exponent;
    o.holds = main_holds && mid_holds;
    o.note = std::string("t >= (3/2 (rd)^(r+1-a) + rd)^(a 2^(a-1)): ") +
             (main_holds ? "holds" : "fails") +
             "; (2rd)^((r+1-a) a 2^(a-1)) <= t: " + (mid_holds ? "holds" : "fails");
    out.push_back(std::move(o));
  }
  return out;
}

VerificationOutcome check_hoa_dominates_t(unsigned d, unsigned r, mpfr_prec_t precision) {
  const auto detail = check_hoa_dominates_t_detail(d, r, precision);
  VerificationOutcome o = make("hoa_dominates_t", {{"d", d}, {"r", r}});
  o.holds = true;
  const VerificationOutcome* worst = nullptr;
  for (const auto& x : detail) {
    o.holds = o.holds && x.holds;
    if (!worst || (!x.holds && worst->holds) ||
        (x.holds == worst->holds && x.margin && worst->margin && *x.margin < *worst->margin))
      worst = &x;
  }
  if (worst) {
    o.left = worst->left;
    o.right = worst->right;
    o.margin = worst->margin;
    o.note = "worst a=" + std::to_string(worst->params.back().second) + ": " + worst->note;
  }
  return o;
}

VerificationOutcome check_hilbert_scheme_chain(unsigned d, unsigned r, mpfr_prec_t precision) {
  require_chain_range(d, r, "check_hilbert_scheme_chain");
  TowerContext ctx;
  ctx.precision = precision;
  ctx.exact_bit_limit = 0; // only the logarithm is needed
  const TowerNumber conn = conn_bound_hilb(closed_form_t(d, r), r, ctx);
  const BigFloat l1 = conn.log2_bound(Round::up, precision);
  const BigFloat left = log2(log_base_d(l1, d, Round::up), Round::up);
  const BigFloat right = add(BigFloat::from_int(r, precision),
                             mul(BigFloat::from_int(3, precision),
                                 log2_of(r, Round::down, precision), Round::down),
                             Round::down);
  VerificationOutcome o = make("hilbert_scheme_chain", {{"d", d}, {"r", r}});
  o.holds = compare(left, right) <= 0;
  o.left = left.to_short_string(12, Round::up);
  o.right = right.to_short_string(12, Round::down);
  o.margin = sub(right, left, Round::nearest).to_double();
  o.note = "log2 log_d log2 (t^(r t^(2r))) <= r + 3 log2 r";
  return o;
}

VerificationOutcome check_effective_divisor_chain(unsigned d, unsigned r, mpfr_prec_t precision) {
  require_chain_range(d, r, "check_effective_divisor_chain");
  TowerContext ctx;
  ctx.precision = precision;
  ctx.exact_bit_limit = 0;
  const mpz_class n = n_degree_worst_case(d, r);
  const TowerNumber effdiv = effdiv_bound(n, d, r, ctx);
  const BigFloat left = log_base_d(effdiv.log2_bound(Round::up, precision), d, Round::up);
  const BigFloat right = add(BigFloat::from_int(long(r) * r, precision),
                             mul(BigFloat::from_int(2L * r, precision),
                                 log2_of(r, Round::down, precision), Round::down),
                             Round::down);
  VerificationOutcome o = make("effective_divisor_chain", {{"d", d}, {"r", r}});
  o.holds = compare(left, right) <= 0;
  o.left = left.to_short_string(12, Round::up);
  o.right = right.to_short_string(12, Round::down);
  o.margin = sub(right, left, Round::nearest).to_double();
  o.note = "log_d log2 effdiv(n_max) <= r^2 + 2r log2 r, n_max = " + show(n);
  return o;
}

std::vector<VerificationOutcome> check_gotzmann_vs_hoa(
    const std::vector<IdealPresentation>& corpus, mpfr_prec_t precision) {
  TowerContext ctx;
  ctx.precision = precision;
  std::vector<VerificationOutcome> out;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const IdealPresentation& ideal = corpus[i];
    const VarietyInvariants inv = invariants(ideal);
    VerificationOutcome o = make("gotzmann_vs_hoa",
                                 {{"index", long(i)}, {"r", ideal.r()}, {"d", ideal.d()}});
    const mpz_class phi = gotzmann_number(inv.hp);
    const unsigned degree_bound = std::max(ideal.d(), 2u);
    // Hoa's bound is real-valued; phi is an integer, so comparing with the
    // floor is exact.
    const TowerNumber hoa = hoa_bound({degree_bound, ideal.r(), inv.dim + 1}, ctx);
    const Ordering ord = compare(TowerNumber::exact(phi), hoa, precision);
    o.holds = ord == Ordering::less || ord == Ordering::equal;
    o.left = show(phi);
    o.right = hoa.to_string();
    o.margin = sub(hoa.log2_bound(Round::down, precision),
                   log2_of(phi, Round::up, precision), Round::nearest)
                   .to_double();
    o.note = "hp " + inv.hp.to_string();
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<VerificationOutcome> compare_bounds_grid(const GridSpec& grid) {
  std::vector<VerificationOutcome> out;
  for (long r = std::max(grid.r.lo, 3L); r <= grid.r.hi; ++r) {
    for (long d = std::max(grid.d.lo, 2L); d <= grid.d.hi; ++d) {
      const TowerNumber t11 = effective_divisor_bound(d, r, grid.precision);
      const TowerNumber t49 = hilbert_scheme_bound(d, r);
      const Ordering ord = compare(t11, t49, grid.precision);
      VerificationOutcome o = make("compare_bounds", {{"d", d}, {"r", r}});
      o.holds = ord == Ordering::less || ord == Ordering::equal;
      o.left = t11.to_string();
      o.right = t49.to_string();
      o.margin = sub(t49.inner_exponent(), t11.inner_exponent(), Round::nearest).to_double();
      o.note = "exponent comparison: " + to_string(ord);
      out.push_back(std::move(o));
    }
  }
  return out;
}

std::vector<VerificationOutcome> binom_grid(const GridSpec& grid) {
  std::vector<VerificationOutcome> out;
  for (long r = std::max(grid.r.lo, 2L); r <= grid.r.hi; ++r)
    for (const auto& [mult, add_const] : grid.t_samples)
      out.push_back(check_binom_lt_power(r, mpz_class(mult * r + add_const)));
  return out;
}

namespace {

template <class F>
std::vector<VerificationOutcome> dr_grid(const GridSpec& grid, F check) {
  std::vector<VerificationOutcome> out;
  for (long r = std::max(grid.r.lo, 3L); r <= grid.r.hi; ++r)
    for (long d = std::max(grid.d.lo, 2L); d <= grid.d.hi; ++d)
      out.push_back(check(unsigned(d), unsigned(r), grid.precision));
  return out;
}

} // namespace

std::vector<VerificationOutcome> hilbert_scheme_grid(const GridSpec& grid) {
  return dr_grid(grid, check_hilbert_scheme_chain);
}

std::vector<VerificationOutcome> effective_divisor_grid(const GridSpec& grid) {
  return dr_grid(grid, check_effective_divisor_chain);
}

std::vector<VerificationOutcome> hoa_grid(const GridSpec& grid) {
  std::vector<VerificationOutcome> out;
  for (long r = std::max(grid.r.lo, 3L); r <= grid.r.hi; ++r)
    for (long d = std::max(grid.d.lo, 2L); d <= grid.d.hi; ++d)
      for (auto& o : check_hoa_dominates_t_detail(d, r, grid.precision))
        out.push_back(std::move(o));
  return out;
}

} // namespace nsbound
