#include "nsbound/gotzmann.hpp"

#include "nsbound/errors.hpp"

#include <stdexcept>

namespace nsbound {

GotzmannDecomposition::GotzmannDecomposition(std::vector<Run> runs)
    : runs_(std::move(runs)), length_(0) {
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (runs_[i].count <= 0)
      throw std::invalid_argument("Gotzmann run with non-positive count");
    if (i > 0 && runs_[i].exponent >= runs_[i - 1].exponent)
      throw std::invalid_argument("Gotzmann runs must strictly decrease in exponent");
    length_ += runs_[i].count;
  }
}

std::optional<std::vector<unsigned>> GotzmannDecomposition::expanded(std::size_t limit) const {
  if (length_ > mpz_class(static_cast<unsigned long>(limit)))
    return std::nullopt;
  std::vector<unsigned> out;
  for (const auto& run : runs_)
    out.insert(out.end(), run.count.get_ui(), run.exponent);
  return out;
}

HilbertPolynomial GotzmannDecomposition::reconstruct() const {
  HilbertPolynomial total;
  mpz_class first = 1;
  for (const auto& run : runs_) {
    total = total + gotzmann_run(run.exponent, first, run.count);
    first += run.count;
  }
  return total;
}

HilbertPolynomial gotzmann_run(unsigned a, const mpz_class& first, const mpz_class& count) {
  // Hockey stick: sum_{u=L}^{U} binom(u, a) = binom(U+1, a+1) - binom(L, a+1)
  // with u = t + a + 1 - i.
  return HilbertPolynomial::interpolate(a + 1, [&](const mpz_class& t) -> mpz_class {
    const mpz_class upper = t + a + 2 - first;
    const mpz_class lower = t + a + 2 - first - count;
    return binomial(upper, a + 1) - binomial(lower, a + 1);
  });
}

HilbertPolynomial gotzmann_sum(const std::vector<unsigned>& sequence) {
  HilbertPolynomial total;
  for (std::size_t i = 0; i < sequence.size(); ++i)
    total = total + gotzmann_run(sequence[i], mpz_class(static_cast<unsigned long>(i + 1)), 1);
  return total;
}

namespace {

std::vector<unsigned> trace_of(const std::vector<GotzmannDecomposition::Run>& runs) {
  constexpr unsigned long kTraceLimit = 1000;
  std::vector<unsigned> out;
  for (const auto& run : runs) {
    const unsigned long take = run.count > kTraceLimit ? kTraceLimit : run.count.get_ui();
    out.insert(out.end(), take, run.exponent);
    if (out.size() >= kTraceLimit)
      break;
  }
  return out;
}

} // namespace

GotzmannDecomposition gotzmann_decomposition(const HilbertPolynomial& q) {
  if (q.is_zero())
    throw std::invalid_argument("Gotzmann decomposition of the zero polynomial");
  std::vector<GotzmannDecomposition::Run> runs;
  HilbertPolynomial remainder = q;
  mpz_class next_index = 1;
  while (!remainder.is_zero()) {
    const auto a = static_cast<unsigned>(remainder.degree());
    // a! times the leading coefficient: how many binomials of degree a fit.
    const mpz_class count = remainder.binomial_coefficients().back();
    if (sgn(count) < 0)
      throw NotAdmissible("not an admissible Hilbert polynomial: remainder " +
                              remainder.to_string() + " has negative leading coefficient",
                          trace_of(runs), remainder.to_string());
    remainder = remainder - gotzmann_run(a, next_index, count);
    if (remainder.degree() >= static_cast<long>(a))
      throw NotAdmissible("not an admissible Hilbert polynomial: greedy step did not lower the degree",
                          trace_of(runs), remainder.to_string());
    runs.push_back({a, count});
    next_index += count;
  }
  return GotzmannDecomposition(std::move(runs));
}

mpz_class gotzmann_number(const HilbertPolynomial& q) {
  return gotzmann_decomposition(q).length();
}

namespace {

void check_hoa(const HoaBoundInput& in) {
  if (in.degree_bound < 2)
    throw std::invalid_argument("Hoa bound requires generator degree bound D >= 2");
  if (in.krull_dim > in.r + 1)
    throw std::invalid_argument("Hoa bound requires Krull dimension a <= r + 1");
}

} // namespace

mpq_class hoa_base(const HoaBoundInput& in) {
  check_hoa(in);
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), in.degree_bound.get_mpz_t(), in.r + 1 - in.krull_dim);
  mpq_class base = mpq_class(3, 2) * power + in.degree_bound;
  base.canonicalize();
  return base;
}

mpz_class hoa_exponent(const HoaBoundInput& in) {
  check_hoa(in);
  if (in.krull_dim == 0)
    return 0;
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), 2, in.krull_dim - 1);
  return e * in.krull_dim;
}

TowerNumber hoa_bound(const HoaBoundInput& in, const TowerContext& ctx) {
  return power(hoa_base(in), hoa_exponent(in), ctx);
}

} // namespace nsbound
