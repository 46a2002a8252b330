#pragma once

#include "nsbound/poly.hpp"
#include "nsbound/tower.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nsbound {

struct IntRange {
  long lo = 0;
  long hi = -1; // inclusive; empty when hi < lo
  bool empty() const { return hi < lo; }
};

struct GridSpec {
  IntRange r{3, 8};
  IntRange d{2, 8};
  // Offsets of t as (multiplier of r, constant): t = a r + b.
  std::vector<std::pair<long, long>> t_samples{{8, 0}, {8, 1}, {8, 7}, {16, 0}, {64, 0}};
  mpfr_prec_t precision = BigFloat::default_precision;
};

struct VerificationOutcome {
  std::string name;
  std::vector<std::pair<std::string, long>> params;
  bool holds = false;
  std::string left;
  std::string right;
  // right - left in the units actually compared (a log scale for the
  // bound chains, log2 for exact comparisons).
  std::optional<double> margin;
  std::string note;

  std::string params_string() const;
};

// binom(t + 1 + r, r) < t^r. Requires r >= 2, t >= 8r.
VerificationOutcome check_binom_lt_power(unsigned r, const mpz_class& t);

// t = closed_form_t(d, r) against (3/2 (rd)^(r+1-a) + rd)^(a 2^(a-1)) for
// every 1 <= a <= r-1, plus the intermediate form
// (2rd)^((r+1-a) a 2^(a-1)) <= t. Holds only if every comparison holds.
VerificationOutcome check_hoa_dominates_t(unsigned d, unsigned r,
                                          mpfr_prec_t precision = BigFloat::default_precision);
// One outcome per a, for reporting.
std::vector<VerificationOutcome> check_hoa_dominates_t_detail(
    unsigned d, unsigned r, mpfr_prec_t precision = BigFloat::default_precision);

// log2 log_d log2 (t^(r t^(2r))) <= r + 3 log2 r at t = closed_form_t(d, r).
VerificationOutcome check_hilbert_scheme_chain(unsigned d, unsigned r,
                                      mpfr_prec_t precision = BigFloat::default_precision);

// log_d log2 effdiv_bound(n_max, d, r) <= r^2 + 2 r log2 r.
VerificationOutcome check_effective_divisor_chain(unsigned d, unsigned r,
                                      mpfr_prec_t precision = BigFloat::default_precision);

// Gotzmann number of the quotient Hilbert polynomial against Hoa's bound
// with D = max(d, 2) and a = dim X + 1.
std::vector<VerificationOutcome> check_gotzmann_vs_hoa(
    const std::vector<IdealPresentation>& corpus,
    mpfr_prec_t precision = BigFloat::default_precision);

// effective_divisor_bound(d, r) <= hilbert_scheme_bound(d, r) over the grid.
std::vector<VerificationOutcome> compare_bounds_grid(const GridSpec& grid);

// The named families over a grid; r < 3 is skipped for the bound chains.
std::vector<VerificationOutcome> binom_grid(const GridSpec& grid);
std::vector<VerificationOutcome> hilbert_scheme_grid(const GridSpec& grid);
std::vector<VerificationOutcome> effective_divisor_grid(const GridSpec& grid);
std::vector<VerificationOutcome> hoa_grid(const GridSpec& grid);

} // namespace nsbound
