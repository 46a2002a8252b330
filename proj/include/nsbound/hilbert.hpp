#pragma once

#include "nsbound/groebner.hpp"
#include "nsbound/poly.hpp"

#include <gmpxx.h>

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace nsbound {

// N(z) with HS_{S/I}(z) = N(z) / (1 - z)^(r+1).
struct HilbertSeriesNumerator {
  std::vector<mpz_class> coefficients; // index = power of z, no trailing zeros

  bool is_zero() const { return coefficients.empty(); }
  mpz_class at_one() const;
  std::string to_string() const;

  friend bool operator==(const HilbertSeriesNumerator&,
                         const HilbertSeriesNumerator&) = default;
};

// Integer-valued polynomial in t, stored in the basis binom(t + j, j).
// Integer coefficients in this basis are exactly the integer-valued
// polynomials.
class HilbertPolynomial {
public:
  HilbertPolynomial() = default;
  explicit HilbertPolynomial(std::vector<mpz_class> binomial_coefficients);

  // Recovers the unique polynomial of degree <= degree_bound through the
  // values of `f` at t = -1, -2, ..., -(degree_bound + 1).
  static HilbertPolynomial interpolate(long degree_bound,
                                       const std::function<mpz_class(const mpz_class&)>& f);
  // Throws std::invalid_argument if the polynomial is not integer-valued.
  static HilbertPolynomial from_dense(const std::vector<mpq_class>& coefficients);
  // binom(t + r, r): the Hilbert polynomial of P^r itself.
  static HilbertPolynomial projective_space(unsigned r);

  const std::vector<mpz_class>& binomial_coefficients() const { return coeffs_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  mpz_class operator()(const mpz_class& t) const;
  mpz_class operator()(long t) const { return (*this)(mpz_class(t)); }

  // P(t - shift).
  HilbertPolynomial shifted(const mpz_class& shift) const;
  mpq_class leading_coefficient() const;
  // Coefficients of t^0, t^1, ... .
  std::vector<mpq_class> dense() const;
  // Dense form such as "3t+1" or "t^2+2t+1".
  std::string to_string() const;

  friend HilbertPolynomial operator+(const HilbertPolynomial& a, const HilbertPolynomial& b);
  friend HilbertPolynomial operator-(const HilbertPolynomial& a, const HilbertPolynomial& b);
  friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;

private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

// Generalized binomial x(x-1)...(x-k+1)/k! for any integer x.
mpz_class binomial(const mpz_class& x, unsigned long k);

// Parses a dense univariate polynomial in `t`, e.g. "2t+1" or "1/2*t^2+1/2*t".
HilbertPolynomial parse_hilbert_polynomial(std::string_view text);

struct HilbertOptions {
  std::size_t max_nodes = 10'000'000;
};

HilbertSeriesNumerator hilbert_series(const MonomialIdeal& ideal, unsigned r,
                                      const HilbertOptions& options = {});

HilbertPolynomial hilbert_polynomial(const HilbertSeriesNumerator& numerator,
                                     unsigned r);

struct VarietyInvariants {
  unsigned r = 0;
  unsigned d = 0;
  unsigned dim = 0;   // projective dimension of X
  unsigned codim = 0; // r - dim
  mpz_class degree;
  HilbertPolynomial hp; // of O_X
  HilbertSeriesNumerator numerator;
  bool contained_in_hyperplane = false; // the ideal has a nonzero linear form

  friend bool operator==(const VarietyInvariants&, const VarietyInvariants&) = default;
};

// buchberger -> lead_term_ideal -> hilbert_series -> hilbert_polynomial.
// Throws ImproperIdeal when the Hilbert polynomial vanishes identically.
VarietyInvariants invariants(const IdealPresentation& ideal,
                             MonomialOrder order = {},
                             const GroebnerOptions& options = {});

// Q(t) = P(t) - P(t - m): Hilbert polynomial of the divisor mH as a
// subscheme. Requires m >= 1.
HilbertPolynomial divisor_hp(const HilbertPolynomial& p, const mpz_class& m);

} // namespace nsbound
