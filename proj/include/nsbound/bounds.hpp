#pragma once

#include "nsbound/gotzmann.hpp"
#include "nsbound/groebner.hpp"
#include "nsbound/hilbert.hpp"
#include "nsbound/tower.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace nsbound {

struct DegenerateCase {
  std::string reason; // "curve", "point" or "projective space"
  TowerNumber bound = TowerNumber::exact(1);

  friend bool operator==(const DegenerateCase&, const DegenerateCase&) = default;
};

// Torsion is trivial for curves, points and linear spaces.
std::optional<DegenerateCase> degenerate_case(const VarietyInvariants& inv);

// (d - 1) * codim
mpz_class m_divisor(unsigned d, unsigned codim);
// (d - 1) * codim * deg X
mpz_class n_degree(unsigned d, unsigned codim, const mpz_class& degree);
// (r - 2)(d - 1) d^(r - 2): the largest n a non-degenerate X can have.
mpz_class n_degree_worst_case(unsigned d, unsigned r);

struct GrassmannianStats {
  mpz_class q;             // P(t)
  mpz_class n;             // binom(t + r, r)
  mpz_class ambient_dim;   // q (N - q)
  mpz_class minor_degree;  // max{P(t+1) + 1, P(t) + 1}

  friend bool operator==(const GrassmannianStats&, const GrassmannianStats&) = default;
};

// P is an ideal Hilbert polynomial (binom(t + r, r) minus the subscheme one).
GrassmannianStats grassmannian_stats(const HilbertPolynomial& p, const mpz_class& t,
                                     unsigned r);
// minor_degree ^ ambient_dim
TowerNumber component_bound_hilb(const HilbertPolynomial& p, const mpz_class& t,
                                 unsigned r, const TowerContext& ctx = {});
// t^(r t^(2r)); requires r >= 2 and t >= 8r.
TowerNumber conn_bound_hilb(const mpz_class& t, unsigned r, const TowerContext& ctx = {});

// (2rd)^((r+1) 2^(r-2)); requires r >= 3, d >= 2.
mpz_class closed_form_t(unsigned d, unsigned r);

// 2^(d^(2^r r^3)), i.e. the exponent 2^(r + 3 log2 r) in exact form.
TowerNumber hilbert_scheme_bound(unsigned d, unsigned r);
// 2^(d^e), e = r^2 + 2r log2 r rounded up.
TowerNumber effective_divisor_bound(unsigned d, unsigned r,
                        mpfr_prec_t precision = BigFloat::default_precision);

// binom(2 max{n,d} + (r-1)d, r)
mpz_class sn_binomial(const mpz_class& n, unsigned d, unsigned r);
// 2 binom(n + r, r) - 2
mpz_class sn_exponent(const mpz_class& n, unsigned r);
TowerNumber sn_bound(const mpz_class& n, unsigned d, unsigned r,
                     const TowerContext& ctx = {});
// 2^n * sn_bound
TowerNumber effdiv_bound(const mpz_class& n, unsigned d, unsigned r,
                         const TowerContext& ctx = {});

// (e - 1)(e - 2) for a variety of degree e.
mpz_class generator_bound(const mpz_class& degree);

struct PipelineOptions {
  GroebnerOptions groebner;
  TowerContext tower;
  bool check_smooth = false;
  bool closed_form_only = false;
};

// Worst-case quantities that depend only on (d, r, codim, deg X).
struct ClosedFormBounds {
  mpz_class m;
  mpz_class n;
  mpz_class n_worst;
  mpz_class t;                 // closed_form_t
  TowerNumber hoa_rd;          // Hoa with D = r d, a = dim X
  bool t_dominates_hoa_rd = false;
  TowerNumber hilb_components; // conn_bound_hilb(t)
  TowerNumber effdiv;          // at n
  TowerNumber effdiv_worst;    // at n_worst
  TowerNumber hilbert_scheme;
  TowerNumber effective_divisor;
  mpz_class generators;

  friend bool operator==(const ClosedFormBounds&, const ClosedFormBounds&) = default;
};

// Quantities computed from the actual Hilbert polynomial.
struct SharpenedBounds {
  HilbertPolynomial q; // HP of the divisor mH
  std::optional<GotzmannDecomposition> gotzmann;
  std::string gotzmann_error;
  mpz_class hoa_degree;        // max{d, m, 2}
  TowerNumber hoa;             // Hoa with D = hoa_degree, a = dim X
  mpz_class t;                 // max{phi, d, 8r}
  std::string t_source;        // which quantity attained the max
  TowerNumber hilb_components; // conn_bound_hilb(t)
  std::optional<GrassmannianStats> grassmannian;
  std::optional<TowerNumber> grassmannian_components; // component_bound_hilb at t
  TowerNumber sn;              // at n

  friend bool operator==(const SharpenedBounds&, const SharpenedBounds&) = default;
};

// A hypothesis of the torsion bounds and how it was established.
struct Hypothesis {
  std::string name;
  std::string status; // "holds", "fails", "assumed" or "unknown"

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

struct BoundReport {
  unsigned r = 0;
  unsigned d = 0;
  std::vector<std::string> generators;
  VarietyInvariants invariants;
  std::optional<Smoothness> smoothness; // nullopt when not checked
  std::vector<Hypothesis> hypotheses;
  std::optional<DegenerateCase> degenerate;
  std::optional<ClosedFormBounds> closed_form;
  std::optional<SharpenedBounds> sharpened; // omitted when closed_form_only
  std::vector<std::string> warnings;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

BoundReport full_pipeline(const IdealPresentation& ideal, const PipelineOptions& options = {});

} // namespace nsbound
