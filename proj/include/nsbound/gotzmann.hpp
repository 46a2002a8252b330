#pragma once

#include "nsbound/hilbert.hpp"
#include "nsbound/tower.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace nsbound {

// Macaulay/Gotzmann expansion
//   Q(t) = sum_{i=1}^{s} binom(t + a_i - i + 1, a_i),  a_1 >= ... >= a_s >= 0,
// run-length encoded because s (the Gotzmann number) can be astronomically
// large even for small Q.
class GotzmannDecomposition {
public:
  struct Run {
    unsigned exponent; // a_i
    mpz_class count;   // number of consecutive i with this a_i
    friend bool operator==(const Run&, const Run&) = default;
  };

  explicit GotzmannDecomposition(std::vector<Run> runs);

  const std::vector<Run>& runs() const { return runs_; }
  // s
  const mpz_class& length() const { return length_; }
  // The sequence a_1..a_s; nullopt when s exceeds `limit`.
  std::optional<std::vector<unsigned>> expanded(std::size_t limit = 100000) const;
  // Sum of the binomials, recomputed from the runs.
  HilbertPolynomial reconstruct() const;

  friend bool operator==(const GotzmannDecomposition&, const GotzmannDecomposition&) = default;

private:
  std::vector<Run> runs_;
  mpz_class length_;
};

// Sum_{i=first}^{first+count-1} binom(t + a - i + 1, a), in closed form.
HilbertPolynomial gotzmann_run(unsigned a, const mpz_class& first, const mpz_class& count);

// Builds Q from an explicit sequence (need not be non-increasing).
HilbertPolynomial gotzmann_sum(const std::vector<unsigned>& sequence);

// Greedy expansion of a subscheme Hilbert polynomial. Throws NotAdmissible
// (with the accepted prefix) when a leading coefficient turns negative, and
// std::invalid_argument for Q = 0.
GotzmannDecomposition gotzmann_decomposition(const HilbertPolynomial& q);

// s from the decomposition.
mpz_class gotzmann_number(const HilbertPolynomial& q);

struct HoaBoundInput {
  mpz_class degree_bound; // D >= 2
  unsigned r = 0;
  unsigned krull_dim = 0; // a, 0 <= a <= r + 1
};

// (3/2 * D^(r+1-a) + D)
mpq_class hoa_base(const HoaBoundInput& in);
// a * 2^(a-1), and 0 for a = 0.
mpz_class hoa_exponent(const HoaBoundInput& in);
// floor((3/2 * D^(r+1-a) + D)^(a * 2^(a-1))), or its log2 upper bound when
// too large. Throws std::invalid_argument for D < 2 or a > r + 1.
TowerNumber hoa_bound(const HoaBoundInput& in, const TowerContext& ctx = {});

} // namespace nsbound
