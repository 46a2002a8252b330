#pragma once

#include "nsbound/poly.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace nsbound {

// Caps that turn a runaway computation into a ResourceLimit error.
struct GroebnerOptions {
  std::size_t max_pairs = 200000;
  unsigned max_degree = 100;
};

// Reduced Gröbner basis: monic, inter-reduced, sorted by ascending lead
// monomial under `order`.
class GroebnerBasis {
public:
  GroebnerBasis(std::size_t num_vars, MonomialOrder order,
                std::vector<Polynomial> elements);

  std::size_t num_vars() const { return num_vars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const std::vector<Monomial>& lead_monomials() const { return leads_; }

  bool is_unit_ideal() const;

private:
  std::size_t num_vars_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leads_;
};

// Minimal generators of a monomial ideal (an antichain under divisibility),
// kept sorted in storage order.
class MonomialIdeal {
public:
  MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  std::size_t num_vars_;
  std::vector<Monomial> gens_;
};

GroebnerBasis buchberger(std::span<const Polynomial> generators,
                         std::size_t num_vars, MonomialOrder order = {},
                         const GroebnerOptions& options = {});
GroebnerBasis buchberger(const IdealPresentation& ideal, MonomialOrder order = {},
                         const GroebnerOptions& options = {});

// Fully reduced remainder of p modulo gb.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order);

MonomialIdeal lead_term_ideal(const GroebnerBasis& gb);

enum class Smoothness { smooth, singular, indeterminate };

std::string to_string(Smoothness s);

// Jacobian criterion: X is smooth iff I + (c x c minors of the Jacobian),
// c = codim X, has zero Hilbert polynomial. Assumes X equidimensional.
// Exhausting the budget yields `indeterminate` rather than an error.
Smoothness smoothness_check(const IdealPresentation& ideal,
                            const GroebnerOptions& options = {});

// All c x c minors of the Jacobian of `generators`; zero minors dropped.
std::vector<Polynomial> jacobian_minors(std::span<const Polynomial> generators,
                                        std::size_t num_vars, unsigned c);

} // namespace nsbound
