#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace nsbound {

// Dense exponent vector over x0..xr.
class Monomial {
public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t num_vars, std::size_t index,
                           Exponent power = 1);

  std::size_t num_vars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  unsigned long degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  // Storage order only (lexicographic on the exponent vector); use
  // MonomialOrder for anything algebraic.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<Exponent> exps_;
};

enum class OrderKind { grevlex, lex };

// Term order with precedence x0 > x1 > ... > xr.
class MonomialOrder {
public:
  constexpr MonomialOrder(OrderKind kind = OrderKind::grevlex) : kind_(kind) {}

  OrderKind kind() const { return kind_; }
  std::string name() const;

  // Throws std::invalid_argument on length mismatch.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
  OrderKind kind_;
};

// Exact polynomial over Q in a fixed number of variables. Canonical: no
// zero coefficients are stored, so equality is structural.
class Polynomial {
public:
  using TermMap = std::map<Monomial, mpq_class>;

  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}
  Polynomial(std::size_t num_vars, TermMap terms);

  static Polynomial constant(std::size_t num_vars, const mpq_class& c);
  static Polynomial monomial(const Monomial& m, const mpq_class& c = 1);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Coefficient of m, zero if absent.
  mpq_class coefficient(const Monomial& m) const;

  // Maximum total degree; -1 for the zero polynomial.
  long degree() const;
  bool is_homogeneous() const;

  // Leading monomial/coefficient under `order`. Polynomial must be nonzero.
  const Monomial& lead_monomial(const MonomialOrder& order) const;
  const mpq_class& lead_coefficient(const MonomialOrder& order) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const mpq_class& scalar);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const mpq_class& s) { return a *= s; }
  Polynomial operator-() const;

  Polynomial times_monomial(const Monomial& m, const mpq_class& c) const;
  // d/dx_i.
  Polynomial derivative(std::size_t var) const;

  // Terms in descending grevlex order, e.g. "1/2*x0^3 - x1^3".
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  void add_term(const Monomial& m, const mpq_class& c);

  std::size_t num_vars_;
  TermMap terms_;
};

// Homogeneous generators of an ideal in k[x0..xr].
class IdealPresentation {
public:
  // Throws std::invalid_argument if a generator is zero, inhomogeneous, or
  // in the wrong number of variables, or if the list is empty.
  IdealPresentation(unsigned r, std::vector<Polynomial> generators);

  unsigned r() const { return r_; }
  std::size_t num_vars() const { return r_ + 1; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  // Maximum generator degree.
  unsigned d() const { return d_; }

private:
  unsigned r_;
  std::vector<Polynomial> generators_;
  unsigned d_;
};

} // namespace nsbound
