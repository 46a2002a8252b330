#include "nsbound/hilbert.hpp"

#include "nsbound/errors.hpp"
#include "nsbound/parser.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsbound {

namespace {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

ZPoly add(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size())
    a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] += b[i];
  trim(a);
  return a;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty())
    return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

ZPoly one_minus_z_to(unsigned long e) {
  ZPoly p(e + 1);
  p[0] += 1;
  p[e] -= 1;
  trim(p);
  return p;
}

} // namespace

mpz_class binomial(const mpz_class& x, unsigned long k) {
  mpz_class out;
  mpz_bin_ui(out.get_mpz_t(), x.get_mpz_t(), k);
  return out;
}

mpz_class HilbertSeriesNumerator::at_one() const {
  mpz_class s = 0;
  for (const auto& c : coefficients)
    s += c;
  return s;
}

std::string HilbertSeriesNumerator::to_string() const {
  // Ascending powers read more naturally for series numerators.
  if (coefficients.empty())
    return "0";
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const auto& c = coefficients[i];
    if (c == 0)
      continue;
    const bool negative = sgn(c) < 0;
    const mpz_class mag = abs(c);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (i == 0 || mag != 1)
      out += mag.get_str();
    if (i >= 1)
      out += "z";
    if (i > 1)
      out += "^" + std::to_string(i);
  }
  return out;
}

HilbertPolynomial::HilbertPolynomial(std::vector<mpz_class> binomial_coefficients)
    : coeffs_(std::move(binomial_coefficients)) {
  trim();
}

void HilbertPolynomial::trim() { nsbound::trim(coeffs_); }

HilbertPolynomial HilbertPolynomial::interpolate(
    long degree_bound, const std::function<mpz_class(const mpz_class&)>& f) {
  if (degree_bound < 0)
    return HilbertPolynomial();
  // The k-th backward difference of binom(t + j, j) at t = -1 is [j == k].
  const auto n = static_cast<std::size_t>(degree_bound) + 1;
  std::vector<mpz_class> values(n);
  for (std::size_t i = 0; i < n; ++i)
    values[i] = f(mpz_class(-1) - static_cast<long>(i));
  std::vector<mpz_class> coeffs(n);
  for (std::size_t k = 0; k < n; ++k) {
    mpz_class ck = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      const mpz_class term = binomial(mpz_class(static_cast<unsigned long>(k)), i) * values[i];
      if (i % 2 == 0)
        ck += term;
      else
        ck -= term;
    }
    coeffs[k] = ck;
  }
  return HilbertPolynomial(std::move(coeffs));
}

HilbertPolynomial HilbertPolynomial::from_dense(const std::vector<mpq_class>& coefficients) {
  const long deg = static_cast<long>(coefficients.size()) - 1;
  auto eval = [&](const mpz_class& t) -> mpz_class {
    mpq_class acc = 0;
    for (std::size_t i = coefficients.size(); i-- > 0;)
      acc = acc * t + coefficients[i];
    if (acc.get_den() != 1)
      throw std::invalid_argument("polynomial is not integer-valued");
    return mpz_class(acc.get_num());
  };
  return interpolate(deg, eval);
}

HilbertPolynomial HilbertPolynomial::projective_space(unsigned r) {
  std::vector<mpz_class> c(r + 1, 0);
  c[r] = 1;
  return HilbertPolynomial(std::move(c));
}

mpz_class HilbertPolynomial::operator()(const mpz_class& t) const {
  mpz_class acc = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0)
      acc += coeffs_[j] * binomial(t + static_cast<unsigned long>(j), j);
  return acc;
}

HilbertPolynomial HilbertPolynomial::shifted(const mpz_class& shift) const {
  return interpolate(degree(), [&](const mpz_class& t) -> mpz_class { return (*this)(t - shift); });
}

mpq_class HilbertPolynomial::leading_coefficient() const {
  if (coeffs_.empty())
    return 0;
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), coeffs_.size() - 1);
  mpq_class out(coeffs_.back(), fact);
  out.canonicalize();
  return out;
}

std::vector<mpq_class> HilbertPolynomial::dense() const {
  std::vector<mpq_class> out(coeffs_.size(), 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0)
      continue;
    // binom(t + j, j) = (t + 1)(t + 2)...(t + j) / j!
    std::vector<mpq_class> basis{1};
    for (std::size_t i = 1; i <= j; ++i) {
      std::vector<mpq_class> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] += basis[k] * static_cast<unsigned long>(i);
      }
      basis = std::move(next);
    }
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), j);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      mpq_class term = basis[k] * coeffs_[j] / mpq_class(fact);
      term.canonicalize();
      out[k] += term;
    }
  }
  for (auto& c : out)
    c.canonicalize();
  return out;
}

std::string HilbertPolynomial::to_string() const {
  const auto d = dense();
  if (d.empty())
    return "0";
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0)
      continue;
    const bool negative = sgn(d[i]) < 0;
    const mpq_class mag = abs(d[i]);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? "-" : "+";
    if (i == 0 || mag != 1)
      out += mag.get_str();
    if (i >= 1)
      out += "t";
    if (i > 1)
      out += "^" + std::to_string(i);
  }
  return out;
}

HilbertPolynomial operator+(const HilbertPolynomial& a, const HilbertPolynomial& b) {
  return HilbertPolynomial(add(a.coeffs_, b.coeffs_));
}

HilbertPolynomial operator-(const HilbertPolynomial& a, const HilbertPolynomial& b) {
  ZPoly neg = b.coeffs_;
  for (auto& c : neg)
    c = -c;
  return HilbertPolynomial(add(a.coeffs_, neg));
}

HilbertPolynomial parse_hilbert_polynomial(std::string_view text) {
  static const std::vector<std::string> names{"t"};
  const Polynomial p = parse_polynomial(text, names);
  std::vector<mpq_class> dense(static_cast<std::size_t>(std::max(p.degree(), 0l)) + 1, 0);
  for (const auto& [m, c] : p.terms())
    dense[m[0]] = c;
  return HilbertPolynomial::from_dense(dense);
}

namespace {

using Gens = std::vector<Monomial>;

Gens minimalize(Gens gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree())
      return a.degree() < b.degree();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  Gens out;
  for (auto& m : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& g) { return g.divides(m); }))
      out.push_back(std::move(m));
  return out;
}

std::size_t support_size(const Monomial& m) {
  return static_cast<std::size_t>(std::count_if(m.exponents().begin(), m.exponents().end(),
                                                [](auto e) { return e != 0; }));
}

class SeriesRecursion {
public:
  explicit SeriesRecursion(const HilbertOptions& options) : options_(options) {}

  ZPoly numerator(const Gens& gens) {
    if (++nodes_ > options_.max_nodes)
      throw ResourceLimit("Hilbert series recursion exceeded " +
                          std::to_string(options_.max_nodes) + " nodes");
    if (gens.empty())
      return {1};
    for (const auto& g : gens)
      if (g.is_one())
        return {};
    if (pairwise_coprime(gens)) {
      ZPoly out{1};
      for (const auto& g : gens)
        out = mul(out, one_minus_z_to(g.degree()));
      return out;
    }

    // Pivot x_i^e: i is the variable occurring in the most generators
    // (ties to the lowest index) among variables of mixed generators; e is
    // the smallest positive exponent of x_i in a mixed generator. Then
    // x_i^e is outside the ideal and both branches strictly enlarge it.
    const std::size_t n = gens.front().num_vars();
    std::vector<std::size_t> count(n, 0);
    std::vector<bool> in_mixed(n, false);
    std::vector<Monomial::Exponent> min_exp(n, 0);
    for (const auto& g : gens) {
      const bool mixed = support_size(g) > 1;
      for (std::size_t v = 0; v < n; ++v) {
        if (g[v] == 0)
          continue;
        ++count[v];
        if (mixed) {
          in_mixed[v] = true;
          min_exp[v] = min_exp[v] == 0 ? g[v] : std::min(min_exp[v], g[v]);
        }
      }
    }
    std::size_t pivot_var = n;
    for (std::size_t v = 0; v < n; ++v)
      if (in_mixed[v] && (pivot_var == n || count[v] > count[pivot_var]))
        pivot_var = v;
    const Monomial pivot = Monomial::variable(n, pivot_var, min_exp[pivot_var]);

    Gens with_pivot = gens;
    with_pivot.push_back(pivot);
    Gens quotient;
    for (const auto& g : gens)
      quotient.push_back(g / gcd(g, pivot));

    ZPoly out = numerator(minimalize(std::move(with_pivot)));
    ZPoly shifted = numerator(minimalize(std::move(quotient)));
    shifted.insert(shifted.begin(), pivot.degree(), mpz_class(0));
    return add(std::move(out), shifted);
  }

private:
  static bool pairwise_coprime(const Gens& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        if (!gens[i].coprime(gens[j]))
          return false;
    return true;
  }

  HilbertOptions options_;
  std::size_t nodes_ = 0;
};

} // namespace

HilbertSeriesNumerator hilbert_series(const MonomialIdeal& ideal, unsigned r,
                                      const HilbertOptions& options) {
  if (ideal.num_vars() != r + 1)
    throw std::invalid_argument("hilbert_series: ideal has the wrong number of variables");
  SeriesRecursion rec(options);
  return HilbertSeriesNumerator{rec.numerator(minimalize(ideal.generators()))};
}

HilbertPolynomial hilbert_polynomial(const HilbertSeriesNumerator& numerator,
                                     unsigned r) {
  ZPoly reduced = numerator.coefficients;
  if (reduced.empty())
    return HilbertPolynomial();
  long dim = static_cast<long>(r) + 1;
  // Cancel (1 - z) while N(1) = 0; the quotient is the prefix-sum sequence.
  while (dim > 0) {
    mpz_class total = 0;
    for (const auto& c : reduced)
      total += c;
    if (total != 0)
      break;
    ZPoly quotient(reduced.size() - 1);
    mpz_class running = 0;
    for (std::size_t i = 0; i + 1 < reduced.size(); ++i) {
      running += reduced[i];
      quotient[i] = running;
    }
    trim(quotient);
    reduced = std::move(quotient);
    --dim;
  }
  if (dim == 0)
    return HilbertPolynomial();
  const auto k = static_cast<unsigned long>(dim - 1);
  return HilbertPolynomial::interpolate(dim - 1, [&](const mpz_class& t) -> mpz_class {
    mpz_class acc = 0;
    for (std::size_t j = 0; j < reduced.size(); ++j)
      acc += reduced[j] * binomial(t - static_cast<unsigned long>(j) + k, k);
    return acc;
  });
}

VarietyInvariants invariants(const IdealPresentation& ideal, MonomialOrder order,
                             const GroebnerOptions& options) {
  const GroebnerBasis gb = buchberger(ideal, order, options);
  VarietyInvariants inv;
  inv.r = ideal.r();
  inv.d = ideal.d();
  inv.numerator = hilbert_series(lead_term_ideal(gb), ideal.r());
  inv.hp = hilbert_polynomial(inv.numerator, ideal.r());
  if (inv.hp.is_zero())
    throw ImproperIdeal("ideal defines the empty projective scheme "
                        "(Hilbert polynomial is zero)");
  inv.dim = static_cast<unsigned>(inv.hp.degree());
  inv.codim = inv.r - inv.dim;
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), inv.dim);
  const mpq_class deg = inv.hp.leading_coefficient() * fact;
  inv.degree = deg.get_num();
  // Graded order: degree-1 part of the ideal is spanned by linear GB elements.
  for (const auto& g : gb.elements())
    if (g.degree() == 1)
      inv.contained_in_hyperplane = true;
  return inv;
}

HilbertPolynomial divisor_hp(const HilbertPolynomial& p, const mpz_class& m) {
  if (m < 1)
    throw std::invalid_argument("divisor_hp requires m >= 1");
  return p - p.shifted(m);
}

} // namespace nsbound
