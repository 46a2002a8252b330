#include "nsbound/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nsbound {

Monomial Monomial::variable(std::size_t num_vars, std::size_t index,
                            Exponent power) {
  Monomial m(num_vars);
  m.exps_.at(index) = power;
  return m;
}

unsigned long Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0ul);
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i])
      return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0)
      return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out(a.num_vars());
  for (std::size_t i = 0; i < a.num_vars(); ++i)
    out.exps_[i] = a.exps_[i] + b.exps_[i];
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out(num_vars());
  for (std::size_t i = 0; i < num_vars(); ++i)
    out.exps_[i] = exps_[i] - divisor.exps_[i];
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.num_vars());
  for (std::size_t i = 0; i < a.num_vars(); ++i)
    out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial out(a.num_vars());
  for (std::size_t i = 0; i < a.num_vars(); ++i)
    out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return out;
}

std::string MonomialOrder::name() const {
  return kind_ == OrderKind::grevlex ? "grevlex" : "lex";
}

std::strong_ordering MonomialOrder::compare(const Monomial& a,
                                            const Monomial& b) const {
  if (a.num_vars() != b.num_vars())
    throw std::invalid_argument("monomial length mismatch");
  const std::size_t n = a.num_vars();
  if (kind_ == OrderKind::lex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i])
        return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }
  if (auto c = a.degree() <=> b.degree(); c != 0)
    return c;
  // Tie on degree: the smaller exponent in the last differing variable wins.
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i])
      return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

Polynomial::Polynomial(std::size_t num_vars, TermMap terms)
    : num_vars_(num_vars) {
  for (auto& [m, c] : terms) {
    if (m.num_vars() != num_vars)
      throw std::invalid_argument("monomial length does not match polynomial");
    add_term(m, c);
  }
}

Polynomial Polynomial::constant(std::size_t num_vars, const mpq_class& c) {
  Polynomial p(num_vars);
  p.add_term(Monomial(num_vars), c);
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const mpq_class& c) {
  Polynomial p(m.num_vars());
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
  if (sgn(c) == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    // Callers may pass mpq_class(n, d) without canonicalizing.
    it->second.canonicalize();
  } else {
    it->second += c;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

mpq_class Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

long Polynomial::degree() const {
  long best = -1;
  for (const auto& [m, c] : terms_)
    best = std::max(best, static_cast<long>(m.degree()));
  return best;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty())
    return true;
  const auto deg = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [deg](const auto& t) { return t.first.degree() == deg; });
}

namespace {

Polynomial::TermMap::const_iterator lead_term(const Polynomial::TermMap& terms,
                                              const MonomialOrder& order) {
  if (terms.empty())
    throw std::logic_error("lead term of the zero polynomial");
  auto best = terms.begin();
  for (auto it = std::next(terms.begin()); it != terms.end(); ++it)
    if (order.less(best->first, it->first))
      best = it;
  return best;
}

} // namespace

const Monomial& Polynomial::lead_monomial(const MonomialOrder& order) const {
  return lead_term(terms_, order)->first;
}

const mpq_class& Polynomial::lead_coefficient(const MonomialOrder& order) const {
  return lead_term(terms_, order)->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_)
    add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_)
    add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const mpq_class& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  mpq_class s = scalar;
  s.canonicalize();
  for (auto& [m, c] : terms_)
    c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_)
    c = -c;
  return out;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const mpq_class& c) const {
  Polynomial out(num_vars_);
  if (sgn(c) == 0)
    return out;
  mpq_class s = c;
  s.canonicalize();
  for (const auto& [mt, ct] : terms_)
    out.terms_.emplace_hint(out.terms_.end(), mt * m, ct * s);
  return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial out(num_vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0)
      continue;
    Monomial lowered = m;
    lowered[var] -= 1;
    out.add_term(lowered, c * m[var]);
  }
  return out;
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += 'x' + std::to_string(i);
    if (m[i] > 1)
      out += '^' + std::to_string(m[i]);
  }
  return out;
}

} // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::vector<const TermMap::value_type*> sorted;
  for (const auto& t : terms_)
    sorted.push_back(&t);
  const MonomialOrder order(OrderKind::grevlex);
  std::sort(sorted.begin(), sorted.end(), [&](auto* a, auto* b) {
    return order.less(b->first, a->first);
  });
  std::string out;
  for (const auto* term : sorted) {
    const auto& [m, c] = *term;
    const bool negative = sgn(c) < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const mpq_class mag = abs(c);
    const std::string mono = monomial_text(m);
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

IdealPresentation::IdealPresentation(unsigned r, std::vector<Polynomial> generators)
    : r_(r), generators_(std::move(generators)), d_(0) {
  if (r_ < 1)
    throw std::invalid_argument("ambient dimension r must be at least 1");
  if (generators_.empty())
    throw std::invalid_argument("ideal needs at least one generator");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    const std::string where = "generator " + std::to_string(i + 1);
    if (g.num_vars() != r_ + 1)
      throw std::invalid_argument(where + " has the wrong number of variables");
    if (g.is_zero())
      throw std::invalid_argument(where + " is zero");
    if (!g.is_homogeneous())
      throw std::invalid_argument(where + " is not homogeneous");
    if (g.degree() == 0)
      throw std::invalid_argument(where + " is a nonzero constant (unit ideal)");
    d_ = std::max(d_, static_cast<unsigned>(g.degree()));
  }
}

} // namespace nsbound
