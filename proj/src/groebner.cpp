#include "nsbound/groebner.hpp"

#include "nsbound/errors.hpp"
#include "nsbound/hilbert.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace nsbound {

namespace {

// Descending under the term order, so begin() is the lead term.
struct Descending {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return order.less(b, a);
  }
};

using WorkPoly = std::map<Monomial, mpq_class, Descending>;

struct Term {
  Monomial mono;
  mpq_class coeff;
};

// Monic element with terms in descending order.
struct Element {
  std::vector<Term> terms;
  const Monomial& lead() const { return terms.front().mono; }
  unsigned long degree() const { return terms.front().mono.degree(); }
};

Element to_element(const Polynomial& p, const MonomialOrder& order) {
  Element e;
  for (const auto& [m, c] : p.terms())
    e.terms.push_back({m, c});
  std::sort(e.terms.begin(), e.terms.end(), [&](const Term& a, const Term& b) {
    return order.less(b.mono, a.mono);
  });
  const mpq_class lc = e.terms.front().coeff;
  for (auto& t : e.terms)
    t.coeff /= lc;
  return e;
}

Polynomial to_polynomial(const Element& e, std::size_t num_vars) {
  Polynomial::TermMap map;
  for (const auto& t : e.terms)
    map.emplace(t.mono, t.coeff);
  return Polynomial(num_vars, std::move(map));
}

void subtract_multiple(WorkPoly& work, const Element& g, const Monomial& shift,
                       const mpq_class& factor) {
  for (const auto& t : g.terms) {
    auto [it, inserted] = work.try_emplace(t.mono * shift, -factor * t.coeff);
    if (!inserted) {
      it->second -= factor * t.coeff;
      if (sgn(it->second) == 0)
        work.erase(it);
    }
  }
}

const Element* find_reducer(const std::vector<Element>& basis,
                            const Monomial& m) {
  for (const auto& g : basis)
    if (g.lead().divides(m))
      return &g;
  return nullptr;
}

// Full reduction; result terms come out in descending order.
std::vector<Term> reduce(WorkPoly work, const std::vector<Element>& basis) {
  std::vector<Term> remainder;
  while (!work.empty()) {
    auto lead = work.begin();
    if (const Element* g = find_reducer(basis, lead->first)) {
      const Monomial shift = lead->first / g->lead();
      const mpq_class factor = lead->second;
      subtract_multiple(work, *g, shift, factor);
    } else {
      remainder.push_back({lead->first, lead->second});
      work.erase(lead);
    }
  }
  return remainder;
}

WorkPoly to_work(const Polynomial& p, const MonomialOrder& order) {
  WorkPoly work(Descending{order});
  for (const auto& [m, c] : p.terms())
    work.emplace(m, c);
  return work;
}

WorkPoly s_poly_work(const Element& f, const Element& g, const MonomialOrder& order) {
  const Monomial l = lcm(f.lead(), g.lead());
  WorkPoly work(Descending{order});
  const Monomial fs = l / f.lead();
  const Monomial gs = l / g.lead();
  for (const auto& t : f.terms)
    work.emplace(t.mono * fs, t.coeff);
  subtract_multiple(work, g, gs, 1);
  return work;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned long degree;
};

} // namespace

GroebnerBasis::GroebnerBasis(std::size_t num_vars, MonomialOrder order,
                             std::vector<Polynomial> elements)
    : num_vars_(num_vars), order_(order), elements_(std::move(elements)) {
  for (const auto& e : elements_)
    leads_.push_back(e.lead_monomial(order_));
}

bool GroebnerBasis::is_unit_ideal() const {
  return std::any_of(leads_.begin(), leads_.end(),
                     [](const Monomial& m) { return m.is_one(); });
}

GroebnerBasis buchberger(std::span<const Polynomial> generators,
                         std::size_t num_vars, MonomialOrder order,
                         const GroebnerOptions& options) {
  std::vector<Element> basis;
  for (const auto& g : generators) {
    if (g.num_vars() != num_vars)
      throw std::invalid_argument("generator has the wrong number of variables");
    if (!g.is_zero())
      basis.push_back(to_element(g, order));
  }

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = lcm(basis[i].lead(), basis[j].lead());
      const unsigned long deg = l.degree();
      pending.push_back({i, j, std::move(l), deg});
      pending_keys.emplace(i, j);
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j)
    add_pairs_for(j);

  std::size_t processed = 0;
  while (!pending.empty()) {
    // Normal strategy: smallest lcm degree, then smallest lcm, then indices.
    auto best = std::min_element(pending.begin(), pending.end(),
                                 [&](const Pair& a, const Pair& b) {
      if (a.degree != b.degree)
        return a.degree < b.degree;
      if (auto c = order.compare(a.lcm, b.lcm); c != 0)
        return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    const Pair pair = *best;
    pending.erase(best);
    pending_keys.erase({pair.i, pair.j});

    const Element& f = basis[pair.i];
    const Element& g = basis[pair.j];
    if (f.lead().coprime(g.lead()))
      continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j || !basis[k].lead().divides(pair.lcm))
        continue;
      auto key = [](std::size_t a, std::size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      chain = !pending_keys.contains(key(pair.i, k)) &&
              !pending_keys.contains(key(pair.j, k));
    }
    if (chain)
      continue;

    if (++processed > options.max_pairs)
      throw ResourceLimit("Buchberger exceeded the S-pair budget (" +
                          std::to_string(options.max_pairs) + ")");
    if (pair.degree > options.max_degree)
      throw ResourceLimit("Buchberger exceeded the degree budget (" +
                          std::to_string(options.max_degree) + ")");

    std::vector<Term> rem = reduce(s_poly_work(f, g, order), basis);
    if (rem.empty())
      continue;
    Element e{std::move(rem)};
    const mpq_class lc = e.terms.front().coeff;
    for (auto& t : e.terms)
      t.coeff /= lc;
    basis.push_back(std::move(e));
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::sort(basis.begin(), basis.end(), [&](const Element& a, const Element& b) {
    return order.less(a.lead(), b.lead());
  });
  std::vector<Element> minimal;
  for (auto& e : basis) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(),
        [&](const Element& m) { return m.lead().divides(e.lead()); });
    if (!redundant)
      minimal.push_back(std::move(e));
  }

  // Inter-reduce tails.
  std::vector<Polynomial> reduced;
  for (const auto& e : minimal) {
    WorkPoly tail(Descending{order});
    for (std::size_t t = 1; t < e.terms.size(); ++t)
      tail.emplace(e.terms[t].mono, e.terms[t].coeff);
    Element out;
    out.terms.push_back(e.terms.front());
    for (auto& t : reduce(std::move(tail), minimal))
      out.terms.push_back(std::move(t));
    reduced.push_back(to_polynomial(out, num_vars));
  }
  return GroebnerBasis(num_vars, order, std::move(reduced));
}

GroebnerBasis buchberger(const IdealPresentation& ideal, MonomialOrder order,
                         const GroebnerOptions& options) {
  return buchberger(ideal.generators(), ideal.num_vars(), order, options);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (p.num_vars() != gb.num_vars())
    throw std::invalid_argument("normal_form: variable count mismatch");
  std::vector<Element> basis;
  for (const auto& g : gb.elements())
    basis.push_back(to_element(g, gb.order()));
  Element out{reduce(to_work(p, gb.order()), basis)};
  Polynomial::TermMap map;
  for (const auto& t : out.terms)
    map.emplace(t.mono, t.coeff);
  return Polynomial(p.num_vars(), std::move(map));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order) {
  const Element ef = to_element(f, order);
  const Element eg = to_element(g, order);
  Polynomial::TermMap map;
  for (const auto& [m, c] : s_poly_work(ef, eg, order))
    map.emplace(m, c);
  return Polynomial(f.num_vars(), std::move(map));
}

MonomialIdeal::MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators)
    : num_vars_(num_vars) {
  std::sort(generators.begin(), generators.end(),
            [](const Monomial& a, const Monomial& b) {
              if (a.degree() != b.degree())
                return a.degree() < b.degree();
              return a < b;
            });
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  for (auto& m : generators) {
    if (m.num_vars() != num_vars)
      throw std::invalid_argument("monomial ideal: variable count mismatch");
    const bool redundant = std::any_of(gens_.begin(), gens_.end(),
        [&](const Monomial& g) { return g.divides(m); });
    if (!redundant)
      gens_.push_back(std::move(m));
  }
  std::sort(gens_.begin(), gens_.end());
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal lead_term_ideal(const GroebnerBasis& gb) {
  return MonomialIdeal(gb.num_vars(), gb.lead_monomials());
}

std::string to_string(Smoothness s) {
  switch (s) {
  case Smoothness::smooth:
    return "smooth";
  case Smoothness::singular:
    return "singular";
  case Smoothness::indeterminate:
    return "indeterminate";
  }
  return "indeterminate";
}

namespace {

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m,
                       std::size_t num_vars) {
  const std::size_t n = m.size();
  if (n == 1)
    return m[0][0];
  Polynomial det(num_vars);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero())
      continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t row = 1; row < n; ++row) {
      std::vector<Polynomial> line;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col)
          line.push_back(m[row][c]);
      minor.push_back(std::move(line));
    }
    Polynomial term = m[0][col] * determinant(minor, num_vars);
    if (col % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

// Lexicographic k-subsets of {0..n-1}.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n)
    return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i)
    idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
  return out;
}

} // namespace

std::vector<Polynomial> jacobian_minors(std::span<const Polynomial> generators,
                                        std::size_t num_vars, unsigned c) {
  std::vector<Polynomial> minors;
  if (c == 0)
    return minors;
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& g : generators) {
    std::vector<Polynomial> row;
    for (std::size_t v = 0; v < num_vars; ++v)
      row.push_back(g.derivative(v));
    jac.push_back(std::move(row));
  }
  const auto row_sets = subsets(generators.size(), c);
  const auto col_sets = subsets(num_vars, c);
  for (const auto& rows : row_sets)
    for (const auto& cols : col_sets) {
      std::vector<std::vector<Polynomial>> sub;
      for (auto r : rows) {
        std::vector<Polynomial> line;
        for (auto col : cols)
          line.push_back(jac[r][col]);
        sub.push_back(std::move(line));
      }
      Polynomial det = determinant(sub, num_vars);
      if (!det.is_zero())
        minors.push_back(std::move(det));
    }
  return minors;
}

Smoothness smoothness_check(const IdealPresentation& ideal,
                            const GroebnerOptions& options) {
  try {
    const VarietyInvariants inv = invariants(ideal, MonomialOrder{}, options);
    std::vector<Polynomial> gens = ideal.generators();
    for (auto& minor : jacobian_minors(ideal.generators(), ideal.num_vars(),
                                       inv.codim))
      gens.push_back(std::move(minor));
    const GroebnerBasis gb = buchberger(gens, ideal.num_vars(), MonomialOrder{}, options);
    const HilbertPolynomial hp = hilbert_polynomial(
        hilbert_series(lead_term_ideal(gb), ideal.r()), ideal.r());
    return hp.is_zero() ? Smoothness::smooth : Smoothness::singular;
  } catch (const ResourceLimit&) {
    return Smoothness::indeterminate;
  }
}

} // namespace nsbound
