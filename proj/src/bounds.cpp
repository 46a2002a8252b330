#include "nsbound/bounds.hpp"

#include "nsbound/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsbound {

namespace {

mpz_class pow_ui(const mpz_class& base, unsigned long exponent) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

void require_chain_range(unsigned d, unsigned r, const char* what) {
  if (r < 3 || d < 2)
    throw std::invalid_argument(std::string(what) + ": requires r >= 3 and d >= 2");
}

} // namespace

std::optional<DegenerateCase> degenerate_case(const VarietyInvariants& inv) {
  if (inv.codim == 0)
    return DegenerateCase{"projective space"};
  if (inv.dim == 0)
    return DegenerateCase{"point"};
  if (inv.dim == 1)
    return DegenerateCase{"curve"};
  // Degree one, or cut out by linear forms only: a linear subspace.
  if (inv.degree == 1 || inv.d == 1)
    return DegenerateCase{"projective space"};
  return std::nullopt;
}

mpz_class m_divisor(unsigned d, unsigned codim) {
  if (d < 1 || codim < 1)
    throw std::invalid_argument("m_divisor: requires d >= 1 and codim >= 1");
  return mpz_class(d - 1) * codim;
}

mpz_class n_degree(unsigned d, unsigned codim, const mpz_class& degree) {
  if (d < 1 || codim < 1 || degree < 1)
    throw std::invalid_argument("n_degree: arguments must be positive");
  return m_divisor(d, codim) * degree;
}

mpz_class n_degree_worst_case(unsigned d, unsigned r) {
  if (r < 2 || d < 1)
    throw std::invalid_argument("n_degree_worst_case: requires r >= 2 and d >= 1");
  return mpz_class(r - 2) * (d - 1) * pow_ui(d, r - 2);
}

GrassmannianStats grassmannian_stats(const HilbertPolynomial& p, const mpz_class& t,
                                     unsigned r) {
  if (t < 1)
    throw std::invalid_argument("grassmannian_stats: requires t >= 1");
  GrassmannianStats s;
  s.q = p(t);
  s.n = binomial(t + r, r);
  if (s.q < 0 || s.q > s.n)
    throw std::invalid_argument("grassmannian_stats: P(t) outside [0, binom(t+r, r)]");
  s.ambient_dim = s.q * (s.n - s.q);
  s.minor_degree = std::max(mpz_class(p(t + 1) + 1), mpz_class(s.q + 1));
  return s;
}

TowerNumber component_bound_hilb(const HilbertPolynomial& p, const mpz_class& t,
                                 unsigned r, const TowerContext& ctx) {
  const GrassmannianStats s = grassmannian_stats(p, t, r);
  return power(s.minor_degree, s.ambient_dim, ctx);
}

TowerNumber conn_bound_hilb(const mpz_class& t, unsigned r, const TowerContext& ctx) {
  if (r < 2)
    throw std::invalid_argument("conn_bound_hilb: requires r >= 2");
  if (t < 8 * r)
    throw std::invalid_argument("conn_bound_hilb: requires t >= 8r");
  return power(t, r * pow_ui(t, 2 * r), ctx);
}

mpz_class closed_form_t(unsigned d, unsigned r) {
  require_chain_range(d, r, "closed_form_t");
  return pow_ui(mpz_class(2) * r * d, (r + 1) * (1UL << (r - 2)));
}

TowerNumber hilbert_scheme_bound(unsigned d, unsigned r) {
  require_chain_range(d, r, "hilbert_scheme_bound");
  // 2^(r + 3 log2 r) = 2^r r^3 exactly.
  const mpz_class e = pow_ui(2, r) * pow_ui(r, 3);
  const mpfr_prec_t prec = std::max<mpfr_prec_t>(BigFloat::default_precision,
                                                 mpz_sizeinbase(e.get_mpz_t(), 2));
  return TowerNumber::tower(d, BigFloat(e, Round::up, prec));
}

TowerNumber effective_divisor_bound(unsigned d, unsigned r, mpfr_prec_t precision) {
  require_chain_range(d, r, "effective_divisor_bound");
  const BigFloat two_r_log = mul(BigFloat::from_int(2L * r, precision),
                                 log2_of(r, Round::up, precision), Round::up);
  const BigFloat e = add(BigFloat::from_int(long(r) * r, precision), two_r_log, Round::up);
  return TowerNumber::tower(d, e);
}

mpz_class sn_binomial(const mpz_class& n, unsigned d, unsigned r) {
  const mpz_class top = 2 * std::max(n, mpz_class(d)) + mpz_class(r - 1) * d;
  return binomial(top, r);
}

mpz_class sn_exponent(const mpz_class& n, unsigned r) {
  return 2 * binomial(n + r, r) - 2;
}

TowerNumber sn_bound(const mpz_class& n, unsigned d, unsigned r, const TowerContext& ctx) {
  if (n < 1 || d < 1 || r < 1)
    throw std::invalid_argument("sn_bound: arguments must be positive");
  return power(sn_binomial(n, d, r), sn_exponent(n, r), ctx);
}

TowerNumber effdiv_bound(const mpz_class& n, unsigned d, unsigned r,
                         const TowerContext& ctx) {
  return multiply(power(mpz_class(2), n, ctx), sn_bound(n, d, r, ctx), ctx);
}

mpz_class generator_bound(const mpz_class& degree) {
  if (degree < 1)
    throw std::invalid_argument("generator_bound: requires degree >= 1");
  return (degree - 1) * (degree - 2);
}

namespace {

std::string status(bool holds) { return holds ? "holds" : "fails"; }

ClosedFormBounds closed_form_section(const VarietyInvariants& inv, const TowerContext& ctx,
                                     std::vector<std::string>& warnings) {
  const unsigned d = inv.d;
  const unsigned r = inv.r;
  ClosedFormBounds c;
  c.m = m_divisor(d, inv.codim);
  c.n = n_degree(d, inv.codim, inv.degree);
  c.n_worst = n_degree_worst_case(d, r);
  c.t = closed_form_t(d, r);
  c.hoa_rd = hoa_bound({mpz_class(r) * d, r, inv.dim}, ctx);
  const Ordering o = compare(TowerNumber::exact(c.t), c.hoa_rd, ctx.precision);
  c.t_dominates_hoa_rd = o == Ordering::greater || o == Ordering::equal;
  if (!c.t_dominates_hoa_rd)
    warnings.push_back("closed-form t = (2rd)^((r+1)2^(r-2)) does not dominate the Hoa bound "
                       "with D = rd (comparison: " + to_string(o) + ")");
  c.hilb_components = conn_bound_hilb(c.t, r, ctx);
  c.effdiv = effdiv_bound(c.n, d, r, ctx);
  c.effdiv_worst = effdiv_bound(c.n_worst, d, r, ctx);
  c.hilbert_scheme = hilbert_scheme_bound(d, r);
  c.effective_divisor = effective_divisor_bound(d, r, ctx.precision);
  c.generators = generator_bound(inv.degree);
  return c;
}

SharpenedBounds sharpened_section(const VarietyInvariants& inv, const mpz_class& m,
                                  const mpz_class& n, const mpz_class& t_closed,
                                  const TowerContext& ctx,
                                  std::vector<std::string>& warnings) {
  const unsigned d = inv.d;
  const unsigned r = inv.r;
  SharpenedBounds s;
  s.q = divisor_hp(inv.hp, m);
  try {
    s.gotzmann = gotzmann_decomposition(s.q);
  } catch (const NotAdmissible& e) {
    s.gotzmann_error = e.what();
  }
  s.hoa_degree = std::max({mpz_class(d), m, mpz_class(2)});
  s.hoa = hoa_bound({s.hoa_degree, r, inv.dim}, ctx);

  mpz_class phi;
  std::string phi_source;
  if (s.gotzmann) {
    phi = s.gotzmann->length();
    phi_source = "gotzmann number";
  } else if (s.hoa.is_exact()) {
    phi = s.hoa.exact_value();
    phi_source = "hoa bound";
  } else {
    throw ResourceLimit("Gotzmann number unavailable and the Hoa bound is too large for t");
  }
  s.t = phi;
  s.t_source = phi_source;
  if (mpz_class(d) > s.t) {
    s.t = d;
    s.t_source = "d";
  }
  if (mpz_class(8 * r) > s.t) {
    s.t = 8 * r;
    s.t_source = "8r";
  }
  if (s.t > t_closed)
    warnings.push_back("sharpened t exceeds the closed-form t");

  s.hilb_components = conn_bound_hilb(s.t, r, ctx);
  const HilbertPolynomial ideal_hp = HilbertPolynomial::projective_space(r) - s.q;
  s.grassmannian = grassmannian_stats(ideal_hp, s.t, r);
  s.grassmannian_components = component_bound_hilb(ideal_hp, s.t, r, ctx);
  s.sn = sn_bound(n, d, r, ctx);
  return s;
}

} // namespace

BoundReport full_pipeline(const IdealPresentation& ideal, const PipelineOptions& options) {
  BoundReport rep;
  rep.r = ideal.r();
  rep.d = ideal.d();
  for (const Polynomial& g : ideal.generators())
    rep.generators.push_back(g.to_string());

  rep.invariants = invariants(ideal, MonomialOrder{}, options.groebner);
  const VarietyInvariants& inv = rep.invariants;

  if (options.check_smooth)
    rep.smoothness = smoothness_check(ideal, options.groebner);
  if (!rep.smoothness)
    rep.hypotheses.push_back({"smooth", "assumed"});
  else if (*rep.smoothness == Smoothness::indeterminate)
    rep.hypotheses.push_back({"smooth", "unknown"});
  else
    rep.hypotheses.push_back({"smooth", status(*rep.smoothness == Smoothness::smooth)});
  rep.hypotheses.push_back({"irreducible", "assumed"});
  rep.hypotheses.push_back({"r >= 3", status(inv.r >= 3)});
  rep.hypotheses.push_back({"d >= 2", status(inv.d >= 2)});
  rep.hypotheses.push_back({"codim >= 1", status(inv.codim >= 1)});
  rep.hypotheses.push_back({"not contained in a hyperplane",
                            status(!inv.contained_in_hyperplane)});

  if (inv.contained_in_hyperplane)
    rep.warnings.push_back("contained in a hyperplane; bounds use the given r");
  if (rep.smoothness == Smoothness::singular)
    rep.warnings.push_back("singular: the torsion bounds assume a smooth variety");
  if (rep.smoothness == Smoothness::indeterminate)
    rep.warnings.push_back("smoothness check exhausted its budget");

  rep.degenerate = degenerate_case(inv);
  if (rep.degenerate)
    return rep;

  rep.closed_form = closed_form_section(inv, options.tower, rep.warnings);
  if (!options.closed_form_only)
    rep.sharpened = sharpened_section(inv, rep.closed_form->m, rep.closed_form->n,
                                      rep.closed_form->t, options.tower, rep.warnings);
  return rep;
}

} // namespace nsbound
