#include "nsbound/report.hpp"

#include <sstream>
#include <stdexcept>

namespace nsbound {

namespace {

Json field(Json value, const char* formula) {
  return Json{{"value", std::move(value)}, {"formula", formula}};
}

const Json& value_of(const Json& j, const char* key) { return j.at(key).at("value"); }

mpfr_prec_t precision_of(const Json& j) {
  return j.contains("precision") ? j.at("precision").get<mpfr_prec_t>()
                                 : BigFloat::default_precision;
}

std::string smoothness_text(const std::optional<Smoothness>& s) {
  return s ? to_string(*s) : "not checked";
}

std::optional<Smoothness> smoothness_from_text(const std::string& s) {
  if (s == "smooth")
    return Smoothness::smooth;
  if (s == "singular")
    return Smoothness::singular;
  if (s == "indeterminate")
    return Smoothness::indeterminate;
  if (s == "not checked")
    return std::nullopt;
  throw std::invalid_argument("unknown smoothness status: " + s);
}

Json runs_to_json(const GotzmannDecomposition& g) {
  Json runs = Json::array();
  for (const auto& run : g.runs())
    runs.push_back({{"exponent", run.exponent}, {"count", integer_to_json(run.count)}});
  return runs;
}

GotzmannDecomposition runs_from_json(const Json& j) {
  std::vector<GotzmannDecomposition::Run> runs;
  for (const Json& run : j)
    runs.push_back({run.at("exponent").get<unsigned>(), integer_from_json(run.at("count"))});
  return GotzmannDecomposition(std::move(runs));
}

Json stats_to_json(const GrassmannianStats& s) {
  return {{"q", integer_to_json(s.q)},
          {"N", integer_to_json(s.n)},
          {"ambient_dim", integer_to_json(s.ambient_dim)},
          {"minor_degree", integer_to_json(s.minor_degree)}};
}

GrassmannianStats stats_from_json(const Json& j) {
  return {integer_from_json(j.at("q")), integer_from_json(j.at("N")),
          integer_from_json(j.at("ambient_dim")), integer_from_json(j.at("minor_degree"))};
}

constexpr const char* kHoaFormula = "(3/2*D^(r+1-a) + D)^(a*2^(a-1)), floored";
constexpr const char* kConnFormula = "t^(r*t^(2r))";
constexpr const char* kSnFormula = "binom(2*max{n,d}+(r-1)*d, r)^(2*binom(n+r,r)-2)";
constexpr const char* kEffDivFormula = "2^n * binom(2*max{n,d}+(r-1)*d, r)^(2*binom(n+r,r)-2)";

Json closed_form_to_json(const ClosedFormBounds& c) {
  Json j;
  j["m"] = field(integer_to_json(c.m), "(d-1)*codim");
  j["n"] = field(integer_to_json(c.n), "(d-1)*codim*degX");
  j["n_worst"] = field(integer_to_json(c.n_worst), "(r-2)*(d-1)*d^(r-2)");
  j["t"] = field(integer_to_json(c.t), "(2rd)^((r+1)*2^(r-2))");
  j["hoa_rd"] = field(tower_to_json(c.hoa_rd), "Hoa bound with D = r*d, a = dimX");
  j["t_dominates_hoa_rd"] = c.t_dominates_hoa_rd;
  j["hilb_components"] = field(tower_to_json(c.hilb_components), kConnFormula);
  j["effdiv"] = field(tower_to_json(c.effdiv), kEffDivFormula);
  j["effdiv_worst"] = field(tower_to_json(c.effdiv_worst), "effdiv at n = n_worst");
  j["hilbert_scheme"] = field(tower_to_json(c.hilbert_scheme), "2^(d^(2^(r+3*log2 r))) = 2^(d^(2^r*r^3))");
  j["effective_divisor"] = field(tower_to_json(c.effective_divisor), "2^(d^(r^2+2r*log2 r)), exponent rounded up");
  j["generator_bound"] = field(integer_to_json(c.generators), "(degX-1)*(degX-2)");
  return j;
}

ClosedFormBounds closed_form_from_json(const Json& j) {
  ClosedFormBounds c;
  c.m = integer_from_json(value_of(j, "m"));
  c.n = integer_from_json(value_of(j, "n"));
  c.n_worst = integer_from_json(value_of(j, "n_worst"));
  c.t = integer_from_json(value_of(j, "t"));
  c.hoa_rd = tower_from_json(value_of(j, "hoa_rd"));
  c.t_dominates_hoa_rd = j.at("t_dominates_hoa_rd").get<bool>();
  c.hilb_components = tower_from_json(value_of(j, "hilb_components"));
  c.effdiv = tower_from_json(value_of(j, "effdiv"));
  c.effdiv_worst = tower_from_json(value_of(j, "effdiv_worst"));
  c.hilbert_scheme = tower_from_json(value_of(j, "hilbert_scheme"));
  c.effective_divisor = tower_from_json(value_of(j, "effective_divisor"));
  c.generators = integer_from_json(value_of(j, "generator_bound"));
  return c;
}

Json sharpened_to_json(const SharpenedBounds& s) {
  Json j;
  j["q"] = field(hilbert_polynomial_to_json(s.q), "P(t) - P(t-m)");
  if (s.gotzmann) {
    Json g{{"phi", integer_to_json(s.gotzmann->length())}, {"runs", runs_to_json(*s.gotzmann)}};
    j["gotzmann"] = field(std::move(g), "greedy Macaulay expansion of Q");
  } else {
    j["gotzmann_error"] = s.gotzmann_error;
  }
  j["hoa_degree"] = field(integer_to_json(s.hoa_degree), "D = max{d, m, 2}");
  j["hoa"] = field(tower_to_json(s.hoa), kHoaFormula);
  j["t"] = field(integer_to_json(s.t), "max{phi, d, 8r}");
  j["t_source"] = s.t_source;
  j["hilb_components"] = field(tower_to_json(s.hilb_components), kConnFormula);
  if (s.grassmannian)
    j["grassmannian"] = field(stats_to_json(*s.grassmannian),
                              "q = P(t), N = binom(t+r,r), P = binom(t+r,r) - Q");
  if (s.grassmannian_components)
    j["grassmannian_components"] = field(tower_to_json(*s.grassmannian_components),
                                         "max{P(t+1)+1, P(t)+1}^(q*(N-q))");
  j["sn"] = field(tower_to_json(s.sn), kSnFormula);
  return j;
}

SharpenedBounds sharpened_from_json(const Json& j) {
  SharpenedBounds s;
  s.q = hilbert_polynomial_from_json(value_of(j, "q"));
  if (j.contains("gotzmann"))
    s.gotzmann = runs_from_json(value_of(j, "gotzmann").at("runs"));
  else
    s.gotzmann_error = j.at("gotzmann_error").get<std::string>();
  s.hoa_degree = integer_from_json(value_of(j, "hoa_degree"));
  s.hoa = tower_from_json(value_of(j, "hoa"));
  s.t = integer_from_json(value_of(j, "t"));
  s.t_source = j.at("t_source").get<std::string>();
  s.hilb_components = tower_from_json(value_of(j, "hilb_components"));
  if (j.contains("grassmannian"))
    s.grassmannian = stats_from_json(value_of(j, "grassmannian"));
  if (j.contains("grassmannian_components"))
    s.grassmannian_components = tower_from_json(value_of(j, "grassmannian_components"));
  s.sn = tower_from_json(value_of(j, "sn"));
  return s;
}

} // namespace

Json integer_to_json(const mpz_class& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) < 63)
    return v.get_si();
  return v.get_str();
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer())
    return mpz_class(j.get<long>());
  if (j.is_string())
    return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json tower_to_json(const TowerNumber& x) {
  switch (x.kind()) {
  case TowerNumber::Kind::exact:
    return {{"kind", "exact"}, {"decimal", x.exact_value().get_str()}};
  case TowerNumber::Kind::log2:
    return {{"kind", "log2"},
            {"value", x.log2_value().to_string(Round::up)},
            {"rounding", "up"},
            {"precision", x.log2_value().precision()}};
  case TowerNumber::Kind::tower:
    return {{"kind", "tower"},
            {"base", 2},
            {"inner_base", integer_to_json(x.inner_base())},
            {"inner_exp", x.inner_exponent().to_string(Round::up)},
            {"precision", x.inner_exponent().precision()}};
  }
  throw std::logic_error("unreachable");
}

TowerNumber tower_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "exact")
    return TowerNumber::exact(mpz_class(j.at("decimal").get<std::string>()));
  if (kind == "log2")
    return TowerNumber::from_log2(
        BigFloat(j.at("value").get<std::string>(), Round::nearest, precision_of(j)));
  if (kind == "tower") {
    if (j.at("base").get<int>() != 2)
      throw std::invalid_argument("tower base must be 2");
    return TowerNumber::tower(
        integer_from_json(j.at("inner_base")),
        BigFloat(j.at("inner_exp").get<std::string>(), Round::nearest, precision_of(j)));
  }
  throw std::invalid_argument("unknown tower kind: " + kind);
}

Json hilbert_polynomial_to_json(const HilbertPolynomial& p) {
  Json coeffs = Json::array();
  for (const mpz_class& c : p.binomial_coefficients())
    coeffs.push_back(integer_to_json(c));
  return {{"dense", p.to_string()}, {"binomial", std::move(coeffs)}};
}

HilbertPolynomial hilbert_polynomial_from_json(const Json& j) {
  std::vector<mpz_class> coeffs;
  for (const Json& c : j.at("binomial"))
    coeffs.push_back(integer_from_json(c));
  return HilbertPolynomial(std::move(coeffs));
}

Json invariants_to_json(const VarietyInvariants& inv) {
  Json binom = Json::array();
  for (const mpz_class& c : inv.hp.binomial_coefficients())
    binom.push_back(integer_to_json(c));
  Json numerator = Json::array();
  for (const mpz_class& c : inv.numerator.coefficients)
    numerator.push_back(integer_to_json(c));
  return {{"r", inv.r},
          {"d", inv.d},
          {"dimX", inv.dim},
          {"codim", inv.codim},
          {"degX", integer_to_json(inv.degree)},
          {"hp", inv.hp.to_string()},
          {"hp_binomial", std::move(binom)},
          {"series_numerator", inv.numerator.to_string()},
          {"series_numerator_coefficients", std::move(numerator)},
          {"contained_in_hyperplane", inv.contained_in_hyperplane}};
}

VarietyInvariants invariants_from_json(const Json& j) {
  VarietyInvariants inv;
  inv.r = j.at("r").get<unsigned>();
  inv.d = j.at("d").get<unsigned>();
  inv.dim = j.at("dimX").get<unsigned>();
  inv.codim = j.at("codim").get<unsigned>();
  inv.degree = integer_from_json(j.at("degX"));
  std::vector<mpz_class> binom;
  for (const Json& c : j.at("hp_binomial"))
    binom.push_back(integer_from_json(c));
  inv.hp = HilbertPolynomial(std::move(binom));
  for (const Json& c : j.at("series_numerator_coefficients"))
    inv.numerator.coefficients.push_back(integer_from_json(c));
  inv.contained_in_hyperplane = j.at("contained_in_hyperplane").get<bool>();
  return inv;
}

Json gotzmann_to_json(const HilbertPolynomial& q, const GotzmannDecomposition& g) {
  Json j{{"hp", q.to_string()}};
  if (auto seq = g.expanded())
    j["decomposition"] = *seq;
  j["phi"] = integer_to_json(g.length());
  j["runs"] = runs_to_json(g);
  return j;
}

Json report_to_json(const BoundReport& report) {
  Json j;
  j["schema"] = report_schema;
  j["input"] = {{"r", report.r}, {"d", report.d}, {"generators", report.generators}};
  j["invariants"] = invariants_to_json(report.invariants);
  j["smoothness"] = smoothness_text(report.smoothness);
  Json hyps = Json::array();
  for (const Hypothesis& h : report.hypotheses)
    hyps.push_back({{"name", h.name}, {"status", h.status}});
  j["hypotheses"] = std::move(hyps);
  if (report.degenerate) {
    j["degenerate"] = report.degenerate->reason;
    j["bound"] = tower_to_json(report.degenerate->bound);
  } else {
    j["degenerate"] = nullptr;
  }
  if (report.closed_form)
    j["closed_form"] = closed_form_to_json(*report.closed_form);
  if (report.sharpened)
    j["sharpened"] = sharpened_to_json(*report.sharpened);
  j["warnings"] = report.warnings;
  return j;
}

BoundReport report_from_json(const Json& j) {
  if (j.at("schema").get<std::string>() != report_schema)
    throw std::invalid_argument("unsupported report schema");
  BoundReport rep;
  rep.r = j.at("input").at("r").get<unsigned>();
  rep.d = j.at("input").at("d").get<unsigned>();
  rep.generators = j.at("input").at("generators").get<std::vector<std::string>>();
  rep.invariants = invariants_from_json(j.at("invariants"));
  rep.smoothness = smoothness_from_text(j.at("smoothness").get<std::string>());
  for (const Json& h : j.at("hypotheses"))
    rep.hypotheses.push_back({h.at("name").get<std::string>(), h.at("status").get<std::string>()});
  if (!j.at("degenerate").is_null())
    rep.degenerate = DegenerateCase{j.at("degenerate").get<std::string>(),
                                    tower_from_json(j.at("bound"))};
  if (j.contains("closed_form"))
    rep.closed_form = closed_form_from_json(j.at("closed_form"));
  if (j.contains("sharpened"))
    rep.sharpened = sharpened_from_json(j.at("sharpened"));
  rep.warnings = j.at("warnings").get<std::vector<std::string>>();
  return rep;
}

Json outcome_to_json(const VerificationOutcome& o) {
  Json params = Json::object();
  for (const auto& [k, v] : o.params)
    params[k] = v;
  Json j{{"check", o.name}, {"params", std::move(params)}, {"holds", o.holds},
         {"left", o.left},  {"right", o.right}};
  if (o.margin)
    j["margin"] = *o.margin;
  if (!o.note.empty())
    j["note"] = o.note;
  return j;
}

namespace {

std::string show(const mpz_class& v, bool exact_digits) {
  return TowerNumber::exact(v).describe(exact_digits);
}

void line(std::ostringstream& out, const std::string& label, const std::string& value,
          const std::string& formula = {}) {
  out << "  " << label;
  out << std::string(label.size() < 30 ? 30 - label.size() : 2, ' ');
  out << value;
  if (!formula.empty())
    out << "    [" << formula << "]";
  out << '\n';
}

} // namespace

std::string render_invariants(const VarietyInvariants& inv,
                              const std::optional<Smoothness>& smoothness) {
  std::ostringstream out;
  out << "invariants of X in P^" << inv.r << " (generator degree <= " << inv.d << ")\n";
  line(out, "dimX", std::to_string(inv.dim));
  line(out, "codim", std::to_string(inv.codim));
  line(out, "degX", inv.degree.get_str());
  line(out, "hilbert polynomial", inv.hp.to_string());
  std::string binom;
  for (std::size_t j = 0; j < inv.hp.binomial_coefficients().size(); ++j) {
    if (j)
      binom += ", ";
    binom += inv.hp.binomial_coefficients()[j].get_str();
  }
  line(out, "binomial basis", "[" + binom + "]", "coefficients of binom(t+j, j)");
  line(out, "series numerator", inv.numerator.to_string(), "HS = N(z)/(1-z)^(r+1)");
  line(out, "smoothness", smoothness_text(smoothness));
  if (inv.contained_in_hyperplane)
    line(out, "note", "contained in a hyperplane");
  return out.str();
}

std::string render_report(const BoundReport& report, bool exact_digits) {
  std::ostringstream out;
  out << render_invariants(report.invariants, report.smoothness);
  out << "hypotheses\n";
  for (const Hypothesis& h : report.hypotheses)
    line(out, h.name, h.status);
  if (report.degenerate) {
    out << "degenerate case: " << report.degenerate->reason << "\n";
    line(out, "torsion bound", report.degenerate->bound.describe(exact_digits));
  }
  if (const auto& c = report.closed_form) {
    out << "closed-form bounds\n";
    line(out, "m", show(c->m, exact_digits), "(d-1)*codim");
    line(out, "n", show(c->n, exact_digits), "(d-1)*codim*degX");
    line(out, "n worst case", show(c->n_worst, exact_digits), "(r-2)*(d-1)*d^(r-2)");
    line(out, "t", show(c->t, exact_digits), "(2rd)^((r+1)*2^(r-2))");
    line(out, "hoa (D = rd)", c->hoa_rd.describe(exact_digits),
         c->t_dominates_hoa_rd ? "t dominates" : "t does NOT dominate");
    line(out, "hilb components", c->hilb_components.describe(exact_digits), kConnFormula);
    line(out, "effdiv at n", c->effdiv.describe(exact_digits), kEffDivFormula);
    line(out, "effdiv at n worst", c->effdiv_worst.describe(exact_digits));
    line(out, "torsion (tower 1)", c->hilbert_scheme.describe(exact_digits), "2^(d^(2^r*r^3))");
    line(out, "torsion (tower 2)", c->effective_divisor.describe(exact_digits), "2^(d^(r^2+2r*log2 r))");
    line(out, "generator bound", c->generators.get_str(), "(degX-1)*(degX-2)");
  }
  if (const auto& s = report.sharpened) {
    out << "sharpened bounds\n";
    line(out, "Q", s->q.to_string(), "P(t) - P(t-m)");
    if (s->gotzmann)
      line(out, "gotzmann number", show(s->gotzmann->length(), exact_digits));
    else
      line(out, "gotzmann number", "unavailable: " + s->gotzmann_error);
    line(out, "hoa (D = max{d,m,2})", s->hoa.describe(exact_digits), kHoaFormula);
    line(out, "t", show(s->t, exact_digits), "max{phi, d, 8r}, attained by " + s->t_source);
    line(out, "hilb components", s->hilb_components.describe(exact_digits), kConnFormula);
    if (s->grassmannian_components)
      line(out, "grassmannian count", s->grassmannian_components->describe(exact_digits),
           "max{P(t+1)+1, P(t)+1}^(q*(N-q))");
    line(out, "S_n components", s->sn.describe(exact_digits), kSnFormula);
  }
  for (const std::string& w : report.warnings)
    out << "warning: " << w << '\n';
  return out.str();
}

} // namespace nsbound
