#include "nsbound/errors.hpp"
#include "nsbound/groebner.hpp"
#include "nsbound/hilbert.hpp"
#include "nsbound/parser.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nsbound;

namespace {

Polynomial P(const std::string& s, unsigned r = 3) { return parse_polynomial(s, r); }

const std::vector<Polynomial> kTwistedCubic = {P("x0*x2 - x1^2"), P("x0*x3 - x1*x2"),
                                               P("x1*x3 - x2^2")};

// Every S-pair reduces to zero under the textbook division algorithm.
void expect_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& g = gb.elements();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      EXPECT_TRUE(oracle::remainder(oracle::s_pair(g[i], g[j], gb.order()), g, gb.order())
                      .is_zero())
          << "S(" << g[i].to_string() << ", " << g[j].to_string() << ")";
}

void expect_reduced(const GroebnerBasis& gb) {
  const auto& g = gb.elements();
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_EQ(g[i].lead_coefficient(gb.order()), 1);
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j)
        continue;
      for (const auto& [m, c] : g[j].terms())
        EXPECT_FALSE(oracle::divides(g[i].lead_monomial(gb.order()), m));
    }
  }
}

} // namespace

TEST(Buchberger, MonomialGeneratorsUnchanged) {
  const std::vector<Polynomial> gens = {P("x0"), P("x1")};
  const GroebnerBasis gb = buchberger(gens, 4);
  // Stored by ascending lead monomial.
  EXPECT_EQ(gb.elements(), (std::vector<Polynomial>{P("x1"), P("x0")}));
}

TEST(Buchberger, TwistedCubicIsAlreadyReduced) {
  for (auto kind : {OrderKind::grevlex, OrderKind::lex}) {
    const GroebnerBasis gb = buchberger(kTwistedCubic, 4, kind);
    ASSERT_EQ(gb.elements().size(), 3u);
    // Equal up to the sign fixed by making each element monic.
    for (const auto& g : kTwistedCubic) {
      const auto& e = gb.elements();
      EXPECT_TRUE(std::find(e.begin(), e.end(), g) != e.end() ||
                  std::find(e.begin(), e.end(), -g) != e.end())
          << g.to_string();
    }
    expect_buchberger_criterion(gb);
  }
}

TEST(Buchberger, SumAndDifference) {
  const std::vector<Polynomial> gens = {P("x0^2 - x1^2", 1), P("x0^2 + x1^2", 1)};
  const GroebnerBasis gb = buchberger(gens, 2);
  EXPECT_EQ(gb.elements(), (std::vector<Polynomial>{P("x1^2", 1), P("x0^2", 1)}));
}

TEST(Buchberger, UnitIdeal) {
  const std::vector<Polynomial> gens = {P("x0 - 1", 1)};
  const GroebnerBasis gb = buchberger(gens, 2);
  EXPECT_FALSE(gb.is_unit_ideal());
  const std::vector<Polynomial> unit = {P("x0", 1), P("x0 + 1", 1)};
  EXPECT_TRUE(buchberger(unit, 2).is_unit_ideal());
}

TEST(Buchberger, BudgetsRaiseResourceLimit) {
  GroebnerOptions tight;
  tight.max_pairs = 1;
  EXPECT_THROW(buchberger(kTwistedCubic, 4, MonomialOrder{}, tight), ResourceLimit);
  GroebnerOptions shallow;
  shallow.max_degree = 2;
  const std::vector<Polynomial> cubic = {P("x0^3 + x1^3"), P("x0^2*x1 - x2^3")};
  EXPECT_THROW(buchberger(cubic, 4, MonomialOrder{}, shallow), ResourceLimit);
}

TEST(NormalForm, Examples) {
  const std::vector<Polynomial> x0 = {P("x0")};
  const GroebnerBasis gb = buchberger(x0, 4);
  EXPECT_TRUE(normal_form(P("x0^2"), gb).is_zero());
  EXPECT_EQ(normal_form(P("x1"), gb), P("x1"));
  // Under lex x0*x2 leads x0*x2 - x1^2; under grevlex x1^2 leads instead.
  EXPECT_EQ(normal_form(P("x0*x2"), buchberger(kTwistedCubic, 4, OrderKind::lex)), P("x1^2"));
  EXPECT_EQ(normal_form(P("x1^2"), buchberger(kTwistedCubic, 4)), P("x0*x2"));
}

TEST(NormalForm, IsLinear) {
  std::mt19937 rng(5);
  const GroebnerBasis gb = buchberger(kTwistedCubic, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial a = oracle::random_homogeneous(rng, 4, 3, 4);
    const Polynomial b = oracle::random_homogeneous(rng, 4, 3, 4);
    EXPECT_EQ(normal_form(a + b * mpq_class(3, 2), gb),
              normal_form(a, gb) + normal_form(b, gb) * mpq_class(3, 2));
    EXPECT_EQ(normal_form(a, gb), oracle::remainder(normal_form(a, gb), gb.elements(), gb.order()));
  }
}

TEST(NormalForm, SPolynomialMatchesOracle) {
  const MonomialOrder order;
  EXPECT_EQ(s_polynomial(kTwistedCubic[0], kTwistedCubic[1], order),
            oracle::s_pair(kTwistedCubic[0], kTwistedCubic[1], order));
}

TEST(LeadTermIdeal, Examples) {
  const std::vector<Polynomial> xs = {P("x0"), P("x1")};
  EXPECT_EQ(lead_term_ideal(buchberger(xs, 4)).generators(),
            (std::vector<Monomial>{Monomial{0, 1, 0, 0}, Monomial{1, 0, 0, 0}}));
  const MonomialIdeal tc_lex = lead_term_ideal(buchberger(kTwistedCubic, 4, OrderKind::lex));
  EXPECT_EQ(tc_lex, MonomialIdeal(4, {Monomial{1, 0, 1, 0}, Monomial{1, 0, 0, 1},
                                      Monomial{0, 1, 0, 1}}));
  const MonomialIdeal tc = lead_term_ideal(buchberger(kTwistedCubic, 4));
  EXPECT_EQ(tc, MonomialIdeal(4, {Monomial{0, 2, 0, 0}, Monomial{0, 1, 1, 0},
                                  Monomial{0, 0, 2, 0}}));
  const MonomialIdeal chain(2, {Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 3}});
  EXPECT_EQ(chain.generators().size(), 3u);
  const MonomialIdeal redundant(2, {Monomial{2, 0}, Monomial{3, 1}});
  EXPECT_EQ(redundant.generators().size(), 1u);
}

TEST(Smoothness, Examples) {
  EXPECT_EQ(smoothness_check(IdealPresentation(3, {P("x0*x3 - x1*x2")})), Smoothness::smooth);
  EXPECT_EQ(smoothness_check(IdealPresentation(2, {P("x1^2*x2 - x0^3 - x0^2*x2", 2)})),
            Smoothness::singular);
  EXPECT_EQ(smoothness_check(IdealPresentation(2, {P("x0", 2)})), Smoothness::smooth);
  EXPECT_EQ(smoothness_check(corpus::ideal(corpus::varieties()[1])), Smoothness::smooth);
}

TEST(Smoothness, BudgetGivesIndeterminate) {
  GroebnerOptions tight;
  tight.max_pairs = 1;
  EXPECT_EQ(smoothness_check(corpus::ideal(corpus::varieties()[1]), tight),
            Smoothness::indeterminate);
}

TEST(Jacobian, MinorsOfQuadric) {
  const std::vector<Polynomial> q = {P("x0*x3 - x1*x2")};
  const auto minors = jacobian_minors(q, 4, 1);
  EXPECT_EQ(minors.size(), 4u);
}

TEST(GroebnerProperties, CorpusBasesSatisfyCriterion) {
  for (const auto& e : corpus::varieties()) {
    for (auto kind : {OrderKind::grevlex, OrderKind::lex}) {
      const GroebnerBasis gb = buchberger(corpus::ideal(e), kind);
      expect_buchberger_criterion(gb);
      expect_reduced(gb);
    }
  }
}

TEST(GroebnerProperties, IdealMembersReduceToZero) {
  std::mt19937 rng(7);
  const GroebnerBasis gb = buchberger(kTwistedCubic, 4);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial combo(4);
    for (const auto& g : kTwistedCubic)
      combo += oracle::random_homogeneous(rng, 4, 2, 3) * g;
    EXPECT_TRUE(normal_form(combo, gb).is_zero());
    const Polynomial outside = combo + P("x0^4");
    EXPECT_FALSE(normal_form(outside, gb).is_zero());
  }
}

TEST(GroebnerProperties, InitialIdealIndependentOfGeneratorOrder) {
  std::mt19937 rng(11);
  for (const auto& e : corpus::varieties()) {
    const IdealPresentation base = corpus::ideal(e);
    const MonomialIdeal expected = lead_term_ideal(buchberger(base));
    auto gens = base.generators();
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(gens.begin(), gens.end(), rng);
      EXPECT_EQ(lead_term_ideal(buchberger(gens, base.num_vars())), expected) << e.name;
    }
  }
}

TEST(GroebnerProperties, RandomHomogeneousIdeals) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) {
      Polynomial g = oracle::random_homogeneous(rng, 3, 2 + k % 2, 3);
      if (!g.is_zero())
        gens.push_back(g);
    }
    if (gens.empty())
      continue;
    for (auto kind : {OrderKind::grevlex, OrderKind::lex}) {
      const GroebnerBasis gb = buchberger(gens, 3, kind);
      expect_buchberger_criterion(gb);
      for (const auto& g : gens)
        EXPECT_TRUE(normal_form(g, gb).is_zero());
    }
  }
}
