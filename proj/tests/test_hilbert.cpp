#include "nsbound/errors.hpp"
#include "nsbound/hilbert.hpp"
#include "nsbound/parser.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nsbound;

namespace {

HilbertSeriesNumerator numerator(std::vector<long> c) {
  HilbertSeriesNumerator n;
  for (long v : c)
    n.coefficients.emplace_back(v);
  return n;
}

HilbertPolynomial hp(const std::string& s) { return parse_hilbert_polynomial(s); }

} // namespace

TEST(HilbertSeries, Examples) {
  EXPECT_EQ(hilbert_series(MonomialIdeal(3, {}), 2), numerator({1}));
  EXPECT_EQ(hilbert_series(MonomialIdeal(3, {Monomial{0, 0, 4}}), 2),
            numerator({1, 0, 0, 0, -1}));
  const MonomialIdeal three(4, {Monomial{1, 0, 1, 0}, Monomial{1, 0, 0, 1}, Monomial{0, 1, 0, 1}});
  EXPECT_EQ(hilbert_series(three, 3), numerator({1, 0, -3, 2}));
}

TEST(HilbertSeries, NodeBudget) {
  HilbertOptions tiny;
  tiny.max_nodes = 1;
  const MonomialIdeal three(4, {Monomial{1, 0, 1, 0}, Monomial{1, 0, 0, 1}, Monomial{0, 1, 0, 1}});
  EXPECT_THROW(hilbert_series(three, 3, tiny), ResourceLimit);
}

TEST(HilbertPolynomialTest, Examples) {
  EXPECT_EQ(hilbert_polynomial(numerator({1}), 2).to_string(), "1/2t^2+3/2t+1");
  EXPECT_EQ(hilbert_polynomial(numerator({1, 0, -1}), 3).to_string(), "t^2+2t+1");
  EXPECT_EQ(hilbert_polynomial(numerator({1, 0, -3, 2}), 3), hp("3t+1"));
  EXPECT_EQ(hilbert_polynomial(numerator({1, 0, -1, -1, 0, 1}), 3), hp("6t-3"));
  EXPECT_EQ(hilbert_polynomial(numerator({1}), 0), hp("1"));
  EXPECT_TRUE(hilbert_polynomial(numerator({1, -1}), 0).is_zero());
}

TEST(HilbertPolynomialTest, BinomialBasis) {
  EXPECT_EQ(HilbertPolynomial::projective_space(3).binomial_coefficients(),
            (std::vector<mpz_class>{0, 0, 0, 1}));
  const HilbertPolynomial q = hp("2t+1");
  EXPECT_EQ(q.binomial_coefficients(), (std::vector<mpz_class>{-1, 2}));
  EXPECT_EQ(q(5), 11);
  EXPECT_EQ(q.shifted(1)(5), 9);
  EXPECT_EQ(HilbertPolynomial::from_dense(q.dense()), q);
  EXPECT_THROW(HilbertPolynomial::from_dense({mpq_class(0), mpq_class(1, 2)}),
               std::invalid_argument);
  EXPECT_THROW(parse_hilbert_polynomial("2s+1"), ParseError);
}

TEST(HilbertPolynomialTest, GeneralizedBinomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(-1, 3), -1);
  EXPECT_EQ(binomial(2, 3), 0);
  EXPECT_EQ(binomial(-3, 0), 1);
}

TEST(Invariants, Corpus) {
  for (const auto& e : corpus::varieties()) {
    const VarietyInvariants inv = invariants(corpus::ideal(e));
    EXPECT_EQ(inv.dim, e.dim) << e.name;
    EXPECT_EQ(inv.codim, e.r - e.dim) << e.name;
    EXPECT_EQ(inv.degree, e.degree) << e.name;
    EXPECT_EQ(inv.hp.to_string(), e.hp) << e.name;
    // N(z) = (1 - z)^codim K(z) with K(1) = deg X.
    std::vector<mpz_class> k = inv.numerator.coefficients;
    for (unsigned c = 0; c < inv.codim; ++c) {
      for (std::size_t i = 1; i < k.size(); ++i)
        k[i] += k[i - 1];
      ASSERT_EQ(k.back(), 0) << e.name;
      k.pop_back();
    }
    mpz_class at_one = 0;
    for (const auto& v : k)
      at_one += v;
    EXPECT_EQ(at_one, inv.degree) << e.name;
  }
}

TEST(Invariants, HyperplaneFlag) {
  const auto& all = corpus::varieties();
  for (const auto& e : all)
    EXPECT_EQ(invariants(corpus::ideal(e)).contained_in_hyperplane,
              e.name == "plane in P^3" || e.name == "two points in P^2")
        << e.name;
}

TEST(Invariants, EmptySchemeIsImproper) {
  const IdealPresentation irrelevant(2, {parse_polynomial("x0", 2), parse_polynomial("x1", 2),
                                         parse_polynomial("x2^2", 2)});
  EXPECT_THROW(invariants(irrelevant), ImproperIdeal);
}

TEST(Invariants, HypersurfacesMatchBinomialFormula) {
  for (unsigned r = 2; r <= 5; ++r) {
    for (unsigned d = 1; d <= 5; ++d) {
      const IdealPresentation ideal(r, {parse_polynomial(corpus::fermat(r, d), r)});
      const VarietyInvariants inv = invariants(ideal);
      EXPECT_EQ(inv.dim, r - 1);
      EXPECT_EQ(inv.degree, d);
      for (long t = 0; t <= 8; ++t)
        EXPECT_EQ(inv.hp(t), oracle::binom(t + r, r) - oracle::binom(t + r - d, r))
            << "r=" << r << " d=" << d << " t=" << t;
    }
  }
}

// The Hilbert function agrees with the brute-force count of standard
// monomials for large t, under both orders.
TEST(HilbertProperties, AgreesWithStandardMonomialCount) {
  for (const auto& e : corpus::varieties()) {
    if (e.r > 4)
      continue;
    for (auto kind : {OrderKind::grevlex, OrderKind::lex}) {
      const GroebnerBasis gb = buchberger(corpus::ideal(e), kind);
      const MonomialIdeal lead = lead_term_ideal(gb);
      const HilbertPolynomial p = hilbert_polynomial(hilbert_series(lead, e.r), e.r);
      long start = 0;
      for (const auto& g : gb.elements())
        start = std::max(start, g.degree());
      start += e.r + 1;
      for (long t = start; t < start + 6; ++t)
        EXPECT_EQ(p(t), oracle::standard_monomials(lead.generators(), e.r + 1, t))
            << e.name << " t=" << t;
    }
  }
}

TEST(HilbertProperties, OrderIndependent) {
  for (const auto& e : corpus::varieties())
    EXPECT_EQ(invariants(corpus::ideal(e), OrderKind::lex).hp,
              invariants(corpus::ideal(e)).hp)
        << e.name;
}

TEST(HilbertProperties, RandomMonomialIdeals) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<unsigned> e(0, 3);
  std::uniform_int_distribution<int> count(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned r = 2 + trial % 2;
    std::vector<Monomial> gens;
    for (int k = count(rng); k > 0; --k) {
      Monomial m(r + 1);
      for (unsigned i = 0; i <= r; ++i)
        m[i] = e(rng);
      if (m.degree() > 0)
        gens.push_back(m);
    }
    const MonomialIdeal ideal(r + 1, gens);
    const HilbertSeriesNumerator n = hilbert_series(ideal, r);
    // Expand N(z) / (1 - z)^(r+1) as a power series and compare with counts.
    for (unsigned long t = 0; t <= 9; ++t) {
      mpz_class h = 0;
      for (std::size_t k = 0; k < n.coefficients.size() && k <= t; ++k)
        h += n.coefficients[k] * oracle::binom(t - k + r, r);
      EXPECT_EQ(h, oracle::standard_monomials(ideal.generators(), r + 1, t));
    }
  }
}

TEST(DivisorHp, Examples) {
  EXPECT_EQ(divisor_hp(hp("t^2+2t+1"), 1), hp("2t+1"));
  EXPECT_EQ(divisor_hp(hp("3t+1"), 2), hp("6"));
  EXPECT_THROW(divisor_hp(hp("3t+1"), 0), std::invalid_argument);
}

TEST(DivisorHp, TelescopesAndScalesLeadingCoefficient) {
  for (const auto& e : corpus::varieties()) {
    if (e.dim < 1)
      continue;
    const HilbertPolynomial p = invariants(corpus::ideal(e)).hp;
    for (long m = 1; m <= 4; ++m) {
      const HilbertPolynomial q = divisor_hp(p, m);
      for (long t = -3; t <= 6; ++t) {
        mpz_class sum = 0;
        for (long i = 0; i < m; ++i)
          sum += p(t - i) - p(t - i - 1);
        EXPECT_EQ(q(t), sum) << e.name;
      }
      EXPECT_EQ(q.degree(), static_cast<long>(e.dim) - 1);
      mpz_class fact = 1;
      for (unsigned i = 2; i < e.dim; ++i)
        fact *= i;
      mpq_class expected(m * e.degree, fact);
      expected.canonicalize();
      EXPECT_EQ(q.leading_coefficient(), expected) << e.name;
    }
  }
}
