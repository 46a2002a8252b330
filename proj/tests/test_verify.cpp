#include "nsbound/verify.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace nsbound;

TEST(BinomLtPower, Examples) {
  const VerificationOutcome a = check_binom_lt_power(2, 16);
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(a.left, "171");
  EXPECT_EQ(a.right, "256");
  const VerificationOutcome b = check_binom_lt_power(3, 24);
  EXPECT_TRUE(b.holds);
  EXPECT_EQ(b.left, "3276");
  EXPECT_EQ(b.right, "13824");
  EXPECT_THROW(check_binom_lt_power(2, 15), std::invalid_argument);
  EXPECT_THROW(check_binom_lt_power(1, 16), std::invalid_argument);
}

TEST(BinomLtPower, MatchesOracleOnGrid) {
  for (unsigned r = 2; r <= 8; ++r)
    for (long t = 8 * r; t <= 8 * long(r) + 40; ++t)
      EXPECT_EQ(check_binom_lt_power(r, t).holds,
                oracle::binom(t + 1 + r, r) < oracle::ipow(t, r))
          << "r=" << r << " t=" << t;
}

TEST(Chains, HoldOnDefaultGrid) {
  for (unsigned r = 3; r <= 8; ++r)
    for (unsigned d = 2; d <= 8; ++d) {
      const VerificationOutcome a = check_hilbert_scheme_chain(d, r);
      EXPECT_TRUE(a.holds) << a.params_string() << " " << a.left << " vs " << a.right;
      EXPECT_GE(*a.margin, 0);
      const VerificationOutcome b = check_effective_divisor_chain(d, r);
      EXPECT_TRUE(b.holds) << b.params_string() << " " << b.left << " vs " << b.right;
    }
  EXPECT_THROW(check_hilbert_scheme_chain(2, 2), std::invalid_argument);
  EXPECT_THROW(check_effective_divisor_chain(1, 3), std::invalid_argument);
}

TEST(Chains, EffectiveDivisorChainUsesWorstCaseDegree) {
  EXPECT_NE(check_effective_divisor_chain(2, 4).note.find("n_max = 8"), std::string::npos);
  EXPECT_NE(check_effective_divisor_chain(2, 3).note.find("n_max = 2"), std::string::npos);
}

// Pinned from the exact oracle: the first inequality of the chain holds for
// r = 3 but fails at a = r - 1 for every r >= 4 on the default grid.
TEST(HoaDominatesT, PinnedOutcomes) {
  for (unsigned r = 3; r <= 8; ++r)
    for (unsigned d = 2; d <= 8; ++d) {
      const auto detail = check_hoa_dominates_t_detail(d, r);
      ASSERT_EQ(detail.size(), r - 1);
      for (const auto& o : detail) {
        const long a = o.params.back().second;
        const bool expected = r == 3 || a < long(r) - 1;
        EXPECT_EQ(o.holds, expected) << o.params_string() << " " << o.note;
      }
      EXPECT_EQ(check_hoa_dominates_t(d, r).holds, r == 3);
    }
}

TEST(HoaDominatesT, SmallCaseByHand) {
  // d=2, r=3, a=2: (3/2 * 6^2 + 6)^4 = 60^4 against 12^8.
  const auto detail = check_hoa_dominates_t_detail(2, 3);
  ASSERT_EQ(detail.size(), 2u);
  EXPECT_EQ(detail[1].right, "12960000 (floor)");
  EXPECT_EQ(detail[1].left, "429981696");
  EXPECT_TRUE(detail[1].holds);
}

TEST(GotzmannVsHoa, Corpus) {
  std::vector<IdealPresentation> ideals;
  for (const auto& e : corpus::varieties())
    ideals.push_back(corpus::ideal(e));
  const auto outcomes = check_gotzmann_vs_hoa(ideals);
  ASSERT_EQ(outcomes.size(), ideals.size());
  for (const auto& o : outcomes)
    EXPECT_TRUE(o.holds) << o.params_string() << " " << o.left << " vs " << o.right;
  // Quadric: phi((t+1)^2) = 2 against 5^12.
  EXPECT_EQ(outcomes[0].left, "2");
  EXPECT_EQ(outcomes[0].right, "244140625");
}

TEST(GotzmannVsHoa, SmallExamples) {
  const IdealPresentation point(2, {parse_polynomial("x1", 2), parse_polynomial("x2", 2)});
  const IdealPresentation cubic(2, {parse_polynomial(corpus::fermat(2, 3), 2)});
  const auto outcomes = check_gotzmann_vs_hoa({point, cubic});
  EXPECT_EQ(outcomes[0].left, "1");
  EXPECT_EQ(outcomes[0].right, "8");
  EXPECT_EQ(outcomes[1].left, "3");
  EXPECT_EQ(outcomes[1].right, "3164");
  EXPECT_TRUE(outcomes[0].holds && outcomes[1].holds);
}

TEST(CompareGrid, AllHold) {
  GridSpec grid;
  grid.r = {3, 12};
  grid.d = {2, 12};
  const auto outcomes = compare_bounds_grid(grid);
  EXPECT_EQ(outcomes.size(), 10u * 11u);
  for (const auto& o : outcomes)
    EXPECT_TRUE(o.holds) << o.params_string();
}

TEST(GridProperties, DeterministicAndPrecisionStable) {
  GridSpec grid;
  grid.r = {3, 6};
  grid.d = {2, 5};
  GridSpec wide = grid;
  wide.precision = 512;
  using Runner = std::vector<VerificationOutcome> (*)(const GridSpec&);
  for (Runner run : {Runner(binom_grid), Runner(hilbert_scheme_grid), Runner(effective_divisor_grid),
                     Runner(hoa_grid), Runner(compare_bounds_grid)}) {
    const auto a = run(grid), b = run(grid), c = run(wide);
    ASSERT_EQ(a.size(), b.size());
    ASSERT_EQ(a.size(), c.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].holds, b[i].holds);
      EXPECT_EQ(a[i].left, b[i].left);
      EXPECT_EQ(a[i].params, c[i].params);
      EXPECT_EQ(a[i].holds, c[i].holds) << a[i].name << " " << a[i].params_string();
    }
  }
}

TEST(GridProperties, GridSizes) {
  const GridSpec grid;
  EXPECT_EQ(binom_grid(grid).size(), 6u * 5u);
  EXPECT_EQ(hilbert_scheme_grid(grid).size(), 6u * 7u);
  EXPECT_EQ(effective_divisor_grid(grid).size(), 6u * 7u);
  GridSpec with_two = grid;
  with_two.r = {2, 8};
  EXPECT_EQ(binom_grid(with_two).size(), 7u * 5u);
  EXPECT_EQ(hilbert_scheme_grid(with_two).size(), 6u * 7u);
}
