#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "pof/bounds.hpp"

using namespace pof;

TEST_CASE("prefix aggregates accumulate roots, sums and tails") {
  PrefixAggregates agg = prefix_aggregates({1.0, 0.81, 0.25});
  REQUIRE(agg.A.size() == 4);
  CHECK(agg.A[0] == 0.0);
  CHECK(std::abs(agg.A[1] - 1.0) < 1e-15);
  CHECK(std::abs(agg.A[2] - 1.9) < 1e-12);
  CHECK(std::abs(agg.A[3] - 2.4) < 1e-12);
  CHECK(std::abs(agg.M[2] - 1.81) < 1e-12);
  CHECK(std::abs(agg.total() - 2.06) < 1e-12);
  REQUIRE(agg.B.size() == 3);
  CHECK(std::abs(agg.B[0] - 1.06) < 1e-12);
  CHECK(std::abs(agg.B[1] - 0.25) < 1e-12);
  CHECK(agg.B[2] == 0.0);
  for (std::size_t l = 1; l < agg.A.size(); ++l)
    CHECK(agg.A[l] * agg.A[l] >= agg.M[l] - 1e-12);
}

TEST_CASE("equal-limit pf bound matches its anchors") {
  BoundReport two = pf_bound_equal(2);
  CHECK(std::abs(two.bound - (2.0 - std::sqrt(3.0)) / 4.0) < 1e-15);
  CHECK(std::abs(two.bound - 0.0669872981077807) < 1e-14);
  CHECK(two.case_tag == "PF-equal-n2");

  CHECK(pf_bound_equal(4).bound == 0.25);
  CHECK(std::abs(pf_bound_equal(3).bound - 1.0 / 6.0) < 1e-15);
  CHECK(std::abs(pf_bound_equal(5).bound - 0.30000000000000004) < 1e-14);
  CHECK(std::abs(pf_bound_equal(6).bound - 0.33333333333333337) < 1e-14);
  CHECK(std::abs(pf_bound_equal(8).bound - 0.41666666666666674) < 1e-14);
  CHECK(std::abs(pf_bound_equal(9).bound - 4.0 / 9.0) < 1e-14);

  CHECK(pf_bound_equal(5).case_tag == "PF-equal-branch1");
  CHECK(pf_bound_equal(5).aux.at("m") == 2.0);
  CHECK(pf_bound_equal(8).case_tag == "PF-equal-branch2");
  CHECK(pf_bound_equal(8).aux.at("m") == 3.0);
  CHECK(pf_bound_equal(6).aux.at("m") == 2.0);  // tie among {2, 3} broken low

  CHECK_THROWS_AS(pf_bound_equal(1), InvalidN);
  CHECK_THROWS_AS(pf_bound_equal(0), InvalidN);
}

TEST_CASE("equal-limit pf bound coincides with the classical one at squares") {
  for (std::size_t k = 2; k <= 10; ++k) {
    std::size_t n = k * k;
    CHECK(pf_bound_equal(n).bound == bft_pf_bound_equal(n));
  }
  for (std::size_t n : {2, 3, 5, 6, 7, 8, 10, 12, 20})
    CHECK(pf_bound_equal(n).bound < bft_pf_bound_equal(n));
}

TEST_CASE("unequal pf bound reduces to the equal-limit formula") {
  for (std::size_t n = 2; n <= 100; ++n) {
    double unequal = pf_bound_unequal(UtilityLimits::equal(n)).bound;
    CHECK(std::abs(unequal - pf_bound_equal(n).bound) < 1e-12);
  }
}

TEST_CASE("unequal pf bound resolves the dominant-limit case") {
  BoundReport report = pf_bound_unequal(UtilityLimits{{1.0, 0.25}});
  CHECK(report.case_tag == "PF-unequal-case1");
  CHECK(report.l_star == 1);
  CHECK(report.bound == 0.375);
  CHECK(report.aux.at("y_star") == 1.0);
  CHECK(report.aux.at("x_star") == 4.0);
}

TEST_CASE("unequal pf bound picks the interior candidate on flat profiles") {
  BoundReport report = pf_bound_unequal(UtilityLimits{{1.0, 0.9, 0.8}});
  CHECK(report.case_tag == "PF-unequal-case2-h");
  CHECK(report.l_star == 2);
  CHECK(std::abs(report.bound - 0.19344445682438105) < 1e-12);
  CHECK(std::abs(report.aux.at("h_min") - 2.4196666295268567) < 1e-12);
  CHECK(std::abs(report.aux.at("y_star") - 0.513167019494862) < 1e-12);
  CHECK(std::abs(report.aux.at("f_ytilde") - 0.8204898026901487) < 1e-12);

  PfUnequalAnalysis an = analyze_pf_unequal(UtilityLimits{{1.0, 0.9, 0.8}});
  REQUIRE(an.h.size() == 2);
  CHECK(std::abs(an.h[0] - 2.7) < 1e-12);
  CHECK(std::abs(an.h[1] - 2.4196666295268567) < 1e-12);
  CHECK_FALSE(an.case1);
  CHECK_FALSE(an.ytilde_wins);
}

TEST_CASE("unequal pf bound picks the boundary candidate on steep pairs") {
  BoundReport report = pf_bound_unequal(UtilityLimits{{1.0, 0.9}});
  CHECK(report.case_tag == "PF-unequal-case2-ytilde");
  CHECK(std::abs(report.bound - 0.08929507674975723) < 1e-12);
  CHECK(std::abs(report.aux.at("y_tilde") - 0.7810429295473779) < 1e-12);

  PfUnequalAnalysis an = analyze_pf_unequal(UtilityLimits{{1.0, 0.9}});
  CHECK(std::abs(an.f_h - 0.95) < 1e-12);
  CHECK(std::abs(an.f_ytilde - 0.9107049232502428) < 1e-12);
  CHECK(an.ytilde_wins);
}

TEST_CASE("bound operations ignore the input order") {
  double reference = pf_bound_unequal(UtilityLimits{{1.0, 0.9, 0.8}}).bound;
  BoundReport shuffled = pf_bound_unequal(UtilityLimits{{0.8, 1.0, 0.9}});
  CHECK(shuffled.bound == reference);
  CHECK(shuffled.permutation == std::vector<std::size_t>{1, 2, 0});

  double mmf_reference = mmf_bound_unequal(UtilityLimits{{1.0, 0.6, 0.25}}).bound;
  CHECK(mmf_bound_unequal(UtilityLimits{{0.25, 1.0, 0.6}}).bound == mmf_reference);
}

TEST_CASE("split candidates fall then rise around the optimum") {
  Rng rng(111);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 4 + static_cast<std::size_t>(rng.uniform() * 6.0);
    PfUnequalAnalysis an = analyze_pf_unequal(helpers::random_limits(n, rng));
    std::size_t best =
        static_cast<std::size_t>(std::min_element(an.h.begin(), an.h.end()) -
                                 an.h.begin());
    for (std::size_t i = 0; i + 1 < an.h.size(); ++i) {
      if (i + 1 <= best)
        CHECK(an.h[i + 1] <= an.h[i] + 1e-9);
      else
        CHECK(an.h[i + 1] >= an.h[i] - 1e-9);
    }
  }
}

TEST_CASE("mmf bound reduces to the classical equal-limit value") {
  for (std::size_t n = 2; n <= 100; ++n) {
    double unequal = mmf_bound_unequal(UtilityLimits::equal(n)).bound;
    CHECK(std::abs(unequal - bft_mmf_bound_equal(n)) < 1e-12);
  }
  CHECK(std::abs(mmf_bound_unequal(UtilityLimits::equal(9)).bound - 0.64) < 1e-12);
}

TEST_CASE("mmf bound classifies the saturated regime") {
  BoundReport report = mmf_bound_unequal(UtilityLimits{{1.0, 0.25}});
  CHECK(report.case_tag == "MMF-S2");
  CHECK(report.l_star == 1);
  CHECK(report.bound == 0.375);
  CHECK(report.s_membership == std::vector<int>{2});
  CHECK(report.aux.at("Y") == 1.0);
}

TEST_CASE("mmf bound classifies the interior regime") {
  BoundReport report = mmf_bound_unequal(UtilityLimits{{1.0, 0.6, 0.25}});
  CHECK(report.case_tag == "MMF-S1");
  CHECK(report.l_star == 1);
  CHECK(std::abs(report.bound - 0.433673469387755) < 1e-13);
  CHECK(report.s_membership == std::vector<int>{1, 2});
  CHECK(std::abs(report.aux.at("Y") - 1.0 / 3.0) < 1e-15);
}

TEST_CASE("the last split always lands in a regime") {
  Rng rng(222);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 9.0);
    MmfAnalysis an = analyze_mmf(helpers::random_limits(n, rng));
    CHECK(an.s_membership.back() != 0);
    CHECK((an.s1_case ? an.s_membership[an.l_star - 1] == 1
                      : an.s_membership[an.l_star - 1] == 2));
  }
}

TEST_CASE("classical comparators match their published values") {
  CHECK(std::abs(bft_pf_bound_equal(2) - 0.08578643762690485) < 1e-14);
  CHECK(std::abs(bft_pf_bound_equal(2) - 0.085786) < 1e-6);
  CHECK(std::abs(bft_pf_bound_equal(9) - 4.0 / 9.0) < 1e-14);
  CHECK(std::abs(bft_mmf_bound_equal(9) - 0.64) < 1e-12);
  CHECK(std::abs(bft_mmf_bound_equal(2) - 1.0 / 9.0) < 1e-14);
  CHECK(bft_mmf_bound_equal(3) == 0.25);
  CHECK_THROWS_AS(bft_pf_bound_equal(1), InvalidN);
  CHECK_THROWS_AS(bft_mmf_bound_equal(1), InvalidN);
}

TEST_CASE("improvement ratio matches its anchors and vanishes at squares") {
  CHECK(std::abs(delta_improvement(2) - 0.21913882939030277) < 1e-14);
  CHECK(std::abs(delta_improvement(2) - 0.219) < 5e-3);
  CHECK(std::abs(delta_improvement(5) - 0.018237254218789217) < 1e-14);
  CHECK(std::abs(delta_improvement(6) - 0.048081641154691594) < 1e-14);
  CHECK(std::abs(delta_improvement(7) - 0.015444250212653577) < 1e-14);
  for (std::size_t k = 2; k <= 7; ++k) CHECK(delta_improvement(k * k) == 0.0);
  CHECK(delta_improvement(6) > delta_improvement(5));
  CHECK(delta_improvement(6) > delta_improvement(7));
  CHECK_THROWS_AS(delta_improvement(1), InvalidN);
}

TEST_CASE("improvement rises to each plateau point and falls after") {
  for (std::size_t a = 1; a <= 6; ++a) {
    std::size_t peak = a * (a + 1);
    for (std::size_t n = std::max<std::size_t>(2, a * a); n < peak; ++n)
      CHECK(delta_improvement(n + 1) >= delta_improvement(n) - 1e-15);
    for (std::size_t n = peak; n + 1 < (a + 1) * (a + 1); ++n)
      CHECK(delta_improvement(n + 1) <= delta_improvement(n) + 1e-15);
  }
}

TEST_CASE("both bounds stay strictly below the supremum") {
  Rng rng(333);
  for (std::size_t n = 2; n <= 12; ++n) {
    double ceiling = worst_case_sup(n, Criterion::PF);
    CHECK(ceiling == 1.0 - 1.0 / static_cast<double>(n));
    for (int trial = 0; trial < 100; ++trial) {
      UtilityLimits limits = helpers::random_limits(n, rng);
      CHECK(pf_bound_unequal(limits).bound < ceiling);
      CHECK(mmf_bound_unequal(limits).bound < ceiling);
    }
  }
}

TEST_CASE("a lone dominant player drives both bounds to the supremum") {
  for (std::size_t n : {2, 5, 9}) {
    std::vector<double> values(n, 1e-6);
    values[0] = 1.0;
    UtilityLimits limits{values};
    double ceiling = 1.0 - 1.0 / static_cast<double>(n);
    double pf = pf_bound_unequal(limits).bound;
    double mmf = mmf_bound_unequal(limits).bound;
    CHECK(pf < ceiling);
    CHECK(mmf < ceiling);
    CHECK(ceiling - pf < 1e-4);
    CHECK(ceiling - mmf < 1e-4);
  }
}
