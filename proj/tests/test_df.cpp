#include <doctest.h>

#include <random>

#include "adiaslope/df.hpp"
#include "adiaslope/errors.hpp"
#include "support.hpp"
#include "weight_oracle.hpp"

using namespace adiaslope;
using adiaslope::testing::blowup_example;
using adiaslope::testing::plane_trivial_quot_example;
using adiaslope::testing::random_equal_slope_input;
using adiaslope::testing::weight_route_df_numerator;

TEST_CASE("worked blowup example: full expansion") {
  const TestConfigInput input = blowup_example(1);
  CHECK(input.n() == 2);
  CHECK(input.r() == 2);
  CHECK(input.q() == 1);
  CHECK(input.volume() == 8);

  const KPolynomial fut = futaki_k_polynomial(input);
  CHECK(fut.coeff(4) == 0);
  CHECK(fut.coeff(3) == 0);
  CHECK(fut.coeff(2) == Rational(-76, 3));
  CHECK(fut.coeff(1) == 8);
  CHECK(fut.coeff(0) == Rational(35, 12));

  // independent recomputation through the weight expansions
  const KPolynomial num = weight_route_df_numerator(input, 1);
  CHECK(fut == Rational(-48) * num);

  const DFReport report = df_report(input);
  CHECK(report.a == std::vector<Rational>{0, 0, Rational(-76, 3), 8, Rational(35, 12)});
  CHECK(report.normalized == std::vector<Rational>{0, 0, -76, 24, Rational(35, 4)});
  CHECK(report.scaled == std::vector<Rational>{0, 0, -190, 60, Rational(175, 8)});
  CHECK(report.leading_index == 2);
  CHECK(report.verdict == Verdict::stable_wrt_subbundle);
  CHECK(report.slopes.sub_L == 0);
  CHECK(report.slopes.total_L == 0);
  CHECK(report.slopes.sub_c1B == 0);
  CHECK(report.slopes.total_c1B == 0);
}

TEST_CASE("worked blowup example: second Chern number sweep") {
  // scaled a2 = 18 c2 - 208; the sign flips between c2 = 11 and c2 = 12
  for (const auto& [c2, expect_stable] :
       std::vector<std::pair<int, bool>>{{1, true}, {11, true}, {12, false}, {19, false}}) {
    const DFReport report = df_report(blowup_example(c2));
    CHECK(report.scaled[2] == 18 * c2 - 208);
    CHECK(report.leading_index == 2);
    CHECK(report.verdict ==
          (expect_stable ? Verdict::stable_wrt_subbundle : Verdict::unstable_wrt_subbundle));
  }
}

TEST_CASE("extension by the trivial line bundle over the plane") {
  const TestConfigInput input = plane_trivial_quot_example(1);
  const KPolynomial fut = futaki_k_polynomial(input);
  CHECK(fut.coeff(4) == 0);
  CHECK(fut.coeff(3) == 0);
  CHECK(fut.coeff(2) == Rational(27, 10));
  CHECK(fut.coeff(1) == Rational(-3, 5));
  CHECK(fut.coeff(0) == Rational(-1, 60));
  CHECK(fut == Rational(-48) * weight_route_df_numerator(input, 1));

  for (const Rational c2 : {Rational(1), Rational(2), Rational(5)}) {
    const DFReport report = df_report(plane_trivial_quot_example(c2));
    CHECK(report.scaled[2] == 18 * c2);
    CHECK(report.verdict == Verdict::unstable_wrt_subbundle);
  }

  // same shape over the blowup base: the scaled coefficient is unchanged
  auto ring = adiaslope::testing::blowup_p2();
  const GradedClass L = ring->divisor({{"H", 3}, {"D", -1}});
  const TestConfigInput on_blowup(L, L,
                                  BundleData(2, ring->one() + Rational(2) * ring->point()),
                                  trivial_bundle(ring, 1));
  const DFReport report = df_report(on_blowup);
  CHECK(report.scaled[2] == 36);
  CHECK(report.verdict == Verdict::unstable_wrt_subbundle);
}

TEST_CASE("weight-route oracle agrees on random data") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const TestConfigInput input = random_equal_slope_input(rng, 2);
    CHECK(futaki_k_polynomial(input) ==
          Rational(-48) * weight_route_df_numerator(input, 0));
  }
  // unequal slopes as well
  std::uniform_int_distribution<int> c2(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    auto data = adiaslope::testing::random_surface(rng);
    GradedClass sub_total = data.ring->one() +
                            adiaslope::testing::random_divisor(rng, data.ring) +
                            Rational(c2(rng)) * data.ring->point();
    const TestConfigInput input(
        data.L, data.c1B, BundleData(2, sub_total),
        line_bundle(adiaslope::testing::random_divisor(rng, data.ring)));
    CHECK(futaki_k_polynomial(input) ==
          Rational(-48) * weight_route_df_numerator(input, 0));
  }
}

TEST_CASE("leading coefficient vanishes; next order follows the slopes") {
  std::mt19937 rng(47);
  std::uniform_int_distribution<int> sub_rank(1, 3);
  std::uniform_int_distribution<int> quot_rank(1, 2);
  std::uniform_int_distribution<int> c2(-3, 3);
  int equal_seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    auto data = adiaslope::testing::random_surface(rng);
    const int rs = sub_rank(rng);
    const int rq = quot_rank(rng);
    const BundleData sub = adiaslope::testing::random_bundle(rng, data.ring, rs);
    const BundleData quot = adiaslope::testing::random_bundle(rng, data.ring, rq);
    const TestConfigInput input(data.L, data.c1B, sub, quot);
    const int n = input.n();
    const KPolynomial fut = futaki_k_polynomial(input);
    CHECK(fut.coeff(2 * n) == 0);
    CHECK(fut.degree() <= 2 * n - 1);

    const Rational a1 = fut.coeff(2 * n - 1);
    const Rational gap = slope(sub, data.L) - slope(input.total(), data.L);
    CHECK((a1 == 0) == (gap == 0));
    if (gap != 0) {
      CHECK((a1 > 0) == (gap > 0));
    } else {
      ++equal_seen;
    }
  }
  CHECK(equal_seen > 0);
}

TEST_CASE("closed forms match the engine on the worked example") {
  const TestConfigInput input = blowup_example(1);
  using F = CoefficientFamily;
  CHECK(closed_form_coefficient(input, F::alpha, 0) == 48);
  CHECK(closed_form_coefficient(input, F::alpha, 1) == 0);
  CHECK(closed_form_coefficient(input, F::alpha, 2) == -9);
  CHECK(closed_form_coefficient(input, F::beta, 0) == 72);
  CHECK(closed_form_coefficient(input, F::beta, 1) == 24);
  CHECK(closed_form_coefficient(input, F::beta, 2) == -19);
  CHECK(closed_form_coefficient(input, F::gamma, 0) == 160);
  CHECK(closed_form_coefficient(input, F::gamma, 1) == 0);
  CHECK(closed_form_coefficient(input, F::gamma, 2) == -20);
  CHECK(closed_form_coefficient(input, F::delta, 0) == 192);
  CHECK(closed_form_coefficient(input, F::delta, 1) == 64);
  CHECK(closed_form_coefficient(input, F::delta, 2) == -26);
  CHECK_THROWS_AS(closed_form_coefficient(input, F::alpha, 3), UnsupportedOrder);

  const BracketExpansions brackets = bracket_expansions(input);
  CHECK(brackets.alpha == KPolynomial({{2, Rational(48)}, {0, Rational(-9)}}));
  CHECK(brackets.beta == KPolynomial({{2, Rational(72)}, {1, Rational(24)}, {0, Rational(-19)}}));
  CHECK(brackets.gamma == KPolynomial({{2, Rational(160)}, {0, Rational(-20)}}));
  CHECK(brackets.delta == KPolynomial({{2, Rational(192)}, {1, Rational(64)}, {0, Rational(-26)}}));
}

TEST_CASE("closed forms match the engine on random data") {
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> sub_rank(1, 3);
  std::uniform_int_distribution<int> quot_rank(1, 2);
  using F = CoefficientFamily;
  for (int trial = 0; trial < 60; ++trial) {
    auto data = adiaslope::testing::random_surface(rng);
    const BundleData sub = adiaslope::testing::random_bundle(rng, data.ring, sub_rank(rng));
    const BundleData quot = adiaslope::testing::random_bundle(rng, data.ring, quot_rank(rng));
    const TestConfigInput input(data.L, data.c1B, sub, quot);
    const int n = input.n();
    const BracketExpansions brackets = bracket_expansions(input);
    for (int i = 0; i <= 2; ++i) {
      CHECK(brackets.alpha.coeff(n - i) == closed_form_coefficient(input, F::alpha, i));
      CHECK(brackets.beta.coeff(n - i) == closed_form_coefficient(input, F::beta, i));
      if (input.q() == 1) {
        CHECK(brackets.gamma.coeff(n - i) == closed_form_coefficient(input, F::gamma, i));
        CHECK(brackets.delta.coeff(n - i) == closed_form_coefficient(input, F::delta, i));
      } else {
        CHECK_THROWS_AS(closed_form_coefficient(input, F::gamma, i), UnsupportedRank);
        CHECK_THROWS_AS(closed_form_coefficient(input, F::delta, i), UnsupportedRank);
      }
    }
  }
}

TEST_CASE("brackets over a product fixed locus match hand expansion") {
  // With a trivial rank-2 sub over the plane the fixed locus is a product,
  // its hyperplane class squares to zero, and the delta bracket collapses to
  // a short polynomial in the quotient degree a:
  //   delta_0 = 24 L^2, delta_1 = 4(6 - 2a), delta_2 = 2a^2 - 6a,
  //   gamma_2 = 2a^2   (worked out by hand, independently of any pushforward).
  auto ring = adiaslope::testing::p2();
  const GradedClass L = ring->divisor({{"H", 1}});
  const GradedClass c1B = ring->divisor({{"H", 3}});
  for (const int a : {1, 2, 3}) {
    const TestConfigInput input(L, c1B, trivial_bundle(ring, 2),
                                line_bundle(ring->divisor({{"H", a}})));
    const BracketExpansions b = bracket_expansions(input);
    CHECK(b.delta.coeff(2) == 24);
    CHECK(b.delta.coeff(1) == 4 * (6 - 2 * a));
    CHECK(b.delta.coeff(0) == 2 * a * a - 6 * a);
    CHECK(b.gamma.coeff(0) == 2 * a * a);
  }
}

TEST_CASE("crosscheck report") {
  const CrosscheckReport ok = crosscheck(blowup_example(1));
  CHECK(ok.entries.size() == 12);
  CHECK(ok.all_match());
  REQUIRE(ok.cancellation.has_value());
  CHECK(*ok.cancellation == 0);

  // q = 2 keeps the alpha/beta legs and skips gamma/delta with a note
  auto ring = adiaslope::testing::blowup_p2();
  const TestConfigInput q2(ring->divisor({{"H", 3}, {"D", -1}}),
                           ring->divisor({{"H", 3}, {"D", -1}}),
                           BundleData(2, ring->one() + Rational(1) * ring->point()),
                           BundleData(2, ring->one() + ring->divisor({{"H", 1}})));
  const CrosscheckReport skipped = crosscheck(q2);
  CHECK(skipped.all_match());
  int notes = 0;
  for (const auto& entry : skipped.entries) {
    if (!entry.note.empty()) {
      ++notes;
      CHECK(entry.name.substr(0, 5) != "alpha");
      CHECK(entry.name.substr(0, 4) != "beta");
    }
  }
  CHECK(notes == 6);
}

TEST_CASE("cancellation identity on randomized equal-slope data") {
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> sub_rank(1, 3);
  for (int trial = 0; trial < 120; ++trial) {
    const TestConfigInput input = random_equal_slope_input(rng, sub_rank(rng));
    const int n = input.n();
    const int r = input.r();
    const BracketExpansions b = bracket_expansions(input);
    CHECK(Rational(n + r, n + r + 1) * b.beta.coeff(n - 1) * b.gamma.coeff(n - 1) -
              b.alpha.coeff(n - 1) * b.delta.coeff(n - 1) ==
          0);
  }
}

TEST_CASE("equal-slope second order coefficient identity") {
  // ((n+r)!/L^2) a2 = (2/5)(-51 c1S^2 + 78 c2S + 12 c1S.c1E + 26 c1E^2 - 60 c2E)
  //                   + 12 (mu_B(sub) - mu_B(total))   for n = 2, r = 2, q = 1
  std::mt19937 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const TestConfigInput input = random_equal_slope_input(rng, 2);
    const KPolynomial fut = futaki_k_polynomial(input);
    const GradedClass c1S = input.sub().c1();
    const GradedClass c1E = input.total().c1();
    const Rational lhs = Rational(factorial(4)) / input.volume() * fut.coeff(2);
    const Rational quad = -51 * integrate(c1S * c1S) + 78 * integrate(input.sub().chern(2)) +
                          12 * integrate(c1S * c1E) + 26 * integrate(c1E * c1E) -
                          60 * integrate(input.total().chern(2));
    const Rational slope_gap =
        slope(input.sub(), input.base_c1()) - slope(input.total(), input.base_c1());
    CHECK(lhs == Rational(2, 5) * quad + 12 * slope_gap);
  }
}

TEST_CASE("stability verdicts") {
  const StabilityCall stable = stability_verdict(KPolynomial({{2, Rational(-1)}}), 4);
  CHECK(stable.leading_index == 2);
  CHECK(stable.verdict == Verdict::stable_wrt_subbundle);

  const StabilityCall unstable =
      stability_verdict(KPolynomial({{2, Rational(18)}, {0, Rational(-1)}}), 4);
  CHECK(unstable.leading_index == 2);
  CHECK(unstable.verdict == Verdict::unstable_wrt_subbundle);

  const StabilityCall zero = stability_verdict(KPolynomial(), 4);
  CHECK_FALSE(zero.leading_index.has_value());
  CHECK(zero.verdict == Verdict::strictly_semistable_order_exhausted);

  const StabilityCall constant = stability_verdict(KPolynomial({{0, Rational(5)}}), 4);
  CHECK(constant.leading_index == 4);
  CHECK(constant.verdict == Verdict::unstable_wrt_subbundle);

  CHECK_THROWS_AS(stability_verdict(KPolynomial({{5, Rational(1)}}), 4), UnsupportedOrder);
}

TEST_CASE("filtration combination") {
  const KPolynomial p1({{2, Rational(-76, 3)}, {1, Rational(8)}});
  const KPolynomial p2({{1, Rational(3)}});
  const KPolynomial zero;

  CHECK(filtration_combine({{p1, 1}, {zero, 0}}) == p1);
  CHECK(filtration_combine({{p1, 2}, {zero, 0}}) == Rational(2) * p1);
  CHECK(filtration_combine({{p1, 2}, {p2, 1}, {zero, 0}}) == p1 + p2);
  CHECK(filtration_combine({}).is_zero());
  CHECK(filtration_combine({{p1, 1}}).is_zero());

  CHECK_THROWS_AS(filtration_combine({{p1, 1}, {p2, 1}, {zero, 0}}), NonDecreasingWeights);
  CHECK_THROWS_AS(filtration_combine({{p1, 0}, {p2, 1}}), NonDecreasingWeights);
}

TEST_CASE("input validation") {
  auto ring = adiaslope::testing::blowup_p2();
  const BundleData sub(2, ring->one());
  const BundleData quot = trivial_bundle(ring, 1);
  // D is not ample: D^2 = -1
  CHECK_THROWS_AS(TestConfigInput(ring->divisor({{"D", 1}}), ring->divisor({{"H", 3}}),
                                  sub, quot),
                  SemanticError);
  CHECK_THROWS_AS(TestConfigInput(ring->point(), ring->divisor({{"H", 3}}), sub, quot),
                  SemanticError);
}

TEST_CASE("reports are deterministic") {
  const DFReport a = df_report(blowup_example(1));
  const DFReport b = df_report(blowup_example(1));
  CHECK(a.fut_poly == b.fut_poly);
  CHECK(a.a == b.a);
  CHECK(a.normalized == b.normalized);
  CHECK(a.scaled == b.scaled);
}
