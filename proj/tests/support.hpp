#ifndef ADIASLOPE_TESTS_SUPPORT_HPP
#define ADIASLOPE_TESTS_SUPPORT_HPP

#include <random>

#include "adiaslope/df.hpp"

namespace adiaslope::testing {

inline IntersectionRing::Ptr blowup_p2() {
  return IntersectionRing::surface({"H", "D"}, {{1, 0}, {0, -1}});
}

inline IntersectionRing::Ptr p2() {
  return IntersectionRing::surface({"H"}, {{1}});
}

inline IntersectionRing::Ptr p1xp1() {
  return IntersectionRing::surface({"A", "B"}, {{0, 1}, {1, 0}});
}

/// The worked blowup example: L = 3H - D, c1(B) = 3H - D, sub of rank 2 with
/// c1 = 0 and the given c2, quot = O(H - 3D).
inline TestConfigInput blowup_example(const Rational& c2_sub) {
  auto ring = blowup_p2();
  const GradedClass L = ring->divisor({{"H", 3}, {"D", -1}});
  const GradedClass c1B = L;
  const BundleData sub(2, ring->one() + c2_sub * ring->point());
  const BundleData quot = line_bundle(ring->divisor({{"H", 1}, {"D", -3}}));
  return TestConfigInput(L, c1B, sub, quot);
}

/// The extension-by-O variant over the plane: sub of rank 2 with c1 = 0 and
/// the given c2, quot trivial, L = c1(B) = 3H.
inline TestConfigInput plane_trivial_quot_example(const Rational& c2_sub) {
  auto ring = p2();
  const GradedClass L = ring->divisor({{"H", 3}});
  const BundleData sub(2, ring->one() + c2_sub * ring->point());
  const BundleData quot = trivial_bundle(ring, 1);
  return TestConfigInput(L, L, sub, quot);
}

struct RandomSurfaceData {
  IntersectionRing::Ptr ring;
  GradedClass L;
  GradedClass c1B;
};

inline RandomSurfaceData random_surface(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> small(-3, 3);
  RandomSurfaceData data;
  switch (pick(rng)) {
    case 0:
      data.ring = blowup_p2();
      break;
    case 1:
      data.ring = p2();
      break;
    default:
      data.ring = p1xp1();
      break;
  }
  const int ndiv = data.ring->basis_size(1);
  std::uniform_int_distribution<int> pos(0, 3);
  while (true) {
    std::map<std::string, Rational> combo;
    for (int i = 0; i < ndiv; ++i) {
      combo[data.ring->basis_names(1)[i]] = pos(rng);
    }
    data.L = data.ring->divisor(combo);
    if (integrate(data.L * data.L) > 0) {
      break;
    }
  }
  std::map<std::string, Rational> combo;
  for (int i = 0; i < ndiv; ++i) {
    combo[data.ring->basis_names(1)[i]] = small(rng);
  }
  data.c1B = data.ring->divisor(combo);
  return data;
}

inline GradedClass random_divisor(std::mt19937& rng, const IntersectionRing::Ptr& ring,
                                  int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> small(lo, hi);
  std::map<std::string, Rational> combo;
  for (const auto& name : ring->basis_names(1)) {
    combo[name] = small(rng);
  }
  return ring->divisor(combo);
}

inline BundleData random_bundle(std::mt19937& rng, const IntersectionRing::Ptr& ring,
                                int rank) {
  std::uniform_int_distribution<int> small(-3, 3);
  GradedClass total = ring->one() + random_divisor(rng, ring);
  if (rank >= 2) {
    total += Rational(small(rng)) * ring->point();
  }
  return BundleData(rank, total);
}

/// Random q = 1 input with the L-slopes of sub and total forced equal by a
/// rational shift of c1(sub) along L.
inline TestConfigInput random_equal_slope_input(std::mt19937& rng, int sub_rank) {
  const RandomSurfaceData data = random_surface(rng);
  const GradedClass quot_c1 = random_divisor(rng, data.ring);
  const GradedClass base = random_divisor(rng, data.ring);
  const Rational L2 = integrate(data.L * data.L);
  const Rational shift =
      (Rational(sub_rank) * integrate(quot_c1 * data.L) - integrate(base * data.L)) / L2;
  const GradedClass sub_c1 = base + shift * data.L;
  std::uniform_int_distribution<int> small(-3, 3);
  GradedClass sub_total = data.ring->one() + sub_c1;
  if (sub_rank >= 2) {
    sub_total += Rational(small(rng)) * data.ring->point();
  }
  return TestConfigInput(data.L, data.c1B, BundleData(sub_rank, sub_total),
                         line_bundle(quot_c1));
}

}  // namespace adiaslope::testing

#endif
