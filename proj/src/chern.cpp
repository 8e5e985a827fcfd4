#include "adiaslope/chern.hpp"

#include "adiaslope/errors.hpp"

namespace adiaslope {

BundleData::BundleData(int rank, GradedClass total_chern)
    : rank_(rank), total_chern_(std::move(total_chern)) {
  if (rank_ < 1) {
    throw InvalidRing("bundle rank must be positive");
  }
  const auto& ring = *total_chern_.ring();
  if (total_chern_.component(0) != ring.one()) {
    throw InvalidRing("total Chern class must have degree-0 component 1");
  }
  const int cap = std::min(rank_, ring.dim());
  for (const auto& [deg, v] : total_chern_.components()) {
    if (deg > cap) {
      throw InvalidRing("Chern component beyond min(rank, dim)");
    }
  }
}

BundleData trivial_bundle(const IntersectionRing::Ptr& ring, int rank) {
  return BundleData(rank, ring->one());
}

BundleData line_bundle(const GradedClass& c1) {
  if (!c1.is_homogeneous(1)) {
    throw NonDivisorTwist("line bundle c1 must be homogeneous of degree 1");
  }
  return BundleData(1, c1.ring()->one() + c1);
}

BundleData whitney_sum(const BundleData& a, const BundleData& b) {
  detail::require_same_ring(a.total_chern(), b.total_chern());
  return BundleData(a.rank() + b.rank(), a.total_chern() * b.total_chern());
}

BundleData dual(const BundleData& a) {
  GradedClass total = a.ring()->zero();
  const int cap = std::min(a.rank(), a.ring()->dim());
  for (int i = 0; i <= cap; ++i) {
    total += (i % 2 == 0 ? Rational(1) : Rational(-1)) * a.chern(i);
  }
  return BundleData(a.rank(), total);
}

BundleData tensor_by_line(const BundleData& a, const GradedClass& m) {
  if (!m.is_zero() && !m.is_homogeneous(1)) {
    throw NonDivisorTwist("twisting class must be homogeneous of degree 1");
  }
  detail::require_same_ring(a.total_chern(), m);
  const auto& ring = a.ring();
  const int cap = std::min(a.rank(), ring->dim());
  GradedClass total = ring->zero();
  for (int k = 0; k <= cap; ++k) {
    GradedClass ck = ring->zero();
    for (int i = 0; i <= k; ++i) {
      const Integer b = binomial(a.rank() - i, k - i);
      if (b == 0) {
        continue;
      }
      ck += Rational(b) * (a.chern(i) * m.pow(k - i));
    }
    total += ck;
  }
  return BundleData(a.rank(), total);
}

std::vector<GradedClass> segre_components(const BundleData& a, int jmax) {
  const auto& ring = a.ring();
  std::vector<GradedClass> s;
  s.reserve(jmax + 1);
  s.push_back(ring->one());
  for (int j = 1; j <= jmax; ++j) {
    GradedClass sj = ring->zero();
    for (int i = 1; i <= j; ++i) {
      sj -= a.chern(i) * s[j - i];
    }
    // only the degree-j part survives; higher mixing is already truncated
    s.push_back(sj.component(j));
  }
  return s;
}

GradedClass segre_total(const BundleData& a) {
  GradedClass total = a.ring()->zero();
  for (auto& sj : segre_components(a, a.ring()->dim())) {
    total += sj;
  }
  return total;
}

Rational slope(const BundleData& a, const GradedClass& polarization) {
  const int n = a.ring()->dim();
  return integrate(a.c1() * polarization.pow(n - 1)) / a.rank();
}

Rational euler_characteristic_surface(const BundleData& a, const GradedClass& c1B,
                                      const Rational& c1sq_plus_c2) {
  if (a.ring()->dim() != 2) {
    throw UnsupportedDimension("surface Riemann-Roch requires a 2-dimensional base");
  }
  const GradedClass c1 = a.c1();
  const Rational ch2 = (integrate(c1 * c1) - 2 * integrate(a.chern(2))) / 2;
  return ch2 + integrate(c1 * c1B) / 2 + Rational(a.rank()) * c1sq_plus_c2 / 12;
}

}  // namespace adiaslope
