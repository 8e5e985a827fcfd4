#ifndef ADIASLOPE_CHERN_HPP
#define ADIASLOPE_CHERN_HPP

#include <vector>

#include "adiaslope/intersection_ring.hpp"

namespace adiaslope {

/// A vector bundle on the base, known through its rank and total Chern class.
/// The degree-0 component of total_chern is exactly 1 and components beyond
/// degree min(rank, dim) are absent.
class BundleData {
 public:
  BundleData(int rank, GradedClass total_chern);

  int rank() const { return rank_; }
  const GradedClass& total_chern() const { return total_chern_; }
  const IntersectionRing::Ptr& ring() const { return total_chern_.ring(); }

  /// The degree-i Chern class c_i (zero beyond min(rank, dim)).
  GradedClass chern(int i) const { return total_chern_.component(i); }
  GradedClass c1() const { return chern(1); }

  friend bool operator==(const BundleData& a, const BundleData& b) {
    return a.rank_ == b.rank_ && a.total_chern_ == b.total_chern_;
  }
  friend bool operator!=(const BundleData& a, const BundleData& b) { return !(a == b); }

 private:
  int rank_;
  GradedClass total_chern_;
};

/// Trivial bundle of the given rank.
BundleData trivial_bundle(const IntersectionRing::Ptr& ring, int rank);
/// Line bundle with the given first Chern class (pure degree 1 or zero).
BundleData line_bundle(const GradedClass& c1);

/// c(a + b) = c(a) c(b); ranks add. Throws RingMismatch.
BundleData whitney_sum(const BundleData& a, const BundleData& b);

/// c_i(a*) = (-1)^i c_i(a).
BundleData dual(const BundleData& a);

/// Twist by a line bundle with c1 = m (pure degree 1):
/// c_k(a (x) m) = sum_i binom(rank - i, k - i) c_i(a) m^{k-i}.
/// Throws NonDivisorTwist when m is not homogeneous of degree 1.
BundleData tensor_by_line(const BundleData& a, const GradedClass& m);

/// Total Segre class: the truncated inverse of the total Chern class,
/// s_0 = 1 and c(a) s(a) = 1 up to the ring dimension.
GradedClass segre_total(const BundleData& a);
/// Segre components s_0..s_jmax as homogeneous classes.
std::vector<GradedClass> segre_components(const BundleData& a, int jmax);

/// mu_L(a) = c1(a) . L^{n-1} / rank.
Rational slope(const BundleData& a, const GradedClass& polarization);

/// Riemann-Roch on a surface: chi(a) = int ch2 + (1/2) int c1(a).c1B
/// + rank * (int c1(B)^2 + c2(B)) / 12, with ch2 = (c1^2 - 2 c2)/2.
/// Throws UnsupportedDimension unless the ring has dimension 2.
Rational euler_characteristic_surface(const BundleData& a, const GradedClass& c1B,
                                      const Rational& c1sq_plus_c2);

}  // namespace adiaslope

#endif
