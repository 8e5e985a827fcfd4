#ifndef ADIASLOPE_PROJECTIVE_BUNDLE_HPP
#define ADIASLOPE_PROJECTIVE_BUNDLE_HPP

#include <map>

#include "adiaslope/chern.hpp"
#include "adiaslope/intersection_ring.hpp"

namespace adiaslope {

/// Exact rational polynomial in the adiabatic parameter k. Zero coefficients
/// are not stored.
class KPolynomial {
 public:
  KPolynomial() = default;
  explicit KPolynomial(std::map<int, Rational> coefficients);

  const std::map<int, Rational>& coefficients() const { return coeffs_; }
  Rational coeff(int power) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Highest power with a nonzero coefficient; -1 for the zero polynomial.
  int degree() const;

  KPolynomial operator-() const;
  KPolynomial& operator+=(const KPolynomial& other);
  KPolynomial& operator-=(const KPolynomial& other);
  KPolynomial& operator*=(const Rational& c);
  friend KPolynomial operator+(KPolynomial a, const KPolynomial& b) { return a += b; }
  friend KPolynomial operator-(KPolynomial a, const KPolynomial& b) { return a -= b; }
  friend KPolynomial operator*(KPolynomial a, const Rational& c) { return a *= c; }
  friend KPolynomial operator*(const Rational& c, KPolynomial a) { return a *= c; }
  friend KPolynomial operator*(const KPolynomial& a, const KPolynomial& b);
  friend bool operator==(const KPolynomial& a, const KPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const KPolynomial& a, const KPolynomial& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void prune();
  std::map<int, Rational> coeffs_;
};

/// Polynomial in the relative hyperplane class h of a projectivization with
/// fibre dimension fiber_dim, with GradedClass coefficients. Hyperplane powers
/// above fiber_dim + dim(base) are dropped (they die under pushforward).
class FiberedClass {
 public:
  FiberedClass(IntersectionRing::Ptr ring, int fiber_dim);
  FiberedClass(int fiber_dim, std::map<int, GradedClass> coefficients);

  int fiber_dim() const { return fiber_dim_; }
  const IntersectionRing::Ptr& ring() const { return ring_; }
  const std::map<int, GradedClass>& coefficients() const { return coeffs_; }
  GradedClass coeff(int h_power) const;
  bool is_zero() const { return coeffs_.empty(); }

  FiberedClass operator-() const;
  FiberedClass& operator+=(const FiberedClass& other);
  FiberedClass& operator-=(const FiberedClass& other);
  FiberedClass& operator*=(const Rational& c);
  friend FiberedClass operator+(FiberedClass a, const FiberedClass& b) { return a += b; }
  friend FiberedClass operator-(FiberedClass a, const FiberedClass& b) { return a -= b; }
  friend FiberedClass operator*(FiberedClass a, const Rational& c) { return a *= c; }
  friend FiberedClass operator*(const Rational& c, FiberedClass a) { return a *= c; }

  friend bool operator==(const FiberedClass& a, const FiberedClass& b);
  friend bool operator!=(const FiberedClass& a, const FiberedClass& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void prune();
  IntersectionRing::Ptr ring_;
  int fiber_dim_ = 0;
  std::map<int, GradedClass> coeffs_;
};

/// pi^* pullback: the class beta placed at h^0.
FiberedClass lift(const GradedClass& beta, int fiber_dim);
/// h^power as a FiberedClass.
FiberedClass hyperplane_power(const IntersectionRing::Ptr& ring, int fiber_dim, int power = 1);

/// Convolution in h with base-ring multiplication of coefficients, truncated
/// per the type invariants. Throws RingMismatch on mismatched fibre dimension
/// or base ring.
FiberedClass fiber_mul(const FiberedClass& a, const FiberedClass& b);

/// Pushforward to the base: h^{s+j} . pi^* beta -> s_j(bundle) . beta for
/// j >= 0 with s = fiber_dim; lower h-powers contribute zero.
/// Throws RankMismatch unless bundle.rank == fiber_dim + 1.
GradedClass pushforward(const FiberedClass& a, const BundleData& bundle);

/// c1 of the total space of the projectivization:
/// rank(bundle) . h + lift(base_c1 + c1(bundle)).
FiberedClass total_space_c1(const GradedClass& base_c1, const BundleData& bundle);

/// Expands (h + k.polarization + shift)^m, keyed by k-power. shift = 0 gives
/// the plain adiabatic class power, shift = 1 the equivariantly shifted one.
std::map<int, FiberedClass> adiabatic_power(int m, const GradedClass& polarization,
                                            const Rational& shift, int fiber_dim);

/// Integrates each k-slice over the projectivization of the bundle:
/// coefficient at k^p is integrate(pushforward(classes_by_k[p])).
KPolynomial integrate_total(const std::map<int, FiberedClass>& classes_by_k,
                            const BundleData& bundle);

/// Total Chern class of bundle (x) O(h) on a projectivization with the given
/// fibre dimension: c_k = sum_i binom(rank - i, k - i) c_i(bundle) h^{k-i}.
FiberedClass fibered_chern_of_twist(const BundleData& bundle, int fiber_dim);

/// Truncated multiplicative inverse of a fibered total class with invertible
/// (scalar 1) degree-0 part: the total Segre class when fed a total Chern
/// class.
FiberedClass fibered_inverse(const FiberedClass& total);

}  // namespace adiaslope

#endif
