#ifndef ADIASLOPE_INTERSECTION_RING_HPP
#define ADIASLOPE_INTERSECTION_RING_HPP

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "adiaslope/rational.hpp"

namespace adiaslope {

class GradedClass;

/// Graded intersection ring of the base variety, presented by a named basis
/// per degree and explicit rational structure constants. Values are immutable
/// after construction; all products of total degree > dim vanish.
///
/// Degree 0 is spanned by "1"; the degree-dim basis contains the class "pt"
/// with integral 1 (other top-degree classes may carry declared degrees).
class IntersectionRing : public std::enable_shared_from_this<IntersectionRing> {
 public:
  using Ptr = std::shared_ptr<const IntersectionRing>;

  /// Surface ring with basis {1; divisors; pt}, divisor products given by the
  /// symmetric intersection matrix (in units of pt). Throws InvalidRing on a
  /// non-symmetric or wrongly sized matrix, or on duplicate/reserved names.
  static Ptr surface(const std::vector<std::string>& divisor_names,
                     const std::vector<std::vector<Rational>>& intersection_matrix);

  /// General presentation: named basis per degree (degree 0 must be {"1"},
  /// the top degree must contain "pt" with integration value 1), structure
  /// constants keyed by (d1, i1, d2, i2) for positive degrees with
  /// d1 + d2 <= dim (missing entries are zero, mirror entries are filled in),
  /// and the integration functional on the top-degree basis.
  static Ptr create(std::vector<std::vector<std::string>> basis_by_degree,
                    const std::map<std::array<int, 4>, std::vector<Rational>>& products,
                    std::vector<Rational> top_integration);

  int dim() const { return dim_; }
  int basis_size(int degree) const;
  const std::vector<std::string>& basis_names(int degree) const;

  /// Product of two basis classes as a coefficient vector over the basis in
  /// degree d1 + d2; zero vector when d1 + d2 > dim.
  const std::vector<Rational>& structure_constants(int d1, int i1, int d2, int i2) const;

  /// Integration functional on the top-degree coefficient vector.
  Rational integrate_top(const std::vector<Rational>& top) const;

  bool same_basis(const IntersectionRing& other) const;

  // Class constructors.
  GradedClass zero() const;
  GradedClass one() const;
  GradedClass point() const;
  GradedClass basis_class(int degree, int index) const;
  GradedClass scalar(const Rational& c) const;
  /// Divisor combination by name; throws SemanticError on unknown names.
  GradedClass divisor(const std::map<std::string, Rational>& combination) const;

 private:
  IntersectionRing() = default;

  int dim_ = 0;
  std::vector<std::vector<std::string>> basis_;  // per degree
  // products_[d1][i1][d2 - 1][i2] with d1, d2 >= 1, d1 + d2 <= dim.
  std::vector<std::vector<std::vector<std::vector<std::vector<Rational>>>>> products_;
  std::vector<Rational> integration_;  // over top-degree basis
  std::vector<Rational> zero_top_;
};

/// Possibly inhomogeneous element of an IntersectionRing. Components of
/// degree > dim are never stored; equality and arithmetic are exact.
class GradedClass {
 public:
  GradedClass() = default;
  GradedClass(IntersectionRing::Ptr ring, std::map<int, std::vector<Rational>> components);

  const IntersectionRing::Ptr& ring() const { return ring_; }
  const std::map<int, std::vector<Rational>>& components() const { return components_; }

  bool is_zero() const { return components_.empty(); }
  /// True when every nonzero component has the given degree (zero passes).
  bool is_homogeneous(int degree) const;
  GradedClass component(int degree) const;

  GradedClass operator-() const;
  GradedClass& operator+=(const GradedClass& other);
  GradedClass& operator-=(const GradedClass& other);
  GradedClass& operator*=(const Rational& c);

  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator*(GradedClass a, const Rational& c) { return a *= c; }
  friend GradedClass operator*(const Rational& c, GradedClass a) { return a *= c; }

  /// Ring multiplication, truncated above the ring dimension.
  friend GradedClass operator*(const GradedClass& a, const GradedClass& b);

  friend bool operator==(const GradedClass& a, const GradedClass& b);
  friend bool operator!=(const GradedClass& a, const GradedClass& b) { return !(a == b); }

  GradedClass pow(int exponent) const;

  std::string to_string() const;

 private:
  void prune();
  IntersectionRing::Ptr ring_;
  std::map<int, std::vector<Rational>> components_;
};

GradedClass mul(const GradedClass& a, const GradedClass& b);
Rational integrate(const GradedClass& a);

namespace detail {
void require_same_ring(const GradedClass& a, const GradedClass& b);
}

}  // namespace adiaslope

#endif
