#include "adiaslope/intersection_ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "adiaslope/errors.hpp"

namespace adiaslope {

IntersectionRing::Ptr IntersectionRing::surface(
    const std::vector<std::string>& divisor_names,
    const std::vector<std::vector<Rational>>& intersection_matrix) {
  const size_t d = divisor_names.size();
  if (intersection_matrix.size() != d) {
    throw InvalidRing("intersection matrix size does not match divisor count");
  }
  for (const auto& row : intersection_matrix) {
    if (row.size() != d) {
      throw InvalidRing("intersection matrix is not square");
    }
  }
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (intersection_matrix[i][j] != intersection_matrix[j][i]) {
        throw InvalidRing("intersection matrix is not symmetric");
      }
    }
  }
  std::set<std::string> seen;
  for (const auto& name : divisor_names) {
    if (name == "1" || name == "pt" || name.empty()) {
      throw InvalidRing("reserved or empty divisor name: '" + name + "'");
    }
    if (!seen.insert(name).second) {
      throw InvalidRing("duplicate divisor name: '" + name + "'");
    }
  }

  std::map<std::array<int, 4>, std::vector<Rational>> products;
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) {
      products[{1, static_cast<int>(i), 1, static_cast<int>(j)}] = {intersection_matrix[i][j]};
    }
  }
  return create({{"1"}, divisor_names, {"pt"}}, products, {Rational(1)});
}

IntersectionRing::Ptr IntersectionRing::create(
    std::vector<std::vector<std::string>> basis_by_degree,
    const std::map<std::array<int, 4>, std::vector<Rational>>& products,
    std::vector<Rational> top_integration) {
  if (basis_by_degree.empty() || basis_by_degree.front() != std::vector<std::string>{"1"}) {
    throw InvalidRing("degree-0 basis must be exactly {\"1\"}");
  }
  const int n = static_cast<int>(basis_by_degree.size()) - 1;
  if (n < 1) {
    throw InvalidRing("base dimension must be at least 1");
  }
  const auto& top = basis_by_degree.back();
  const auto pt = std::find(top.begin(), top.end(), "pt");
  if (pt == top.end()) {
    throw InvalidRing("top-degree basis must contain \"pt\"");
  }
  if (top_integration.size() != top.size()) {
    throw InvalidRing("integration functional size does not match top-degree basis");
  }
  if (top_integration[pt - top.begin()] != 1) {
    throw InvalidRing("integration must send \"pt\" to 1");
  }

  auto ring = std::shared_ptr<IntersectionRing>(new IntersectionRing());
  ring->dim_ = n;
  ring->basis_ = std::move(basis_by_degree);
  ring->integration_ = std::move(top_integration);
  ring->zero_top_.assign(ring->basis_.back().size(), Rational(0));

  ring->products_.resize(n);
  for (int d1 = 1; d1 <= n; ++d1) {
    ring->products_[d1 - 1].resize(ring->basis_[d1].size());
    for (size_t i1 = 0; i1 < ring->basis_[d1].size(); ++i1) {
      ring->products_[d1 - 1][i1].resize(n);
      for (int d2 = 1; d1 + d2 <= n; ++d2) {
        ring->products_[d1 - 1][i1][d2 - 1].assign(
            ring->basis_[d2].size(),
            std::vector<Rational>(ring->basis_[d1 + d2].size(), Rational(0)));
      }
    }
  }
  auto assign = [&](int d1, int i1, int d2, int i2, const std::vector<Rational>& value) {
    auto& slot = ring->products_[d1 - 1][i1][d2 - 1][i2];
    if (value.size() != slot.size()) {
      throw InvalidRing("structure constant vector has wrong size");
    }
    slot = value;
  };
  for (const auto& [key, value] : products) {
    const auto [d1, i1, d2, i2] = key;
    if (d1 < 1 || d2 < 1 || d1 > n || d2 > n || d1 + d2 > n) {
      throw InvalidRing("structure constants given for degrees outside the ring");
    }
    if (i1 < 0 || i1 >= static_cast<int>(ring->basis_[d1].size()) || i2 < 0 ||
        i2 >= static_cast<int>(ring->basis_[d2].size())) {
      throw InvalidRing("structure constant index out of range");
    }
    assign(d1, i1, d2, i2, value);
  }
  // Mirror to enforce commutativity; reject contradictory double entries.
  for (const auto& [key, value] : products) {
    const auto [d1, i1, d2, i2] = key;
    const std::array<int, 4> mirrored{d2, i2, d1, i1};
    if (products.count(mirrored)) {
      if (products.at(mirrored) != value) {
        throw InvalidRing("structure constants are not commutative");
      }
    } else {
      assign(d2, i2, d1, i1, value);
    }
  }
  return ring;
}

int IntersectionRing::basis_size(int degree) const {
  if (degree < 0 || degree > dim_) {
    return 0;
  }
  return static_cast<int>(basis_[degree].size());
}

const std::vector<std::string>& IntersectionRing::basis_names(int degree) const {
  static const std::vector<std::string> empty;
  if (degree < 0 || degree > dim_) {
    return empty;
  }
  return basis_[degree];
}

const std::vector<Rational>& IntersectionRing::structure_constants(int d1, int i1, int d2,
                                                                   int i2) const {
  return products_[d1 - 1][i1][d2 - 1][i2];
}

Rational IntersectionRing::integrate_top(const std::vector<Rational>& top) const {
  Rational out = 0;
  for (size_t i = 0; i < top.size(); ++i) {
    out += top[i] * integration_[i];
  }
  return out;
}

bool IntersectionRing::same_basis(const IntersectionRing& other) const {
  return this == &other || (dim_ == other.dim_ && basis_ == other.basis_);
}

GradedClass IntersectionRing::zero() const {
  return GradedClass(shared_from_this(), {});
}

GradedClass IntersectionRing::one() const {
  return scalar(1);
}

GradedClass IntersectionRing::scalar(const Rational& c) const {
  if (c == 0) {
    return zero();
  }
  return GradedClass(shared_from_this(), {{0, {c}}});
}

GradedClass IntersectionRing::point() const {
  return basis_class(dim_, static_cast<int>(basis_[dim_].size()) - 1);
}

GradedClass IntersectionRing::basis_class(int degree, int index) const {
  std::vector<Rational> v(basis_[degree].size(), Rational(0));
  v[index] = 1;
  return GradedClass(shared_from_this(), {{degree, std::move(v)}});
}

GradedClass IntersectionRing::divisor(const std::map<std::string, Rational>& combination) const {
  std::vector<Rational> v(basis_[1].size(), Rational(0));
  for (const auto& [name, coeff] : combination) {
    auto it = std::find(basis_[1].begin(), basis_[1].end(), name);
    if (it == basis_[1].end()) {
      throw SemanticError("undeclared divisor name: '" + name + "'");
    }
    v[it - basis_[1].begin()] += coeff;
  }
  return GradedClass(shared_from_this(), {{1, std::move(v)}});
}

namespace detail {
void require_same_ring(const GradedClass& a, const GradedClass& b) {
  if (!a.ring() || !b.ring() || !a.ring()->same_basis(*b.ring())) {
    throw RingMismatch("classes belong to different intersection rings");
  }
}
}  // namespace detail

GradedClass::GradedClass(IntersectionRing::Ptr ring, std::map<int, std::vector<Rational>> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
  for (const auto& [deg, v] : components_) {
    if (deg < 0 || deg > ring_->dim()) {
      throw InvalidRing("component degree out of range");
    }
    if (static_cast<int>(v.size()) != ring_->basis_size(deg)) {
      throw InvalidRing("component size does not match basis");
    }
  }
  prune();
}

void GradedClass::prune() {
  for (auto it = components_.begin(); it != components_.end();) {
    const bool zero = std::all_of(it->second.begin(), it->second.end(),
                                  [](const Rational& x) { return x == 0; });
    it = zero ? components_.erase(it) : std::next(it);
  }
}

bool GradedClass::is_homogeneous(int degree) const {
  for (const auto& [deg, v] : components_) {
    if (deg != degree) {
      return false;
    }
  }
  return true;
}

GradedClass GradedClass::component(int degree) const {
  auto it = components_.find(degree);
  if (it == components_.end()) {
    return GradedClass(ring_, {});
  }
  return GradedClass(ring_, {{degree, it->second}});
}

GradedClass GradedClass::operator-() const {
  GradedClass out = *this;
  for (auto& [deg, v] : out.components_) {
    for (auto& x : v) {
      x = -x;
    }
  }
  return out;
}

GradedClass& GradedClass::operator+=(const GradedClass& other) {
  detail::require_same_ring(*this, other);
  for (const auto& [deg, v] : other.components_) {
    auto [it, inserted] = components_.try_emplace(deg, v);
    if (!inserted) {
      for (size_t i = 0; i < v.size(); ++i) {
        it->second[i] += v[i];
      }
    }
  }
  prune();
  return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& other) {
  return *this += -other;
}

GradedClass& GradedClass::operator*=(const Rational& c) {
  if (c == 0) {
    components_.clear();
    return *this;
  }
  for (auto& [deg, v] : components_) {
    for (auto& x : v) {
      x *= c;
    }
  }
  return *this;
}

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
  detail::require_same_ring(a, b);
  const auto& ring = *a.ring();
  const int n = ring.dim();
  std::map<int, std::vector<Rational>> out;
  auto accumulate = [&](int deg, int index, const Rational& c) {
    auto [it, inserted] = out.try_emplace(deg, std::vector<Rational>(ring.basis_size(deg), Rational(0)));
    it->second[index] += c;
  };
  for (const auto& [d1, v1] : a.components()) {
    for (const auto& [d2, v2] : b.components()) {
      const int d = d1 + d2;
      if (d > n) {
        continue;
      }
      if (d1 == 0 || d2 == 0) {
        const Rational& c = d1 == 0 ? v1[0] : v2[0];
        const auto& v = d1 == 0 ? v2 : v1;
        for (size_t i = 0; i < v.size(); ++i) {
          if (v[i] != 0) {
            accumulate(d, static_cast<int>(i), c * v[i]);
          }
        }
        continue;
      }
      for (size_t i1 = 0; i1 < v1.size(); ++i1) {
        if (v1[i1] == 0) {
          continue;
        }
        for (size_t i2 = 0; i2 < v2.size(); ++i2) {
          if (v2[i2] == 0) {
            continue;
          }
          const auto& sc = ring.structure_constants(d1, static_cast<int>(i1), d2, static_cast<int>(i2));
          const Rational c = v1[i1] * v2[i2];
          for (size_t t = 0; t < sc.size(); ++t) {
            if (sc[t] != 0) {
              accumulate(d, static_cast<int>(t), c * sc[t]);
            }
          }
        }
      }
    }
  }
  return GradedClass(a.ring(), std::move(out));
}

bool operator==(const GradedClass& a, const GradedClass& b) {
  if (!a.ring_ || !b.ring_) {
    return a.components_.empty() && b.components_.empty();
  }
  return a.ring_->same_basis(*b.ring_) && a.components_ == b.components_;
}

GradedClass GradedClass::pow(int exponent) const {
  GradedClass out = ring_->one();
  for (int i = 0; i < exponent; ++i) {
    out = out * *this;
  }
  return out;
}

std::string GradedClass::to_string() const {
  if (is_zero()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [deg, v] : components_) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) {
        continue;
      }
      if (!first) {
        os << " + ";
      }
      first = false;
      os << format_rational(v[i]) << "*" << ring_->basis_names(deg)[i];
    }
  }
  return os.str();
}

GradedClass mul(const GradedClass& a, const GradedClass& b) {
  return a * b;
}

Rational integrate(const GradedClass& a) {
  const auto& ring = *a.ring();
  auto it = a.components().find(ring.dim());
  if (it == a.components().end()) {
    return 0;
  }
  return ring.integrate_top(it->second);
}

}  // namespace adiaslope
