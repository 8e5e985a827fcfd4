#include "adiaslope/projective_bundle.hpp"

#include <sstream>

#include "adiaslope/errors.hpp"

namespace adiaslope {

KPolynomial::KPolynomial(std::map<int, Rational> coefficients) : coeffs_(std::move(coefficients)) {
  prune();
}

void KPolynomial::prune() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
  }
}

Rational KPolynomial::coeff(int power) const {
  auto it = coeffs_.find(power);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

int KPolynomial::degree() const {
  return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

KPolynomial KPolynomial::operator-() const {
  KPolynomial out = *this;
  for (auto& [p, c] : out.coeffs_) {
    c = -c;
  }
  return out;
}

KPolynomial& KPolynomial::operator+=(const KPolynomial& other) {
  for (const auto& [p, c] : other.coeffs_) {
    coeffs_[p] += c;
  }
  prune();
  return *this;
}

KPolynomial& KPolynomial::operator-=(const KPolynomial& other) {
  return *this += -other;
}

KPolynomial& KPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [p, x] : coeffs_) {
    x *= c;
  }
  return *this;
}

KPolynomial operator*(const KPolynomial& a, const KPolynomial& b) {
  std::map<int, Rational> out;
  for (const auto& [p1, c1] : a.coeffs_) {
    for (const auto& [p2, c2] : b.coeffs_) {
      out[p1 + p2] += c1 * c2;
    }
  }
  return KPolynomial(std::move(out));
}

std::string KPolynomial::to_string() const {
  if (coeffs_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!first) {
      os << " + ";
    }
    first = false;
    os << format_rational(it->second) << "*k^" << it->first;
  }
  return os.str();
}

FiberedClass::FiberedClass(IntersectionRing::Ptr ring, int fiber_dim)
    : ring_(std::move(ring)), fiber_dim_(fiber_dim) {}

FiberedClass::FiberedClass(int fiber_dim, std::map<int, GradedClass> coefficients)
    : fiber_dim_(fiber_dim), coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) {
    throw InvalidRing("cannot infer ring from empty fibered class; use the ring constructor");
  }
  ring_ = coeffs_.begin()->second.ring();
  for (const auto& [p, c] : coeffs_) {
    detail::require_same_ring(coeffs_.begin()->second, c);
    if (p < 0) {
      throw InvalidRing("negative hyperplane power");
    }
  }
  prune();
}

void FiberedClass::prune() {
  const int cap = fiber_dim_ + ring_->dim();
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    it = (it->second.is_zero() || it->first > cap) ? coeffs_.erase(it) : std::next(it);
  }
}

GradedClass FiberedClass::coeff(int h_power) const {
  auto it = coeffs_.find(h_power);
  return it == coeffs_.end() ? ring_->zero() : it->second;
}

FiberedClass FiberedClass::operator-() const {
  FiberedClass out = *this;
  for (auto& [p, c] : out.coeffs_) {
    c = -c;
  }
  return out;
}

FiberedClass& FiberedClass::operator+=(const FiberedClass& other) {
  if (fiber_dim_ != other.fiber_dim_ || !ring_->same_basis(*other.ring_)) {
    throw RingMismatch("fibered classes live on different projectivizations");
  }
  for (const auto& [p, c] : other.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
    }
  }
  prune();
  return *this;
}

FiberedClass& FiberedClass::operator-=(const FiberedClass& other) {
  return *this += -other;
}

FiberedClass& FiberedClass::operator*=(const Rational& c) {
  for (auto& [p, v] : coeffs_) {
    v *= c;
  }
  prune();
  return *this;
}

bool operator==(const FiberedClass& a, const FiberedClass& b) {
  return a.fiber_dim_ == b.fiber_dim_ && a.ring_->same_basis(*b.ring_) && a.coeffs_ == b.coeffs_;
}

std::string FiberedClass::to_string() const {
  if (coeffs_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : coeffs_) {
    if (!first) {
      os << " + ";
    }
    first = false;
    os << "h^" << p << "*(" << c.to_string() << ")";
  }
  return os.str();
}

FiberedClass lift(const GradedClass& beta, int fiber_dim) {
  if (beta.is_zero()) {
    return FiberedClass(beta.ring(), fiber_dim);
  }
  return FiberedClass(fiber_dim, {{0, beta}});
}

FiberedClass hyperplane_power(const IntersectionRing::Ptr& ring, int fiber_dim, int power) {
  if (power > fiber_dim + ring->dim()) {
    return FiberedClass(ring, fiber_dim);
  }
  return FiberedClass(fiber_dim, {{power, ring->one()}});
}

FiberedClass fiber_mul(const FiberedClass& a, const FiberedClass& b) {
  if (a.fiber_dim() != b.fiber_dim() || !a.ring()->same_basis(*b.ring())) {
    throw RingMismatch("fibered classes live on different projectivizations");
  }
  const int cap = a.fiber_dim() + a.ring()->dim();
  std::map<int, GradedClass> out;
  for (const auto& [p1, c1] : a.coefficients()) {
    for (const auto& [p2, c2] : b.coefficients()) {
      if (p1 + p2 > cap) {
        continue;
      }
      GradedClass prod = c1 * c2;
      if (prod.is_zero()) {
        continue;
      }
      auto [it, inserted] = out.try_emplace(p1 + p2, prod);
      if (!inserted) {
        it->second += prod;
      }
    }
  }
  if (out.empty()) {
    return FiberedClass(a.ring(), a.fiber_dim());
  }
  return FiberedClass(a.fiber_dim(), std::move(out));
}

GradedClass pushforward(const FiberedClass& a, const BundleData& bundle) {
  if (bundle.rank() != a.fiber_dim() + 1) {
    throw RankMismatch("bundle rank does not match fibre dimension + 1");
  }
  const int n = a.ring()->dim();
  const auto segre = segre_components(bundle, n);
  GradedClass out = a.ring()->zero();
  for (const auto& [p, c] : a.coefficients()) {
    const int j = p - a.fiber_dim();
    if (j >= 0 && j <= n) {
      out += segre[j] * c;
    }
  }
  return out;
}

FiberedClass total_space_c1(const GradedClass& base_c1, const BundleData& bundle) {
  const int fiber_dim = bundle.rank() - 1;
  FiberedClass out = lift(base_c1 + bundle.c1(), fiber_dim);
  out += Rational(bundle.rank()) * hyperplane_power(base_c1.ring(), fiber_dim);
  return out;
}

std::map<int, FiberedClass> adiabatic_power(int m, const GradedClass& polarization,
                                            const Rational& shift, int fiber_dim) {
  const auto& ring = polarization.ring();
  const int n = ring->dim();
  const int hcap = fiber_dim + n;
  std::map<int, FiberedClass> out;
  // (h + k.L + shift)^m: choose L p times, h hpow times, shift the rest.
  for (int p = 0; p <= std::min(m, n); ++p) {
    GradedClass lp = polarization.pow(p);
    if (lp.is_zero()) {
      continue;
    }
    FiberedClass slice(ring, fiber_dim);
    for (int hpow = 0; hpow <= std::min(m - p, hcap); ++hpow) {
      const int rest = m - p - hpow;
      Rational c = Rational(binomial(m, p)) * Rational(binomial(m - p, hpow)) *
                   rational_pow(shift, rest);
      if (c == 0) {
        continue;
      }
      slice += c * FiberedClass(fiber_dim, {{hpow, lp}});
    }
    if (!slice.is_zero()) {
      out.emplace(p, std::move(slice));
    }
  }
  return out;
}

KPolynomial integrate_total(const std::map<int, FiberedClass>& classes_by_k,
                            const BundleData& bundle) {
  std::map<int, Rational> coeffs;
  for (const auto& [p, cls] : classes_by_k) {
    coeffs[p] = integrate(pushforward(cls, bundle));
  }
  return KPolynomial(std::move(coeffs));
}

FiberedClass fibered_chern_of_twist(const BundleData& bundle, int fiber_dim) {
  const auto& ring = bundle.ring();
  FiberedClass total = lift(ring->one(), fiber_dim);
  const int q = bundle.rank();
  for (int k = 1; k <= q; ++k) {
    for (int i = 0; i <= k; ++i) {
      const Integer b = binomial(q - i, k - i);
      if (b == 0) {
        continue;
      }
      GradedClass ci = bundle.chern(i) * Rational(b);
      if (ci.is_zero()) {
        continue;
      }
      if (k - i <= fiber_dim + ring->dim()) {
        total += FiberedClass(fiber_dim, {{k - i, ci}});
      }
    }
  }
  return total;
}

FiberedClass fibered_inverse(const FiberedClass& total) {
  const auto& ring = total.ring();
  if (total.coeff(0).component(0) != ring->one()) {
    throw InvalidRing("fibered inverse requires degree-0 part 1");
  }
  FiberedClass one = lift(ring->one(), total.fiber_dim());
  FiberedClass nilpotent = total - one;
  FiberedClass out = one;
  FiberedClass power = one;
  Rational sign = 1;
  while (true) {
    power = fiber_mul(power, nilpotent);
    if (power.is_zero()) {
      break;
    }
    sign = -sign;
    out += sign * power;
  }
  return out;
}

}  // namespace adiaslope
