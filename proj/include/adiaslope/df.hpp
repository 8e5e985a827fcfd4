#ifndef ADIASLOPE_DF_HPP
#define ADIASLOPE_DF_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adiaslope/chern.hpp"
#include "adiaslope/projective_bundle.hpp"

namespace adiaslope {

/// Data of the test configuration induced by a subbundle: base polarization L,
/// anticanonical class of the base, the subbundle and its quotient. The total
/// bundle is their Whitney sum. Construction validates rank(total) >= 2 and
/// L^n > 0 on the lattice.
class TestConfigInput {
 public:
  TestConfigInput(GradedClass polarization, GradedClass base_c1, BundleData sub, BundleData quot);

  const IntersectionRing::Ptr& ring() const { return polarization_.ring(); }
  const GradedClass& polarization() const { return polarization_; }
  const GradedClass& base_c1() const { return base_c1_; }
  const BundleData& sub() const { return sub_; }
  const BundleData& quot() const { return quot_; }
  const BundleData& total() const { return total_; }

  int n() const { return ring()->dim(); }
  int r() const { return total_.rank() - 1; }  // fibre dim of the total space
  int q() const { return quot_.rank(); }
  int s() const { return sub_.rank() - 1; }  // fibre dim over the sub locus
  /// L^n as a rational number.
  const Rational& volume() const { return volume_; }

 private:
  GradedClass polarization_;
  GradedClass base_c1_;
  BundleData sub_;
  BundleData quot_;
  BundleData total_;
  Rational volume_;
};

/// The four bracket expansions entering the localized Futaki formula, each a
/// degree-<=n polynomial in k:
///   alpha = <[w_k]^{n+r}, X>
///   beta  = <c1(X).[w_k]^{n+r-1}, X>
///   gamma = <([w_k]+1)^{n+r+1}.s(H (x) Q), [P(S)]>
///   delta = <(c1(X)+q).([w_k]+1)^{n+r}.s(H (x) Q), [P(S)]>
struct BracketExpansions {
  KPolynomial alpha;
  KPolynomial beta;
  KPolynomial gamma;
  KPolynomial delta;
};

BracketExpansions bracket_expansions(const TestConfigInput& input);

/// The full adiabatic expansion [w_k]^{n+r} Fut(sigma) as an exact polynomial
/// of degree <= 2n in k:
///   (n+r)/(n+r+1)! . beta.gamma  -  1/(n+r)! . alpha.delta.
/// Throws DegenerateVolume when the volume polynomial alpha vanishes.
KPolynomial futaki_k_polynomial(const TestConfigInput& input);

enum class CoefficientFamily { alpha, beta, gamma, delta };

/// Closed-form value of the i-th coefficient (i = 0..2) of the chosen bracket,
/// evaluated exactly as an intersection number (the remaining L-power pairing
/// is applied internally). gamma/delta require q = 1 (UnsupportedRank
/// otherwise); i > 2 throws UnsupportedOrder.
Rational closed_form_coefficient(const TestConfigInput& input, CoefficientFamily which, int i);

struct CrosscheckEntry {
  std::string name;  // e.g. "alpha_0"
  std::optional<Rational> engine;
  std::optional<Rational> closed_form;
  bool equal = false;
  std::string note;  // e.g. "skipped: UnsupportedRank"
};

struct CrosscheckReport {
  std::vector<CrosscheckEntry> entries;
  /// (n+r)/(n+r+1) . beta1.gamma1 - alpha1.delta1, evaluated when the
  /// L-slopes of sub and total agree; must vanish.
  std::optional<Rational> cancellation;
  bool cancellation_ok = true;

  bool all_match() const;
};

/// Compares the engine's bracket expansions against the closed forms at
/// orders 0..2. Mismatches are reported as data, not errors.
CrosscheckReport crosscheck(const TestConfigInput& input);

enum class Verdict {
  stable_wrt_subbundle,
  unstable_wrt_subbundle,
  strictly_semistable_order_exhausted,
};

std::string to_string(Verdict v);

struct StabilityCall {
  /// First index i (coefficient of k^{top_power - i}) with a nonzero value;
  /// empty for the zero polynomial.
  std::optional<int> leading_index;
  Verdict verdict = Verdict::strictly_semistable_order_exhausted;
};

/// Sign test on the leading coefficient: negative leading value means the
/// test configuration destabilizes nothing (stable verdict), positive means
/// unstable, identically zero exhausts every order.
StabilityCall stability_verdict(const KPolynomial& poly, int top_power);

/// Weighted filtration combination: for terms (P_i, w_i) with w strictly
/// decreasing, returns sum_{i<d-1} (w_i - w_{i+1}) P_i; the final term is the
/// full-bundle one and contributes nothing. Throws NonDecreasingWeights.
KPolynomial filtration_combine(const std::vector<std::pair<KPolynomial, Rational>>& terms);

struct SlopeSet {
  Rational sub_L;
  Rational total_L;
  Rational sub_c1B;
  Rational total_c1B;
};

struct DFReport {
  KPolynomial fut_poly;
  /// a_i = coefficient of k^{2n-i}, i = 0..2n.
  std::vector<Rational> a;
  /// (n+r)!/L^n . a_i.
  std::vector<Rational> normalized;
  /// (n+r+1)!/(2 L^n) . a_i.
  std::vector<Rational> scaled;
  SlopeSet slopes;
  std::optional<int> leading_index;
  Verdict verdict = Verdict::strictly_semistable_order_exhausted;
  Rational volume;  // L^n
  int n = 0;
  int r = 0;
};

DFReport df_report(const TestConfigInput& input);

}  // namespace adiaslope

#endif
