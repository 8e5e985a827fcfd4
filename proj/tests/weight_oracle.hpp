#ifndef ADIASLOPE_TESTS_WEIGHT_ORACLE_HPP
#define ADIASLOPE_TESTS_WEIGHT_ORACLE_HPP

#include "adiaslope/df.hpp"

namespace adiaslope::testing {

/// Independent recomputation of the stability polynomial from the weight and
/// dimension expansions on the central fibre (the Riemann-Roch route over the
/// base, summed over symmetric powers). No bracket, pushforward or Segre
/// machinery from the library is involved beyond lattice pairings.
///
/// Supports n = 2, rank(sub) = 2, rank(quot) = 1. Returns a1*b0 - a0*b1 in k,
/// where h(j,k) = a0 j^4 + a1 j^3 + ... counts sections of j(H + kL) on the
/// central fibre and w(j,k) = b0 j^5 + b1 j^4 + ... is the total weight of the
/// circle action on them. The engine's polynomial equals -2 (n+r)! times it.
KPolynomial weight_route_df_numerator(const TestConfigInput& input, const Rational& chi_O);

}  // namespace adiaslope::testing

#endif
