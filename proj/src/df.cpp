#include "adiaslope/df.hpp"

#include <algorithm>

#include "adiaslope/errors.hpp"

namespace adiaslope {

TestConfigInput::TestConfigInput(GradedClass polarization, GradedClass base_c1, BundleData sub,
                                 BundleData quot)
    : polarization_(std::move(polarization)),
      base_c1_(std::move(base_c1)),
      sub_(std::move(sub)),
      quot_(std::move(quot)),
      total_(whitney_sum(sub_, quot_)) {
  detail::require_same_ring(polarization_, base_c1_);
  detail::require_same_ring(polarization_, sub_.total_chern());
  detail::require_same_ring(polarization_, quot_.total_chern());
  if (!polarization_.is_homogeneous(1) || polarization_.is_zero()) {
    throw SemanticError("polarization must be a nonzero divisor class");
  }
  if (total_.rank() < 2) {
    throw SemanticError("total bundle must have rank at least 2");
  }
  volume_ = integrate(polarization_.pow(ring()->dim()));
  if (volume_ <= 0) {
    throw SemanticError("polarization is not ample on the lattice: L^n <= 0");
  }
}

BracketExpansions bracket_expansions(const TestConfigInput& input) {
  const int n = input.n();
  const int r = input.r();
  const int s = input.s();
  const auto& L = input.polarization();
  const auto& total = input.total();
  const auto& sub = input.sub();

  BracketExpansions out;

  // Brackets over the total space X = P(E), fibre dimension r.
  out.alpha = integrate_total(adiabatic_power(n + r, L, 0, r), total);

  const FiberedClass c1X = total_space_c1(input.base_c1(), total);
  auto b_slices = adiabatic_power(n + r - 1, L, 0, r);
  for (auto& [p, cls] : b_slices) {
    cls = fiber_mul(c1X, cls);
  }
  out.beta = integrate_total(b_slices, total);

  // Brackets over the fixed locus P(S), fibre dimension s. The restriction of
  // the hyperplane class of X is the hyperplane class of P(S); the normal
  // bundle is the h-twist of the quotient, inverted to its total Segre class.
  const FiberedClass segre_normal = fibered_inverse(fibered_chern_of_twist(input.quot(), s));

  auto c_slices = adiabatic_power(n + r + 1, L, 1, s);
  for (auto& [p, cls] : c_slices) {
    cls = fiber_mul(cls, segre_normal);
  }
  out.gamma = integrate_total(c_slices, sub);

  FiberedClass c1X_restricted = lift(input.base_c1() + total.c1(), s);
  c1X_restricted += Rational(r + 1) * hyperplane_power(input.ring(), s);
  const FiberedClass weight_factor = c1X_restricted + lift(input.ring()->scalar(input.q()), s);
  auto d_slices = adiabatic_power(n + r, L, 1, s);
  for (auto& [p, cls] : d_slices) {
    cls = fiber_mul(fiber_mul(weight_factor, cls), segre_normal);
  }
  out.delta = integrate_total(d_slices, sub);

  return out;
}

KPolynomial futaki_k_polynomial(const TestConfigInput& input) {
  const int n = input.n();
  const int r = input.r();
  const auto brackets = bracket_expansions(input);
  if (brackets.alpha.is_zero()) {
    throw DegenerateVolume("volume polynomial <[w_k]^{n+r}, X> vanishes identically");
  }
  const Rational lead = Rational(n + r) / Rational(factorial(n + r + 1));
  const Rational sub = Rational(1) / Rational(factorial(n + r));
  return lead * (brackets.beta * brackets.gamma) - sub * (brackets.alpha * brackets.delta);
}

namespace {

Rational pair_with_polarization(const TestConfigInput& input, const GradedClass& cls, int i) {
  // integrate cls . L^{n-i}; cls is homogeneous of degree i by construction.
  const int n = input.n();
  return integrate(cls * input.polarization().pow(n - i));
}

int sign_pow(int e) {
  return e % 2 == 0 ? 1 : -1;
}

}  // namespace

Rational closed_form_coefficient(const TestConfigInput& input, CoefficientFamily which, int i) {
  if (i < 0 || i > 2) {
    throw UnsupportedOrder("closed forms are available for orders 0..2 only");
  }
  const int n = input.n();
  const int r = input.r();
  const int q = input.q();
  const auto& ring = input.ring();
  const GradedClass c1E = input.total().c1();
  const GradedClass c2E = input.total().chern(2);
  const GradedClass c1S = input.sub().c1();
  const GradedClass c2S = input.sub().chern(2);
  const GradedClass c1Q = input.quot().c1();
  const GradedClass c1B = input.base_c1();

  switch (which) {
    case CoefficientFamily::alpha: {
      if (i == 0) {
        return Rational(binomial(n + r, n)) * pair_with_polarization(input, ring->one(), 0);
      }
      if (i == 1) {
        return -Rational(binomial(n + r, n - 1)) * pair_with_polarization(input, c1E, 1);
      }
      return Rational(binomial(n + r, n - 2)) * pair_with_polarization(input, c1E * c1E - c2E, 2);
    }
    case CoefficientFamily::beta: {
      if (i == 0) {
        return Rational(binomial(n + r - 1, n)) * Rational(r + 1) *
               pair_with_polarization(input, ring->one(), 0);
      }
      if (i == 1) {
        return Rational(binomial(n + r - 1, n - 1)) *
               pair_with_polarization(input, c1B - Rational(r) * c1E, 1);
      }
      return Rational(binomial(n + r - 1, n - 2)) *
             pair_with_polarization(
                 input, -(c1B * c1E) + Rational(r) * (c1E * c1E) - Rational(r + 1) * c2E, 2);
    }
    case CoefficientFamily::gamma: {
      if (q != 1) {
        throw UnsupportedRank("gamma closed forms require a rank-1 quotient");
      }
      if (i == 0) {
        Rational acc = 0;
        for (int j = 0; j <= r - 1; ++j) {
          acc += Rational(sign_pow(r - 1 - j)) * Rational(binomial(r + 1, j));
        }
        return Rational(binomial(n + r + 1, n)) * acc * pair_with_polarization(input, ring->one(), 0);
      }
      if (i == 1) {
        GradedClass acc = ring->zero();
        for (int j = 0; j <= r; ++j) {
          acc += Rational(sign_pow(r - j)) * Rational(binomial(r + 2, j)) *
                 (-c1S + Rational(r - j) * c1Q);
        }
        return Rational(binomial(n + r + 1, n - 1)) * pair_with_polarization(input, acc, 1);
      }
      GradedClass acc = ring->zero();
      for (int j = 0; j <= r + 1; ++j) {
        const int a = r + 1 - j;
        acc += Rational(sign_pow(a)) * Rational(binomial(r + 3, j)) *
               (c1S * c1S - c2S - Rational(a) * (c1S * c1Q) +
                Rational(a * (a - 1), 2) * (c1Q * c1Q));
      }
      return Rational(binomial(n + r + 1, n - 2)) * pair_with_polarization(input, acc, 2);
    }
    case CoefficientFamily::delta: {
      if (q != 1) {
        throw UnsupportedRank("delta closed forms require a rank-1 quotient");
      }
      if (i == 0) {
        Rational acc = 0;
        for (int j = 0; j <= r - 2; ++j) {
          acc += Rational(r + 1) * Rational(sign_pow(r - 2 - j)) * Rational(binomial(r, j));
        }
        for (int j = 0; j <= r - 1; ++j) {
          acc += Rational(sign_pow(r - 1 - j)) * Rational(binomial(r, j));
        }
        return Rational(binomial(n + r, n)) * acc * pair_with_polarization(input, ring->one(), 0);
      }
      if (i == 1) {
        GradedClass acc = ring->zero();
        for (int j = 0; j <= r - 1; ++j) {
          acc += Rational(sign_pow(r - 1 - j)) * Rational(binomial(r + 1, j)) * (c1B + c1E);
        }
        for (int j = 0; j <= r - 1; ++j) {
          acc += Rational(r + 1) * Rational(sign_pow(r - 1 - j)) * Rational(binomial(r + 1, j)) *
                 (-c1S + Rational(r - 1 - j) * c1Q);
        }
        for (int j = 0; j <= r; ++j) {
          acc += Rational(sign_pow(r - j)) * Rational(binomial(r + 1, j)) *
                 (-c1S + Rational(r - j) * c1Q);
        }
        return Rational(binomial(n + r, n - 1)) * pair_with_polarization(input, acc, 1);
      }
      GradedClass acc = ring->zero();
      for (int j = 0; j <= r; ++j) {
        const int a = r - j;
        acc += Rational(r + 1) * Rational(sign_pow(a)) * Rational(binomial(r + 2, j)) *
               (c1S * c1S - c2S - Rational(a) * (c1S * c1Q) +
                Rational(a * (a - 1), 2) * (c1Q * c1Q));
      }
      for (int j = 0; j <= r; ++j) {
        acc += Rational(sign_pow(r - j)) * Rational(binomial(r + 2, j)) *
               ((-c1S + Rational(r - j) * c1Q) * (c1B + c1E));
      }
      for (int j = 0; j <= r + 1; ++j) {
        const int a = r + 1 - j;
        acc += Rational(sign_pow(a)) * Rational(binomial(r + 2, j)) *
               (c1S * c1S - c2S - Rational(a) * (c1S * c1Q) +
                Rational(a * (a - 1), 2) * (c1Q * c1Q));
      }
      return Rational(binomial(n + r, n - 2)) * pair_with_polarization(input, acc, 2);
    }
  }
  throw UnsupportedOrder("unreachable coefficient family");
}

bool CrosscheckReport::all_match() const {
  if (!cancellation_ok) {
    return false;
  }
  return std::all_of(entries.begin(), entries.end(), [](const CrosscheckEntry& e) {
    return e.equal || !e.note.empty();
  });
}

CrosscheckReport crosscheck(const TestConfigInput& input) {
  const int n = input.n();
  const int r = input.r();
  const auto brackets = bracket_expansions(input);
  const KPolynomial* polys[4] = {&brackets.alpha, &brackets.beta, &brackets.gamma,
                                 &brackets.delta};
  const CoefficientFamily families[4] = {CoefficientFamily::alpha, CoefficientFamily::beta,
                                         CoefficientFamily::gamma, CoefficientFamily::delta};
  const char* names[4] = {"alpha", "beta", "gamma", "delta"};

  CrosscheckReport report;
  for (int f = 0; f < 4; ++f) {
    for (int i = 0; i <= 2; ++i) {
      CrosscheckEntry entry;
      entry.name = std::string(names[f]) + "_" + std::to_string(i);
      entry.engine = polys[f]->coeff(n - i);
      try {
        entry.closed_form = closed_form_coefficient(input, families[f], i);
        entry.equal = *entry.engine == *entry.closed_form;
      } catch (const UnsupportedRank&) {
        entry.closed_form.reset();
        entry.note = "skipped: UnsupportedRank";
      }
      report.entries.push_back(std::move(entry));
    }
  }

  if (input.q() == 1 && slope(input.sub(), input.polarization()) ==
                            slope(input.total(), input.polarization())) {
    const Rational value = Rational(n + r) / Rational(n + r + 1) * brackets.beta.coeff(n - 1) *
                               brackets.gamma.coeff(n - 1) -
                           brackets.alpha.coeff(n - 1) * brackets.delta.coeff(n - 1);
    report.cancellation = value;
    report.cancellation_ok = value == 0;
  }
  return report;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::stable_wrt_subbundle:
      return "stable_wrt_subbundle";
    case Verdict::unstable_wrt_subbundle:
      return "unstable_wrt_subbundle";
    case Verdict::strictly_semistable_order_exhausted:
      return "strictly_semistable_order_exhausted";
  }
  return "unknown";
}

StabilityCall stability_verdict(const KPolynomial& poly, int top_power) {
  if (poly.degree() > top_power) {
    throw UnsupportedOrder("polynomial degree exceeds the declared top power");
  }
  StabilityCall call;
  for (int i = 0; i <= top_power; ++i) {
    const Rational c = poly.coeff(top_power - i);
    if (c != 0) {
      call.leading_index = i;
      call.verdict = c < 0 ? Verdict::stable_wrt_subbundle : Verdict::unstable_wrt_subbundle;
      return call;
    }
  }
  call.verdict = Verdict::strictly_semistable_order_exhausted;
  return call;
}

KPolynomial filtration_combine(const std::vector<std::pair<KPolynomial, Rational>>& terms) {
  for (size_t i = 0; i + 1 < terms.size(); ++i) {
    if (!(terms[i].second > terms[i + 1].second)) {
      throw NonDecreasingWeights("filtration weights must be strictly decreasing");
    }
  }
  KPolynomial out;
  for (size_t i = 0; i + 1 < terms.size(); ++i) {
    out += (terms[i].second - terms[i + 1].second) * terms[i].first;
  }
  return out;
}

DFReport df_report(const TestConfigInput& input) {
  const int n = input.n();
  const int r = input.r();
  DFReport report;
  report.n = n;
  report.r = r;
  report.volume = input.volume();
  report.fut_poly = futaki_k_polynomial(input);
  report.slopes.sub_L = slope(input.sub(), input.polarization());
  report.slopes.total_L = slope(input.total(), input.polarization());
  report.slopes.sub_c1B = slope(input.sub(), input.base_c1());
  report.slopes.total_c1B = slope(input.total(), input.base_c1());

  const Rational norm = Rational(factorial(n + r)) / report.volume;
  const Rational scale = Rational(factorial(n + r + 1)) / (2 * report.volume);
  for (int i = 0; i <= 2 * n; ++i) {
    const Rational ai = report.fut_poly.coeff(2 * n - i);
    report.a.push_back(ai);
    report.normalized.push_back(norm * ai);
    report.scaled.push_back(scale * ai);
  }
  const auto call = stability_verdict(report.fut_poly, 2 * n);
  report.leading_index = call.leading_index;
  report.verdict = call.verdict;
  return report;
}

}  // namespace adiaslope
