#pragma once

#include <random>
#include <vector>

#include "ndual/dual.hpp"
#include "ndual/monomial.hpp"
#include "ndual/stability.hpp"

namespace ndual {

/// Seeded generators for the property suites. All draws are deterministic
/// for a fixed engine state.
struct IdealSampler {
  std::mt19937_64 rng;

  explicit IdealSampler(uint64_t seed) : rng(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return static_cast<int>(std::uniform_int_distribution<int>(lo, hi)(rng));
  }

  Monomial monomial(int n, Exp degree) {
    std::vector<Exp> e(static_cast<size_t>(n), 0);
    for (Exp k = 0; k < degree; ++k) e[static_cast<size_t>(uniform(0, n - 1))] += 1;
    return Monomial(std::move(e));
  }

  /// A nonzero, non-unit monomial ideal with at most max_gens generators of
  /// degree at most max_deg.
  MonomialIdeal ideal(int n, int max_gens, Exp max_deg) {
    while (true) {
      std::vector<Monomial> gens;
      int count = uniform(1, max_gens);
      for (int k = 0; k < count; ++k) {
        Exp d = uniform(1, static_cast<int>(max_deg));
        gens.push_back(monomial(n, d));
      }
      MonomialIdeal I = MonomialIdeal::from_generators(n, gens);
      if (!I.is_zero() && !I.is_unit()) return I;
    }
  }

  MonomialIdeal equigenerated_ideal(int n, int max_gens, Exp degree) {
    std::vector<Monomial> gens;
    int count = uniform(1, max_gens);
    for (int k = 0; k < count; ++k) gens.push_back(monomial(n, degree));
    return MonomialIdeal::from_generators(n, gens);
  }

  /// The Newton bound plus a small random slack per coordinate.
  ExponentBound bound_for(const MonomialIdeal& I, Exp max_slack = 2) {
    std::vector<Exp> a = newton_bound(I).a;
    for (Exp& e : a) e += uniform(0, static_cast<int>(max_slack));
    return ExponentBound(std::move(a));
  }

  /// Strongly stable equigenerated ideal with at most max_gens generators,
  /// built as the closure of random seeds.
  MonomialIdeal strongly_stable(int n, Exp degree, int max_gens) {
    while (true) {
      std::vector<Monomial> seeds;
      int count = uniform(1, 2);
      for (int k = 0; k < count; ++k) seeds.push_back(monomial(n, degree));
      MonomialIdeal I = stable_closure(seeds, StabilityVariant::StronglyStable);
      if (I.num_generators() <= max_gens) return I;
    }
  }

  MonomialIdeal stable_degree2(int n, int max_gens) {
    while (true) {
      std::vector<Monomial> seeds;
      int count = uniform(1, 3);
      for (int k = 0; k < count; ++k) seeds.push_back(monomial(n, 2));
      MonomialIdeal I = stable_closure(seeds, StabilityVariant::Stable);
      if (I.num_generators() <= max_gens) return I;
    }
  }
};

}  // namespace ndual
