#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ndual/monomial.hpp"

namespace ndual {

enum class StabilityVariant { Stable, StronglyStable };

namespace detail {

// All single exchange moves of the given variant applied to m, staying in
// the non-negative orthant. Stable: m*x_i/x_max for i < max(m). Strongly
// stable: m*x_j/x_i for x_i | m and j < i.
inline std::vector<Monomial> exchange_moves(const Monomial& m, StabilityVariant v) {
  std::vector<Monomial> out;
  if (m.is_unit()) return out;
  SupportStats st = support_stats(m);
  if (v == StabilityVariant::Stable) {
    int mx = st.max_index;
    for (int i = 1; i < mx; ++i)
      out.push_back(m * Monomial::variable(m.ambient(), i) / Monomial::variable(m.ambient(), mx));
  } else {
    for (int i : st.supp)
      for (int j = 1; j < i; ++j)
        out.push_back(m * Monomial::variable(m.ambient(), j) / Monomial::variable(m.ambient(), i));
  }
  return out;
}

}  // namespace detail

/// Stability predicates. The strict form requires an equigenerated ideal and
/// checks that every exchange move of a generator lands in G(I) (equivalent
/// to the membership definition in that case). The permissive form checks
/// membership in I instead and accepts non-equigenerated input.
inline bool is_stable(const MonomialIdeal& I, bool permissive = false) {
  if (I.is_zero() || I.is_unit()) throw std::domain_error("stability of the zero or unit ideal");
  if (!permissive && !I.is_equigenerated())
    throw std::domain_error("is_stable requires an equigenerated ideal (use permissive mode otherwise)");
  for (const Monomial& g : I.generators())
    for (const Monomial& mv : detail::exchange_moves(g, StabilityVariant::Stable))
      if (!I.contains(mv)) return false;
  return true;
}

inline bool is_strongly_stable(const MonomialIdeal& I, bool permissive = false) {
  if (I.is_zero() || I.is_unit()) throw std::domain_error("stability of the zero or unit ideal");
  if (!permissive && !I.is_equigenerated())
    throw std::domain_error("is_strongly_stable requires an equigenerated ideal (use permissive mode otherwise)");
  for (const Monomial& g : I.generators())
    for (const Monomial& mv : detail::exchange_moves(g, StabilityVariant::StronglyStable))
      if (!I.contains(mv)) return false;
  return true;
}

/// m -> sigma: multiply by x_{i-1}/x_i for every i in sigma. Requires
/// sigma ⊆ supp_1(m).
inline Monomial borel_move(const Monomial& m, const std::vector<int>& sigma) {
  std::set<int> s(sigma.begin(), sigma.end());
  if (s.size() != sigma.size()) throw std::invalid_argument("borel_move: repeated index");
  for (int i : s) {
    if (i < 2 || i > m.ambient() || m.exponent(i) == 0)
      throw std::invalid_argument("borel_move: sigma must be a subset of supp_1(m)");
  }
  std::vector<Exp> e = m.exponents();
  for (int i : s) {
    e[static_cast<size_t>(i - 1)] -= 1;
    e[static_cast<size_t>(i - 2)] += 1;
  }
  return Monomial(std::move(e));
}

/// A chosen linear order on the minimal generators of an ideal.
struct OrderedGenerators {
  MonomialIdeal ideal;
  std::vector<Monomial> order;

  OrderedGenerators(MonomialIdeal I, std::vector<Monomial> ord) : ideal(std::move(I)), order(std::move(ord)) {
    std::vector<Monomial> a = ideal.generators(), b = order;
    auto cmp = [](const Monomial& x, const Monomial& y) { return x.exponents() < y.exponents(); };
    std::sort(a.begin(), a.end(), cmp);
    std::sort(b.begin(), b.end(), cmp);
    if (a != b) throw std::invalid_argument("order is not a permutation of the generators");
  }

  int size() const { return static_cast<int>(order.size()); }
};

/// Generators in co-lexicographic order (ascending). Requires equigenerated.
inline OrderedGenerators colex_order(const MonomialIdeal& I) {
  if (!I.is_equigenerated()) throw std::domain_error("colex_order requires an equigenerated ideal");
  std::vector<Monomial> ord = I.generators();
  std::sort(ord.begin(), ord.end(), [](const Monomial& a, const Monomial& b) { return colex_compare(a, b) < 0; });
  return OrderedGenerators(I, std::move(ord));
}

struct LinearQuotientStep {
  int k = 0;                    // 1-based position in the order
  std::vector<int> colon_vars;  // variable indices generating the colon
};

struct LinearQuotientResult {
  bool success = true;
  std::vector<LinearQuotientStep> steps;  // one entry per k >= 2 while successful
  int fail_index = 0;                     // first failing k (0 when success)
  std::string offending;                  // a non-variable colon generator at the failure
};

/// For each k >= 2 computes ((f_1..f_{k-1}) : f_k) and succeeds when every
/// such colon is generated by variables. Reports the first failure.
inline LinearQuotientResult check_linear_quotients(const OrderedGenerators& og) {
  LinearQuotientResult res;
  const std::vector<Monomial>& f = og.order;
  for (size_t k = 1; k < f.size(); ++k) {
    MonomialIdeal prefix = MonomialIdeal::from_generators(og.ideal.ambient(),
                                                          std::vector<Monomial>(f.begin(), f.begin() + static_cast<long>(k)));
    MonomialIdeal colon = colon_ideal(prefix, f[k]);
    LinearQuotientStep step;
    step.k = static_cast<int>(k + 1);
    for (const Monomial& g : colon.generators()) {
      if (g.total_degree() != 1) {
        res.success = false;
        res.fail_index = static_cast<int>(k + 1);
        res.offending = g.str();
        return res;
      }
      step.colon_vars.push_back(support(g)[0]);
    }
    std::sort(step.colon_vars.begin(), step.colon_vars.end());
    res.steps.push_back(std::move(step));
  }
  return res;
}

enum class XSetMode { StrictLower, AnyOther };

/// X-set of a generator f of I: variables x_j such that some exchange
/// f*x_i/x_j lands in G(I). StrictLower requires i < j; AnyOther only i != j.
inline std::vector<int> x_set(const MonomialIdeal& I, const Monomial& f, XSetMode mode) {
  bool found = false;
  for (const Monomial& g : I.generators())
    if (g == f) found = true;
  if (!found) throw std::invalid_argument("x_set: f is not a generator of I");
  std::set<int> out;
  for (int j = 1; j <= I.ambient(); ++j) {
    if (f.exponent(j) == 0) continue;
    int hi = mode == XSetMode::StrictLower ? j - 1 : I.ambient();
    for (int i = 1; i <= hi; ++i) {
      if (i == j) continue;
      Monomial cand = f * Monomial::variable(I.ambient(), i) / Monomial::variable(I.ambient(), j);
      for (const Monomial& g : I.generators()) {
        if (g == cand) {
          out.insert(j);
          break;
        }
      }
      if (out.count(j)) break;
    }
  }
  return {out.begin(), out.end()};
}

/// Order-restricted variant: only exchanges landing on generators that come
/// strictly before position k (1-based) in the given order count.
inline std::vector<int> x_set(const OrderedGenerators& og, int k, XSetMode mode) {
  if (k < 1 || k > og.size()) throw std::invalid_argument("x_set: position out of range");
  const Monomial& f = og.order[static_cast<size_t>(k - 1)];
  std::set<int> out;
  for (int j = 1; j <= og.ideal.ambient(); ++j) {
    if (f.exponent(j) == 0) continue;
    int hi = mode == XSetMode::StrictLower ? j - 1 : og.ideal.ambient();
    for (int i = 1; i <= hi && !out.count(j); ++i) {
      if (i == j) continue;
      Monomial cand = f * Monomial::variable(og.ideal.ambient(), i) / Monomial::variable(og.ideal.ambient(), j);
      for (int p = 0; p < k - 1; ++p) {
        if (og.order[static_cast<size_t>(p)] == cand) {
          out.insert(j);
          break;
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

/// Sta(T): the smallest (strongly) stable ideal containing the equigenerated
/// set T, computed as the closure of T under the variant's exchange moves.
inline MonomialIdeal stable_closure(const std::vector<Monomial>& seed, StabilityVariant variant) {
  if (seed.empty()) throw std::invalid_argument("stable_closure of an empty set");
  Exp d = seed[0].total_degree();
  for (const Monomial& m : seed)
    if (m.total_degree() != d) throw std::domain_error("stable_closure requires an equigenerated set");
  int n = seed[0].ambient();
  std::set<std::vector<Exp>> seen;
  std::vector<Monomial> work = seed, all;
  for (const Monomial& m : seed)
    if (seen.insert(m.exponents()).second) all.push_back(m);
  while (!work.empty()) {
    Monomial m = work.back();
    work.pop_back();
    for (const Monomial& mv : detail::exchange_moves(m, variant)) {
      if (seen.insert(mv.exponents()).second) {
        all.push_back(mv);
        work.push_back(mv);
      }
    }
  }
  return MonomialIdeal::from_generators(n, all);
}

/// StaG(J): the smallest seed set whose closure is J. Requires J closed
/// under the variant (i.e. (strongly) stable). The seeds are exactly the
/// generators not reachable from another generator by a single move.
inline std::vector<Monomial> minimal_closure_generators(const MonomialIdeal& J, StabilityVariant variant) {
  bool closed = variant == StabilityVariant::Stable ? is_stable(J) : is_strongly_stable(J);
  if (!closed) throw std::domain_error("minimal_closure_generators: ideal is not closed under the variant");
  std::set<std::vector<Exp>> reached;
  for (const Monomial& g : J.generators())
    for (const Monomial& mv : detail::exchange_moves(g, variant)) reached.insert(mv.exponents());
  std::vector<Monomial> seeds;
  for (const Monomial& g : J.generators())
    if (!reached.count(g.exponents())) seeds.push_back(g);
  return seeds;
}

}  // namespace ndual
