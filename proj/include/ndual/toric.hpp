#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ndual/dual.hpp"
#include "ndual/ferrers.hpp"
#include "ndual/monomial.hpp"

namespace ndual {

/// A binomial T_alpha - T_beta in the defining ideal of the special fiber
/// ring: two index multisets of equal size with equal generator products.
/// Canonical form: lhs < rhs lexicographically on the sorted sequences.
struct ToricRelation {
  std::vector<int> lhs;  // sorted generator indices, 1-based
  std::vector<int> rhs;

  int degree() const { return static_cast<int>(lhs.size()); }

  bool operator<(const ToricRelation& o) const {
    if (lhs.size() != o.lhs.size()) return lhs.size() < o.lhs.size();
    if (lhs != o.lhs) return lhs < o.lhs;
    return rhs < o.rhs;
  }
  bool operator==(const ToricRelation& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

inline ToricRelation make_relation(std::vector<int> a, std::vector<int> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a == b) throw std::invalid_argument("toric relation needs distinct index multisets");
  if (a.size() != b.size()) throw std::invalid_argument("toric relation degree mismatch");
  if (b < a) std::swap(a, b);
  return ToricRelation{std::move(a), std::move(b)};
}

/// All canonical relations T_alpha - T_beta of degree 2..r with
/// f_alpha = f_beta, enumerated by hashing products of index multisets.
/// Indices refer to positions in the given ordered generator list (the
/// fiber-ring isomorphism is index-preserving, so callers comparing an
/// ideal with its dual must list the dual generators in the base order).
/// Every emitted relation is re-multiplied and checked exactly.
inline std::vector<ToricRelation> fiber_relations(const std::vector<Monomial>& g, int ambient, int r,
                                                  size_t guard = 2000000) {
  if (g.empty()) throw std::domain_error("fiber_relations of the zero ideal");
  for (const Monomial& m : g) {
    if (m.ambient() != ambient) throw std::invalid_argument("fiber_relations ambient mismatch");
    if (m.total_degree() != g.front().total_degree())
      throw std::domain_error("fiber_relations requires an equigenerated ideal");
  }
  if (r < 2) throw std::invalid_argument("fiber_relations needs a degree bound r >= 2");
  int nu = static_cast<int>(g.size());
  std::vector<ToricRelation> out;
  for (int deg = 2; deg <= r; ++deg) {
    std::map<std::vector<Exp>, std::vector<std::vector<int>>> buckets;
    std::vector<int> pick(static_cast<size_t>(deg));
    size_t count = 0;
    auto rec = [&](auto&& self, int pos, int start, const Monomial& prod) -> void {
      if (pos == deg) {
        if (++count > guard) throw std::domain_error("fiber_relations scale guard exceeded");
        buckets[prod.exponents()].push_back(pick);
        return;
      }
      for (int i = start; i <= nu; ++i) {
        pick[static_cast<size_t>(pos)] = i;
        self(self, pos + 1, i, prod * g[static_cast<size_t>(i - 1)]);
      }
    };
    rec(rec, 0, 1, Monomial::unit(ambient));
    for (auto& [prod, multisets] : buckets) {
      for (size_t x = 0; x < multisets.size(); ++x)
        for (size_t y = x + 1; y < multisets.size(); ++y) {
          ToricRelation rel = make_relation(multisets[x], multisets[y]);
          Monomial fa = Monomial::unit(ambient), fb = fa;
          for (int i : rel.lhs) fa = fa * g[static_cast<size_t>(i - 1)];
          for (int i : rel.rhs) fb = fb * g[static_cast<size_t>(i - 1)];
          if (fa != fb) throw std::logic_error("fiber relation fails its defining identity");
          out.push_back(std::move(rel));
        }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<ToricRelation> fiber_relations(const MonomialIdeal& I, int r, size_t guard = 2000000) {
  if (I.is_zero()) throw std::domain_error("fiber_relations of the zero ideal");
  return fiber_relations(I.generators(), I.ambient(), r, guard);
}

/// The isomorphism of special fiber rings acts on relations as the
/// index-preserving renaming T_i -> S_i; transporting a relation set is the
/// identity on index data.
inline std::vector<ToricRelation> transport_relations(const std::vector<ToricRelation>& rels) { return rels; }

/// The symmetric symbol matrix S_lambda: entry (i,j) carries the tag T_{ij}
/// (normalized to i <= j) exactly when x_i y_j lies in the generalized
/// Ferrers ideal; other entries are zero. Requires mu_i >= i-1.
struct SymbolMatrix {
  int size = 0;
  std::vector<std::vector<std::optional<std::pair<int, int>>>> entry;  // entry[i-1][j-1], tag (min,max)

  std::optional<std::pair<int, int>> at(int i, int j) const {
    return entry[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
  }
};

inline SymbolMatrix symmetrized_matrix(const std::vector<Exp>& lambda, const std::vector<Exp>& mu) {
  int m = static_cast<int>(lambda.size());
  if (m == 0 || mu.size() != lambda.size()) throw std::invalid_argument("lambda and mu must be non-empty and match");
  for (int i = 1; i <= m; ++i)
    if (mu[static_cast<size_t>(i - 1)] < i - 1)
      throw std::domain_error("symmetrized_matrix requires mu_i >= i-1");
  int n = 0;
  for (Exp l : lambda) n = std::max<int>(n, static_cast<int>(l));
  SymbolMatrix s;
  s.size = n;
  s.entry.assign(static_cast<size_t>(n), std::vector<std::optional<std::pair<int, int>>>(static_cast<size_t>(n)));
  for (int i = 1; i <= m; ++i) {
    for (Exp j = mu[static_cast<size_t>(i - 1)] + 1; j <= lambda[static_cast<size_t>(i - 1)]; ++j) {
      std::pair<int, int> tag{i, static_cast<int>(j)};
      s.entry[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = tag;
      s.entry[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] = tag;
    }
  }
  return s;
}

/// A 2x2 minor with exactly one vanishing product: the surviving monomial,
/// kept out of the kernel comparison and reported for review.
struct DegenerateMinor {
  std::pair<int, int> rows;
  std::pair<int, int> cols;
  std::pair<std::pair<int, int>, std::pair<int, int>> surviving_product;
};

struct Minors2 {
  std::vector<ToricRelation> binomials;       // pairs of tag pairs, as index multisets via tag order
  std::vector<DegenerateMinor> degenerate;
};

/// All 2x2 minors of the symbol matrix, split into binomial minors (both
/// products of present entries) and degenerate ones. The index multisets in
/// the binomial output refer to positions in `tags`, the sorted list of
/// distinct tags, 1-based; use minors2_as_tag_pairs for the raw tags.
inline std::vector<std::pair<int, int>> symbol_tags(const SymbolMatrix& s) {
  std::set<std::pair<int, int>> tags;
  for (int i = 1; i <= s.size; ++i)
    for (int j = 1; j <= s.size; ++j)
      if (s.at(i, j)) tags.insert(*s.at(i, j));
  return {tags.begin(), tags.end()};
}

inline Minors2 minors2(const SymbolMatrix& s) {
  std::vector<std::pair<int, int>> tags = symbol_tags(s);
  std::map<std::pair<int, int>, int> tag_index;
  for (size_t t = 0; t < tags.size(); ++t) tag_index[tags[t]] = static_cast<int>(t + 1);
  Minors2 out;
  std::set<ToricRelation> seen;
  for (int i = 1; i <= s.size; ++i)
    for (int j = i + 1; j <= s.size; ++j)
      for (int k = 1; k <= s.size; ++k)
        for (int l = k + 1; l <= s.size; ++l) {
          auto a = s.at(i, k), b = s.at(j, l);  // main product
          auto c = s.at(i, l), d = s.at(j, k);  // anti product
          bool main_ok = a && b, anti_ok = c && d;
          if (main_ok && anti_ok) {
            std::vector<int> lhs{tag_index.at(*a), tag_index.at(*b)};
            std::vector<int> rhs{tag_index.at(*c), tag_index.at(*d)};
            std::sort(lhs.begin(), lhs.end());
            std::sort(rhs.begin(), rhs.end());
            if (lhs == rhs) continue;  // the two products coincide; minor is zero
            ToricRelation rel = make_relation(lhs, rhs);
            if (seen.insert(rel).second) out.binomials.push_back(rel);
          } else if (main_ok != anti_ok) {
            DegenerateMinor dm;
            dm.rows = {i, j};
            dm.cols = {k, l};
            dm.surviving_product = main_ok ? std::make_pair(*a, *b) : std::make_pair(*c, *d);
            out.degenerate.push_back(dm);
          }
        }
  std::sort(out.binomials.begin(), out.binomials.end());
  return out;
}

struct SpecFiberReport {
  bool pass = false;
  std::vector<ToricRelation> relations;        // degree-2 kernel of the dual, generator indices
  std::vector<ToricRelation> minors;           // binomial minors, mapped to generator indices
  std::vector<DegenerateMinor> degenerate;     // reported, not compared
  std::vector<ToricRelation> only_relations;   // witnesses of failure
  std::vector<ToricRelation> only_minors;
  MonomialIdeal specialized = MonomialIdeal::zero(0);
  MonomialIdeal dual = MonomialIdeal::zero(0);
};

/// Checks that the degree-2 relations of the Newton dual of the specialized
/// generalized Ferrers ideal coincide with the binomial 2x2 minors of the
/// symmetrized matrix, under the correspondence x_i x_j <-> T_{ij}.
inline SpecFiberReport verify_specfiber(const std::vector<Exp>& lambda, const std::vector<Exp>& mu, int r = 2) {
  SpecFiberReport rep;
  SymbolMatrix S = symmetrized_matrix(lambda, mu);  // validates mu_i >= i-1
  BlockedIdeal F = generalized_ferrers_ideal(lambda, mu);
  rep.specialized = specialize(F);
  // mu_i >= i-1 precludes specialization collisions.
  if (rep.specialized.num_generators() != F.ideal.num_generators())
    throw std::logic_error("specialization collapsed generators despite mu_i >= i-1");
  auto [a, dual] = newton_dual(rep.specialized);
  rep.dual = dual;
  // Dual generators listed in the base order, so relation indices line up
  // with the specialized ideal's generator indices.
  std::vector<Monomial> dual_gens;
  for (const Monomial& m : rep.specialized.generators()) dual_gens.push_back(a.monomial() / m);
  rep.relations = fiber_relations(dual_gens, rep.specialized.ambient(), r);

  // Positions (i,j) of the matrix tags map to generator indices of the
  // specialized ideal via x_i x_j.
  std::vector<std::pair<int, int>> tags = symbol_tags(S);
  std::map<int, int> tag_to_gen;  // tag position (1-based in `tags`) -> generator index
  const std::vector<Monomial>& gens = rep.specialized.generators();
  for (size_t t = 0; t < tags.size(); ++t) {
    Monomial m = Monomial::variable(rep.specialized.ambient(), tags[t].first) *
                 Monomial::variable(rep.specialized.ambient(), tags[t].second);
    int found = -1;
    for (size_t gi = 0; gi < gens.size(); ++gi)
      if (gens[gi] == m) found = static_cast<int>(gi + 1);
    if (found < 0) throw std::logic_error("matrix tag has no matching generator");
    tag_to_gen[static_cast<int>(t + 1)] = found;
  }
  Minors2 mm = minors2(S);
  rep.degenerate = mm.degenerate;
  std::set<ToricRelation> minor_set;
  for (const ToricRelation& rel : mm.binomials) {
    std::vector<int> lhs, rhs;
    for (int t : rel.lhs) lhs.push_back(tag_to_gen.at(t));
    for (int t : rel.rhs) rhs.push_back(tag_to_gen.at(t));
    minor_set.insert(make_relation(lhs, rhs));
  }
  rep.minors = {minor_set.begin(), minor_set.end()};

  std::set<ToricRelation> rel_set;
  for (const ToricRelation& rel : rep.relations)
    if (rel.degree() == 2) rel_set.insert(rel);
  for (const ToricRelation& rel : rel_set)
    if (!minor_set.count(rel)) rep.only_relations.push_back(rel);
  for (const ToricRelation& rel : minor_set)
    if (!rel_set.count(rel)) rep.only_minors.push_back(rel);
  rep.pass = rep.only_relations.empty() && rep.only_minors.empty();
  return rep;
}

}  // namespace ndual
