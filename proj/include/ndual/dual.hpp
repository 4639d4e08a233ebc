#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ndual/monomial.hpp"

namespace ndual {

/// The bounding vector a of the a-dual. Valid for an ideal I when every
/// generator exponent vector is componentwise <= a.
struct ExponentBound {
  std::vector<Exp> a;

  explicit ExponentBound(std::vector<Exp> v) : a(std::move(v)) {
    for (Exp e : a)
      if (e < 0) throw std::invalid_argument("bound entries must be non-negative");
  }

  int ambient() const { return static_cast<int>(a.size()); }
  Monomial monomial() const { return Monomial(a); }

  bool operator==(const ExponentBound& o) const { return a == o.a; }
};

inline bool is_a_determined(const MonomialIdeal& I, const ExponentBound& a) {
  if (I.ambient() != a.ambient()) throw std::invalid_argument("bound ambient mismatch");
  Monomial xa = a.monomial();
  for (const Monomial& g : I.generators())
    if (!divides(g, xa)) return false;
  return true;
}

/// The generalized Newton complementary dual: generators x^a / f over f in
/// G(I). The image of a minimal generating set is again minimal.
inline MonomialIdeal generalized_dual(const MonomialIdeal& I, const ExponentBound& a) {
  if (I.is_zero()) throw std::domain_error("generalized_dual of the zero ideal");
  if (!is_a_determined(I, a)) throw std::domain_error("ideal is not a-determined by the given bound");
  Monomial xa = a.monomial();
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const Monomial& g : I.generators()) gens.push_back(xa / g);
  MonomialIdeal D = MonomialIdeal::from_generators(I.ambient(), gens);
  if (D.num_generators() != I.num_generators())
    throw std::logic_error("dual generating set unexpectedly collapsed");
  return D;
}

/// The Newton bound: a(j) = max over G(I) of the j-th exponent.
inline ExponentBound newton_bound(const MonomialIdeal& I) {
  if (I.is_zero()) throw std::domain_error("newton_bound of the zero ideal");
  std::vector<Exp> a(static_cast<size_t>(I.ambient()), 0);
  for (const Monomial& g : I.generators())
    for (int i = 1; i <= I.ambient(); ++i) a[static_cast<size_t>(i - 1)] = std::max(a[static_cast<size_t>(i - 1)], g.exponent(i));
  return ExponentBound(std::move(a));
}

/// Newton complementary dual (a = Newton bound). A single-generator ideal
/// dualizes to the unit ideal; callers can see that via is_unit().
inline std::pair<ExponentBound, MonomialIdeal> newton_dual(const MonomialIdeal& I) {
  ExponentBound a = newton_bound(I);
  return {a, generalized_dual(I, a)};
}

namespace detail {

// Minimal transversals of the generator supports, by iterative expansion
// with divisibility pruning. Equivalent to expanding the prime intersection.
inline std::vector<std::vector<int>> minimal_transversals(const std::vector<std::vector<int>>& supports) {
  std::vector<std::vector<int>> trans = {{}};
  for (const std::vector<int>& sigma : supports) {
    std::vector<std::vector<int>> next;
    for (const std::vector<int>& t : trans) {
      bool hits = false;
      for (int v : sigma)
        if (std::binary_search(t.begin(), t.end(), v)) {
          hits = true;
          break;
        }
      if (hits) {
        next.push_back(t);
      } else {
        for (int v : sigma) {
          std::vector<int> u = t;
          u.insert(std::lower_bound(u.begin(), u.end(), v), v);
          next.push_back(std::move(u));
        }
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& x, const auto& y) {
      if (x.size() != y.size()) return x.size() < y.size();
      return x < y;
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<std::vector<int>> pruned;
    for (const std::vector<int>& u : next) {
      bool dominated = false;
      for (const std::vector<int>& k : pruned) {
        if (std::includes(u.begin(), u.end(), k.begin(), k.end())) {
          dominated = true;
          break;
        }
      }
      if (!dominated) pruned.push_back(u);
    }
    trans = std::move(pruned);
  }
  return trans;
}

}  // namespace detail

/// Alexander dual of a squarefree monomial ideal: the intersection of the
/// support primes, expanded to its minimal generating set. By convention the
/// zero ideal dualizes to the unit ideal and vice versa.
inline MonomialIdeal alexander_dual_squarefree(const MonomialIdeal& I) {
  if (I.is_zero()) return MonomialIdeal::unit_ideal(I.ambient());
  if (I.is_unit()) return MonomialIdeal::zero(I.ambient());
  std::vector<std::vector<int>> supports;
  for (const Monomial& g : I.generators()) {
    if (!g.is_squarefree()) throw std::domain_error("alexander_dual_squarefree: non-squarefree generator");
    supports.push_back(support(g));
  }
  std::vector<Monomial> gens;
  for (const std::vector<int>& t : detail::minimal_transversals(supports)) {
    std::vector<Exp> e(static_cast<size_t>(I.ambient()), 0);
    for (int v : t) e[static_cast<size_t>(v - 1)] = 1;
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal::from_generators(I.ambient(), gens);
}

/// Alexander dual followed by the substitution x_i -> x_i^{a(i)}.
inline MonomialIdeal generalized_alexander_dual_squarefree(const MonomialIdeal& I, const ExponentBound& a) {
  if (!is_a_determined(I, a)) throw std::domain_error("ideal is not a-determined by the given bound");
  MonomialIdeal star = alexander_dual_squarefree(I);
  std::vector<Monomial> gens;
  for (const Monomial& g : star.generators()) {
    std::vector<Exp> e(static_cast<size_t>(I.ambient()), 0);
    for (int i = 1; i <= I.ambient(); ++i) {
      if (g.exponent(i) == 0) continue;
      if (a.a[static_cast<size_t>(i - 1)] == 0)
        throw std::domain_error("substitution exponent 0 for a variable in the dual");
      e[static_cast<size_t>(i - 1)] = detail::checked_mul(g.exponent(i), a.a[static_cast<size_t>(i - 1)]);
    }
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal::from_generators(I.ambient(), gens);
}

/// A finite simple graph on vertices 1..n (no loops).
struct SimpleGraph {
  int n = 0;
  std::set<std::pair<int, int>> edges;  // normalized u < v

  SimpleGraph() = default;
  explicit SimpleGraph(int vertices) : n(vertices) {}

  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (u < 1 || v < 1 || u > n || v > n) throw std::invalid_argument("vertex out of range");
    edges.insert({std::min(u, v), std::max(u, v)});
  }

  bool has_edge(int u, int v) const { return edges.count({std::min(u, v), std::max(u, v)}) > 0; }
};

/// A bipartite graph on parts X = {1..m} and Y = {1..n}; edges cross parts.
struct BipartiteGraph {
  int m = 0;
  int n = 0;
  std::set<std::pair<int, int>> edges;  // (i in [m], j in [n])

  BipartiteGraph() = default;
  BipartiteGraph(int xm, int yn) : m(xm), n(yn) {}

  void add_edge(int i, int j) {
    if (i < 1 || i > m || j < 1 || j > n) throw std::invalid_argument("bipartite edge out of range");
    edges.insert({i, j});
  }

  /// Non-isolated X vertices.
  std::vector<int> x_used() const {
    std::set<int> s;
    for (auto& [i, j] : edges) s.insert(i);
    return {s.begin(), s.end()};
  }

  std::vector<int> y_used() const {
    std::set<int> s;
    for (auto& [i, j] : edges) s.insert(j);
    return {s.begin(), s.end()};
  }

  /// The same graph on the common vertex numbering x_1..x_m, y_1..y_{n}
  /// (y_j becomes vertex m + j).
  SimpleGraph as_simple() const {
    SimpleGraph g(m + n);
    for (auto& [i, j] : edges) g.add_edge(i, m + j);
    return g;
  }
};

inline MonomialIdeal edge_ideal(const SimpleGraph& g) {
  std::vector<Monomial> gens;
  for (auto& [u, v] : g.edges) gens.push_back(Monomial::variable(g.n, u) * Monomial::variable(g.n, v));
  return MonomialIdeal::from_generators(g.n, gens);
}

/// Edge ideal of a bipartite graph in K[x_1..x_m, y_1..y_n].
inline MonomialIdeal edge_ideal(const BipartiteGraph& g) {
  if (g.edges.empty()) throw std::domain_error("edge_ideal of an empty graph");
  return edge_ideal(g.as_simple());
}

/// Complement of a simple graph restricted to its non-isolated vertices:
/// every pair of non-isolated vertices that is not an edge becomes one.
inline SimpleGraph essential_complement(const SimpleGraph& g) {
  if (g.edges.empty()) throw std::domain_error("essential_complement of an empty graph");
  std::set<int> used;
  for (auto& [u, v] : g.edges) {
    used.insert(u);
    used.insert(v);
  }
  SimpleGraph c(g.n);
  std::vector<int> verts(used.begin(), used.end());
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (!g.has_edge(verts[i], verts[j])) c.add_edge(verts[i], verts[j]);
  return c;
}

/// The essential complement of a bipartite graph G is the complement graph
/// of G restricted to X_I ⊔ Y_I. It is not bipartite in general: pairs
/// within X and within Y become edges.
inline SimpleGraph essential_complement(const BipartiteGraph& g) {
  if (g.edges.empty()) throw std::domain_error("essential_complement of an empty graph");
  return essential_complement(g.as_simple());
}

struct AlexDualReport {
  ExponentBound bound;          // Newton bound of the edge ideal
  MonomialIdeal newton_side;    // Newton dual of I(G)
  MonomialIdeal alexander_side; // Alexander dual of I(G^c)
  bool equal = false;
  std::string detail;
};

/// Both sides of the Newton-dual / Alexander-dual comparison for the graph
/// underlying a squarefree degree-2 ideal (complement taken on the
/// non-isolated vertices). For bipartite graphs the two sides must agree.
inline AlexDualReport compare_newton_vs_alexander(const SimpleGraph& g) {
  MonomialIdeal I = edge_ideal(g);
  if (I.is_zero()) throw std::domain_error("comparison needs a nonempty graph");
  auto [a, nd] = newton_dual(I);
  SimpleGraph comp = essential_complement(g);
  MonomialIdeal Ic = comp.edges.empty() ? MonomialIdeal::zero(g.n) : edge_ideal(comp);
  MonomialIdeal ad = alexander_dual_squarefree(Ic);
  AlexDualReport rep{a, nd, ad, nd == ad, ""};
  if (!rep.equal)
    rep.detail = "newton dual has " + std::to_string(nd.num_generators()) + " generators, alexander dual has " +
                 std::to_string(ad.num_generators());
  return rep;
}

inline AlexDualReport verify_alex_dual(const BipartiteGraph& g) {
  if (g.edges.empty()) throw std::domain_error("verify_alex_dual of an empty graph");
  return compare_newton_vs_alexander(g.as_simple());
}

}  // namespace ndual
