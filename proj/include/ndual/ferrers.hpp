#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ndual/monomial.hpp"
#include "ndual/stability.hpp"

namespace ndual {

using LatticePoint = std::pair<Exp, Exp>;  // (row i, column j), 1 <= i <= j

/// A shifted partition (lambda; mu) with i-1 <= mu_i < lambda_i. Row i of
/// the associated diagram is the column interval (mu_i, lambda_i].
struct ShiftedPartition {
  std::vector<Exp> lambda;
  std::vector<Exp> mu;

  ShiftedPartition(std::vector<Exp> l, std::vector<Exp> m) : lambda(std::move(l)), mu(std::move(m)) {
    if (lambda.empty() || lambda.size() != mu.size())
      throw std::invalid_argument("shifted partition needs matching non-empty lambda and mu");
    for (size_t i = 0; i < lambda.size(); ++i) {
      if (!(static_cast<Exp>(i) <= mu[i] && mu[i] < lambda[i]))
        throw std::invalid_argument("shifted partition requires i-1 <= mu_i < lambda_i");
    }
  }

  int rows() const { return static_cast<int>(lambda.size()); }
};

/// Diagram D = { (i,j) : mu_i < j <= lambda_i } in the shifted quadrant,
/// stored as row intervals.
class ShiftedDiagram {
 public:
  explicit ShiftedDiagram(const ShiftedPartition& p) : lambda_(p.lambda), mu_(p.mu) {}

  /// Reconstructs row intervals from a point set; rejects non-interval rows
  /// and points outside the shifted quadrant.
  static ShiftedDiagram from_points(const std::vector<LatticePoint>& pts) {
    if (pts.empty()) throw std::invalid_argument("empty diagram");
    std::map<Exp, std::set<Exp>> rows;
    for (auto& [i, j] : pts) {
      if (!(1 <= i && i <= j)) throw std::invalid_argument("point outside the shifted quadrant");
      rows[i].insert(j);
    }
    Exp h = rows.rbegin()->first;
    if (static_cast<Exp>(rows.size()) != h) throw std::invalid_argument("diagram rows must be 1..h with no gaps");
    std::vector<Exp> lambda, mu;
    for (Exp i = 1; i <= h; ++i) {
      const std::set<Exp>& cols = rows.at(i);
      Exp lo = *cols.begin(), hi = *cols.rbegin();
      if (static_cast<Exp>(cols.size()) != hi - lo + 1) throw std::invalid_argument("diagram row is not an interval");
      if (lo < i) throw std::invalid_argument("point outside the shifted quadrant");
      lambda.push_back(hi);
      mu.push_back(lo - 1);
    }
    return ShiftedDiagram(ShiftedPartition(std::move(lambda), std::move(mu)));
  }

  int rows() const { return static_cast<int>(lambda_.size()); }
  Exp lambda(int i) const { return lambda_[static_cast<size_t>(i - 1)]; }
  Exp mu(int i) const { return mu_[static_cast<size_t>(i - 1)]; }
  const std::vector<Exp>& lambda_vec() const { return lambda_; }
  const std::vector<Exp>& mu_vec() const { return mu_; }

  bool contains(Exp i, Exp j) const {
    return 1 <= i && i <= rows() && mu(static_cast<int>(i)) < j && j <= lambda(static_cast<int>(i));
  }

  Exp max_column() const {
    Exp c = 0;
    for (Exp l : lambda_) c = std::max(c, l);
    return c;
  }

  Exp num_points() const {
    Exp s = 0;
    for (int i = 1; i <= rows(); ++i) s += lambda(i) - mu(i);
    return s;
  }

  /// Points row by row, west to east.
  std::vector<LatticePoint> points() const {
    std::vector<LatticePoint> pts;
    for (int i = 1; i <= rows(); ++i)
      for (Exp j = mu(i) + 1; j <= lambda(i); ++j) pts.push_back({i, j});
    return pts;
  }

  bool operator==(const ShiftedDiagram& o) const { return lambda_ == o.lambda_ && mu_ == o.mu_; }

 private:
  std::vector<Exp> lambda_;
  std::vector<Exp> mu_;
};

inline ShiftedDiagram diagram(const ShiftedPartition& p) { return ShiftedDiagram(p); }

/// Consecutive rows' column intervals intersect.
inline bool is_connected(const ShiftedDiagram& d) {
  for (int i = 1; i < d.rows(); ++i) {
    Exp lo = std::max(d.mu(i), d.mu(i + 1)) + 1;
    Exp hi = std::min(d.lambda(i), d.lambda(i + 1));
    if (lo > hi) return false;
  }
  return true;
}

/// sigma(i,j) = x_i x_j.
inline Monomial specialize_point(const LatticePoint& p, int ambient) {
  return Monomial::variable(ambient, static_cast<int>(p.first)) * Monomial::variable(ambient, static_cast<int>(p.second));
}

/// The shifted stable ideal of a connected diagram, in K[x_1..x_n] with
/// n = max column.
inline MonomialIdeal diagram_ideal(const ShiftedDiagram& d) {
  if (!is_connected(d)) throw std::domain_error("diagram_ideal requires a connected diagram");
  int n = static_cast<int>(d.max_column());
  std::vector<Monomial> gens;
  for (const LatticePoint& p : d.points()) gens.push_back(specialize_point(p, n));
  return MonomialIdeal::from_generators(n, gens);
}

/// Recovers the diagram of a degree-2 ideal: generators x_i x_j map to
/// points (i, j) with i <= j.
inline ShiftedDiagram shifted_diagram_from_ideal(const MonomialIdeal& I) {
  if (I.is_zero() || !I.is_equigenerated() || I.generator_degree() != 2)
    throw std::domain_error("shifted diagram needs an ideal generated in degree 2");
  std::vector<LatticePoint> pts;
  for (const Monomial& g : I.generators()) {
    std::vector<int> s = support(g);
    if (s.size() == 1)
      pts.push_back({s[0], s[0]});
    else
      pts.push_back({s[0], s[1]});
  }
  return ShiftedDiagram::from_points(pts);
}

/// Construction order of the diagram points: the reverse of the removal
/// sequence (only point of the last row / rightmost when lambda_h > t /
/// leftmost when mu_h + 1 < t = lambda_h). Every prefix spans a connected
/// sub-diagram.
inline std::vector<LatticePoint> removal_order_points(const ShiftedDiagram& d) {
  if (!is_connected(d)) throw std::domain_error("removal_order requires a connected diagram");
  std::vector<Exp> lambda = d.lambda_vec(), mu = d.mu_vec();
  std::vector<LatticePoint> removed;
  while (!lambda.empty()) {
    size_t h = lambda.size() - 1;
    if (h == 0) {
      removed.push_back({1, lambda[0]});
      if (lambda[0] - 1 > mu[0])
        lambda[0] -= 1;
      else {
        lambda.clear();
        mu.clear();
      }
      continue;
    }
    Exp t = std::max(mu[h - 1], mu[h]) + 1;  // min of the overlap of rows h-1, h
    if (lambda[h] > t) {
      removed.push_back({static_cast<Exp>(h + 1), lambda[h]});
      lambda[h] -= 1;
    } else if (mu[h] + 1 < t) {
      removed.push_back({static_cast<Exp>(h + 1), mu[h] + 1});
      mu[h] += 1;
    } else {
      removed.push_back({static_cast<Exp>(h + 1), t});
      lambda.pop_back();
      mu.pop_back();
    }
  }
  std::reverse(removed.begin(), removed.end());
  return removed;
}

inline OrderedGenerators removal_order(const ShiftedDiagram& d) {
  MonomialIdeal I = diagram_ideal(d);
  std::vector<Monomial> ord;
  for (const LatticePoint& p : removal_order_points(d)) ord.push_back(specialize_point(p, I.ambient()));
  return OrderedGenerators(I, std::move(ord));
}

struct QuasiBorelMove {
  LatticePoint from;
  LatticePoint to;
  bool horizontal = false;
  Exp length = 0;
  bool good = false;     // directed toward the earlier point of the order
  bool minimal = true;   // no diagram point strictly between

  bool operator<(const QuasiBorelMove& o) const {
    return std::tie(from, to) < std::tie(o.from, o.to);
  }
  bool operator==(const QuasiBorelMove& o) const { return from == o.from && to == o.to; }
};

/// The good moves of a connected diagram: minimal quasi-Borel moves directed
/// toward the earlier endpoint in the removal order.
inline std::vector<QuasiBorelMove> good_moves(const ShiftedDiagram& d, const std::vector<LatticePoint>& order) {
  {
    std::vector<LatticePoint> expect = removal_order_points(d);
    if (order != expect) throw std::invalid_argument("good_moves: order is not the removal order of the diagram");
  }
  std::map<LatticePoint, int> pos;
  for (size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<int>(k);

  std::vector<QuasiBorelMove> out;
  auto orient = [&](LatticePoint a, LatticePoint b, bool horizontal, Exp len) {
    QuasiBorelMove mv;
    mv.horizontal = horizontal;
    mv.length = len;
    mv.good = true;
    if (pos.at(a) < pos.at(b)) {
      mv.from = b;
      mv.to = a;
    } else {
      mv.from = a;
      mv.to = b;
    }
    out.push_back(mv);
  };

  // Horizontal: adjacent points within a row (always length 1).
  for (int i = 1; i <= d.rows(); ++i)
    for (Exp j = d.mu(i) + 1; j < d.lambda(i); ++j) orient({i, j}, {i, j + 1}, true, 1);

  // Vertical: consecutive points within a column.
  std::map<Exp, std::vector<Exp>> columns;  // column -> rows, ascending
  for (const LatticePoint& p : d.points()) columns[p.second].push_back(p.first);
  for (auto& [j, rows] : columns) {
    std::sort(rows.begin(), rows.end());
    for (size_t k = 0; k + 1 < rows.size(); ++k)
      orient({rows[k], j}, {rows[k + 1], j}, false, rows[k + 1] - rows[k]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<QuasiBorelMove> good_moves(const ShiftedDiagram& d) {
  return good_moves(d, removal_order_points(d));
}

/// All horizontal good moves point westward iff mu is non-decreasing.
inline bool all_horizontal_moves_westward(const ShiftedDiagram& d) {
  for (int i = 1; i < d.rows(); ++i)
    if (d.mu(i) > d.mu(i + 1)) return false;
  return true;
}

/// Compatibility of a connected, westward diagram: (i',i) in D and (i,j) in
/// D with i' < i < j force (i, j-1) in D. Throws when an eastward horizontal
/// good move exists (the criterion's precondition).
inline bool is_compatible(const ShiftedDiagram& d) {
  if (!is_connected(d)) throw std::domain_error("is_compatible requires a connected diagram");
  if (!all_horizontal_moves_westward(d))
    throw std::domain_error("is_compatible: eastward horizontal good moves present");
  for (Exp i = 2; i <= d.rows(); ++i) {
    bool column_i_hit_above = false;  // some (i', i) in D with i' < i
    for (Exp ip = 1; ip < i; ++ip)
      if (d.contains(ip, i)) {
        column_i_hit_above = true;
        break;
      }
    if (!column_i_hit_above) continue;
    for (Exp j = d.mu(static_cast<int>(i)) + 1; j <= d.lambda(static_cast<int>(i)); ++j) {
      if (j <= i) continue;
      if (!d.contains(i, j - 1)) return false;
    }
  }
  return true;
}

struct BettiW {
  long long w1 = 0;
  long long w2 = 0;
  Exp h = 0;  // max first index over G(I)
  Exp e = 0;  // max second index over G(I)
};

/// The two cell-contribution counts of a stable degree-2 ideal:
///   w2 = sum_{i in [h]} max(i-2, 0) + sum_{j=h+1}^{e} (|Y_j| - 1)
///   w1 = 2(h-1) + (e-h)
/// with Y_j = { i <= j : x_i x_j in G(I) }. Then beta_i of the dual equals
/// w2*C(2,i) + w1*C(1,i) for i = 1, 2.
inline BettiW betti_w_formula(const MonomialIdeal& I) {
  if (I.is_zero() || !I.is_equigenerated() || I.generator_degree() != 2)
    throw std::domain_error("betti_w_formula needs a degree-2 ideal");
  if (!is_stable(I)) throw std::domain_error("betti_w_formula needs a stable ideal");
  BettiW w;
  std::map<Exp, std::set<Exp>> Y;  // j -> Y_j
  for (const Monomial& g : I.generators()) {
    std::vector<int> s = support(g);
    Exp i = s[0], j = s.size() == 1 ? s[0] : s[1];
    w.h = std::max(w.h, i);
    w.e = std::max(w.e, j);
    Y[j].insert(i);
  }
  // Sanity: the containment chain Y_1 ⊂ ... ⊂ Y_h ⊇ ... ⊇ Y_e.
  for (Exp j = 1; j <= w.e; ++j) {
    const std::set<Exp>& yj = Y[j];
    if (j <= w.h) {
      std::set<Exp> expect;
      for (Exp i = 1; i <= j; ++i) expect.insert(i);
      if (yj != expect) throw std::domain_error("betti_w_formula: Y_j != [j] below the diagonal bound");
    } else if (j > w.h + 1) {
      const std::set<Exp>& prev = Y[j - 1];
      if (!std::includes(prev.begin(), prev.end(), yj.begin(), yj.end()))
        throw std::domain_error("betti_w_formula: Y chain is not non-increasing past h");
    }
  }
  for (Exp i = 1; i <= w.h; ++i) w.w2 += std::max<Exp>(i - 2, 0);
  for (Exp j = w.h + 1; j <= w.e; ++j) w.w2 += static_cast<long long>(Y[j].size()) - 1;
  w.w1 = 2 * (w.h - 1) + (w.e - w.h);
  return w;
}

/// Generalized Ferrers ideal I_{lambda-mu} = (x_i y_j : mu_i < j <= lambda_i)
/// in K[x_1..x_m, y_1..y_{lambda_1}], with lambda non-increasing and
/// 0 <= mu_1 <= ... <= mu_m < lambda_m.
struct BlockedIdeal {
  MonomialIdeal ideal;
  int xblock = 0;
  int yblock = 0;
};

inline BlockedIdeal generalized_ferrers_ideal(const std::vector<Exp>& lambda, const std::vector<Exp>& mu) {
  int m = static_cast<int>(lambda.size());
  if (m == 0 || mu.size() != lambda.size()) throw std::invalid_argument("lambda and mu must be non-empty and match");
  for (int i = 0; i + 1 < m; ++i)
    if (lambda[static_cast<size_t>(i)] < lambda[static_cast<size_t>(i + 1)])
      throw std::invalid_argument("lambda must be non-increasing");
  if (mu[0] < 0) throw std::invalid_argument("mu must be non-negative");
  for (int i = 0; i + 1 < m; ++i)
    if (mu[static_cast<size_t>(i)] > mu[static_cast<size_t>(i + 1)]) throw std::invalid_argument("mu must be non-decreasing");
  if (mu[static_cast<size_t>(m - 1)] >= lambda[static_cast<size_t>(m - 1)])
    throw std::invalid_argument("mu_m < lambda_m is required");
  int ny = static_cast<int>(lambda[0]);
  int n = m + ny;
  std::vector<Monomial> gens;
  for (int i = 1; i <= m; ++i)
    for (Exp j = mu[static_cast<size_t>(i - 1)] + 1; j <= lambda[static_cast<size_t>(i - 1)]; ++j)
      gens.push_back(Monomial::variable(n, i) * Monomial::variable(n, m + static_cast<int>(j)));
  return BlockedIdeal{MonomialIdeal::from_generators(n, gens), m, ny};
}

/// Specialization y_i -> x_i on an ideal in x_1..x_m, y_1..y_n; the result
/// lives in K[x_1..x_k] with k = max(m, n), minimalized.
inline MonomialIdeal specialize(const MonomialIdeal& I, int xblock, int yblock) {
  if (xblock < 0 || yblock < 0 || xblock + yblock != I.ambient())
    throw std::invalid_argument("specialize: block sizes must partition the ambient variables");
  int k = std::max(xblock, yblock);
  std::vector<Monomial> gens;
  for (const Monomial& g : I.generators()) {
    std::vector<Exp> e(static_cast<size_t>(k), 0);
    for (int i = 1; i <= xblock; ++i) e[static_cast<size_t>(i - 1)] += g.exponent(i);
    for (int j = 1; j <= yblock; ++j) e[static_cast<size_t>(j - 1)] += g.exponent(xblock + j);
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal::from_generators(k, gens);
}

inline MonomialIdeal specialize(const BlockedIdeal& b) { return specialize(b.ideal, b.xblock, b.yblock); }

}  // namespace ndual
