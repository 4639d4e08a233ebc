#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ndual/dual.hpp"
#include "ndual/ferrers.hpp"
#include "ndual/monomial.hpp"
#include "ndual/stability.hpp"

namespace ndual {

/// One cell of a labeled complex. Facets live one dimension down and carry
/// the incidence sign; vertices index into the 0-cell layer.
struct Cell {
  int dim = 0;
  Monomial label = Monomial::unit(0);
  std::string name;
  std::vector<std::pair<int, int>> facets;  // (index in layer dim-1, sign)
  std::vector<int> vertices;                // ascending indices of 0-cells
};

/// A polyhedral cell complex with monomial labels and incidence signs,
/// including the unique (-1)-cell. Cells are stored combinatorially.
class LabeledCellComplex {
 public:
  explicit LabeledCellComplex(int ambient) : n_(ambient) {
    Cell empty;
    empty.dim = -1;
    empty.label = Monomial::unit(ambient);
    empty.name = "empty";
    layers_.push_back({empty});
  }

  int ambient() const { return n_; }

  /// Highest dimension carrying a cell; -1 for the bare empty complex.
  int dimension() const { return static_cast<int>(layers_.size()) - 2; }

  const std::vector<Cell>& cells(int dim) const {
    static const std::vector<Cell> none;
    size_t idx = static_cast<size_t>(dim + 1);
    return idx < layers_.size() ? layers_[idx] : none;
  }

  int add_cell(int dim, Cell c) {
    if (dim < 0) throw std::invalid_argument("cells have dimension >= 0");
    if (layers_.size() < static_cast<size_t>(dim) + 1)
      throw std::invalid_argument("cells must be added in dimension order");
    if (layers_.size() == static_cast<size_t>(dim) + 1) layers_.push_back({});
    c.dim = dim;
    if (dim == 0) {
      c.facets = {{0, 1}};
      c.vertices = {static_cast<int>(layers_[1].size())};
    }
    for (auto& [q, s] : c.facets) {
      if (q < 0 || q >= static_cast<int>(cells(dim - 1).size())) throw std::invalid_argument("facet index out of range");
      if (s != 1 && s != -1) throw std::invalid_argument("incidence signs are +1 or -1");
    }
    layers_[static_cast<size_t>(dim + 1)].push_back(std::move(c));
    return static_cast<int>(layers_[static_cast<size_t>(dim + 1)].size()) - 1;
  }

  /// Test hook for fault injection: flips one incidence sign.
  void flip_sign(int dim, int cell_index, size_t facet_position) {
    Cell& c = layers_.at(static_cast<size_t>(dim + 1)).at(static_cast<size_t>(cell_index));
    c.facets.at(facet_position).second *= -1;
  }

  /// Test hook for fault injection: overwrites one label.
  void override_label(int dim, int cell_index, Monomial label) {
    layers_.at(static_cast<size_t>(dim + 1)).at(static_cast<size_t>(cell_index)).label = std::move(label);
  }

  std::vector<int> f_vector() const {
    std::vector<int> f;
    for (int d = 0; d <= dimension(); ++d) f.push_back(static_cast<int>(cells(d).size()));
    return f;
  }

  long long euler_characteristic() const {
    long long chi = 0;
    for (int d = 0; d <= dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(cells(d).size());
    return chi;
  }

  /// The label law: every cell's label is the lcm of its vertices' labels.
  bool check_label_law() const {
    for (int d = 0; d <= dimension(); ++d) {
      for (const Cell& c : cells(d)) {
        if (c.vertices.empty()) return false;
        Monomial l = Monomial::unit(n_);
        for (int v : c.vertices) l = lcm(l, cells(0)[static_cast<size_t>(v)].label);
        if (l != c.label) return false;
      }
    }
    return true;
  }

  std::vector<Monomial> vertex_labels() const {
    std::vector<Monomial> out;
    for (const Cell& c : cells(0)) out.push_back(c.label);
    return out;
  }

  /// Subcomplex of faces whose labels divide beta. Closed under faces by
  /// the label law.
  LabeledCellComplex restrict_leq(const Monomial& beta) const {
    if (beta.ambient() != n_) throw std::invalid_argument("restrict_leq ambient mismatch");
    LabeledCellComplex sub(n_);
    std::vector<std::vector<int>> remap(layers_.size());  // old index -> new index or -1
    remap[0] = {0};
    for (int d = 0; d <= dimension(); ++d) {
      remap[static_cast<size_t>(d + 1)].assign(cells(d).size(), -1);
      for (size_t i = 0; i < cells(d).size(); ++i) {
        const Cell& c = cells(d)[i];
        if (!divides(c.label, beta)) continue;
        Cell copy = c;
        for (auto& [q, s] : copy.facets) {
          int nq = remap[static_cast<size_t>(d)][static_cast<size_t>(q)];
          if (nq < 0) throw std::logic_error("restriction is not closed under faces");
          q = nq;
        }
        for (int& v : copy.vertices) {
          int nv = remap[1][static_cast<size_t>(v)];
          if (nv < 0) throw std::logic_error("restriction is not closed under faces");
          v = nv;
        }
        remap[static_cast<size_t>(d + 1)][i] = sub.add_cell(d, std::move(copy));
      }
    }
    return sub;
  }

 private:
  int n_;
  std::vector<std::vector<Cell>> layers_;  // layers_[d+1] = cells of dimension d
};

namespace detail {

inline std::string index_set_str(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace detail

/// The Borel-cube complex of a strongly stable equigenerated ideal I: cells
/// C(m, sigma) for m in G(I) and sigma ⊆ supp_1(m), with the vertex set
/// { m -> tau : tau ⊆ sigma }. The cell C(f, sigma) is labeled by
/// (x^a / f) * x^sigma. Incidence signs: with sigma = {i_1 < ... < i_k},
/// the apex-side facet C(f, sigma \ {i_j}) gets (-1)^(j-1) and the parallel
/// facet C(f -> {i_j}, sigma \ {i_j}) the negated sign.
inline LabeledCellComplex build_borel_complex(const MonomialIdeal& I, const ExponentBound& a) {
  if (!is_strongly_stable(I)) throw std::domain_error("build_borel_complex: ideal is not strongly stable");
  if (!is_a_determined(I, a)) throw std::domain_error("build_borel_complex: ideal is not a-determined");
  Monomial xa = a.monomial();
  LabeledCellComplex X(I.ambient());

  std::map<std::pair<std::vector<Exp>, std::vector<int>>, int> cell_index;  // (apex, sigma) -> index in its layer
  std::map<std::vector<Exp>, int> vertex_index;
  std::map<std::vector<int>, std::pair<std::vector<Exp>, std::vector<int>>> seen_vertex_sets;

  for (const Monomial& m : I.generators()) {
    int idx = X.add_cell(0, Cell{0, xa / m, m.str(), {}, {}});
    vertex_index[m.exponents()] = idx;
    cell_index[{m.exponents(), {}}] = idx;
    seen_vertex_sets[{idx}] = {m.exponents(), {}};
  }

  // Subsets of supp_1(m), grouped by size so facets already exist.
  int max_dim = 0;
  for (const Monomial& m : I.generators())
    max_dim = std::max(max_dim, static_cast<int>(m.is_unit() ? 0 : support_stats(m).supp1.size()));

  for (int k = 1; k <= max_dim; ++k) {
    for (const Monomial& m : I.generators()) {
      std::vector<int> s1 = m.is_unit() ? std::vector<int>{} : support_stats(m).supp1;
      int r = static_cast<int>(s1.size());
      if (r < k) continue;
      std::vector<int> pick(static_cast<size_t>(k));
      auto emit = [&](const std::vector<int>& sigma) {
        Cell c;
        c.dim = k;
        c.label = (xa / m) * [&] {
          Monomial x_sigma = Monomial::unit(I.ambient());
          for (int i : sigma) x_sigma = x_sigma * Monomial::variable(I.ambient(), i);
          return x_sigma;
        }();
        c.name = "C(" + m.str() + ";" + detail::index_set_str(sigma) + ")";
        // Vertex set { m -> tau : tau subseteq sigma }; strong stability keeps
        // every one of them inside G(I).
        for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
          std::vector<int> tau;
          for (int b = 0; b < k; ++b)
            if (mask & (size_t{1} << b)) tau.push_back(sigma[static_cast<size_t>(b)]);
          Monomial v = borel_move(m, tau);
          auto it = vertex_index.find(v.exponents());
          if (it == vertex_index.end())
            throw std::logic_error("borel move left the generating set; ideal is not strongly stable");
          c.vertices.push_back(it->second);
        }
        std::sort(c.vertices.begin(), c.vertices.end());
        c.vertices.erase(std::unique(c.vertices.begin(), c.vertices.end()), c.vertices.end());
        if (c.vertices.size() != (size_t{1} << k))
          throw std::logic_error("cell vertex set collapsed; (m, sigma) does not span a cube");
        for (int j = 1; j <= k; ++j) {
          std::vector<int> tau;
          for (int b = 0; b < k; ++b)
            if (b != j - 1) tau.push_back(sigma[static_cast<size_t>(b)]);
          int sign = (j % 2 == 1) ? 1 : -1;  // (-1)^(j-1)
          Monomial moved = borel_move(m, {sigma[static_cast<size_t>(j - 1)]});
          auto apex_it = cell_index.find({m.exponents(), tau});
          auto moved_it = cell_index.find({moved.exponents(), tau});
          if (apex_it == cell_index.end() || moved_it == cell_index.end())
            throw std::logic_error("missing facet cell in the Borel complex");
          c.facets.push_back({apex_it->second, sign});
          c.facets.push_back({moved_it->second, -sign});
        }
        auto inserted = seen_vertex_sets.insert({c.vertices, {m.exponents(), sigma}});
        if (!inserted.second) throw std::logic_error("two (m, sigma) pairs share a vertex set");
        int idx = X.add_cell(k, std::move(c));
        cell_index[{m.exponents(), sigma}] = idx;
      };
      auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == k) {
          emit(pick);
          return;
        }
        for (int t = start; t < r; ++t) {
          pick[static_cast<size_t>(pos)] = s1[static_cast<size_t>(t)];
          self(self, pos + 1, t + 1);
        }
      };
      rec(rec, 0, 0);
    }
  }
  return X;
}

/// The planar complex of a compatible diagram: 0-cells are the diagram
/// points labeled x^a/(x_i x_j); 1-cells are the good moves (horizontal
/// label x^a/x_i, westward; vertical label x^a/x_j, northward); 2-cells are
/// the width-1 rectangles anchored at their lower-right corner, labeled x^a,
/// with counterclockwise boundary orientation.
inline LabeledCellComplex build_planar_complex(const ShiftedDiagram& d, const ExponentBound& a) {
  if (!is_compatible(d)) throw std::domain_error("build_planar_complex: diagram is not compatible");
  if (a.ambient() < d.max_column())
    throw std::invalid_argument("bound ambient is smaller than the diagram's column span");
  int n = a.ambient();
  Monomial xa = a.monomial();
  for (const LatticePoint& p : d.points())
    if (!divides(specialize_point(p, n), xa))
      throw std::domain_error("build_planar_complex: specialized ideal is not a-determined");

  LabeledCellComplex X(n);
  std::vector<LatticePoint> order = removal_order_points(d);
  std::map<LatticePoint, int> vertex_of;
  for (const LatticePoint& p : order) {
    Cell c;
    c.dim = 0;
    c.label = xa / specialize_point(p, n);
    c.name = "P(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
    vertex_of[p] = X.add_cell(0, std::move(c));
  }

  std::map<std::pair<LatticePoint, LatticePoint>, int> edge_of;  // (tail, head)
  for (const QuasiBorelMove& mv : good_moves(d, order)) {
    Cell c;
    c.dim = 1;
    if (mv.horizontal) {
      if (mv.to.second + 1 != mv.from.second)
        throw std::logic_error("horizontal good move is not westward of length 1");
      c.label = xa / Monomial::variable(n, static_cast<int>(mv.from.first));
      c.name = "H(" + std::to_string(mv.from.first) + "," + std::to_string(mv.from.second) + ")";
    } else {
      if (mv.to.first >= mv.from.first) throw std::logic_error("vertical good move is not northward");
      c.label = xa / Monomial::variable(n, static_cast<int>(mv.from.second));
      c.name = "V(" + std::to_string(mv.from.first) + "," + std::to_string(mv.from.second) + "->" +
               std::to_string(mv.to.first) + ")";
    }
    int head = vertex_of.at(mv.to), tail = vertex_of.at(mv.from);
    c.facets = {{head, 1}, {tail, -1}};
    c.vertices = {std::min(head, tail), std::max(head, tail)};
    if (c.label != lcm(X.cells(0)[static_cast<size_t>(head)].label, X.cells(0)[static_cast<size_t>(tail)].label))
      throw std::logic_error("edge label disagrees with the lcm of its endpoints");
    edge_of[{mv.from, mv.to}] = X.add_cell(1, std::move(c));
  }

  // Rectangles: anchored at a lower-right corner with both a horizontal and
  // a vertical good move. Right side spans rows [t0, i] in column j; the
  // left side walks the points of column j-1 in the same row range.
  for (const LatticePoint& p : order) {
    Exp i = p.first, j = p.second;
    if (!d.contains(i, j - 1)) continue;
    Exp t0 = 0;
    bool above = false;
    for (Exp r = i - 1; r >= 1; --r)
      if (d.contains(r, j)) {
        t0 = r;
        above = true;
        break;
      }
    if (!above) continue;
    Cell c;
    c.dim = 2;
    c.label = xa;
    c.name = "R(" + std::to_string(i) + "," + std::to_string(j) + ")";
    // Counterclockwise boundary in diagram coordinates (row i downward):
    // right side up (+), top westward (+), left side down (-), bottom
    // eastward (-). Edge orientations are westward/northward, so the left
    // chain and the bottom edge enter with sign -1.
    auto edge = [&](LatticePoint from, LatticePoint to) {
      auto it = edge_of.find({from, to});
      if (it == edge_of.end()) throw std::logic_error("rectangle boundary edge is missing");
      return it->second;
    };
    c.facets.push_back({edge({i, j}, {t0, j}), 1});        // e2: right, northward
    c.facets.push_back({edge({t0, j}, {t0, j - 1}), 1});   // e3: top, westward
    c.facets.push_back({edge({i, j}, {i, j - 1}), -1});    // e1: bottom, westward
    std::vector<Exp> left_rows;
    for (Exp r = t0; r <= i; ++r)
      if (d.contains(r, j - 1)) left_rows.push_back(r);
    if (left_rows.empty() || left_rows.front() != t0 || left_rows.back() != i)
      throw std::logic_error("rectangle left side lost its corners");
    for (size_t k = 0; k + 1 < left_rows.size(); ++k)
      c.facets.push_back({edge({left_rows[k + 1], j - 1}, {left_rows[k], j - 1}), -1});
    std::set<int> verts{vertex_of.at({i, j}), vertex_of.at({t0, j})};
    for (Exp r : left_rows) verts.insert(vertex_of.at({r, j - 1}));
    c.vertices = {verts.begin(), verts.end()};
    X.add_cell(2, std::move(c));
  }

  if (!X.check_label_law()) throw std::logic_error("planar complex violates the label law");
  return X;
}

}  // namespace ndual
