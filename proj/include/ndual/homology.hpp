#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "ndual/cellcomplex.hpp"
#include "ndual/linalg.hpp"
#include "ndual/monomial.hpp"

namespace ndual {

/// A bounded chain complex with integer boundary matrices, exact over Q.
/// Degrees run lowest_degree .. lowest_degree + dims.size() - 1; boundary(k)
/// maps the k-th stored degree down to the (k-1)-st.
struct ChainComplex {
  int lowest_degree = -1;
  std::vector<int> dims;
  std::vector<IntMatrix> boundaries;  // boundaries[k] : degree k -> degree k-1, k >= 1; boundaries[0] unused (empty)

  void validate() const {
    if (dims.empty()) return;
    if (boundaries.size() != dims.size()) throw std::invalid_argument("chain complex shape mismatch");
    for (size_t k = 1; k < dims.size(); ++k) {
      const IntMatrix& b = boundaries[k];
      if (b.rows != dims[k - 1] || b.cols != dims[k]) throw std::invalid_argument("boundary matrix shape mismatch");
    }
    for (size_t k = 2; k < dims.size(); ++k) {
      const IntMatrix& hi = boundaries[k];
      const IntMatrix& lo = boundaries[k - 1];
      for (int i = 0; i < lo.rows; ++i)
        for (int j = 0; j < hi.cols; ++j) {
          long long s = 0;
          for (int t = 0; t < hi.rows; ++t)
            s = detail::checked_add(s, detail::checked_mul(lo.at(i, t), hi.at(t, j)));
          if (s != 0) throw std::domain_error("chain complex composite boundary is nonzero");
        }
    }
  }
};

/// Reduced homology dimensions per stored degree:
/// dim H_k = dims[k] - rank d_k - rank d_{k+1}.
inline std::vector<long long> reduced_homology_dims(const ChainComplex& c, Field field = Field::Q) {
  c.validate();
  size_t n = c.dims.size();
  std::vector<long long> h(n, 0);
  std::vector<int> rk(n + 1, 0);
  for (size_t k = 1; k < n; ++k) rk[k] = rank_over(c.boundaries[k], field);
  for (size_t k = 0; k < n; ++k) h[k] = c.dims[k] - rk[k] - rk[k + 1];
  return h;
}

/// Chain complex of a labeled cell complex over the base field (labels are
/// dropped; signs are kept). Includes the empty cell in degree -1, so the
/// homology computed from it is reduced.
inline ChainComplex chain_complex_of(const LabeledCellComplex& X) {
  ChainComplex c;
  c.lowest_degree = -1;
  for (int d = -1; d <= X.dimension(); ++d) c.dims.push_back(static_cast<int>(X.cells(d).size()));
  c.boundaries.resize(c.dims.size());
  for (int d = 0; d <= X.dimension(); ++d) {
    IntMatrix m(static_cast<int>(X.cells(d - 1).size()), static_cast<int>(X.cells(d).size()));
    const std::vector<Cell>& cells = X.cells(d);
    for (size_t j = 0; j < cells.size(); ++j)
      for (auto& [q, s] : cells[j].facets) m.at(q, static_cast<int>(j)) += s;
    c.boundaries[static_cast<size_t>(d + 1)] = std::move(m);
  }
  return c;
}

namespace detail {

// Augmented simplicial chain complex on faces given as sorted vertex lists
// (the empty face is implicit in degree -1). `faces` must be closed under
// subsets and contain the empty face's children, i.e. at least one vertex.
inline ChainComplex simplicial_chain_complex(const std::vector<std::vector<int>>& faces) {
  std::map<std::vector<int>, int> index;
  int top = -1;
  for (const std::vector<int>& f : faces) top = std::max(top, static_cast<int>(f.size()) - 1);
  std::vector<std::vector<std::vector<int>>> by_dim(static_cast<size_t>(top + 2));
  by_dim[0].push_back({});
  for (const std::vector<int>& f : faces)
    if (!f.empty()) by_dim[f.size()].push_back(f);
  for (auto& layer : by_dim) {
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
  }
  ChainComplex c;
  c.lowest_degree = -1;
  for (auto& layer : by_dim) c.dims.push_back(static_cast<int>(layer.size()));
  c.boundaries.resize(c.dims.size());
  for (size_t d = 1; d < by_dim.size(); ++d) {
    std::map<std::vector<int>, int> below;
    for (size_t i = 0; i < by_dim[d - 1].size(); ++i) below[by_dim[d - 1][i]] = static_cast<int>(i);
    IntMatrix m(static_cast<int>(by_dim[d - 1].size()), static_cast<int>(by_dim[d].size()));
    for (size_t j = 0; j < by_dim[d].size(); ++j) {
      const std::vector<int>& f = by_dim[d][j];
      for (size_t t = 0; t < f.size(); ++t) {
        std::vector<int> sub;
        for (size_t u = 0; u < f.size(); ++u)
          if (u != t) sub.push_back(f[u]);
        m.at(below.at(sub), static_cast<int>(j)) += (t % 2 == 0) ? 1 : -1;
      }
    }
    c.boundaries[d] = std::move(m);
  }
  return c;
}

}  // namespace detail

/// The upper-Koszul simplicial complex of I at multidegree b:
/// K^b = { squarefree tau ⊆ supp(b) : x^(b - tau) ∈ I }.
inline std::vector<std::vector<int>> upper_koszul_complex(const MonomialIdeal& I, const Monomial& b) {
  std::vector<int> sup = support(b);
  std::vector<std::vector<int>> faces;
  size_t r = sup.size();
  for (size_t mask = 0; mask < (size_t{1} << r); ++mask) {
    std::vector<Exp> e = b.exponents();
    std::vector<int> tau;
    for (size_t t = 0; t < r; ++t)
      if (mask & (size_t{1} << t)) {
        tau.push_back(sup[t]);
        e[static_cast<size_t>(sup[t] - 1)] -= 1;
      }
    if (I.contains(Monomial(e))) faces.push_back(tau);
  }
  return faces;
}

/// Multigraded Betti numbers of a monomial ideal via upper-Koszul homology:
/// beta_{i,b}(I) = dim H_(i-1)(K^b). Candidate multidegrees are the lcms of
/// generator subsets. Desk-scale inputs only.
inline BettiTable betti_oracle(const MonomialIdeal& I, Field field = Field::Q, int max_generators = 24) {
  if (I.is_zero()) throw std::domain_error("betti_oracle of the zero ideal");
  if (I.num_generators() > max_generators) throw std::domain_error("betti_oracle scale guard exceeded");
  BettiTable table;
  for (const Monomial& b : lcm_closure(I.generators())) {
    std::vector<std::vector<int>> faces = upper_koszul_complex(I, b);
    bool has_empty = false;
    for (const std::vector<int>& f : faces) has_empty |= f.empty();
    if (!has_empty) continue;  // x^b not in I; no Betti numbers here
    ChainComplex c = detail::simplicial_chain_complex(faces);
    std::vector<long long> h = reduced_homology_dims(c, field);
    for (size_t k = 0; k < h.size(); ++k) {
      // stored degree k is homological degree k-1, contributing beta_k.
      if (h[k] != 0) table.add(static_cast<int>(k), b, h[k]);
    }
  }
  return table;
}

/// Bayer-Sturmfels acyclicity of the label restriction X_{<=beta}. The empty
/// restriction counts as acyclic.
inline bool is_acyclic_leq(const LabeledCellComplex& X, const Monomial& beta, Field field = Field::Q) {
  LabeledCellComplex sub = X.restrict_leq(beta);
  if (sub.dimension() < 0) return true;  // only the empty cell survives
  for (long long h : reduced_homology_dims(chain_complex_of(sub), field))
    if (h != 0) return false;
  return true;
}

/// Full Bayer-Sturmfels sweep: acyclicity at every join of vertex labels
/// (restrictions only change at those multidegrees).
inline bool bayer_sturmfels_acyclic(const LabeledCellComplex& X, Field field = Field::Q) {
  std::vector<Monomial> labels = X.vertex_labels();
  if (labels.empty()) return true;
  for (const Monomial& beta : lcm_closure(labels))
    if (!is_acyclic_leq(X, beta, field)) return false;
  return true;
}

/// True when every nonzero beta_{i,j} sits on the single diagonal j = d + i.
inline bool has_linear_resolution(const MonomialIdeal& I, Field field = Field::Q) {
  Exp d = I.generator_degree();  // throws unless equigenerated
  for (auto& [key, v] : betti_oracle(I, field).coarse()) {
    if (v == 0) continue;
    if (key.second != d + key.first) return false;
  }
  return true;
}

}  // namespace ndual
