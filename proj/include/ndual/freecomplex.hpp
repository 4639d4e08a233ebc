#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ndual/cellcomplex.hpp"
#include "ndual/monomial.hpp"

namespace ndual {

struct FreeGenerator {
  Monomial multidegree = Monomial::unit(0);
  std::string cell;
  int dim = -1;
};

struct DiffEntry {
  int row = 0;   // target generator index one degree down
  int sign = 0;  // +1 or -1
  Monomial monomial = Monomial::unit(0);
};

/// The multigraded free complex read off a labeled cell complex: one free
/// generator per cell (the empty cell realizes the rank-one module in
/// homological degree -1) and differential entries sign * x^(label(P) -
/// label(Q)) for each facet Q of P.
class FreeComplex {
 public:
  int ambient() const { return n_; }
  int top_degree() const { return static_cast<int>(gens_.size()) - 2; }

  const std::vector<FreeGenerator>& generators(int deg) const {
    static const std::vector<FreeGenerator> none;
    size_t idx = static_cast<size_t>(deg + 1);
    return deg >= -1 && idx < gens_.size() ? gens_[idx] : none;
  }

  /// Columns of the differential from degree `deg` down to `deg - 1`
  /// (deg = 0 maps the vertices onto the empty cell).
  const std::vector<std::vector<DiffEntry>>& differential(int deg) const {
    static const std::vector<std::vector<DiffEntry>> none;
    size_t idx = static_cast<size_t>(deg);
    return deg >= 0 && idx < diffs_.size() ? diffs_[idx] : none;
  }

  std::vector<long long> ranks() const {
    std::vector<long long> r;
    for (int d = -1; d <= top_degree(); ++d) r.push_back(static_cast<long long>(generators(d).size()));
    return r;
  }

  friend FreeComplex free_complex(const LabeledCellComplex& X);

 private:
  int n_ = 0;
  std::vector<std::vector<FreeGenerator>> gens_;            // gens_[deg+1]
  std::vector<std::vector<std::vector<DiffEntry>>> diffs_;  // diffs_[deg] : deg -> deg-1
};

inline FreeComplex free_complex(const LabeledCellComplex& X) {
  FreeComplex F;
  F.n_ = X.ambient();
  for (int d = -1; d <= X.dimension(); ++d) {
    std::vector<FreeGenerator> layer;
    for (const Cell& c : X.cells(d)) layer.push_back(FreeGenerator{c.label, c.name, d});
    F.gens_.push_back(std::move(layer));
  }
  // Entry monomials must divide exactly (alpha_Q <= alpha_P); operator/
  // throws otherwise.
  for (int d = 0; d <= X.dimension(); ++d) {
    std::vector<std::vector<DiffEntry>> cols;
    for (const Cell& c : X.cells(d)) {
      std::vector<DiffEntry> col;
      for (auto& [q, s] : c.facets) {
        const Cell& f = X.cells(d - 1)[static_cast<size_t>(q)];
        col.push_back(DiffEntry{q, s, c.label / f.label});
      }
      cols.push_back(std::move(col));
    }
    F.diffs_.push_back(std::move(cols));
  }
  // Symbolic check that consecutive differentials compose to zero.
  for (int d = 1; d <= X.dimension(); ++d) {
    for (const std::vector<DiffEntry>& col : F.diffs_[static_cast<size_t>(d)]) {
      std::map<std::pair<int, std::vector<Exp>>, long long> acc;
      for (const DiffEntry& e1 : col)
        for (const DiffEntry& e2 : F.diffs_[static_cast<size_t>(d - 1)][static_cast<size_t>(e1.row)])
          acc[{e2.row, (e1.monomial * e2.monomial).exponents()}] += e1.sign * e2.sign;
      for (auto& [key, v] : acc)
        if (v != 0) throw std::logic_error("incidence sign law violated: composite differential is nonzero");
    }
  }
  return F;
}

/// Minimality: no differential entry is a nonzero constant.
inline bool is_minimal(const FreeComplex& F) {
  for (int d = 0; d <= F.top_degree(); ++d)
    for (const std::vector<DiffEntry>& col : F.differential(d))
      for (const DiffEntry& e : col)
        if (e.monomial.is_unit()) return false;
  return true;
}

/// Betti table of the ideal resolved by a minimal cellular complex: cells
/// of dimension i contribute to beta_i at their label.
inline BettiTable betti_from_complex(const FreeComplex& F) {
  if (!is_minimal(F)) throw std::domain_error("betti_from_complex requires a minimal complex");
  BettiTable t;
  for (int d = 0; d <= F.top_degree(); ++d)
    for (const FreeGenerator& g : F.generators(d)) t.add(d, g.multidegree, 1);
  return t;
}

}  // namespace ndual
