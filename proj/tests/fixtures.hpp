#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "ndual/dual.hpp"
#include "ndual/ferrers.hpp"
#include "ndual/monomial.hpp"

namespace fixtures {

using namespace ndual;

/// Parses "x1^2*x3" against default names x1..xn. "1" is the unit.
inline Monomial mono(int n, const std::string& text) {
  std::vector<Exp> e(static_cast<size_t>(n), 0);
  if (text == "1") return Monomial(e);
  size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != 'x') throw std::invalid_argument("bad monomial literal: " + text);
    ++pos;
    size_t start = pos;
    while (pos < text.size() && isdigit(text[pos])) ++pos;
    int var = std::atoi(text.substr(start, pos - start).c_str());
    Exp exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      start = pos;
      while (pos < text.size() && isdigit(text[pos])) ++pos;
      exp = std::atoll(text.substr(start, pos - start).c_str());
    }
    if (var < 1 || var > n) throw std::invalid_argument("variable out of range in: " + text);
    e[static_cast<size_t>(var - 1)] += exp;
    if (pos < text.size()) {
      if (text[pos] != '*') throw std::invalid_argument("bad monomial literal: " + text);
      ++pos;
    }
  }
  return Monomial(e);
}

inline std::vector<Monomial> monos(int n, const std::vector<std::string>& texts) {
  std::vector<Monomial> out;
  for (const std::string& t : texts) out.push_back(mono(n, t));
  return out;
}

inline MonomialIdeal ideal(int n, const std::vector<std::string>& texts) {
  return MonomialIdeal::from_generators(n, monos(n, texts));
}

/// The minimal strongly stable ideal containing x2*x3*x4 in four variables;
/// generators listed in its co-lexicographic order.
inline std::vector<std::string> example_xi_generators() {
  return {"x1^3",    "x1^2*x2", "x1*x2^2", "x2^3",    "x1^2*x3", "x1*x2*x3", "x2^2*x3",
          "x1*x3^2", "x2*x3^2", "x1^2*x4", "x1*x2*x4", "x2^2*x4", "x1*x3*x4", "x2*x3*x4"};
}

inline MonomialIdeal example_xi() { return ideal(4, example_xi_generators()); }

/// The stable-but-not-strongly-stable degree-3 ideal with 12 generators.
inline MonomialIdeal stable_not_strongly() {
  return ideal(4, {"x1^3", "x1^2*x2", "x1*x2^2", "x2^3", "x1^2*x3", "x1*x2*x3", "x2^2*x3", "x1*x3^2",
                   "x2*x3^2", "x3^3", "x1*x2*x4", "x3^2*x4"});
}

/// The non-bipartite counterexample: variables (x1, x2, y1, y2) = 1..4.
inline MonomialIdeal counterexample_ideal() {
  return ideal(4, {"x1*x3", "x1*x4", "x2*x3", "x2*x4", "x3*x4"});
}

inline BipartiteGraph less_graph() {
  BipartiteGraph g(2, 3);
  g.add_edge(1, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 1);
  g.add_edge(2, 2);
  return g;
}

inline BipartiteGraph four_cycle() {
  BipartiteGraph g(2, 2);
  g.add_edge(1, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 1);
  g.add_edge(2, 2);
  return g;
}

inline ShiftedDiagram comnotsat() { return ShiftedDiagram(ShiftedPartition({3, 3}, {1, 1})); }

inline ShiftedDiagram quasi_diag() { return ShiftedDiagram(ShiftedPartition({6, 5, 4, 7}, {1, 3, 2, 3})); }

}  // namespace fixtures
