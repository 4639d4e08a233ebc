#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ndual {

using Exp = long long;

namespace detail {

inline Exp checked_add(Exp a, Exp b) {
  Exp r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow in add");
  return r;
}

inline Exp checked_mul(Exp a, Exp b) {
  Exp r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow in mul");
  return r;
}

}  // namespace detail

/// A monomial in K[x_1..x_n], stored as its exponent vector.
/// Variables are indexed 1..n. Immutable value type.
class Monomial {
 public:
  explicit Monomial(std::vector<Exp> exps) : exps_(std::move(exps)) {
    for (Exp e : exps_)
      if (e < 0) throw std::invalid_argument("monomial exponents must be non-negative");
  }

  static Monomial unit(int n) { return Monomial(std::vector<Exp>(static_cast<size_t>(n), 0)); }

  static Monomial variable(int n, int i, Exp power = 1) {
    if (i < 1 || i > n) throw std::invalid_argument("variable index out of range");
    std::vector<Exp> e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i - 1)] = power;
    return Monomial(std::move(e));
  }

  int ambient() const { return static_cast<int>(exps_.size()); }
  Exp exponent(int i) const { return exps_[static_cast<size_t>(i - 1)]; }
  const std::vector<Exp>& exponents() const { return exps_; }

  Exp total_degree() const {
    Exp d = 0;
    for (Exp e : exps_) d = detail::checked_add(d, e);
    return d;
  }

  bool is_unit() const {
    for (Exp e : exps_)
      if (e != 0) return false;
    return true;
  }

  bool is_squarefree() const {
    for (Exp e : exps_)
      if (e > 1) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    require_same_ambient(o);
    std::vector<Exp> e(exps_.size());
    for (size_t k = 0; k < exps_.size(); ++k) e[k] = detail::checked_add(exps_[k], o.exps_[k]);
    return Monomial(std::move(e));
  }

  /// Exact division; throws if `o` does not divide this monomial.
  Monomial operator/(const Monomial& o) const {
    require_same_ambient(o);
    std::vector<Exp> e(exps_.size());
    for (size_t k = 0; k < exps_.size(); ++k) {
      if (o.exps_[k] > exps_[k]) throw std::domain_error("inexact monomial division");
      e[k] = exps_[k] - o.exps_[k];
    }
    return Monomial(std::move(e));
  }

  Monomial pow(Exp r) const {
    if (r < 0) throw std::invalid_argument("negative power");
    std::vector<Exp> e(exps_.size());
    for (size_t k = 0; k < exps_.size(); ++k) e[k] = detail::checked_mul(exps_[k], r);
    return Monomial(std::move(e));
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  /// Renders "x1^2*x3" style; `names` overrides the default x1..xn.
  std::string str(const std::vector<std::string>& names = {}) const {
    std::string s;
    for (int i = 1; i <= ambient(); ++i) {
      Exp e = exponent(i);
      if (e == 0) continue;
      if (!s.empty()) s += '*';
      s += i <= static_cast<int>(names.size()) ? names[static_cast<size_t>(i - 1)]
                                               : "x" + std::to_string(i);
      if (e > 1) s += '^' + std::to_string(e);
    }
    return s.empty() ? "1" : s;
  }

  void require_same_ambient(const Monomial& o) const {
    if (ambient() != o.ambient()) throw std::invalid_argument("ambient variable count mismatch");
  }

 private:
  std::vector<Exp> exps_;
};

inline bool divides(const Monomial& a, const Monomial& b) {
  a.require_same_ambient(b);
  for (int i = 1; i <= a.ambient(); ++i)
    if (a.exponent(i) > b.exponent(i)) return false;
  return true;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  a.require_same_ambient(b);
  std::vector<Exp> e(static_cast<size_t>(a.ambient()));
  for (int i = 1; i <= a.ambient(); ++i)
    e[static_cast<size_t>(i - 1)] = std::max(a.exponent(i), b.exponent(i));
  return Monomial(std::move(e));
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  a.require_same_ambient(b);
  std::vector<Exp> e(static_cast<size_t>(a.ambient()));
  for (int i = 1; i <= a.ambient(); ++i)
    e[static_cast<size_t>(i - 1)] = std::min(a.exponent(i), b.exponent(i));
  return Monomial(std::move(e));
}

/// Total order on monomials of a common ambient: scan exponents from the
/// highest variable index down, first difference decides (smaller exponent
/// sorts first). On a fixed-degree stratum this is the co-lexicographic
/// order. Returns -1, 0, or +1.
inline int canonical_compare(const Monomial& a, const Monomial& b) {
  a.require_same_ambient(b);
  for (int i = a.ambient(); i >= 1; --i) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? -1 : 1;
  }
  return 0;
}

/// Co-lexicographic comparison; defined only within a fixed total degree.
inline int colex_compare(const Monomial& a, const Monomial& b) {
  if (a.total_degree() != b.total_degree())
    throw std::invalid_argument("colex_compare requires equal total degrees");
  return canonical_compare(a, b);
}

struct SupportStats {
  std::vector<int> supp;    // indices with positive exponent, ascending
  std::vector<int> supp1;   // supp minus {1}
  int max_index = 0;        // largest support index
};

inline std::vector<int> support(const Monomial& m) {
  std::vector<int> s;
  for (int i = 1; i <= m.ambient(); ++i)
    if (m.exponent(i) > 0) s.push_back(i);
  return s;
}

inline SupportStats support_stats(const Monomial& m) {
  if (m.is_unit()) throw std::domain_error("support_stats of the unit monomial");
  SupportStats st;
  st.supp = support(m);
  for (int i : st.supp)
    if (i != 1) st.supp1.push_back(i);
  st.max_index = st.supp.back();
  return st;
}

/// A monomial ideal, held by its minimal monomial generating set in a fixed
/// ambient ring. The zero ideal has an empty generator list; the unit ideal
/// is generated by 1. Both are representable but most operations reject them.
class MonomialIdeal {
 public:
  static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }

  static MonomialIdeal unit_ideal(int n) { return MonomialIdeal(n, {Monomial::unit(n)}); }

  /// Minimalizes: deduplicates and keeps the inclusion-minimal antichain.
  static MonomialIdeal from_generators(int n, std::vector<Monomial> gens) {
    for (const Monomial& g : gens)
      if (g.ambient() != n) throw std::invalid_argument("generator ambient mismatch");
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
      return canonical_compare(a, b) < 0;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> keep;
    for (const Monomial& g : gens) {
      bool dominated = false;
      for (const Monomial& k : keep) {
        if (divides(k, g)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) keep.push_back(g);
    }
    return MonomialIdeal(n, std::move(keep));
  }

  int ambient() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }

  /// Membership: some generator divides m.
  bool contains(const Monomial& m) const {
    for (const Monomial& g : gens_)
      if (divides(g, m)) return true;
    return false;
  }

  bool is_equigenerated() const {
    if (gens_.empty()) return false;
    Exp d = gens_[0].total_degree();
    for (const Monomial& g : gens_)
      if (g.total_degree() != d) return false;
    return true;
  }

  Exp generator_degree() const {
    if (!is_equigenerated()) throw std::domain_error("ideal is not equigenerated");
    return gens_[0].total_degree();
  }

  bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && gens_ == o.gens_; }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

 private:
  MonomialIdeal(int n, std::vector<Monomial> gens) : n_(n), gens_(std::move(gens)) {
    if (n_ < 0) throw std::invalid_argument("negative ambient");
  }

  int n_ = 0;
  std::vector<Monomial> gens_;  // minimal, canonically sorted
};

inline MonomialIdeal minimalize(int n, const std::vector<Monomial>& gens) {
  return MonomialIdeal::from_generators(n, gens);
}

/// (I : m), computed generator-wise as g / gcd(g, m).
inline MonomialIdeal colon_ideal(const MonomialIdeal& I, const Monomial& m) {
  if (I.ambient() != m.ambient()) throw std::invalid_argument("colon_ideal ambient mismatch");
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const Monomial& g : I.generators()) gens.push_back(g / gcd(g, m));
  return MonomialIdeal::from_generators(I.ambient(), gens);
}

inline MonomialIdeal product_ideal(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ambient() != J.ambient()) throw std::invalid_argument("product_ideal ambient mismatch");
  std::vector<Monomial> gens;
  for (const Monomial& g : I.generators())
    for (const Monomial& h : J.generators()) gens.push_back(g * h);
  return MonomialIdeal::from_generators(I.ambient(), gens);
}

/// Closure of a generator set under pairwise lcm (the lcm lattice, minus
/// the empty join). Deterministic output order.
inline std::vector<Monomial> lcm_closure(const std::vector<Monomial>& gens,
                                         size_t guard = 500000) {
  std::set<std::vector<Exp>> seen;
  std::vector<Monomial> out;
  std::vector<Monomial> work;
  for (const Monomial& g : gens) {
    if (seen.insert(g.exponents()).second) {
      out.push_back(g);
      work.push_back(g);
    }
  }
  while (!work.empty()) {
    Monomial m = work.back();
    work.pop_back();
    for (const Monomial& g : gens) {
      Monomial j = lcm(m, g);
      if (seen.insert(j.exponents()).second) {
        if (seen.size() > guard) throw std::runtime_error("lcm_closure guard exceeded");
        out.push_back(j);
        work.push_back(j);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return canonical_compare(a, b) < 0;
  });
  return out;
}

/// All monomials in n variables of total degree exactly d, canonical order.
inline std::vector<Monomial> monomials_of_degree(int n, Exp d) {
  std::vector<Monomial> out;
  std::vector<Exp> cur(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, Exp left) -> void {
    if (pos == n) {
      if (left == 0) out.push_back(Monomial(cur));
      return;
    }
    for (Exp e = 0; e <= left; ++e) {
      cur[static_cast<size_t>(pos)] = e;
      self(self, pos + 1, left - e);
    }
    cur[static_cast<size_t>(pos)] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return canonical_compare(a, b) < 0; });
  return out;
}

inline std::vector<Monomial> monomials_up_to_degree(int n, Exp d) {
  std::vector<Monomial> out;
  for (Exp k = 0; k <= d; ++k) {
    std::vector<Monomial> layer = monomials_of_degree(n, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// Graded Betti numbers indexed by (homological index i, multidegree b).
class BettiTable {
 public:
  void add(int i, const Monomial& b, long long v) {
    if (v == 0) return;
    entries_[{i, b.exponents()}] += v;
    if (entries_[{i, b.exponents()}] == 0) entries_.erase({i, b.exponents()});
  }

  long long get(int i, const Monomial& b) const {
    auto it = entries_.find({i, b.exponents()});
    return it == entries_.end() ? 0 : it->second;
  }

  const std::map<std::pair<int, std::vector<Exp>>, long long>& entries() const {
    return entries_;
  }

  /// Coarse view: (i, total degree j) -> sum of multigraded entries.
  std::map<std::pair<int, Exp>, long long> coarse() const {
    std::map<std::pair<int, Exp>, long long> c;
    for (const auto& [key, v] : entries_) {
      Exp j = 0;
      for (Exp e : key.second) j += e;
      c[{key.first, j}] += v;
    }
    return c;
  }

  /// Total Betti numbers beta_0, beta_1, ... up to the projective dimension.
  std::vector<long long> totals() const {
    std::vector<long long> t;
    for (const auto& [key, v] : entries_) {
      int i = key.first;
      if (static_cast<int>(t.size()) <= i) t.resize(static_cast<size_t>(i) + 1, 0);
      t[static_cast<size_t>(i)] += v;
    }
    return t;
  }

  int projective_dimension() const {
    int pd = 0;
    for (const auto& [key, v] : entries_)
      if (v != 0) pd = std::max(pd, key.first);
    return pd;
  }

  Exp regularity() const {
    Exp r = 0;
    for (const auto& [key, v] : entries_) {
      if (v == 0) continue;
      Exp j = 0;
      for (Exp e : key.second) j += e;
      r = std::max(r, j - key.first);
    }
    return r;
  }

  bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }
  bool operator!=(const BettiTable& o) const { return !(*this == o); }

 private:
  std::map<std::pair<int, std::vector<Exp>>, long long> entries_;
};

}  // namespace ndual
