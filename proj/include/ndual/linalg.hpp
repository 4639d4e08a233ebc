#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ndual {

enum class Field { Q, F2 };

inline const char* field_name(Field f) { return f == Field::Q ? "Q" : "F2"; }

/// Dense integer matrix (row-major). Entries are exact integers; the rank
/// routines treat them as rationals with denominator one.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}

  long long& at(int r, int c) { return data[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
  long long at(int r, int c) const { return data[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
};

namespace detail {

struct Int64Overflow {};

// Fraction-free (Bareiss) elimination. All intermediate entries are minors
// of the input, so the division in the update step is exact. T is either a
// checked 64-bit integer wrapper's operations (fast path) or mpz_class.
inline int rank_bareiss_mpz(const IntMatrix& m) {
  int R = m.rows, C = m.cols;
  std::vector<mpz_class> a(static_cast<size_t>(R) * static_cast<size_t>(C));
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j) a[static_cast<size_t>(i) * C + j] = static_cast<long>(m.at(i, j));
  auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<size_t>(i) * C + j]; };

  int rank = 0;
  mpz_class prev = 1;
  for (int col = 0; col < C && rank < R; ++col) {
    int pivot = -1;
    for (int r = rank; r < R; ++r) {
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < C; ++j) std::swap(at(pivot, j), at(rank, j));
    for (int r = rank + 1; r < R; ++r) {
      for (int j = col + 1; j < C; ++j) {
        mpz_class t = at(rank, col) * at(r, j) - at(r, col) * at(rank, j);
        mpz_divexact(at(r, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(r, col) = 0;
    }
    prev = at(rank, col);
    ++rank;
  }
  return rank;
}

inline long long ck_mul(long long x, long long y) {
  long long r;
  if (__builtin_mul_overflow(x, y, &r)) throw Int64Overflow{};
  return r;
}

inline long long ck_sub(long long x, long long y) {
  long long r;
  if (__builtin_sub_overflow(x, y, &r)) throw Int64Overflow{};
  return r;
}

inline int rank_bareiss_int64(const IntMatrix& m) {
  IntMatrix a = m;
  int R = a.rows, C = a.cols;
  int rank = 0;
  long long prev = 1;
  for (int col = 0; col < C && rank < R; ++col) {
    int pivot = -1;
    for (int r = rank; r < R; ++r) {
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < C; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
    for (int r = rank + 1; r < R; ++r) {
      for (int j = col + 1; j < C; ++j) {
        long long t = ck_sub(ck_mul(a.at(rank, col), a.at(r, j)), ck_mul(a.at(r, col), a.at(rank, j)));
        a.at(r, j) = t / prev;  // exact by the Bareiss identity
      }
      a.at(r, col) = 0;
    }
    prev = a.at(rank, col);
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Exact rank over the rationals. Runs a 64-bit fraction-free elimination
/// and retries with big integers on overflow.
inline int exact_rank(const IntMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  try {
    return detail::rank_bareiss_int64(m);
  } catch (const detail::Int64Overflow&) {
    return detail::rank_bareiss_mpz(m);
  }
}

/// Rank over the field with two elements (bitset elimination).
inline int rank_f2(const IntMatrix& m) {
  int R = m.rows, C = m.cols;
  int words = (C + 63) / 64;
  std::vector<std::vector<uint64_t>> rows(static_cast<size_t>(R),
                                          std::vector<uint64_t>(static_cast<size_t>(words), 0));
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j)
      if (m.at(i, j) % 2 != 0) rows[static_cast<size_t>(i)][static_cast<size_t>(j / 64)] ^= 1ull << (j % 64);
  int rank = 0;
  for (int col = 0; col < C && rank < R; ++col) {
    int w = col / 64;
    uint64_t bit = 1ull << (col % 64);
    int pivot = -1;
    for (int r = rank; r < R; ++r) {
      if (rows[static_cast<size_t>(r)][static_cast<size_t>(w)] & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<size_t>(pivot)], rows[static_cast<size_t>(rank)]);
    for (int r = 0; r < R; ++r) {
      if (r != rank && (rows[static_cast<size_t>(r)][static_cast<size_t>(w)] & bit))
        for (int k = 0; k < words; ++k) rows[static_cast<size_t>(r)][static_cast<size_t>(k)] ^= rows[static_cast<size_t>(rank)][static_cast<size_t>(k)];
    }
    ++rank;
  }
  return rank;
}

inline int rank_over(const IntMatrix& m, Field f) {
  return f == Field::Q ? exact_rank(m) : rank_f2(m);
}

}  // namespace ndual
