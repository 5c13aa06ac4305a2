#pragma once
// Exact linear algebra: sparse echelon spaces over Q, dense rational
// reduction, and integer (lattice) routines used by the matroid layer.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <memory>
#include <limits>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "otk/polyring.hpp"

namespace otk {

/// Sparse vector: (index, value) pairs, strictly increasing indices, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

namespace detail {

/// Exact rational with an int64 fast path; promotes to GMP on overflow and
/// demotes again when a result fits.
class FastRational {
 public:
  FastRational() = default;
  explicit FastRational(const Rational& q) { assign(q); }
  FastRational(const FastRational& o) : n_(o.n_), d_(o.d_) {
    if (o.big_) big_ = std::make_unique<Rational>(*o.big_);
  }
  FastRational(FastRational&&) noexcept = default;
  FastRational& operator=(const FastRational& o) {
    if (this != &o) {
      n_ = o.n_;
      d_ = o.d_;
      big_ = o.big_ ? std::make_unique<Rational>(*o.big_) : nullptr;
    }
    return *this;
  }
  FastRational& operator=(FastRational&&) noexcept = default;

  bool is_zero() const { return big_ ? *big_ == 0 : n_ == 0; }

  Rational to_rational() const {
    if (big_) return *big_;
    Rational q{Integer(static_cast<long>(n_)), Integer(static_cast<long>(d_))};
    return q;
  }

  FastRational inverse() const {
    FastRational r;
    if (big_) {
      r.assign(1 / *big_);
    } else if (n_ < 0) {
      r.n_ = -d_, r.d_ = -n_;
    } else {
      r.n_ = d_, r.d_ = n_;
    }
    return r;
  }

  /// this *= f
  void mul(const FastRational& f) {
    if (!big_ && !f.big_) {
      std::int64_t g1 = std::gcd(n_, f.d_), g2 = std::gcd(f.n_, d_);
      std::int64_t a = n_ / (g1 ? g1 : 1), b = f.n_ / (g2 ? g2 : 1);
      std::int64_t c = d_ / (g2 ? g2 : 1), e = f.d_ / (g1 ? g1 : 1);
      std::int64_t n, d;
      if (!__builtin_mul_overflow(a, b, &n) && !__builtin_mul_overflow(c, e, &d) && n != kMin && d != kMin) {
        n_ = n, d_ = n == 0 ? 1 : d;
        return;
      }
    }
    assign(to_rational() * f.to_rational());
  }

  /// this -= f * x
  void submul(const FastRational& f, const FastRational& x) {
    if (!big_ && !f.big_ && !x.big_ && fast_submul(f, x)) return;
    assign(to_rational() - f.to_rational() * x.to_rational());
  }

 private:
  static constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

  bool fast_submul(const FastRational& f, const FastRational& x) {
    std::int64_t pn, pd;
    if (__builtin_mul_overflow(f.n_, x.n_, &pn) || __builtin_mul_overflow(f.d_, x.d_, &pd)) return false;
    if (pn == 0) return true;
    std::int64_t g = std::gcd(pn, pd);
    if (g == 0 || pn == kMin || pd == kMin) return false;
    pn /= g, pd /= g;
    if (d_ == pd) {
      std::int64_t n;
      if (__builtin_sub_overflow(n_, pn, &n) || n == kMin) return false;
      std::int64_t g2 = std::gcd(n, d_);
      n_ = n / g2, d_ = n == 0 ? 1 : d_ / g2;
      return true;
    }
    std::int64_t g0 = std::gcd(d_, pd);
    std::int64_t a = d_ / g0, b = pd / g0;
    std::int64_t l, r, n, d;
    if (__builtin_mul_overflow(n_, b, &l) || __builtin_mul_overflow(pn, a, &r) || __builtin_sub_overflow(l, r, &n) ||
        __builtin_mul_overflow(d_, b, &d) || n == kMin)
      return false;
    std::int64_t g2 = std::gcd(n, d);
    n_ = n / g2, d_ = n == 0 ? 1 : d / g2;
    return true;
  }

  void assign(const Rational& q) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() && q.get_num() != kMin) {
      n_ = q.get_num().get_si();
      d_ = q.get_den().get_si();
      big_.reset();
    } else {
      big_ = std::make_unique<Rational>(q);
    }
  }

  std::int64_t n_ = 0, d_ = 1;
  std::unique_ptr<Rational> big_;
};

}  // namespace detail

/// A subspace of Q^N kept in echelon form. Each stored row is monic at its
/// pivot, and the pivot is the row's smallest nonzero index. By default rows
/// are only reduced forwards and make_reduced() clears the entries above each
/// pivot on demand; a space constructed with `fully_reduced` keeps reduced
/// row echelon form after every insertion, which avoids coefficient growth
/// when most of the ambient space ends up spanned.
class EchelonSpace {
  using Entry = std::pair<std::size_t, detail::FastRational>;
  using Row = std::vector<Entry>;

 public:
  EchelonSpace() = default;
  explicit EchelonSpace(bool fully_reduced) : fully_reduced_(fully_reduced) {}

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t i) const { return rows_.count(i) != 0; }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> out;
    for (const auto& [p, r] : rows_) out.push_back(p);
    return out;
  }
  SparseVector row(std::size_t pivot) const { return to_sparse(rows_.at(pivot)); }
  /// All rows keyed by pivot (a copy).
  std::map<std::size_t, SparseVector> rows() const {
    std::map<std::size_t, SparseVector> out;
    for (const auto& [p, r] : rows_) out.emplace(p, to_sparse(r));
    return out;
  }

  /// Canonical representative of v modulo the space: it has no entries at
  /// pivot positions.
  SparseVector reduce(const SparseVector& v) const { return to_sparse(reduce_fast(from_sparse(v))); }

  bool contains(const SparseVector& v) const { return reduce_fast(from_sparse(v)).empty(); }

  /// Adds v to the space; returns false if it was already contained.
  bool insert(const SparseVector& v) {
    Row r = reduce_fast(from_sparse(v));
    if (r.empty()) return false;
    detail::FastRational inv = r.front().second.inverse();
    for (auto& [i, c] : r) c.mul(inv);
    std::size_t p = r.front().first;
    if (fully_reduced_) {
      for (auto& [q, row] : rows_) {
        if (q > p) break;
        auto it = std::lower_bound(row.begin(), row.end(), p, [](const Entry& e, std::size_t k) { return e.first < k; });
        if (it == row.end() || it->first != p) continue;
        detail::FastRational factor = it->second;
        row = axpy(row, factor, r);
      }
    }
    rows_.emplace(p, std::move(r));
    return true;
  }

  /// Brings the rows to reduced row echelon form (zero above every pivot).
  void make_reduced() {
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      Row tail(it->second.begin() + 1, it->second.end());
      Row r = reduce_fast(tail);
      r.insert(r.begin(), std::move(it->second.front()));
      it->second = std::move(r);
    }
  }

 private:
  /// a - f * b for sorted rows.
  static Row axpy(const Row& a, const detail::FastRational& f, const Row& b) {
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else {
        bool both = i < a.size() && a[i].first == b[j].first;
        detail::FastRational x = both ? a[i].second : detail::FastRational();
        x.submul(f, b[j].second);
        if (!x.is_zero()) out.emplace_back(b[j].first, std::move(x));
        if (both) ++i;
        ++j;
      }
    }
    return out;
  }

  static Row from_sparse(const SparseVector& v) {
    Row r;
    r.reserve(v.size());
    for (const auto& [i, c] : v)
      if (c != 0) r.emplace_back(i, detail::FastRational(c));
    return r;
  }
  static SparseVector to_sparse(const Row& r) {
    SparseVector v;
    v.reserve(r.size());
    for (const auto& [i, c] : r) v.emplace_back(i, c.to_rational());
    return v;
  }

  struct Scratch {
    std::vector<detail::FastRational> acc;
    std::vector<char> touched;
    std::vector<std::size_t> heap, done;
    void touch(std::size_t i) {
      if (i >= acc.size()) {
        acc.resize(i + 1 + i / 2);
        touched.resize(acc.size(), 0);
      }
      if (!touched[i]) {
        touched[i] = 1;
        heap.push_back(i);
        std::push_heap(heap.begin(), heap.end(), std::greater<>{});
      }
    }
  };
  static Scratch& scratch() {
    thread_local Scratch s;
    return s;
  }

  Row reduce_fast(const Row& v) const {
    static const detail::FastRational minus_one(Rational(-1));
    Scratch& w = scratch();
    for (const auto& [i, c] : v) {
      w.touch(i);
      w.acc[i].submul(minus_one, c);
    }
    // Pivots are visited in increasing order; subtracting a row only touches
    // indices beyond its pivot, so an index is settled once it is popped.
    while (!w.heap.empty()) {
      std::pop_heap(w.heap.begin(), w.heap.end(), std::greater<>{});
      std::size_t i = w.heap.back();
      w.heap.pop_back();
      w.done.push_back(i);
      if (w.acc[i].is_zero()) continue;
      auto row = rows_.find(i);
      if (row == rows_.end()) continue;
      detail::FastRational factor = w.acc[i];
      for (const auto& [j, x] : row->second) {
        w.touch(j);
        w.acc[j].submul(factor, x);
      }
    }
    std::sort(w.done.begin(), w.done.end());
    Row out;
    for (auto i : w.done) {
      if (!w.acc[i].is_zero()) out.emplace_back(i, std::move(w.acc[i]));
      w.acc[i] = detail::FastRational();
      w.touched[i] = 0;
    }
    w.done.clear();
    return out;
  }

  bool fully_reduced_ = false;
  std::map<std::size_t, Row> rows_;
};

using DenseMatrix = std::vector<std::vector<Rational>>;

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> rref(DenseMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(DenseMatrix m) { return rref(m).size(); }

/// Basis of {x : m x = 0}, one vector per free column.
inline std::vector<std::vector<Rational>> nullspace(DenseMatrix m, std::size_t cols) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Integer routines.

using IntMatrix = std::vector<std::vector<Integer>>;

/// Rank by Bareiss fraction-free elimination.
inline std::size_t integer_rank(IntMatrix m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m.front().size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

/// Determinant of a square integer matrix (Bareiss).
inline Integer integer_determinant(IntMatrix m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Hermite normal form of the row lattice (rows echelon, pivots positive,
/// entries above a pivot reduced into [0, pivot)). Zero rows are dropped.
inline IntMatrix hermite_normal_form(IntMatrix m) {
  if (m.empty()) return m;
  std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < m.size(); ++i)
        if (m[i][c] != 0 && (!best || abs(m[i][c]) < abs(m[*best][c]))) best = i;
      if (!best) break;
      std::swap(m[*best], m[r]);
      bool done = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r >= m.size() || m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (auto& x : m[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
      if (q != 0)
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

/// Z-basis of {x in Z^n : A x = 0} for a d x n integer matrix, returned as
/// rows in Hermite normal form.
inline IntMatrix integer_kernel(const IntMatrix& a, std::size_t n) {
  IntMatrix m = a;
  IntMatrix u(n, std::vector<Integer>(n, 0));  // columns of u track column operations
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (auto& row : m) row[dst] -= q * row[src];
    for (auto& row : u) row[dst] -= q * row[src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (auto& row : m) std::swap(row[x], row[y]);
    for (auto& row : u) std::swap(row[x], row[y]);
  };
  std::size_t col = 0;
  for (std::size_t r = 0; r < m.size() && col < n; ++r) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t j = col; j < n; ++j)
        if (m[r][j] != 0 && (!best || abs(m[r][j]) < abs(m[r][*best]))) best = j;
      if (!best) break;
      col_swap(*best, col);
      bool done = true;
      for (std::size_t j = col + 1; j < n; ++j) {
        if (m[r][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[r][j].get_mpz_t(), m[r][col].get_mpz_t());
        col_axpy(j, col, q);
        if (m[r][j] != 0) done = false;
      }
      if (done) {
        ++col;
        break;
      }
    }
  }
  IntMatrix basis;
  for (std::size_t j = col; j < n; ++j) {
    std::vector<Integer> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = u[i][j];
    basis.push_back(std::move(v));
  }
  return hermite_normal_form(std::move(basis));
}

/// Integer coordinates of v in the lattice spanned by HNF rows `basis`;
/// nullopt if v is not in the lattice.
inline std::optional<std::vector<Integer>> lattice_coordinates(const IntMatrix& basis, std::vector<Integer> v) {
  std::vector<Integer> coords(basis.size(), 0);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::size_t c = 0;
    while (basis[k][c] == 0) ++c;
    if (v[c] % basis[k][c] != 0) return std::nullopt;
    Integer q = v[c] / basis[k][c];
    coords[k] = q;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * basis[k][j];
  }
  for (const auto& x : v)
    if (x != 0) return std::nullopt;
  return coords;
}

}  // namespace otk
