#pragma once
// Shared helpers for the test binaries: a seeded generator for random
// polynomials, monomials and configurations, plus brute-force oracles that
// do not go through the library code they check.

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "otk/otk.hpp"

namespace otk::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }
  long between(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin(int percent = 50) { return between(0, 99) < percent; }

  Rational rational(long span = 5) {
    long num = between(-span, span);
    long den = between(1, span);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  Monomial monomial(std::size_t arity, long max_exp = 3) {
    Monomial m(arity);
    for (std::size_t i = 0; i < arity; ++i) m.set(i, static_cast<Monomial::Exponent>(between(0, max_exp)));
    return m;
  }

  Monomial monomial_of_degree(std::size_t arity, long degree) {
    Monomial m(arity);
    for (long k = 0; k < degree; ++k) {
      std::size_t i = static_cast<std::size_t>(between(0, static_cast<long>(arity) - 1));
      m.set(i, m[i] + 1);
    }
    return m;
  }

  Polynomial polynomial(const Ring& ring, std::size_t max_terms = 4, long max_exp = 2) {
    Polynomial p(ring);
    std::size_t terms = static_cast<std::size_t>(between(0, static_cast<long>(max_terms)));
    for (std::size_t t = 0; t < terms; ++t) p.add_term(monomial(ring->size(), max_exp), rational());
    return p;
  }

  Polynomial homogeneous(const Ring& ring, long degree, std::size_t max_terms = 4) {
    Polynomial p(ring);
    std::size_t terms = static_cast<std::size_t>(between(1, static_cast<long>(max_terms)));
    for (std::size_t t = 0; t < terms; ++t) p.add_term(monomial_of_degree(ring->size(), degree), rational());
    return p;
  }

  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[static_cast<std::size_t>(between(0, static_cast<long>(i) - 1))]);
    return p;
  }

  MonomialOrder order(std::size_t arity) {
    auto p = permutation(arity);
    switch (between(0, 4)) {
      case 0: return MonomialOrder::lex(arity, p);
      case 1: return MonomialOrder::deglex(arity, p);
      case 2: return MonomialOrder::degrevlex(arity, p);
      case 3: return MonomialOrder::elimination(arity, static_cast<std::size_t>(between(0, static_cast<long>(arity))), p);
      default: {
        std::vector<long> w(arity);
        for (auto& x : w) x = between(0, 3);
        return MonomialOrder::weighted(w, OrderKind::DegRevLex, p);
      }
    }
  }

  /// Random rank-d configuration with entries in [-1, 1] and primitive
  /// nonzero vectors; theta is drawn at random and may make it non-simple.
  VectorConfig config(std::size_t d, std::size_t n) {
    std::vector<std::vector<long>> vs;
    while (vs.size() < n) {
      std::vector<long> v(d);
      long g = 0;
      for (auto& x : v) {
        x = between(-1, 1);
        g = std::gcd(g, x);
      }
      if (g == 1) vs.push_back(v);
    }
    std::vector<long> theta(n);
    for (auto& t : theta) t = between(-3, 3);
    return VectorConfig(d, vs, theta);
  }

 private:
  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Oracles.

/// Rank over Q by plain Gaussian elimination on rationals.
inline std::size_t brute_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != rank && m[r][c] != 0) {
        Rational f = m[r][c] / m[rank][c];
        for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
      }
    ++rank;
  }
  return rank;
}

inline std::size_t brute_rank(const VectorConfig& c, const IndexSet& s) {
  std::vector<std::vector<Rational>> m;
  for (auto i : s) {
    std::vector<Rational> row;
    for (long x : c.vector(i)) row.emplace_back(x);
    m.push_back(row);
  }
  return brute_rank(m);
}

/// Circuits by testing every subset: dependent, and every proper subset
/// obtained by dropping one element is independent.
inline std::vector<IndexSet> brute_circuits(const VectorConfig& c) {
  std::vector<IndexSet> out;
  const std::size_t n = c.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    IndexSet s = mask_to_set(mask);
    if (brute_rank(c, s) == s.size()) continue;
    bool minimal = true;
    for (std::size_t k = 0; k < s.size() && minimal; ++k) {
      IndexSet t = s;
      t.erase(t.begin() + static_cast<long>(k));
      minimal = brute_rank(c, t) == t.size();
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Dimension of (ring/ideal)_d computed without Groebner bases: the rank of
/// all products (monomial of degree d - deg g) * g inside the space of
/// degree-d monomials, subtracted from the number of such monomials.
inline std::size_t brute_quotient_dim(const Ideal& ideal, long degree) {
  auto monos = monomials_of_degree(*ideal.ring, degree);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : ideal.generators) {
    long dg = *g.degree();
    if (dg > degree) continue;
    for (const auto& m : monomials_of_degree(*ideal.ring, degree - dg)) {
      std::vector<Rational> row(monos.size(), 0);
      for (const auto& [mm, c] : g.terms()) row[index.at(mm * m)] += c;
      rows.push_back(std::move(row));
    }
  }
  return monos.size() - brute_rank(rows);
}

inline Polynomial P(const Ring& ring, const std::string& s) { return parse_polynomial(ring, s); }

}  // namespace otk::testing
