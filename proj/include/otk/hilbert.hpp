#pragma once
// Hilbert series numerator / (1-t)^k of standard-graded quotients, via the
// pivot recursion on the initial monomial ideal.

#include <algorithm>
#include <string>
#include <vector>

#include "otk/groebner.hpp"

namespace otk {

struct HilbertSeries {
  std::vector<long> numerator{1};  // coefficient of t^i at index i
  int denom_power = 0;

  HilbertSeries() = default;
  HilbertSeries(std::vector<long> num, int k) : numerator(std::move(num)), denom_power(k) { canonicalize(); }

  /// Cancels common (1-t) factors and trailing zeros.
  void canonicalize() {
    while (numerator.size() > 1 && numerator.back() == 0) numerator.pop_back();
    if (numerator.empty()) numerator.push_back(0);
    if (numerator.size() == 1 && numerator[0] == 0) {
      denom_power = 0;
      return;
    }
    while (denom_power > 0) {
      long sum = 0;
      for (long c : numerator) sum += c;
      if (sum != 0) break;
      // numerator = (1-t) q with q_i = sum_{j<=i} numerator_j
      std::vector<long> q(numerator.size() - 1);
      long run = 0;
      for (std::size_t i = 0; i + 1 < numerator.size(); ++i) {
        run += numerator[i];
        q[i] = run;
      }
      numerator = q.empty() ? std::vector<long>{0} : q;
      --denom_power;
      while (numerator.size() > 1 && numerator.back() == 0) numerator.pop_back();
    }
  }

  /// Multiplies by (1-t)^(-k).
  HilbertSeries divided_by_one_minus_t(int k = 1) const { return HilbertSeries(numerator, denom_power + k); }

  long coefficient(long n) const {
    if (n < 0) return 0;
    long total = 0;
    for (std::size_t i = 0; i < numerator.size() && static_cast<long>(i) <= n; ++i) {
      long m = n - static_cast<long>(i);
      long ways = denom_power == 0 ? (m == 0 ? 1 : 0) : binomial(m + denom_power - 1, denom_power - 1);
      total += numerator[i] * ways;
    }
    return total;
  }

  std::vector<long> expand(long upto) const {
    std::vector<long> out;
    for (long n = 0; n <= upto; ++n) out.push_back(coefficient(n));
    return out;
  }

  bool operator==(const HilbertSeries& o) const { return numerator == o.numerator && denom_power == o.denom_power; }

  std::string to_string() const {
    std::string num;
    int nonzero = 0;
    for (std::size_t i = 0; i < numerator.size(); ++i) {
      long c = numerator[i];
      if (c == 0) continue;
      ++nonzero;
      std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
      long mag = c < 0 ? -c : c;
      if (num.empty()) {
        num += c < 0 ? "-" : "";
      } else {
        num += c < 0 ? " - " : " + ";
      }
      if (mono.empty()) num += std::to_string(mag);
      else num += (mag == 1 ? "" : std::to_string(mag) + "*") + mono;
    }
    if (num.empty()) num = "0";
    if (denom_power == 0) return num;
    if (nonzero > 1) num = "(" + num + ")";
    std::string den = denom_power == 1 ? "(1 - t)" : "(1 - t)^" + std::to_string(denom_power);
    return num + "/" + den;
  }
};

namespace detail {

inline std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline std::vector<long> poly_add(std::vector<long> a, const std::vector<long>& b, std::size_t shift = 0) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  return a;
}

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.total_degree() != b.total_degree() ? a.total_degree() < b.total_degree() : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (auto& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(g); })) out.push_back(g);
  return out;
}

/// Numerator K(t) with Hilb(S/I) = K(t)/(1-t)^nvars, for monomial I.
inline std::vector<long> hilbert_numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {0};
  // Find a variable shared by two generators; none means pairwise coprime.
  const std::size_t m = gens.front().arity();
  std::optional<std::size_t> pivot;
  for (const auto& g : gens) {
    for (std::size_t v = 0; v < m && !pivot; ++v) {
      if (g[v] == 0) continue;
      int count = 0;
      for (const auto& h : gens) count += h[v] != 0;
      if (count > 1) pivot = v;
    }
    if (pivot) break;
  }
  if (!pivot) {
    std::vector<long> num{1};
    for (const auto& g : gens) {
      std::vector<long> factor(static_cast<std::size_t>(g.total_degree()) + 1, 0);
      factor[0] = 1;
      factor.back() = -1;
      num = poly_mul(num, factor);
    }
    return num;
  }
  std::size_t x = *pivot;
  // I + <x>
  std::vector<Monomial> plus{Monomial::variable(m, x)};
  for (const auto& g : gens)
    if (g[x] == 0) plus.push_back(g);
  // I : x
  std::vector<Monomial> colon;
  for (auto g : gens) {
    if (g[x] > 0) g.set(x, g[x] - 1);
    colon.push_back(std::move(g));
  }
  return poly_add(hilbert_numerator(std::move(plus)), hilbert_numerator(std::move(colon)), 1);
}

}  // namespace detail

/// Series of S/<monomials> over a standard-graded ring with `nvars` variables.
inline HilbertSeries hilbert_series_monomial(const std::vector<Monomial>& gens, std::size_t nvars) {
  return HilbertSeries(detail::hilbert_numerator(gens), static_cast<int>(nvars));
}

inline HilbertSeries hilbert_series(const GroebnerBasis& gb) {
  if (!gb.ring()->standard_grading()) throw UsageError("Hilbert series needs every variable in degree 1");
  return hilbert_series_monomial(gb.leading_monomials(), gb.ring()->size());
}

inline HilbertSeries hilbert_series_quotient(const Ideal& ideal, const MonomialOrder& order) {
  if (!ideal.is_homogeneous()) throw Inhomogeneous("Hilbert series requested for an inhomogeneous ideal");
  return hilbert_series(buchberger(ideal, order));
}

inline HilbertSeries hilbert_series_quotient(const Ideal& ideal) {
  return hilbert_series_quotient(ideal, MonomialOrder::degrevlex(ideal.ring->size()));
}

}  // namespace otk
