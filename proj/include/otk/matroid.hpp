#pragma once
// Combinatorics of an integer vector configuration a_1..a_n in Z^d.
//
// Indices are 0-based in code and 1-based in every rendered string.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "otk/errors.hpp"
#include "otk/linalg.hpp"

namespace otk {

using IndexSet = std::vector<std::size_t>;  // sorted, duplicate free

inline std::string format_set(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

inline IndexSet mask_to_set(std::uint64_t mask) {
  IndexSet s;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) s.push_back(i);
  return s;
}

inline std::uint64_t set_to_mask(const IndexSet& s) {
  std::uint64_t m = 0;
  for (auto i : s) m |= std::uint64_t{1} << i;
  return m;
}

/// Orders index sets by size, then lexicographically.
inline bool shortlex_less(const IndexSet& a, const IndexSet& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

class VectorConfig {
 public:
  static constexpr std::size_t kMaxVectors = 24;

  VectorConfig(std::size_t rank, std::vector<std::vector<long>> vectors, std::optional<std::vector<long>> theta = {})
      : rank_(rank), vectors_(std::move(vectors)), theta_(std::move(theta)) {
    if (rank_ == 0) throw InvalidConfig("lattice rank must be positive");
    if (vectors_.size() < rank_) throw InvalidConfig("need at least as many vectors as the lattice rank");
    if (vectors_.size() > kMaxVectors) throw InvalidConfig("at most 24 vectors are supported");
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
      const auto& v = vectors_[i];
      if (v.size() != rank_)
        throw InvalidConfig("vector " + std::to_string(i + 1) + " has length " + std::to_string(v.size()) +
                            ", expected " + std::to_string(rank_));
      long g = 0;
      for (long x : v) g = std::gcd(g, x);
      if (g == 0) throw InvalidConfig("vector " + std::to_string(i + 1) + " is zero");
      if (g != 1) throw InvalidConfig("vector " + std::to_string(i + 1) + " is not primitive (gcd " + std::to_string(g) + ")");
    }
    if (theta_ && theta_->size() != vectors_.size())
      throw InvalidConfig("theta must have one entry per vector");
  }

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<std::vector<long>>& vectors() const { return vectors_; }
  const std::vector<long>& vector(std::size_t i) const { return vectors_.at(i); }
  bool has_theta() const { return theta_.has_value(); }
  const std::vector<long>& theta() const {
    if (!theta_) throw MissingTheta("configuration has no theta");
    return *theta_;
  }
  const std::optional<std::vector<long>>& theta_opt() const { return theta_; }

  /// d x |s| integer matrix whose columns are the selected vectors.
  IntMatrix columns(const IndexSet& s) const {
    IntMatrix m(rank_, std::vector<Integer>(s.size()));
    for (std::size_t j = 0; j < s.size(); ++j)
      for (std::size_t r = 0; r < rank_; ++r) m[r][j] = vectors_[s[j]][r];
    return m;
  }

  IndexSet ground_set() const {
    IndexSet s(size());
    std::iota(s.begin(), s.end(), std::size_t{0});
    return s;
  }

 private:
  std::size_t rank_;
  std::vector<std::vector<long>> vectors_;
  std::optional<std::vector<long>> theta_;
};

inline std::size_t rank(const VectorConfig& config, const IndexSet& subset) {
  if (subset.empty()) return 0;
  return integer_rank(config.columns(subset));
}

inline bool is_independent(const VectorConfig& config, const IndexSet& s) { return rank(config, s) == s.size(); }

// ---------------------------------------------------------------------------
// Input assumptions.

struct ValidationReport {
  bool full_rank = false;
  bool no_coloops = false;
  bool unimodular = false;
  std::optional<bool> simple;  // unset when simplicity was not evaluated
  std::vector<std::string> violations;

  bool ok() const { return full_rank && no_coloops && unimodular && simple.value_or(false); }
};

namespace detail {

inline void for_each_combination(std::size_t n, std::size_t k, const std::function<void(const IndexSet&)>& fn) {
  if (k > n) return;
  IndexSet s(k);
  std::iota(s.begin(), s.end(), std::size_t{0});
  for (;;) {
    fn(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

/// Does {x : <a_i, x> + theta_i = 0, i in s} have a rational solution?
inline bool affine_consistent(const VectorConfig& config, const IndexSet& s) {
  IntMatrix a(s.size(), std::vector<Integer>(config.rank()));
  IntMatrix ab(s.size(), std::vector<Integer>(config.rank() + 1));
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t r = 0; r < config.rank(); ++r) a[i][r] = ab[i][r] = config.vector(s[i])[r];
    ab[i][config.rank()] = config.theta()[s[i]];
  }
  return integer_rank(a) == integer_rank(ab);
}

}  // namespace detail

/// Checks the four standing assumptions. Simplicity needs theta; when
/// `require_simple` is set and theta is absent, MissingTheta is thrown.
inline ValidationReport validate(const VectorConfig& config, bool require_simple = true) {
  ValidationReport rep;
  const std::size_t n = config.size(), d = config.rank();
  rep.full_rank = rank(config, config.ground_set()) == d;
  if (!rep.full_rank) rep.violations.push_back("full rank: the vectors span a sublattice of rank < " + std::to_string(d));

  rep.no_coloops = true;
  for (std::size_t i = 0; i < n; ++i) {
    IndexSet rest;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) rest.push_back(j);
    if (rank(config, rest) != d) {
      rep.no_coloops = false;
      rep.violations.push_back("no co-loops: removing vector " + std::to_string(i + 1) + " drops the rank");
    }
  }

  rep.unimodular = true;
  detail::for_each_combination(n, d, [&](const IndexSet& s) {
    if (!rep.unimodular) return;
    Integer det = integer_determinant(config.columns(s));
    if (abs(det) > 1) {
      rep.unimodular = false;
      rep.violations.push_back("unimodular: minor on " + format_set(s) + " equals " + det.get_str());
    }
  });

  if (!config.has_theta()) {
    if (require_simple) throw MissingTheta("simplicity check requires theta");
    return rep;
  }
  bool simple = true;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n) && simple; ++mask) {
    IndexSet s = mask_to_set(mask);
    if (detail::affine_consistent(config, s) && rank(config, s) != s.size()) {
      simple = false;
      rep.violations.push_back("simple: hyperplanes " + format_set(s) + " meet in codimension " +
                               std::to_string(rank(config, s)) + " < " + std::to_string(s.size()));
    }
  }
  rep.simple = simple;
  return rep;
}

// ---------------------------------------------------------------------------
// Circuits.

/// All minimal dependent subsets, each sorted, listed lexicographically.
inline std::vector<IndexSet> circuits(const VectorConfig& config) {
  const std::size_t n = config.size(), d = config.rank();
  std::vector<IndexSet> out;
  for (std::size_t k = 1; k <= std::min(n, d + 1); ++k) {
    detail::for_each_combination(n, k, [&](const IndexSet& s) {
      if (rank(config, s) != k - 1) return;
      for (std::size_t drop = 0; drop < k; ++drop) {
        IndexSet t = s;
        t.erase(t.begin() + static_cast<long>(drop));
        if (rank(config, t) != t.size()) return;
      }
      out.push_back(s);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Rational relation on a circuit, scaled to a primitive integer vector with
/// a positive entry at the smallest index. Indexed like `circuit`.
inline std::vector<Integer> circuit_relation(const VectorConfig& config, const IndexSet& circuit) {
  DenseMatrix m(config.rank(), std::vector<Rational>(circuit.size()));
  for (std::size_t r = 0; r < config.rank(); ++r)
    for (std::size_t j = 0; j < circuit.size(); ++j) m[r][j] = config.vector(circuit[j])[r];
  auto ker = nullspace(std::move(m), circuit.size());
  if (ker.size() != 1) throw UsageError(format_set(circuit) + " is not a circuit");
  Integer lcm_den = 1;
  for (const auto& x : ker[0]) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> eta(circuit.size());
  Integer g = 0;
  for (std::size_t j = 0; j < circuit.size(); ++j) {
    Rational scaled = ker[0][j] * lcm_den;
    eta[j] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), eta[j].get_mpz_t());
  }
  for (auto& e : eta) e /= g;
  if (eta.front() < 0)
    for (auto& e : eta) e = -e;
  return eta;
}

struct SignedCircuit {
  IndexSet plus;
  IndexSet minus;
  std::size_t n = 0;
  /// theta-weighted sum over plus minus minus; zero when no theta was used.
  long tau = 0;
  bool oriented_by_theta = false;

  IndexSet support() const {
    IndexSet s = plus;
    s.insert(s.end(), minus.begin(), minus.end());
    std::sort(s.begin(), s.end());
    return s;
  }
  /// C_i in {-1, 0, +1}.
  int coefficient(std::size_t i) const {
    if (std::binary_search(plus.begin(), plus.end(), i)) return 1;
    if (std::binary_search(minus.begin(), minus.end(), i)) return -1;
    return 0;
  }
  std::vector<int> coefficients() const {
    std::vector<int> c(n, 0);
    for (auto i : plus) c[i] = 1;
    for (auto i : minus) c[i] = -1;
    return c;
  }
  std::size_t max_element() const { return support().back(); }
  SignedCircuit opposite() const {
    SignedCircuit o = *this;
    std::swap(o.plus, o.minus);
    o.tau = -tau;
    return o;
  }
  bool operator==(const SignedCircuit& o) const { return plus == o.plus && minus == o.minus && n == o.n; }
};

/// The +-1 relation on a circuit of a unimodular configuration. With theta,
/// the orientation with negative tau is chosen (the half-space intersection
/// over C+ and C- is empty); without theta, min(C) lies in C+.
inline SignedCircuit signed_circuit(const VectorConfig& config, const IndexSet& circuit, bool use_theta = true) {
  auto eta = circuit_relation(config, circuit);
  SignedCircuit sc;
  sc.n = config.size();
  for (std::size_t j = 0; j < circuit.size(); ++j) {
    if (abs(eta[j]) != 1) throw NotUnimodular("relation on " + format_set(circuit) + " has a coefficient " + eta[j].get_str());
    (eta[j] > 0 ? sc.plus : sc.minus).push_back(circuit[j]);
  }
  if (use_theta && config.has_theta()) {
    long tau = 0;
    for (auto i : sc.plus) tau += config.theta()[i];
    for (auto i : sc.minus) tau -= config.theta()[i];
    if (tau == 0) throw DegenerateTheta("theta is degenerate on circuit " + format_set(circuit));
    sc.tau = tau;
    if (tau > 0) sc = sc.opposite();
    sc.oriented_by_theta = true;
  }
  return sc;
}

inline std::vector<SignedCircuit> signed_circuits(const VectorConfig& config, bool use_theta = true) {
  std::vector<SignedCircuit> out;
  for (const auto& c : circuits(config)) out.push_back(signed_circuit(config, c, use_theta));
  return out;
}

// ---------------------------------------------------------------------------
// Flats and complexes.

inline IndexSet closure(const VectorConfig& config, const IndexSet& s) {
  std::size_t r = rank(config, s);
  IndexSet out;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (std::binary_search(s.begin(), s.end(), i)) {
      out.push_back(i);
      continue;
    }
    IndexSet t = s;
    t.insert(std::upper_bound(t.begin(), t.end(), i), i);
    if (rank(config, t) == r) out.push_back(i);
  }
  return out;
}

/// All flats, ordered by size and then lexicographically.
inline std::vector<IndexSet> flats(const VectorConfig& config) {
  std::vector<IndexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << config.size()); ++mask) {
    IndexSet s = mask_to_set(mask);
    if (closure(config, s) == s) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

inline std::vector<IndexSet> broken_circuits(const VectorConfig& config) {
  std::vector<IndexSet> out;
  for (auto c : circuits(config)) {
    c.pop_back();
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

enum class ComplexKind { Independence, BrokenCircuit };

struct ComplexSummary {
  ComplexKind kind;
  std::size_t ground_size = 0;
  std::size_t dimension = 0;  // the transform uses dimension + 1 = rank
  std::vector<long> f_vector;  // f_{-1}, f_0, ...; trailing zeros trimmed
  std::vector<long> h_vector;  // trailing zeros trimmed
};

inline long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// h(t) = sum_i f_{i-1} t^i (1-t)^(r-i).
inline std::vector<long> f_to_h(const std::vector<long>& f, std::size_t r) {
  std::vector<long> h(r + 1, 0);
  for (std::size_t i = 0; i < f.size() && i <= r; ++i)
    for (std::size_t j = 0; j <= r - i; ++j)
      h[i + j] += f[i] * binomial(static_cast<long>(r - i), static_cast<long>(j)) * ((j % 2) ? -1 : 1);
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

/// Inverse transform: f_{i-1} = sum_k C(r-k, i-k) h_k.
inline std::vector<long> h_to_f(const std::vector<long>& h, std::size_t r) {
  std::vector<long> f(r + 1, 0);
  for (std::size_t i = 0; i <= r; ++i)
    for (std::size_t k = 0; k <= i && k < h.size(); ++k)
      f[i] += binomial(static_cast<long>(r - k), static_cast<long>(i - k)) * h[k];
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  return f;
}

inline ComplexSummary complex_summary(const VectorConfig& config, ComplexKind kind) {
  std::vector<std::uint64_t> forbidden;
  if (kind == ComplexKind::Independence) {
    for (const auto& c : circuits(config)) forbidden.push_back(set_to_mask(c));
  } else {
    for (const auto& b : broken_circuits(config)) forbidden.push_back(set_to_mask(b));
  }
  ComplexSummary out;
  out.kind = kind;
  out.ground_size = config.size();
  out.dimension = config.rank() - 1;
  std::vector<long> f(config.size() + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << config.size()); ++mask) {
    bool face = std::none_of(forbidden.begin(), forbidden.end(), [mask](std::uint64_t c) { return (mask & c) == c; });
    if (face) ++f[static_cast<std::size_t>(__builtin_popcountll(mask))];
  }
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  out.f_vector = f;
  out.h_vector = f_to_h(f, config.rank());
  return out;
}

}  // namespace otk
