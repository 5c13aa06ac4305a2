#pragma once
// Deterministic Buchberger engine over Q.
//
// Pair selection follows the normal strategy (smallest lcm degree, then the
// pair indices lexicographically). Buchberger's coprime and chain criteria
// are applied. Every returned basis is reduced and monic, and is re-checked
// (all S-polynomials reduce to zero) before it is handed out.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "otk/linalg.hpp"
#include "otk/matroid.hpp"
#include "otk/polyring.hpp"

namespace otk {

struct Ideal {
  Ring ring;
  std::vector<Polynomial> generators;

  Ideal() = default;
  Ideal(Ring r, std::vector<Polynomial> gens) : ring(std::move(r)) {
    for (auto& g : gens) {
      if (!same_ring(ring, g.ring())) throw UsageError("ideal generator lives in another ring");
      if (!g.is_zero()) generators.push_back(std::move(g));
    }
  }

  bool is_homogeneous() const {
    return std::all_of(generators.begin(), generators.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
  }
};

namespace detail {

using Term = std::pair<Monomial, Rational>;

/// Polynomial with terms sorted descending in a fixed order; the leading
/// coefficient is 1 for basis elements.
struct OrderedPoly {
  std::vector<Term> terms;
  bool empty() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().first; }
  const Rational& lc() const { return terms.front().second; }
};

inline OrderedPoly to_ordered(const Polynomial& p, const MonomialOrder& order) {
  return OrderedPoly{p.sorted_terms(order)};
}

inline Polynomial from_ordered(const Ring& ring, const OrderedPoly& p) {
  Polynomial out(ring);
  for (const auto& [m, c] : p.terms) out.add_term(m, c);
  return out;
}

inline void make_monic(OrderedPoly& p) {
  if (p.empty() || p.lc() == 1) return;
  Rational inv = 1 / p.lc();
  for (auto& t : p.terms) t.second *= inv;
}

/// Full reduction of p by monic divisors. `skip` excludes one divisor.
inline OrderedPoly reduce(const OrderedPoly& p, const std::vector<OrderedPoly>& divisors, const MonomialOrder& order,
                          std::size_t skip = static_cast<std::size_t>(-1)) {
  std::map<Monomial, Rational, OrderGreater> acc(OrderGreater{&order});
  for (const auto& t : p.terms) acc.emplace(t.first, t.second);
  OrderedPoly rem;
  while (!acc.empty()) {
    auto it = acc.begin();
    const Monomial& m = it->first;
    const OrderedPoly* div = nullptr;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      if (k == skip || divisors[k].empty()) continue;
      if (divisors[k].lm().divides(m)) {
        div = &divisors[k];
        break;
      }
    }
    if (!div) {
      rem.terms.emplace_back(it->first, it->second);
      acc.erase(it);
      continue;
    }
    Monomial q = m / div->lm();
    Rational c = it->second;
    acc.erase(it);
    for (std::size_t t = 1; t < div->terms.size(); ++t) {
      Monomial mt = div->terms[t].first * q;
      auto [slot, inserted] = acc.try_emplace(std::move(mt), 0);
      slot->second -= c * div->terms[t].second;
      if (slot->second == 0) acc.erase(slot);
    }
  }
  return rem;
}

inline OrderedPoly s_polynomial(const OrderedPoly& f, const OrderedPoly& g, const MonomialOrder& order) {
  Monomial l = lcm(f.lm(), g.lm());
  Monomial a = l / f.lm(), b = l / g.lm();
  std::map<Monomial, Rational, OrderGreater> acc(OrderGreater{&order});
  Rational fi = 1 / f.lc(), gi = 1 / g.lc();
  for (const auto& [m, c] : f.terms) acc[m * a] += c * fi;
  for (const auto& [m, c] : g.terms) acc[m * b] -= c * gi;
  OrderedPoly out;
  for (auto& [m, c] : acc)
    if (c != 0) out.terms.emplace_back(m, c);
  return out;
}

}  // namespace detail

class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, MonomialOrder order, std::vector<detail::OrderedPoly> basis)
      : ring_(std::move(ring)), order_(std::move(order)), basis_(std::move(basis)) {}

  const Ring& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t size() const { return basis_.size(); }
  bool is_unit() const { return basis_.size() == 1 && basis_.front().lm().is_one(); }

  std::vector<Polynomial> polynomials() const {
    std::vector<Polynomial> out;
    for (const auto& b : basis_) out.push_back(detail::from_ordered(ring_, b));
    return out;
  }
  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& b : basis_) out.push_back(b.lm());
    return out;
  }
  const std::vector<detail::OrderedPoly>& raw() const { return basis_; }

  Ideal ideal() const { return Ideal(ring_, polynomials()); }

  bool operator==(const GroebnerBasis& o) const {
    if (!same_ring(ring_, o.ring_) || basis_.size() != o.basis_.size()) return false;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i].terms != o.basis_[i].terms) return false;
    return true;
  }

 private:
  Ring ring_;
  MonomialOrder order_;
  std::vector<detail::OrderedPoly> basis_;
};

inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (!same_ring(p.ring(), gb.ring())) throw UsageError("normal_form: polynomial and basis live in different rings");
  return detail::from_ordered(gb.ring(), detail::reduce(detail::to_ordered(p, gb.order()), gb.raw(), gb.order()));
}

inline bool ideal_membership(const Polynomial& p, const GroebnerBasis& gb) { return normal_form(p, gb).is_zero(); }

/// First S-polynomial of `polys` (under `order`) with a nonzero remainder;
/// nullopt when the set is a Gröbner basis.
inline std::optional<std::pair<Polynomial, Polynomial>> groebner_witness(const std::vector<Polynomial>& polys,
                                                                         const MonomialOrder& order) {
  std::vector<detail::OrderedPoly> g;
  for (const auto& p : polys)
    if (!p.is_zero()) g.push_back(detail::to_ordered(p, order));
  if (g.empty()) return std::nullopt;
  const Ring& ring = polys.front().ring();
  for (auto& x : g) detail::make_monic(x);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g[i].lm().coprime(g[j].lm())) continue;
      auto s = detail::s_polynomial(g[i], g[j], order);
      auto r = detail::reduce(s, g, order);
      if (!r.empty()) return std::make_pair(detail::from_ordered(ring, s), detail::from_ordered(ring, r));
    }
  return std::nullopt;
}

inline bool is_groebner_basis(const std::vector<Polynomial>& polys, const MonomialOrder& order) {
  return !groebner_witness(polys, order).has_value();
}

namespace detail {

inline bool is_reduced(const std::vector<OrderedPoly>& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].lc() != 1) return false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : g[i].terms)
        if (g[j].lm().divides(t.first)) return false;
    }
  }
  return true;
}

}  // namespace detail

inline GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order) {
  using detail::OrderedPoly;
  if (order.arity() != ideal.ring->size()) throw UsageError("monomial order arity does not match the ring");
  std::vector<OrderedPoly> g;
  for (const auto& p : ideal.generators) {
    OrderedPoly op = detail::to_ordered(p, order);
    if (op.empty()) continue;
    detail::make_monic(op);
    g.push_back(std::move(op));
  }

  // (lcm degree, i, j)
  std::set<std::tuple<long, std::size_t, std::size_t>> pending;
  auto pair_key = [&](std::size_t i, std::size_t j) {
    return std::make_tuple(lcm(g[i].lm(), g[j].lm()).total_degree(), i, j);
  };
  auto is_pending = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return pending.count(pair_key(i, j)) != 0;
  };
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert(pair_key(i, j));

  while (!pending.empty()) {
    auto [deg, i, j] = *pending.begin();
    pending.erase(pending.begin());
    const Monomial& li = g[i].lm();
    const Monomial& lj = g[j].lm();
    if (li.coprime(lj)) continue;
    Monomial l = lcm(li, lj);
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (g[k].lm().divides(l) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
    }
    if (chain) continue;
    OrderedPoly r = detail::reduce(detail::s_polynomial(g[i], g[j], order), g, order);
    if (r.empty()) continue;
    detail::make_monic(r);
    g.push_back(std::move(r));
    std::size_t k = g.size() - 1;
    for (std::size_t m = 0; m < k; ++m) pending.insert(pair_key(m, k));
  }

  // Minimal basis: drop elements whose leading monomial is divisible by
  // another's (earlier element wins on ties).
  std::vector<OrderedPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (g[j].lm().divides(g[i].lm()) && (g[j].lm() != g[i].lm() || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    OrderedPoly tail;
    tail.terms.assign(minimal[i].terms.begin() + 1, minimal[i].terms.end());
    OrderedPoly reduced_tail = detail::reduce(tail, minimal, order, i);
    OrderedPoly next;
    next.terms.push_back(minimal[i].terms.front());
    next.terms.insert(next.terms.end(), reduced_tail.terms.begin(), reduced_tail.terms.end());
    minimal[i] = std::move(next);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const OrderedPoly& a, const OrderedPoly& b) { return order.compare(a.lm(), b.lm()) < 0; });

  if (!detail::is_reduced(minimal)) throw InternalError("buchberger produced a non-reduced basis");
  GroebnerBasis gb(ideal.ring, order, std::move(minimal));
  if (auto w = groebner_witness(gb.polynomials(), order))
    throw InternalError("buchberger output fails the S-polynomial test: " + w->first.to_string());
  return gb;
}

inline Ideal initial_ideal(const GroebnerBasis& gb) {
  std::vector<Polynomial> gens;
  for (const auto& m : gb.leading_monomials()) gens.emplace_back(gb.ring(), m);
  return Ideal(gb.ring(), std::move(gens));
}

/// Equality of ideals via reduced bases in a common order.
inline bool same_ideal(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring, b.ring)) return false;
  auto order = MonomialOrder::degrevlex(a.ring->size());
  return buchberger(a, order) == buchberger(b, order);
}

inline bool ideal_contains(const Ideal& big, const Ideal& small) {
  auto gb = buchberger(big, MonomialOrder::degrevlex(big.ring->size()));
  return std::all_of(small.generators.begin(), small.generators.end(),
                     [&](const Polynomial& p) { return ideal_membership(p, gb); });
}

// ---------------------------------------------------------------------------
// Graded pieces.

namespace detail {

inline void enumerate_monomials(const VarSet& ring, long degree, std::size_t var, Monomial& current,
                                std::vector<Monomial>& out) {
  if (var == ring.size()) {
    if (degree == 0) out.push_back(current);
    return;
  }
  int w = ring.weight(var);
  if (w == 0) throw UsageError("graded pieces need positive weights; " + ring.name(var) + " has weight 0");
  for (long e = 0; e * w <= degree; ++e) {
    current.set(var, static_cast<Monomial::Exponent>(e));
    enumerate_monomials(ring, degree - e * w, var + 1, current, out);
  }
  current.set(var, 0);
}

}  // namespace detail

/// All monomials of the given weighted degree.
inline std::vector<Monomial> monomials_of_degree(const VarSet& ring, long degree) {
  std::vector<Monomial> out;
  Monomial cur(ring.size());
  detail::enumerate_monomials(ring, degree, 0, cur, out);
  return out;
}

/// Standard monomials of the given degree, sorted descending in gb's order.
inline std::vector<Monomial> graded_piece_basis(const GroebnerBasis& gb, long degree) {
  auto lms = gb.leading_monomials();
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(*gb.ring(), degree)) {
    bool standard = std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
    if (standard) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), OrderGreater{&gb.order()});
  return out;
}

/// Coordinates of a reduced polynomial in a list of standard monomials.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  explicit MonomialIndex(const std::vector<Monomial>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i) index_.emplace(basis[i], i);
  }
  std::size_t size() const { return index_.size(); }
  SparseVector coordinates(const Polynomial& reduced, std::size_t offset = 0) const {
    SparseVector v;
    for (const auto& [m, c] : reduced.terms()) {
      auto it = index_.find(m);
      if (it == index_.end()) throw InternalError("monomial " + to_string(m, *reduced.ring()) + " is not standard");
      v.emplace_back(it->second + offset, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

 private:
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

// ---------------------------------------------------------------------------
// Colon ideals, saturation, dimension.

namespace detail {

/// Ring with one extra variable prepended; returns the new ring and the map
/// from old indices.
inline std::pair<Ring, std::vector<std::size_t>> prepend_variable(const Ring& ring, const std::string& stem) {
  std::string name = stem;
  while (ring->find(name)) name += "_";
  std::vector<std::string> names{name};
  std::vector<int> weights{1};
  for (std::size_t i = 0; i < ring->size(); ++i) {
    names.push_back(ring->name(i));
    weights.push_back(ring->weight(i));
  }
  std::vector<std::size_t> map(ring->size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i + 1;
  return {make_ring(std::move(names), std::move(weights)), std::move(map)};
}

}  // namespace detail

/// I ∩ <f> by eliminating t from t*I + (1-t)*<f>.
inline Ideal intersect_principal(const Ideal& ideal, const Polynomial& f) {
  auto [big, map] = detail::prepend_variable(ideal.ring, "t");
  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one(big, Rational(1));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators) gens.push_back(t * g.embed(big, map));
  gens.push_back((one - t) * f.embed(big, map));
  auto gb = buchberger(Ideal(big, gens), MonomialOrder::elimination(big->size(), 1));
  std::vector<std::size_t> back(big->size(), 0);
  for (std::size_t i = 1; i < big->size(); ++i) back[i] = i - 1;
  std::vector<Polynomial> out;
  for (const auto& p : gb.polynomials())
    if (!p.involves(0)) out.push_back(p.embed(ideal.ring, back));
  return Ideal(ideal.ring, std::move(out));
}

inline Ideal colon_ideal(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw UsageError("colon by the zero polynomial");
  Ideal inter = intersect_principal(ideal, f);
  std::vector<Polynomial> gens;
  for (const auto& g : inter.generators) gens.push_back(divide_exact(g, f));
  Ideal out(ideal.ring, std::move(gens));
  auto gb = buchberger(out, MonomialOrder::degrevlex(ideal.ring->size()));
  return gb.ideal();
}

/// I : f^infinity, by iterating the colon until it stabilises.
inline Ideal saturation(const Ideal& ideal, const Polynomial& f) {
  auto order = MonomialOrder::degrevlex(ideal.ring->size());
  GroebnerBasis current = buchberger(ideal, order);
  for (;;) {
    Ideal next = colon_ideal(current.ideal(), f);
    GroebnerBasis next_gb = buchberger(next, order);
    if (next_gb == current) return current.ideal();
    current = std::move(next_gb);
  }
}

/// Krull dimension of ring/I: the largest set of variables containing the
/// support of no minimal generator of the initial ideal. -1 for the unit ideal.
inline int krull_dimension(const Ideal& ideal, const MonomialOrder& order) {
  auto gb = buchberger(ideal, order);
  if (gb.is_unit()) return -1;
  std::vector<std::uint64_t> supports;
  const std::size_t m = ideal.ring->size();
  if (m > 63) throw UsageError("krull_dimension supports at most 63 variables");
  for (const auto& lm : gb.leading_monomials()) supports.push_back(set_to_mask(lm.support()));
  int best = 0;
  std::function<void(std::size_t, std::uint64_t, int)> search = [&](std::size_t var, std::uint64_t chosen, int count) {
    if (count + static_cast<int>(m - var) <= best) return;
    if (var == m) {
      best = std::max(best, count);
      return;
    }
    std::uint64_t with = chosen | (std::uint64_t{1} << var);
    bool ok = std::none_of(supports.begin(), supports.end(), [with](std::uint64_t s) { return (with & s) == s; });
    if (ok) search(var + 1, with, count + 1);
    search(var + 1, chosen, count);
  };
  search(0, 0, 0);
  return best;
}

// ---------------------------------------------------------------------------
// Independent oracle for the Orlik-Terao ideal.

inline constexpr std::size_t kOracleMaxVectors = 6;

/// Kernel of k[u_1..u_n] -> Frac k[x_1..x_d], u_i -> 1/a_i(x). The graph
/// ideal <u_i a_i(x) - 1> is prime (its quotient is a localisation of
/// k[x]), so eliminating x yields the kernel directly.
inline Ideal kernel_by_elimination(const VectorConfig& config) {
  const std::size_t n = config.size(), d = config.rank();
  if (n > kOracleMaxVectors)
    throw OracleScale("kernel_by_elimination supports n <= " + std::to_string(kOracleMaxVectors));
  std::vector<std::string> names;
  for (std::size_t j = 0; j < d; ++j) names.push_back("x" + std::to_string(j + 1));
  for (std::size_t i = 0; i < n; ++i) names.push_back("u" + std::to_string(i + 1));
  Ring big = make_ring(names);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial form(big);
    for (std::size_t j = 0; j < d; ++j) form += Polynomial::variable(big, j) * Rational(config.vector(i)[j]);
    gens.push_back(Polynomial::variable(big, d + i) * form - Polynomial(big, Rational(1)));
  }
  auto gb = buchberger(Ideal(big, gens), MonomialOrder::elimination(big->size(), d));
  std::vector<std::string> unames(names.begin() + static_cast<long>(d), names.end());
  Ring ring = make_ring(unames);
  std::vector<Polynomial> out;
  for (const auto& p : gb.polynomials()) {
    bool free_of_x = true;
    for (std::size_t j = 0; j < d; ++j) free_of_x = free_of_x && !p.involves(j);
    if (free_of_x) out.push_back(p.embed(ring));
  }
  return Ideal(ring, std::move(out));
}

}  // namespace otk
