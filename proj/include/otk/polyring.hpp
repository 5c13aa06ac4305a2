#pragma once
// Exact sparse multivariate polynomials over Q with pluggable monomial orders.
//
// Grading: every variable carries a non-negative integer weight (default 1).
// Cohomological degrees of the hypertoric rings are twice the internal degree;
// that factor is applied only when reporting.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "otk/errors.hpp"

namespace otk {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

// ---------------------------------------------------------------------------
// VarSet

class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names, std::vector<int> weights = {})
      : names_(std::move(names)), weights_(std::move(weights)) {
    if (weights_.empty()) weights_.assign(names_.size(), 1);
    if (weights_.size() != names_.size()) throw UsageError("VarSet: one weight per variable required");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw UsageError("VarSet: empty variable name");
      if (weights_[i] < 0) throw UsageError("VarSet: negative weight for " + names_[i]);
      if (!index_.emplace(names_[i], i).second) throw UsageError("VarSet: duplicate variable " + names_[i]);
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  int weight(std::size_t i) const { return weights_.at(i); }
  const std::vector<int>& weights() const { return weights_; }

  bool standard_grading() const {
    return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
  }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(std::string_view name) const {
    auto i = find(name);
    if (!i) throw UsageError("unknown variable '" + std::string(name) + "'");
    return *i;
  }

  bool operator==(const VarSet& o) const { return names_ == o.names_ && weights_ == o.weights_; }

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
  std::unordered_map<std::string, std::size_t> index_;
};

using Ring = std::shared_ptr<const VarSet>;

inline Ring make_ring(std::vector<std::string> names, std::vector<int> weights = {}) {
  return std::make_shared<const VarSet>(std::move(names), std::move(weights));
}

inline bool same_ring(const Ring& a, const Ring& b) { return a == b || (a && b && *a == *b); }

// ---------------------------------------------------------------------------
// Monomial: dense exponent vector over the ring's variables.

class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t arity, std::size_t var, Exponent power = 1) {
    Monomial m(arity);
    m.exps_.at(var) = power;
    return m;
  }

  std::size_t arity() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, Exponent e) { exps_.at(i) = e; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  long total_degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0L); }

  long weighted_degree(const VarSet& ring) const {
    long d = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) d += static_cast<long>(exps_[i]) * ring.weight(i);
    return d;
  }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0) s.push_back(i);
    return s;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    return r;
  }

  /// Exact quotient; requires o.divides(*this).
  Monomial operator/(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    return r;
  }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (Exponent e : exps_) h = (h ^ e) * 1099511628211ULL;
    return h;
  }

 private:
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

inline std::string to_string(const Monomial& m, const VarSet& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.name(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------------------
// MonomialOrder

enum class OrderKind { Lex, DegLex, DegRevLex, Elimination, Weighted };

/// A term order. `priority` lists variable indices from most to least
/// significant; the default is the ring's own order (index 0 largest).
class MonomialOrder {
 public:
  static MonomialOrder lex(std::size_t arity, std::vector<std::size_t> priority = {}) {
    return MonomialOrder(OrderKind::Lex, arity, std::move(priority));
  }
  static MonomialOrder deglex(std::size_t arity, std::vector<std::size_t> priority = {}) {
    return MonomialOrder(OrderKind::DegLex, arity, std::move(priority));
  }
  static MonomialOrder degrevlex(std::size_t arity, std::vector<std::size_t> priority = {}) {
    return MonomialOrder(OrderKind::DegRevLex, arity, std::move(priority));
  }
  /// Block order: the first `block` variables of the priority list are
  /// eliminated (compared first, degrevlex inside each block).
  static MonomialOrder elimination(std::size_t arity, std::size_t block, std::vector<std::size_t> priority = {}) {
    MonomialOrder o(OrderKind::Elimination, arity, std::move(priority));
    if (block > arity) throw UsageError("elimination block larger than the ring");
    o.block_ = block;
    return o;
  }
  /// Weight vector (indexed by variable) refined by a tie-break order.
  static MonomialOrder weighted(std::vector<long> weights, OrderKind tie, std::vector<std::size_t> priority = {}) {
    if (tie == OrderKind::Weighted || tie == OrderKind::Elimination)
      throw UsageError("weighted order tie-break must be lex, deglex or degrevlex");
    for (long w : weights)
      if (w < 0) throw UsageError("weighted order requires non-negative weights");
    MonomialOrder o(OrderKind::Weighted, weights.size(), std::move(priority));
    o.weights_ = std::move(weights);
    o.tie_ = tie;
    return o;
  }

  OrderKind kind() const { return kind_; }
  std::size_t arity() const { return priority_.size(); }
  const std::vector<std::size_t>& priority() const { return priority_; }
  std::size_t block() const { return block_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case OrderKind::Lex: return lex_cmp(a, b, 0, priority_.size());
      case OrderKind::DegLex: {
        auto c = a.total_degree() <=> b.total_degree();
        return c != 0 ? c : lex_cmp(a, b, 0, priority_.size());
      }
      case OrderKind::DegRevLex: return grevlex_cmp(a, b, 0, priority_.size());
      case OrderKind::Elimination: {
        auto c = grevlex_cmp(a, b, 0, block_);
        return c != 0 ? c : grevlex_cmp(a, b, block_, priority_.size());
      }
      case OrderKind::Weighted: {
        long wa = 0, wb = 0;
        for (std::size_t i = 0; i < weights_.size(); ++i) {
          wa += weights_[i] * static_cast<long>(a[i]);
          wb += weights_[i] * static_cast<long>(b[i]);
        }
        if (auto c = wa <=> wb; c != 0) return c;
        switch (tie_) {
          case OrderKind::Lex: return lex_cmp(a, b, 0, priority_.size());
          case OrderKind::DegLex: {
            auto c = a.total_degree() <=> b.total_degree();
            return c != 0 ? c : lex_cmp(a, b, 0, priority_.size());
          }
          default: return grevlex_cmp(a, b, 0, priority_.size());
        }
      }
    }
    return std::strong_ordering::equal;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string describe(const VarSet& ring) const {
    std::string s;
    switch (kind_) {
      case OrderKind::Lex: s = "lex"; break;
      case OrderKind::DegLex: s = "deglex"; break;
      case OrderKind::DegRevLex: s = "degrevlex"; break;
      case OrderKind::Elimination: s = "elim" + std::to_string(block_); break;
      case OrderKind::Weighted: s = "weighted"; break;
    }
    s += '(';
    for (std::size_t i = 0; i < priority_.size(); ++i) {
      if (i) s += '>';
      s += ring.name(priority_[i]);
    }
    return s + ')';
  }

 private:
  MonomialOrder(OrderKind kind, std::size_t arity, std::vector<std::size_t> priority)
      : kind_(kind), priority_(std::move(priority)) {
    if (priority_.empty()) {
      priority_.resize(arity);
      std::iota(priority_.begin(), priority_.end(), std::size_t{0});
    }
    std::vector<std::size_t> check = priority_;
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < check.size(); ++i)
      if (check[i] != i || check.size() != arity) throw UsageError("monomial order priority is not a permutation");
  }

  std::strong_ordering lex_cmp(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const {
    for (std::size_t k = lo; k < hi; ++k) {
      std::size_t v = priority_[k];
      if (a[v] != b[v]) return a[v] <=> b[v];
    }
    return std::strong_ordering::equal;
  }

  std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const {
    long da = 0, db = 0;
    for (std::size_t k = lo; k < hi; ++k) {
      da += a[priority_[k]];
      db += b[priority_[k]];
    }
    if (da != db) return da <=> db;
    for (std::size_t k = hi; k-- > lo;) {
      std::size_t v = priority_[k];
      if (a[v] != b[v]) return b[v] <=> a[v];
    }
    return std::strong_ordering::equal;
  }

  OrderKind kind_;
  std::vector<std::size_t> priority_;
  std::size_t block_ = 0;
  std::vector<long> weights_;
  OrderKind tie_ = OrderKind::DegRevLex;
};

/// Strict "greater" comparator; sorts containers in descending order.
struct OrderGreater {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

inline std::strong_ordering compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  return order.compare(a, b);
}

// ---------------------------------------------------------------------------
// Polynomial

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  Polynomial(Ring ring, const Rational& c) : ring_(std::move(ring)) {
    if (c != 0) terms_.emplace(Monomial(ring_->size()), c);
  }
  Polynomial(Ring ring, Monomial m, const Rational& c = 1) : ring_(std::move(ring)) {
    if (m.arity() != ring_->size()) throw UsageError("monomial arity does not match ring");
    if (c != 0) terms_.emplace(std::move(m), c);
  }

  static Polynomial variable(const Ring& ring, std::size_t i) {
    return Polynomial(ring, Monomial::variable(ring->size(), i));
  }
  static Polynomial variable(const Ring& ring, std::string_view name) {
    return variable(ring, ring->index_of(name));
  }

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds c*m; the entry is dropped if it cancels.
  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [m, coef] : terms_) coef *= c;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial r(a.ring_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial multiply_monomial(const Monomial& m, const Rational& c = 1) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, cc * c);
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial r(ring_, Rational(1));
    Polynomial base = *this;
    while (e) {
      if (e & 1u) r *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return r;
  }

  bool operator==(const Polynomial& o) const { return same_ring(ring_, o.ring_) && terms_ == o.terms_; }

  bool involves(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first[var] != 0; });
  }

  /// Largest weighted degree of a term; nullopt for the zero polynomial.
  std::optional<long> degree() const {
    std::optional<long> d;
    for (const auto& [m, c] : terms_) {
      long w = m.weighted_degree(*ring_);
      if (!d || w > *d) d = w;
    }
    return d;
  }

  bool is_homogeneous() const {
    std::optional<long> d;
    for (const auto& [m, c] : terms_) {
      long w = m.weighted_degree(*ring_);
      if (d && *d != w) return false;
      d = w;
    }
    return true;
  }

  /// Terms sorted descending under `order`.
  std::vector<std::pair<Monomial, Rational>> sorted_terms(const MonomialOrder& order) const {
    std::vector<std::pair<Monomial, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [&](const auto& x, const auto& y) { return order.greater(x.first, y.first); });
    return v;
  }

  std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw UsageError("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
      if (order.greater(it->first, best->first)) best = it;
    return *best;
  }

  Polynomial monic(const MonomialOrder& order) const {
    if (is_zero()) return *this;
    Rational inv = 1 / leading_term(order).second;
    return *this * inv;
  }

  /// Re-expresses the polynomial over `target`, sending variable i to
  /// index_map[i].
  Polynomial embed(const Ring& target, const std::vector<std::size_t>& index_map) const {
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
      Monomial t(target->size());
      for (std::size_t i = 0; i < m.arity(); ++i)
        if (m[i]) t.set(index_map.at(i), t[index_map.at(i)] + m[i]);
      r.add_term(t, c);
    }
    return r;
  }

  /// Embedding that matches variables by name.
  Polynomial embed(const Ring& target) const {
    std::vector<std::size_t> map(ring_->size());
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      auto j = target->find(ring_->name(i));
      if (!j) {
        if (involves(i)) throw UsageError("variable " + ring_->name(i) + " missing from target ring");
        map[i] = 0;
        continue;
      }
      map[i] = *j;
    }
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
      Monomial t(target->size());
      for (std::size_t i = 0; i < m.arity(); ++i)
        if (m[i]) t.set(map[i], t[map[i]] + m[i]);
      r.add_term(t, c);
    }
    return r;
  }

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw UsageError("polynomials live in different rings");
  }

  Ring ring_;
  TermMap terms_;
};

/// Display order: degrevlex in the ring's own variable order, descending.
inline std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  auto order = MonomialOrder::degrevlex(ring_->size());
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted_terms(order)) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += otk::to_string(m, *ring_);
    }
  }
  return out;
}

inline std::string to_string(const Polynomial& p) { return p.to_string(); }

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

/// p with variable `var` replaced by `value` (value may live in p's ring or
/// be embeddable into it by variable name).
inline Polynomial substitute(const Polynomial& p, std::string_view var, const Polynomial& value) {
  const Ring& ring = p.ring();
  std::size_t v = ring->index_of(var);
  Polynomial val = same_ring(ring, value.ring()) ? value : value.embed(ring);
  std::vector<Polynomial> powers{Polynomial(ring, Rational(1))};
  Polynomial out(ring);
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest.set(v, 0);
    while (powers.size() <= m[v]) powers.push_back(powers.back() * val);
    out += powers[m[v]].multiply_monomial(rest, c);
  }
  return out;
}

inline Polynomial substitute(const Polynomial& p, std::string_view var, const Rational& value) {
  return substitute(p, var, Polynomial(p.ring(), value));
}

inline Polynomial divide_exact_by_var(const Polynomial& p, std::string_view var) {
  std::size_t v = p.ring()->index_of(var);
  Polynomial out(p.ring());
  Monomial x = Monomial::variable(p.ring()->size(), v);
  for (const auto& [m, c] : p.terms()) {
    if (m[v] == 0) throw NotDivisible("term " + to_string(m, *p.ring()) + " is not divisible by " + std::string(var));
    out.add_term(m / x, c);
  }
  return out;
}

/// Multivariate exact division p / f; throws NotDivisible when f does not divide p.
inline Polynomial divide_exact(const Polynomial& p, const Polynomial& f) {
  if (f.is_zero()) throw UsageError("division by the zero polynomial");
  auto order = MonomialOrder::degrevlex(p.ring()->size());
  auto [lm, lc] = f.leading_term(order);
  Polynomial rem = p;
  Polynomial quot(p.ring());
  while (!rem.is_zero()) {
    auto [m, c] = rem.leading_term(order);
    if (!lm.divides(m)) throw NotDivisible("polynomial division leaves a remainder");
    Monomial q = m / lm;
    Rational k = c / lc;
    quot.add_term(q, k);
    rem -= f.multiply_monomial(q, k);
  }
  return quot;
}

// ---------------------------------------------------------------------------
// Text format: sums of products of rational constants, variables and
// parenthesised subexpressions, with `^` for non-negative integer powers.

namespace detail {

class PolyParser {
 public:
  PolyParser(Ring ring, std::string_view text) : ring_(std::move(ring)), s_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial t = term();
    acc += negate ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) {
      skip();
      std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected exponent", pos_);
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      std::string den = "1";
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        den = read_digits();
        if (den.empty()) throw ParseError("expected denominator", pos_);
      }
      if (Integer(den) == 0) throw ParseError("zero denominator", pos_);
      Rational r{Integer(num), Integer(den)};
      r.canonicalize();
      return Polynomial(ring_, r);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = ring_->find(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", start);
      return Polynomial::variable(ring_, *idx);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  Ring ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(const Ring& ring, std::string_view text) {
  return detail::PolyParser(ring, text).parse();
}

}  // namespace otk

template <>
struct std::hash<otk::Polynomial> {
  std::size_t operator()(const otk::Polynomial& p) const { return std::hash<std::string>{}(p.to_string()); }
};
