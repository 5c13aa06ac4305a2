#pragma once
// Degree-by-degree checks of the theorems relating the presentations built in
// algebras.hpp. Every comparison is exact; results are collected into a
// VerificationReport whose check order does not depend on scheduling.

#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "otk/algebras.hpp"
#include "otk/groebner.hpp"
#include "otk/hilbert.hpp"
#include "otk/linalg.hpp"
#include "otk/matroid.hpp"

namespace otk {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<long> degrees;
  std::optional<std::string> witness;
  std::vector<std::string> notes;
  std::map<std::string, HilbertSeries> series;
  double millis = 0;

  void fail(std::string why) {
    if (passed) witness = std::move(why);
    passed = false;
  }
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
  const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

inline long default_degree_bound(const VectorConfig& config) { return 2 * static_cast<long>(config.rank() + 1); }

// ---------------------------------------------------------------------------
// Shared per-degree machinery.

/// Deglex with u1 > ... > un > h (the variable order of ring_uh).
inline MonomialOrder comparison_order(const Ring& ring) { return MonomialOrder::deglex(ring->size()); }

inline Polynomial from_coordinates(const Ring& ring, const std::vector<Monomial>& basis, const SparseVector& row,
                                   std::size_t offset = 0, std::size_t limit = SIZE_MAX) {
  Polynomial p(ring);
  for (const auto& [i, c] : row)
    if (i >= offset && i - offset < std::min(limit, basis.size())) p.add_term(basis[i - offset], c);
  return p;
}

/// Graded pieces of the submodule of ring/gb generated by `generators` over
/// the polynomial ring in `multipliers` (all of degree 1), in standard-monomial
/// coordinates of gb.
///
/// A product m * g is only formed as l_j * (m' * g) with j the largest
/// multiplier index in m, so an element inserted as "class j" is multiplied
/// by l_i for i >= j only. Inserting candidates in increasing class keeps the
/// span of classes <= j equal to the span of all products of that shape.
struct GradedSpan {
  std::vector<std::vector<Monomial>> bases;
  std::vector<EchelonSpace> spaces;
  /// the inserted (independent) elements, in coordinates, per degree
  std::vector<std::vector<SparseVector>> elements;

  std::size_t dim(long degree) const { return spaces.at(static_cast<std::size_t>(degree)).rank(); }
};

inline GradedSpan graded_span(const GroebnerBasis& gb, const std::vector<Polynomial>& multipliers,
                              const std::vector<Polynomial>& generators, long bound) {
  struct Element {
    Polynomial poly;
    std::size_t cls;
  };
  GradedSpan out;
  std::vector<Element> previous;
  for (long d = 0; d <= bound; ++d) {
    out.bases.push_back(graded_piece_basis(gb, d));
    MonomialIndex index(out.bases.back());
    EchelonSpace space;
    std::vector<Element> current;
    std::vector<SparseVector> coords;
    auto offer = [&](Polynomial p, std::size_t cls) {
      Polynomial reduced = normal_form(p, gb);
      SparseVector v = index.coordinates(reduced);
      if (space.insert(v)) {
        current.push_back({std::move(reduced), cls});
        coords.push_back(std::move(v));
      }
    };
    for (const auto& g : generators)
      if (g.degree() == d) offer(g, 0);
    for (std::size_t j = 0; j < multipliers.size(); ++j)
      for (const auto& e : previous)
        if (e.cls <= j + 1) offer(multipliers[j] * e.poly, j + 1);
    out.spaces.push_back(std::move(space));
    out.elements.push_back(std::move(coords));
    previous = std::move(current);
  }
  return out;
}

inline std::vector<IndexSet> independent_sets(const VectorConfig& config) {
  std::vector<IndexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << config.size()); ++mask) {
    IndexSet s = mask_to_set(mask);
    if (is_independent(config, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

// ---------------------------------------------------------------------------
// The map psi : k[u,h]/J0 -> k[u,h]/J1'.

struct PsiPiece {
  long degree = 0;
  std::vector<Monomial> source_basis;
  std::vector<Monomial> target_basis;
  /// column j is psi of the j-th source basis element, in target coordinates
  std::vector<SparseVector> columns;
  std::size_t family_rank = 0;
  std::size_t matrix_rank = 0;

  /// rows indexed by target_basis, columns by source_basis
  DenseMatrix matrix() const {
    DenseMatrix m(target_basis.size(), std::vector<Rational>(source_basis.size(), 0));
    for (std::size_t j = 0; j < columns.size(); ++j)
      for (const auto& [i, c] : columns[j]) m[i][j] = c;
    return m;
  }

  std::size_t rank() const { return matrix_rank; }
  std::size_t kernel_dimension() const { return source_basis.size() - matrix_rank; }
};

struct GradedMap {
  Presentation source;
  Presentation target;
  GroebnerBasis source_gb;
  GroebnerBasis target_gb;
  long degree_bound = 0;
  std::vector<PsiPiece> pieces;

  /// psi applied to a source element in coordinates of source_basis.
  std::vector<Rational> apply(long degree, const SparseVector& v) const {
    const auto& piece = pieces.at(static_cast<std::size_t>(degree));
    std::vector<Rational> out(piece.target_basis.size(), 0);
    for (const auto& [j, c] : v)
      for (const auto& [i, x] : piece.columns.at(j)) out[i] += x * c;
    return out;
  }
};

/// psi is the k[structure forms, h]-linear map fixing every u_S with S
/// independent. The graph of psi in degree D is spanned by (l a, l b) for
/// (a, b) in the graph in degree D - 1 and l a structure form or h, together
/// with (u_S, u_S) for |S| = D. This graph projects onto H_D exactly when the
/// family spans, and meets 0 + R'_D only in 0 exactly when psi is well defined.
inline GradedMap build_psi(const VectorConfig& config, long degree_bound) {
  if (degree_bound < 0) throw UsageError("degree bound must be non-negative");
  Presentation source = build_J0(config);
  Presentation target = build_J1prime(config);
  Ring ring = source.ring;
  auto order = comparison_order(ring);
  GroebnerBasis gb_h = buchberger(source.ideal, order);
  GroebnerBasis gb_r = buchberger(Ideal(ring, [&] {
                                    std::vector<Polynomial> g;
                                    for (const auto& p : target.ideal.generators) g.push_back(p.embed(ring));
                                    return g;
                                  }()),
                                  order);
  std::vector<Polynomial> multipliers = source.structure_map;
  multipliers.push_back(Polynomial::variable(ring, "h"));
  auto indep = independent_sets(config);

  GradedMap map{source, target, gb_h, gb_r, degree_bound, {}};
  struct Element {
    Polynomial a, b;
    std::size_t cls;
  };
  std::vector<Element> previous;
  for (long d = 0; d <= degree_bound; ++d) {
    PsiPiece piece;
    piece.degree = d;
    piece.source_basis = graded_piece_basis(gb_h, d);
    piece.target_basis = graded_piece_basis(gb_r, d);
    const std::size_t nh = piece.source_basis.size();
    MonomialIndex ih(piece.source_basis), ir(piece.target_basis);
    EchelonSpace graph;
    std::vector<Element> current;
    auto offer = [&](const Polynomial& a, const Polynomial& b, std::size_t cls) {
      Polynomial ra = normal_form(a, gb_h), rb = normal_form(b, gb_r);
      SparseVector v = ih.coordinates(ra);
      auto w = ir.coordinates(rb, nh);
      v.insert(v.end(), w.begin(), w.end());
      if (graph.insert(v)) current.push_back({std::move(ra), std::move(rb), cls});
    };
    for (const auto& s : indep) {
      if (static_cast<long>(s.size()) != d) continue;
      Polynomial us = u_monomial(ring, s);
      offer(us, us, 0);
    }
    for (std::size_t j = 0; j < multipliers.size(); ++j)
      for (const auto& e : previous)
        if (e.cls <= j + 1) offer(multipliers[j] * e.a, multipliers[j] * e.b, j + 1);
    std::size_t h_pivots = 0;
    for (const auto& [pivot, row] : graph.rows()) {
      if (pivot < nh) {
        ++h_pivots;
        continue;
      }
      Polynomial image = from_coordinates(ring, piece.target_basis, row, nh);
      throw PsiIllDefined("a relation among the spanning family in H maps to " + image.to_string() + " in R'", d,
                          image.to_string());
    }
    if (h_pivots != nh)
      throw SpanFailure("spanning family has rank " + std::to_string(h_pivots) + " < dim H = " + std::to_string(nh), d);
    piece.family_rank = graph.rank();
    graph.make_reduced();
    EchelonSpace columns;
    for (std::size_t j = 0; j < nh; ++j) {
      SparseVector column;
      // graph elements are pairs (a, psi(a)), so the reduced row at pivot j is (e_j, psi(e_j))
      const SparseVector row = graph.row(j);
      for (std::size_t k = 1; k < row.size(); ++k) {
        auto [i, c] = row[k];
        if (i < nh) throw InternalError("psi: graph rows are not reduced");
        column.emplace_back(i - nh, c);
      }
      columns.insert(column);
      piece.columns.push_back(std::move(column));
    }
    piece.matrix_rank = columns.rank();
    map.pieces.push_back(std::move(piece));
    previous = std::move(current);
  }
  return map;
}

inline std::vector<std::size_t> kernel_dimensions(const GradedMap& map) {
  std::vector<std::size_t> out;
  for (const auto& p : map.pieces) out.push_back(p.kernel_dimension());
  return out;
}

// ---------------------------------------------------------------------------
// Individual checks.

namespace detail {

template <class F>
CheckResult timed(const std::string& name, F&& body) {
  auto start = std::chrono::steady_clock::now();
  CheckResult r;
  r.name = name;
  try {
    body(r);
  } catch (const SpanFailure& e) {
    r.fail(std::string(e.what()) + " (degree " + std::to_string(e.degree()) + ")");
    r.degrees.push_back(e.degree());
  } catch (const PsiIllDefined& e) {
    r.fail(std::string(e.what()) + " (degree " + std::to_string(e.degree()) + ")");
    r.degrees.push_back(e.degree());
  } catch (const InvalidConfig&) {
    throw;
  } catch (const Error& e) {
    r.fail(e.what());
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline std::string series_mismatch(const std::string& lhs_name, const HilbertSeries& lhs, const std::string& rhs_name,
                                   const HilbertSeries& rhs) {
  return lhs_name + " = " + lhs.to_string() + " but " + rhs_name + " = " + rhs.to_string();
}

}  // namespace detail

/// Ker psi_d = W_d inside H_d for every d up to the bound.
inline CheckResult verify_kernel_equals_W(const VectorConfig& config, long degree_bound) {
  return detail::timed("kernel_equals_W", [&](CheckResult& r) {
    GradedMap map = build_psi(config, degree_bound);
    std::vector<Polynomial> gens;
    for (const auto& w : build_W_generators(config, true)) gens.push_back(w.poly.embed(map.source.ring));
    std::vector<Polynomial> multipliers = map.source.structure_map;
    multipliers.push_back(Polynomial::variable(map.source.ring, "h"));
    GradedSpan w = graded_span(map.source_gb, multipliers, gens, degree_bound);
    for (long d = 0; d <= degree_bound; ++d) {
      const auto& piece = map.pieces[static_cast<std::size_t>(d)];
      std::size_t rk = piece.rank();
      std::size_t ker = piece.source_basis.size() - rk;
      r.degrees.push_back(d);
      r.notes.push_back("degree " + std::to_string(d) + ": dim H = " + std::to_string(piece.source_basis.size()) +
                        ", dim R' = " + std::to_string(piece.target_basis.size()) +
                        ", dim Ker psi = " + std::to_string(ker) + ", dim W = " + std::to_string(w.dim(d)));
      if (rk != piece.target_basis.size())
        r.fail("psi is not surjective in degree " + std::to_string(d));
      for (const auto& row : w.elements[static_cast<std::size_t>(d)]) {
        auto image = map.apply(d, row);
        if (std::any_of(image.begin(), image.end(), [](const Rational& x) { return x != 0; })) {
          r.fail("degree " + std::to_string(d) + ": W element " +
                 from_coordinates(map.source.ring, piece.source_basis, row).to_string() + " is not in Ker psi");
          break;
        }
      }
      if (w.dim(d) != ker)
        r.fail("degree " + std::to_string(d) + ": dim W = " + std::to_string(w.dim(d)) +
               " differs from dim Ker psi = " + std::to_string(ker));
    }
    r.notes.push_back("verified through degree " + std::to_string(degree_bound));
  });
}

/// Leading terms of f(S, C, d, e) = u_S f_{C,0} prod_{i in S} u_i^{d_i}
/// prod_{j in C-bar} (C_j u_j - C_jmax u_jmax)^{e_j} in k[u]/<u_C> under deglex,
/// membership in W0, and dim W0 = dim ker(k[u]/<u_C> -> SR_bc) per degree.
inline CheckResult verify_initial_ideal_argument(const VectorConfig& config, long max_extra = 2) {
  return detail::timed("initial_ideal", [&](CheckResult& r) {
    const std::size_t n = config.size();
    Ring ring = ring_u(n);
    auto order = MonomialOrder::deglex(n);
    Presentation sr_ind = build_SR(config, ComplexKind::Independence);
    Presentation sr_bc = build_SR(config, ComplexKind::BrokenCircuit);
    GroebnerBasis gb_ind = buchberger(sr_ind.ideal, order);
    GroebnerBasis gb_bc = buchberger(sr_bc.ideal, order);
    auto w0 = build_W_generators(config, false);
    auto sc = signed_circuits(config, true);
    long top = 0;
    for (const auto& g : w0) top = std::max(top, *g.poly.degree() + max_extra);
    std::vector<Polynomial> gens;
    for (const auto& g : w0) gens.push_back(g.poly.embed(ring));
    GradedSpan span = graded_span(gb_ind, structure_map(config, ring), gens, top);

    std::size_t tuples = 0;
    for (const auto& g : w0) {
      const SignedCircuit& c = sc[g.circuit];
      IndexSet circ = c.support();
      IndexSet bar(circ.begin(), circ.end() - 1);
      std::size_t jmax = circ.back();
      // exponent slots: d_i for i in S, then e_j for j in C-bar
      std::size_t slots = g.s.size() + bar.size();
      std::vector<long> ex(slots, 0);
      std::function<void(std::size_t, long)> walk = [&](std::size_t slot, long left) {
        if (slot < slots) {
          for (long e = 0; e <= left; ++e) {
            ex[slot] = e;
            walk(slot + 1, left - e);
          }
          ex[slot] = 0;
          return;
        }
        Polynomial f = g.poly.embed(ring);
        Monomial expected(n);
        for (auto i : g.s) expected.set(i, 1);
        for (auto j : bar) expected.set(j, expected[j] + 1);
        for (std::size_t k = 0; k < g.s.size(); ++k) {
          f = f * u_var(ring, g.s[k]).pow(static_cast<unsigned>(ex[k]));
          expected.set(g.s[k], expected[g.s[k]] + static_cast<Monomial::Exponent>(ex[k]));
        }
        for (std::size_t k = 0; k < bar.size(); ++k) {
          std::size_t j = bar[k];
          long e = ex[g.s.size() + k];
          Polynomial factor = u_var(ring, j) * Rational(c.coefficient(j)) - u_var(ring, jmax) * Rational(c.coefficient(jmax));
          f = f * factor.pow(static_cast<unsigned>(e));
          expected.set(j, expected[j] + static_cast<Monomial::Exponent>(e));
        }
        ++tuples;
        Polynomial reduced = normal_form(f, gb_ind);
        std::string tuple = "S=" + format_set(g.s) + ", C=" + format_set(circ) + ", exponents=(";
        for (std::size_t k = 0; k < slots; ++k) tuple += (k ? "," : "") + std::to_string(ex[k]);
        tuple += ")";
        if (reduced.is_zero()) {
          r.fail(tuple + ": f vanishes in k[u]/<u_C>");
          return;
        }
        auto [lm, lc] = reduced.leading_term(order);
        if (lm != expected || (lc != 1 && lc != -1)) {
          r.fail(tuple + ": initial term " + lc.get_str() + "*" + to_string(lm, *ring) + ", expected +-" +
                 to_string(expected, *ring));
          return;
        }
        long deg = expected.total_degree();
        MonomialIndex index(span.bases[static_cast<std::size_t>(deg)]);
        if (!span.spaces[static_cast<std::size_t>(deg)].contains(index.coordinates(reduced)))
          r.fail(tuple + ": f = " + reduced.to_string() + " is not in W0");
      };
      walk(0, max_extra);
    }
    for (long d = 0; d <= top; ++d) {
      std::size_t dim_ind = span.bases[static_cast<std::size_t>(d)].size();
      std::size_t dim_bc = graded_piece_basis(gb_bc, d).size();
      r.degrees.push_back(d);
      if (span.dim(d) != dim_ind - dim_bc)
        r.fail("degree " + std::to_string(d) + ": dim W0 = " + std::to_string(span.dim(d)) +
               " but the kernel of k[u]/<u_C> -> SR_bc has dimension " + std::to_string(dim_ind - dim_bc));
    }
    r.notes.push_back(std::to_string(tuples) + " tuples with total extra exponent <= " + std::to_string(max_extra));
  });
}

/// Which monomial orders the universal Groebner check runs over.
struct OrderSample {
  /// empty: all n! lex orders plus deglex and degrevlex when n <= 6, otherwise
  /// `random_count` random priorities for each of lex, deglex, degrevlex
  std::vector<OrderKind> kinds;
  std::size_t random_count = 20;
  std::uint64_t seed = 0;
  std::size_t exhaustive_limit = 6;
};

inline MonomialOrder make_order(OrderKind kind, std::size_t arity, std::vector<std::size_t> priority) {
  switch (kind) {
    case OrderKind::Lex: return MonomialOrder::lex(arity, std::move(priority));
    case OrderKind::DegLex: return MonomialOrder::deglex(arity, std::move(priority));
    case OrderKind::DegRevLex: return MonomialOrder::degrevlex(arity, std::move(priority));
    default: throw UsageError("only lex, deglex and degrevlex can be sampled");
  }
}

inline std::vector<MonomialOrder> sample_orders(std::size_t n, const OrderSample& sample) {
  std::vector<MonomialOrder> out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  if (n <= sample.exhaustive_limit) {
    std::vector<OrderKind> all_kinds = sample.kinds.empty() ? std::vector<OrderKind>{OrderKind::Lex} : sample.kinds;
    for (auto kind : all_kinds) {
      std::vector<std::size_t> p = perm;
      do out.push_back(make_order(kind, n, p));
      while (std::next_permutation(p.begin(), p.end()));
    }
    if (sample.kinds.empty()) {
      out.push_back(MonomialOrder::deglex(n));
      out.push_back(MonomialOrder::degrevlex(n));
    }
    return out;
  }
  std::vector<OrderKind> kinds = sample.kinds.empty()
                                     ? std::vector<OrderKind>{OrderKind::Lex, OrderKind::DegLex, OrderKind::DegRevLex}
                                     : sample.kinds;
  std::mt19937_64 rng(sample.seed);
  for (std::size_t i = 0; i < sample.random_count; ++i) {
    std::vector<std::size_t> p = perm;
    std::shuffle(p.begin(), p.end(), rng);
    for (auto kind : kinds) out.push_back(make_order(kind, n, p));
  }
  return out;
}

inline std::vector<Polynomial> ot_generators(const VectorConfig& config) { return build_OT(config).ideal.generators; }

/// The circuit polynomials f_{C,0} form a Groebner basis under every sampled
/// order, and generate the kernel computed by elimination.
inline CheckResult verify_universal_groebner(const VectorConfig& config, const OrderSample& sample = {}) {
  return detail::timed("universal_groebner", [&](CheckResult& r) {
    auto gens = ot_generators(config);
    Ring ring = ring_u(config.size());
    auto orders = sample_orders(config.size(), sample);
    std::vector<Monomial> expected_lms;
    auto check_order = [&](const MonomialOrder& order) -> std::optional<std::string> {
      if (gens.empty()) return std::nullopt;
      if (auto w = groebner_witness(gens, order))
        return order.describe(*ring) + ": S-polynomial " + w->first.to_string() + " leaves remainder " +
               w->second.to_string();
      std::vector<Monomial> lms;
      for (const auto& g : gens) lms.push_back(g.leading_term(order).first);
      auto computed = initial_ideal(buchberger(Ideal(ring, gens), order));
      std::vector<Monomial> got;
      for (const auto& p : computed.generators) got.push_back(p.leading_term(order).first);
      if (detail::minimalize(got) != detail::minimalize(lms))
        return order.describe(*ring) + ": reduced basis has a different initial ideal";
      return std::nullopt;
    };
    const std::size_t jobs = std::max<std::size_t>(1, std::min<std::size_t>(8, std::thread::hardware_concurrency()));
    std::vector<std::future<std::vector<std::optional<std::string>>>> futures;
    for (std::size_t t = 0; t < jobs; ++t) {
      futures.push_back(std::async(std::launch::async, [&, t] {
        std::vector<std::optional<std::string>> out;
        for (std::size_t i = t; i < orders.size(); i += jobs) out.push_back(check_order(orders[i]));
        return out;
      }));
    }
    std::vector<std::vector<std::optional<std::string>>> results;
    for (auto& f : futures) results.push_back(f.get());
    for (std::size_t i = 0; i < orders.size(); ++i)
      if (const auto& w = results[i % jobs][i / jobs]) r.fail(*w);
    r.notes.push_back(std::to_string(orders.size()) + " monomial orders");
    if (config.size() <= kOracleMaxVectors) {
      Ideal oracle = kernel_by_elimination(config);
      if (!same_ideal(Ideal(ring, gens), oracle)) {
        std::string got;
        for (const auto& p : oracle.generators) got += (got.empty() ? "" : ", ") + p.to_string();
        r.fail("elimination kernel <" + got + "> differs from the circuit ideal");
      }
      r.notes.push_back("elimination oracle agrees");
    } else {
      r.notes.push_back("elimination oracle skipped (n > " + std::to_string(kOracleMaxVectors) + ")");
    }
  });
}

/// OT_h is h-torsion free with Hilb(OT_h) = Hilb(OT)/(1-t); the same for the
/// Artinian pair.
inline CheckResult verify_flatness(const VectorConfig& config) {
  return detail::timed("flatness", [&](CheckResult& r) {
    for (bool artinian : {false, true}) {
      Presentation def = artinian ? build_AOT(config, true) : build_OTh(config);
      Presentation base = artinian ? build_AOT(config, false) : build_OT(config);
      Polynomial h = Polynomial::variable(def.ring, "h");
      Ideal sat = saturation(def.ideal, h);
      if (!same_ideal(sat, def.ideal)) {
        std::string extra;
        auto gb = buchberger(def.ideal, MonomialOrder::degrevlex(def.ring->size()));
        for (const auto& p : sat.generators)
          if (!ideal_membership(p, gb)) {
            extra = p.to_string();
            break;
          }
        r.fail(def.label() + " has h-torsion: " + extra + " lies in the saturation but not in the ideal");
      }
      HilbertSeries hd = hilbert_series_quotient(def.ideal);
      HilbertSeries hb = hilbert_series_quotient(base.ideal);
      r.series[def.label()] = hd;
      r.series[base.label()] = hb;
      if (hd != hb.divided_by_one_minus_t(1))
        r.fail(detail::series_mismatch("Hilb(" + def.label() + ")", hd, "Hilb(" + base.label() + ")/(1 - t)",
                                       hb.divided_by_one_minus_t(1)));
    }
  });
}

inline HilbertSeries h_polynomial_series(const ComplexSummary& s) {
  HilbertSeries out{s.h_vector, static_cast<int>(s.dimension + 1)};
  out.canonicalize();
  return out;
}

/// Hilb(OT) = Hilb(SR_bc) = h_bc / (1-t)^r, Hilb(SR_ind) = h_ind / (1-t)^r,
/// Hilb(H_T) = Hilb(SR_ind) / (1-t), and the OT series agrees across orders.
inline CheckResult verify_hilbert_identities(const VectorConfig& config) {
  return detail::timed("hilbert_identities", [&](CheckResult& r) {
    auto bc = complex_summary(config, ComplexKind::BrokenCircuit);
    auto ind = complex_summary(config, ComplexKind::Independence);
    HilbertSeries hbc = h_polynomial_series(bc), hind = h_polynomial_series(ind);
    Presentation ot = build_OT(config);
    std::size_t n = config.size();
    HilbertSeries s_ot = hilbert_series_quotient(ot.ideal);
    HilbertSeries s_ot_lex = hilbert_series_quotient(ot.ideal, MonomialOrder::lex(n));
    HilbertSeries s_bc = hilbert_series_quotient(build_SR(config, ComplexKind::BrokenCircuit).ideal);
    HilbertSeries s_ind = hilbert_series_quotient(build_SR(config, ComplexKind::Independence).ideal);
    Presentation j0 = build_J0(config);
    HilbertSeries s_j0 = hilbert_series_quotient(j0.ideal);
    HilbertSeries s_j0_lex = hilbert_series_quotient(j0.ideal, MonomialOrder::lex(n + 1));
    r.series["OT"] = s_ot;
    r.series["SRbc"] = s_bc;
    r.series["SRind"] = s_ind;
    r.series["J0"] = s_j0;
    std::string hb, hi;
    for (auto x : bc.h_vector) hb += (hb.empty() ? "" : ",") + std::to_string(x);
    for (auto x : ind.h_vector) hi += (hi.empty() ? "" : ",") + std::to_string(x);
    r.notes.push_back("h_bc = (" + hb + "), h_ind = (" + hi + ")");
    if (s_ot != hbc) r.fail(detail::series_mismatch("Hilb(OT)", s_ot, "h_bc/(1 - t)^r", hbc));
    if (s_bc != hbc) r.fail(detail::series_mismatch("Hilb(SRbc)", s_bc, "h_bc/(1 - t)^r", hbc));
    if (s_ind != hind) r.fail(detail::series_mismatch("Hilb(SRind)", s_ind, "h_ind/(1 - t)^r", hind));
    if (s_j0 != s_ind.divided_by_one_minus_t(1))
      r.fail(detail::series_mismatch("Hilb(J0)", s_j0, "Hilb(SRind)/(1 - t)", s_ind.divided_by_one_minus_t(1)));
    if (s_ot_lex != s_ot) r.fail(detail::series_mismatch("Hilb(OT) under lex", s_ot_lex, "under degrevlex", s_ot));
    if (s_j0_lex != s_j0) r.fail(detail::series_mismatch("Hilb(J0) under lex", s_j0_lex, "under degrevlex", s_j0));
  });
}

/// {m u_S : S independent} spans OT, SR_ind, SR_bc, R'_T and H_T degree by degree.
inline CheckResult verify_monomial_span(const VectorConfig& config, long degree_bound) {
  return detail::timed("monomial_span", [&](CheckResult& r) {
    auto indep = independent_sets(config);
    std::vector<Presentation> targets = {build_OT(config), build_SR(config, ComplexKind::Independence),
                                         build_SR(config, ComplexKind::BrokenCircuit), build_J1prime(config),
                                         build_J0(config)};
    for (const auto& p : targets) {
      auto gb = buchberger(p.ideal, comparison_order(p.ring));
      std::vector<Polynomial> gens;
      for (const auto& s : indep) gens.push_back(u_monomial(p.ring, s));
      std::vector<Polynomial> multipliers = p.structure_map;
      if (p.ring->find("h")) multipliers.push_back(Polynomial::variable(p.ring, "h"));
      GradedSpan span = graded_span(gb, multipliers, gens, degree_bound);
      for (long d = 0; d <= degree_bound; ++d) {
        std::size_t need = span.bases[static_cast<std::size_t>(d)].size();
        if (span.dim(d) != need)
          r.fail(p.label() + " degree " + std::to_string(d) + ": family has rank " + std::to_string(span.dim(d)) +
                 " < " + std::to_string(need));
      }
    }
    for (long d = 0; d <= degree_bound; ++d) r.degrees.push_back(d);
  });
}

/// krull_dimension(k[u,v]/I1~) = rk N + n.
inline CheckResult verify_toric_dimension(const VectorConfig& config) {
  return detail::timed("toric_dimension", [&](CheckResult& r) {
    Presentation t = build_toric_I1(config);
    int dim = krull_dimension(t.ideal, MonomialOrder::degrevlex(t.ring->size()));
    long expected = static_cast<long>(config.rank() + config.size());
    r.notes.push_back("dim = " + std::to_string(dim) + ", rk N + n = " + std::to_string(expected));
    if (dim != expected) r.fail("Krull dimension " + std::to_string(dim) + " differs from rk N + n = " + std::to_string(expected));
  });
}

// ---------------------------------------------------------------------------
// The T*P^1 example.

inline VectorConfig tp1_config() { return VectorConfig(1, {{1}, {-1}}, std::vector<long>{0, -1}); }

inline CheckResult verify_tp1(long degree_bound = 4) {
  return detail::timed("tp1", [&](CheckResult& r) {
    VectorConfig config = tp1_config();
    Ring ring = ring_uh(2);
    auto P = [&](const char* s) { return parse_polynomial(ring, s); };
    Polynomial L = P("h - u1 - u2");

    auto j0 = build_J0(config);
    if (j0.ideal.generators != std::vector<Polynomial>{P("u1*u2")})
      r.fail("J0 generators differ from <u1*u2>");

    auto qh = build_QH(config);
    Ring qring = qh.ring;
    auto Q = [&](const char* s) { return parse_polynomial(qring, s); };
    if (qh.ideal.generators.size() != 2) {
      r.fail("QH presentation should have one circuit relation and one unit relation");
    } else {
      Polynomial lq = L.embed(qring);
      Polynomial expected = (Q("1") - Q("q1")) * Q("u1*u2") - Q("q1*h") * lq;
      if (qh.ideal.generators[0] != expected)
        r.fail("QH generator " + qh.ideal.generators[0].to_string() + " differs from (1 - q)xy - q h L");
      Polynomial at_one = specialize_q_to_one(qh.ideal.generators[0]);
      Polynomial hl = P("h") * L;
      if (at_one != -hl && at_one != hl) r.fail("q = 1 image " + at_one.to_string() + " is not +-h(h - u1 - u2)");
    }

    auto jp = build_J1prime(config);
    if (jp.ideal.generators.size() != 1 || (jp.ideal.generators[0] != L && jp.ideal.generators[0] != -L))
      r.fail("J1' is not generated by +-(h - u1 - u2)");

    GradedMap map = build_psi(config, degree_bound);
    auto kernel = kernel_dimensions(map);
    std::vector<Polynomial> gens;
    for (const auto& w : build_W_generators(config, true)) gens.push_back(w.poly);
    std::vector<Polynomial> multipliers = map.source.structure_map;
    multipliers.push_back(Polynomial::variable(map.source.ring, "h"));
    GradedSpan w = graded_span(map.source_gb, multipliers, gens, degree_bound);
    for (long d = 0; d <= degree_bound; ++d) {
      r.degrees.push_back(d);
      std::size_t k = kernel[static_cast<std::size_t>(d)];
      if (k != static_cast<std::size_t>(d) || w.dim(d) != k)
        r.fail("degree " + std::to_string(d) + ": dim Ker psi = " + std::to_string(k) + ", dim W = " +
               std::to_string(w.dim(d)) + ", expected " + std::to_string(d));
    }
  });
}

// ---------------------------------------------------------------------------
// Everything at once.

struct VerifyOptions {
  std::optional<long> max_degree;
  OrderSample orders;
  std::set<std::string> skip;
};

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"kernel_equals_W",  "initial_ideal",      "universal_groebner",
                                                 "flatness",         "hilbert_identities", "monomial_span",
                                                 "toric_dimension"};
  return names;
}

/// Runs every check not in `skip` concurrently; the report lists them in the
/// order of check_names().
inline VerificationReport verify_all(const VectorConfig& config, const VerifyOptions& options = {}) {
  long bound = options.max_degree.value_or(default_degree_bound(config));
  for (const auto& s : options.skip)
    if (std::find(check_names().begin(), check_names().end(), s) == check_names().end())
      throw UsageError("unknown check '" + s + "'");
  std::map<std::string, std::function<CheckResult()>> jobs = {
      {"kernel_equals_W", [&] { return verify_kernel_equals_W(config, bound); }},
      {"initial_ideal", [&] { return verify_initial_ideal_argument(config); }},
      {"universal_groebner", [&] { return verify_universal_groebner(config, options.orders); }},
      {"flatness", [&] { return verify_flatness(config); }},
      {"hilbert_identities", [&] { return verify_hilbert_identities(config); }},
      {"monomial_span", [&] { return verify_monomial_span(config, bound); }},
      {"toric_dimension", [&] { return verify_toric_dimension(config); }},
  };
  std::vector<std::pair<std::string, std::future<CheckResult>>> running;
  for (const auto& name : check_names())
    if (!options.skip.count(name)) running.emplace_back(name, std::async(std::launch::async, jobs.at(name)));
  VerificationReport report;
  for (auto& [name, f] : running) report.checks.push_back(f.get());
  return report;
}

}  // namespace otk
