#pragma once
// Builders for the graded presentations attached to a vector configuration:
// equivariant cohomology (J0), the polynomial quantum ring (J), its q = 1
// specialisation (J1) and hbar-torsion-free quotient (J1' = I_hbar), the
// Orlik-Terao ideal and its deformation, Stanley-Reisner ideals, the
// Artinian variants and the toric ideal in doubled variables.
//
// Generators are stored exactly as written (never pre-reduced).

#include <string>
#include <vector>

#include "otk/groebner.hpp"
#include "otk/matroid.hpp"
#include "otk/polyring.hpp"

namespace otk {

enum class PresentationName { H_T, QH_pol, R_T, R_prime_T, OT, OT_h, SR_ind, SR_bc, AOT, AOT_h, Toric_I1 };

inline std::string label(PresentationName n) {
  switch (n) {
    case PresentationName::H_T: return "J0";
    case PresentationName::QH_pol: return "J";
    case PresentationName::R_T: return "J1";
    case PresentationName::R_prime_T: return "J1prime";
    case PresentationName::OT: return "OT";
    case PresentationName::OT_h: return "OTh";
    case PresentationName::SR_ind: return "SRind";
    case PresentationName::SR_bc: return "SRbc";
    case PresentationName::AOT: return "AOT";
    case PresentationName::AOT_h: return "AOTh";
    case PresentationName::Toric_I1: return "ToricI1";
  }
  return "?";
}

inline std::string describe(PresentationName n) {
  switch (n) {
    case PresentationName::H_T: return "equivariant cohomology H_T = k[u,h]/J0";
    case PresentationName::QH_pol: return "polynomial quantum cohomology QH_pol = Lambda[u,h]/J";
    case PresentationName::R_T: return "q = 1 specialisation R_T = k[u,h]/J1";
    case PresentationName::R_prime_T: return "hbar-torsion-free quotient R'_T = k[u,h]/J1'";
    case PresentationName::OT: return "Orlik-Terao algebra OT = k[u]/I";
    case PresentationName::OT_h: return "deformed Orlik-Terao algebra OT_h = k[u,h]/I_h";
    case PresentationName::SR_ind: return "Stanley-Reisner ring of the independence complex";
    case PresentationName::SR_bc: return "Stanley-Reisner ring of the broken circuit complex";
    case PresentationName::AOT: return "Artinian Orlik-Terao algebra";
    case PresentationName::AOT_h: return "deformed Artinian Orlik-Terao algebra";
    case PresentationName::Toric_I1: return "toric ideal in doubled variables";
  }
  return "?";
}

struct Presentation {
  PresentationName name;
  Ring ring;
  Ideal ideal;
  /// Images of the standard basis of the dual lattice (degree-1 forms).
  std::vector<Polynomial> structure_map;
  /// Orientation used for each circuit (empty for orientation-free builders).
  std::vector<SignedCircuit> orientation;

  std::string label() const { return otk::label(name); }
};

// ---------------------------------------------------------------------------
// Rings. Variable names: u1..un, h, q1..qk, qb1..qbk, v1..vn.

inline std::string u_name(std::size_t i) { return "u" + std::to_string(i + 1); }

inline Ring ring_u(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(u_name(i));
  return make_ring(names);
}

inline Ring ring_uh(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(u_name(i));
  names.push_back("h");
  return make_ring(names);
}

/// u, h in degree 1; the quantum variables q_k and their inverses qb_k in degree 0.
inline Ring ring_quantum(std::size_t n, std::size_t k) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (std::size_t i = 0; i < n; ++i) names.push_back(u_name(i)), weights.push_back(1);
  names.push_back("h"), weights.push_back(1);
  for (std::size_t j = 0; j < k; ++j) names.push_back("q" + std::to_string(j + 1)), weights.push_back(0);
  for (std::size_t j = 0; j < k; ++j) names.push_back("qb" + std::to_string(j + 1)), weights.push_back(0);
  return make_ring(names, weights);
}

inline Ring ring_uv(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(u_name(i));
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  return make_ring(names);
}

// ---------------------------------------------------------------------------
// Elementary products.

inline Polynomial u_var(const Ring& ring, std::size_t i) { return Polynomial::variable(ring, u_name(i)); }

/// u_S
inline Polynomial u_monomial(const Ring& ring, const IndexSet& s) {
  Monomial m(ring->size());
  for (auto i : s) m.set(ring->index_of(u_name(i)), m[ring->index_of(u_name(i))] + 1);
  return Polynomial(ring, m);
}

/// prod over s of (u_i - h), or (h - u_i) when `flip`.
inline Polynomial shifted_product(const Ring& ring, const IndexSet& s, bool flip = false) {
  Polynomial h = Polynomial::variable(ring, "h");
  Polynomial out(ring, Rational(1));
  for (auto i : s) out *= flip ? h - u_var(ring, i) : u_var(ring, i) - h;
  return out;
}

/// prod_{C+} u_i prod_{C-} (u_j - h) - prod_{C+} (u_i - h) prod_{C-} u_j
inline Polynomial circuit_difference(const Ring& ring, const SignedCircuit& c) {
  return u_monomial(ring, c.plus) * shifted_product(ring, c.minus) -
         shifted_product(ring, c.plus) * u_monomial(ring, c.minus);
}

/// f_C = h^-1 * circuit_difference, in k[u, h].
inline Polynomial f_circuit(const Ring& ring_with_h, const SignedCircuit& c) {
  try {
    return divide_exact_by_var(circuit_difference(ring_with_h, c), "h");
  } catch (const NotDivisible& e) {
    throw InternalError(std::string("signed circuit difference not divisible by h: ") + e.what());
  }
}

/// f_{C,0} = sum_{i in C} eta_i u_{C \ i} for an arbitrary rational relation eta.
inline Polynomial f_circuit_0(const Ring& ring, const IndexSet& circuit, const std::vector<Integer>& eta) {
  Polynomial out(ring);
  for (std::size_t j = 0; j < circuit.size(); ++j) {
    IndexSet rest = circuit;
    rest.erase(rest.begin() + static_cast<long>(j));
    out += u_monomial(ring, rest) * Rational(eta[j]);
  }
  return out;
}

inline std::vector<Polynomial> structure_map(const VectorConfig& config, const Ring& ring) {
  std::vector<Polynomial> forms;
  for (std::size_t j = 0; j < config.rank(); ++j) {
    Polynomial form(ring);
    for (std::size_t i = 0; i < config.size(); ++i)
      if (config.vector(i)[j] != 0) form += u_var(ring, i) * Rational(config.vector(i)[j]);
    forms.push_back(std::move(form));
  }
  return forms;
}

inline std::vector<Polynomial> structure_map(const VectorConfig& config) { return structure_map(config, ring_u(config.size())); }

namespace detail {

/// Signed circuits for a builder: theta orientation when theta is present
/// (required when `need_theta`), otherwise min(C) in C+.
inline std::vector<SignedCircuit> oriented_circuits(const VectorConfig& config, bool need_theta) {
  if (need_theta && !config.has_theta()) throw MissingTheta("this presentation needs theta to orient circuits");
  return signed_circuits(config, true);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Builders.

inline Presentation build_J0(const VectorConfig& config) {
  auto sc = detail::oriented_circuits(config, true);
  Ring ring = ring_uh(config.size());
  std::vector<Polynomial> gens;
  for (const auto& c : sc) gens.push_back(u_monomial(ring, c.plus) * shifted_product(ring, c.minus, true));
  return {PresentationName::H_T, ring, Ideal(ring, gens), structure_map(config, ring), sc};
}

inline Presentation build_OT(const VectorConfig& config) {
  Ring ring = ring_u(config.size());
  std::vector<Polynomial> gens;
  for (const auto& c : circuits(config)) gens.push_back(f_circuit_0(ring, c, circuit_relation(config, c)));
  return {PresentationName::OT, ring, Ideal(ring, gens), structure_map(config, ring), {}};
}

namespace detail {

inline Presentation build_deformed_OT(const VectorConfig& config, PresentationName name) {
  auto sc = oriented_circuits(config, false);
  Ring ring = ring_uh(config.size());
  Ring plain = ring_u(config.size());
  std::vector<Polynomial> gens;
  for (const auto& c : sc) {
    Polynomial f = f_circuit(ring, c);
    Polynomial f0 = f_circuit_0(plain, c.support(), circuit_relation(config, c.support())).embed(ring);
    Polynomial at_zero = substitute(f, "h", Rational(0));
    if (at_zero != f0 && at_zero != -f0)
      throw InternalError("f_C at h = 0 differs from f_{C,0} on " + format_set(c.support()));
    gens.push_back(std::move(f));
  }
  return {name, ring, Ideal(ring, gens), structure_map(config, ring), sc};
}

}  // namespace detail

/// I_hbar = <f_C>; coincides with J1'.
inline Presentation build_OTh(const VectorConfig& config) {
  return detail::build_deformed_OT(config, PresentationName::OT_h);
}

inline Presentation build_J1prime(const VectorConfig& config) {
  return detail::build_deformed_OT(config, PresentationName::R_prime_T);
}

inline Presentation build_J1(const VectorConfig& config) {
  auto sc = detail::oriented_circuits(config, true);
  Ring ring = ring_uh(config.size());
  std::vector<Polynomial> gens;
  for (const auto& c : sc) gens.push_back(circuit_difference(ring, c));
  return {PresentationName::R_T, ring, Ideal(ring, gens), structure_map(config, ring), sc};
}

inline Presentation build_SR(const VectorConfig& config, ComplexKind which) {
  Ring ring = ring_u(config.size());
  std::vector<Polynomial> gens;
  if (which == ComplexKind::Independence) {
    for (const auto& c : circuits(config)) gens.push_back(u_monomial(ring, c));
  } else {
    for (auto c : circuits(config)) {
      c.pop_back();
      gens.push_back(u_monomial(ring, c));
    }
  }
  return {which == ComplexKind::Independence ? PresentationName::SR_ind : PresentationName::SR_bc, ring,
          Ideal(ring, gens), structure_map(config, ring), {}};
}

inline Presentation build_AOT(const VectorConfig& config, bool deformed) {
  Presentation base = deformed ? build_OTh(config) : build_OT(config);
  std::vector<Polynomial> gens = base.ideal.generators;
  for (std::size_t i = 0; i < config.size(); ++i) {
    Polynomial u = u_var(base.ring, i);
    gens.push_back(deformed ? u * (u - Polynomial::variable(base.ring, "h")) : u * u);
  }
  base.name = deformed ? PresentationName::AOT_h : PresentationName::AOT;
  base.ideal = Ideal(base.ring, gens);
  return base;
}

/// prod_{C+} u_i prod_{C-} v_j - prod_{C+} v_i prod_{C-} u_j in k[u, v].
inline Presentation build_toric_I1(const VectorConfig& config) {
  auto sc = detail::oriented_circuits(config, false);
  Ring ring = ring_uv(config.size());
  auto v_monomial = [&](const IndexSet& s) {
    Monomial m(ring->size());
    for (auto i : s) m.set(ring->index_of("v" + std::to_string(i + 1)), 1);
    return Polynomial(ring, m);
  };
  std::vector<Polynomial> gens;
  for (const auto& c : sc)
    gens.push_back(u_monomial(ring, c.plus) * v_monomial(c.minus) - v_monomial(c.plus) * u_monomial(ring, c.minus));
  return {PresentationName::Toric_I1, ring, Ideal(ring, gens), {}, sc};
}

// ---------------------------------------------------------------------------
// Curve classes and the quantum ring.

struct CurveClassLattice {
  /// Z-basis of P = ker(Z^n -> N), Hermite normal form rows.
  IntMatrix basis;
  /// beta_C coordinates in `basis`, one entry per signed circuit.
  std::vector<std::vector<Integer>> beta_coords;

  std::vector<Integer> beta_vector(const SignedCircuit& c) const {
    std::vector<Integer> v(c.n);
    for (std::size_t i = 0; i < c.n; ++i) v[i] = c.coefficient(i);
    return v;
  }
};

inline CurveClassLattice curve_class_lattice(const VectorConfig& config, const std::vector<SignedCircuit>& sc) {
  CurveClassLattice lat;
  IntMatrix a(config.rank(), std::vector<Integer>(config.size()));
  for (std::size_t i = 0; i < config.size(); ++i)
    for (std::size_t r = 0; r < config.rank(); ++r) a[r][i] = config.vector(i)[r];
  lat.basis = integer_kernel(a, config.size());
  for (const auto& c : sc) {
    auto coords = lattice_coordinates(lat.basis, lat.beta_vector(c));
    if (!coords) throw InternalError("beta_C of " + format_set(c.support()) + " is not in the kernel lattice");
    lat.beta_coords.push_back(*coords);
  }
  return lat;
}

/// q^beta as a monomial in q_k (positive coordinates) and qb_k (negative ones).
inline Polynomial q_power(const Ring& ring, const std::vector<Integer>& coords) {
  Monomial m(ring->size());
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] == 0) continue;
    std::string name = (coords[k] > 0 ? "q" : "qb") + std::to_string(k + 1);
    m.set(ring->index_of(name), static_cast<Monomial::Exponent>(Integer(abs(coords[k])).get_ui()));
  }
  return Polynomial(ring, m);
}

inline Presentation build_QH(const VectorConfig& config) {
  auto sc = detail::oriented_circuits(config, true);
  auto lat = curve_class_lattice(config, sc);
  std::size_t k = lat.basis.size();
  Ring ring = ring_quantum(config.size(), k);
  std::vector<Polynomial> gens;
  for (std::size_t c = 0; c < sc.size(); ++c) {
    gens.push_back(u_monomial(ring, sc[c].plus) * shifted_product(ring, sc[c].minus) -
                   q_power(ring, lat.beta_coords[c]) * shifted_product(ring, sc[c].plus) *
                       u_monomial(ring, sc[c].minus));
  }
  for (std::size_t j = 0; j < k; ++j) {
    gens.push_back(Polynomial::variable(ring, "q" + std::to_string(j + 1)) *
                       Polynomial::variable(ring, "qb" + std::to_string(j + 1)) -
                   Polynomial(ring, Rational(1)));
  }
  return {PresentationName::QH_pol, ring, Ideal(ring, gens), structure_map(config, ring), sc};
}

/// Every q_k and qb_k sent to 1, result expressed in k[u, h].
inline Polynomial specialize_q_to_one(const Polynomial& p) {
  Polynomial out = p;
  for (const auto& name : p.ring()->names())
    if (name.rfind("q", 0) == 0) out = substitute(out, name, Rational(1));
  return out.embed(ring_uh(std::count_if(p.ring()->names().begin(), p.ring()->names().end(),
                                         [](const std::string& s) { return s.rfind("u", 0) == 0; })));
}

// ---------------------------------------------------------------------------
// The module W.

struct WGenerator {
  std::size_t circuit;  // index into circuits(config)
  IndexSet s;
  Polynomial poly;      // u_S f_C (or u_S f_{C,0})
};

/// Products u_S f_C over circuits C and sets S with S ∩ C = ∅ and S ∪ C̄
/// independent; circuit-major, then S by size and lexicographically.
/// Without hbar, f_{C,0} = f_C(h = 0) in k[u].
inline std::vector<WGenerator> build_W_generators(const VectorConfig& config, bool with_hbar) {
  auto sc = detail::oriented_circuits(config, false);
  Ring ring = ring_uh(config.size());
  Ring plain = ring_u(config.size());
  const std::size_t n = config.size();
  std::vector<IndexSet> subsets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) subsets.push_back(mask_to_set(mask));
  std::sort(subsets.begin(), subsets.end(), shortlex_less);
  std::vector<WGenerator> out;
  for (std::size_t c = 0; c < sc.size(); ++c) {
    IndexSet circ = sc[c].support();
    IndexSet bar(circ.begin(), circ.end() - 1);
    Polynomial f = f_circuit(ring, sc[c]);
    if (!with_hbar) f = substitute(f, "h", Rational(0)).embed(plain);
    std::uint64_t cmask = set_to_mask(circ);
    for (const auto& s : subsets) {
      if (set_to_mask(s) & cmask) continue;
      IndexSet uni = s;
      uni.insert(uni.end(), bar.begin(), bar.end());
      std::sort(uni.begin(), uni.end());
      if (!is_independent(config, uni)) continue;
      out.push_back({c, s, u_monomial(f.ring(), s) * f});
    }
  }
  return out;
}

inline std::vector<Presentation> all_presentations(const VectorConfig& config) {
  return {build_J0(config),
          build_QH(config),
          build_J1(config),
          build_J1prime(config),
          build_OT(config),
          build_SR(config, ComplexKind::Independence),
          build_SR(config, ComplexKind::BrokenCircuit),
          build_AOT(config, false),
          build_AOT(config, true),
          build_toric_I1(config)};
}

}  // namespace otk
