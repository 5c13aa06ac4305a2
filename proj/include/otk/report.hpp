#pragma once
// Rendering of reports, presentations and psi as JSON and as plain text.
// JSON uses insertion-ordered objects so identical inputs give identical bytes.

#include <iomanip>
#include <regex>
#include <sstream>
#include <string>

#include <json.hpp>

#include "otk/algebras.hpp"
#include "otk/corpus.hpp"
#include "otk/hilbert.hpp"
#include "otk/verify.hpp"

namespace otk {

using ordered_json = nlohmann::ordered_json;

inline ordered_json series_to_json(const HilbertSeries& s) {
  ordered_json j;
  j["numerator"] = s.numerator;
  j["denom_power"] = s.denom_power;
  return j;
}

struct RenderOptions {
  bool timing = false;
};

inline ordered_json check_to_json(const CheckResult& c, const RenderOptions& opt = {}) {
  ordered_json j;
  j["name"] = c.name;
  j["status"] = c.passed ? "pass" : "fail";
  if (!c.degrees.empty()) j["degrees"] = c.degrees;
  if (c.witness) j["witness"] = *c.witness;
  if (!c.notes.empty()) j["notes"] = c.notes;
  if (opt.timing) j["millis"] = std::llround(c.millis);
  return j;
}

/// Series are keyed by presentation label; a label reported by two checks
/// with different series is kept under "check/label" for the later one.
inline ordered_json report_to_json(const VectorConfig& config, const VerificationReport& report,
                                   const RenderOptions& opt = {}) {
  ordered_json j;
  j["config"] = config_to_json(config);
  j["checks"] = ordered_json::array();
  for (const auto& c : report.checks) j["checks"].push_back(check_to_json(c, opt));
  j["series"] = ordered_json::object();
  std::map<std::string, HilbertSeries> seen;
  for (const auto& c : report.checks)
    for (const auto& [label, s] : c.series) {
      auto it = seen.find(label);
      if (it == seen.end()) {
        seen.emplace(label, s);
        j["series"][label] = series_to_json(s);
      } else if (it->second != s) {
        j["series"][c.name + "/" + label] = series_to_json(s);
      }
    }
  j["status"] = report.passed() ? "pass" : "fail";
  return j;
}

/// "degree 3: ..." becomes "degree 3 [6]: ..."; the bracket is the
/// cohomological degree, twice the internal one.
inline std::string with_doubled_degree(const std::string& note) {
  static const std::regex pattern(R"(^degree (\d+):)");
  std::smatch m;
  if (!std::regex_search(note, m, pattern)) return note;
  long d = std::stol(m[1]);
  return "degree " + std::to_string(d) + " [" + std::to_string(2 * d) + "]:" + m.suffix().str();
}

inline std::string render_report(const VerificationReport& report, const RenderOptions& opt = {}) {
  std::ostringstream out;
  std::size_t width = 6;
  for (const auto& c : report.checks) width = std::max(width, c.name.size());
  out << std::left << std::setw(static_cast<int>(width)) << "check" << "  status  degrees";
  if (opt.timing) out << "      ms";
  out << '\n';
  for (const auto& c : report.checks) {
    std::string degs = "-";
    if (!c.degrees.empty()) degs = std::to_string(c.degrees.front()) + ".." + std::to_string(c.degrees.back());
    out << std::left << std::setw(static_cast<int>(width)) << c.name << "  " << (c.passed ? "PASS  " : "FAIL  ") << "  "
        << std::setw(7) << degs;
    if (opt.timing) out << std::right << std::setw(8) << std::llround(c.millis);
    out << '\n';
    for (const auto& n : c.notes) out << "    " << with_doubled_degree(n) << '\n';
    for (const auto& [label, s] : c.series) out << "    Hilb(" << label << ") = " << s.to_string() << '\n';
    if (c.witness) out << "    witness: " << *c.witness << '\n';
  }
  out << (report.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Presentations.

inline ordered_json presentation_to_json(const Presentation& p) {
  ordered_json j;
  j["name"] = p.label();
  j["description"] = describe(p.name);
  j["variables"] = p.ring->names();
  std::vector<std::string> gens;
  for (const auto& g : p.ideal.generators) gens.push_back(g.to_string());
  j["generators"] = gens;
  std::vector<std::string> forms;
  for (const auto& f : p.structure_map) forms.push_back(f.to_string());
  j["structure_map"] = forms;
  if (!p.orientation.empty()) {
    ordered_json os = ordered_json::array();
    for (const auto& c : p.orientation) {
      ordered_json o;
      std::vector<std::size_t> plus, minus;
      for (auto i : c.plus) plus.push_back(i + 1);
      for (auto i : c.minus) minus.push_back(i + 1);
      o["plus"] = plus;
      o["minus"] = minus;
      os.push_back(o);
    }
    j["orientation"] = os;
  }
  return j;
}

inline std::string render_presentation(const Presentation& p) {
  std::ostringstream out;
  out << p.label() << " (" << describe(p.name) << ")\n";
  out << "  ring: k[";
  for (std::size_t i = 0; i < p.ring->size(); ++i) out << (i ? ", " : "") << p.ring->name(i);
  out << "]\n";
  if (p.ideal.generators.empty()) out << "  ideal: <0>\n";
  for (const auto& g : p.ideal.generators) out << "  " << g.to_string() << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// psi.

inline ordered_json psi_to_json(const GradedMap& map) {
  ordered_json j;
  j["degree_bound"] = map.degree_bound;
  j["pieces"] = ordered_json::array();
  for (const auto& piece : map.pieces) {
    ordered_json p;
    p["degree"] = piece.degree;
    p["cohomological_degree"] = 2 * piece.degree;
    p["dim_source"] = piece.source_basis.size();
    p["dim_target"] = piece.target_basis.size();
    p["rank"] = piece.rank();
    p["kernel_dimension"] = piece.kernel_dimension();
    ordered_json images = ordered_json::array();
    for (std::size_t k = 0; k < piece.source_basis.size(); ++k) {
      ordered_json e;
      e["source"] = to_string(piece.source_basis[k], *map.source.ring);
      e["image"] = from_coordinates(map.source.ring, piece.target_basis, piece.columns[k]).to_string();
      images.push_back(e);
    }
    p["images"] = images;
    j["pieces"].push_back(p);
  }
  return j;
}

inline std::string render_psi(const GradedMap& map, bool show_images) {
  std::ostringstream out;
  out << "  deg  coh   dim H  dim R'    rank  dim Ker\n";
  for (const auto& piece : map.pieces) {
    out << std::right << std::setw(5) << piece.degree << std::setw(5) << 2 * piece.degree << std::setw(8)
        << piece.source_basis.size() << std::setw(8) << piece.target_basis.size() << std::setw(8) << piece.rank()
        << std::setw(9) << piece.kernel_dimension() << '\n';
  }
  if (show_images)
    for (const auto& piece : map.pieces)
      for (std::size_t k = 0; k < piece.source_basis.size(); ++k)
        out << "  psi(" << to_string(piece.source_basis[k], *map.source.ring)
            << ") = " << from_coordinates(map.source.ring, piece.target_basis, piece.columns[k]).to_string() << '\n';
  return out.str();
}

}  // namespace otk
