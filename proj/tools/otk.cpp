// otk: command-line front end for the otk library.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 the input or command
// line could not be parsed, 3 the configuration is invalid.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "otk/otk.hpp"

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kParse = 2, kInvalid = 3 };

struct Args {
  std::string input;
  std::string example;
  std::optional<long> max_degree;
  std::vector<std::string> orders;
  std::string json;
  std::vector<std::string> skip;
  std::uint64_t seed = 0;
  bool timing = false;
  bool images = false;
};

void add_input_options(CLI::App* cmd, Args& a) {
  auto* in = cmd->add_option("--input", a.input, "JSON configuration file");
  auto* ex = cmd->add_option("--example", a.example, "built-in configuration (see `otk examples`)");
  in->excludes(ex);
}

void add_json_option(CLI::App* cmd, Args& a) {
  cmd->add_option("--json", a.json, "write the JSON result to this file ('-' for stdout)");
}

otk::VectorConfig load(const Args& a) {
  if (!a.example.empty()) {
    auto c = otk::builtin_example(a.example);
    if (!c) throw otk::UsageError("unknown example '" + a.example + "'");
    return *c;
  }
  if (a.input.empty()) throw otk::UsageError("one of --input or --example is required");
  return otk::load_config(a.input);
}

void emit_json(const Args& a, const otk::ordered_json& j) {
  if (a.json.empty()) return;
  std::string text = j.dump(2) + "\n";
  if (a.json == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(a.json, std::ios::binary);
  if (!out) throw otk::UsageError("cannot write '" + a.json + "'");
  out << text;
}

std::ostream& human(const Args& a) {
  static std::ostringstream sink;
  if (a.json == "-") {
    sink.str("");
    return sink;
  }
  return std::cout;
}

std::string render_validation(const otk::ValidationReport& r) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream out;
  out << "full rank:  " << yn(r.full_rank) << '\n'
      << "no coloops: " << yn(r.no_coloops) << '\n'
      << "unimodular: " << yn(r.unimodular) << '\n'
      << "simple:     " << (r.simple ? yn(*r.simple) : "not evaluated (no theta)") << '\n';
  for (const auto& v : r.violations) out << "  violation: " << v << '\n';
  return out.str();
}

otk::ordered_json validation_json(const otk::ValidationReport& r) {
  otk::ordered_json j;
  j["full_rank"] = r.full_rank;
  j["no_coloops"] = r.no_coloops;
  j["unimodular"] = r.unimodular;
  j["simple"] = r.simple ? otk::ordered_json(*r.simple) : otk::ordered_json(nullptr);
  j["violations"] = r.violations;
  j["ok"] = r.ok();
  return j;
}

/// Every subcommand other than `validate` and `circuits` needs all four
/// assumptions; report and bail out with exit 3 otherwise.
bool require_valid(const Args& a, const otk::VectorConfig& config) {
  auto r = otk::validate(config, false);
  if (r.ok()) return true;
  std::cerr << "invalid configuration\n" << render_validation(r);
  if (!config.has_theta()) std::cerr << "  (theta is required)\n";
  otk::ordered_json j;
  j["config"] = otk::config_to_json(config);
  j["validation"] = validation_json(r);
  emit_json(a, j);
  return false;
}

std::string join_ints(const std::vector<long>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ", ") + std::to_string(x);
  return "(" + s + ")";
}

int cmd_validate(const Args& a) {
  auto config = load(a);
  auto r = otk::validate(config, false);
  human(a) << render_validation(r);
  otk::ordered_json j;
  j["config"] = otk::config_to_json(config);
  j["validation"] = validation_json(r);
  emit_json(a, j);
  return r.ok() ? kPass : kInvalid;
}

int cmd_circuits(const Args& a) {
  auto config = load(a);
  auto circuits = otk::circuits(config);
  auto& out = human(a);
  otk::ordered_json j;
  j["config"] = otk::config_to_json(config);
  j["circuits"] = otk::ordered_json::array();
  out << "circuits:\n";
  for (const auto& c : circuits) {
    otk::ordered_json cj;
    std::vector<std::size_t> one_based;
    for (auto i : c) one_based.push_back(i + 1);
    cj["support"] = one_based;
    out << "  " << otk::format_set(c);
    try {
      auto sc = otk::signed_circuit(config, c, config.has_theta());
      std::vector<std::size_t> plus, minus;
      for (auto i : sc.plus) plus.push_back(i + 1);
      for (auto i : sc.minus) minus.push_back(i + 1);
      cj["plus"] = plus;
      cj["minus"] = minus;
      out << "  C+ = " << otk::format_set(sc.plus) << ", C- = " << otk::format_set(sc.minus);
    } catch (const otk::InvalidConfig& e) {
      cj["orientation_error"] = e.what();
      out << "  (" << e.what() << ")";
    }
    out << '\n';
    j["circuits"].push_back(cj);
  }
  auto bc = otk::broken_circuits(config);
  out << "broken circuits:";
  std::vector<std::vector<std::size_t>> bcj;
  for (const auto& s : bc) {
    out << ' ' << otk::format_set(s);
    std::vector<std::size_t> one_based;
    for (auto i : s) one_based.push_back(i + 1);
    bcj.push_back(one_based);
  }
  out << '\n';
  j["broken_circuits"] = bcj;
  auto fl = otk::flats(config);
  out << "flats:";
  for (const auto& s : fl) out << ' ' << otk::format_set(s);
  out << '\n';
  for (auto kind : {otk::ComplexKind::Independence, otk::ComplexKind::BrokenCircuit}) {
    auto s = otk::complex_summary(config, kind);
    std::string key = kind == otk::ComplexKind::Independence ? "independence" : "broken_circuit";
    out << key << " complex: f = " << join_ints(s.f_vector) << ", h-vector = " << join_ints(s.h_vector) << '\n';
    j[key]["f_vector"] = s.f_vector;
    j[key]["h_vector"] = s.h_vector;
  }
  emit_json(a, j);
  return kPass;
}

int cmd_presentations(const Args& a) {
  auto config = load(a);
  if (!require_valid(a, config)) return kInvalid;
  otk::ordered_json j;
  j["config"] = otk::config_to_json(config);
  j["presentations"] = otk::ordered_json::array();
  auto& out = human(a);
  for (const auto& p : otk::all_presentations(config)) {
    out << otk::render_presentation(p);
    j["presentations"].push_back(otk::presentation_to_json(p));
  }
  emit_json(a, j);
  return kPass;
}

int cmd_hilbert(const Args& a) {
  auto config = load(a);
  if (!require_valid(a, config)) return kInvalid;
  otk::ordered_json j;
  j["config"] = otk::config_to_json(config);
  auto& out = human(a);
  for (auto kind : {otk::ComplexKind::Independence, otk::ComplexKind::BrokenCircuit}) {
    auto s = otk::complex_summary(config, kind);
    std::string key = kind == otk::ComplexKind::Independence ? "h_ind" : "h_bc";
    out << key << " = " << join_ints(s.h_vector) << '\n';
    j[key] = s.h_vector;
  }
  std::vector<otk::Presentation> ps = {otk::build_OT(config),
                                       otk::build_SR(config, otk::ComplexKind::Independence),
                                       otk::build_SR(config, otk::ComplexKind::BrokenCircuit),
                                       otk::build_J0(config),
                                       otk::build_J1prime(config),
                                       otk::build_AOT(config, false),
                                       otk::build_AOT(config, true)};
  j["series"] = otk::ordered_json::object();
  for (const auto& p : ps) {
    auto s = otk::hilbert_series_quotient(p.ideal);
    out << p.label() << ": " << s.to_string() << '\n';
    j["series"][p.label()] = otk::series_to_json(s);
  }
  emit_json(a, j);
  return kPass;
}

int cmd_psi_report(const Args& a) {
  auto config = load(a);
  if (!require_valid(a, config)) return kInvalid;
  long bound = a.max_degree.value_or(otk::default_degree_bound(config));
  otk::ordered_json j;
  j["config"] = otk::config_to_json(config);
  try {
    auto map = otk::build_psi(config, bound);
    human(a) << "psi: H_T = k[u,h]/J0 -> R'_T = k[u,h]/J1prime, degrees 0.." << bound
             << " (coh = cohomological degree)\n"
             << otk::render_psi(map, a.images);
    j["psi"] = otk::psi_to_json(map);
  } catch (const otk::SpanFailure& e) {
    std::cerr << "span failure in degree " << e.degree() << ": " << e.what() << '\n';
    j["error"] = e.what();
    emit_json(a, j);
    return kCheckFailed;
  } catch (const otk::PsiIllDefined& e) {
    std::cerr << "psi is not well defined in degree " << e.degree() << ": " << e.what() << '\n';
    j["error"] = e.what();
    emit_json(a, j);
    return kCheckFailed;
  }
  emit_json(a, j);
  return kPass;
}

otk::OrderKind parse_order_kind(const std::string& s) {
  if (s == "lex") return otk::OrderKind::Lex;
  if (s == "deglex") return otk::OrderKind::DegLex;
  if (s == "degrevlex") return otk::OrderKind::DegRevLex;
  throw otk::UsageError("unknown order kind '" + s + "' (use lex, deglex or degrevlex)");
}

int cmd_verify_all(const Args& a) {
  auto config = load(a);
  if (!require_valid(a, config)) return kInvalid;
  otk::VerifyOptions opt;
  opt.max_degree = a.max_degree;
  for (const auto& o : a.orders) opt.orders.kinds.push_back(parse_order_kind(o));
  opt.orders.seed = a.seed;
  opt.skip.insert(a.skip.begin(), a.skip.end());
  auto report = otk::verify_all(config, opt);
  otk::RenderOptions ro{a.timing};
  human(a) << otk::render_report(report, ro);
  emit_json(a, otk::report_to_json(config, report, ro));
  return report.passed() ? kPass : kCheckFailed;
}

int cmd_tp1(const Args& a) {
  auto config = otk::tp1_config();
  auto& out = human(a);
  otk::ordered_json j;
  j["config"] = otk::config_to_json(config);
  j["presentations"] = otk::ordered_json::array();
  for (const auto& p : {otk::build_J0(config), otk::build_QH(config), otk::build_J1(config), otk::build_J1prime(config)}) {
    out << otk::render_presentation(p);
    j["presentations"].push_back(otk::presentation_to_json(p));
  }
  auto qh = otk::build_QH(config);
  out << "QH generator at q = 1: " << otk::specialize_q_to_one(qh.ideal.generators.at(0)).to_string() << '\n';
  auto result = otk::verify_tp1(a.max_degree.value_or(4));
  otk::VerificationReport report{{result}};
  otk::RenderOptions ro{a.timing};
  out << otk::render_report(report, ro);
  j["checks"] = otk::ordered_json::array({otk::check_to_json(result, ro)});
  j["status"] = result.passed ? "pass" : "fail";
  emit_json(a, j);
  return result.passed ? kPass : kCheckFailed;
}

int cmd_examples() {
  for (const auto& e : otk::corpus())
    std::cout << e.name << "  " << e.summary << "  " << otk::config_to_json(e.config).dump() << '\n';
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"otk: hypertoric ring presentations and per-degree theorem checks"};
  app.require_subcommand(1);
  Args a;

  auto* validate = app.add_subcommand("validate", "check the four input assumptions");
  add_input_options(validate, a);
  add_json_option(validate, a);

  auto* circuits = app.add_subcommand("circuits", "circuits, orientations, broken circuits, flats, f- and h-vectors");
  add_input_options(circuits, a);
  add_json_option(circuits, a);

  auto* presentations = app.add_subcommand("presentations", "every ideal presentation with generators");
  add_input_options(presentations, a);
  add_json_option(presentations, a);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of the quotient rings");
  add_input_options(hilbert, a);
  add_json_option(hilbert, a);

  auto* psi = app.add_subcommand("psi-report", "per-degree dimensions of psi and its kernel");
  add_input_options(psi, a);
  add_json_option(psi, a);
  psi->add_option("--max-degree", a.max_degree, "highest internal degree (default 2(d+1))");
  psi->add_flag("--images", a.images, "print psi of every standard monomial");

  auto* verify = app.add_subcommand("verify-all", "run every theorem check");
  add_input_options(verify, a);
  add_json_option(verify, a);
  verify->add_option("--max-degree", a.max_degree, "highest internal degree (default 2(d+1))");
  verify->add_option("--orders", a.orders, "order kinds for the universal Groebner check: lex, deglex, degrevlex")
      ->delimiter(',');
  verify->add_option("--skip", a.skip, "skip a check by name (repeatable)")->delimiter(',');
  verify->add_option("--seed", a.seed, "seed for random order sampling (default 0)");
  verify->add_flag("--timing", a.timing, "include wall-clock times (makes output non-reproducible)");

  auto* tp1 = app.add_subcommand("tp1", "the T*P^1 example");
  add_json_option(tp1, a);
  tp1->add_option("--max-degree", a.max_degree, "degree bound for the dimension count (default 4)");
  tp1->add_flag("--timing", a.timing, "include wall-clock times");

  auto* examples = app.add_subcommand("examples", "list the built-in configurations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*validate) return cmd_validate(a);
    if (*circuits) return cmd_circuits(a);
    if (*presentations) return cmd_presentations(a);
    if (*hilbert) return cmd_hilbert(a);
    if (*psi) return cmd_psi_report(a);
    if (*verify) return cmd_verify_all(a);
    if (*tp1) return cmd_tp1(a);
    if (*examples) return cmd_examples();
  } catch (const otk::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const otk::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kParse;
  } catch (const otk::InvalidConfig& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kInvalid;
  } catch (const otk::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kParse;
}
