// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every line passes. Time limits are wall-clock on the whole criterion unless
// a per-run limit is given. All comparisons are exact (rational arithmetic);
// there are no numeric tolerances.
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "otk/otk.hpp"

using namespace otk;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [" << what << "]";
    }
  }
  void timed(double secs, double limit, const std::string& what) {
    detail << " " << what << "=" << std::fixed << std::setprecision(2) << secs << "s";
    require(secs < limit, what + " exceeded " + std::to_string(static_cast<int>(limit)) + "s");
  }
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  if (!o.ok) ++failures;
  std::cout << "criterion " << number << ": " << (o.ok ? "PASS" : "FAIL") << "  " << title << " ("
            << std::fixed << std::setprecision(2) << seconds_since(start) << "s)" << o.detail.str() << std::endl;
}

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& cmd) {
  Run r;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

VectorConfig example(const std::string& name) { return *builtin_example(name); }

}  // namespace

int main() {
  criterion(1, "T*P^1 golden presentations, limit 1s", [](Outcome& o) {
    auto start = Clock::now();
    auto r = verify_tp1();
    o.require(r.passed, r.witness.value_or("tp1 check failed"));
    o.timed(seconds_since(start), 1.0, "tp1");
  });

  criterion(2, "Ker psi_d = W_d: A dims d (d <= 3); triangle and four for d <= 6, limit 10s each", [](Outcome& o) {
    auto start = Clock::now();
    auto map = build_psi(example("tp1"), 3);
    o.require(kernel_dimensions(map) == std::vector<std::size_t>{0, 1, 2, 3}, "config A kernel dims != 0,1,2,3");
    auto a = verify_kernel_equals_W(example("tp1"), 3);
    o.require(a.passed, "config A: " + a.witness.value_or(""));
    o.timed(seconds_since(start), 10.0, "tp1");
    for (const char* name : {"triangle", "four"}) {
      start = Clock::now();
      auto r = verify_kernel_equals_W(example(name), 6);
      o.require(r.passed, std::string(name) + ": " + r.witness.value_or(""));
      o.timed(seconds_since(start), 10.0, name);
    }
  });

  criterion(3, "Hilbert identities on every corpus configuration (n <= 6), limit 5s each", [](Outcome& o) {
    for (const auto& e : corpus()) {
      if (e.config.size() > 6) continue;
      auto start = Clock::now();
      auto r = verify_hilbert_identities(e.config);
      o.require(r.passed, e.name + ": " + r.witness.value_or(""));
      o.timed(seconds_since(start), 5.0, e.name);
    }
  });

  criterion(4, "universal Groebner (n! lex + deglex + degrevlex) and elimination oracle, n <= 5, limit 60s total",
            [](Outcome& o) {
              auto start = Clock::now();
              for (const auto& e : corpus()) {
                if (e.config.size() > 5) continue;
                auto r = verify_universal_groebner(e.config);
                o.require(r.passed, e.name + ": " + r.witness.value_or(""));
                o.require(std::find(r.notes.begin(), r.notes.end(), "elimination oracle agrees") != r.notes.end(),
                          e.name + ": elimination oracle not run");
              }
              o.timed(seconds_since(start), 60.0, "total");
            });

  criterion(5, "flatness: saturation(I_h, h) = I_h and Hilb(deformed) = Hilb/(1 - t), limit 10s", [](Outcome& o) {
    auto start = Clock::now();
    for (const auto& e : corpus()) {
      auto r = verify_flatness(e.config);
      o.require(r.passed, e.name + ": " + r.witness.value_or(""));
    }
    o.timed(seconds_since(start), 10.0, "total");
  });

  criterion(6, "toric dimension = d + n on every corpus configuration, limit 5s", [](Outcome& o) {
    auto start = Clock::now();
    for (const auto& e : corpus()) {
      auto r = verify_toric_dimension(e.config);
      o.require(r.passed, e.name + ": " + r.witness.value_or(""));
    }
    o.timed(seconds_since(start), 5.0, "total");
  });

  criterion(7, "seeded property suites, >= 1000 cases, zero failures, limit 60s", [](Outcome& o) {
    auto start = Clock::now();
    auto r = run(std::string(OTK_PROPERTIES_PATH) + " --gtest_brief=1");
    o.require(r.code == 0, "property binary exited with " + std::to_string(r.code) + "\n" + r.out);
    o.timed(seconds_since(start), 60.0, "properties");
  });

  criterion(8, "verify-all --json twice on data/four.json is byte-identical", [](Outcome& o) {
    std::string cmd = std::string(OTK_CLI_PATH) + " verify-all --input " + OTK_DATA_DIR + "/four.json --json -";
    auto a = run(cmd), b = run(cmd);
    o.require(a.code == 0 && b.code == 0, "verify-all did not pass");
    o.require(!a.out.empty() && a.out == b.out, "outputs differ");
    o.detail << " bytes=" << a.out.size();
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
