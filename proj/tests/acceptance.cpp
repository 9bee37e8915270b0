// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>

#include "nichols/verify.hpp"

using namespace nichols;

namespace {

const char* kTitles[] = {
    "",
    "Hopf axioms for K1..K3 and DK1",
    "fusion theorem: closed form equals oracle",
    "simple/projective fusion over K1..K3",
    "Green ring presentations",
    "correspondence between r(DK1)_0 and r(K2)",
    "minimal resolutions",
    "projective Auslander algebra is K_m",
    "tensor ideals of Rep(K2)",
    "negligible objects",
    "quasi-dominated objects",
    "simple-image lemma",
    "verify --suite all is deterministic",
};

// Runtime limits in seconds (0: none).
double limit(int k) {
  if (k == 1) return 1.0;
  if (k == 2) return 30.0;
  return 0.0;
}

bool capture(const std::string& cmd, std::string& out, int& code) {
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return false;
  std::array<char, 1 << 14> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return true;
}

CaseResult determinism() {
  CaseResult r{"determinism", true, {}};
  std::string cmd = std::string(NICHOLS_CLI) + " verify --suite all";
  std::string a, b;
  int ca = -1, cb = -1;
  if (!capture(cmd, a, ca) || !capture(cmd, b, cb)) {
    r.pass = false;
    r.notes.push_back("could not start " + cmd);
    return r;
  }
  r.notes.push_back("two runs: " + std::to_string(a.size()) + " and " + std::to_string(b.size()) + " bytes, exit " +
                    std::to_string(ca) + " and " + std::to_string(cb));
  if (a != b) {
    r.pass = false;
    r.notes.push_back("reports differ");
  }
  if (ca != 0 || cb != 0) {
    r.pass = false;
    r.notes.push_back("verify did not exit 0");
  }
  return r;
}

}  // namespace

int main() {
  bool all = true;
  VerifyOptions opts;
  for (int k = 1; k <= 12; ++k) {
    auto t0 = std::chrono::steady_clock::now();
    CaseResult r = k == 12 ? determinism() : criterion(k, opts);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = r.pass;
    std::string extra;
    if (limit(k) > 0 && secs >= limit(k)) {
      ok = false;
      extra = " over the " + std::to_string(int(limit(k))) + " s limit";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (ok ? "PASS" : "FAIL") << " " << k << ": " << kTitles[k] << " (" << timing << extra << ")\n";
    for (const auto& n : r.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
    all = all && ok;
  }
  return all ? 0 : 1;
}
