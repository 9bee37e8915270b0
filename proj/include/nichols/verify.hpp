#pragma once

#include <string>
#include <vector>

#include "nichols/json_io.hpp"

namespace nichols {

struct VerifyOptions {
  int max_s = 4;
  int max_n = 4;
  std::vector<Eta> etas = standard_etas();
};

struct CaseResult {
  std::string name;
  bool pass = true;
  std::vector<std::string> notes;  // deterministic diagnostics
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;
  bool pass() const;
};

// hopf, fusion, greenring, ideals, auslander, lemma
const std::vector<std::string>& suite_names();
// "all" runs every suite. Throws InvalidLabel on an unknown name.
std::vector<SuiteReport> run_suites(const std::string& name, const VerifyOptions& opts);

// Acceptance criteria 1..11 as standalone checks (12 needs the CLI binary).
CaseResult criterion(int k, const VerifyOptions& opts);

std::string report_text(const std::vector<SuiteReport>& reports);
json report_json(const std::vector<SuiteReport>& reports);

}  // namespace nichols
