#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lowdiam/report.hpp"

namespace lowdiam {

// Envelopes over the unstated constants of the cut, stretch and p-stretch bounds.
inline constexpr double kBlurConstant = 50.0;
inline constexpr double kDecomposeConstant = 50.0;
inline constexpr double kStretchConstant = 8.0;
inline constexpr double kPStretchConstant = 8.0;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  Json data;
  double seconds = 0.0;  // wall time, kept out of the JSON report
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::uint64_t trials = 0;  // 0: each criterion's own trial count
  unsigned threads = 0;
  double oracle_eps = 0.1;
  std::string csv_dir;  // per-edge CSVs are written here when set
  std::function<void(const CriterionResult&)> progress;
};

struct VerifyReport {
  std::string suite;
  std::vector<CriterionResult> criteria;

  bool pass() const;
};

// blur, decompose, htsd, embed, lemma44, all
const std::vector<std::string>& verify_suites();
std::vector<int> suite_criteria(const std::string& suite);

VerifyReport run_verify(const std::string& suite, const VerifyOptions& options);

Json to_json(const VerifyReport& report, const VerifyOptions& options);

}  // namespace lowdiam
