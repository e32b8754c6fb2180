#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lowdiam/graph.hpp"
#include "lowdiam/oracle.hpp"
#include "lowdiam/stats.hpp"

namespace lowdiam {

enum class Algorithm { kBlur, kDecompose, kHtsd, kProjected, kHst };

std::string to_string(Algorithm a);
Algorithm parse_algorithm(const std::string& name);

struct TrialConfig {
  std::string graph_source;  // generator spec or file path, echoed in reports
  std::shared_ptr<const Graph> graph;
  Algorithm algorithm = Algorithm::kDecompose;

  // blur
  double rho = 1.0;
  double alpha = 0.0;  // 0 selects 1 / (2 log2 n)
  std::vector<Vertex> seed_set{0};
  // decompose and the hierarchy
  double delta = 1.0;
  double c = 4.0;
  int iteration_cap = 0;
  // p-stretch exponent
  double p = 0.5;

  OracleConfig oracle;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency

  bool record_trace = false;
  // Domination is checked on graphs with at most this many vertices.
  std::size_t domination_cap = 64;
  // Exact diameter for auditing the estimate; computed when absent and n <= domination_cap.
  std::optional<double> exact_diameter;
  // Throw AuditFailure after the run when a deterministic audit failed.
  bool abort_on_audit_failure = true;

  void validate() const;
};

// Result of one trial, compact enough to keep for every trial.
struct TrialOutcome {
  std::uint64_t index = 0;
  std::uint64_t fingerprint = 0;  // hash of the trial's full output
  std::string failure;            // exception raised by the algorithm (iteration cap)
  std::vector<std::string> violations;

  std::vector<std::uint8_t> cut;  // per edge id: cut (blur, decompose) or decoupled on level 0
  int iterations = 0;             // decompose: while-iterations; hierarchy: max over levels
  int max_load = 0;
  std::vector<std::pair<int, std::uint32_t>> load_counts;  // (load, #edges)
  bool diameter_event = true;  // every supporting tree within its budget
  double diameter_ratio = 0.0;  // largest supporting-tree diameter over its budget

  // Means over the edges of this trial.
  double stretch = 0.0;
  double p_stretch = 0.0;
  std::vector<double> edge_stretch;  // per edge id
  std::uint64_t domination_pairs = 0;
  std::uint64_t domination_violations = 0;

  std::uint64_t oracle_total = 0;
  std::uint64_t oracle_merged = 0;
  bool recount_matches = true;
  std::map<std::string, std::uint64_t> by_phase;
  int k = 0;
  double delta = 0.0;
};

struct FailureRecord {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t key = 0;
  std::uint64_t fingerprint = 0;
  std::string what;
  bool audit = false;  // deterministic audit (bug) rather than a failure event
};

struct EdgeFrequency {
  EdgeId edge = 0;
  std::uint64_t hits = 0;
  WilsonInterval interval;
};

struct TrialStats {
  std::uint64_t trials = 0;
  std::uint64_t completed = 0;  // trials without a failure event
  std::vector<EdgeFrequency> cut_frequency;  // per edge id
  std::map<int, std::uint64_t> iteration_histogram;
  std::vector<double> iterations;  // per completed trial
  std::map<int, std::uint64_t> load_histogram;  // over (edge, trial)
  std::vector<double> max_load;   // per completed trial
  std::vector<double> diameter_ratio;
  std::uint64_t diameter_violations = 0;  // trials with a tree above its budget

  MeanEstimate stretch;    // per-trial mean edge stretch
  MeanEstimate p_stretch;  // per-trial mean p-stretch
  std::vector<double> edge_stretch_mean;  // per edge, over completed trials
  std::uint64_t domination_pairs = 0;
  std::uint64_t domination_violations = 0;

  std::uint64_t audit_failures = 0;
  std::map<std::string, std::uint64_t> violation_kinds;  // trials with a violation, by audit prefix
  std::vector<FailureRecord> failures;  // audit failures and failure events, by trial

  std::uint64_t oracle_total = 0;
  std::uint64_t oracle_merged = 0;
  std::uint64_t max_merged = 0;
  std::uint64_t recount_mismatches = 0;
  std::map<std::string, std::uint64_t> by_phase;
};

class AuditFailure : public std::runtime_error {
 public:
  AuditFailure(const std::string& what, FailureRecord record) : std::runtime_error(what), record_(std::move(record)) {}
  const FailureRecord& record() const noexcept { return record_; }

 private:
  FailureRecord record_;
};

// Trial i draws from RandomStream(cfg.seed, i).
TrialOutcome run_single_trial(const TrialConfig& cfg, std::uint64_t index);

// Runs all trials on a pool of cfg.threads workers and reduces in trial order,
// so the result does not depend on the pool width.
TrialStats run_trials(const TrialConfig& cfg);

}  // namespace lowdiam
