#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lowdiam/graph.hpp"
#include "lowdiam/random.hpp"

namespace lowdiam {

enum class OracleMode { kExact, kPerturbed };

// In perturbed mode every edge length (source edges included) is scaled by an
// independent U[1, 1+eps] factor for the search; the returned tree is then
// re-measured with the original lengths, so dist <= dist_T <= (1+eps) dist.
struct OracleConfig {
  OracleMode mode = OracleMode::kExact;
  double eps = 0.0;

  static OracleConfig exact() { return {}; }
  static OracleConfig perturbed(double eps);

  // Same mode at a different error bound (exact stays exact).
  OracleConfig with_eps(double e) const;
  bool is_exact() const { return mode == OracleMode::kExact; }
};

std::string to_string(OracleMode mode);
OracleMode parse_oracle_mode(const std::string& name);

enum class Phase : std::uint8_t { kStandalone, kDiameter, kInitialCells, kSeparation, kBlur };
std::string to_string(Phase phase);

// Identifies which conceptual parallel batch a call belongs to. Calls with the
// same (level, iteration, step) issued by concurrently runnable computations
// merge into a single SSSP instance.
struct CallTag {
  Phase phase = Phase::kStandalone;
  std::int32_t level = 0;
  std::int32_t iteration = 0;
  std::int32_t step = 0;  // 0 initial cells, 1 separation, 1+j blur round j
  bool batched = false;   // merged count is owned by the orchestrating caller

  friend auto operator<=>(const CallTag&, const CallTag&) = default;
};

struct TraceEvent {
  CallTag tag;
  std::uint64_t sequence = 0;
};

// Counts oracle invocations. A ledger belongs to one computation; parallel
// trials keep their own and are combined afterwards with `absorb`.
class CallLedger {
 public:
  explicit CallLedger(bool record_trace = false) : record_trace_(record_trace) {}

  void record(const CallTag& tag);
  void add_merged(std::uint64_t count) { merged_ += count; }

  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t merged() const noexcept { return merged_; }
  const std::map<std::string, std::uint64_t>& by_phase() const noexcept { return by_phase_; }
  const std::vector<TraceEvent>& trace() const noexcept { return trace_; }
  bool recording() const noexcept { return record_trace_; }

  // Sequential composition: counts add up, traces concatenate.
  void absorb(const CallLedger& other);

 private:
  bool record_trace_ = false;
  std::uint64_t total_ = 0;
  std::uint64_t merged_ = 0;
  std::uint64_t standalone_ = 0;
  std::map<std::string, std::uint64_t> by_phase_;
  std::vector<TraceEvent> trace_;
};

// Number of distinct merge batches in a trace; standalone calls are their own batch.
std::uint64_t recount_merged(const std::vector<TraceEvent>& trace);

struct LedgerReport {
  std::uint64_t total = 0;
  std::uint64_t merged = 0;
  std::map<std::string, std::uint64_t> by_phase;
};
LedgerReport ledger_report(const CallLedger& ledger);

SsspTree approx_sssp(const Graph& g, Vertex root, const OracleConfig& cfg, RandomStream& stream, CallLedger& ledger,
                     const CallTag& tag = {});
// Rooted at the super-source.
SsspTree approx_sssp(const SuperSourceGraph& g, const OracleConfig& cfg, RandomStream& stream, CallLedger& ledger,
                     const CallTag& tag = {});

struct DiameterEstimate {
  double delta = 0.0;  // within [diam/4, diam]
  Vertex source = 0;
  SsspTree tree;
};

// Requires a connected graph and cfg.eps <= 1.
DiameterEstimate approximate_diameter(const Graph& g, const OracleConfig& cfg, RandomStream& stream,
                                      CallLedger& ledger);

}  // namespace lowdiam
