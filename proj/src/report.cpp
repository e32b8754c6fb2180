#include "lowdiam/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace lowdiam {

std::string format_number(double x) {
  if (std::isnan(x)) return "null";
  if (std::isinf(x)) return x > 0 ? "1e999" : "-1e999";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void dump(const Json& j, int indent, int depth, std::string& out) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        out += Json(it.key()).dump();
        out += indent > 0 ? ": " : ":";
        dump(it.value(), indent, depth + 1, out);
      }
      out += nl;
      out += close;
      out += "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& x : j) flat = flat && !x.is_structured();
      out += "[";
      if (!flat) out += nl;
      bool first = true;
      for (const auto& x : j) {
        if (!first) {
          out += ",";
          out += flat ? (indent > 0 ? " " : "") : nl;
        }
        first = false;
        if (!flat) out += pad;
        dump(x, indent, depth + 1, out);
      }
      if (!flat) {
        out += nl;
        out += close;
      }
      out += "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_number(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump(j, indent, 0, out);
  out += "\n";
  return out;
}

Json to_json(const OracleConfig& cfg) {
  Json j;
  j["mode"] = to_string(cfg.mode);
  j["eps"] = cfg.eps;
  return j;
}

Json to_json(const CallLedger& ledger) {
  Json j;
  j["total"] = ledger.total();
  j["merged"] = ledger.merged();
  j["by_phase"] = Json::object();
  for (const auto& [k, v] : ledger.by_phase()) j["by_phase"][k] = v;
  return j;
}

Json to_json(const Tsd& tsd) {
  Json j;
  Json clusters = Json::array();
  for (const auto& c : tsd.clusters) {
    Json cj;
    cj["members"] = c.members;
    cj["root"] = c.tree.root;
    Json edges = Json::array();
    for (const auto& e : c.tree.edges) edges.push_back({{"parent", e.parent}, {"child", e.child}, {"edge", e.edge}, {"length", e.length}});
    cj["tree_edges"] = std::move(edges);
    cj["core"] = c.core;
    cj["iteration"] = c.iteration;
    clusters.push_back(std::move(cj));
  }
  j["clusters"] = std::move(clusters);
  j["cut_edges"] = tsd.cut_edges;
  j["deleted_edges"] = tsd.deleted_edges;
  Json loads = Json::object();
  for (const auto& [e, l] : tsd.loads) loads[std::to_string(e)] = l;
  j["loads"] = std::move(loads);
  j["iterations"] = tsd.iterations;
  j["schedule"] = tsd.schedule;
  return j;
}

Json to_json(const Htsd& h) {
  Json j;
  j["n"] = h.n;
  j["c"] = h.c;
  j["delta"] = h.delta;
  j["d_seq"] = h.d;
  j["k"] = h.k;
  Json levels = Json::array();
  for (const auto& level : h.levels) levels.push_back(to_json(level));
  j["levels"] = std::move(levels);
  Json dec = Json::object();
  for (std::size_t e = 0; e < h.decoupling.size(); ++e) dec[std::to_string(e)] = h.decoupling[e];
  j["decoupling"] = std::move(dec);
  j["loads"] = h.load;
  return j;
}

Json to_json(const ProjectedTree& t, const Htsd& h) {
  Json j;
  j["kind"] = "projected";
  Json edges = Json::array();
  for (const auto& l : t.links) edges.push_back({{"a", l.a}, {"b", l.b}, {"len", l.length}, {"projected_edge", l.edge}});
  j["tree_edges"] = std::move(edges);
  j["projection"] = t.projection;
  j["embedding"] = t.embedding;
  j["loads"] = t.load;
  Json stretch = Json::array();
  for (const auto& e : h.edges) stretch.push_back(tree_stretch(t, e));
  j["stretch_per_edge"] = std::move(stretch);
  return j;
}

Json to_json(const Hst& t, const Htsd& h) {
  Json j;
  j["kind"] = "hst";
  j["k"] = t.k;
  Json edges = Json::array();
  Json nodes = Json::array();
  for (std::size_t x = 0; x < t.nodes.size(); ++x) {
    const auto& node = t.nodes[x];
    nodes.push_back({{"level", node.level}, {"cluster", node.cluster}, {"leader", node.leader}});
    if (node.parent != kNone) edges.push_back({{"a", node.parent}, {"b", x}, {"len", node.parent_length}});
  }
  j["nodes"] = std::move(nodes);
  j["tree_edges"] = std::move(edges);
  j["embedding"] = t.leaf_of;
  j["loads"] = h.load;
  Json stretch = Json::array();
  for (const auto& e : h.edges) stretch.push_back(tree_stretch(t, e));
  j["stretch_per_edge"] = std::move(stretch);
  return j;
}

Json to_json(const TrialConfig& cfg) {
  Json j;
  j["graph"] = cfg.graph_source;
  j["algorithm"] = to_string(cfg.algorithm);
  switch (cfg.algorithm) {
    case Algorithm::kBlur:
      j["rho"] = cfg.rho;
      j["alpha"] = cfg.alpha;
      j["b"] = cfg.seed_set;
      break;
    case Algorithm::kDecompose:
      j["delta"] = cfg.delta;
      j["c"] = cfg.c;
      j["iteration_cap"] = cfg.iteration_cap;
      break;
    default:
      j["c"] = cfg.c;
      j["p"] = cfg.p;
      break;
  }
  j["oracle"] = to_json(cfg.oracle);
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  return j;
}

namespace {

Json histogram(const std::map<int, std::uint64_t>& h) {
  Json j = Json::object();
  for (const auto& [k, v] : h) j[std::to_string(k)] = v;
  return j;
}

Json mean_json(const MeanEstimate& m) { return {{"count", m.count}, {"mean", m.mean}, {"std_error", m.std_error}}; }

}  // namespace

Json to_json(const TrialStats& s) {
  Json j;
  j["trials"] = s.trials;
  j["completed"] = s.completed;
  j["iteration_histogram"] = histogram(s.iteration_histogram);
  j["load_histogram"] = histogram(s.load_histogram);
  j["diameter_violations"] = s.diameter_violations;
  if (!s.iterations.empty()) j["iterations_p99"] = percentile(s.iterations, 0.99);
  if (!s.max_load.empty()) j["max_load_p99"] = percentile(s.max_load, 0.99);
  if (s.stretch.count > 0) {
    j["stretch"] = mean_json(s.stretch);
    j["p_stretch"] = mean_json(s.p_stretch);
  }
  j["domination"] = {{"pairs", s.domination_pairs}, {"violations", s.domination_violations}};
  j["audit_failures"] = s.audit_failures;
  Json kinds = Json::object();
  for (const auto& [k, v] : s.violation_kinds) kinds[k] = v;
  j["violation_kinds"] = std::move(kinds);
  Json failures = Json::array();
  for (const auto& f : s.failures) {
    char fp[32];
    std::snprintf(fp, sizeof fp, "%016llx", static_cast<unsigned long long>(f.fingerprint));
    failures.push_back({{"trial", f.trial}, {"seed", f.seed}, {"key", f.key}, {"fingerprint", fp}, {"audit", f.audit}, {"what", f.what}});
  }
  j["failures"] = std::move(failures);
  Json ledger;
  ledger["total"] = s.oracle_total;
  ledger["merged"] = s.oracle_merged;
  ledger["max_merged"] = s.max_merged;
  ledger["recount_mismatches"] = s.recount_mismatches;
  ledger["by_phase"] = Json::object();
  for (const auto& [k, v] : s.by_phase) ledger["by_phase"][k] = v;
  j["ledger"] = std::move(ledger);
  return j;
}

Json report_header(const std::string& command, std::uint64_t seed, const Json& config) {
  Json j;
  j["version"] = kVersion;
  j["command"] = command;
  j["seed"] = seed;
  j["config"] = config;
  return j;
}

std::string cut_frequency_csv(const Graph& g, const TrialStats& stats) {
  std::string out = "edge_id,u,v,length,hits,trials,frequency,lower,upper\n";
  for (std::size_t e = 0; e < stats.cut_frequency.size(); ++e) {
    const auto& f = stats.cut_frequency[e];
    const Edge& edge = g.edges()[e];
    out += std::to_string(f.edge) + "," + std::to_string(edge.u) + "," + std::to_string(edge.v) + "," +
           format_number(edge.length) + "," + std::to_string(f.hits) + "," + std::to_string(stats.completed) + "," +
           format_number(f.interval.estimate) + "," + format_number(f.interval.lower) + "," +
           format_number(f.interval.upper) + "\n";
  }
  return out;
}

std::string edge_stretch_csv(const Graph& g, const TrialStats& stats) {
  std::string out = "edge_id,u,v,length,mean_stretch\n";
  for (std::size_t e = 0; e < stats.edge_stretch_mean.size(); ++e) {
    const Edge& edge = g.edges()[e];
    out += std::to_string(g.edge_ids()[e]) + "," + std::to_string(edge.u) + "," + std::to_string(edge.v) + "," +
           format_number(edge.length) + "," + format_number(stats.edge_stretch_mean[e]) + "\n";
  }
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename onto '" + path + "': " + ec.message());
  }
}

}  // namespace lowdiam
