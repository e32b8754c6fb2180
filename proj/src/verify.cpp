#include "lowdiam/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>

#include "lowdiam/generate.hpp"
#include "lowdiam/random.hpp"

namespace lowdiam {

bool VerifyReport::pass() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.pass; });
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"blur", "decompose", "htsd", "embed", "lemma44", "all"};
  return names;
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "blur") return {1, 2};
  if (suite == "decompose") return {3, 4, 5, 15};
  if (suite == "htsd") return {6, 7, 14};
  if (suite == "embed") return {8, 9, 10, 11};
  if (suite == "lemma44") return {12};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

namespace {

constexpr const char* kOracleNames[2] = {"exact", "perturbed"};

const char* kNames[16] = {"",
                          "blur containment",
                          "blur cut probability",
                          "decompose structure",
                          "decompose cut probability",
                          "decompose iteration count",
                          "hierarchy load",
                          "hierarchy structure",
                          "projected tree",
                          "hst",
                          "expected stretch",
                          "expected p-stretch",
                          "minimum gap probability",
                          "oracle robustness",
                          "sssp cost",
                          "reproducibility"};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

struct Check {
  bool pass = true;
  std::string detail;
  Json data = Json::object();
};

struct Run {
  TrialConfig cfg;
  TrialStats stats;
};

std::string describe(const FailureRecord& f) {
  return "trial " + std::to_string(f.trial) + " (seed " + std::to_string(f.seed) + ", key " + std::to_string(f.key) +
         "): " + f.what;
}

bool is_hierarchy(Algorithm a) { return a == Algorithm::kHtsd || a == Algorithm::kProjected || a == Algorithm::kHst; }

class Verifier {
 public:
  explicit Verifier(const VerifyOptions& opt) : opt_(opt) {}

  CriterionResult run(int id) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    r.id = id;
    r.name = kNames[id];
    if (id <= 11) {
      std::array<Check, 2> checks;
      for (int w = 0; w < 2; ++w) checks[static_cast<std::size_t>(w)] = dispatch(id, w);
      verdicts_[id] = {checks[0].pass, checks[1].pass};
      r.pass = checks[0].pass && checks[1].pass;
      r.detail = std::string("exact: ") + checks[0].detail + "; perturbed: " + checks[1].detail;
      r.data = Json::object();
      r.data["exact"] = std::move(checks[0].data);
      r.data["perturbed"] = std::move(checks[1].data);
      r.data["exact"]["pass"] = checks[0].pass;
      r.data["perturbed"]["pass"] = checks[1].pass;
    } else {
      Check c = dispatch(id, 0);
      r.pass = c.pass;
      r.detail = std::move(c.detail);
      r.data = std::move(c.data);
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }

 private:
  const VerifyOptions& opt_;
  std::map<std::string, std::shared_ptr<const Graph>> graphs_;
  std::map<std::string, Run> runs_;
  std::map<int, std::array<bool, 2>> verdicts_;
  std::set<std::string> paired_;  // runs whose stretch means are compared across oracles

  Check dispatch(int id, int w) {
    switch (id) {
      case 1: return blur_containment(w);
      case 2: return blur_cut(w);
      case 3: return decompose_structure(w);
      case 4: return decompose_cut(w);
      case 5: return decompose_iterations(w);
      case 6: return hierarchy_load(w);
      case 7: return hierarchy_structure(w);
      case 8: return projected(w);
      case 9: return hst(w);
      case 10: return stretch(w);
      case 11: return p_stretch(w);
      case 12: return gap_probability();
      case 13: return robustness();
      case 14: return sssp_cost();
      case 15: return reproducibility();
      default: throw std::invalid_argument("unknown criterion " + std::to_string(id));
    }
  }

  std::uint64_t trials(std::uint64_t fallback) const { return opt_.trials ? opt_.trials : fallback; }

  OracleConfig oracle(int w) const { return w == 0 ? OracleConfig::exact() : OracleConfig::perturbed(opt_.oracle_eps); }

  std::shared_ptr<const Graph> graph(const std::string& spec) {
    auto it = graphs_.find(spec);
    if (it == graphs_.end()) it = graphs_.emplace(spec, std::make_shared<const Graph>(generate_graph(spec))).first;
    return it->second;
  }

  TrialConfig base(const std::string& spec, Algorithm a, int w) {
    TrialConfig cfg;
    cfg.graph_source = spec;
    cfg.graph = graph(spec);
    cfg.algorithm = a;
    cfg.oracle = oracle(w);
    cfg.seed = opt_.seed;
    cfg.threads = opt_.threads;
    cfg.abort_on_audit_failure = false;
    return cfg;
  }

  const Run& get(const std::string& label, int w, const TrialConfig& cfg) {
    const std::string key = label + "/" + kOracleNames[w];
    auto it = runs_.find(key);
    if (it == runs_.end()) it = runs_.emplace(key, Run{cfg, run_trials(cfg)}).first;
    return it->second;
  }

  void csv(const std::string& name, const std::string& content) const {
    if (!opt_.csv_dir.empty()) write_file_atomic(opt_.csv_dir + "/" + name + ".csv", content);
  }

  static void note_audits(Check& c, const Run& r, const std::string& label) {
    if (r.stats.audit_failures == 0) return;
    c.pass = false;
    for (const auto& f : r.stats.failures) {
      if (f.audit) {
        c.data["first_audit_failure"] = label + " " + describe(f);
        break;
      }
    }
  }

  // Runs shared by several criteria.
  const Run& blur_run(const std::string& spec, double rho, int w) {
    TrialConfig cfg = base(spec, Algorithm::kBlur, w);
    cfg.rho = rho;
    cfg.seed_set = {0};
    cfg.trials = trials(10000);
    return get("blur/" + spec + "/" + num(rho), w, cfg);
  }

  const Run& decompose_run(const std::string& spec, int w) {
    TrialConfig cfg = base(spec, Algorithm::kDecompose, w);
    cfg.delta = 512.0;
    cfg.c = 2.0;
    cfg.trials = trials(10000);
    return get("decompose/" + spec, w, cfg);
  }

  const Run& hierarchy_run(const std::string& spec, Algorithm a, double c, std::uint64_t count, int w) {
    TrialConfig cfg = base(spec, a, w);
    cfg.c = c;
    cfg.p = 0.5;
    cfg.trials = trials(count);
    return get(to_string(a) + "/" + spec + "/c" + num(c), w, cfg);
  }

  static const std::vector<std::string>& decompose_graphs() {
    static const std::vector<std::string> g{"cycle(64,1)", "grid(8,8,1)"};
    return g;
  }
  static const std::vector<std::string>& load_graphs() {
    static const std::vector<std::string> g{"grid(8,8,1)", "gnp(64,0.1,10,7)"};
    return g;
  }
  static const std::vector<std::string>& embed_graphs() {
    static const std::vector<std::string> g{"cycle(64,1)", "grid(8,8,1)"};
    return g;
  }
  static const std::vector<std::string>& stretch_graphs() {
    static const std::vector<std::string> g{"cycle(64,1)"};
    return g;
  }

  Check blur_containment(int w) {
    Check c;
    std::uint64_t runs = 0;
    std::uint64_t bad = 0;
    for (const auto& entry : standing_corpus()) {
      TrialConfig cfg = base(entry.spec, Algorithm::kBlur, w);
      cfg.rho = 10.0;
      cfg.seed_set = {0, static_cast<Vertex>(cfg.graph->order() / 2)};
      cfg.trials = trials(1000);
      const Run& r = get("containment/" + entry.name, w, cfg);
      runs += r.stats.trials;
      bad += r.stats.audit_failures;
      note_audits(c, r, entry.name);
    }
    c.pass = c.pass && bad == 0;
    c.data["runs"] = runs;
    c.data["violating_runs"] = bad;
    c.detail = std::to_string(bad) + " violating runs of " + std::to_string(runs);
    return c;
  }

  Check blur_cut(int w) {
    Check c;
    double tightest = 0.0;
    double worst_margin = kInfinity;
    std::uint64_t failing = 0;
    std::uint64_t checked = 0;
    for (const std::string spec : {"path(50,1)", "grid(8,8,1)"}) {
      for (double rho : {5.0, 10.0, 20.0}) {
        const Run& r = blur_run(spec, rho, w);
        note_audits(c, r, spec);
        const Graph& g = *r.cfg.graph;
        for (std::size_t e = 0; e < r.stats.cut_frequency.size(); ++e) {
          const double len = g.edges()[e].length;
          const auto v = compare_bound(r.stats.cut_frequency[e].interval.estimate, r.stats.completed, kBlurConstant * len / rho);
          ++checked;
          failing += !v.pass;
          worst_margin = std::min(worst_margin, v.margin);
          tightest = std::max(tightest, v.upper * rho / len);
        }
        csv("blur_cut_" + spec.substr(0, spec.find('(')) + "_rho" + num(rho) + "_" + kOracleNames[w],
            cut_frequency_csv(g, r.stats));
      }
    }
    c.pass = c.pass && failing == 0;
    c.data["edges_checked"] = checked;
    c.data["edges_failing"] = failing;
    c.data["worst_margin"] = worst_margin;
    c.data["tightest_constant"] = tightest;
    c.detail = std::to_string(failing) + "/" + std::to_string(checked) + " edges above 50 l/rho, tightest constant " +
               num(tightest);
    return c;
  }

  Check decompose_structure(int w) {
    Check c;
    Json per = Json::object();
    for (const auto& spec : decompose_graphs()) {
      const Run& r = decompose_run(spec, w);
      note_audits(c, r, spec);
      const auto completed = r.stats.completed;
      const double freq = completed ? static_cast<double>(r.stats.diameter_violations) / static_cast<double>(completed) : 1.0;
      const auto v = compare_bound(freq, std::max<std::uint64_t>(completed, 1), 0.01);
      c.pass = c.pass && v.pass;
      const double ratio = r.stats.diameter_ratio.empty()
                               ? 0.0
                               : *std::max_element(r.stats.diameter_ratio.begin(), r.stats.diameter_ratio.end());
      per[spec] = {{"structural_violations", r.stats.audit_failures},
                   {"diameter_violations", r.stats.diameter_violations},
                   {"completed", completed},
                   {"violation_upper", v.upper},
                   {"max_diameter_over_delta", ratio}};
      c.detail += (c.detail.empty() ? "" : ", ") + spec + " " + std::to_string(r.stats.audit_failures) + " structural, " +
                  std::to_string(r.stats.diameter_violations) + " diameter (max ratio " + num(ratio) + ")";
    }
    c.data["graphs"] = std::move(per);
    return c;
  }

  Check decompose_cut(int w) {
    Check c;
    double tightest = 0.0;
    std::uint64_t failing = 0;
    std::uint64_t checked = 0;
    for (const auto& spec : decompose_graphs()) {
      const Run& r = decompose_run(spec, w);
      const Graph& g = *r.cfg.graph;
      const double logn = log2_at_least_one(g.order());
      for (std::size_t e = 0; e < r.stats.cut_frequency.size(); ++e) {
        const double len = g.edges()[e].length;
        const auto v = compare_bound(r.stats.cut_frequency[e].interval.estimate, r.stats.completed,
                                     kDecomposeConstant * len * logn / r.cfg.delta);
        ++checked;
        failing += !v.pass;
        tightest = std::max(tightest, v.upper * r.cfg.delta / (len * logn));
      }
      csv("decompose_cut_" + spec.substr(0, spec.find('(')) + "_" + kOracleNames[w], cut_frequency_csv(g, r.stats));
    }
    c.pass = failing == 0;
    c.data["edges_checked"] = checked;
    c.data["edges_failing"] = failing;
    c.data["tightest_constant"] = tightest;
    c.detail = std::to_string(failing) + "/" + std::to_string(checked) + " edges above 50 l log n / delta, tightest constant " +
               num(tightest);
    return c;
  }

  Check decompose_iterations(int w) {
    Check c;
    Json per = Json::object();
    for (const auto& spec : decompose_graphs()) {
      const Run& r = decompose_run(spec, w);
      const double cap = 8.0 * log2_at_least_one(r.cfg.graph->order());
      std::uint64_t over = r.stats.trials - r.stats.completed;  // iteration-cap failures
      for (double it : r.stats.iterations) over += it > cap;
      const auto v = compare_bound(static_cast<double>(over) / static_cast<double>(r.stats.trials), r.stats.trials, 0.01);
      const double p99 = r.stats.iterations.empty() ? kInfinity : percentile(r.stats.iterations, 0.99);
      c.pass = c.pass && v.pass;
      per[spec] = {{"p99", p99}, {"bound", cap}, {"trials_over", over}, {"over_upper", v.upper}};
      c.detail += (c.detail.empty() ? "" : ", ") + spec + " p99 " + num(p99) + " <= " + num(cap);
    }
    c.data["graphs"] = std::move(per);
    return c;
  }

  Check hierarchy_load(int w) {
    Check c;
    Json per = Json::object();
    for (const auto& spec : load_graphs()) {
      const Run& r = hierarchy_run(spec, Algorithm::kHtsd, 2.0, 1000, w);
      const double cap = 10.0 * log2_at_least_one(r.cfg.graph->order());
      std::uint64_t over = 0;
      for (double l : r.stats.max_load) over += l > cap;
      const auto v = compare_bound(static_cast<double>(over) / static_cast<double>(r.stats.completed), r.stats.completed, 0.01);
      const double p99 = percentile(r.stats.max_load, 0.99);
      c.pass = c.pass && v.pass;
      per[spec] = {{"max_load_p99", p99}, {"bound", cap}, {"trials_over", over}, {"over_upper", v.upper}};
      c.detail += (c.detail.empty() ? "" : ", ") + spec + " max load p99 " + num(p99) + " <= " + num(cap);
    }
    c.data["graphs"] = std::move(per);
    return c;
  }

  Check hierarchy_structure(int w) {
    for (const auto& spec : load_graphs()) hierarchy_run(spec, Algorithm::kHtsd, 2.0, 1000, w);
    Check c;
    std::uint64_t trials_seen = 0;
    std::uint64_t bad = 0;
    for (const auto& [label, r] : runs_) {
      if (!is_hierarchy(r.cfg.algorithm) || r.cfg.oracle.mode != oracle(w).mode) continue;
      trials_seen += r.stats.trials;
      for (const auto& [kind, count] : r.stats.violation_kinds) {
        if (kind != "projected" && kind != "hst") bad += count;
      }
      note_audits(c, r, label);
    }
    c.pass = bad == 0;
    c.data["trials"] = trials_seen;
    c.data["violations"] = bad;
    c.detail = std::to_string(bad) + " violating trials of " + std::to_string(trials_seen);
    return c;
  }

  Check tree_audit(int w, Algorithm a) {
    Check c;
    std::uint64_t seen = 0;
    std::uint64_t bad = 0;
    std::uint64_t pairs = 0;
    std::uint64_t dominated_violations = 0;
    std::uint64_t domination_trials = 0;
    for (const auto& spec : embed_graphs()) {
      const Run& r = hierarchy_run(spec, a, 1.0, 10000, w);
      seen += r.stats.trials;
      auto it = r.stats.violation_kinds.find(to_string(a));
      if (it != r.stats.violation_kinds.end()) bad += it->second;
      pairs += r.stats.domination_pairs;
      dominated_violations += r.stats.domination_violations;
      domination_trials += a == Algorithm::kHst ? r.stats.completed - r.stats.diameter_violations : r.stats.completed;
      if (it != r.stats.violation_kinds.end()) note_audits(c, r, spec);
    }
    c.pass = bad == 0 && dominated_violations == 0 && pairs > 0;
    c.data["trials"] = seen;
    c.data["violating_trials"] = bad;
    c.data["domination_trials"] = domination_trials;
    c.data["domination_pairs"] = pairs;
    c.data["domination_violations"] = dominated_violations;
    c.detail = std::to_string(bad) + " violating trials of " + std::to_string(seen) + ", " +
               std::to_string(dominated_violations) + " domination violations over " + std::to_string(pairs) + " pairs";
    return c;
  }

  Check projected(int w) { return tree_audit(w, Algorithm::kProjected); }
  Check hst(int w) { return tree_audit(w, Algorithm::kHst); }

  Check stretch(int w) {
    Check c;
    Json per = Json::object();
    for (const auto& spec : stretch_graphs()) {
      for (Algorithm a : {Algorithm::kProjected, Algorithm::kHst}) {
        const Run& r = hierarchy_run(spec, a, 1.0, 10000, w);
        paired_.insert(to_string(a) + "/" + spec + "/c1");
        const double logn = log2_at_least_one(r.cfg.graph->order());
        const auto v = compare_mean_bound(r.stats.stretch, kStretchConstant * logn * logn);
        c.pass = c.pass && v.pass;
        per[spec + " " + to_string(a)] = {{"mean", r.stats.stretch.mean}, {"std_error", r.stats.stretch.std_error},
                                          {"upper", v.upper}, {"bound", v.bound}};
        c.detail += (c.detail.empty() ? "" : ", ") + spec + " " + to_string(a) + " " + num(r.stats.stretch.mean) + " <= " +
                    num(v.bound);
        csv("stretch_" + to_string(a) + "_" + spec.substr(0, spec.find('(')) + "_" + kOracleNames[w],
            edge_stretch_csv(*r.cfg.graph, r.stats));
      }
    }
    c.data["runs"] = std::move(per);
    return c;
  }

  Check p_stretch(int w) {
    Check c;
    Json per = Json::object();
    for (const auto& spec : stretch_graphs()) {
      for (Algorithm a : {Algorithm::kHtsd, Algorithm::kProjected, Algorithm::kHst}) {
        const Run& r = hierarchy_run(spec, a, 1.0, 10000, w);
        paired_.insert(to_string(a) + "/" + spec + "/c1");
        const double logn = log2_at_least_one(r.cfg.graph->order());
        const auto v = compare_mean_bound(r.stats.p_stretch, kPStretchConstant * logn);
        c.pass = c.pass && v.pass;
        per[spec + " " + to_string(a)] = {{"mean", r.stats.p_stretch.mean}, {"std_error", r.stats.p_stretch.std_error},
                                          {"upper", v.upper}, {"bound", v.bound}};
        c.detail += (c.detail.empty() ? "" : ", ") + spec + " " + to_string(a) + " " + num(r.stats.p_stretch.mean) +
                    " <= " + num(v.bound);
      }
    }
    c.data["runs"] = std::move(per);
    return c;
  }

  Check gap_probability() {
    Check c;
    const std::uint64_t draws = 100000;
    const RandomStream root(opt_.seed, 12);
    std::uint64_t failing = 0;
    double worst = 0.0;
    Json configs = Json::array();
    auto one = [&](std::vector<double> values, double beta, double gap, RandomStream rs) {
      std::sort(values.begin(), values.end());
      const double p = min_gap_probability(values, beta, gap, draws, rs);
      const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(draws));
      const bool ok = p <= beta * gap + 4.0 * se;
      failing += !ok;
      if (beta * gap > 0.0) worst = std::max(worst, p / (beta * gap));
      configs.push_back({{"s", values.size()}, {"beta", beta}, {"c", gap}, {"estimate", p}, {"std_error", se},
                         {"bound", beta * gap}, {"pass", ok}});
      return p;
    };
    for (std::uint64_t i = 0; i < 50; ++i) {
      RandomStream rs = root.derive(i);
      const std::size_t s = 2 + static_cast<std::size_t>(rs.next_u64() % 19);
      const double beta = std::exp(std::log(0.05) + rs.next_unit() * (std::log(5.0) - std::log(0.05)));
      const double gap = rs.next_unit() / beta;
      const double spread = i % 3 == 0 ? 0.0 : (i % 3 == 1 ? 1.0 : 10.0);
      std::vector<double> values(s);
      for (double& v : values) v = rs.next_unit() * spread / beta;
      one(values, beta, gap, rs.derive(1));
    }
    const double laplace = one({0.0, 0.0}, 1.0, 0.1, root.derive(100));
    const double zero = one({0.0, 0.0}, 1.0, 0.0, root.derive(101));
    const double far = one({0.0, 1e9}, 1.0, 0.5, root.derive(102));
    const double expect = 1.0 - std::exp(-0.1);
    const double se = std::sqrt(expect * (1.0 - expect) / static_cast<double>(draws));
    const bool examples = std::abs(laplace - expect) <= 4.0 * se && zero == 0.0 && far == 0.0;
    c.pass = failing == 0 && examples;
    c.data["draws"] = draws;
    c.data["configs"] = std::move(configs);
    c.data["failing"] = failing;
    c.data["max_estimate_over_bound"] = worst;
    c.detail = std::to_string(failing) + " of 53 configurations above beta c + 4 se, max ratio " + num(worst) +
               ", two-value tie " + num(laplace) + " vs " + num(expect);
    return c;
  }

  Check robustness() {
    for (int id = 1; id <= 11; ++id) {
      if (!verdicts_.count(id)) {
        for (int w = 0; w < 2; ++w) {
          const Check ch = dispatch(id, w);
          verdicts_[id][static_cast<std::size_t>(w)] = ch.pass;
        }
      }
    }
    Check c;
    std::string mismatched;
    for (const auto& [id, v] : verdicts_) {
      if (id <= 11 && v[0] != v[1]) mismatched += (mismatched.empty() ? "" : ",") + std::to_string(id);
    }
    Json pairs = Json::object();
    Json other = Json::object();
    std::uint64_t far = 0;
    for (const auto& [label, r] : runs_) {
      if (r.cfg.oracle.mode != OracleMode::kExact || r.stats.stretch.count == 0) continue;
      const std::string base_label = label.substr(0, label.rfind('/'));
      auto it = runs_.find(base_label + "/" + kOracleNames[1]);
      if (it == runs_.end()) continue;
      const auto& a = r.stats.stretch;
      const auto& b = it->second.stats.stretch;
      const double diff = std::abs(a.mean - b.mean);
      const double allowed = 3.0 * std::sqrt(a.std_error * a.std_error + b.std_error * b.std_error);
      const bool ok = diff <= allowed;
      Json entry = {{"exact", a.mean}, {"perturbed", b.mean}, {"difference", diff}, {"allowed", allowed}, {"pass", ok}};
      if (paired_.count(base_label)) {
        far += !ok;
        pairs[base_label] = std::move(entry);
      } else {
        other[base_label] = std::move(entry);
      }
    }
    c.pass = mismatched.empty() && far == 0 && !pairs.empty();
    c.data["verdict_mismatches"] = mismatched;
    c.data["stretch_pairs"] = std::move(pairs);
    c.data["other_pairs"] = std::move(other);
    c.detail = (mismatched.empty() ? std::string("verdicts identical") : "verdicts differ on " + mismatched) + ", " +
               std::to_string(far) + " stretch pairs beyond 3 combined std errs";
    return c;
  }

  Check sssp_cost() {
    Check c;
    Json per = Json::object();
    std::uint64_t over = 0;
    std::uint64_t mismatches = 0;
    for (int w = 0; w < 2; ++w) {
      for (const auto& entry : standing_corpus()) {
        TrialConfig cfg = base(entry.spec, Algorithm::kHtsd, w);
        cfg.c = 1.0;
        cfg.trials = 1;
        cfg.record_trace = true;
        const Run& r = get("cost/" + entry.name, w, cfg);
        const double logn = log2_at_least_one(cfg.graph->order());
        const double bound = 60.0 * logn * logn * logn;
        const bool ok = static_cast<double>(r.stats.max_merged) <= bound;
        over += !ok;
        mismatches += r.stats.recount_mismatches;
        note_audits(c, r, entry.name);
        per[entry.name + " " + kOracleNames[w]] = {{"merged", r.stats.max_merged}, {"total", r.stats.oracle_total},
                                                   {"bound", bound}, {"recount_matches", r.stats.recount_mismatches == 0}};
      }
    }
    c.pass = c.pass && over == 0 && mismatches == 0;
    c.data["builds"] = std::move(per);
    c.detail = std::to_string(over) + " builds above 60 log^3 n, " + std::to_string(mismatches) + " recount mismatches";
    return c;
  }

  Check reproducibility() {
    for (int w = 0; w < 2; ++w) {
      TrialConfig cfg = base("cycle(64,1)", Algorithm::kDecompose, w);
      cfg.delta = 512.0;
      cfg.c = 1.0;
      cfg.iteration_cap = 1;
      cfg.trials = std::min<std::uint64_t>(trials(100), 100);
      get("forced-failure/cycle(64,1)", w, cfg);
    }
    Check c;
    std::uint64_t checked = 0;
    std::uint64_t mismatched = 0;
    std::string first;
    for (const auto& [label, r] : runs_) {
      std::uint64_t per_run = 0;
      for (const auto& f : r.stats.failures) {
        if (++per_run > 50) break;
        const TrialOutcome again = run_single_trial(r.cfg, f.key);
        const std::string what = f.audit ? (again.violations.empty() ? "" : again.violations.front()) : again.failure;
        const bool same = again.fingerprint == f.fingerprint && what == f.what;
        ++checked;
        mismatched += !same;
        if (!same && first.empty()) first = label + " " + describe(f);
      }
    }
    c.pass = checked > 0 && mismatched == 0;
    c.data["replayed"] = checked;
    c.data["mismatched"] = mismatched;
    if (!first.empty()) c.data["first_mismatch"] = first;
    c.detail = std::to_string(checked) + " logged failures replayed, " + std::to_string(mismatched) + " differ";
    return c;
  }
};

}  // namespace

VerifyReport run_verify(const std::string& suite, const VerifyOptions& options) {
  const std::vector<int> ids = suite_criteria(suite);
  VerifyReport report;
  report.suite = suite;
  Verifier v(options);
  for (int id : ids) {
    report.criteria.push_back(v.run(id));
    if (options.progress) options.progress(report.criteria.back());
  }
  return report;
}

Json to_json(const VerifyReport& report, const VerifyOptions& options) {
  Json config;
  config["suite"] = report.suite;
  config["trials"] = options.trials;
  config["oracle_eps"] = options.oracle_eps;
  Json j = report_header("verify", options.seed, config);
  j["pass"] = report.pass();
  Json criteria = Json::array();
  for (const auto& c : report.criteria) {
    criteria.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"data", c.data}});
  }
  j["criteria"] = std::move(criteria);
  return j;
}

}  // namespace lowdiam
