// lowdiam: generate graphs, run the decompositions and tree embeddings, verify.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "lowdiam/audits.hpp"
#include "lowdiam/blur.hpp"
#include "lowdiam/decompose.hpp"
#include "lowdiam/embed.hpp"
#include "lowdiam/generate.hpp"
#include "lowdiam/harness.hpp"
#include "lowdiam/htsd.hpp"
#include "lowdiam/report.hpp"
#include "lowdiam/verify.hpp"

using namespace lowdiam;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string oracle = "exact";
  double oracle_eps = 0.1;
  double c = 4.0;
  std::string format = "json";
  std::string out;
  unsigned threads = 0;
};

struct Common {
  std::string graph;
  std::uint64_t trials = 1;
};

OracleConfig oracle_of(const Globals& g) {
  return parse_oracle_mode(g.oracle) == OracleMode::kExact ? OracleConfig::exact() : OracleConfig::perturbed(g.oracle_eps);
}

std::uint64_t resolve_seed(const Globals& g) {
  if (g.seed_given) return g.seed;
  if (const char* env = std::getenv("LOWDIAM_SEED")) {
    try {
      std::size_t used = 0;
      const std::uint64_t s = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
      return s;
    } catch (const std::exception&) {
      throw UsageError(std::string("LOWDIAM_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  return 0;
}

// A path to an existing file, otherwise a generator spec.
std::shared_ptr<const Graph> load_graph(const std::string& source) {
  if (std::filesystem::exists(source)) return std::make_shared<const Graph>(read_graph_file(source));
  if (source.find('(') != std::string::npos) return std::make_shared<const Graph>(generate_graph(source));
  throw UsageError("'" + source + "' is neither a file nor a generator spec");
}

void emit(const Globals& g, const std::string& content) {
  if (g.out.empty()) {
    std::cout << content;
  } else {
    write_file_atomic(g.out, content);
  }
}

TrialConfig trial_config(const Globals& g, const Common& common, Algorithm a) {
  TrialConfig cfg;
  cfg.graph_source = common.graph;
  cfg.graph = load_graph(common.graph);
  cfg.algorithm = a;
  cfg.c = g.c;
  cfg.oracle = oracle_of(g);
  cfg.trials = common.trials;
  cfg.seed = resolve_seed(g);
  cfg.threads = g.threads;
  cfg.abort_on_audit_failure = false;
  return cfg;
}

int finish_trials(const Globals& g, const TrialConfig& cfg, const TrialStats& stats, Json result, const char* command) {
  if (g.format == "csv") {
    emit(g, cfg.algorithm == Algorithm::kBlur || cfg.algorithm == Algorithm::kDecompose
                ? cut_frequency_csv(*cfg.graph, stats)
                : edge_stretch_csv(*cfg.graph, stats));
  } else {
    Json j = report_header(command, cfg.seed, to_json(cfg));
    if (!result.is_null()) j["result"] = std::move(result);
    j["stats"] = to_json(stats);
    emit(g, dump_json(j));
  }
  for (const auto& f : stats.failures) {
    std::cerr << (f.audit ? "audit failure" : "failure event") << " in trial " << f.trial << " (seed " << f.seed
              << ", key " << f.key << "): " << f.what << "\n";
  }
  return stats.audit_failures > 0 ? kFailed : kOk;
}

int cmd_gen(const Globals& g, const std::vector<std::string>& words) {
  std::string spec;
  if (words.size() == 1) {
    spec = words[0];
  } else {
    spec = words[0] + "(";
    for (std::size_t i = 1; i < words.size(); ++i) spec += (i > 1 ? "," : "") + words[i];
    spec += ")";
  }
  const Graph graph = generate_graph(spec);
  emit(g, "# " + spec + "\n" + write_graph(graph));
  return kOk;
}

int cmd_blur(const Globals& g, const Common& common, double rho, double alpha, const std::vector<Vertex>& b) {
  TrialConfig cfg = trial_config(g, common, Algorithm::kBlur);
  cfg.rho = rho;
  cfg.alpha = alpha;
  cfg.seed_set = b;
  cfg.validate();
  Json result;
  if (cfg.trials == 1) {
    const BlurParams params = alpha > 0.0 ? BlurParams::with_alpha(rho, alpha) : BlurParams::for_graph(rho, cfg.graph->order());
    RandomStream rs(cfg.seed, 0);
    CallLedger ledger;
    const BlurResult r = blur(*cfg.graph, params, cfg.seed_set, cfg.oracle, rs, ledger);
    result["alpha"] = params.alpha;
    result["set"] = r.set;
    Json rounds = Json::array();
    for (const auto& round : r.trace.rounds) {
      rounds.push_back({{"index", round.index}, {"radius_cap", round.radius_cap}, {"radius", round.radius}, {"size", round.size}});
    }
    result["rounds"] = std::move(rounds);
    result["ledger"] = to_json(ledger);
  }
  return finish_trials(g, cfg, run_trials(cfg), std::move(result), "blur");
}

int cmd_decompose(const Globals& g, const Common& common, double delta, int cap) {
  TrialConfig cfg = trial_config(g, common, Algorithm::kDecompose);
  cfg.delta = delta;
  cfg.iteration_cap = cap;
  cfg.validate();
  Json result;
  if (cfg.trials == 1) {
    DecomposeParams params = DecomposeParams::make(delta, cfg.c, cfg.graph->order());
    params.iteration_cap = cap;
    RandomStream rs(cfg.seed, 0);
    CallLedger ledger;
    try {
      const Tsd tsd = ts_decompose(*cfg.graph, params, cfg.oracle, rs, ledger);
      result = to_json(tsd);
      result["ledger"] = to_json(ledger);
    } catch (const IterationCapExceeded& e) {
      result["failure"] = e.what();
    }
  }
  return finish_trials(g, cfg, run_trials(cfg), std::move(result), "decompose");
}

Htsd single_htsd(const TrialConfig& cfg, CallLedger& ledger) {
  RandomStream rs(cfg.seed, 0);
  return build_htsd(*cfg.graph, cfg.c, cfg.oracle, rs, ledger);
}

int cmd_htsd(const Globals& g, const Common& common, double p) {
  TrialConfig cfg = trial_config(g, common, Algorithm::kHtsd);
  cfg.p = p;
  cfg.validate();
  Json result;
  if (cfg.trials == 1) {
    CallLedger ledger;
    const Htsd h = single_htsd(cfg, ledger);
    result = to_json(h);
    Json stretch = Json::array();
    Json pst = Json::array();
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      stretch.push_back(htsd_stretch(h, static_cast<EdgeId>(e)));
      pst.push_back(htsd_p_stretch(h, static_cast<EdgeId>(e), p));
    }
    result["stretch_per_edge"] = std::move(stretch);
    result["p_stretch_per_edge"] = std::move(pst);
    result["ledger"] = to_json(ledger);
  }
  return finish_trials(g, cfg, run_trials(cfg), std::move(result), "htsd");
}

int cmd_embed(const Globals& g, const Common& common, const std::string& kind, double p) {
  TrialConfig cfg = trial_config(g, common, kind == "hst" ? Algorithm::kHst : Algorithm::kProjected);
  cfg.p = p;
  cfg.validate();
  Json result;
  if (cfg.trials == 1) {
    CallLedger ledger;
    const Htsd h = single_htsd(cfg, ledger);
    if (cfg.algorithm == Algorithm::kHst) {
      result = to_json(build_hst(h), h);
    } else {
      result = to_json(build_projected_tree(h), h);
    }
    result["ledger"] = to_json(ledger);
  }
  return finish_trials(g, cfg, run_trials(cfg), std::move(result), "embed");
}

int cmd_verify(const Globals& g, const std::string& suite, std::uint64_t trials, std::string csv_dir) {
  VerifyOptions opt;
  opt.seed = resolve_seed(g);
  if (!g.seed_given && !std::getenv("LOWDIAM_SEED")) opt.seed = 42;
  opt.trials = trials;
  opt.threads = g.threads;
  opt.oracle_eps = g.oracle_eps;
  if (csv_dir.empty() && !g.out.empty()) {
    const auto parent = std::filesystem::path(g.out).parent_path();
    csv_dir = (parent.empty() ? std::filesystem::path("verify_csv") : parent / "verify_csv").string();
  }
  opt.csv_dir = csv_dir;
  opt.progress = [](const CriterionResult& r) {
    std::fprintf(stderr, "[%s] %2d %s: %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str());
  };
  const VerifyReport report = run_verify(suite, opt);
  emit(g, dump_json(to_json(report, opt)));
  return report.pass() ? kOk : kFailed;
}

int cmd_bench(const Globals& g, const Common& common, const std::string& algorithm, double delta, double rho) {
  const std::vector<std::string> sources =
      common.graph.empty() ? [] {
        std::vector<std::string> s;
        for (const auto& e : standing_corpus()) s.push_back(e.spec);
        return s;
      }()
                           : std::vector<std::string>{common.graph};
  const Algorithm a = parse_algorithm(algorithm);
  Json rows = Json::array();
  bool audits_clean = true;
  for (const auto& source : sources) {
    Common c = common;
    c.graph = source;
    TrialConfig cfg = trial_config(g, c, a);
    cfg.delta = delta;
    cfg.rho = rho;
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const TrialStats stats = run_trials(cfg);
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    audits_clean = audits_clean && stats.audit_failures == 0;
    rows.push_back({{"graph", source},
                    {"n", cfg.graph->order()},
                    {"m", cfg.graph->size()},
                    {"trials", stats.trials},
                    {"seconds", sec},
                    {"seconds_per_trial", sec / static_cast<double>(stats.trials)},
                    {"sssp_total", stats.oracle_total},
                    {"sssp_merged_max", stats.max_merged},
                    {"audit_failures", stats.audit_failures}});
  }
  Json config{{"algorithm", algorithm}, {"delta", delta}, {"rho", rho}, {"c", g.c}, {"trials", common.trials},
              {"oracle", to_json(oracle_of(g))}};
  Json j = report_header("bench", resolve_seed(g), config);
  j["runs"] = std::move(rows);
  emit(g, dump_json(j));
  return audits_clean ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Low-diameter decompositions and tree embeddings"};
  app.set_version_flag("--version", std::string("lowdiam ") + kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Base seed (falls back to LOWDIAM_SEED)")->each([&](const std::string&) { g.seed_given = true; });
  app.add_option("--oracle", g.oracle, "SSSP oracle")->check(CLI::IsMember({"exact", "perturbed"}));
  app.add_option("--oracle-eps", g.oracle_eps, "Error of the perturbed oracle")->check(CLI::Range(1e-12, 1.0));
  app.add_option("--c", g.c, "Confidence constant")->check(CLI::Range(1.0, 1e6));
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "Output path, written atomically (default stdout)");
  app.add_option("--threads", g.threads, "Trial pool width (default: available parallelism)");

  Common common;
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", common.graph, "Graph file or generator spec such as grid(8,8,1)")->required();
    sub->add_option("--trials", common.trials, "Number of trials")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));
  };

  std::vector<std::string> gen_words;
  auto* gen = app.add_subcommand("gen", "Generate a graph: gen path 8 1, or gen 'gnp(64,0.1,10,7)'");
  gen->add_option("spec", gen_words, "Family followed by its arguments")->required();

  double rho = 1.0;
  double alpha = 0.0;
  std::vector<Vertex> b{0};
  auto* blur_cmd = app.add_subcommand("blur", "Blurry ball growing");
  add_graph(blur_cmd);
  blur_cmd->add_option("--rho", rho, "Radius parameter")->check(CLI::PositiveNumber);
  blur_cmd->add_option("--alpha", alpha, "Shrink factor in (0, 1/2]; default 1/(2 log2 n)")->check(CLI::Range(0.0, 0.5));
  blur_cmd->add_option("--b", b, "Seed vertex ids")->delimiter(',');

  double delta = 1.0;
  int cap = 0;
  auto* dec = app.add_subcommand("decompose", "Tree-supported low-diameter decomposition");
  add_graph(dec);
  dec->add_option("--delta", delta, "Diameter budget")->check(CLI::PositiveNumber);
  dec->add_option("--iteration-cap", cap, "Iteration cap (default 64 c log2 n)")->check(CLI::NonNegativeNumber);

  double p = 0.5;
  auto* htsd_cmd = app.add_subcommand("htsd", "Hierarchical tree-supported decomposition");
  add_graph(htsd_cmd);
  htsd_cmd->add_option("--p", p, "Exponent for p-stretch")->check(CLI::Range(1e-12, 1.0));

  std::string kind = "projected";
  auto* embed = app.add_subcommand("embed", "Projected tree or HST embedding");
  add_graph(embed);
  embed->add_option("--kind", kind, "Tree kind")->check(CLI::IsMember({"projected", "hst"}));
  embed->add_option("--p", p, "Exponent for p-stretch")->check(CLI::Range(1e-12, 1.0));

  std::string suite = "all";
  std::uint64_t verify_trials = 0;
  std::string csv_dir;
  auto* verify = app.add_subcommand("verify", "Acceptance suites with a JSON verdict");
  verify->add_option("--suite", suite, "Suite")->check(CLI::IsMember(verify_suites()));
  verify->add_option("--trials", verify_trials, "Trials per experiment (default: each criterion's own)");
  verify->add_option("--csv-dir", csv_dir, "Directory for per-edge CSVs");

  std::string bench_algorithm = "htsd";
  double bench_delta = 512.0;
  double bench_rho = 10.0;
  auto* bench = app.add_subcommand("bench", "Time an algorithm on a graph or the standing corpus");
  bench->add_option("graph", common.graph, "Graph file or generator spec (default: standing corpus)");
  bench->add_option("--trials", common.trials, "Number of trials")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));
  bench->add_option("--algorithm", bench_algorithm, "Algorithm")->check(CLI::IsMember({"blur", "decompose", "htsd", "projected", "hst"}));
  bench->add_option("--delta", bench_delta, "Diameter budget for decompose")->check(CLI::PositiveNumber);
  bench->add_option("--rho", bench_rho, "Radius for blur")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, std::cout, std::cerr);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (g.format == "csv" && (verify->parsed() || bench->parsed() || gen->parsed())) {
      throw UsageError("--format csv applies to blur, decompose, htsd and embed");
    }
    if (gen->parsed()) return cmd_gen(g, gen_words);
    if (blur_cmd->parsed()) return cmd_blur(g, common, rho, alpha, b);
    if (dec->parsed()) return cmd_decompose(g, common, delta, cap);
    if (htsd_cmd->parsed()) return cmd_htsd(g, common, p);
    if (embed->parsed()) return cmd_embed(g, common, kind, p);
    if (verify->parsed()) return cmd_verify(g, suite, verify_trials, csv_dir);
    if (bench->parsed()) return cmd_bench(g, common, bench_algorithm, bench_delta, bench_rho);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
