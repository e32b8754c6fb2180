// Runs acceptance criteria 1-15 at their full trial counts and prints one
// verdict line per criterion. An optional argument names a JSON verdict file.

#include <chrono>
#include <cstdio>

#include "lowdiam/verify.hpp"

using namespace lowdiam;

int main(int argc, char** argv) {
  VerifyOptions opt;
  opt.seed = 20240601;
  opt.progress = [](const CriterionResult& r) {
    std::printf("criterion %2d %s: %s (%.1fs) %s\n", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
  };
  const auto t0 = std::chrono::steady_clock::now();
  const VerifyReport report = run_verify("all", opt);
  const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  int passed = 0;
  for (const auto& c : report.criteria) passed += c.pass;
  std::printf("acceptance: %d/%zu criteria passed in %.1fs\n", passed, report.criteria.size(), sec);
  if (argc > 1) write_file_atomic(argv[1], dump_json(to_json(report, opt)));
  return report.pass() ? 0 : 1;
}
