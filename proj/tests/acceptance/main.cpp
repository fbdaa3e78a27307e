#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "prudent/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace prudent::acceptance;
  CLI::App app{"Acceptance suite: one line per criterion"};
  SuiteOptions opt;
  std::string json_path;
  double tamper = -1.0;
  app.add_flag("--quick", opt.quick, "Reduced sample sizes with doubled tolerances");
  app.add_option("--seed", opt.seed, "Master seed");
  app.add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
  app.add_option("--only", opt.only, "Criteria to run")->check(CLI::Range(1, kCriterionCount));
  app.add_option("--json", json_path, "Write all reports as JSON");
  app.add_option("--tamper-stay", tamper, "Replace the increment law by one with this stay probability")
      ->check(CLI::Range(0.0, 0.999));
  CLI11_PARSE(app, argc, argv);
  if (tamper >= 0.0) opt.tampered_stay_probability = tamper;

  opt.on_result = [](const CriterionResult& r) { std::cout << summary_line(r) << std::endl; };
  const auto results = run_suite(opt);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    out << to_json(results).dump(2) << '\n';
  }
  const bool pass = suite_passes(results);
  std::cout << (pass ? "ALL PASS" : "SUITE FAILED") << std::endl;
  return pass ? 0 : 1;
}
