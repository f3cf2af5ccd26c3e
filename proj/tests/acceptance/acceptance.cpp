// Prints one PASS/FAIL line per acceptance criterion. Exit status is 0 only
// if every selected criterion passes.

#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "hirz/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int criterion = 0;
  bool verbose = false;
  hirz::VerifyOptions opts;
  app.add_option("--criterion", criterion, "Run one criterion (1..9); default all")->check(CLI::Range(1, 9));
  app.add_option("--seed", opts.seed, "Random seed")->capture_default_str();
  app.add_flag("--verbose", verbose, "Print details for passing criteria too");
  CLI11_PARSE(app, argc, argv);

  std::vector<int> ids;
  if (criterion) ids.push_back(criterion);
  else
    for (int i = 1; i <= hirz::kCheckCount; ++i) ids.push_back(i);

  bool all = true;
  for (int id : ids) {
    const auto r = hirz::run_check(id, opts);
    all = all && r.passed;
    std::cout << "criterion " << id << ": " << (r.passed ? "PASS" : "FAIL") << "  [" << std::fixed
              << std::setprecision(2) << r.seconds << "s] " << r.name << ": " << r.summary << "\n";
    if (!r.passed || verbose)
      for (const auto& d : r.details) std::cout << "    " << d << "\n";
  }
  return all ? 0 : 1;
}
