#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hirz/jobs.hpp"

namespace {

using hirz::JobSpec;

void add_format(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "human"}))
      ->capture_default_str();
}

template <typename T>
void add_opt(CLI::App* sub, const std::string& flag, std::optional<T>& target, const std::string& help) {
  sub->add_option_function<T>(flag, [&target](const T& v) { target = v; }, help);
}

void add_list(CLI::App* sub, const std::string& flag, std::optional<std::vector<std::int64_t>>& target,
              const std::string& help) {
  sub->add_option_function<std::vector<std::int64_t>>(
         flag, [&target](const std::vector<std::int64_t>& v) { target = v; }, help)
      ->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seshadri constants and negative curves on blown-up Hirzebruch and ruled surfaces"};
  app.require_subcommand(0, 1);

  std::string batch;
  app.add_option("--batch", batch, "Run NDJSON jobs from FILE ('-' for standard input)");

  JobSpec spec;
  std::string format = "json";
  bool not_very_general = false;
  bool not_ample = false;

  auto* ses = app.add_subcommand("seshadri", "Seshadri constant at a very general point");
  add_opt(ses, "--e", spec.e, "Invariant e");
  add_opt(ses, "--r", spec.r, "Number of blown-up points (defaults to the length of --mu)");
  add_opt(ses, "--genus", spec.genus, "Base curve genus; selects the ruled-surface formula");
  add_opt(ses, "--alpha", spec.alpha, "Coefficient of C_e");
  add_opt(ses, "--beta", spec.beta, "Coefficient of f_e");
  add_list(ses, "--mu", spec.mu, "Multiplicities mu_1,...,mu_r");
  add_opt(ses, "--case", spec.ruled_case, "Ruled position case 1..6");
  add_opt(ses, "--point-index", spec.point_index, "One-based point index for cases 2, 3, 5, 6");
  ses->add_flag("--not-very-general", not_very_general, "Points are not declared very general");
  ses->add_flag("--not-ample", not_ample, "L is not declared ample");
  add_format(ses, format);

  auto* en = app.add_subcommand("enumerate", "List the classified (-1)- or (-2)-classes");
  add_opt(en, "--e", spec.e, "Invariant e");
  add_opt(en, "--r", spec.r, "Number of blown-up points");
  add_opt(en, "--genus", spec.genus, "Base curve genus; lists negative curves on a ruled surface");
  add_opt(en, "--target", spec.target, "Self-intersection -1 or -2");
  add_format(en, format);

  auto* hz = app.add_subcommand("hzero", "h^0(F_e, aC_e + bf_e)");
  add_opt(hz, "--e", spec.e, "Invariant e");
  add_opt(hz, "--a", spec.a, "Coefficient of C_e");
  add_opt(hz, "--b", spec.b, "Coefficient of f_e");
  add_format(hz, format);

  auto* bd = app.add_subcommand("bound", "Weighted bounded negativity bound for a class");
  add_opt(bd, "--e", spec.e, "Invariant e");
  add_opt(bd, "--r", spec.r, "Number of blown-up points (defaults to the length of --m)");
  add_opt(bd, "--genus", spec.genus, "Base curve genus; selects the ruled-surface bound");
  add_opt(bd, "--a", spec.a, "Coefficient of C_e");
  add_opt(bd, "--b", spec.b, "Coefficient of f_e");
  add_list(bd, "--m", spec.m, "Multiplicities m_1,...,m_r");
  add_format(bd, format);

  auto* ver = app.add_subcommand("verify", "Run the oracle and invariant checks");
  add_opt(ver, "--criterion", spec.criterion, "Run a single check 1..9");
  add_opt(ver, "--seed", spec.seed, "Random seed");
  ver->add_flag("--quick", spec.quick, "Reduced ranges");
  add_format(ver, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hirz::exit_code::usage;
  }

  if (!batch.empty()) {
    if (!app.get_subcommands().empty()) {
      std::cerr << "error (usage): --batch cannot be combined with a subcommand\n";
      return hirz::exit_code::usage;
    }
    if (batch == "-") return hirz::run_batch(std::cin, std::cout, std::cerr);
    std::ifstream in(batch);
    if (!in) {
      std::cerr << "error (usage): cannot open batch file '" << batch << "'\n";
      return hirz::exit_code::usage;
    }
    return hirz::run_batch(in, std::cout, std::cerr);
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return hirz::exit_code::usage;
  }

  spec.command = hirz::parse_command(app.get_subcommands().front()->get_name());
  spec.format = hirz::parse_format(format);
  spec.very_general = !not_very_general;
  spec.ample_asserted = !not_ample;
  const auto result = hirz::run_job(spec);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
