#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>

#include "kronmod/campaign.hpp"
#include "kronmod/commands.hpp"

namespace {

struct Globals {
  std::string field;
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  std::string suite = "all";
  unsigned workers = 0;
  bool compact = false;
  bool inverse = false;
  std::string input;
};

kronmod::json read_input(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return kronmod::json::parse(text);
}

void emit(const kronmod::json& j, bool compact) { std::cout << (compact ? j.dump() : j.dump(2)) << '\n'; }

int fail_invalid(const std::string& message, bool compact) {
  emit({{"error", "invalid_input"}, {"message", message}}, compact);
  return kronmod::kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with 2x2 Kronecker modules over four linear forms"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--field", g.field, "rational or fp:<P> (P an odd prime)");
  app.add_option("--seed", g.seed, "64-bit seed for searches and campaigns");
  app.add_option("--trials", g.trials, "Random trials per suite (at least 1)");
  app.add_flag("--json", g.compact, "Compact single-line JSON output");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"inv", "Semi-invariants det, e, epsilon, rho and res(det)"},
      {"stab", "Semistability and stability, with an oracle witness"},
      {"nf", "Normal form with its certificate"},
      {"eta", "The point eta(phi) on the hypersurface"},
      {"fiber", "Points over a quadric on the hypersurface"},
      {"beta", "The blow-down map beta(psi)"},
      {"alpha", "alpha(psi) and the reduction of psi"},
      {"classify", "Region of psi: W0, W1, W2 or Invalid"},
      {"snake", "Check the snake identities for psi"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", g.input, "Input JSON file (default: standard input)");
    if (name == "eta") sub->add_flag("--inverse", g.inverse, "Read a point {q, p} and return a module over it");
  }
  CLI::App* check = app.add_subcommand("check", "Run seeded property campaigns");
  check->add_option("--suite", g.suite, "all or one suite name");
  check->add_option("--workers", g.workers, "Worker threads (0: hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kronmod::kExitInvalid;
  }

  kronmod::CommandOptions options;
  options.seed = g.seed;
  options.trials = g.trials;
  options.suite = g.suite;
  options.workers = g.workers;
  options.inverse = g.inverse;
  try {
    if (!g.field.empty()) options.field = kronmod::Field::parse(g.field);
  } catch (const std::exception& e) {
    return fail_invalid(e.what(), g.compact);
  }

  std::string name = app.get_subcommands().front()->get_name();
  kronmod::json input = kronmod::json::object();
  if (name != "check") {
    try {
      input = read_input(g.input);
    } catch (const std::exception& e) {
      return fail_invalid(e.what(), g.compact);
    }
  }

  kronmod::CommandResult result = kronmod::run_command(name, input, options);
  for (const auto& line : result.lines) std::cout << line.dump() << '\n';
  emit(result.output, g.compact);
  return result.exit_code;
}
