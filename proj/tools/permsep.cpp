// Command-line front end: enumerate and count criterion classes, evaluate
// states, and run the randomized verification suites.
//
// Exit codes: 0 success, 1 a verification assertion failed, 2 usage or input
// error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "permsep/report.hpp"
#include "permsep/state_io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kAssertionFailed = 1;
constexpr int kUsageError = 2;

// Randomized suites above this size need --allow-large.
constexpr int kDeskMaxParties = 6;

void emit(const std::string &format, const std::string &table, const nlohmann::json &doc) {
  if (format == "json") std::cout << doc.dump(2) << '\n';
  else std::cout << table;
}

}  // namespace

int main(int argc, char **argv) {
  using namespace permsep;

  CLI::App app{"Permutation separability criteria: enumeration and evaluation"};
  app.require_subcommand(1);

  std::string format = "table";
  const auto format_check = CLI::IsMember({"table", "json"});

  // enumerate
  int enum_parties = 0;
  auto *enumerate = app.add_subcommand("enumerate", "List the independent criterion classes");
  enumerate->add_option("--parties", enum_parties, "Number of parties r")->required();
  enumerate->add_option("--format", format, "table or json")->check(format_check);

  // count
  int count_parties = 0;
  bool oracle = false;
  auto *count = app.add_subcommand("count", "Count classes by formula and enumeration");
  count->add_option("--parties", count_parties, "Number of parties r")->required();
  count->add_flag("--oracle", oracle, "Also brute-force the full symmetric group (r <= 4)");
  count->add_option("--format", format, "table or json")->check(format_check);

  // evaluate
  std::string state_file, builtin;
  std::optional<int> eval_dim, eval_parties;
  double eval_tol = 1e-10;
  std::vector<std::string> selected;
  auto *evaluate = app.add_subcommand("evaluate", "Evaluate every criterion class on a state");
  auto *state_opt = evaluate->add_option("--state", state_file, "State JSON file");
  auto *builtin_opt = evaluate->add_option("--builtin", builtin, "chessboard, bell or mixed");
  state_opt->excludes(builtin_opt);
  evaluate->add_option("--dim", eval_dim, "Local dimension d");
  evaluate->add_option("--parties", eval_parties, "Number of parties r");
  evaluate->add_option("--tol", eval_tol, "Violation tolerance");
  evaluate->add_option("--class", selected, "Restrict to these role strings (e.g. HT, FL)");
  evaluate->add_option("--format", format, "table or json")->check(format_check);

  // verify
  std::string suite;
  VerificationConfig config;
  bool allow_large = false;
  auto *verify = app.add_subcommand("verify", "Randomized verification suites");
  verify->add_option("suite", suite, "rule5 or distinctness")->required()->check(CLI::IsMember({"rule5", "distinctness"}));
  verify->add_option("--parties", config.parties, "Number of parties r")->required();
  verify->add_option("--dim", config.dim, "Local dimension d")->required();
  verify->add_option("--samples", config.samples, "Random states")->required();
  verify->add_option("--seed", config.seed, "Random seed")->required();
  verify->add_option("--rank", config.rank, "Rank of random states (0 = suite default)");
  verify->add_option("--threshold", config.equality_threshold, "Equality threshold for rule5");
  verify->add_option("--gap", config.distinctness_threshold, "Distinctness threshold");
  verify->add_flag("--allow-large", allow_large, "Permit r > 6");
  verify->add_option("--format", format, "table or json")->check(format_check);

  // beta-sweep
  int steps = 20;
  double sweep_tol = 1e-9;
  auto *sweep = app.add_subcommand("beta-sweep", "Noise thresholds on two chess-board copies");
  sweep->add_option("--steps", steps, "Grid intervals before bisection (>= 10)");
  sweep->add_option("--tol", sweep_tol, "Violation tolerance");
  sweep->add_option("--format", format, "table or json")->check(format_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*enumerate) {
      const auto classes = enumerate_classes(enum_parties);
      emit(format, classes_table(classes), classes_json(enum_parties, classes));
      return kOk;
    }
    if (*count) {
      const auto c = census(count_parties, oracle);
      emit(format, census_table(c), census_json(c));
      return c.consistent() ? kOk : kAssertionFailed;
    }
    if (*evaluate) {
      std::optional<DensityMatrix> rho;
      std::string source;
      if (!state_file.empty()) {
        rho = load_state_file(state_file);
        source = state_file;
        if ((eval_dim && *eval_dim != rho->dim()) || (eval_parties && *eval_parties != rho->parties())) {
          std::cerr << "error: state file declares d=" << rho->dim() << ", r=" << rho->parties()
                    << " which does not match --dim/--parties\n";
          return kUsageError;
        }
      } else if (!builtin.empty()) {
        rho = builtin_state(builtin, eval_dim, eval_parties);
        source = "builtin:" + builtin;
      } else {
        std::cerr << "error: evaluate needs --state FILE or --builtin NAME\n";
        return kUsageError;
      }
      std::vector<CriterionClass> selection;
      for (const auto &roles : selected) {
        const auto a = RoleAssignment::parse(roles);
        if (a.parties() != rho->parties()) {
          std::cerr << "error: class " << roles << " has " << a.parties() << " parties, state has "
                    << rho->parties() << '\n';
          return kUsageError;
        }
        selection.push_back(canonicalize(a));
      }
      const auto report = evaluate_state(*rho, source, eval_tol, selection);
      emit(format, evaluation_table(report), evaluation_json(report));
      return kOk;
    }
    if (*verify) {
      if (config.parties > kDeskMaxParties && !allow_large) {
        std::cerr << "error: r = " << config.parties << " exceeds " << kDeskMaxParties
                  << " for randomized suites; pass --allow-large to run it\n";
        return kUsageError;
      }
      if (suite == "rule5") {
        const auto report = verify_rule5(config);
        emit(format, rule5_table(report), rule5_json(report));
        return report.passed ? kOk : kAssertionFailed;
      }
      const auto report = verify_distinctness(config);
      emit(format, distinctness_table(report), distinctness_json(report));
      return kOk;
    }
    if (*sweep) {
      const auto report = beta_sweep(steps, sweep_tol);
      emit(format, beta_sweep_table(report), beta_sweep_json(report));
      return kOk;
    }
  } catch (const InvariantError &e) {
    std::cerr << "error: state violates invariant '" << e.invariant() << "': " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::overflow_error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
