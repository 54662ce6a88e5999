// Command-line front end.
//
//   c0square analyze --input spec.json [--json|--text] [--no-oracle]
//                    [--seed N] [--samples N] [--tol X]
//   c0square suite   [--min-degree A] [--max-degree B] [--count C] [--seed S]
//
// Exit codes: 0 success/agreement, 2 parse error, 3 validation error,
// 4 analyzer/oracle disagreement, 5 conditioning error, 1 anything else.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "c0square/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitDisagreement = 4;
constexpr int kExitConditioning = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw c0square::parse_error("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_analyze(const std::string& input_path, bool text, bool no_oracle, bool seed_set,
                std::uint64_t seed, bool samples_set, int samples, bool tol_set, double tol) {
  c0square::InputSpec spec = c0square::parse_input(read_file(input_path));
  if (no_oracle) spec.oracle = false;
  if (seed_set) spec.seed = seed;
  if (samples_set) {
    if (samples < 16) throw c0square::validation_error("samples must be >= 16");
    spec.samples = samples;
  }
  if (tol_set) {
    if (tol <= 0.0) throw c0square::validation_error("tolerance must be positive");
    spec.tolerance = tol;
  }

  const nlohmann::json report = c0square::run_report(spec);
  if (text)
    std::cout << c0square::render_text(report);
  else
    std::cout << report.dump(2) << "\n";
  return c0square::report_agreement(report) ? kExitOk : kExitDisagreement;
}

int run_suite(int min_degree, int max_degree, int count, std::uint64_t seed) {
  const nlohmann::json summary = c0square::random_suite(min_degree, max_degree, count, seed);
  std::cout << summary.dump(2) << "\n";
  return summary["all_agree"].get<bool>() ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reducibility / multiplicity analysis for squares of model operators"};
  app.require_subcommand(1);

  std::string input_path;
  bool text = false, json_flag = false, no_oracle = false;
  std::uint64_t seed = 0;
  int samples = 2048;
  double tol = 1e-8;

  CLI::App* analyze = app.add_subcommand("analyze", "analyze one Blaschke product");
  analyze->add_option("--input", input_path, "input JSON file")->required();
  CLI::Option* json_opt = analyze->add_flag("--json", json_flag, "JSON report (default)");
  analyze->add_flag("--text", text, "human-readable report")->excludes(json_opt);
  analyze->add_flag("--no-oracle", no_oracle, "skip the matrix oracle cross-check");
  CLI::Option* seed_opt = analyze->add_option("--seed", seed, "override the input seed");
  CLI::Option* samples_opt =
      analyze->add_option("--samples", samples, "boundary quadrature samples");
  CLI::Option* tol_opt = analyze->add_option("--tol", tol, "verification tolerance");

  int min_degree = 2, max_degree = 6, count = 50;
  std::uint64_t suite_seed = 0;
  CLI::App* suite = app.add_subcommand("suite", "randomized analyzer/oracle agreement run");
  suite->add_option("--min-degree", min_degree, "smallest degree")->capture_default_str();
  suite->add_option("--max-degree", max_degree, "largest degree")->capture_default_str();
  suite->add_option("--count", count, "number of instances")->capture_default_str();
  suite->add_option("--seed", suite_seed, "generator seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze))
      return run_analyze(input_path, text, no_oracle, static_cast<bool>(*seed_opt), seed,
                         static_cast<bool>(*samples_opt), samples, static_cast<bool>(*tol_opt),
                         tol);
    return run_suite(min_degree, max_degree, count, suite_seed);
  } catch (const c0square::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const c0square::validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const c0square::precondition_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const c0square::conditioning_error& e) {
    std::cerr << "conditioning error: " << e.what() << "\n";
    return kExitConditioning;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
