// Command-line driver: enumeration, the correspondence table, the invariant
// suite, and poset export. All output is deterministic in (seed, prime, n).
//
// Exit codes: 0 success, 2 verification failure, 3 bijectivity failure,
// 4 genericity instability.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "exotic/io.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification = 2;
constexpr int exit_bijectivity = 3;
constexpr int exit_genericity = 4;

void add_common_flags(CLI::App* cmd, exotic::RunConfig& cfg, bool with_samples = true) {
  cmd->add_option("--n", cfg.n, "problem size (1..3, or 4 with --slow)")->required();
  cmd->add_option("--prime", cfg.prime, "field modulus, an odd prime below 2^62");
  cmd->add_option("--seed", cfg.seed, "64-bit seed for all randomness");
  if (with_samples) cmd->add_option("--samples", cfg.samples, "random draws per orbit");
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "dot"}));
  cmd->add_flag("--slow", cfg.slow, "enable n=4 and heavier sweeps");
}

int check_size(const exotic::RunConfig& cfg) {
  if (cfg.n < 1 || cfg.n > cfg.max_n()) {
    std::cerr << "error: n must be in 1.." << cfg.max_n()
              << (cfg.slow ? "" : " (use --slow for n=4)") << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exotic Robinson-Schensted correspondence by exact linear algebra"};
  app.require_subcommand(1);

  exotic::RunConfig enum_cfg, rsk_cfg, verify_cfg, hasse_cfg;
  verify_cfg.samples = 0;  // pick by n unless overridden
  hasse_cfg.format = "dot";

  auto* enum_cmd = app.add_subcommand("enumerate", "list orbit parameters with dimensions");
  add_common_flags(enum_cmd, enum_cfg, false);

  auto* rsk_cmd = app.add_subcommand("rsk", "compute the correspondence table");
  add_common_flags(rsk_cmd, rsk_cfg);
  std::string param_text;
  rsk_cmd->add_option("--param", param_text, "single orbit parameter, e.g. \"[2][1]4[3]\"");

  auto* verify_cmd = app.add_subcommand("verify", "run the full invariant suite");
  add_common_flags(verify_cmd, verify_cfg);
  bool tamper = false;
  verify_cmd->add_flag("--tamper", tamper, "corrupt one matrix entry (negative test)");

  auto* hasse_cmd = app.add_subcommand("hasse", "export the candidate closure order as DOT");
  add_common_flags(hasse_cmd, hasse_cfg, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (enum_cmd->parsed()) {
      if (int rc = check_size(enum_cfg)) return rc;
      exotic::PrimeField field(enum_cfg.prime);
      auto orbits = exotic::enumerate_with_dims(enum_cfg.n, field, enum_cfg.seed);
      std::cout << (enum_cfg.format == "csv" ? exotic::enumerate_csv(orbits, enum_cfg)
                                             : exotic::enumerate_json(orbits, enum_cfg));
      return orbits.size() == exotic::orbit_count_formula(enum_cfg.n) ? exit_ok
                                                                      : exit_verification;
    }

    if (rsk_cmd->parsed()) {
      if (int rc = check_size(rsk_cfg)) return rc;
      exotic::PrimeField field(rsk_cfg.prime);
      exotic::RskConfig cfg{rsk_cfg.seed, rsk_cfg.samples};
      exotic::RskTable table;
      bool with_verdict = param_text.empty();
      if (param_text.empty()) {
        table = exotic::rsk_table(rsk_cfg.n, field, cfg);
      } else {
        exotic::OrbitParam p = exotic::parse_param(param_text);
        if (p.n2() != 2 * rsk_cfg.n) {
          std::cerr << "error: parameter size does not match --n\n";
          return 1;
        }
        table.rows.push_back(exotic::exotic_rsk(p, field, cfg));
        table.bijective = true;
      }
      std::cout << (rsk_cfg.format == "csv" ? exotic::rsk_csv(table, with_verdict)
                                            : exotic::rsk_json(table, rsk_cfg, with_verdict));
      return table.bijective ? exit_ok : exit_bijectivity;
    }

    if (verify_cmd->parsed()) {
      if (int rc = check_size(verify_cfg)) return rc;
      if (verify_cfg.samples <= 0) verify_cfg.samples = verify_cfg.n <= 2 ? 100 : 10;
      exotic::PrimeField field(verify_cfg.prime);
      exotic::VerifySuiteOptions opts;
      opts.seed = verify_cfg.seed;
      opts.samples_per_orbit = verify_cfg.samples;
      opts.tamper = tamper;
      auto checks = exotic::run_verify_suite(verify_cfg.n, field, opts);
      if (verify_cfg.format == "json")
        std::cout << exotic::verify_json(checks, verify_cfg);
      else
        std::cout << exotic::verify_text(checks);
      for (const auto& c : checks)
        if (!c.passed) return exit_verification;
      return exit_ok;
    }

    if (hasse_cmd->parsed()) {
      if (int rc = check_size(hasse_cfg)) return rc;
      exotic::HasseReport report = exotic::hasse_report(hasse_cfg.n);
      std::cout << exotic::hasse_dot(report, hasse_cfg);
      return report.fixture_violations.empty() ? exit_ok : exit_verification;
    }
  } catch (const exotic::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case exotic::errc::not_bijective:
        return exit_bijectivity;
      case exotic::errc::genericity_unstable:
        return exit_genericity;
      default:
        return exit_verification;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_ok;
}
