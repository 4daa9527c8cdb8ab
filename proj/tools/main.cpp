// Command-line front end: check, inspect, verify, lattice, scan.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "epikit/report.hpp"

namespace {

int emit(const epikit::cli::CommandResult& result,
         const std::optional<std::string>& out_path) {
  std::cout << result.summary;
  if (out_path) {
    std::ofstream out(*out_path);
    if (!out) {
      std::cerr << "error: cannot write report to " << *out_path << "\n";
      return epikit::cli::kExitUsage;
    }
    out << result.report.dump(2) << "\n";
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite epigroups, identity checking, derivation replay and "
               "lattice element analysis"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::string> out_path;
  std::uint64_t seed = 0;
  app.add_option("--out", out_path, "Write the machine-readable report here");
  app.add_option("--seed", seed, "Seed echoed into reports (commands are deterministic)");

  std::string cayley_path, identities_path, chain_path, lattice_arg;

  auto* check = app.add_subcommand("check", "Check identities in an epigroup");
  check->add_option("epigroup", cayley_path, "Cayley table file")->required();
  check->add_option("identities", identities_path, "Identity file")->required();

  auto* inspect = app.add_subcommand("inspect", "Derived structure of an epigroup");
  inspect->add_option("epigroup", cayley_path, "Cayley table file")->required();

  auto* verify = app.add_subcommand("verify", "Replay a derivation chain");
  verify->add_option("chain", chain_path, "Chain file")->required();

  auto* lattice = app.add_subcommand("lattice", "Special elements of a lattice");
  lattice->add_option("lattice", lattice_arg, "Lattice file or fixture name")
      ->required();

  epikit::cli::ScanOptions scan_options;
  std::string scan_identities;
  auto* scan = app.add_subcommand("scan", "Exhaustive small-order model scan");
  scan->add_option("order", scan_options.order, "Order to enumerate (<= 3)")
      ->required();
  scan->add_option("identities", scan_identities,
                   "Optional identity file used as a filter");
  scan->add_option("--jobs", scan_options.jobs, "Worker threads");
  scan->add_flag("--dedupe", scan_options.dedupe,
                 "Count isomorphism classes via canonical tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : epikit::cli::kExitUsage;
  }

  if (check->parsed())
    return emit(epikit::cli::cmd_check(cayley_path, identities_path), out_path);
  if (inspect->parsed())
    return emit(epikit::cli::cmd_inspect(cayley_path), out_path);
  if (verify->parsed())
    return emit(epikit::cli::cmd_verify(chain_path), out_path);
  if (lattice->parsed())
    return emit(epikit::cli::cmd_lattice(lattice_arg), out_path);
  if (scan->parsed()) {
    scan_options.seed = seed;
    if (!scan_identities.empty()) scan_options.identities_path = scan_identities;
    return emit(epikit::cli::cmd_scan(scan_options), out_path);
  }
  return epikit::cli::kExitUsage;
}
