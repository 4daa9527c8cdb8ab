#ifndef EPIKIT_REPORT_HPP_
#define EPIKIT_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace epikit::cli {

// Exit statuses shared by all subcommands.
inline constexpr int kExitPass = 0;   // all checks pass
inline constexpr int kExitFail = 1;   // a checked property fails (witnessed)
inline constexpr int kExitUsage = 2;  // input or usage error

// Outcome of one subcommand: a machine-readable report (keys sorted, stable
// across runs; the timing_ms field is the only nondeterministic part) plus a
// human summary for standard output.
struct CommandResult {
  int exit_code = kExitPass;
  nlohmann::json report;
  std::string summary;
};

struct ScanOptions {
  std::size_t order = 2;
  std::optional<std::string> identities_path;
  unsigned jobs = 1;
  bool dedupe = false;
  std::uint64_t seed = 0;  // echoed; scans are deterministic
};

// Per-identity verdicts of an epigroup against an identity file.
CommandResult cmd_check(const std::string& cayley_path,
                        const std::string& identities_path);

// Structural report: pseudoinverse and omega tables, idempotents, group
// elements, zero, nil/commutative/semilattice flags, nilpotency index.
CommandResult cmd_inspect(const std::string& cayley_path);

// Replays a derivation chain file.
CommandResult cmd_verify(const std::string& chain_path);

// Per-element special-element flags and the three lattice checks. The
// argument is a file path or a named fixture.
CommandResult cmd_lattice(const std::string& path_or_fixture);

// Exhaustive scan of all tables of the given order against the structural
// invariants; any invariant failure dumps the offending table.
CommandResult cmd_scan(const ScanOptions& options);

// FNV-1a 64-bit digest used for input echoing.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace epikit::cli

#endif  // EPIKIT_REPORT_HPP_
