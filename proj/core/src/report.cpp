#include "epikit/report.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "epikit/deduction.hpp"
#include "epikit/enumerate.hpp"
#include "epikit/epigroup.hpp"
#include "epikit/error.hpp"
#include "epikit/identity.hpp"
#include "epikit/lattice.hpp"
#include "epikit/parse.hpp"

namespace epikit::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json input_record(const std::string& path) {
  std::string bytes = read_file(path);
  return json{{"path", path},
              {"fnv1a64", fnv1a64_hex(bytes)},
              {"bytes", bytes.size()}};
}

json make_report(const std::string& command) {
  return json{{"tool", "epikit"},
              {"command", command},
              {"inputs", json::array()},
              {"settings", json::object()},
              {"results", json::object()},
              {"status", "pass"}};
}

json assignment_json(const Assignment& asg) {
  json out = json::object();
  for (const auto& [var, value] : asg) out[var.name()] = value;
  return out;
}

std::string table_string(const FiniteEpigroup& S) {
  std::string out;
  for (std::size_t a = 0; a < S.order(); ++a) {
    if (a) out += ';';
    for (std::size_t b = 0; b < S.order(); ++b) {
      if (b) out += ' ';
      out += std::to_string(S.product(a, b));
    }
  }
  return out;
}

int finish(CommandResult& result, json& report, Clock::time_point started) {
  report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                            Clock::now() - started)
                            .count();
  result.report = std::move(report);
  return result.exit_code;
}

CommandResult error_result(const std::string& command, const Error& e) {
  CommandResult result;
  result.exit_code = kExitUsage;
  json report = make_report(command);
  report["status"] = "error";
  report["error"] = {{"code", code_name(e.code())}, {"message", e.what()}};
  report["timing_ms"] = 0;
  result.report = std::move(report);
  result.summary = std::string("error: ") + e.what();
  return result;
}

}  // namespace

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << hash;
  return out.str();
}

CommandResult cmd_check(const std::string& cayley_path,
                        const std::string& identities_path) {
  auto started = Clock::now();
  CommandResult result;
  json report = make_report("check");
  try {
    report["inputs"].push_back(input_record(cayley_path));
    report["inputs"].push_back(input_record(identities_path));
    FiniteEpigroup S = load_cayley_file(cayley_path);
    IdentitySystem sys = load_identities_file(identities_path);
    if (sys.empty())
      throw Error(ErrorCode::parse_error,
                  identities_path + ": no identities to check");

    json verdicts = json::array();
    bool all_hold = true;
    std::ostringstream lines;
    for (std::size_t i = 0; i < sys.items.size(); ++i) {
      SatisfactionResult sat = satisfies(S, sys.items[i]);
      json v{{"index", i},
             {"identity", sys.items[i].to_string()},
             {"holds", sat.holds}};
      if (!sat.holds) {
        all_hold = false;
        v["witness"] = {{"assignment", assignment_json(sat.witness->assignment)},
                        {"lhs_value", sat.witness->lhs_value},
                        {"rhs_value", sat.witness->rhs_value}};
      } else {
        v["witness"] = nullptr;
      }
      verdicts.push_back(std::move(v));
      lines << "  " << (sat.holds ? "holds " : "FAILS ")
            << sys.items[i].to_string() << "\n";
    }
    json dups = json::array();
    for (auto [a, b] : duplicate_pairs(sys)) dups.push_back({a, b});

    report["results"] = {{"identities", verdicts},
                         {"all_hold", all_hold},
                         {"duplicate_pairs", dups}};
    report["status"] = all_hold ? "pass" : "fail";
    result.exit_code = all_hold ? kExitPass : kExitFail;
    result.summary = "check " + cayley_path + " against " + identities_path +
                     ": " + (all_hold ? "all identities hold" : "failures") +
                     "\n" + lines.str();
  } catch (const Error& e) {
    return error_result("check", e);
  }
  finish(result, report, started);
  return result;
}

CommandResult cmd_inspect(const std::string& cayley_path) {
  auto started = Clock::now();
  CommandResult result;
  json report = make_report("inspect");
  try {
    report["inputs"].push_back(input_record(cayley_path));
    FiniteEpigroup S = load_cayley_file(cayley_path);

    bool nil = is_nil(S);
    json results{{"order", S.order()},
                 {"name", S.name()},
                 {"pseudoinverse", S.pseudoinverses()},
                 {"omega", S.omega_powers()},
                 {"idempotents", S.idempotents()},
                 {"group_elements", S.group_elements()},
                 {"is_nil", nil},
                 {"is_commutative", is_commutative(S)},
                 {"is_semilattice", is_semilattice(S)}};
    results["zero"] = S.zero() ? json(*S.zero()) : json(nullptr);
    results["nilpotency_index"] = nil ? json(nilpotency_index(S)) : json(nullptr);
    report["results"] = std::move(results);

    std::ostringstream lines;
    lines << "inspect " << cayley_path << " (order " << S.order() << ")\n";
    lines << "  pseudoinverse:";
    for (std::size_t v : S.pseudoinverses()) lines << ' ' << v;
    lines << "\n  omega:";
    for (std::size_t v : S.omega_powers()) lines << ' ' << v;
    lines << "\n  group elements:";
    for (std::size_t v : S.group_elements()) lines << ' ' << v;
    if (nil) lines << "\n  nil with index " << nilpotency_index(S);
    lines << "\n";
    result.summary = lines.str();
  } catch (const Error& e) {
    return error_result("inspect", e);
  }
  finish(result, report, started);
  return result;
}

CommandResult cmd_verify(const std::string& chain_path) {
  auto started = Clock::now();
  CommandResult result;
  json report = make_report("verify");
  try {
    report["inputs"].push_back(input_record(chain_path));
    DerivationChain chain = load_chain_file(chain_path);
    ChainReport outcome = verify_chain(chain);

    json results{{"start", render(chain.start)},
                 {"end", render(chain.end)},
                 {"step_count", chain.steps.size()},
                 {"verified", outcome.verified}};
    results["failed_step"] =
        outcome.failed_step ? json(*outcome.failed_step) : json(nullptr);
    results["diagnostic"] = outcome.verified ? json(nullptr)
                                             : json(outcome.diagnostic);
    report["results"] = std::move(results);
    report["status"] = outcome.verified ? "pass" : "fail";
    result.exit_code = outcome.verified ? kExitPass : kExitFail;
    result.summary =
        "verify " + chain_path + ": " +
        (outcome.verified ? "chain verified (" +
                                std::to_string(chain.steps.size()) + " steps)"
                          : outcome.diagnostic) +
        "\n";
  } catch (const Error& e) {
    return error_result("verify", e);
  }
  finish(result, report, started);
  return result;
}

CommandResult cmd_lattice(const std::string& path_or_fixture) {
  auto started = Clock::now();
  CommandResult result;
  json report = make_report("lattice");
  try {
    FiniteLattice L = [&] {
      if (std::filesystem::exists(path_or_fixture)) {
        report["inputs"].push_back(input_record(path_or_fixture));
        return load_lattice_file(path_or_fixture);
      }
      report["settings"]["fixture"] = path_or_fixture;
      return lattice_fixture(path_or_fixture);
    }();

    json elements = json::array();
    for (std::size_t x = 0; x < L.size(); ++x) {
      auto mod = modular_witness(L, x);
      auto can = cancellable_witness(L, x);
      json e{{"index", x},
             {"atom", L.is_atom(x)},
             {"modular", !mod.has_value()},
             {"cancellable", !can.has_value()},
             {"neutral", is_neutral_element(L, x)}};
      e["modular_witness"] =
          mod ? json({mod->first, mod->second}) : json(nullptr);
      e["cancellable_witness"] =
          can ? json({can->first, can->second}) : json(nullptr);
      elements.push_back(std::move(e));
    }

    auto check_json = [](const LatticeCheck& c) {
      return json{{"holds", c.holds},
                  {"witness", c.holds ? json(nullptr) : json(c.witness)}};
    };
    LatticeCheck c1 = check_cancellable_join_atom(L);
    LatticeCheck c2 = check_cancellation_over_atom(L);
    LatticeCheck c3 = check_modular_witness_refinement(L);
    bool checks_hold = c1.holds && c2.holds && c3.holds;

    report["results"] = {{"size", L.size()},
                         {"name", L.name()},
                         {"bottom", L.bottom()},
                         {"top", L.top()},
                         {"elements", elements},
                         {"checks",
                          {{"cancellable_join_atom", check_json(c1)},
                           {"cancellation_over_atom", check_json(c2)},
                           {"modular_witness_refinement", check_json(c3)}}}};
    report["status"] = checks_hold ? "pass" : "fail";
    result.exit_code = checks_hold ? kExitPass : kExitFail;

    std::ostringstream lines;
    lines << "lattice " << path_or_fixture << " (size " << L.size() << ")\n";
    for (std::size_t x = 0; x < L.size(); ++x) {
      lines << "  " << x << ":";
      if (L.is_atom(x)) lines << " atom";
      lines << (is_modular_element(L, x) ? " modular" : " non-modular");
      lines << (is_cancellable_element(L, x) ? " cancellable"
                                             : " non-cancellable");
      if (is_neutral_element(L, x)) lines << " neutral";
      lines << "\n";
    }
    lines << "  structure checks: " << (checks_hold ? "pass" : "FAIL") << "\n";
    result.summary = lines.str();
  } catch (const Error& e) {
    return error_result("lattice", e);
  }
  finish(result, report, started);
  return result;
}

namespace {

struct InvariantTally {
  std::size_t models = 0;
  std::size_t failures = 0;
  std::optional<std::string> first_failure_table;

  void count(const FiniteEpigroup& S, bool ok) {
    ++models;
    if (!ok) {
      ++failures;
      if (!first_failure_table) first_failure_table = table_string(S);
    }
  }
};

bool omega_product_invariant(const FiniteEpigroup& S) {
  for (std::size_t x = 0; x < S.order(); ++x) {
    std::size_t p = S.pseudoinverse(x);
    if (S.product(x, p) != S.omega_power(x)) return false;
    if (S.product(p, x) != S.omega_power(x)) return false;
  }
  return true;
}

// the five-way equality chain at every element
bool epigroup_identities_invariant(const FiniteEpigroup& S) {
  for (std::size_t x = 0; x < S.order(); ++x) {
    std::size_t e = S.omega_power(x);
    std::size_t dd = S.pseudoinverse(S.pseudoinverse(x));
    if (S.product(e, x) != dd) return false;
    if (S.product(x, e) != dd) return false;
    if (S.product(e, dd) != dd) return false;
    if (S.product(dd, e) != dd) return false;
  }
  return true;
}

bool pinv_zero_iff_nil_invariant(const FiniteEpigroup& S,
                                 const IdentitySystem& pinv_zero) {
  return satisfies(S, pinv_zero).holds == is_nil(S);
}

bool group_criterion_invariant(const FiniteEpigroup& S) {
  std::vector<bool> searched = group_elements_by_subgroup_search(S);
  for (std::size_t x = 0; x < S.order(); ++x)
    if (S.is_group_element(x) != searched[x]) return false;
  return true;
}

bool square_power_shadow_invariant(const FiniteEpigroup& S) {
  Variable x{"x"};
  Word square = pow(Word::var(x), 2);
  for (std::size_t p = 1; p <= 4; ++p)
    for (std::size_t q = 1; q <= 4; ++q) {
      Identity id{square, power_form(x, p, q)};
      if (!satisfies(S, id).holds) continue;
      for (std::size_t a = 0; a < S.order(); ++a)
        if (!S.is_group_element(S.product(a, a))) return false;
    }
  return true;
}

bool degree_shadow_invariant(const FiniteEpigroup& S) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i; j <= n; ++j) {
        if (!satisfies(S, make_degree_identity(n, i, j)).holds) continue;
        for (const auto& subset : all_subsemigroups(S)) {
          FiniteEpigroup T = subsemigroup(S, subset);
          if (is_nil(T) && nilpotency_index(T) > n) return false;
        }
      }
  return true;
}

}  // namespace

CommandResult cmd_scan(const ScanOptions& options) {
  auto started = Clock::now();
  CommandResult result;
  json report = make_report("scan");
  // jobs is an execution detail like timing: results are independent of it,
  // so it is deliberately absent from the report
  report["settings"] = {{"order", options.order},
                        {"dedupe", options.dedupe},
                        {"seed", options.seed}};
  try {
    IdentitySystem filter;
    bool has_filter = options.identities_path.has_value();
    if (has_filter) {
      report["inputs"].push_back(input_record(*options.identities_path));
      filter = load_identities_file(*options.identities_path);
    }

    std::vector<FiniteEpigroup> models = enumerate_epigroups(
        options.order, has_filter ? &filter : nullptr, options.jobs);

    IdentitySystem pinv_zero =
        expand_zero(ZeroIdentity{pinv(Word::var(Variable{"x"}))});

    std::map<std::string, InvariantTally> tallies;
    for (const FiniteEpigroup& S : models) {
      tallies["omega_product"].count(S, omega_product_invariant(S));
      tallies["epigroup_identities"].count(S, epigroup_identities_invariant(S));
      tallies["pinv_zero_iff_nil"].count(
          S, pinv_zero_iff_nil_invariant(S, pinv_zero));
      tallies["group_criterion"].count(S, group_criterion_invariant(S));
      tallies["square_power_shadow"].count(S, square_power_shadow_invariant(S));
      tallies["degree_shadow"].count(S, degree_shadow_invariant(S));
    }

    json invariants = json::object();
    std::optional<std::string> offending;
    std::string offending_invariant;
    for (const auto& [name, tally] : tallies) {
      invariants[name] = {{"models", tally.models},
                          {"failures", tally.failures}};
      if (tally.first_failure_table && !offending) {
        offending = tally.first_failure_table;
        offending_invariant = name;
      }
    }

    json results{{"order", options.order},
                 {"candidates", table_candidate_count(options.order)},
                 {"associative", has_filter ? json(nullptr)
                                            : json(models.size())},
                 {"matching", has_filter ? json(models.size()) : json(nullptr)},
                 {"invariants", invariants}};

    if (options.dedupe) {
      std::set<std::vector<std::size_t>> classes;
      for (const FiniteEpigroup& S : models) classes.insert(canonical_table(S));
      results["classes"] = classes.size();
    } else {
      results["classes"] = nullptr;
    }

    if (has_filter) {
      json matches = json::array();
      for (const FiniteEpigroup& S : models)
        matches.push_back(json{{"table", table_string(S)},
                               {"is_nil", is_nil(S)},
                               {"has_zero", S.zero().has_value()},
                               {"is_commutative", is_commutative(S)}});
      results["matches"] = std::move(matches);
    }

    if (offending) {
      results["failure"] = {{"invariant", offending_invariant},
                            {"table", *offending}};
      report["status"] = "fail";
      result.exit_code = kExitFail;
    } else {
      results["failure"] = nullptr;
    }
    report["results"] = std::move(results);

    std::ostringstream lines;
    lines << "scan order " << options.order << ": "
          << table_candidate_count(options.order) << " candidates, "
          << models.size() << (has_filter ? " matching" : " associative")
          << " tables\n";
    for (const auto& [name, tally] : tallies)
      lines << "  " << name << ": " << tally.failures << " failures in "
            << tally.models << " models\n";
    if (offending)
      lines << "  INVARIANT FAILURE (" << offending_invariant
            << "): " << *offending << "\n";
    result.summary = lines.str();
  } catch (const Error& e) {
    return error_result("scan", e);
  }
  finish(result, report, started);
  return result;
}

}  // namespace epikit::cli
