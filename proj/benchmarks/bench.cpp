#include <benchmark/benchmark.h>

#include "epikit/deduction.hpp"
#include "epikit/enumerate.hpp"
#include "epikit/epigroup.hpp"
#include "epikit/identity.hpp"
#include "epikit/lattice.hpp"
#include "epikit/parse.hpp"

using namespace epikit;

namespace {

void BM_EnumerateOrder3(benchmark::State& state) {
  for (auto _ : state) {
    auto models = enumerate_epigroups(3, nullptr,
                                      static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(models.size());
  }
}
BENCHMARK(BM_EnumerateOrder3)->Arg(1)->Arg(4);

void BM_SatisfiesCommutativity(benchmark::State& state) {
  auto models = enumerate_epigroups(3);
  IdentitySystem comm{{Identity{parse_word("x y"), parse_word("y x")}}};
  for (auto _ : state) {
    std::size_t count = 0;
    for (const FiniteEpigroup& S : models)
      if (satisfies(S, comm).holds) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_SatisfiesCommutativity);

void BM_PseudoinverseTable(benchmark::State& state) {
  auto catalog = enumerate_epigroups(3);
  for (auto _ : state)
    for (const FiniteEpigroup& S : catalog) {
      FiniteEpigroup copy = FiniteEpigroup::validate(S.order(), S.table());
      benchmark::DoNotOptimize(copy.pseudoinverses().data());
    }
}
BENCHMARK(BM_PseudoinverseTable);

void BM_EnumerateLattices(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_lattice(static_cast<std::size_t>(state.range(0)), false,
                     [&](const FiniteLattice&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateLattices)->Arg(5)->Arg(6);

void BM_NeutralElements(benchmark::State& state) {
  FiniteLattice b3 = lattice_fixture("B3");
  for (auto _ : state) {
    std::size_t count = 0;
    for (std::size_t x = 0; x < b3.size(); ++x)
      if (is_neutral_element(b3, x)) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_NeutralElements);

void BM_VerifyNestedChain(benchmark::State& state) {
  DerivationChain chain = load_chain_file(
      std::string(EPIKIT_DATA_DIR) + "/chains/nested_main.chain");
  for (auto _ : state) {
    ChainReport report = verify_chain(chain);
    benchmark::DoNotOptimize(report.verified);
  }
}
BENCHMARK(BM_VerifyNestedChain);

}  // namespace

BENCHMARK_MAIN();
