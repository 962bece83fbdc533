#include <benchmark/benchmark.h>

#include "oclam/denot.hpp"
#include "oclam/encode.hpp"
#include "oclam/gen.hpp"
#include "oclam/parse.hpp"
#include "oclam/reduce.hpp"
#include "oclam/rng.hpp"
#include "oclam/typecheck.hpp"

using namespace oclam;

namespace {

TypePtr vec_type(size_t d) {
  TypePtr t = ty_one();
  for (size_t i = 1; i < d; ++i) t = ty_with(t, ty_one());
  return t;
}

Matrix random_matrix(size_t rows, size_t cols, uint64_t seed) {
  Rng rng(seed);
  Matrix m{rows, cols, {}};
  const Semiring& rat = Semiring::rat();
  for (size_t i = 0; i < rows * cols; ++i)
    m.entries.push_back(rat.from_int(static_cast<long>(rng.below(9)) - 4));
  return m;
}

std::vector<TermPtr> sample_terms(int n, int size) {
  GenConfig cfg;
  cfg.seed = 99;
  cfg.max_size = size;
  Generator gen(cfg);
  std::vector<TermPtr> out;
  while (static_cast<int>(out.size()) < n)
    if (auto t = gen.gen_closed(gen.gen_type())) out.push_back(*t);
  return out;
}

void BM_normalize_matrix_apply(benchmark::State& state) {
  size_t d = static_cast<size_t>(state.range(0));
  TypePtr a = vec_type(d);
  Matrix m = random_matrix(d, d, 7);
  Vector u;
  const Semiring& rat = Semiring::rat();
  for (size_t i = 0; i < d; ++i) u.entries.push_back(rat.from_int(static_cast<long>(i) + 1));
  TermPtr app = mk_app(matrix_to_term(m, a, a), vec_to_term(u, a));
  for (auto _ : state)
    benchmark::DoNotOptimize(normalize(app).term);
}
BENCHMARK(BM_normalize_matrix_apply)->Arg(2)->Arg(4)->Arg(8);

void BM_typecheck_generated(benchmark::State& state) {
  auto terms = sample_terms(64, static_cast<int>(state.range(0)));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(infer({}, {}, terms[i % terms.size()]));
    ++i;
  }
}
BENCHMARK(BM_typecheck_generated)->Arg(24)->Arg(48);

void BM_redex_enumeration(benchmark::State& state) {
  auto terms = sample_terms(64, 40);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(redexes(terms[i % terms.size()]));
    ++i;
  }
}
BENCHMARK(BM_redex_enumeration);

void BM_eval_hadamard(benchmark::State& state) {
  const Semiring& crat = Semiring::crat();
  TermPtr h = parse_term(
      "\\x:I&I. fst(x, y:I. let1(y, pair(star(1), star(1)))) <+> "
      "snd(x, z:I. let1(z, pair(star(1), star((-1, 0)))))",
      crat);
  for (auto _ : state) {
    SemValuePtr v = eval_closed(h, crat);
    benchmark::DoNotOptimize(canonicalize(parse_type("(I&I) -o (I&I)"), v, crat));
  }
}
BENCHMARK(BM_eval_hadamard);

void BM_generate_terms(benchmark::State& state) {
  GenConfig cfg;
  cfg.seed = 5;
  cfg.max_size = static_cast<int>(state.range(0));
  Generator gen(cfg);
  for (auto _ : state)
    benchmark::DoNotOptimize(gen.gen_closed(gen.gen_type()));
}
BENCHMARK(BM_generate_terms)->Arg(16)->Arg(32);

} // namespace

BENCHMARK_MAIN();
