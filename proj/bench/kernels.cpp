// Serial reference vs OpenMP path for the hot kernels. The second argument
// of each benchmark selects the policy (0 serial, 1 parallel); the first is
// the number of elements per direction.

#include <benchmark/benchmark.h>

#include <memory>
#include <numbers>

#include "mmdg/lenard_bernstein.hpp"
#include "mmdg/micro_macro.hpp"
#include "mmdg/poisson.hpp"
#include "mmdg/problems.hpp"
#include "mmdg/vlasov.hpp"

using namespace mmdg;

namespace {

struct Fixture {
  MeshPtr mesh;
  DistributionField f;
  MomentField rho;
  ElectricField field;

  explicit Fixture(int n) {
    const double pi = std::numbers::pi;
    mesh = std::make_shared<const PhaseMesh>(build_mesh(-2 * pi, 2 * pi, n, -2 * pi, 2 * pi, n, 2));
    f = sample_nodal(mesh, [](double x, double v) { return initial_distribution(Problem::two_stream, x, v); });
    rho = moments_of(f, Exec::serial);
    field = solve_poisson(rho, calibrate_ne(rho));
  }
};

Exec policy(const benchmark::State& st) { return st.range(1) ? Exec::parallel : Exec::serial; }

void BM_vlasov_form(benchmark::State& st) {
  Fixture fx(static_cast<int>(st.range(0)));
  DistributionField out(fx.mesh);
  for (auto _ : st) {
    vlasov_form(fx.f, fx.field, periodic_bc(), out, policy(st));
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_micro_maxwellian_form(benchmark::State& st) {
  Fixture fx(static_cast<int>(st.range(0)));
  DistributionField out(fx.mesh);
  for (auto _ : st) {
    micro_maxwellian_form(fx.rho, fx.field, MicroOptions{}, periodic_bc(), out, policy(st));
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_implicit_lb_solve(benchmark::State& st) {
  Fixture fx(static_cast<int>(st.range(0)));
  LBOperator op(*fx.mesh);
  DistributionField work(fx.mesh);
  for (auto _ : st) {
    st.PauseTiming();
    work = fx.f;
    st.ResumeTiming();
    implicit_lb_solve(op, work, fx.rho, 0.5, policy(st));
    benchmark::DoNotOptimize(work.data());
  }
}

void BM_moments_of(benchmark::State& st) {
  Fixture fx(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(moments_of(fx.f, policy(st)));
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int n : {32, 64, 128})
    for (int p : {0, 1}) b->Args({n, p});
  b->ArgNames({"n", "parallel"})->Unit(benchmark::kMicrosecond);
}

}  // namespace

BENCHMARK(BM_vlasov_form)->Apply(sizes);
BENCHMARK(BM_micro_maxwellian_form)->Apply(sizes);
BENCHMARK(BM_implicit_lb_solve)->Apply(sizes);
BENCHMARK(BM_moments_of)->Apply(sizes);

BENCHMARK_MAIN();
