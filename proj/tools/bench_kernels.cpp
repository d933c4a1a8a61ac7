// Timing comparison between the serial reference kernels and the OpenMP ones
// on the heaviest reservoir configurations.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qbank/scenarios.hpp"

using clk = std::chrono::steady_clock;

namespace {

double run_once(const qbank::scen::ScenarioSpec& spec, qbank::bank::Exec exec, int refine) {
  const auto t0 = clk::now();
  const auto series = qbank::bank::quantum_functions(spec.model, spec.grid, {refine}, exec);
  const auto t1 = clk::now();
  (void)series;
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run the serial path\n");
#endif
  std::printf("%-16s %8s %12s %12s %8s\n", "preset", "refine", "serial ms", "parallel ms",
              "speedup");
  for (const char* name : {"fig7-r3-left", "fig7-r1-left", "fig18-psi2", "appB-fig1-right"}) {
    const auto& spec = qbank::scen::get(name);
    // oversample so the table fill dominates and timings are stable
    const int refine = 8 * qbank::bank::effective_refine(spec.model, spec.grid.step(), {0});
    run_once(spec, qbank::bank::Exec::serial, refine);  // warm up
    const double ts = run_once(spec, qbank::bank::Exec::serial, refine);
    const double tp = run_once(spec, qbank::bank::Exec::parallel, refine);
    std::printf("%-16s %8d %12.1f %12.1f %8.2fx\n", name, refine, ts, tp, ts / tp);
  }
  return 0;
}
