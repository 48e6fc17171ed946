// Serial reference vs OpenMP batch analysis on generated instances.
#include <chrono>
#include <iomanip>
#include <iostream>

#include <omp.h>

#include <CLI11.hpp>

#include "retract/batch.hpp"
#include "retract/generator.hpp"
#include "retract/report_io.hpp"

using namespace retract;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark serial against parallel batch analysis"};
  std::size_t count = 400;
  std::size_t n = 4;
  unsigned complexity = 3;
  int threads = 0;
  app.add_option("--count", count, "Instances");
  app.add_option("--n", n, "Variables per instance");
  app.add_option("--complexity", complexity, "Conjugation depth");
  app.add_option("--threads", threads, "Parallel workers (0 = OpenMP default)");
  CLI11_PARSE(app, argc, argv);

  std::vector<Endomorphism> maps;
  for (std::size_t k = 0; k < count; ++k) {
    GeneratorSpec spec;
    spec.n = n;
    spec.d = k % (n + 1);
    spec.r = spec.d ? (k / (n + 1)) % (spec.d + 1) : 0;
    spec.seed = k;
    spec.complexity = complexity;
    maps.push_back(gen_random_idempotent(spec));
  }

  auto t0 = std::chrono::steady_clock::now();
  auto serial = analyze_batch_serial(maps);
  double t_serial = seconds(t0);
  t0 = std::chrono::steady_clock::now();
  auto parallel = analyze_batch(maps, threads);
  double t_parallel = seconds(t0);

  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    bool same = serial[i].kind == parallel[i].kind && serial[i].error == parallel[i].error;
    if (same && serial[i].report) {
      same = render_report(*serial[i].report, ReportFormat::Json) ==
             render_report(*parallel[i].report, ReportFormat::Json);
    }
    mismatches += !same;
  }

  std::cout << std::fixed << std::setprecision(3);
  std::cout << "instances " << count << ", n = " << n << ", complexity " << complexity << "\n";
  std::cout << "serial    " << t_serial << " s\n";
  std::cout << "parallel  " << t_parallel << " s (" << effective_threads(threads) << " threads)\n";
  std::cout << "speedup   " << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x\n";
  std::cout << "mismatches " << mismatches << "\n";
  return mismatches == 0 ? 0 : 1;
}
