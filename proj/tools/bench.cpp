// Benchmark: OpenMP kernels against their serial reference paths.
//   bench [--m NODES] [--k K] [--threads N]

#include <chrono>
#include <cstdio>
#include <functional>

#include <CLI11.hpp>

#include "bhc/data_io.hpp"
#include "bhc/model1.hpp"
#include "bhc/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double time_of(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel benchmark"};
  int m = 60, k = 3, threads = 0;
  app.add_option("--m", m, "node count for the brute-force benchmark");
  app.add_option("--k", k, "cluster count");
  app.add_option("--threads", threads, "worker threads (0 = all cores)");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled\n");
#endif

  bhc::Dataset ds = bhc::gen_uniform(m, 2, 0.0, 100.0, 1);
  bhc::Gauge gauge(bhc::GaugeKind::EuclideanBall, 2);

  bhc::BruteForceResult par, ser;
  double t_par = time_of([&] { par = bhc::brute_force(1, ds.points, k, gauge); });
  double t_ser = time_of([&] { ser = bhc::brute_force_serial(1, ds.points, k, gauge); });
  std::printf("brute force  m=%d k=%d  %llu subsets\n", m, k,
              (unsigned long long)par.combinations);
  std::printf("  parallel %.3fs   serial %.3fs   speedup %.2fx   costs %s\n", t_par,
              t_ser, t_ser / t_par, par.cost == ser.cost ? "agree" : "DISAGREE");

  bhc::Dataset big = bhc::gen_uniform(20000, 2, 0.0, 100.0, 2);
  bhc::Model1Problem p(big.points, 8, gauge, 0.01, 16.0);
  bhc::Matrix X = big.points.topRows(8);
  double t_sub = time_of([&] {
    for (int rep = 0; rep < 20; ++rep) (void)p.h_mu_subgradient(X);
  });
  std::printf("h_mu subgradient  m=%d k=%d  20 reps  %.3fs\n", big.m(), 8, t_sub);
  return 0;
}
