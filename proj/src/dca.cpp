#include "bhc/dca.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "bhc/init.hpp"
#include "bhc/model1.hpp"
#include "bhc/model2.hpp"
#include "bhc/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bhc {

void SolverParams::validate() const {
  if (!(mu0 > 0.0) || !(lambda0 > 0.0)) throw std::invalid_argument("params: mu0, lambda0 > 0");
  if (!(sigma1 > 1.0)) throw std::invalid_argument("params: sigma1 > 1 required");
  if (!(sigma2 > 0.0 && sigma2 < 1.0)) throw std::invalid_argument("params: sigma2 in (0,1)");
  if (!(mu_min > 0.0 && mu_min < mu0)) throw std::invalid_argument("params: mu0 > mu_min > 0");
  if (max_inner < 1) throw std::invalid_argument("params: max_inner >= 1");
  if (restarts < 1) throw std::invalid_argument("params: restarts >= 1");
}

InitStrategy parse_init(const std::string& name) {
  if (name == "random") return InitStrategy::RandomNodes;
  if (name == "kmeans") return InitStrategy::KMeans;
  if (name == "uniform") return InitStrategy::Uniform;
  throw std::invalid_argument("unknown init strategy: " + name);
}

const char* init_name(InitStrategy s) {
  switch (s) {
    case InitStrategy::RandomNodes: return "random";
    case InitStrategy::KMeans: return "kmeans";
    default: return "uniform";
  }
}

int continuation_stage_count(const SolverParams& p) {
  return int(std::ceil(std::log(p.mu0 / p.mu_min) / std::log(1.0 / p.sigma2)));
}

std::vector<int> snap_centers(const Matrix& data, const Matrix& centers,
                              const Gauge& gauge) {
  const int K = int(centers.rows()), m = int(data.rows());
  if (K > m) throw std::invalid_argument("snap_centers: more centers than nodes");
  Matrix D(K, m);
  for (int l = 0; l < K; ++l)
    for (int i = 0; i < m; ++i)
      D(l, i) = gauge.support(centers.row(l).transpose() - data.row(i).transpose());

  std::vector<int> snapped(K, -1);
  std::vector<bool> node_used(m, false);
  for (int round = 0; round < K; ++round) {
    int bl = -1, bi = -1;
    double bd = std::numeric_limits<double>::infinity();
    for (int l = 0; l < K; ++l) {
      if (snapped[l] >= 0) continue;
      for (int i = 0; i < m; ++i) {
        if (node_used[i]) continue;
        if (D(l, i) < bd) { bd = D(l, i); bl = l; bi = i; }
      }
    }
    snapped[bl] = bi;
    node_used[bi] = true;
  }
  return snapped;
}

namespace {

Matrix make_start(const Matrix& data, int rows, InitStrategy init, std::uint64_t seed) {
  switch (init) {
    case InitStrategy::RandomNodes: return init_random_nodes(data, rows, seed);
    case InitStrategy::KMeans: return init_kmeans(data, rows, seed);
    default: return init_uniform(data, rows, seed);
  }
}

template <class Problem>
SolveResult run_one(int model, Problem p, const Matrix& data, const Gauge& gauge,
                    const SolverParams& prm, Matrix X0, std::uint64_t seed,
                    int restart_index) {
  auto t0 = std::chrono::steady_clock::now();
  SolveResult res;
  res.seed = seed;
  res.restart_index = restart_index;
  res.total_inner_iterations = 0;

  double lambda = prm.lambda0, mu = prm.mu0;
  Matrix X = std::move(X0);
  for (;;) {
    p.lambda = std::min(lambda, prm.lambda_cap);
    p.mu = mu;
    InnerResult inner = dca_inner(p, std::move(X), prm.max_inner, prm.step_tol);
    X = std::move(inner.X);
    res.total_inner_iterations += inner.iterations;
    res.trace.push_back({p.lambda, mu, inner.f_mu_trace.back(), p.exact_objective(X),
                         inner.iterations});
    lambda *= prm.sigma1;
    mu *= prm.sigma2;
    if (mu < prm.mu_min) break;
  }

  res.centers = X;
  res.snapped = snap_centers(data, X, gauge);
  res.continuous_cost = p.unpenalized_objective(X);
  DiscreteCost dc = (model == 1) ? discrete_cost_model1(data, res.snapped, gauge)
                                 : discrete_cost_model2(data, res.snapped, gauge);
  res.discrete_cost = dc.cost;
  res.total_center = dc.total_center;
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace

SolveResult solve_from(int model, const Matrix& data, int k, const Gauge& gauge,
                       const SolverParams& prm, const Matrix& X0) {
  if (model != 1 && model != 2) throw std::invalid_argument("solve: model must be 1 or 2");
  prm.validate();
  if (model == 1) {
    Model1Problem p(data, k, gauge, prm.lambda0, prm.mu0);
    return run_one(1, std::move(p), data, gauge, prm, X0, prm.seed, 0);
  }
  Model2Problem p(data, k, gauge, prm.lambda0, prm.mu0);
  return run_one(2, std::move(p), data, gauge, prm, X0, prm.seed, 0);
}

SolveResult solve(int model, const Matrix& data, int k, const Gauge& gauge,
                  const SolverParams& prm, InitStrategy init) {
  if (model != 1 && model != 2) throw std::invalid_argument("solve: model must be 1 or 2");
  prm.validate();
  if (data.rows() < 1) throw std::invalid_argument("solve: empty dataset");
  const int rows = (model == 1) ? k : k + 1;
  if (rows < 1 || rows > data.rows())
    throw std::invalid_argument("solve: k out of range for dataset");

  std::vector<SolveResult> results(prm.restarts);
  std::vector<std::string> errors(prm.restarts);

#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < prm.restarts; ++r) {
    try {
      std::uint64_t seed = prm.seed + std::uint64_t(r);
      Matrix X0 = make_start(data, rows, init, seed);
      if (model == 1) {
        Model1Problem p(data, k, gauge, prm.lambda0, prm.mu0);
        results[r] = run_one(1, std::move(p), data, gauge, prm, std::move(X0), seed, r);
      } else {
        Model2Problem p(data, k, gauge, prm.lambda0, prm.mu0);
        results[r] = run_one(2, std::move(p), data, gauge, prm, std::move(X0), seed, r);
      }
    } catch (const std::exception& e) {
      errors[r] = e.what();
    }
  }
  for (int r = 0; r < prm.restarts; ++r)
    if (!errors[r].empty()) throw std::runtime_error("solve: restart " + std::to_string(r) +
                                                     " failed: " + errors[r]);

  int best = 0;
  for (int r = 1; r < prm.restarts; ++r)
    if (results[r].discrete_cost < results[best].discrete_cost) best = r;
  return results[best];
}

}  // namespace bhc
