#ifndef BHC_DCA_HPP
#define BHC_DCA_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "bhc/gauge.hpp"

namespace bhc {

struct SolverParams {
  double mu0 = 16.0;
  double lambda0 = 0.01;
  double sigma1 = 160.0;  // lambda growth, > 1
  double sigma2 = 0.5;    // mu decay, in (0,1)
  double mu_min = 1e-6;
  int max_inner = 200;
  double step_tol = 1e-6;
  int restarts = 1;
  std::uint64_t seed = 0;
  // sigma1 = 160 over ~24 stages would overflow doubles; capping only
  // rescales the g/h pair once the penalty term has converged to zero.
  double lambda_cap = 1e12;

  void validate() const;
};

enum class InitStrategy { RandomNodes, KMeans, Uniform };
InitStrategy parse_init(const std::string& name);  // "random" | "kmeans" | "uniform"
const char* init_name(InitStrategy s);

struct StageRecord {
  double lambda;
  double mu;
  double f_mu;  // smoothed objective at stage end
  double f;     // exact penalized objective at stage end
  int inner_iterations;
};

struct InnerResult {
  Matrix X;
  int iterations;
  std::vector<double> f_mu_trace;  // f_mu at X0 and after every step
};

struct SolveResult {
  Matrix centers;                  // final continuous centers
  std::vector<int> snapped;        // node index per center row, pairwise distinct
  int total_center;                // node index
  double continuous_cost;          // unpenalized objective at `centers`
  double discrete_cost;            // discrete tree cost of the snapped solution
  long total_inner_iterations;
  double wall_seconds;
  std::vector<StageRecord> trace;
  std::uint64_t seed;              // seed of the winning restart
  int restart_index;
};

// One DCA inner loop at fixed (lambda, mu):
//   Y_j = h_mu_subgradient(X_{j-1}),  X_j = conjugate_step(Y_j)
// until ||X_j - X_{j-1}||_F < step_tol or max_inner iterations.
// Throws on non-finite iterates.
template <class Problem>
InnerResult dca_inner(const Problem& p, Matrix X, int max_inner, double step_tol) {
  InnerResult r;
  r.f_mu_trace.push_back(p.smoothed_objective(X));
  r.iterations = 0;
  for (int j = 0; j < max_inner; ++j) {
    Matrix Y = p.h_mu_subgradient(X);
    Matrix Xn = p.conjugate_step(Y);
    if (!Xn.allFinite())
      throw std::runtime_error("dca_inner: non-finite iterate at inner step " +
                               std::to_string(j + 1));
    r.f_mu_trace.push_back(p.smoothed_objective(Xn));
    ++r.iterations;
    double step = (Xn - X).norm();
    X = std::move(Xn);
    if (step < step_tol) break;
  }
  r.X = std::move(X);
  return r;
}

// Full multi-start continuation solve.  `model` is 1 or 2; model 2 uses
// k+1 center rows.  Restarts run in parallel; the best (lowest discrete
// cost, smallest restart index on ties) is returned.
SolveResult solve(int model, const Matrix& data, int k, const Gauge& gauge,
                  const SolverParams& params, InitStrategy init);

// Single continuation run from a caller-supplied start matrix (k rows for
// model 1, k+1 for model 2).  `params.restarts` is ignored.
SolveResult solve_from(int model, const Matrix& data, int k, const Gauge& gauge,
                       const SolverParams& params, const Matrix& X0);

// Nearest-node snapping with greedy duplicate resolution: centers claim
// nodes in order of increasing gauge distance.
std::vector<int> snap_centers(const Matrix& data, const Matrix& centers,
                              const Gauge& gauge);

// Number of continuation stages executed for the given schedule.
int continuation_stage_count(const SolverParams& p);

}  // namespace bhc

#endif
