// bhc: bilevel hierarchical clustering solver front end.
//   bhc solve  --model {1,2} --k INT [--input PATH | --gen SPEC] [...]
//   bhc brute  --model {1,2} --k INT [--input PATH | --gen SPEC] [--cap N]
//   bhc verify [--suite NAME ...] [--seed N]
//   bhc sweep  --models LIST --k-list LIST [...]

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bhc/data_io.hpp"
#include "bhc/dca.hpp"
#include "bhc/oracle.hpp"
#include "bhc/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace bhc;

void apply_threads(int threads) {
  if (threads == 0) {
    if (const char* env = std::getenv("BILEVEL_THREADS")) threads = std::atoi(env);
  }
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

// SPEC: uniform:M,N[,LO,HI[,SEED]]  or  blobs:B,P,SPREAD[,SEED] (unit-grid
// blob centers, P points each).
Dataset parse_gen_spec(const std::string& spec) {
  size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError("--gen", "expected KIND:ARGS, e.g. uniform:1000,2");
  std::string kind = spec.substr(0, colon);
  std::vector<double> v;
  std::stringstream ss(spec.substr(colon + 1));
  std::string cell;
  while (std::getline(ss, cell, ',')) v.push_back(std::stod(cell));
  if (kind == "uniform") {
    if (v.size() < 2) throw CLI::ValidationError("--gen", "uniform needs M,N");
    double lo = v.size() > 2 ? v[2] : 0.0, hi = v.size() > 3 ? v[3] : 100.0;
    std::uint64_t seed = v.size() > 4 ? std::uint64_t(v[4]) : 0;
    return gen_uniform(int(v[0]), int(v[1]), lo, hi, seed);
  }
  if (kind == "blobs") {
    if (v.size() < 3) throw CLI::ValidationError("--gen", "blobs needs B,P,SPREAD");
    int b = int(v[0]);
    Matrix centers(b, 2);
    for (int c = 0; c < b; ++c) centers.row(c) << 20.0 * c, 0.0;
    std::uint64_t seed = v.size() > 3 ? std::uint64_t(v[3]) : 0;
    return gen_clusters(centers, v[2], int(v[1]), seed);
  }
  throw CLI::ValidationError("--gen", "unknown generator kind: " + kind);
}

Dataset load_dataset(const std::string& input, const std::string& gen) {
  if (!input.empty() && !gen.empty())
    throw CLI::ValidationError("--input", "--input and --gen are mutually exclusive");
  if (!input.empty()) {
    if (input.size() > 4 && input.substr(input.size() - 4) == ".csv")
      return load_csv(input, /*has_header=*/false);
    return load_tsplib(input);
  }
  if (!gen.empty()) return parse_gen_spec(gen);
  throw CLI::ValidationError("--input", "one of --input or --gen is required");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

void write_svg(const std::string& path, const Matrix& points, const Matrix& centers) {
  double lo_x = points.col(0).minCoeff(), hi_x = points.col(0).maxCoeff();
  double lo_y = points.col(1).minCoeff(), hi_y = points.col(1).maxCoeff();
  double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  auto sx = [&](double x) { return 20.0 + 560.0 * (x - lo_x) / span; };
  auto sy = [&](double y) { return 580.0 - 560.0 * (y - lo_y) / span; };
  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='600' height='600'>\n";
  for (int i = 0; i < points.rows(); ++i)
    svg << "<circle cx='" << sx(points(i, 0)) << "' cy='" << sy(points(i, 1))
        << "' r='3' fill='steelblue'/>\n";
  for (int l = 0; l < centers.rows(); ++l)
    svg << "<circle cx='" << sx(centers(l, 0)) << "' cy='" << sy(centers(l, 1))
        << "' r='6' fill='none' stroke='crimson' stroke-width='2'/>\n";
  svg << "</svg>\n";
  write_text(path, svg.str());
}

struct SolveFlags {
  int model = 0;
  int k = -1;
  std::string gauge = "l2";
  std::string input, gen, init = "random", out, format = "csv", svg;
  int restarts = 1, threads = 0;
  std::uint64_t seed = 0;
  SolverParams prm;
};

void add_solve_flags(CLI::App* cmd, SolveFlags& f, bool single_model) {
  if (single_model)
    cmd->add_option("--model", f.model, "model (1 or 2)")->required()
        ->check(CLI::IsMember({1, 2}));
  cmd->add_option("--k", f.k, "number of clusters")->required();
  cmd->add_option("--gauge", f.gauge, "distance gauge")->check(CLI::IsMember({"l2", "l1"}));
  cmd->add_option("--input", f.input, "TSPLIB (.tsp) or CSV (.csv) dataset");
  cmd->add_option("--gen", f.gen, "synthetic dataset, e.g. uniform:1000,2");
  cmd->add_option("--init", f.init, "start strategy")
      ->check(CLI::IsMember({"random", "kmeans", "uniform"}));
  cmd->add_option("--restarts", f.restarts, "multi-start count")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "base RNG seed");
  cmd->add_option("--mu0", f.prm.mu0, "initial smoothing parameter");
  cmd->add_option("--lambda0", f.prm.lambda0, "initial penalty parameter");
  cmd->add_option("--sigma1", f.prm.sigma1, "penalty growth factor");
  cmd->add_option("--sigma2", f.prm.sigma2, "smoothing decay factor");
  cmd->add_option("--mu-min", f.prm.mu_min, "smoothing stop threshold");
  cmd->add_option("--max-inner", f.prm.max_inner, "max inner DCA iterations");
  cmd->add_option("--tol", f.prm.step_tol, "inner step tolerance");
  cmd->add_option("--out", f.out, "results file path");
  cmd->add_option("--format", f.format, "results file format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--svg", f.svg, "scatter plot of points and centers (2-D only)");
  cmd->add_option("--threads", f.threads,
                  "worker threads (0 = BILEVEL_THREADS env or all cores)");
}

std::string params_string(const SolverParams& p) {
  std::ostringstream s;
  s << "mu0=" << p.mu0 << ";lambda0=" << p.lambda0 << ";sigma1=" << p.sigma1
    << ";sigma2=" << p.sigma2;
  return s.str();
}

RunRecord make_record(const Dataset& ds, const SolveFlags& f, const SolveResult& r) {
  RunRecord rec;
  rec.dataset = ds.name;
  rec.model = f.model;
  rec.cost = r.discrete_cost;
  rec.cost_continuous = r.continuous_cost;
  rec.iterations = r.total_inner_iterations;
  // left at zero so identical flags + seed give byte-identical files
  rec.time_seconds = 0.0;
  rec.k = f.k;
  rec.m = ds.m();
  rec.n = ds.n();
  rec.seed = r.seed;
  rec.init = f.init;
  rec.gauge = f.gauge;
  rec.params = params_string(f.prm);
  return rec;
}

void write_records(const SolveFlags& f, const std::vector<RunRecord>& recs) {
  if (f.out.empty()) return;
  write_text(f.out, f.format == "json" ? write_results_json(recs)
                                       : write_results_csv(recs));
}

int cmd_solve(const SolveFlags& f) {
  Dataset ds = load_dataset(f.input, f.gen);
  Gauge gauge = make_gauge(f.gauge, ds.n());
  InitStrategy init = parse_init(f.init);

  std::vector<RunRecord> recs;
  SolveResult best;
  int best_r = -1;
  std::printf("%-8s %-6s %-14s %-14s %-10s %-8s\n", "restart", "seed", "cost",
              "continuous", "iters", "time_s");
  for (int r = 0; r < f.restarts; ++r) {
    SolverParams prm = f.prm;
    prm.restarts = 1;
    prm.seed = f.seed + std::uint64_t(r);
    SolveResult res = solve(f.model, ds.points, f.k, gauge, prm, init);
    std::printf("%-8d %-6llu %-14.4f %-14.4f %-10ld %-8.3f\n", r,
                (unsigned long long)res.seed, res.discrete_cost, res.continuous_cost,
                res.total_inner_iterations, res.wall_seconds);
    recs.push_back(make_record(ds, f, res));
    if (best_r < 0 || res.discrete_cost < best.discrete_cost) {
      best = std::move(res);
      best_r = r;
    }
  }
  std::printf("best: restart %d cost %.4f total_center %d nodes", best_r,
              best.discrete_cost, best.total_center);
  for (int c : best.snapped) std::printf(" %d", c);
  std::printf("\n");
  write_records(f, recs);
  if (!f.svg.empty()) {
    if (ds.n() != 2) throw std::runtime_error("--svg requires 2-D data");
    write_svg(f.svg, ds.points, best.centers);
  }
  return 0;
}

int cmd_brute(const SolveFlags& f, std::uint64_t cap) {
  Dataset ds = load_dataset(f.input, f.gen);
  Gauge gauge = make_gauge(f.gauge, ds.n());
  BruteForceResult res = brute_force(f.model, ds.points, f.k, gauge, cap);
  std::printf("dataset %s model %d k %d gauge %s\n", ds.name.c_str(), f.model, f.k,
              f.gauge.c_str());
  std::printf("combinations %llu\n", (unsigned long long)res.combinations);
  std::printf("optimal cost %.4f total_center %d nodes", res.cost, res.total_center);
  for (int c : res.indices) std::printf(" %d", c);
  std::printf("\n");
  if (!f.out.empty()) {
    RunRecord rec;
    rec.dataset = ds.name;
    rec.model = f.model;
    rec.cost = res.cost;
    rec.cost_continuous = res.cost;
    rec.iterations = long(res.combinations);
    rec.k = f.k;
    rec.m = ds.m();
    rec.n = ds.n();
    rec.init = "brute";
    rec.gauge = f.gauge;
    rec.params = "cap=" + std::to_string(cap);
    write_records(f, {rec});
  }
  return 0;
}

int cmd_verify(const std::vector<std::string>& suites, std::uint64_t seed) {
  std::vector<SuiteResult> results = run_verification(suites, seed);
  bool ok = true;
  for (const auto& s : results) {
    std::printf("%-13s %s  checks %ld  failures %ld  worst %.3e\n", s.name.c_str(),
                s.passed() ? "PASS" : "FAIL", s.checks, s.failures, s.worst);
    ok = ok && s.passed();
  }
  return ok ? 0 : 1;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(std::stoi(cell));
  if (out.empty()) throw CLI::ValidationError("list", "empty list");
  return out;
}

int cmd_sweep(SolveFlags f, const std::string& models_s, const std::string& ks_s) {
  Dataset ds = load_dataset(f.input, f.gen);
  Gauge gauge = make_gauge(f.gauge, ds.n());
  InitStrategy init = parse_init(f.init);
  std::vector<RunRecord> recs;
  std::printf("%-8s %-4s %-14s %-14s %-8s\n", "model", "k", "cost", "continuous", "time_s");
  for (int model : parse_int_list(models_s)) {
    if (model != 1 && model != 2)
      throw CLI::ValidationError("--models", "models must be 1 or 2");
    for (int k : parse_int_list(ks_s)) {
      SolverParams prm = f.prm;
      prm.restarts = f.restarts;
      prm.seed = f.seed;
      SolveResult res = solve(model, ds.points, k, gauge, prm, init);
      std::printf("%-8d %-4d %-14.4f %-14.4f %-8.3f\n", model, k, res.discrete_cost,
                  res.continuous_cost, res.wall_seconds);
      SolveFlags fk = f;
      fk.model = model;
      fk.k = k;
      recs.push_back(make_record(ds, fk, res));
    }
  }
  write_records(f, recs);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bilevel hierarchical clustering: DCA solver and brute-force oracle"};
  app.require_subcommand(1);

  SolveFlags sf;
  CLI::App* solve_cmd = app.add_subcommand("solve", "multi-start continuation DCA solve");
  add_solve_flags(solve_cmd, sf, true);

  SolveFlags bf;
  std::uint64_t cap = 10000000;
  CLI::App* brute_cmd = app.add_subcommand("brute", "exhaustive discrete optimum");
  brute_cmd->add_option("--model", bf.model, "model (1 or 2)")->required()
      ->check(CLI::IsMember({1, 2}));
  brute_cmd->add_option("--k", bf.k, "number of clusters")->required();
  brute_cmd->add_option("--gauge", bf.gauge, "distance gauge")
      ->check(CLI::IsMember({"l2", "l1"}));
  brute_cmd->add_option("--input", bf.input, "TSPLIB (.tsp) or CSV (.csv) dataset");
  brute_cmd->add_option("--gen", bf.gen, "synthetic dataset spec");
  brute_cmd->add_option("--cap", cap, "max subsets to enumerate");
  brute_cmd->add_option("--out", bf.out, "results file path");
  brute_cmd->add_option("--format", bf.format, "results file format")
      ->check(CLI::IsMember({"csv", "json"}));
  brute_cmd->add_option("--threads", bf.threads, "worker threads");

  std::vector<std::string> suites;
  std::uint64_t verify_seed = 12345;
  CLI::App* verify_cmd = app.add_subcommand("verify", "numerical property suites");
  verify_cmd->add_option("--suite", suites, "suite names (default: all)");
  verify_cmd->add_option("--seed", verify_seed, "RNG seed for random instances");

  SolveFlags wf;
  std::string models_s = "1,2", ks_s;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "grid of solves over models and k");
  add_solve_flags(sweep_cmd, wf, false);
  sweep_cmd->get_option("--k")->required(false);
  sweep_cmd->add_option("--models", models_s, "comma-separated model list");
  sweep_cmd->add_option("--k-list", ks_s, "comma-separated k list")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve_cmd->parsed()) {
      apply_threads(sf.threads);
      return cmd_solve(sf);
    }
    if (brute_cmd->parsed()) {
      apply_threads(bf.threads);
      return cmd_brute(bf, cap);
    }
    if (verify_cmd->parsed()) return cmd_verify(suites, verify_seed);
    apply_threads(wf.threads);
    return cmd_sweep(wf, models_s, ks_s);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
