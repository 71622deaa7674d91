#include "bhc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "bhc/dca.hpp"
#include "bhc/model1.hpp"
#include "bhc/model2.hpp"
#include "bhc/smoothing.hpp"

namespace bhc {

namespace {

struct Check {
  SuiteResult res;
  explicit Check(std::string name) { res.name = std::move(name); }
  void expect(bool ok, double residual) {
    ++res.checks;
    if (!ok) ++res.failures;
    res.worst = std::max(res.worst, residual);
  }
  // residual must stay below tol
  void below(double residual, double tol) { expect(residual <= tol, residual); }
};

using Rng = std::mt19937_64;

Vector rand_vec(Rng& rng, int n, double scale = 3.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = u(rng);
  return v;
}

Matrix rand_mat(Rng& rng, int r, int c, double scale = 3.0) {
  Matrix M(r, c);
  for (int i = 0; i < r; ++i) M.row(i) = rand_vec(rng, c, scale).transpose();
  return M;
}

Gauge rand_gauge(Rng& rng, int n) {
  return Gauge(rng() % 2 == 0 ? GaugeKind::EuclideanBall : GaugeKind::UnitBox, n);
}

SuiteResult suite_gauges(Rng& rng) {
  Check c("gauges");
  for (int it = 0; it < 1000; ++it) {
    int n = 1 + int(rng() % 5);
    Gauge g = rand_gauge(rng, n);
    Vector x = rand_vec(rng, n), a = rand_vec(rng, n), z = rand_vec(rng, n);
    double lhs = g.support(z - a);
    double rhs = g.support(x - a) + g.subgradient(x, a).dot(z - x);
    c.below(rhs - lhs, 1e-12);
  }
  for (int it = 0; it < 100; ++it) {
    int n = 1 + int(rng() % 5);
    Gauge g = rand_gauge(rng, n);
    Vector z = rand_vec(rng, n);
    Vector pz = g.project(z);
    for (int jt = 0; jt < 100; ++jt) {
      Vector f = g.project(rand_vec(rng, n, 1.5));  // a point of F
      c.below((z - pz).dot(f - pz), 1e-12);
    }
    // idempotence
    c.below((g.project(pz) - pz).norm(), 1e-14);
  }
  // Support oracle: box vs vertex enumeration, ball (n = 2) vs fine
  // boundary sampling.
  for (int it = 0; it < 20; ++it) {
    int n = 1 + int(rng() % 5);
    Gauge g(GaugeKind::UnitBox, n);
    Vector x = rand_vec(rng, n);
    double best = -1e300;
    for (int mask = 0; mask < (1 << n); ++mask) {
      double dot = 0.0;
      for (int j = 0; j < n; ++j) dot += ((mask >> j) & 1 ? 1.0 : -1.0) * x[j];
      best = std::max(best, dot);
    }
    c.below(std::abs(g.support(x) - best), 1e-9);
  }
  for (int it = 0; it < 20; ++it) {
    Gauge g(GaugeKind::EuclideanBall, 2);
    Vector x = rand_vec(rng, 2);
    double best = -1e300;
    const int steps = 400000;
    for (int s = 0; s < steps; ++s) {
      double th = 2.0 * M_PI * double(s) / steps;
      best = std::max(best, x[0] * std::cos(th) + x[1] * std::sin(th));
    }
    c.below(std::abs(g.support(x) - best), 1e-9);
  }
  return c.res;
}

SuiteResult suite_smoothing(Rng& rng) {
  Check c("smoothing");
  const double mus[3] = {0.1, 1.0, 16.0};
  for (int it = 0; it < 500; ++it) {
    int n = 1 + int(rng() % 5);
    Gauge g = rand_gauge(rng, n);
    Vector x = rand_vec(rng, n), a = rand_vec(rng, n);
    double mu = mus[rng() % 3];
    Vector grad = smooth_gradient(g, x, a, mu);
    double h = 1e-6;
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
      Vector xp = x, xm = x;
      xp[j] += h;
      xm[j] -= h;
      double fd = (smooth_value(g, xp, a, mu) - smooth_value(g, xm, a, mu)) / (2 * h);
      worst = std::max(worst, std::abs(fd - grad[j]));
    }
    c.below(worst / std::max(1.0, grad.norm()), 1e-6);
    c.below(grad.norm() - g.norm_bound(), 1e-12);  // gradient lies in F
  }
  for (int it = 0; it < 1000; ++it) {
    int n = 1 + int(rng() % 5);
    Gauge g = rand_gauge(rng, n);
    Vector x = rand_vec(rng, n), a = rand_vec(rng, n);
    std::uniform_real_distribution<double> um(1e-3, 16.0);
    double mu = um(rng);
    double phi = g.support(x - a);
    double phim = smooth_value(g, x, a, mu);
    double width = 0.5 * mu * g.norm_bound() * g.norm_bound();
    c.below(phim - phi, 1e-12);
    c.below(phi - (phim + width), 1e-12);
    // smaller mu is a tighter underestimate
    double mu2 = mu * 2.0;
    c.below(smooth_value(g, x, a, mu2) - phim, 1e-12);
  }
  return c.res;
}

// Random small instance for the model suites.
struct Inst {
  Matrix data;
  int k;
  Gauge gauge;
  double lambda, mu;
};

Inst rand_inst(Rng& rng, int max_m = 20, int max_n = 5, int max_k = 4) {
  int n = 1 + int(rng() % max_n);
  int k = 1 + int(rng() % max_k);
  int m = k + 2 + int(rng() % max_m);
  std::uniform_real_distribution<double> ul(0.01, 5.0), um(0.05, 16.0);
  return {rand_mat(rng, m, n, 5.0), k, rand_gauge(rng, n), ul(rng), um(rng)};
}

SuiteResult suite_gradients(Rng& rng) {
  Check c("gradients");
  const double h = 1e-6;
  for (int it = 0; it < 500; ++it) {
    Inst in = rand_inst(rng, 10, 3, 3);
    Matrix X = rand_mat(rng, in.k, int(in.data.cols()), 5.0);
    Matrix V = rand_mat(rng, in.k, int(in.data.cols()), 1.0);
    V /= V.norm();
    if (it % 2 == 0) {
      Model1Problem p(in.data, in.k, in.gauge, in.lambda, in.mu);
      double fd = (p.g_mu_value(X + h * V) - p.g_mu_value(X - h * V)) / (2 * h);
      double an = (p.g_mu_gradient(X).array() * V.array()).sum();
      c.below(std::abs(fd - an) / std::max(1.0, std::abs(an)), 1e-6);
      double fdh = (p.h1_mu_value(X + h * V) - p.h1_mu_value(X - h * V)) / (2 * h);
      double anh = (p.h1_mu_gradient(X).array() * V.array()).sum();
      c.below(std::abs(fdh - anh) / std::max(1.0, std::abs(anh)), 1e-6);
    } else {
      Model2Problem p(in.data, in.k, in.gauge, in.lambda, in.mu);
      Matrix X2 = rand_mat(rng, in.k + 1, int(in.data.cols()), 5.0);
      Matrix V2 = rand_mat(rng, in.k + 1, int(in.data.cols()), 1.0);
      V2 /= V2.norm();
      double fd = (p.g_mu_value(X2 + h * V2) - p.g_mu_value(X2 - h * V2)) / (2 * h);
      double an = (p.g_mu_gradient(X2).array() * V2.array()).sum();
      c.below(std::abs(fd - an) / std::max(1.0, std::abs(an)), 1e-6);
      double fdh = (p.h12_mu_value(X2 + h * V2) - p.h12_mu_value(X2 - h * V2)) / (2 * h);
      double anh = (p.h12_mu_gradient(X2).array() * V2.array()).sum();
      c.below(std::abs(fdh - anh) / std::max(1.0, std::abs(anh)), 1e-6);
    }
  }
  return c.res;
}

SuiteResult suite_sandwich(Rng& rng) {
  Check c("sandwich");
  for (int it = 0; it < 1000; ++it) {
    Inst in = rand_inst(rng);
    double B2 = in.gauge.norm_bound() * in.gauge.norm_bound();
    if (it % 2 == 0) {
      Model1Problem p(in.data, in.k, in.gauge, in.lambda, in.mu);
      Matrix X = rand_mat(rng, in.k, int(in.data.cols()), 5.0);
      double f = p.exact_objective(X), fm = p.smoothed_objective(X);
      double width = double(p.m()) * in.k * (1.0 + in.lambda / 2.0) * in.mu * B2;
      double scale = std::max(1.0, std::abs(f));
      c.below((fm - f) / scale, 1e-9);
      c.below((f - (fm + width)) / scale, 1e-9);
    } else {
      Model2Problem p(in.data, in.k, in.gauge, in.lambda, in.mu);
      Matrix X = rand_mat(rng, in.k + 1, int(in.data.cols()), 5.0);
      double f = p.exact_objective(X), fm = p.smoothed_objective(X);
      int K = in.k + 1;
      double width =
          (double(p.m()) * K * (1.0 + in.lambda) / 2.0 + double(K) * K / 2.0) * in.mu * B2;
      double scale = std::max(1.0, std::abs(f));
      c.below((fm - f) / scale, 1e-9);
      c.below((f - (fm + width)) / scale, 1e-9);
    }
  }
  return c.res;
}

SuiteResult suite_dc_identity(Rng& rng) {
  Check c("dc-identity");
  for (int it = 0; it < 500; ++it) {
    Inst in = rand_inst(rng);
    Model1Problem p(in.data, in.k, in.gauge, in.lambda, in.mu);
    Matrix X = rand_mat(rng, in.k, int(in.data.cols()), 5.0);
    auto [g0, h0] = p.dc_exact_parts(X);
    double f = p.exact_objective(X);
    c.below(std::abs(g0 - h0 - f) / std::max(1.0, std::abs(f)), 1e-9);
  }
  return c.res;
}

SuiteResult suite_subgradient(Rng& rng) {
  Check c("subgradient");
  for (int it = 0; it < 500; ++it) {
    Inst in = rand_inst(rng);
    if (it % 2 == 0) {
      Model1Problem p(in.data, in.k, in.gauge, in.lambda, in.mu);
      Matrix X = rand_mat(rng, in.k, int(in.data.cols()), 5.0);
      Matrix Z = rand_mat(rng, in.k, int(in.data.cols()), 5.0);
      Matrix Y = p.h_mu_subgradient(X);
      double lhs = p.h_mu_value(Z);
      double rhs = p.h_mu_value(X) + (Y.array() * (Z - X).array()).sum();
      c.below((rhs - lhs) / std::max(1.0, std::abs(lhs)), 1e-9);
    } else {
      Model2Problem p(in.data, in.k, in.gauge, in.lambda, in.mu);
      Matrix X = rand_mat(rng, in.k + 1, int(in.data.cols()), 5.0);
      Matrix Z = rand_mat(rng, in.k + 1, int(in.data.cols()), 5.0);
      Matrix Y = p.h_mu_subgradient(X);
      double lhs = p.h_mu_value(Z);
      double rhs = p.h_mu_value(X) + (Y.array() * (Z - X).array()).sum();
      c.below((rhs - lhs) / std::max(1.0, std::abs(lhs)), 1e-9);
    }
  }
  return c.res;
}

SuiteResult suite_lemma51(Rng& rng) {
  Check c("lemma51");
  std::uniform_real_distribution<double> u(0.2, 5.0);
  for (int it = 0; it < 200; ++it) {
    int k = 1 + int(rng() % 6);
    int K = k + 1;
    double a = u(rng), b = u(rng) * (rng() % 2 ? 1.0 : -0.1);
    auto [x, y] = invert_aI_plus_bE(a, b, k);
    Matrix E = Matrix::Ones(K, K), I = Matrix::Identity(K, K);
    Matrix R = (a * I + b * E) * (x * I + y * E) - I;
    c.below(R.cwiseAbs().maxCoeff(), 1e-12);

    double cc = u(rng), d = u(rng);
    auto [al, be] = invert_cI_plus_dEtilde(cc, d, k);
    Matrix Et = double(K) * I - E;
    Matrix R2 = (cc * I + d * Et) * (al * I + be * E) - I;
    c.below(R2.cwiseAbs().maxCoeff(), 1e-12);
  }
  return c.res;
}

SuiteResult suite_conjugate(Rng& rng) {
  Check c("conjugate");
  for (int it = 0; it < 300; ++it) {
    Inst in = rand_inst(rng);
    if (it % 2 == 0) {
      Model1Problem p(in.data, in.k, in.gauge, in.lambda, in.mu);
      Matrix Y = rand_mat(rng, in.k, int(in.data.cols()), 5.0);
      Matrix X = p.conjugate_step(Y);
      c.below((p.g_mu_gradient(X) - Y).norm(), 1e-10);
      // inverse relation
      Matrix X0 = rand_mat(rng, in.k, int(in.data.cols()), 5.0);
      c.below((p.conjugate_step(p.g_mu_gradient(X0)) - X0).norm(), 1e-10);
    } else {
      Model2Problem p(in.data, in.k, in.gauge, in.lambda, in.mu);
      Matrix Y = rand_mat(rng, in.k + 1, int(in.data.cols()), 5.0);
      Matrix X = p.conjugate_step(Y);
      c.below((p.g_mu_gradient(X) - Y).norm(), 1e-10);
      Matrix X0 = rand_mat(rng, in.k + 1, int(in.data.cols()), 5.0);
      c.below((p.conjugate_step(p.g_mu_gradient(X0)) - X0).norm(), 1e-10);
    }
  }
  return c.res;
}

SuiteResult suite_monotonicity(Rng& rng) {
  Check c("monotonicity");
  for (int it = 0; it < 60; ++it) {
    Inst in = rand_inst(rng, 15, 3, 3);
    Matrix X0 = rand_mat(rng, it % 2 == 0 ? in.k : in.k + 1, int(in.data.cols()), 5.0);
    std::vector<double> trace;
    if (it % 2 == 0) {
      Model1Problem p(in.data, in.k, in.gauge, in.lambda, in.mu);
      trace = dca_inner(p, X0, 100, 1e-8).f_mu_trace;
    } else {
      Model2Problem p(in.data, in.k, in.gauge, in.lambda, in.mu);
      trace = dca_inner(p, X0, 100, 1e-8).f_mu_trace;
    }
    double worst = 0.0;
    for (size_t j = 1; j < trace.size(); ++j)
      worst = std::max(worst, trace[j] - trace[j - 1]);
    c.below(worst, 1e-9);
  }
  return c.res;
}

}  // namespace

std::vector<std::string> all_suite_names() {
  return {"gauges",      "smoothing", "gradients", "sandwich",    "dc-identity",
          "subgradient", "lemma51",   "conjugate", "monotonicity"};
}

std::vector<SuiteResult> run_verification(const std::vector<std::string>& suites,
                                          std::uint64_t seed) {
  std::vector<std::string> wanted = suites.empty() ? all_suite_names() : suites;
  std::vector<SuiteResult> out;
  for (const auto& name : wanted) {
    Rng rng(seed ^ std::hash<std::string>{}(name));
    if (name == "gauges") out.push_back(suite_gauges(rng));
    else if (name == "smoothing") out.push_back(suite_smoothing(rng));
    else if (name == "gradients") out.push_back(suite_gradients(rng));
    else if (name == "sandwich") out.push_back(suite_sandwich(rng));
    else if (name == "dc-identity") out.push_back(suite_dc_identity(rng));
    else if (name == "subgradient") out.push_back(suite_subgradient(rng));
    else if (name == "lemma51") out.push_back(suite_lemma51(rng));
    else if (name == "conjugate") out.push_back(suite_conjugate(rng));
    else if (name == "monotonicity") out.push_back(suite_monotonicity(rng));
    else throw std::invalid_argument("unknown suite: " + name);
  }
  return out;
}

}  // namespace bhc
