#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bhc/model2.hpp"

using namespace bhc;

namespace {

Matrix rand_mat(std::mt19937_64& rng, int r, int c, double scale = 5.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Matrix M(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) M(i, j) = u(rng);
  return M;
}

Model2Problem rand_problem(std::mt19937_64& rng) {
  int n = 1 + int(rng() % 5);
  int k = 1 + int(rng() % 4);
  int m = k + 2 + int(rng() % 20);
  std::uniform_real_distribution<double> ul(0.01, 5.0), um(0.05, 16.0);
  Gauge g(rng() % 2 ? GaugeKind::EuclideanBall : GaugeKind::UnitBox, n);
  return Model2Problem(rand_mat(rng, m, n), k, g, ul(rng), um(rng));
}

}  // namespace

TEST_CASE("exact objective hand instances") {
  Gauge ball(GaugeKind::EuclideanBall, 2);
  Matrix single(1, 2);
  single << 3, -1;
  // k+1 = 1 center on the only node
  CHECK(Model2Problem(single, 0, ball, 1.0, 1.0).rows() == 1);

  Matrix A(2, 2);
  A << 0, 0, 2, 0;
  Model2Problem p(A, 1, ball, 1.0, 1.0);
  // centers on both nodes: clustering 0, linkage min(2,2), penalty 0
  CHECK(p.exact_objective(A) == doctest::Approx(2.0));
}

TEST_CASE("lemma inverses") {
  auto [x0, y0] = invert_aI_plus_bE(1.0, 0.0, 3);
  CHECK(x0 == 1.0);
  CHECK(y0 == 0.0);
  auto [x1, y1] = invert_aI_plus_bE(2.0, 1.0, 1);
  CHECK(x1 == doctest::Approx(0.5));
  CHECK(y1 == doctest::Approx(-0.125));
  CHECK_THROWS_AS(invert_aI_plus_bE(0.0, 1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(invert_aI_plus_bE(3.0, -1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(invert_cI_plus_dEtilde(0.0, 1.0, 2), std::invalid_argument);

  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.2, 5.0);
  for (int it = 0; it < 200; ++it) {
    int k = 1 + int(rng() % 6), K = k + 1;
    double a = u(rng), b = u(rng);
    auto [x, y] = invert_aI_plus_bE(a, b, k);
    Matrix E = Matrix::Ones(K, K), I = Matrix::Identity(K, K);
    CHECK(((a * I + b * E) * (x * I + y * E) - I).cwiseAbs().maxCoeff() < 1e-12);
    double c = u(rng), d = u(rng);
    auto [al, be] = invert_cI_plus_dEtilde(c, d, k);
    Matrix Et = double(K) * I - E;
    CHECK(((c * I + d * Et) * (al * I + be * E) - I).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("conjugate step") {
  std::mt19937_64 rng(32);
  for (int it = 0; it < 200; ++it) {
    Model2Problem p = rand_problem(rng);
    // Y = 0 -> every row is the data centroid (E-kernel of g2)
    Matrix X0 = p.conjugate_step(Matrix::Zero(p.rows(), p.n()));
    Matrix C = p.data.colwise().mean().replicate(p.rows(), 1);
    CHECK((X0 - C).norm() < 1e-9);
    Matrix X = rand_mat(rng, p.rows(), p.n());
    CHECK((p.conjugate_step(p.g_mu_gradient(X)) - X).norm() < 1e-9);
    Matrix Y = rand_mat(rng, p.rows(), p.n());
    CHECK((p.g_mu_gradient(p.conjugate_step(Y)) - Y).norm() < 1e-9);
  }
}

TEST_CASE("g_mu gradient matches finite differences") {
  std::mt19937_64 rng(33);
  const double h = 1e-6;
  for (int it = 0; it < 100; ++it) {
    Model2Problem p = rand_problem(rng);
    Matrix X = rand_mat(rng, p.rows(), p.n());
    Matrix V = rand_mat(rng, p.rows(), p.n(), 1.0);
    V /= V.norm();
    double fd = (p.g_mu_value(X + h * V) - p.g_mu_value(X - h * V)) / (2 * h);
    double an = (p.g_mu_gradient(X).array() * V.array()).sum();
    CHECK(std::abs(fd - an) / std::max(1.0, std::abs(an)) < 1e-6);
  }
}

TEST_CASE("smooth h parts match finite differences") {
  std::mt19937_64 rng(34);
  const double h = 1e-6;
  for (int it = 0; it < 100; ++it) {
    Model2Problem p = rand_problem(rng);
    Matrix X = rand_mat(rng, p.rows(), p.n());
    Matrix V = rand_mat(rng, p.rows(), p.n(), 1.0);
    V /= V.norm();
    double fd = (p.h12_mu_value(X + h * V) - p.h12_mu_value(X - h * V)) / (2 * h);
    double an = (p.h12_mu_gradient(X).array() * V.array()).sum();
    CHECK(std::abs(fd - an) / std::max(1.0, std::abs(an)) < 1e-6);
  }
}

TEST_CASE("identical rows zero the linkage terms") {
  std::mt19937_64 rng(35);
  for (int it = 0; it < 50; ++it) {
    Model2Problem p = rand_problem(rng);
    Matrix X = rand_mat(rng, 1, p.n()).replicate(p.rows(), 1);
    // h2 gradient vanishes, so h12 gradient reduces to the h1 part
    Matrix H1 = Matrix::Zero(p.rows(), p.n());
    for (int i = 0; i < p.m(); ++i) {
      Vector a = p.data.row(i).transpose();
      for (int l = 0; l < p.rows(); ++l) {
        Vector z = (X.row(l).transpose() - a) / p.mu;
        H1.row(l) += (1.0 + p.lambda) * (z - p.gauge.project(z)).transpose();
      }
    }
    CHECK((p.h12_mu_gradient(X) - H1).norm() < 1e-12);
    CHECK(p.link_matrix(X).norm() == 0.0);
  }
}

TEST_CASE("h subgradient inequality") {
  std::mt19937_64 rng(36);
  for (int it = 0; it < 500; ++it) {
    Model2Problem p = rand_problem(rng);
    Matrix X = rand_mat(rng, p.rows(), p.n()), Z = rand_mat(rng, p.rows(), p.n());
    Matrix Y = p.h_mu_subgradient(X);
    double lhs = p.h_mu_value(Z);
    double rhs = p.h_mu_value(X) + (Y.array() * (Z - X).array()).sum();
    CHECK(rhs <= lhs + 1e-9 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("sandwich bound with derived constant") {
  std::mt19937_64 rng(37);
  for (int it = 0; it < 300; ++it) {
    Model2Problem p = rand_problem(rng);
    Matrix X = rand_mat(rng, p.rows(), p.n());
    double f = p.exact_objective(X), fm = p.smoothed_objective(X);
    int K = p.rows();
    double width = (double(p.m()) * K * (1.0 + p.lambda) / 2.0 + double(K) * K / 2.0) *
                   p.mu * p.gauge.norm_bound() * p.gauge.norm_bound();
    double tol = 1e-9 * std::max(1.0, std::abs(f));
    CHECK(fm <= f + tol);
    CHECK(f <= fm + width + tol);
  }
}

TEST_CASE("total center selection") {
  Gauge ball(GaugeKind::EuclideanBall, 2);
  Matrix A(6, 2);
  A << 0, 0, 1, 0, 2, 0, 0, 5, 1, 5, 2, 5;
  Model2Problem p(A, 2, ball, 1.0, 1.0);
  // collinear, equally spaced centers: middle row wins
  Matrix X(3, 2);
  X << 0, 0, 1, 0, 2, 0;
  CHECK(p.total_center(X) == 1);
  // mirror-symmetric rows around the middle one
  Matrix Xs(3, 2);
  Xs << -3, 1, 0, 0, 3, -1;
  CHECK(p.total_center(Xs) == 1);
}
