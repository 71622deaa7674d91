#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bhc/model1.hpp"
#include "bhc/oracle.hpp"

using namespace bhc;

namespace {

Matrix two_nodes() {
  Matrix A(2, 2);
  A << 0, 0, 2, 0;
  return A;
}

Matrix rand_mat(std::mt19937_64& rng, int r, int c, double scale = 5.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Matrix M(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) M(i, j) = u(rng);
  return M;
}

Model1Problem rand_problem(std::mt19937_64& rng) {
  int n = 1 + int(rng() % 5);
  int k = 1 + int(rng() % 4);
  int m = k + 1 + int(rng() % 20);
  std::uniform_real_distribution<double> ul(0.01, 5.0), um(0.05, 16.0);
  Gauge g(rng() % 2 ? GaugeKind::EuclideanBall : GaugeKind::UnitBox, n);
  return Model1Problem(rand_mat(rng, m, n), k, g, ul(rng), um(rng));
}

}  // namespace

TEST_CASE("exact objective hand instances") {
  Gauge ball(GaugeKind::EuclideanBall, 2);
  Matrix A(1, 2);
  A << 3, 4;
  Model1Problem trivial(A, 1, ball, 2.5, 1.0);
  CHECK(trivial.exact_objective(A) == 0.0);

  Model1Problem p(two_nodes(), 1, ball, 1.0, 1.0);
  Matrix X(1, 2);
  X << 1, 0;
  // clustering 1+1, total-center term 1, penalty 1*1
  CHECK(p.exact_objective(X) == doctest::Approx(4.0));
}

TEST_CASE("constructor validation") {
  Gauge ball(GaugeKind::EuclideanBall, 2);
  CHECK_THROWS_AS(Model1Problem(two_nodes(), 0, ball, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Model1Problem(two_nodes(), 3, ball, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Model1Problem(two_nodes(), 1, ball, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Model1Problem(two_nodes(), 1, ball, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Model1Problem(two_nodes(), 1, Gauge(GaugeKind::EuclideanBall, 3), 1.0,
                                1.0),
                  std::invalid_argument);
  Model1Problem p(two_nodes(), 1, ball, 1.0, 1.0);
  CHECK_THROWS_AS(p.exact_objective(Matrix::Zero(2, 2)), std::invalid_argument);
}

TEST_CASE("DC identity") {
  // centers on nodes with k = m
  Gauge ball(GaugeKind::EuclideanBall, 2);
  Model1Problem onto(two_nodes(), 2, ball, 0.7, 1.0);
  auto [g0, h0] = onto.dc_exact_parts(two_nodes());
  CHECK(g0 - h0 == doctest::Approx(onto.exact_objective(two_nodes())).epsilon(1e-12));

  std::mt19937_64 rng(21);
  for (int it = 0; it < 300; ++it) {
    Model1Problem p = rand_problem(rng);
    Matrix X = rand_mat(rng, p.k, p.n());
    auto [g, h] = p.dc_exact_parts(X);
    double f = p.exact_objective(X);
    CHECK(std::abs(g - h - f) <= 1e-9 * std::max(1.0, std::abs(f)));
  }
}

TEST_CASE("g_mu gradient formula") {
  Gauge ball(GaugeKind::EuclideanBall, 2);
  Model1Problem p(two_nodes(), 1, ball, 0.01, 16.0);
  Matrix X = Matrix::Zero(1, 2);
  Matrix G = p.g_mu_gradient(X);
  CHECK(G(0, 0) == doctest::Approx(-0.25125));
  CHECK(G(0, 1) == doctest::Approx(0.0));

  // rows at the data centroid: m X = E A
  std::mt19937_64 rng(22);
  Model1Problem q = rand_problem(rng);
  Matrix C = q.data.colwise().mean().replicate(q.k, 1);
  CHECK(q.g_mu_gradient(C).norm() < 1e-10);
}

TEST_CASE("conjugate step") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 200; ++it) {
    Model1Problem p = rand_problem(rng);
    // Y = 0 -> every row is the data centroid
    Matrix X0 = p.conjugate_step(Matrix::Zero(p.k, p.n()));
    Matrix C = p.data.colwise().mean().replicate(p.k, 1);
    CHECK((X0 - C).norm() < 1e-10);
    // inverse relation and round trip
    Matrix X = rand_mat(rng, p.k, p.n());
    CHECK((p.conjugate_step(p.g_mu_gradient(X)) - X).norm() < 1e-10);
    Matrix Y = rand_mat(rng, p.k, p.n());
    CHECK((p.g_mu_gradient(p.conjugate_step(Y)) - Y).norm() < 1e-10);
  }
}

TEST_CASE("degenerate subgradient m=1 k=1 is the smooth part") {
  Matrix A(1, 2);
  A << 1, 2;
  for (GaugeKind kind : {GaugeKind::EuclideanBall, GaugeKind::UnitBox}) {
    Model1Problem p(A, 1, Gauge(kind, 2), 0.3, 0.7);
    Matrix X(1, 2);
    X << 4, -1;
    CHECK((p.h_mu_subgradient(X) - p.h1_mu_gradient(X)).norm() < 1e-14);
  }
}

TEST_CASE("h subgradient inequality") {
  std::mt19937_64 rng(24);
  for (int it = 0; it < 500; ++it) {
    Model1Problem p = rand_problem(rng);
    Matrix X = rand_mat(rng, p.k, p.n()), Z = rand_mat(rng, p.k, p.n());
    Matrix Y = p.h_mu_subgradient(X);
    double lhs = p.h_mu_value(Z);
    double rhs = p.h_mu_value(X) + (Y.array() * (Z - X).array()).sum();
    CHECK(rhs <= lhs + 1e-9 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("h1 gradient matches finite differences") {
  std::mt19937_64 rng(25);
  const double h = 1e-6;
  for (int it = 0; it < 100; ++it) {
    Model1Problem p = rand_problem(rng);
    Matrix X = rand_mat(rng, p.k, p.n());
    Matrix V = rand_mat(rng, p.k, p.n(), 1.0);
    V /= V.norm();
    double fd = (p.h1_mu_value(X + h * V) - p.h1_mu_value(X - h * V)) / (2 * h);
    double an = (p.h1_mu_gradient(X).array() * V.array()).sum();
    CHECK(std::abs(fd - an) / std::max(1.0, std::abs(an)) < 1e-6);
  }
}

TEST_CASE("sandwich bound") {
  std::mt19937_64 rng(26);
  for (int it = 0; it < 300; ++it) {
    Model1Problem p = rand_problem(rng);
    Matrix X = rand_mat(rng, p.k, p.n());
    double f = p.exact_objective(X), fm = p.smoothed_objective(X);
    double width = double(p.m()) * p.k * (1.0 + p.lambda / 2.0) * p.mu *
                   p.gauge.norm_bound() * p.gauge.norm_bound();
    double tol = 1e-9 * std::max(1.0, std::abs(f));
    CHECK(fm <= f + tol);
    CHECK(f <= fm + width + tol);
  }
}

TEST_CASE("total center") {
  Gauge ball(GaugeKind::EuclideanBall, 2);
  Matrix A(4, 2);
  A << 0, 0, 10, 0, 10, 1, 3, 3;
  Model1Problem p(A, 1, ball, 1.0, 1.0);
  Matrix X(1, 2);
  X << 10, 1;
  CHECK(p.total_center(X) == 2);  // center sits on node 2
  // equidistant tie -> smaller index
  Matrix B(2, 2);
  B << -1, 0, 1, 0;
  Model1Problem q(B, 1, ball, 1.0, 1.0);
  Matrix X0 = Matrix::Zero(1, 2);
  CHECK(q.total_center(X0) == 0);
}

TEST_CASE("exact objective at node-snapped centers matches discrete cost") {
  // Centers on nodes kill the penalty; the total center's own clustering
  // edge accounts for the remaining gap.
  std::mt19937_64 rng(27);
  for (int it = 0; it < 100; ++it) {
    int k = 1 + int(rng() % 3);
    int m = k + 2 + int(rng() % 10);
    Matrix A = rand_mat(rng, m, 2);
    Gauge g(it % 2 ? GaugeKind::EuclideanBall : GaugeKind::UnitBox, 2);
    std::vector<int> idx;
    for (int i = 0; i < k; ++i) idx.push_back(i * 2);  // distinct node indices
    Matrix X(k, 2);
    for (int i = 0; i < k; ++i) X.row(i) = A.row(idx[i]);
    Model1Problem p(A, k, g, 3.0, 1.0);
    DiscreteCost dc = discrete_cost_model1(A, idx, g);
    double gap = p.sigma_matrix(X).col(dc.total_center).minCoeff();
    CHECK(p.exact_objective(X) ==
          doctest::Approx(dc.cost + gap).epsilon(1e-9));
    CHECK(p.total_center(X) == dc.total_center);
  }
}

TEST_CASE("active row of the h2 selector is zeroed") {
  // ball, k=2, m=3, distinct distances: the subgradient with the h2 part
  // removed differs from the full one exactly by the u-sums of inactive rows.
  Gauge ball(GaugeKind::EuclideanBall, 2);
  Matrix A(3, 2);
  A << 0, 0, 5, 0, 0, 7;
  Model1Problem p(A, 2, ball, 1.0, 1.0);
  Matrix X(2, 2);
  X << 0.5, 0.1, 4.0, 0.2;
  Matrix S = p.sigma_matrix(X);
  // each node's nearest center (active index) contributes nothing to h2
  Matrix Y = p.h_mu_subgradient(X);
  Matrix expected = p.h1_mu_gradient(X);
  for (int i = 0; i < 3; ++i) {
    int ti = S(0, i) <= S(1, i) ? 0 : 1;
    for (int l = 0; l < 2; ++l) {
      Vector u = ball.subgradient(X.row(l).transpose(), A.row(i).transpose());
      if (l != ti) expected.row(l) += u.transpose();  // h2
      expected.row(l) += u.transpose();               // h4 sum part
    }
  }
  // h3: per center drop the nearest node; h4: subtract the global column
  Vector colsum = S.colwise().sum().transpose();
  int tg = colsum[0] <= colsum[1] && colsum[0] <= colsum[2]
               ? 0
               : (colsum[1] <= colsum[2] ? 1 : 2);
  for (int l = 0; l < 2; ++l) {
    int tl = 0;
    for (int i = 1; i < 3; ++i)
      if (S(l, i) < S(l, tl)) tl = i;
    Vector x = X.row(l).transpose();
    for (int i = 0; i < 3; ++i) {
      Vector u = ball.subgradient(x, A.row(i).transpose());
      if (i != tl) expected.row(l) += u.transpose();  // lambda = 1
    }
    expected.row(l) -= ball.subgradient(x, A.row(tg).transpose()).transpose();
  }
  CHECK((Y - expected).norm() < 1e-12);
}
