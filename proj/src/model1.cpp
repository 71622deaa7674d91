#include "bhc/model1.hpp"

#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bhc {

namespace {
inline int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}
inline int thread_id() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}
// Smallest-index argmin.
inline int argmin(const Vector& v) {
  int best = 0;
  for (int i = 1; i < v.size(); ++i)
    if (v[i] < v[best]) best = i;
  return best;
}
}  // namespace

Model1Problem::Model1Problem(Matrix data_, int k_, Gauge gauge_, double lambda_,
                             double mu_)
    : data(std::move(data_)), k(k_), gauge(std::move(gauge_)), lambda(lambda_), mu(mu_) {
  if (data.rows() < 1) throw std::invalid_argument("Model1Problem: empty dataset");
  if (k < 1 || k > data.rows())
    throw std::invalid_argument("Model1Problem: need 1 <= k <= m");
  if (gauge.dim() != data.cols())
    throw std::invalid_argument("Model1Problem: gauge dimension mismatch");
  if (!(lambda > 0.0) || !(mu > 0.0))
    throw std::invalid_argument("Model1Problem: lambda and mu must be positive");
  data_colsum_ = data.colwise().sum().transpose();
}

void Model1Problem::check_shape(const Matrix& X, int expected_rows) const {
  if (X.rows() != expected_rows || X.cols() != data.cols())
    throw std::invalid_argument("Model1Problem: center matrix shape mismatch");
}

Matrix Model1Problem::sigma_matrix(const Matrix& X) const {
  check_shape(X, k);
  const int mm = m();
  Matrix S(k, mm);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < mm; ++i) {
    Vector a = data.row(i).transpose();
    for (int l = 0; l < k; ++l)
      S(l, i) = gauge.support(X.row(l).transpose() - a);
  }
  return S;
}

double Model1Problem::exact_objective(const Matrix& X) const {
  Matrix S = sigma_matrix(X);
  double clustering = 0.0;
  for (int i = 0; i < S.cols(); ++i) clustering += S.col(i).minCoeff();
  Vector colsum = S.colwise().sum().transpose();
  double total_term = colsum.minCoeff();
  double penalty = 0.0;
  for (int l = 0; l < k; ++l) penalty += S.row(l).minCoeff();
  return clustering + total_term + lambda * penalty;
}

std::pair<double, double> Model1Problem::dc_exact_parts(const Matrix& X) const {
  Matrix S = sigma_matrix(X);
  const double total = S.sum();
  const double g0 = (2.0 + lambda) * total;
  Vector colsum = S.colwise().sum().transpose();
  double h0 = 0.0;
  for (int i = 0; i < S.cols(); ++i) h0 += colsum[i] - S.col(i).minCoeff();
  for (int l = 0; l < k; ++l) h0 += lambda * (S.row(l).sum() - S.row(l).minCoeff());
  h0 += total - colsum.minCoeff();
  return {g0, h0};
}

double Model1Problem::g_mu_value(const Matrix& X) const {
  check_shape(X, k);
  const int mm = m();
  Vector per_i(mm);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < mm; ++i) {
    Vector a = data.row(i).transpose();
    double s = 0.0;
    for (int l = 0; l < k; ++l) s += (X.row(l).transpose() - a).squaredNorm();
    per_i[i] = s;
  }
  return (2.0 + lambda) / (2.0 * mu) * per_i.sum();
}

Matrix Model1Problem::g_mu_gradient(const Matrix& X) const {
  check_shape(X, k);
  Matrix G = double(m()) * X;
  G.rowwise() -= data_colsum_.transpose();
  return (2.0 + lambda) / mu * G;
}

double Model1Problem::h1_mu_value(const Matrix& X) const {
  check_shape(X, k);
  const int mm = m();
  Vector per_i(mm);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < mm; ++i) {
    Vector a = data.row(i).transpose();
    double s = 0.0;
    for (int l = 0; l < k; ++l)
      s += gauge.distance_sq((X.row(l).transpose() - a) / mu);
    per_i[i] = s;
  }
  return (2.0 + lambda) * mu / 2.0 * per_i.sum();
}

Matrix Model1Problem::h1_mu_gradient(const Matrix& X) const {
  check_shape(X, k);
  const int mm = m(), nn = n();
  const int nth = thread_count();
  std::vector<Matrix> Gp(nth, Matrix::Zero(k, nn));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < mm; ++i) {
    const int t = thread_id();
    Vector a = data.row(i).transpose();
    for (int l = 0; l < k; ++l) {
      Vector z = (X.row(l).transpose() - a) / mu;
      Gp[t].row(l) += (z - gauge.project(z)).transpose();
    }
  }
  Matrix G = Matrix::Zero(k, nn);
  for (int t = 0; t < nth; ++t) G += Gp[t];
  return (2.0 + lambda) * G;
}

double Model1Problem::h_mu_value(const Matrix& X) const {
  Matrix S = sigma_matrix(X);
  Vector colsum = S.colwise().sum().transpose();
  double h2 = 0.0;
  for (int i = 0; i < S.cols(); ++i) h2 += colsum[i] - S.col(i).minCoeff();
  double h3 = 0.0;
  for (int l = 0; l < k; ++l) h3 += S.row(l).sum() - S.row(l).minCoeff();
  double h4 = S.sum() - colsum.minCoeff();
  return h1_mu_value(X) + h2 + lambda * h3 + h4;
}

double Model1Problem::smoothed_objective(const Matrix& X) const {
  return g_mu_value(X) - h_mu_value(X);
}

Matrix Model1Problem::h_mu_subgradient(const Matrix& X) const {
  const int mm = m(), nn = n();
  Matrix S = sigma_matrix(X);

  // Active indices of the three max terms (smallest index on ties).
  std::vector<int> t_i(mm);  // h2: per node, the zeroed center row
  for (int i = 0; i < mm; ++i) t_i[i] = argmin(S.col(i));
  std::vector<int> t_l(k);  // h3: per center, the dropped node
  for (int l = 0; l < k; ++l) t_l[l] = argmin(S.row(l).transpose());
  Vector colsum = S.colwise().sum().transpose();
  const int t_glob = argmin(colsum);  // h4

  const int nth = thread_count();
  std::vector<Matrix> Y1p(nth, Matrix::Zero(k, nn));
  std::vector<Matrix> Y2p(nth, Matrix::Zero(k, nn));
  std::vector<Matrix> Up(nth, Matrix::Zero(k, nn));  // row l: sum_i u_{l i}
#pragma omp parallel for schedule(static)
  for (int i = 0; i < mm; ++i) {
    const int t = thread_id();
    Vector a = data.row(i).transpose();
    for (int l = 0; l < k; ++l) {
      Vector x = X.row(l).transpose();
      Vector z = (x - a) / mu;
      Y1p[t].row(l) += (z - gauge.project(z)).transpose();
      Vector u = gauge.subgradient(x, a);
      Up[t].row(l) += u.transpose();
      if (l != t_i[i]) Y2p[t].row(l) += u.transpose();
    }
  }
  Matrix Y1 = Matrix::Zero(k, nn), Y2 = Matrix::Zero(k, nn), Usum = Matrix::Zero(k, nn);
  for (int t = 0; t < nth; ++t) {
    Y1 += Y1p[t];
    Y2 += Y2p[t];
    Usum += Up[t];
  }
  Y1 *= (2.0 + lambda);

  Matrix Y3(k, nn), Y4(k, nn);
  for (int l = 0; l < k; ++l) {
    Vector x = X.row(l).transpose();
    Y3.row(l) = lambda * (Usum.row(l) -
                          gauge.subgradient(x, data.row(t_l[l]).transpose()).transpose());
    Y4.row(l) = Usum.row(l) -
                gauge.subgradient(x, data.row(t_glob).transpose()).transpose();
  }
  return Y1 + Y2 + Y3 + Y4;
}

Matrix Model1Problem::conjugate_step(const Matrix& Y) const {
  check_shape(Y, k);
  const double c = 2.0 + lambda;
  Matrix X = mu * Y;
  X.rowwise() += c * data_colsum_.transpose();
  return X / (c * double(m()));
}

int Model1Problem::total_center(const Matrix& X) const {
  Matrix S = sigma_matrix(X);
  Vector colsum = S.colwise().sum().transpose();
  return argmin(colsum);
}

double Model1Problem::unpenalized_objective(const Matrix& X) const {
  Matrix S = sigma_matrix(X);
  double clustering = 0.0;
  for (int i = 0; i < S.cols(); ++i) clustering += S.col(i).minCoeff();
  Vector colsum = S.colwise().sum().transpose();
  return clustering + colsum.minCoeff();
}

}  // namespace bhc
