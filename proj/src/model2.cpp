#include "bhc/model2.hpp"

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
inline int argmin(const Vector& v) {
  int best = 0;
  for (int i = 1; i < v.size(); ++i)
    if (v[i] < v[best]) best = i;
  return best;
}
}  // namespace

std::pair<double, double> invert_aI_plus_bE(double a, double b, int k) {
  const double denom = a + b * double(k + 1);
  if (a == 0.0 || denom == 0.0)
    throw std::invalid_argument("invert_aI_plus_bE: singular parameters");
  return {1.0 / a, -b / (a * denom)};
}

std::pair<double, double> invert_cI_plus_dEtilde(double c, double d, int k) {
  const double denom = c + d * double(k + 1);
  if (c == 0.0 || denom == 0.0)
    throw std::invalid_argument("invert_cI_plus_dEtilde: singular parameters");
  return {1.0 / denom, d / (c * denom)};
}

Model2Problem::Model2Problem(Matrix data_, int k_, Gauge gauge_, double lambda_,
                             double mu_)
    : data(std::move(data_)), k(k_), gauge(std::move(gauge_)), lambda(lambda_), mu(mu_) {
  if (data.rows() < 1) throw std::invalid_argument("Model2Problem: empty dataset");
  if (k < 0 || k + 1 > data.rows())
    throw std::invalid_argument("Model2Problem: need 1 <= k+1 <= m");
  if (gauge.dim() != data.cols())
    throw std::invalid_argument("Model2Problem: gauge dimension mismatch");
  if (!(lambda > 0.0) || !(mu > 0.0))
    throw std::invalid_argument("Model2Problem: lambda and mu must be positive");
  data_colsum_ = data.colwise().sum().transpose();
}

void Model2Problem::check_shape(const Matrix& X) const {
  if (X.rows() != k + 1 || X.cols() != data.cols())
    throw std::invalid_argument("Model2Problem: center matrix shape mismatch");
}

Matrix Model2Problem::sigma_matrix(const Matrix& X) const {
  check_shape(X);
  const int K = k + 1, mm = m();
  Matrix S(K, mm);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < mm; ++i) {
    Vector a = data.row(i).transpose();
    for (int l = 0; l < K; ++l)
      S(l, i) = gauge.support(X.row(l).transpose() - a);
  }
  return S;
}

Matrix Model2Problem::link_matrix(const Matrix& X) const {
  check_shape(X);
  const int K = k + 1;
  Matrix L(K, K);
  for (int l = 0; l < K; ++l)
    for (int j = 0; j < K; ++j)
      L(l, j) = gauge.support(X.row(l).transpose() - X.row(j).transpose());
  return L;
}

double Model2Problem::exact_objective(const Matrix& X) const {
  Matrix S = sigma_matrix(X);
  Matrix L = link_matrix(X);
  double clustering = 0.0;
  for (int i = 0; i < S.cols(); ++i) clustering += S.col(i).minCoeff();
  double linkage = L.rowwise().sum().minCoeff();
  double penalty = 0.0;
  for (int l = 0; l < S.rows(); ++l) penalty += S.row(l).minCoeff();
  return clustering + linkage + lambda * penalty;
}

double Model2Problem::g_mu_value(const Matrix& X) const {
  check_shape(X);
  const int K = k + 1, mm = m();
  Vector per_i(mm);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < mm; ++i) {
    Vector a = data.row(i).transpose();
    double s = 0.0;
    for (int l = 0; l < K; ++l) s += (X.row(l).transpose() - a).squaredNorm();
    per_i[i] = s;
  }
  double g1 = (1.0 + lambda) / (2.0 * mu) * per_i.sum();
  double g2 = 0.0;
  for (int l = 0; l < K; ++l)
    for (int j = 0; j < K; ++j)
      g2 += (X.row(l) - X.row(j)).squaredNorm();
  return g1 + g2 / (2.0 * mu);
}

Matrix Model2Problem::g_mu_gradient(const Matrix& X) const {
  check_shape(X);
  const int K = k + 1;
  Matrix G1 = double(m()) * X;
  G1.rowwise() -= data_colsum_.transpose();
  G1 *= (1.0 + lambda) / mu;
  // (2/mu) * ((k+1) I - E) X
  Matrix G2 = double(K) * X;
  G2.rowwise() -= X.colwise().sum();
  G2 *= 2.0 / mu;
  return G1 + G2;
}

double Model2Problem::h12_mu_value(const Matrix& X) const {
  check_shape(X);
  const int K = k + 1, mm = m();
  Vector per_i(mm);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < mm; ++i) {
    Vector a = data.row(i).transpose();
    double s = 0.0;
    for (int l = 0; l < K; ++l)
      s += gauge.distance_sq((X.row(l).transpose() - a) / mu);
    per_i[i] = s;
  }
  double h1 = (1.0 + lambda) * mu / 2.0 * per_i.sum();
  double d2 = 0.0;
  for (int l = 0; l < K; ++l)
    for (int j = 0; j < K; ++j)
      d2 += gauge.distance_sq((X.row(l).transpose() - X.row(j).transpose()) / mu);
  return h1 + mu / 2.0 * d2;
}

Matrix Model2Problem::h12_mu_gradient(const Matrix& X) const {
  check_shape(X);
  const int K = k + 1, mm = m(), nn = n();
  const int nth = thread_count();
  std::vector<Matrix> Gp(nth, Matrix::Zero(K, nn));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < mm; ++i) {
    const int t = thread_id();
    Vector a = data.row(i).transpose();
    for (int l = 0; l < K; ++l) {
      Vector z = (X.row(l).transpose() - a) / mu;
      Gp[t].row(l) += (z - gauge.project(z)).transpose();
    }
  }
  Matrix G = Matrix::Zero(K, nn);
  for (int t = 0; t < nth; ++t) G += Gp[t];
  G *= (1.0 + lambda);
  for (int l = 0; l < K; ++l) {
    Vector x = X.row(l).transpose();
    for (int j = 0; j < K; ++j) {
      Vector z = (x - X.row(j).transpose()) / mu;
      G.row(l) += 2.0 * (z - gauge.project(z)).transpose();
    }
  }
  return G;
}

double Model2Problem::h_mu_value(const Matrix& X) const {
  Matrix S = sigma_matrix(X);
  Matrix L = link_matrix(X);
  Vector colsum = S.colwise().sum().transpose();
  double h3 = 0.0;
  for (int i = 0; i < S.cols(); ++i) h3 += colsum[i] - S.col(i).minCoeff();
  double h4 = 0.0;
  for (int l = 0; l < S.rows(); ++l) h4 += S.row(l).sum() - S.row(l).minCoeff();
  double h5 = L.sum() - L.rowwise().sum().minCoeff();
  return h12_mu_value(X) + h3 + lambda * h4 + h5;
}

double Model2Problem::smoothed_objective(const Matrix& X) const {
  return g_mu_value(X) - h_mu_value(X);
}

Matrix Model2Problem::h_mu_subgradient(const Matrix& X) const {
  const int K = k + 1, mm = m(), nn = n();
  Matrix S = sigma_matrix(X);
  Matrix L = link_matrix(X);

  std::vector<int> t_i(mm);  // h3 active index per node
  for (int i = 0; i < mm; ++i) t_i[i] = argmin(S.col(i));
  std::vector<int> t_l(K);  // h4 active index per center
  for (int l = 0; l < K; ++l) t_l[l] = argmin(S.row(l).transpose());
  Vector linkrow = L.rowwise().sum();
  const int t5 = argmin(linkrow);  // h5 active index

  const int nth = thread_count();
  std::vector<Matrix> Y1p(nth, Matrix::Zero(K, nn));
  std::vector<Matrix> Y3p(nth, Matrix::Zero(K, nn));
  std::vector<Matrix> Up(nth, Matrix::Zero(K, nn));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < mm; ++i) {
    const int t = thread_id();
    Vector a = data.row(i).transpose();
    for (int l = 0; l < K; ++l) {
      Vector x = X.row(l).transpose();
      Vector z = (x - a) / mu;
      Y1p[t].row(l) += (z - gauge.project(z)).transpose();
      Vector u = gauge.subgradient(x, a);
      Up[t].row(l) += u.transpose();
      if (l != t_i[i]) Y3p[t].row(l) += u.transpose();
    }
  }
  Matrix Y1 = Matrix::Zero(K, nn), Y3 = Matrix::Zero(K, nn), Usum = Matrix::Zero(K, nn);
  for (int t = 0; t < nth; ++t) {
    Y1 += Y1p[t];
    Y3 += Y3p[t];
    Usum += Up[t];
  }
  Y1 *= (1.0 + lambda);

  // grad h2_mu and the h5 selector share the center-to-center differences.
  Matrix Y2 = Matrix::Zero(K, nn), Y5 = Matrix::Zero(K, nn), Y4(K, nn);
  for (int l = 0; l < K; ++l) {
    Vector x = X.row(l).transpose();
    Vector vsum = Vector::Zero(nn);
    for (int j = 0; j < K; ++j) {
      Vector xj = X.row(j).transpose();
      Vector z = (x - xj) / mu;
      Y2.row(l) += 2.0 * (z - gauge.project(z)).transpose();
      vsum += gauge.subgradient(x, xj);
    }
    if (l == t5) {
      // Row of the active index: only second-argument terms survive.
      Y5.row(l) = vsum.transpose();
    } else {
      Y5.row(l) =
          (2.0 * vsum - gauge.subgradient(x, X.row(t5).transpose())).transpose();
    }
    Y4.row(l) = lambda * (Usum.row(l) -
                          gauge.subgradient(x, data.row(t_l[l]).transpose()).transpose());
  }
  return Y1 + Y2 + Y3 + Y4 + Y5;
}

Matrix Model2Problem::conjugate_step(const Matrix& Y) const {
  check_shape(Y);
  const int K = k + 1;
  const double c1 = 1.0 + lambda;
  const double a = double(m()) * c1 + 2.0 * double(K);
  const double alpha = 1.0 / a;
  const double beta = 2.0 / (double(m()) * c1 * a);
  Matrix R = mu * Y;
  R.rowwise() += c1 * data_colsum_.transpose();
  // (alpha I + beta E) R
  Matrix X = alpha * R;
  X.rowwise() += beta * R.colwise().sum();
  return X;
}

int Model2Problem::total_center(const Matrix& X) const {
  Matrix L = link_matrix(X);
  Vector linkrow = L.rowwise().sum();
  return argmin(linkrow);
}

double Model2Problem::unpenalized_objective(const Matrix& X) const {
  Matrix S = sigma_matrix(X);
  Matrix L = link_matrix(X);
  double clustering = 0.0;
  for (int i = 0; i < S.cols(); ++i) clustering += S.col(i).minCoeff();
  return clustering + L.rowwise().sum().minCoeff();
}

}  // namespace bhc
