#ifndef BHC_MODEL2_HPP
#define BHC_MODEL2_HPP

#include <utility>

#include "bhc/gauge.hpp"

namespace bhc {

// Model II: k+1 artificial centers, the total center picked among them by
// its center-to-center linkage sum.  Penalized objective
//   f(X) = sum_i min_l sigma(x^l - a^i) + min_l sum_j sigma(x^l - x^j)
//        + lambda * sum_l min_i sigma(x^l - a^i)
// over X in R^{(k+1) x n}, with smoothed split g_mu = g1_mu + g2_mu and
// h_mu = h1_mu + h2_mu + h3 + h4 + h5.
struct Model2Problem {
  Model2Problem(Matrix data_, int k_, Gauge gauge_, double lambda_, double mu_);

  Matrix data;
  int k;  // cluster count; the center matrix has k+1 rows
  Gauge gauge;
  double lambda;
  double mu;

  int m() const { return int(data.rows()); }
  int n() const { return int(data.cols()); }
  int rows() const { return k + 1; }

  double exact_objective(const Matrix& X) const;
  double smoothed_objective(const Matrix& X) const;

  double g_mu_value(const Matrix& X) const;
  Matrix g_mu_gradient(const Matrix& X) const;  // grad g1_mu + grad g2_mu

  double h_mu_value(const Matrix& X) const;
  double h12_mu_value(const Matrix& X) const;  // smooth parts h1_mu + h2_mu
  Matrix h12_mu_gradient(const Matrix& X) const;

  Matrix h_mu_subgradient(const Matrix& X) const;

  // Unique X with grad g_mu(X) = Y: X = (alpha I + beta E)((1+lambda) E A + mu Y).
  Matrix conjugate_step(const Matrix& Y) const;

  // Row l minimizing sum_j sigma(x^l - x^j); smallest index on ties.
  int total_center(const Matrix& X) const;

  double unpenalized_objective(const Matrix& X) const;

  Matrix sigma_matrix(const Matrix& X) const;  // (k+1) x m
  Matrix link_matrix(const Matrix& X) const;   // (k+1) x (k+1), sigma(x^l - x^j)

 private:
  void check_shape(const Matrix& X) const;
  Vector data_colsum_;
};

// Lemma-style closed-form inverse of a*I + b*E (E the all-ones matrix of
// size k+1): returns (x, y) with inverse x*I + y*E.  Throws when a = 0 or
// a = -(k+1)*b.
std::pair<double, double> invert_aI_plus_bE(double a, double b, int k);

// Inverse of c*I + d*((k+1)I - E): returns (alpha, beta) with inverse
// alpha*I + beta*E.  Throws when c = 0 or c = -d*(k+1).
std::pair<double, double> invert_cI_plus_dEtilde(double c, double d, int k);

}  // namespace bhc

#endif
