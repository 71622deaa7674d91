#ifndef BHC_MODEL1_HPP
#define BHC_MODEL1_HPP

#include <utility>

#include "bhc/gauge.hpp"

namespace bhc {

// Model I: k artificial cluster centers, total center picked among the data
// nodes.  Penalized objective
//   f(X) = sum_i min_l sigma(x^l - a^i) + min_i sum_l sigma(x^l - a^i)
//        + lambda * sum_l min_i sigma(x^l - a^i)
// with the smoothed DC split f_mu = g_mu - h_mu used by the DCA.
struct Model1Problem {
  Model1Problem(Matrix data_, int k_, Gauge gauge_, double lambda_, double mu_);

  Matrix data;  // m x n
  int k;
  Gauge gauge;
  double lambda;
  double mu;

  int m() const { return int(data.rows()); }
  int n() const { return int(data.cols()); }
  int rows() const { return k; }  // center matrix rows

  // Exact penalized objective f(X).
  double exact_objective(const Matrix& X) const;

  // Unsmoothed DC split f = g0 - h0, g0 = (2+lambda) * sum sum sigma.
  std::pair<double, double> dc_exact_parts(const Matrix& X) const;

  // f_mu(X) = g_mu(X) - h_mu(X).
  double smoothed_objective(const Matrix& X) const;

  double g_mu_value(const Matrix& X) const;
  Matrix g_mu_gradient(const Matrix& X) const;  // (2+lambda)/mu * (m X - E A)

  double h_mu_value(const Matrix& X) const;
  double h1_mu_value(const Matrix& X) const;     // smooth part only
  Matrix h1_mu_gradient(const Matrix& X) const;

  // One element of the subdifferential of h_mu = h1_mu + h2 + h3 + h4.
  // All argmax/argmin selections break ties by smallest index.
  Matrix h_mu_subgradient(const Matrix& X) const;

  // Unique X with grad g_mu(X) = Y:  X = ((2+lambda) E A + mu Y) / ((2+lambda) m)
  Matrix conjugate_step(const Matrix& Y) const;

  // Node index minimizing sum_l sigma(x^l - a^i); smallest index on ties.
  int total_center(const Matrix& X) const;

  // Unpenalized cost: clustering term + total-center term.
  double unpenalized_objective(const Matrix& X) const;

  // k x m matrix of sigma(x^l - a^i).
  Matrix sigma_matrix(const Matrix& X) const;

 private:
  void check_shape(const Matrix& X, int expected_rows) const;
  Vector data_colsum_;  // row of E A
};

}  // namespace bhc

#endif
