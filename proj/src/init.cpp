#include "bhc/init.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

namespace bhc {

Matrix init_random_nodes(const Matrix& data, int count, std::uint64_t seed) {
  const int m = int(data.rows());
  if (count < 1 || count > m)
    throw std::invalid_argument("init_random_nodes: count out of range");
  std::mt19937_64 rng(seed);
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  // Partial Fisher-Yates: the first `count` entries are the sample.
  for (int i = 0; i < count; ++i) {
    std::uniform_int_distribution<int> pick(i, m - 1);
    std::swap(idx[i], idx[pick(rng)]);
  }
  Matrix X(count, data.cols());
  for (int i = 0; i < count; ++i) X.row(i) = data.row(idx[i]);
  return X;
}

double kmeans_objective(const Matrix& data, const Matrix& centroids) {
  double total = 0.0;
  for (int i = 0; i < data.rows(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (int c = 0; c < centroids.rows(); ++c)
      best = std::min(best, (data.row(i) - centroids.row(c)).squaredNorm());
    total += best;
  }
  return total;
}

Matrix init_kmeans(const Matrix& data, int count, std::uint64_t seed) {
  const int m = int(data.rows()), n = int(data.cols());
  if (count < 1 || count > m)
    throw std::invalid_argument("init_kmeans: count out of range");
  std::mt19937_64 rng(seed);

  // k-means++ seeding.
  Matrix C(count, n);
  std::uniform_int_distribution<int> first(0, m - 1);
  C.row(0) = data.row(first(rng));
  Vector d2(m);
  for (int i = 0; i < m; ++i) d2[i] = (data.row(i) - C.row(0)).squaredNorm();
  for (int c = 1; c < count; ++c) {
    double total = d2.sum();
    int chosen = 0;
    if (total > 0.0) {
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      double target = unit(rng) * total, acc = 0.0;
      for (int i = 0; i < m; ++i) {
        acc += d2[i];
        if (acc >= target) { chosen = i; break; }
      }
    } else {
      std::uniform_int_distribution<int> any(0, m - 1);
      chosen = any(rng);  // duplicate data; any point works
    }
    C.row(c) = data.row(chosen);
    for (int i = 0; i < m; ++i)
      d2[i] = std::min(d2[i], (data.row(i) - C.row(c)).squaredNorm());
  }

  std::vector<int> assign(m, -1);
  for (int sweep = 0; sweep < 100; ++sweep) {
    bool changed = false;
    for (int i = 0; i < m; ++i) {
      int best = 0;
      double bd = (data.row(i) - C.row(0)).squaredNorm();
      for (int c = 1; c < count; ++c) {
        double d = (data.row(i) - C.row(c)).squaredNorm();
        if (d < bd) { bd = d; best = c; }
      }
      if (best != assign[i]) { assign[i] = best; changed = true; }
    }
    if (!changed) break;

    Matrix sums = Matrix::Zero(count, n);
    std::vector<int> counts(count, 0);
    for (int i = 0; i < m; ++i) {
      sums.row(assign[i]) += data.row(i);
      counts[assign[i]]++;
    }
    for (int c = 0; c < count; ++c) {
      if (counts[c] > 0) {
        C.row(c) = sums.row(c) / double(counts[c]);
      } else {
        // Re-seed from the point farthest from its assigned centroid.
        int far = 0;
        double fd = -1.0;
        for (int i = 0; i < m; ++i) {
          double d = (data.row(i) - C.row(assign[i])).squaredNorm();
          if (d > fd) { fd = d; far = i; }
        }
        C.row(c) = data.row(far);
        assign[far] = c;
      }
    }
  }
  return C;
}

Matrix init_uniform(const Vector& lo, const Vector& hi, int count, std::uint64_t seed) {
  const int n = int(lo.size());
  if (hi.size() != n) throw std::invalid_argument("init_uniform: bounds mismatch");
  if (count < 1) throw std::invalid_argument("init_uniform: count out of range");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Matrix X(count, n);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < n; ++j)
      X(i, j) = lo[j] + (hi[j] - lo[j]) * unit(rng);
  return X;
}

Matrix init_uniform(const Matrix& data, int count, std::uint64_t seed) {
  Vector lo = data.colwise().minCoeff().transpose();
  Vector hi = data.colwise().maxCoeff().transpose();
  return init_uniform(lo, hi, count, seed);
}

}  // namespace bhc
