#include "bhc/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bhc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_centers(const Matrix& data, const std::vector<int>& centers, int expected) {
  if (int(centers.size()) != expected)
    throw std::invalid_argument("discrete_cost: wrong number of center indices");
  for (size_t a = 0; a < centers.size(); ++a) {
    if (centers[a] < 0 || centers[a] >= data.rows())
      throw std::invalid_argument("discrete_cost: center index out of range");
    for (size_t b = a + 1; b < centers.size(); ++b)
      if (centers[a] == centers[b])
        throw std::invalid_argument("discrete_cost: duplicate center index");
  }
}

// Advance idx to the next r-combination of {0..m-1} with idx[0] fixed.
bool next_combination_fixed_head(std::vector<int>& idx, int m) {
  const int r = int(idx.size());
  for (int pos = r - 1; pos >= 1; --pos) {
    if (idx[pos] < m - (r - pos)) {
      ++idx[pos];
      for (int q = pos + 1; q < r; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

struct Candidate {
  double cost = kInf;
  std::vector<int> indices;
  int total_center = -1;
};

void consider(Candidate& best, double cost, const std::vector<int>& idx, int tc) {
  // Strict improvement only: lexicographic enumeration order makes the
  // first optimum the lexicographically smallest one.
  if (cost < best.cost) {
    best.cost = cost;
    best.indices = idx;
    best.total_center = tc;
  }
}
}  // namespace

std::uint64_t combination_count(int m, int r) {
  if (r < 0 || r > m) return 0;
  const std::uint64_t limit = std::numeric_limits<std::int64_t>::max();
  long double c = 1.0L;
  for (int i = 1; i <= r; ++i) c = c * (m - r + i) / i;
  if (c >= (long double)limit) return limit;
  return std::uint64_t(c + 0.5L);
}

DiscreteCost discrete_cost_model1(const Matrix& data, const std::vector<int>& centers,
                                  const Gauge& gauge) {
  check_centers(data, centers, int(centers.size()));
  if (centers.empty()) throw std::invalid_argument("discrete_cost_model1: no centers");
  const int m = int(data.rows());
  double sum_md = 0.0, best_col = kInf, md_at_best = 0.0;
  int tc = -1;
  for (int i = 0; i < m; ++i) {
    Vector a = data.row(i).transpose();
    double md = kInf, col = 0.0;
    for (int c : centers) {
      double d = gauge.support(data.row(c).transpose() - a);
      md = std::min(md, d);
      col += d;
    }
    sum_md += md;
    if (col < best_col) {
      best_col = col;
      md_at_best = md;
      tc = i;
    }
  }
  return {sum_md - md_at_best + best_col, tc};
}

DiscreteCost discrete_cost_model2(const Matrix& data, const std::vector<int>& centers,
                                  const Gauge& gauge) {
  check_centers(data, centers, int(centers.size()));
  if (centers.empty()) throw std::invalid_argument("discrete_cost_model2: no centers");
  const int m = int(data.rows()), K = int(centers.size());
  double clustering = 0.0;
  for (int i = 0; i < m; ++i) {
    Vector a = data.row(i).transpose();
    double md = kInf;
    for (int c : centers)
      md = std::min(md, gauge.support(data.row(c).transpose() - a));
    clustering += md;
  }
  double best_link = kInf;
  int tc = -1;
  for (int l = 0; l < K; ++l) {
    double link = 0.0;
    for (int j = 0; j < K; ++j)
      link += gauge.support(data.row(centers[l]).transpose() -
                            data.row(centers[j]).transpose());
    if (link < best_link) {
      best_link = link;
      tc = centers[l];
    }
  }
  return {clustering + best_link, tc};
}

BruteForceResult brute_force(int model, const Matrix& data, int k, const Gauge& gauge,
                             std::uint64_t cap) {
  if (model != 1 && model != 2) throw std::invalid_argument("brute_force: model must be 1 or 2");
  const int m = int(data.rows());
  const int r = (model == 1) ? k : k + 1;
  if (r < 1 || r > m) throw std::invalid_argument("brute_force: k out of range");
  const std::uint64_t count = combination_count(m, r);
  if (count > cap)
    throw std::runtime_error("brute_force: " + std::to_string(count) +
                             " combinations exceed cap " + std::to_string(cap));
  if (m > 3000)
    throw std::runtime_error("brute_force: dataset too large (m > 3000)");

  // Precomputed node-to-node gauge distances; D(c, i) = sigma(a^c - a^i).
  Matrix D(m, m);
#pragma omp parallel for schedule(static)
  for (int c = 0; c < m; ++c) {
    Vector ac = data.row(c).transpose();
    for (int i = 0; i < m; ++i)
      D(c, i) = gauge.support(ac - data.row(i).transpose());
  }

  std::vector<Candidate> per_head(m);
  std::vector<std::uint64_t> per_head_count(m, 0);

#pragma omp parallel for schedule(dynamic)
  for (int c0 = 0; c0 <= m - r; ++c0) {
    Candidate best;
    std::uint64_t local_count = 0;
    std::vector<int> idx(r);
    for (int q = 0; q < r; ++q) idx[q] = c0 + q;
    std::vector<double> md(m);
    do {
      ++local_count;
      if (model == 1) {
        double sum_md = 0.0, best_col = kInf, md_at_best = 0.0;
        int tc = -1;
        for (int i = 0; i < m; ++i) {
          double mdi = kInf, col = 0.0;
          for (int q = 0; q < r; ++q) {
            double d = D(idx[q], i);
            mdi = std::min(mdi, d);
            col += d;
          }
          sum_md += mdi;
          if (col < best_col) {
            best_col = col;
            md_at_best = mdi;
            tc = i;
          }
        }
        consider(best, sum_md - md_at_best + best_col, idx, tc);
      } else {
        double clustering = 0.0;
        for (int i = 0; i < m; ++i) {
          double mdi = kInf;
          for (int q = 0; q < r; ++q) mdi = std::min(mdi, D(idx[q], i));
          clustering += mdi;
        }
        double best_link = kInf;
        int tc = -1;
        for (int q = 0; q < r; ++q) {
          double link = 0.0;
          for (int p = 0; p < r; ++p) link += D(idx[q], idx[p]);
          if (link < best_link) {
            best_link = link;
            tc = idx[q];
          }
        }
        consider(best, clustering + best_link, idx, tc);
      }
    } while (next_combination_fixed_head(idx, m));
    per_head[c0] = std::move(best);
    per_head_count[c0] = local_count;
  }

  BruteForceResult out;
  out.cost = kInf;
  out.combinations = 0;
  for (int c0 = 0; c0 <= m - r; ++c0) {
    out.combinations += per_head_count[c0];
    if (per_head[c0].cost < out.cost) {
      out.cost = per_head[c0].cost;
      out.indices = per_head[c0].indices;
      out.total_center = per_head[c0].total_center;
    }
  }
  return out;
}

BruteForceResult brute_force_serial(int model, const Matrix& data, int k,
                                    const Gauge& gauge, std::uint64_t cap) {
  if (model != 1 && model != 2) throw std::invalid_argument("brute_force: model must be 1 or 2");
  const int m = int(data.rows());
  const int r = (model == 1) ? k : k + 1;
  if (r < 1 || r > m) throw std::invalid_argument("brute_force: k out of range");
  const std::uint64_t count = combination_count(m, r);
  if (count > cap)
    throw std::runtime_error("brute_force: " + std::to_string(count) +
                             " combinations exceed cap " + std::to_string(cap));

  Candidate best;
  std::uint64_t seen = 0;
  std::vector<int> idx(r);
  for (int q = 0; q < r; ++q) idx[q] = q;
  for (;;) {
    ++seen;
    DiscreteCost dc = (model == 1) ? discrete_cost_model1(data, idx, gauge)
                                   : discrete_cost_model2(data, idx, gauge);
    consider(best, dc.cost, idx, dc.total_center);
    // plain lexicographic successor over all r-subsets
    int pos = r - 1;
    while (pos >= 0 && idx[pos] == m - (r - pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int q = pos + 1; q < r; ++q) idx[q] = idx[q - 1] + 1;
  }
  return {best.indices, best.cost, best.total_center, seen};
}

}  // namespace bhc
