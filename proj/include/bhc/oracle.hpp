#ifndef BHC_ORACLE_HPP
#define BHC_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "bhc/gauge.hpp"

namespace bhc {

struct DiscreteCost {
  double cost;
  int total_center;  // node index (model I) / center node index (model II)
};

// Discrete tree cost with k cluster centers placed on the given nodes.
// The total center c* is the node minimizing sum_l sigma(c_l - a_i); it is
// linked to the centers instead of to its nearest center, so its own
// clustering edge is not counted:
//   cost = sum_{i != c*} min_l sigma(c_l - a_i) + sum_l sigma(c_l - a_{c*}).
DiscreteCost discrete_cost_model1(const Matrix& data, const std::vector<int>& centers,
                                  const Gauge& gauge);

// Discrete cost with k+1 centers on nodes; the total center is the center
// with the smallest linkage sum sum_j sigma(c_l - c_j):
//   cost = sum_i min_l sigma(c_l - a_i) + min_l sum_j sigma(c_l - c_j).
DiscreteCost discrete_cost_model2(const Matrix& data, const std::vector<int>& centers,
                                  const Gauge& gauge);

struct BruteForceResult {
  std::vector<int> indices;  // sorted ascending; lexicographically smallest optimum
  double cost;
  int total_center;
  std::uint64_t combinations;  // subsets enumerated
};

// Exhaustive minimum over all C(m, k) (model 1) or C(m, k+1) (model 2)
// node subsets.  OpenMP-parallel over the leading index; refuses when the
// combination count exceeds `cap`.
BruteForceResult brute_force(int model, const Matrix& data, int k, const Gauge& gauge,
                             std::uint64_t cap = 10000000);

// Straightforward single-threaded enumeration through the public
// discrete-cost functions; reference implementation for tests and benchmarks.
BruteForceResult brute_force_serial(int model, const Matrix& data, int k,
                                    const Gauge& gauge, std::uint64_t cap = 10000000);

// C(m, r), saturating at 2^63-1.
std::uint64_t combination_count(int m, int r);

}  // namespace bhc

#endif
