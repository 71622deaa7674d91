#ifndef BHC_INIT_HPP
#define BHC_INIT_HPP

#include <cstdint>

#include "bhc/gauge.hpp"

namespace bhc {

// `count` distinct node rows, sampled without replacement.
Matrix init_random_nodes(const Matrix& data, int count, std::uint64_t seed);

// Lloyd's algorithm with k-means++ seeding, squared-Euclidean assignment,
// at most 100 sweeps.  Empty clusters are re-seeded from the point farthest
// from its assigned centroid.
Matrix init_kmeans(const Matrix& data, int count, std::uint64_t seed);

// i.i.d. uniform rows within the given per-coordinate bounds.
Matrix init_uniform(const Vector& lo, const Vector& hi, int count, std::uint64_t seed);

// Convenience: uniform rows within the data's bounding box.
Matrix init_uniform(const Matrix& data, int count, std::uint64_t seed);

// Sum of squared distances to assigned centroids (the Lloyd objective).
double kmeans_objective(const Matrix& data, const Matrix& centroids);

}  // namespace bhc

#endif
