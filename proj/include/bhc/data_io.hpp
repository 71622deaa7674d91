#ifndef BHC_DATA_IO_HPP
#define BHC_DATA_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bhc/gauge.hpp"

namespace bhc {

struct Dataset {
  std::string name;
  Matrix points;  // m x n
  int m() const { return int(points.rows()); }
  int n() const { return int(points.cols()); }
};

// TSPLIB node-coordinate files (NODE_COORD_SECTION only; EDGE_WEIGHT_SECTION
// formats are rejected).  1-based node indices are remapped to 0-based rows.
Dataset parse_tsplib(const std::string& text);
Dataset load_tsplib(const std::string& path);

// One point per row, numeric columns only.
Dataset parse_csv(const std::string& text, bool has_header);
Dataset load_csv(const std::string& path, bool has_header);

Dataset gen_uniform(int m, int n, double lo, double hi, std::uint64_t seed);

// points_per_blob points uniformly within +-spread of each blob center row.
Dataset gen_clusters(const Matrix& blob_centers, double spread, int points_per_blob,
                     std::uint64_t seed);

struct RunRecord {
  std::string dataset;
  int model = 1;
  double cost = 0.0;            // discrete (snapped) cost
  double cost_continuous = 0.0;
  long iterations = 0;
  double time_seconds = 0.0;
  int k = 0, m = 0, n = 0;
  std::uint64_t seed = 0;
  std::string init;
  std::string gauge;
  std::string params;  // "mu0=..;lambda0=..;sigma1=..;sigma2=.."
};

std::string write_results_csv(const std::vector<RunRecord>& results);
std::string write_results_json(const std::vector<RunRecord>& results);
std::vector<RunRecord> read_results_json(const std::string& text);

}  // namespace bhc

#endif
