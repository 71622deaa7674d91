#include "bhc/data_io.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace bhc {

namespace {
std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}
}  // namespace

Dataset parse_tsplib(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0, dimension = -1;
  std::string name = "tsplib";
  bool in_coords = false;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (!in_coords) {
      if (t == "NODE_COORD_SECTION") {
        if (dimension < 0) throw std::runtime_error("tsplib: missing DIMENSION header");
        in_coords = true;
        continue;
      }
      if (t == "EDGE_WEIGHT_SECTION")
        throw std::runtime_error("tsplib: EDGE_WEIGHT_SECTION files are not supported; "
                                 "only node-coordinate instances");
      size_t colon = t.find(':');
      std::string key = trim(colon == std::string::npos ? t : t.substr(0, colon));
      std::string val = colon == std::string::npos ? "" : trim(t.substr(colon + 1));
      if (key == "NAME") name = val;
      if (key == "DIMENSION") {
        try {
          dimension = std::stoi(val);
        } catch (...) {
          throw std::runtime_error("tsplib: bad DIMENSION at line " + std::to_string(line_no));
        }
        if (dimension < 1) throw std::runtime_error("tsplib: DIMENSION must be >= 1");
      }
      continue;
    }
    if (t == "EOF") break;
    std::istringstream ls(t);
    long idx;
    if (!(ls >> idx))
      throw std::runtime_error("tsplib: malformed coordinate line " + std::to_string(line_no));
    std::vector<double> coords;
    double v;
    while (ls >> v) coords.push_back(v);
    if (coords.empty())
      throw std::runtime_error("tsplib: malformed coordinate line " + std::to_string(line_no));
    if (idx != long(rows.size()) + 1)
      throw std::runtime_error("tsplib: node index " + std::to_string(idx) +
                               " out of order at line " + std::to_string(line_no));
    if (!rows.empty() && coords.size() != rows.front().size())
      throw std::runtime_error("tsplib: inconsistent coordinate count at line " +
                               std::to_string(line_no));
    rows.push_back(std::move(coords));
  }
  if (!in_coords) throw std::runtime_error("tsplib: missing NODE_COORD_SECTION");
  if (int(rows.size()) != dimension)
    throw std::runtime_error("tsplib: DIMENSION " + std::to_string(dimension) + " but " +
                             std::to_string(rows.size()) + " coordinate lines");
  Dataset ds;
  ds.name = name;
  ds.points.resize(int(rows.size()), int(rows.front().size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      ds.points(int(i), int(j)) = rows[i][j];
  return ds;
}

Dataset load_tsplib(const std::string& path) { return parse_tsplib(read_file(path)); }

Dataset parse_csv(const std::string& text, bool has_header) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (has_header && line_no == 1) continue;
    std::string t = trim(line);
    if (t.empty()) continue;
    std::vector<double> vals;
    std::istringstream ls(t);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        vals.push_back(std::stod(trim(cell)));
      } catch (...) {
        throw std::runtime_error("csv: non-numeric value at line " + std::to_string(line_no));
      }
    }
    if (!rows.empty() && vals.size() != rows.front().size())
      throw std::runtime_error("csv: ragged row at line " + std::to_string(line_no));
    rows.push_back(std::move(vals));
  }
  if (rows.empty()) throw std::runtime_error("csv: no data rows");
  Dataset ds;
  ds.name = "csv";
  ds.points.resize(int(rows.size()), int(rows.front().size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      ds.points(int(i), int(j)) = rows[i][j];
  return ds;
}

Dataset load_csv(const std::string& path, bool has_header) {
  return parse_csv(read_file(path), has_header);
}

Dataset gen_uniform(int m, int n, double lo, double hi, std::uint64_t seed) {
  if (m < 1 || n < 1) throw std::invalid_argument("gen_uniform: m, n must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Dataset ds;
  ds.name = "uniform-" + std::to_string(m) + "x" + std::to_string(n);
  ds.points.resize(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      ds.points(i, j) = lo + (hi - lo) * unit(rng);
  return ds;
}

Dataset gen_clusters(const Matrix& blob_centers, double spread, int points_per_blob,
                     std::uint64_t seed) {
  if (blob_centers.rows() < 1 || points_per_blob < 1)
    throw std::invalid_argument("gen_clusters: need blobs and points");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const int b = int(blob_centers.rows()), n = int(blob_centers.cols());
  Dataset ds;
  ds.name = "clusters-" + std::to_string(b) + "x" + std::to_string(points_per_blob);
  ds.points.resize(b * points_per_blob, n);
  int row = 0;
  for (int c = 0; c < b; ++c)
    for (int p = 0; p < points_per_blob; ++p, ++row)
      for (int j = 0; j < n; ++j)
        ds.points(row, j) = blob_centers(c, j) + spread * unit(rng);
  return ds;
}

static const char* kCsvHeader =
    "dataset,model,cost,cost_continuous,iterations,time_seconds,k,m,n,seed,init,gauge,params";

std::string write_results_csv(const std::vector<RunRecord>& results) {
  std::ostringstream out;
  out.precision(10);
  out << kCsvHeader << "\n";
  for (const auto& r : results) {
    out << r.dataset << ',' << r.model << ',' << r.cost << ',' << r.cost_continuous << ','
        << r.iterations << ',' << r.time_seconds << ',' << r.k << ',' << r.m << ',' << r.n
        << ',' << r.seed << ',' << r.init << ',' << r.gauge << ',' << r.params << "\n";
  }
  return out.str();
}

std::string write_results_json(const std::vector<RunRecord>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    arr.push_back({{"dataset", r.dataset},
                   {"model", r.model},
                   {"cost", r.cost},
                   {"cost_continuous", r.cost_continuous},
                   {"iterations", r.iterations},
                   {"time_seconds", r.time_seconds},
                   {"k", r.k},
                   {"m", r.m},
                   {"n", r.n},
                   {"seed", r.seed},
                   {"init", r.init},
                   {"gauge", r.gauge},
                   {"params", r.params}});
  }
  return arr.dump(2);
}

std::vector<RunRecord> read_results_json(const std::string& text) {
  nlohmann::json arr = nlohmann::json::parse(text);
  std::vector<RunRecord> out;
  for (const auto& j : arr) {
    RunRecord r;
    r.dataset = j.at("dataset").get<std::string>();
    r.model = j.at("model").get<int>();
    r.cost = j.at("cost").get<double>();
    r.cost_continuous = j.at("cost_continuous").get<double>();
    r.iterations = j.at("iterations").get<long>();
    r.time_seconds = j.at("time_seconds").get<double>();
    r.k = j.at("k").get<int>();
    r.m = j.at("m").get<int>();
    r.n = j.at("n").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.init = j.at("init").get<std::string>();
    r.gauge = j.at("gauge").get<std::string>();
    r.params = j.at("params").get<std::string>();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace bhc
