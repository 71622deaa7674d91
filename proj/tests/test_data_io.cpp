#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bhc/data_io.hpp"

using namespace bhc;

TEST_CASE("tsplib: eil76") {
  Dataset ds = load_tsplib(std::string(BHC_DATA_DIR) + "/eil76.tsp");
  CHECK(ds.m() == 76);
  CHECK(ds.n() == 2);
  CHECK(ds.points(0, 0) == 22.0);
  CHECK(ds.points(0, 1) == 22.0);
  CHECK(ds.points(75, 0) == 40.0);
  CHECK(ds.points(75, 1) == 40.0);
}

TEST_CASE("tsplib: minimal and lenient parses") {
  Dataset one = parse_tsplib("DIMENSION: 1\nNODE_COORD_SECTION\n1 0.0 0.0\nEOF\n");
  CHECK(one.m() == 1);
  CHECK(one.n() == 2);

  // missing EOF marker is fine
  Dataset two = parse_tsplib(
      "NAME: t\nDIMENSION : 2\nNODE_COORD_SECTION\n1 1 2\n2 3 4\n");
  CHECK(two.m() == 2);
  CHECK(two.name == "t");
  CHECK(two.points(1, 0) == 3.0);
}

TEST_CASE("tsplib: malformed inputs") {
  CHECK_THROWS_WITH_AS(parse_tsplib("NODE_COORD_SECTION\n1 0 0\n"),
                       doctest::Contains("DIMENSION"), std::runtime_error);
  CHECK_THROWS_AS(parse_tsplib("DIMENSION: 2\nNODE_COORD_SECTION\n1 0 0\n"),
                  std::runtime_error);
  // out-of-order index, with the line number reported
  CHECK_THROWS_WITH_AS(
      parse_tsplib("DIMENSION: 2\nNODE_COORD_SECTION\n1 0 0\n3 1 1\n"),
      doctest::Contains("line 4"), std::runtime_error);
  CHECK_THROWS_WITH_AS(
      parse_tsplib("DIMENSION: 2\nNODE_COORD_SECTION\n1 0 0\nx 1 1\n"),
      doctest::Contains("line 4"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_tsplib("DIMENSION: 2\nEDGE_WEIGHT_SECTION\n1 2\n"),
                       doctest::Contains("EDGE_WEIGHT_SECTION"), std::runtime_error);
  CHECK_THROWS_AS(parse_tsplib("DIMENSION: 0\nNODE_COORD_SECTION\n"),
                  std::runtime_error);
}

TEST_CASE("csv parsing") {
  Dataset ds = parse_csv("1,2\n3,4\n5,6\n", false);
  CHECK(ds.m() == 3);
  CHECK(ds.n() == 2);
  CHECK(ds.points(2, 1) == 6.0);

  Dataset hd = parse_csv("x,y\n1,2\n", true);
  CHECK(hd.m() == 1);

  CHECK_THROWS_WITH_AS(parse_csv("1,2\n3\n", false), doctest::Contains("line 2"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_csv("1,a\n", false), doctest::Contains("line 1"),
                       std::runtime_error);
  CHECK_THROWS_AS(parse_csv("", false), std::runtime_error);
}

TEST_CASE("generators are deterministic") {
  Dataset a = gen_uniform(100, 3, -1, 1, 9);
  Dataset b = gen_uniform(100, 3, -1, 1, 9);
  CHECK((a.points - b.points).norm() == 0.0);
  CHECK(a.points.minCoeff() >= -1.0);
  CHECK(a.points.maxCoeff() <= 1.0);
  CHECK(gen_uniform(10000, 2, 0, 100, 1).m() == 10000);
  CHECK(gen_uniform(1000, 6, 0, 100, 1).n() == 6);
  CHECK_THROWS(gen_uniform(0, 2, 0, 1, 0));

  Matrix blobs(2, 2);
  blobs << 0, 0, 10, 10;
  Dataset c = gen_clusters(blobs, 0.5, 4, 3);
  CHECK(c.m() == 8);
  for (int i = 0; i < 4; ++i) CHECK((c.points.row(i) - blobs.row(0)).norm() <= 0.75);
  for (int i = 4; i < 8; ++i) CHECK((c.points.row(i) - blobs.row(1)).norm() <= 0.75);
  CHECK((gen_clusters(blobs, 0.5, 4, 3).points - c.points).norm() == 0.0);
}

TEST_CASE("results serialization") {
  RunRecord r;
  r.dataset = "eil76";
  r.model = 1;
  r.cost = 1179.7572;
  r.cost_continuous = 1175.25;
  r.iterations = 812;
  r.time_seconds = 0.07;
  r.k = 3;
  r.m = 76;
  r.n = 2;
  r.seed = 7;
  r.init = "kmeans";
  r.gauge = "l2";
  r.params = "mu0=16;lambda0=0.01;sigma1=160;sigma2=0.5";

  std::string csv = write_results_csv({r});
  CHECK(csv.substr(0, 7) == "dataset");
  CHECK(csv.find("eil76,1,1179.7572") != std::string::npos);
  // empty set -> header only
  CHECK(write_results_csv({}) ==
        "dataset,model,cost,cost_continuous,iterations,time_seconds,k,m,n,seed,init,"
        "gauge,params\n");

  std::vector<RunRecord> back = read_results_json(write_results_json({r, r}));
  REQUIRE(back.size() == 2);
  CHECK(back[0].dataset == r.dataset);
  CHECK(back[0].cost == r.cost);
  CHECK(back[0].iterations == r.iterations);
  CHECK(back[0].seed == r.seed);
  CHECK(back[1].params == r.params);
}
