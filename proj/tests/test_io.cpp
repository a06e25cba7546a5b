#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "support.hpp"
#include "symbic/correspondence.hpp"
#include "symbic/io.hpp"
#include "symbic/shelling.hpp"

using namespace symbic;
using namespace testing;

TEST_SUITE("io") {
  TEST_CASE("matrices") {
    const TropMatrix m = TropMatrix::from_rows({{0, Rat(1, 2)}, {Rat(-3), 4}});
    const auto j = io::matrix_to_json(m);
    CHECK(j.dump() == R"({"entries":[["0","1/2"],["-3","4"]],"n":2})");
    CHECK(io::matrix_from_json(j) == m);
    CHECK(io::matrix_from_json(io::json::parse(R"({"n":2,"entries":[[0,"1/2"],[-3,4]]})")) == m);
    CHECK(io::matrix_from_csv("0, 1/2\n-3,4\n\n") == m);
    CHECK_THROWS_AS(io::matrix_from_json(io::json::parse(R"({"n":2,"entries":[[0]]})")), InvalidInput);
    CHECK_THROWS_AS(io::matrix_from_json(io::json::parse(R"({"entries":[]})")), InvalidInput);
    CHECK_THROWS_AS(io::matrix_from_csv("1,2\n3\n"), InvalidInput);
  }

  TEST_CASE("trees round trip") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 50; ++trial) {
      const SymbicTree t = random_tree(rng, 1 + trial % 5);
      const auto j = io::tree_to_json(t);
      CHECK(io::labeled_tree_from_json(j) == t.graph());
      CHECK(io::tree_from_json(j).splits() == t.splits());
      CHECK(io::tree_to_json(io::tree_from_json(j)) == j);
    }
  }

  TEST_CASE("bad trees") {
    auto j = io::tree_to_json(four_by_four(1, 2, 3));
    j["leaves"].erase("2p");
    CHECK_THROWS_AS(io::labeled_tree_from_json(j), InvalidInput);
    auto k = io::tree_to_json(four_by_four(1, 2, 3));
    k["edges"][10]["len"] = "-1";
    CHECK_THROWS_AS(io::tree_from_json(k), ValidationError);
  }

  TEST_CASE("dot export") {
    const SymbicTree t = tree_from_matrix(TropMatrix::from_rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
    const std::string dot = io::tree_to_dot(t);
    std::size_t bold = 0;
    for (auto p = dot.find("style=bold"); p != std::string::npos; p = dot.find("style=bold", p + 1)) ++bold;
    CHECK(bold == 1);
    CHECK(dot.find("label=\"1'\", fontcolor=red") != std::string::npos);
    CHECK(dot.find("label=\"1\", fontcolor=blue") != std::string::npos);
  }

  TEST_CASE("catalogs, orders and bases round trip") {
    const TreeCatalog c = catalog(3);
    const TreeCatalog back = io::catalog_from_json(io::catalog_to_json(c));
    CHECK(back.n == 3);
    CHECK(back.size() == c.size());
    for (const auto& [key, tree] : c.trees) CHECK(back.trees.at(key).splits() == tree.splits());

    const auto order = shelling_order(3);
    CHECK(io::order_from_json(io::order_to_json(3, order)) == order);

    const BasisSet b = union_bases(3, TreeFilter::all);
    CHECK(io::bases_from_json(io::bases_to_json(3, "all", b)) == b);
  }

  TEST_CASE("files") {
    const auto dir = std::filesystem::temp_directory_path() / "symbic_io_test";
    std::filesystem::create_directories(dir);
    const std::string json_path = (dir / "m.json").string();
    const std::string csv_path = (dir / "m.csv").string();
    const TropMatrix m = TropMatrix::from_rows({{1, 0}, {0, 1}});
    io::write_file(json_path, io::matrix_to_json(m).dump());
    io::write_file(csv_path, "1,0\n0,1\n");
    CHECK(io::read_matrix(json_path) == m);
    CHECK(io::read_matrix(csv_path) == m);
    CHECK_THROWS_AS(io::read_matrix((dir / "missing.json").string()), InvalidInput);
    io::write_file(json_path, "{ not json");
    CHECK_THROWS_AS(io::read_matrix(json_path), InvalidInput);
    std::filesystem::remove_all(dir);
  }
}
