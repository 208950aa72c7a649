#include <catch2/catch_amalgamated.hpp>

#include "splinedim/io.hpp"
#include "splinedim/refine.hpp"

using namespace splinedim;

TEST_CASE("mesh JSON round trip") {
  auto parsed = mesh_from_json(nlohmann::json::parse(R"({
    "ambient_dim": 2,
    "vertices": [["0","0"],["3","0"],["0","3"],["1","1"]],
    "cells": [[0,1,3],[1,2,3],[0,2,3]]
  })"));
  CHECK(parsed.vertices().size() == 4);
  CHECK(parsed.cells().size() == 3);
  CHECK(validate(parsed).ok());

  nlohmann::json out = mesh_to_json(parsed);
  auto reparsed = mesh_from_json(out);
  CHECK(reparsed.vertices() == parsed.vertices());
  CHECK(reparsed.cells() == parsed.cells());
  CHECK(mesh_to_json(reparsed) == out);
}

TEST_CASE("coordinates parse exactly in all accepted forms") {
  auto parsed = mesh_from_json(nlohmann::json::parse(R"({
    "ambient_dim": 2,
    "vertices": [[0, 0], ["1/2", "0.25"], ["-1", 2]],
    "cells": [[0,1,2]]
  })"));
  CHECK(parsed.vertex(1) == Point{Rational(1, 2), Rational(1, 4)});
  CHECK(parsed.vertex(2) == Point{Rational(-1), Rational(2)});
}

TEST_CASE("malformed meshes are rejected") {
  CHECK_THROWS_AS(mesh_from_json(nlohmann::json::parse(R"({
    "ambient_dim": 2,
    "vertices": [["1/0","0"],["1","0"],["0","1"]],
    "cells": [[0,1,2]]
  })")),
                  std::invalid_argument);
  CHECK_THROWS_AS(mesh_from_json(nlohmann::json::parse(R"({
    "ambient_dim": 2,
    "vertices": [[0.25, 0],[1,0],[0,1]],
    "cells": [[0,1,2]]
  })")),
                  std::invalid_argument);  // non-integral JSON numbers are inexact
  CHECK_THROWS_AS(mesh_from_json(nlohmann::json::parse(R"({"vertices": []})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(mesh_from_json(nlohmann::json::parse(R"({
    "ambient_dim": 2, "vertices": [["0","0"]], "cells": [[0,1,2]]
  })")),
                  std::invalid_argument);
}

TEST_CASE("subdivision records serialize the piece and new vertices") {
  auto rec = alfeld(builtin_simplex(2), 0);
  nlohmann::json j = record_to_json(rec);
  CHECK(j.at("cell").size() == 3);
  CHECK(j.at("new_vertices").size() == 1);
  CHECK(j.at("new_vertices")[0] == nlohmann::json::array({"1", "1"}));
  auto piece = mesh_from_json(j.at("piece"));
  CHECK(piece.cells().size() == 3);

  auto seq = facet_split(builtin_simplex(2));
  nlohmann::json sj = sequence_to_json(seq);
  CHECK(sj.at("steps").size() == 4);
}
