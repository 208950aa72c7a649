#ifndef SPLINEDIM_IO_HPP
#define SPLINEDIM_IO_HPP

#include <string>

#include <json.hpp>

#include "splinedim/mesh.hpp"
#include "splinedim/refine.hpp"

namespace splinedim {

/**
 * Mesh files are JSON with exact coordinates:
 *   {"ambient_dim": 2,
 *    "vertices": [["0","0"],["3","0"],["0","3"],["1","1"]],
 *    "cells": [[0,1,3],[1,2,3],[0,2,3]]}
 * Coordinates are strings ("p/q", integer, or decimal, parsed exactly);
 * plain JSON integers are also accepted.
 */
SimplicialComplex mesh_from_json(const nlohmann::json& j);
nlohmann::json mesh_to_json(const SimplicialComplex& complex);

/** @throws std::invalid_argument / std::runtime_error on I/O or parse errors. */
SimplicialComplex read_mesh_file(const std::string& path);
void write_mesh_file(const std::string& path, const SimplicialComplex& complex);

/** Sidecar describing one replacement: the subdivided cell, the piece, and
 *  the vertices the step introduced. */
nlohmann::json record_to_json(const SubdivisionRecord& record);
nlohmann::json sequence_to_json(const SubdivisionSequence& seq);

std::string point_to_string(const Point& p);

}  // namespace splinedim

#endif
