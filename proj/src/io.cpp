#include "splinedim/io.hpp"

#include <fstream>
#include <stdexcept>

namespace splinedim {

namespace {

Rational coordinate_from_json(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw std::invalid_argument(
      "coordinates must be strings (\"p/q\", integer, decimal) or integers");
}

}  // namespace

SimplicialComplex mesh_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("vertices") ||
      !j.contains("cells")) {
    throw std::invalid_argument(
        "mesh JSON needs ambient_dim, vertices and cells fields");
  }
  const int k = j.at("ambient_dim").get<int>();
  std::vector<Point> vertices;
  for (const auto& row : j.at("vertices")) {
    Point p;
    for (const auto& coord : row) p.push_back(coordinate_from_json(coord));
    vertices.push_back(std::move(p));
  }
  std::vector<Simplex> cells;
  for (const auto& row : j.at("cells")) {
    Simplex s;
    for (const auto& id : row) s.vertices.push_back(id.get<int>());
    cells.push_back(std::move(s));
  }
  return SimplicialComplex(k, std::move(vertices), std::move(cells));
}

nlohmann::json mesh_to_json(const SimplicialComplex& complex) {
  nlohmann::json j;
  j["ambient_dim"] = complex.ambient_dim();
  nlohmann::json vertices = nlohmann::json::array();
  for (const Point& p : complex.vertices()) {
    nlohmann::json row = nlohmann::json::array();
    for (const Rational& c : p) row.push_back(format_rational(c));
    vertices.push_back(std::move(row));
  }
  j["vertices"] = std::move(vertices);
  nlohmann::json cells = nlohmann::json::array();
  for (const Simplex& s : complex.cells()) cells.push_back(s.vertices);
  j["cells"] = std::move(cells);
  return j;
}

SimplicialComplex read_mesh_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mesh file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return mesh_from_json(j);
}

void write_mesh_file(const std::string& path, const SimplicialComplex& complex) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write mesh file: " + path);
  out << mesh_to_json(complex).dump(2) << "\n";
}

std::string point_to_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += format_rational(p[i]);
  }
  return s + ")";
}

nlohmann::json record_to_json(const SubdivisionRecord& record) {
  nlohmann::json j;
  j["cell"] = record.cell.vertices;
  j["piece"] = mesh_to_json(record.piece);
  nlohmann::json added = nlohmann::json::array();
  for (const Point& p : record.fine.vertices()) {
    bool pre_existing = false;
    for (const Point& q : record.coarse.vertices()) {
      if (p == q) {
        pre_existing = true;
        break;
      }
    }
    if (!pre_existing) {
      nlohmann::json row = nlohmann::json::array();
      for (const Rational& c : p) row.push_back(format_rational(c));
      added.push_back(std::move(row));
    }
  }
  j["new_vertices"] = std::move(added);
  return j;
}

nlohmann::json sequence_to_json(const SubdivisionSequence& seq) {
  nlohmann::json steps = nlohmann::json::array();
  for (const SubdivisionRecord& r : seq.steps) steps.push_back(record_to_json(r));
  return nlohmann::json{{"steps", std::move(steps)}};
}

}  // namespace splinedim
