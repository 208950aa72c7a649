#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "splinedim/formulas.hpp"
#include "splinedim/io.hpp"
#include "splinedim/oracle.hpp"
#include "splinedim/refine.hpp"
#include "splinedim/verify.hpp"

namespace {

using namespace splinedim;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;

std::pair<long, long> parse_degree_range(const std::optional<long>& d,
                                         const std::string& d_range) {
  if (d) return {*d, *d};
  if (d_range.empty()) {
    throw std::invalid_argument("either --d or --d-range is required");
  }
  auto colon = d_range.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("--d-range expects the form a:b");
  }
  long lo = std::stol(d_range.substr(0, colon));
  long hi = std::stol(d_range.substr(colon + 1));
  if (lo < 0 || hi < lo) throw std::invalid_argument("bad degree range");
  return {lo, hi};
}

Point parse_point(const std::string& text, int k) {
  Point p;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ',')) p.push_back(parse_rational(part));
  if (static_cast<int>(p.size()) != k) {
    throw std::invalid_argument("--point needs " + std::to_string(k) +
                                " comma-separated rationals");
  }
  return p;
}

std::set<int> parse_subset(const std::string& text) {
  std::set<int> subset;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ',')) subset.insert(std::stoi(part));
  return subset;
}

long formula_dim(const std::string& scheme, int k, long d, int r) {
  if (scheme == "alfeld") return dim_alfeld(k, d, r);
  if (scheme == "facet") return dim_facet(k, d, r);
  if (scheme == "double-alfeld") return dim_double_alfeld(k, d, r);
  if (scheme == "pyramid") return dim_pyramid(k, d, r);
  throw std::invalid_argument("unknown scheme: " + scheme);
}

int cmd_validate(const std::string& path) {
  SimplicialComplex mesh = read_mesh_file(path);
  ValidationReport report = validate(mesh);
  if (report.ok()) {
    std::cout << "valid: " << mesh.cells().size() << " cells, "
              << mesh.vertices().size() << " vertices in R^" << mesh.ambient_dim()
              << "\n";
    return kExitOk;
  }
  for (const auto& v : report.violations) std::cout << "invalid: " << v << "\n";
  return kExitMathFailure;
}

int cmd_dim(const std::string& path, int r, const std::optional<long>& d,
            const std::string& d_range, const std::string& method,
            const std::string& scheme, const std::string& format) {
  auto [lo, hi] = parse_degree_range(d, d_range);
  const bool want_oracle = (method == "oracle" || method == "all");
  const bool want_euler = (method == "euler" || method == "all");
  const bool want_formula = (method == "formula" || (method == "all" && !scheme.empty()));
  if (method == "formula" && scheme.empty()) {
    throw std::invalid_argument("--method formula requires --scheme");
  }
  SimplicialComplex mesh = read_mesh_file(path);
  const int k = mesh.ambient_dim();

  bool mismatch = false;
  nlohmann::json rows = nlohmann::json::array();
  if (format == "csv") std::cout << "k,r,d,oracle,euler,formula\n";
  for (long dd = lo; dd <= hi; ++dd) {
    std::optional<long> oracle, euler, formula;
    if (want_oracle) oracle = spline_dim(mesh, r, dd);
    if (want_euler) euler = euler_dim(mesh, r, dd);
    if (want_formula) formula = formula_dim(scheme, k, dd, r);
    std::vector<long> present;
    for (const auto& v : {oracle, euler, formula}) {
      if (v) present.push_back(*v);
    }
    for (long v : present) {
      if (v != present.front()) mismatch = true;
    }
    if (format == "csv") {
      auto cell = [](const std::optional<long>& v) {
        return v ? std::to_string(*v) : std::string();
      };
      std::cout << k << "," << r << "," << dd << "," << cell(oracle) << ","
                << cell(euler) << "," << cell(formula) << "\n";
    } else {
      nlohmann::json row{{"k", k}, {"r", r}, {"d", dd}};
      if (oracle) row["oracle"] = *oracle;
      if (euler) row["euler"] = *euler;
      if (formula) row["formula"] = *formula;
      rows.push_back(std::move(row));
    }
  }
  if (format == "json") std::cout << rows.dump(2) << "\n";
  if (mismatch) {
    std::cerr << "dimension routes disagree\n";
    return kExitMathFailure;
  }
  return kExitOk;
}

int cmd_homology(const std::string& path, int r, const std::optional<long>& d,
                 const std::string& d_range, const std::string& format) {
  auto [lo, hi] = parse_degree_range(d, d_range);
  SimplicialComplex mesh = read_mesh_file(path);
  const int k = mesh.ambient_dim();
  ChainComplexRJ chain = build_chain_complex(mesh, r);
  if (format == "csv") {
    std::cout << "k,r,d";
    for (int i = 0; i <= k; ++i) std::cout << ",h" << i;
    std::cout << "\n";
  }
  nlohmann::json rows = nlohmann::json::array();
  for (long dd = lo; dd <= hi; ++dd) {
    auto h = homology_graded_dims(chain, dd);
    if (format == "csv") {
      std::cout << k << "," << r << "," << dd;
      for (long v : h) std::cout << "," << v;
      std::cout << "\n";
    } else {
      rows.push_back(nlohmann::json{{"k", k}, {"r", r}, {"d", dd}, {"homology", h}});
    }
  }
  if (format == "json") std::cout << rows.dump(2) << "\n";
  return kExitOk;
}

int cmd_basis(const std::string& path, int r, long d, const std::string& mode_name,
              const std::string& format) {
  SimplicialComplex mesh = read_mesh_file(path);
  SplineMode mode = (mode_name == "cone") ? SplineMode::cone : SplineMode::affine;
  auto basis = spline_basis(mesh, r, d, mode);
  std::vector<std::string> names;
  for (int i = (mode == SplineMode::cone ? 0 : 1); i <= mesh.ambient_dim(); ++i) {
    names.push_back("x" + std::to_string(i));
  }
  if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& f : basis) {
      nlohmann::json pieces = nlohmann::json::array();
      for (const auto& piece : f.pieces) pieces.push_back(piece.to_string(names));
      out.push_back(std::move(pieces));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "basis of dimension " << basis.size() << "\n";
    for (std::size_t b = 0; b < basis.size(); ++b) {
      std::cout << "[" << b << "]\n";
      for (std::size_t c = 0; c < basis[b].pieces.size(); ++c) {
        std::cout << "  cell " << c << ": " << basis[b].pieces[c].to_string(names)
                  << "\n";
      }
    }
  }
  return kExitOk;
}

int cmd_subdivide(const std::string& input, int builtin_k, const std::string& scheme,
                  int cell, const std::string& point_text, const std::string& subset_text,
                  const std::string& output, const std::string& record_path) {
  SimplicialComplex mesh =
      input.empty() ? builtin_simplex(builtin_k) : read_mesh_file(input);
  std::optional<Point> point;
  if (!point_text.empty()) point = parse_point(point_text, mesh.ambient_dim());
  std::optional<std::set<int>> subset;
  if (!subset_text.empty()) subset = parse_subset(subset_text);

  SubdivisionSequence seq;
  if (scheme == "alfeld") {
    seq.steps.push_back(alfeld(mesh, cell, point));
  } else if (scheme == "facet") {
    seq = facet_split(mesh, point, subset);
  } else if (scheme == "double-alfeld") {
    seq = double_alfeld(mesh, point, subset);
  } else {
    throw std::invalid_argument("unknown scheme: " + scheme);
  }
  write_mesh_file(output, seq.result());
  std::cout << "wrote " << output << " (" << seq.result().cells().size()
            << " cells)\n";
  if (!record_path.empty()) {
    std::ofstream rec(record_path);
    if (!rec) throw std::runtime_error("cannot write record file: " + record_path);
    rec << sequence_to_json(seq).dump(2) << "\n";
    std::cout << "wrote " << record_path << "\n";
  }
  return kExitOk;
}

int cmd_check_split(const std::string& coarse_path, int cell,
                    const std::string& piece_path, int r) {
  SimplicialComplex coarse = read_mesh_file(coarse_path);
  SimplicialComplex piece = read_mesh_file(piece_path);
  if (cell < 0 || cell >= static_cast<int>(coarse.cells().size())) {
    throw std::invalid_argument("cell index out of range");
  }
  if (!covers(coarse, coarse.cells()[cell], piece)) {
    std::cerr << "piece does not cover the cell\n";
    return kExitInputError;
  }
  if (!is_simple(coarse, cell, piece)) {
    std::cout << "not simple: the piece modifies the cell boundary away from "
                 "the domain boundary\n";
    return kExitMathFailure;
  }
  SubdivisionRecord record = replace_cell(coarse, cell, piece);
  SplitCheck check = is_split(record, r);
  if (check.split) {
    std::cout << "split at r=" << r << " (" << record.new_boundary_faces.size()
              << " faces checked)\n";
    return kExitOk;
  }
  std::cout << "not split at r=" << r << "; witnesses:\n";
  for (const auto& witness : check.witnesses) {
    std::cout << "  face {";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      std::cout << (i ? ", " : " ") << point_to_string(witness[i]);
    }
    std::cout << " }\n";
  }
  return kExitMathFailure;
}

int cmd_verify(long budget, int jobs, const std::string& criteria_text, int max_k) {
  VerifyOptions opts;
  opts.max_columns = budget;
  opts.jobs = jobs;
  opts.max_k = max_k;
  if (!criteria_text.empty()) {
    for (int c : parse_subset(criteria_text)) opts.criteria.insert(c);
  }
  VerifyReport report = run_paper_suite(opts);
  std::cout << format_report(report);
  return report.all_passed() ? kExitOk : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spline space dimensions on simplicial subdivisions"};
  app.require_subcommand(1);

  std::string mesh_path, piece_path, output, record_path, d_range, format = "csv";
  std::string method = "all", scheme, mode_name = "affine", point_text, subset_text;
  std::string criteria_text;
  int r = 1, cell = 0, builtin_k = 0, jobs = 0, max_k = 0;
  long budget = 2500;
  std::optional<long> d;

  auto* validate_cmd = app.add_subcommand("validate", "validate a mesh file");
  validate_cmd->add_option("mesh", mesh_path, "mesh JSON file")->required();

  auto* dim_cmd = app.add_subcommand("dim", "spline space dimensions");
  dim_cmd->add_option("mesh", mesh_path)->required();
  dim_cmd->add_option("--r", r, "smoothness order")->required();
  dim_cmd->add_option("--d", d, "polynomial degree");
  dim_cmd->add_option("--d-range", d_range, "degree range a:b");
  dim_cmd->add_option("--method", method, "oracle|euler|formula|all");
  dim_cmd->add_option("--scheme", scheme, "alfeld|facet|double-alfeld|pyramid");
  dim_cmd->add_option("--format", format, "csv|json");

  auto* homology_cmd = app.add_subcommand("homology", "graded homology dimensions");
  homology_cmd->add_option("mesh", mesh_path)->required();
  homology_cmd->add_option("--r", r)->required();
  homology_cmd->add_option("--d", d);
  homology_cmd->add_option("--d-range", d_range);
  homology_cmd->add_option("--format", format);

  auto* basis_cmd = app.add_subcommand("basis", "explicit spline space basis");
  basis_cmd->add_option("mesh", mesh_path)->required();
  basis_cmd->add_option("--r", r)->required();
  long basis_d = 0;
  basis_cmd->add_option("--d", basis_d)->required();
  basis_cmd->add_option("--mode", mode_name, "affine|cone");
  basis_cmd->add_option("--format", format, "text|json");

  auto* subdivide_cmd = app.add_subcommand("subdivide", "construct a subdivision");
  subdivide_cmd->add_option("mesh", mesh_path, "input mesh (omit with --builtin-simplex)");
  subdivide_cmd->add_option("--builtin-simplex", builtin_k, "use the standard k-simplex");
  subdivide_cmd->add_option("--scheme", scheme, "alfeld|facet|double-alfeld")->required();
  subdivide_cmd->add_option("--cell", cell, "cell to split (alfeld)");
  subdivide_cmd->add_option("--point", point_text, "interior point, comma-separated");
  subdivide_cmd->add_option("--subset", subset_text, "facet indices, comma-separated");
  subdivide_cmd->add_option("--output,-o", output, "output mesh file")->required();
  subdivide_cmd->add_option("--record", record_path, "sidecar record file");

  auto* check_cmd = app.add_subcommand("check-split", "simple/split predicates");
  check_cmd->add_option("coarse", mesh_path)->required();
  check_cmd->add_option("piece", piece_path)->required();
  check_cmd->add_option("--cell", cell, "cell of the coarse mesh")->required();
  check_cmd->add_option("--r", r)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the reproduction suite");
  std::string suite = "paper";
  verify_cmd->add_option("--suite", suite, "suite name (paper)");
  verify_cmd->add_option("--budget", budget,
                         "max linear system columns per exact computation (0 = no cap)");
  verify_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  verify_cmd->add_option("--criteria", criteria_text, "comma-separated criterion ids");
  verify_cmd->add_option("--max-k", max_k, "restrict to dimensions <= k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitInputError : kExitOk;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(mesh_path);
    if (dim_cmd->parsed()) return cmd_dim(mesh_path, r, d, d_range, method, scheme, format);
    if (homology_cmd->parsed()) return cmd_homology(mesh_path, r, d, d_range, format);
    if (basis_cmd->parsed()) {
      return cmd_basis(mesh_path, r, basis_d, mode_name,
                       format == "csv" ? "text" : format);
    }
    if (subdivide_cmd->parsed()) {
      if (mesh_path.empty() && builtin_k == 0) {
        throw std::invalid_argument("provide a mesh file or --builtin-simplex K");
      }
      return cmd_subdivide(mesh_path, builtin_k, scheme, cell, point_text,
                           subset_text, output, record_path);
    }
    if (check_cmd->parsed()) return cmd_check_split(mesh_path, cell, piece_path, r);
    if (verify_cmd->parsed()) {
      if (suite != "paper") throw std::invalid_argument("unknown suite: " + suite);
      return cmd_verify(budget, jobs, criteria_text, max_k);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
