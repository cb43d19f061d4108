#include "mvt/app/problem_spec.hpp"

#include <cmath>
#include <fstream>

#include "mvt/errors.hpp"
#include "mvt/grid_io.hpp"

namespace mvt::app {

namespace {

using nlohmann::json;

const char* const kKinds[] = {"plateau", "constrained-plateau", "nonholonomic-check", "phase-check", "classical-el"};

double number_in(const json& obj, const std::string& path, const char* field, std::optional<double> fallback) {
  if (!obj.contains(field)) {
    if (fallback) return *fallback;
    throw SpecError(path + field, "required number is missing");
  }
  const json& v = obj[field];
  if (!v.is_number()) throw SpecError(path + field, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw SpecError(path + field, "must be finite");
  return d;
}

std::vector<double> numbers(const json& obj, const char* field, std::size_t n) {
  if (!obj.contains(field)) throw SpecError(field, "required list is missing");
  const json& v = obj[field];
  if (!v.is_array() || v.size() != n) throw SpecError(field, "expected a list of " + std::to_string(n) + " numbers");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number() || !std::isfinite(e.get<double>())) throw SpecError(field, "entries must be finite numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

}  // namespace

ProblemSpec::ProblemSpec(json raw, std::filesystem::path base_dir) : raw_(std::move(raw)), base_dir_(std::move(base_dir)) {
  if (!raw_.is_object()) throw SpecError("spec", "expected a JSON object");
  kind_ = text("kind");
  bool known = false;
  for (const char* k : kKinds) known = known || kind_ == k;
  if (!known) throw SpecError("kind", "unknown kind '" + kind_ + "'");
}

ProblemSpec ProblemSpec::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("--spec", "cannot open '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecError("--spec", e.what());
  }
  return ProblemSpec(std::move(j), path.parent_path());
}

double ProblemSpec::number(const char* field, std::optional<double> fallback) const {
  return number_in(raw_, "", field, fallback);
}

std::size_t ProblemSpec::count(const char* field, std::optional<std::size_t> fallback) const {
  if (!raw_.contains(field)) {
    if (fallback) return *fallback;
    throw SpecError(field, "required integer is missing");
  }
  const json& v = raw_[field];
  if (!v.is_number_integer() || v.get<long long>() < 0) throw SpecError(field, "expected a non-negative integer");
  return static_cast<std::size_t>(v.get<long long>());
}

std::string ProblemSpec::text(const char* field, std::optional<std::string> fallback) const {
  if (!raw_.contains(field)) {
    if (fallback) return *fallback;
    throw SpecError(field, "required string is missing");
  }
  if (!raw_[field].is_string()) throw SpecError(field, "expected a string");
  return raw_[field].get<std::string>();
}

SolveOptions ProblemSpec::solve_options() const {
  SolveOptions o;
  o.tol = number("tol", o.tol);
  if (!(o.tol > 0.0)) throw SpecError("tol", "must be positive");
  o.max_iter = count("max_iter", o.max_iter);
  if (o.max_iter < 1) throw SpecError("max_iter", "must be at least 1");
  o.damping = number("damping", o.damping);
  if (!(o.damping > 0.0 && o.damping <= 1.0)) throw SpecError("damping", "must lie in (0, 1]");
  return o;
}

Metric ProblemSpec::metric() const {
  if (!raw_.contains("metric")) throw SpecError("metric", "required object is missing");
  const json& m = raw_["metric"];
  if (!m.is_object()) throw SpecError("metric", "expected an object");
  try {
    if (m.contains("matrix")) {
      const json& rows = m["matrix"];
      if (!rows.is_array() || rows.size() < 2) throw SpecError("metric.matrix", "expected a square list of rows");
      const std::size_t n = rows.size();
      std::vector<double> g;
      for (const auto& r : rows) {
        if (!r.is_array() || r.size() != n) throw SpecError("metric.matrix", "rows must have length " + std::to_string(n));
        for (const auto& e : r) {
          if (!e.is_number()) throw SpecError("metric.matrix", "entries must be numbers");
          g.push_back(e.get<double>());
        }
      }
      return Metric(n, g);
    }
    const std::string type = m.contains("type") && m["type"].is_string() ? m["type"].get<std::string>() : "";
    if (!m.contains("dim") || !m["dim"].is_number_integer()) throw SpecError("metric.dim", "required integer");
    const auto dim = m["dim"].get<long long>();
    if (dim < 2 || dim > 16) throw SpecError("metric.dim", "must lie in 2..16");
    if (type == "euclidean") return Metric::euclidean(static_cast<std::size_t>(dim));
    if (type == "minkowski") return Metric::minkowski(static_cast<std::size_t>(dim));
    throw SpecError("metric.type", "expected 'euclidean' or 'minkowski'");
  } catch (const SingularError& e) {
    throw SpecError("metric", e.what());
  } catch (const std::invalid_argument& e) {
    throw SpecError("metric", e.what());
  }
}

std::unique_ptr<LagrangianField> ProblemSpec::surface_lagrangian(std::size_t dim) const {
  const std::string name = text("lagrangian");
  if (name == "plateau") return std::make_unique<PlateauLagrangian>(dim);
  if (name == "constant") return std::make_unique<ConstantLagrangian>(dim, number("lagrangian_value", 0.0));
  if (name == "nambu-goto") {
    Metric g = raw_.contains("metric") ? metric() : Metric::euclidean(dim);
    if (g.dim() != dim) throw SpecError("metric.dim", "does not match the dimension " + std::to_string(dim));
    return std::make_unique<NambuGotoLagrangian>(g);
  }
  throw SpecError("lagrangian", "expected 'nambu-goto', 'plateau' or 'constant' for surfaces");
}

std::function<double(double, double)> ProblemSpec::height(const char* field) const {
  if (!raw_.contains(field) || !raw_[field].is_object()) throw SpecError(field, "required object is missing");
  const json& h = raw_[field];
  const std::string path = std::string(field) + ".";
  if (!h.contains("name") || !h["name"].is_string()) throw SpecError(path + "name", "required string is missing");
  const std::string name = h["name"].get<std::string>();
  if (name == "scherk") return [](double x, double y) { return std::log(std::cos(y) / std::cos(x)); };
  if (name == "catenoid") return [](double x, double y) { return std::acosh(std::sqrt(x * x + y * y)); };
  if (name == "sin-product") return [](double x, double y) { return std::sin(x) * std::sin(y); };
  if (name == "diagonal-quadratic") return [](double x, double y) { return (x + y) * (x + y); };
  if (name == "constant") {
    const double c = number_in(h, path, "c", std::nullopt);
    return [c](double, double) { return c; };
  }
  if (name == "affine") {
    const double a = number_in(h, path, "a", std::nullopt);
    const double b = number_in(h, path, "b", std::nullopt);
    const double c = number_in(h, path, "c", 0.0);
    return [a, b, c](double x, double y) { return a * x + b * y + c; };
  }
  if (name == "diagonal-affine") {
    const double a = number_in(h, path, "a", std::nullopt);
    const double b = number_in(h, path, "b", 0.0);
    return [a, b](double x, double y) { return a * (x + y) + b; };
  }
  throw SpecError(path + "name", "unknown height function '" + name + "'");
}

GraphGrid ProblemSpec::graph(const char* field) const {
  if (raw_.contains(field) && raw_[field].is_object() && raw_[field].contains("file")) {
    const json& f = raw_[field]["file"];
    const std::string path = std::string(field) + ".file";
    if (!f.is_string()) throw SpecError(path, "expected a path");
    std::ifstream in(resolve(f.get<std::string>()));
    if (!in) throw SpecError(path, "cannot open '" + f.get<std::string>() + "'");
    SurfaceGrid S = [&] {
      try {
        return read_surface_grid(in);
      } catch (const FormatError& e) {
        throw SpecError(path, e.what());
      }
    }();
    if (S.dim() != 3) throw SpecError(path, "graph tables need exactly 3 coordinates");
    GraphGrid g(S.coord(0, 0, 0), S.coord(S.nt() - 1, 0, 0), S.coord(0, 0, 1), S.coord(0, S.ns() - 1, 1), S.nt(),
                S.ns());
    for (std::size_t i = 0; i < S.nt(); ++i)
      for (std::size_t j = 0; j < S.ns(); ++j) {
        const double tol = 1e-9 * (1.0 + std::abs(g.x(i)) + std::abs(g.y(j)));
        if (std::abs(S.coord(i, j, 0) - g.x(i)) > tol || std::abs(S.coord(i, j, 1) - g.y(j)) > tol)
          throw SpecError(path, "table is not a graph over a uniform (x, y) grid");
        g.z(i, j) = S.coord(i, j, 2);
      }
    return g;
  }
  const auto d = numbers(raw_, "domain", 4);
  if (!raw_.contains("shape") || !raw_["shape"].is_array() || raw_["shape"].size() != 2 ||
      !raw_["shape"][0].is_number_integer() || !raw_["shape"][1].is_number_integer())
    throw SpecError("shape", "expected [nx, ny] integers");
  const auto nx = raw_["shape"][0].get<long long>();
  const auto ny = raw_["shape"][1].get<long long>();
  if (nx < 5 || ny < 5 || nx > 4097 || ny > 4097) throw SpecError("shape", "entries must lie in 5..4097");
  if (!(d[1] > d[0] && d[3] > d[2])) throw SpecError("domain", "expected x0 < x1 and y0 < y1");
  const auto fn = height(field);
  GraphGrid g = GraphGrid::from_function(d[0], d[1], d[2], d[3], static_cast<std::size_t>(nx),
                                         static_cast<std::size_t>(ny), fn);
  try {
    g.check_boundary_finite();
  } catch (const std::invalid_argument& e) {
    throw SpecError(field, e.what());
  }
  return g;
}

AffineConstraint2 ProblemSpec::constraint() const {
  if (!raw_.contains("constraint")) throw SpecError("constraint", "required object is missing");
  const json& c = raw_["constraint"];
  try {
    if (c.is_object() && c.contains("file")) {
      if (!c["file"].is_string()) throw SpecError("constraint.file", "expected a path");
      std::ifstream in(resolve(c["file"].get<std::string>()));
      if (!in) throw SpecError("constraint.file", "cannot open '" + c["file"].get<std::string>() + "'");
      return read_constraint_spec(in);
    }
    return parse_constraint_spec(c);
  } catch (const FormatError& e) {
    throw SpecError("constraint", e.what());
  }
}

std::filesystem::path ProblemSpec::resolve(const std::string& file) const {
  std::filesystem::path p(file);
  if (p.is_relative() && !base_dir_.empty()) return base_dir_ / p;
  return p;
}

}  // namespace mvt::app
