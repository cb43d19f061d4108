#include "mvt/grid_io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "mvt/errors.hpp"

namespace mvt {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_grid(std::ostream& out, const SurfaceGrid& S) {
  out << "# shape: " << S.nt() << ' ' << S.ns() << '\n';
  out << "# origin: " << format_real(S.t0()) << ' ' << format_real(S.s0()) << '\n';
  out << "# spacing: " << format_real(S.dt()) << ' ' << format_real(S.ds()) << '\n';
  out << "i j";
  for (std::size_t s = 0; s < S.dim(); ++s) out << " x" << s + 1;
  out << '\n';
  for (std::size_t i = 0; i < S.nt(); ++i)
    for (std::size_t j = 0; j < S.ns(); ++j) {
      out << i << ' ' << j;
      for (double v : S.point(i, j)) out << ' ' << format_real(v);
      out << '\n';
    }
}

void write_grid(std::ostream& out, const CurveGrid& gamma) {
  out << "# shape: " << gamma.size() << '\n';
  out << "# origin: " << format_real(gamma.t(0)) << '\n';
  out << "# spacing: " << format_real(gamma.dt()) << '\n';
  out << "i";
  for (std::size_t s = 0; s < gamma.dim(); ++s) out << " x" << s + 1;
  out << '\n';
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    out << i;
    for (std::size_t s = 0; s < gamma.dim(); ++s) out << ' ' << format_real(gamma.coord(i, s));
    out << '\n';
  }
}

namespace {

struct Table {
  std::vector<double> shape, origin, spacing;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> row_line;
};

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string w; ss >> w;) out.push_back(w);
  return out;
}

double parse_number(const std::string& w, std::size_t line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(w, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != w.size()) throw FormatError("line " + std::to_string(line) + ": not a number: '" + w + "'");
  return v;
}

Table read_table(std::istream& in, std::size_t axes) {
  Table t;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto words = split(line);
    if (words.empty()) continue;
    if (words[0] == "#") {
      if (words.size() < 2) continue;
      std::vector<double>* target = nullptr;
      if (words[1] == "shape:") target = &t.shape;
      if (words[1] == "origin:") target = &t.origin;
      if (words[1] == "spacing:") target = &t.spacing;
      if (!target) continue;
      for (std::size_t k = 2; k < words.size(); ++k) target->push_back(parse_number(words[k], n));
      if (target->size() != axes)
        throw FormatError("line " + std::to_string(n) + ": '" + words[1] + "' needs " + std::to_string(axes) +
                          " values");
      continue;
    }
    if (words[0][0] == '#') continue;
    if (t.header.empty()) {
      t.header = words;
      continue;
    }
    std::vector<double> row;
    for (const auto& w : words) row.push_back(parse_number(w, n));
    t.rows.push_back(std::move(row));
    t.row_line.push_back(n);
  }
  if (t.shape.empty()) throw FormatError("missing '# shape:' line");
  if (t.origin.empty()) throw FormatError("missing '# origin:' line");
  if (t.spacing.empty()) throw FormatError("missing '# spacing:' line");
  if (t.header.empty()) throw FormatError("missing header row");

  const char* index_names[] = {"i", "j"};
  if (t.header.size() <= axes) throw FormatError("header names no coordinate columns");
  for (std::size_t a = 0; a < axes; ++a)
    if (t.header[a] != index_names[a])
      throw FormatError(std::string("header column ") + std::to_string(a + 1) + " must be '" + index_names[a] + "'");
  for (std::size_t c = axes; c < t.header.size(); ++c)
    if (t.header[c] != "x" + std::to_string(c - axes + 1))
      throw FormatError("header column " + std::to_string(c + 1) + " must be 'x" + std::to_string(c - axes + 1) + "'");

  std::size_t expected = 1;
  for (double s : t.shape) {
    if (s < 5 || s != std::floor(s)) throw FormatError("shape entries must be integers >= 5");
    expected *= static_cast<std::size_t>(s);
  }
  if (t.rows.size() != expected)
    throw FormatError("row count " + std::to_string(t.rows.size()) + " does not match shape (" +
                      std::to_string(expected) + ")");
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    if (t.rows[r].size() != t.header.size())
      throw FormatError("line " + std::to_string(t.row_line[r]) + ": expected " + std::to_string(t.header.size()) +
                        " columns");
  return t;
}

}  // namespace

SurfaceGrid read_surface_grid(std::istream& in) {
  const Table t = read_table(in, 2);
  const auto nt = static_cast<std::size_t>(t.shape[0]);
  const auto ns = static_cast<std::size_t>(t.shape[1]);
  const std::size_t dim = t.header.size() - 2;
  if (dim < 2) throw FormatError("surface grids need at least 2 coordinates");
  if (!(t.spacing[0] > 0.0 && t.spacing[1] > 0.0)) throw FormatError("spacing must be positive");
  SurfaceGrid S(nt, ns, t.origin[0], t.spacing[0], t.origin[1], t.spacing[1], dim);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    if (row[0] != static_cast<double>(r / ns) || row[1] != static_cast<double>(r % ns))
      throw FormatError("line " + std::to_string(t.row_line[r]) + ": node indices out of row-major order");
    for (std::size_t s = 0; s < dim; ++s) S.coord(r / ns, r % ns, s) = row[2 + s];
  }
  S.check_finite();
  return S;
}

CurveGrid read_curve_grid(std::istream& in) {
  const Table t = read_table(in, 1);
  const auto n = static_cast<std::size_t>(t.shape[0]);
  const std::size_t dim = t.header.size() - 1;
  if (!(t.spacing[0] > 0.0)) throw FormatError("spacing must be positive");
  CurveGrid gamma(n, t.origin[0], t.spacing[0], dim);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = t.rows[r];
    if (row[0] != static_cast<double>(r))
      throw FormatError("line " + std::to_string(t.row_line[r]) + ": node indices out of order");
    Vector x(dim);
    for (std::size_t s = 0; s < dim; ++s) {
      x[s] = row[1 + s];
      if (!std::isfinite(x[s])) throw FormatError("line " + std::to_string(t.row_line[r]) + ": non-finite sample");
    }
    gamma.set(r, x);
  }
  return gamma;
}

Bivector parse_bivector_components(const nlohmann::json& entries, std::size_t dim, const std::string& field) {
  if (!entries.is_array()) throw FormatError(field + ": expected a list of [mu, nu, value]");
  std::vector<double> full(dim * dim, 0.0);
  std::vector<bool> seen(dim * dim, false);
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        !e[2].is_number())
      throw FormatError(field + ": entries must be [mu, nu, value] with 1-based integer indices");
    const auto mu = e[0].get<long long>();
    const auto nu = e[1].get<long long>();
    if (mu < 1 || nu < 1 || mu > static_cast<long long>(dim) || nu > static_cast<long long>(dim))
      throw FormatError(field + ": index out of range 1.." + std::to_string(dim));
    const double v = e[2].get<double>();
    if (!std::isfinite(v)) throw FormatError(field + ": non-finite component");
    const std::size_t k = static_cast<std::size_t>(mu - 1) * dim + static_cast<std::size_t>(nu - 1);
    if (seen[k]) throw FormatError(field + ": component listed twice");
    seen[k] = true;
    full[k] = v;
  }
  for (std::size_t a = 0; a < dim; ++a) {
    if (full[a * dim + a] != 0.0) throw FormatError(field + ": diagonal component must vanish");
    for (std::size_t b = a + 1; b < dim; ++b) {
      const std::size_t up = a * dim + b;
      const std::size_t lo = b * dim + a;
      if (seen[lo] && seen[up] && full[lo] != -full[up]) throw FormatError(field + ": components not antisymmetric");
      if (seen[lo] && !seen[up]) full[up] = -full[lo];
    }
  }
  return Bivector::from_upper(dim, full);
}

AffineConstraint2 parse_constraint_spec(const nlohmann::json& spec) {
  if (!spec.is_object()) throw FormatError("constraint spec must be an object");
  if (spec.contains("builtin")) {
    if (spec["builtin"] != "example7") throw FormatError("builtin: unknown constraint");
    std::vector<double> f{0.0, 0.0, 0.0, 0.0};
    if (spec.contains("f")) {
      const auto& jf = spec["f"];
      if (jf.is_number()) {
        f[0] = jf.get<double>();
      } else if (jf.is_array() && jf.size() == 4) {
        for (std::size_t k = 0; k < 4; ++k) {
          if (!jf[k].is_number()) throw FormatError("f: coefficients must be numbers");
          f[k] = jf[k].get<double>();
        }
      } else {
        throw FormatError("f: expected a number or [c0, cx, cy, cz]");
      }
    }
    AffineConstraint2 A = AffineConstraint2::plateau_diagonal();
    A.section = [f](const Vector& x) {
      const double fx = f[0] + f[1] * x[0] + f[2] * x[1] + f[3] * x[2];
      Bivector a(3);
      a.set(0, 1, 1.0);
      a.set(0, 2, fx);
      a.set(1, 2, -fx);
      return a;
    };
    return A;
  }
  if (!spec.contains("dimension") || !spec["dimension"].is_number_integer())
    throw FormatError("dimension: required integer");
  const auto dim_raw = spec["dimension"].get<long long>();
  if (dim_raw < 2 || dim_raw > 16) throw FormatError("dimension: must lie in 2..16");
  const auto dim = static_cast<std::size_t>(dim_raw);
  Bivector section(dim);
  if (spec.contains("section")) section = parse_bivector_components(spec["section"], dim, "section");
  std::vector<Bivector> basis;
  if (spec.contains("basis")) {
    if (!spec["basis"].is_array()) throw FormatError("basis: expected a list of generators");
    for (std::size_t k = 0; k < spec["basis"].size(); ++k)
      basis.push_back(parse_bivector_components(spec["basis"][k], dim, "basis[" + std::to_string(k) + "]"));
  }
  try {
    return AffineConstraint2::constant(section, basis);
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("basis: ") + e.what());
  }
}

AffineConstraint2 read_constraint_spec(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("constraint spec: ") + e.what());
  }
  return parse_constraint_spec(j);
}

}  // namespace mvt
