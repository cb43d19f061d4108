#pragma once

// Text tables for sampled surfaces and curves, and the constraint spec file.
//
// Grid table:
//   # shape: nt ns          (curves: "# shape: n")
//   # origin: t0 s0
//   # spacing: dt ds
//   i j x1 x2 ... xm        (curves: "i x1 ... xm")
//   0 0 <17 significant digits> ...
//
// Constraint spec (JSON):
//   { "dimension": 3,
//     "section": [[1, 2, 1.0]],                  // 1-based (mu, nu, a^{mu nu})
//     "basis": [[[1, 3, 1.0], [2, 3, -1.0]]] }   // one list per generator
// or { "builtin": "example7", "f": c } / "f": [c0, cx, cy, cz] for an affine f.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "mvt/constraints.hpp"
#include "mvt/grids.hpp"

namespace mvt {

/// printf("%.17g").
std::string format_real(double v);

void write_grid(std::ostream& out, const SurfaceGrid& S);
void write_grid(std::ostream& out, const CurveGrid& gamma);

/// Throws FormatError naming the line or field at fault.
SurfaceGrid read_surface_grid(std::istream& in);
CurveGrid read_curve_grid(std::istream& in);

/// [[mu, nu, value], ...] with 1-based indices; the lower triangle may be
/// listed instead of, or consistently with, the upper one.
Bivector parse_bivector_components(const nlohmann::json& entries, std::size_t dim, const std::string& field);

/// Throws FormatError on malformed, non-antisymmetric or dependent data.
AffineConstraint2 parse_constraint_spec(const nlohmann::json& spec);
AffineConstraint2 read_constraint_spec(std::istream& in);

}  // namespace mvt
