#pragma once

// Bi-tangent prolongation of sampled surfaces and the Euler-Lagrange
// residual (external force) dL along surfaces and curves.
//
// Stencils are second order: central differences inside, one-sided
// three-point differences on the edges for first derivatives of the
// samples. dL needs derivatives of the momentum field as well, so it is
// only defined on interior nodes; the momentum is differentiated from
// interior samples only (one-sided next to an edge).

#include <cstddef>

#include "mvt/dynamics.hpp"
#include "mvt/grids.hpp"
#include "mvt/parallel.hpp"

namespace mvt {

/// d/dt and d/ds of the samples at every node.
struct SurfaceTangents {
  VectorField dt;
  VectorField ds;
};

SurfaceTangents surface_tangents(const SurfaceGrid& S, Exec exec = Exec::parallel);

/// xdot^{mu nu}(t, s) = dx^mu/dt dx^nu/ds - dx^mu/ds dx^nu/dt at every node.
BivectorField wedge_prolongation(const SurfaceGrid& S, Exec exec = Exec::parallel);

/// Per interior node
///   dL_nu = dL/dx^nu - dS^mu/dt d/ds(dL/dxdot^{mu nu}) + dS^mu/ds d/dt(dL/dxdot^{mu nu}).
/// A DomainError from L is rethrown with the offending node index.
CovectorField delta_L_surface(const LagrangianField& L, const SurfaceGrid& S, Exec exec = Exec::parallel);

/// The same force computed by composing the triple: at each interior node
/// build the bivector prolongation of the momentum surface (x, P L(xdot))
/// as a PhaseElement2, push it through alpha2 and subtract from dL.
CovectorField delta_L_surface_composed(const LagrangianField& L, const SurfaceGrid& S);

/// Per interior node dL/dx^sigma - d/dt(dL/dxdot^sigma).
CovectorField delta_L_curve(const CurveLagrangian& L, const CurveGrid& gamma, Exec exec = Exec::parallel);

/// Velocities of a curve at every sample.
std::vector<Vector> curve_velocities(const CurveGrid& gamma);

struct ElReport {
  double max_norm = 0.0;
  bool pass = true;
  NodeIndex worst{};
};

/// Max over nodes of the Euclidean norm of the field; pass iff <= tol.
ElReport el_check(const CovectorField& residual, double tol);

}  // namespace mvt
