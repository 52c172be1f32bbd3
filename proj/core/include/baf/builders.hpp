#pragma once

#include <vector>

#include "baf/surface.hpp"

namespace baf {

/// Unit-square torus: two right isosceles triangles, trivial holonomy.
Surface build_square_torus();

/// Torus tiled by two equilateral triangles.
Surface build_hex_torus();

/// Annulus sector of angle theta (0 < theta < pi) between radii 1 and lambda,
/// concentric chords identified by z -> lambda*z, radial sides by rotation.
/// One regular marked point; the core cylinder is hyperbolic of angle theta.
Surface build_dilation_torus(double theta, double lambda);

///// Genus-0 surface with four cone points: a central triangle (vertices 0, 1,
/// shape) with a self-folded triangle of apex angle theta[i] and dilation
/// ratio[i] glued to each side. Fourth cone angle 4pi - sum(theta).
Surface build_star_sphere(const std::array<double, 3>& theta, const std::array<double, 3>& ratio,
                          cpx shape);

/// Hyperbolic cylinder of angle theta >= pi and ratio lambda, realized as k
/// chord sectors (theta/k < pi each) closed into a torus. The k-1 intermediate
/// sector vertices are auxiliary marked points.
Surface build_big_cylinder(double theta, double lambda, int sectors);

/// Genus-2 surface containing two disjoint hyperbolic cylinders of angle
/// theta and ratio lambda, glued from two trapezoid sectors along their
/// subdivided radial sides.
Surface build_two_cylinder_fixture(double theta = 0.6 * 3.141592653589793238463,
                                   double lambda = 2.0);

/// Triangulates a simple polygon by ear clipping and applies the side
/// pairing (a perfect matching side index -> side index) as gluings.
Surface build_from_polygon(const std::vector<cpx>& vertices,
                           const std::vector<std::pair<int, int>>& side_pairing);

}  // namespace baf
