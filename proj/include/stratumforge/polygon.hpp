#pragma once

#include "stratumforge/checker.hpp"
#include "stratumforge/scalar.hpp"

namespace stratumforge {

// Translation surface given by polygons with exact vertex coordinates and a
// translation pairing of boundary edges. Edge (p, i) runs from vertex i to
// vertex i+1 of polygon p; its partner carries the opposite vector.
struct PolygonSurface {
    BasisContext ctx;
    std::vector<std::vector<Vec2>> polys;                    // ccw vertex lists
    std::vector<std::vector<std::pair<int, int>>> pairing;   // per edge: partner
};

// Slit-torus constructions for genus two from a normalized cocycle.
PolygonSurface build_genus2(const ExactCocycle& chi, const Stratum& target);

// Stratum from combinatorial vertex-cycle angle counts and the exact area.
std::pair<Stratum, Scalar> verify_polygon_surface(const PolygonSurface& p);

} // namespace stratumforge
