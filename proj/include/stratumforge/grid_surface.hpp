#pragma once

#include "stratumforge/perm.hpp"
#include "stratumforge/rational.hpp"

#include <array>
#include <vector>

namespace stratumforge {

// Multiset of zero orders n_1 >= n_2 >= ... with sum 2g-2. Empty for tori.
struct Stratum {
    std::vector<int> orders;

    int genus() const;
    int zero_count() const { return (int)orders.size(); }
    bool all_even() const;
    std::string str() const; // "H(3,3)", "H()" for the torus
    bool operator==(const Stratum& o) const { return orders == o.orders; }
    bool operator<(const Stratum& o) const { return orders < o.orders; }
};

Stratum parse_stratum(const std::string& s);

// Corner encoding: 4*cell + q with q: 0=BL, 1=BR, 2=TR, 3=TL.
// Edge ids: 0..n-1 horizontal (bottom side of cell i, oriented east),
// n..2n-1 vertical (left side of cell i, oriented north).
// Half-edge ids: 2*edge + end with end: 0 = tail, 1 = head.
struct GridSurface {
    int n = 0;
    Perm right, up;
    Rat sx = 1, sy = 1;

    // derived at construction
    std::vector<int> corner_vertex;               // 4n corners -> vertex id
    std::vector<std::vector<int>> vertex_corners; // ccw corner orbit per vertex
    std::vector<std::vector<int>> rotation;       // ccw half-edge list per vertex
    std::vector<int> halfedge_vertex;             // 4n half-edges -> vertex
    std::vector<int> halfedge_pos;                // index in rotation list
    std::vector<std::pair<int, int>> zero_marks;  // (vertex, order), order desc
    std::vector<std::array<Rat, 2>> cell_pos;     // developing image of cell corners (BL)

    int num_edges() const { return 2 * n; }
    int num_vertices() const { return (int)vertex_corners.size(); }
    int edge_tail(int e) const;
    int edge_head(int e) const;
    bool edge_horizontal(int e) const { return e < n; }
    std::array<Rat, 2> edge_disp(int e) const;
    int vertex_order(int v) const { return (int)vertex_corners[v].size() / 4 - 1; }
    Rat volume() const { return Rat(n) * sx * sy; }
    int genus() const;
};

GridSurface make_grid_surface(int n, const Perm& r, const Perm& u, const Rat& sx = 1,
                              const Rat& sy = 1);

Stratum stratum_of(const GridSurface& s);

struct CylinderDiagram {
    struct Cylinder {
        Rat circumference, height;
        std::vector<int> top, bottom; // saddle connection ids, cyclic, eastward
    };
    std::vector<Rat> sc_length; // by saddle connection id
    std::vector<Cylinder> cylinders;
};

CylinderDiagram cylinder_decomposition(const GridSurface& s);

struct PeriodLattice {
    int rank = 0;
    // row basis of the lattice in R^2, upper triangular shape
    std::vector<std::array<Rat, 2>> basis;
    Rat covolume = 0;
    bool is_unit = false; // equals Z + iZ
};

PeriodLattice absolute_period_lattice(const GridSurface& s);

struct BranchProfile {
    std::vector<std::array<Rat, 2>> points;        // branch point positions in [0,1)^2
    std::vector<std::vector<int>> zero_classes;    // indices into zero_marks, per point
    std::vector<std::vector<int>> local_degrees;   // partition of d per point (1-padded)
    int degree = 0;
    std::vector<std::vector<int>> psi() const;     // just the classes
};

BranchProfile branch_profile(const GridSurface& s);

// Relabel cells by BFS (right then up) minimizing (right, up) lexicographically
// over all start cells. Equal canonical forms <=> same surface up to relabeling.
GridSurface canonical_form(const GridSurface& s);
bool isomorphic(const GridSurface& a, const GridSurface& b);

// Base-torus position of a vertex modulo Z+iZ; requires unit absolute lattice.
std::array<Rat, 2> vertex_base_position(const GridSurface& s, int v);

} // namespace stratumforge
