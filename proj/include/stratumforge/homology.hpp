#pragma once

#include "stratumforge/grid_surface.hpp"
#include "stratumforge/intmat.hpp"

#include <vector>

namespace stratumforge {

// Integer 1-chain, indexed by edge id (0..2n-1).
using Chain = std::vector<long long>;

struct DirectedEdge {
    int edge = 0;
    bool forward = true;
};
// Closed edge path: consecutive directed edges share endpoints head-to-tail.
using Path = std::vector<DirectedEdge>;

Chain path_chain(const GridSurface& s, const Path& p);
bool is_cycle(const GridSurface& s, const Chain& c);

// Period of a chain under the developing map.
std::array<Rat, 2> chain_period(const GridSurface& s, const Chain& c);

// Algebraic intersection number of two cycles.
long long intersection(const GridSurface& s, const Chain& x, const Chain& y);

// Turning number of the curve obtained by resolving the cycle off the
// singularities (left detours); components and double points included.
struct ResolvedCurve {
    long long components = 0;
    long long turning_quarters = 0; // sum of (steps - 2) over disk arcs
    long long self_crossings = 0;   // interleaved arc pairs, mod-2 meaningful
    long long index_sum() const;    // sum of turning numbers of the components
};
ResolvedCurve resolve_cycle(const GridSurface& s, const Chain& c);

// Spin quadratic form value of the cycle's class; requires all even zero orders.
int q_parity_resolved(const GridSurface& s, const Chain& c);

struct SymplecticBasis {
    std::vector<Chain> cycles; // a1, b1, ..., ag, bg
    IMat gram;                 // block diagonal [[0,1],[-1,0]]
    std::vector<Path> paths;   // closed-path representatives, same order
};

SymplecticBasis homology_symplectic_basis(const GridSurface& s);

// Basis of H_1(S, Z) as cycles (not yet symplectically reduced).
std::vector<Chain> homology_basis(const GridSurface& s);

IMat intersection_gram(const GridSurface& s, const std::vector<Chain>& cycles);

// Face boundary chain of a cell (ccw).
Chain face_boundary(const GridSurface& s, int cell);

// Quadratic form on H_1(S; Z/2) evaluated through a precomputed symplectic
// basis; cheap for chains with large coefficients.
struct SpinForm {
    std::vector<Chain> basis; // 2g
    IMat gram;
    std::vector<int> qvals;
    std::vector<std::vector<char>> solver; // GF(2)-reduced [basis|faces|rhs] template
    std::vector<int> pivot_col;
    int n_edges = 0, n_basis = 0, n_faces = 0;

    int eval(const Chain& c) const;
};
SpinForm spin_form(const GridSurface& s);

enum class Detour { Left, Right };

// Winding-number parity of a closed edge path, detouring around marked
// vertices on the chosen side; requires all even zero orders.
int winding_parity(const GridSurface& s, const Path& p, Detour d = Detour::Left);

// Turning number of the path (well-defined integer for the fixed detour side).
long long winding_index(const GridSurface& s, const Path& p, Detour d = Detour::Left);

Path chain_to_path(const GridSurface& s, const Chain& c);

// Edge path from one vertex to another (BFS, deterministic).
Path vertex_path(const GridSurface& s, int from, int to);

} // namespace stratumforge
