#pragma once

#include "stratumforge/grid_surface.hpp"
#include "stratumforge/homology.hpp"

#include <optional>
#include <set>
#include <string>

namespace stratumforge {

enum class Label { Hyperelliptic, SpinEven, SpinOdd, NonHyperelliptic, Connected };

const char* label_str(Label l); // "hyp", "even", "odd", "nonhyp", "conn"
std::optional<Label> parse_label(const std::string& s);

struct ComponentLabel {
    Label tag;
    Stratum stratum;
};

// Connected components of a stratum per the classification of strata of
// abelian differentials (genus >= 2).
std::set<Label> stratum_components(const Stratum& st);

int arf_invariant(const GridSurface& s); // spin parity; all orders even

struct FlatInvolution {
    Perm cells;                 // cell map; image cell is the half-turn of the source
    std::array<Rat, 2> shift;   // base shift c of the covered map z -> c - z
    int fixed_cells = 0, fixed_hedges = 0, fixed_vedges = 0, fixed_vertices = 0;
    int fixed_points() const { return fixed_cells + fixed_hedges + fixed_vedges + fixed_vertices; }
    int quotient_genus = 0;
    bool swaps_zeros = false;   // meaningful when there are exactly two zeros
};

// All -id affine automorphisms (as cell maps), sorted by cell permutation.
std::vector<FlatInvolution> involution_search(const GridSurface& s);

// Single-cylinder reversal test: some rotation of the top sequence glues
// B_i to T_{k-i+1} for all i.
bool single_cylinder_hyperelliptic_check(const CylinderDiagram& c);

ComponentLabel component_of(const GridSurface& s);

} // namespace stratumforge
