#pragma once

#include "stratumforge/builders.hpp"
#include "stratumforge/intmat.hpp"
#include "stratumforge/scalar.hpp"

#include <array>
#include <string>
#include <vector>

namespace stratumforge {

// Relative cocycle chi in H^1(S, Z; C) given on a symplectic basis (a_i, b_i)
// and on paths delta_j from the base zero to zero j (j = 2..k).
struct ExactCocycle {
    BasisContext ctx;
    int g = 0;
    std::vector<int> orders;  // zero orders, sum 2g-2
    std::vector<Vec2> a, b;   // size g
    std::vector<Vec2> rel;    // size k-1

    int k() const { return (int)orders.size(); }
    void validate() const;
};

struct AbsoluteCocycle {
    BasisContext ctx;
    int g = 0;
    std::vector<Vec2> a, b;
    bool operator==(const AbsoluteCocycle& o) const;
};

Scalar volume(const ExactCocycle& chi);
Scalar volume(const AbsoluteCocycle& chi);

struct LatticeResult {
    bool lattice = false;
    int rank = 0;
    Vec2 g1, g2;     // reduced basis when lattice
    Scalar covolume; // |det(g1, g2)|
};

LatticeResult is_lattice(const ExactCocycle& chi);

// Branch classes of the zeros: i ~ j iff chi(delta_i) - chi(delta_j) lies in
// the absolute image (decided exactly, lattice or not).
Partition psi_of_cocycle(const ExactCocycle& chi);

struct MinmaxResult {
    std::vector<int> assignment; // zero -> class, lexicographically least optimum
    Int value = 0;
};

// Minimize over partitions with prescribed class sizes the largest class sum.
MinmaxResult minmax_assignment(const std::vector<int>& class_sizes,
                               const std::vector<Int>& weights);

struct RealizabilityVerdict {
    bool realizable = false;
    std::string failing; // "volume", "inequality", or empty
    Scalar vol;
    bool lattice = false;
    Vec2 lat_g1, lat_g2;
    Scalar area;
    Int ratio = 0; // V / Area when lattice (always an integer then)
    Partition psi;
    Partition witness; // optimal branch classes in the lattice case
    Int minmax = 0;
    // Theorem conditions do not depend on the target component.
    static constexpr bool component_independent = true;
};

RealizabilityVerdict theorem1_check(const ExactCocycle& chi);

using Mat2Rat = std::array<std::array<Rat, 2>, 2>;

ExactCocycle gl2_act(const Mat2Rat& m, const ExactCocycle& chi);

// Add a purely-relative cocycle with values in the absolute image.
ExactCocycle point_push(const ExactCocycle& chi, const std::vector<Vec2>& rel_shift);

AbsoluteCocycle restrict_cocycle(const ExactCocycle& chi);

// Periods of a grid surface read along its computed symplectic basis and
// vertex paths from the base zero; rational cocycle over the empty tower.
ExactCocycle induced_cocycle(const GridSurface& s);

} // namespace stratumforge
