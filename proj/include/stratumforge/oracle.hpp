#pragma once

#include "stratumforge/grid_surface.hpp"
#include "stratumforge/invariants.hpp"

#include <optional>
#include <vector>

namespace stratumforge {

// All transitive pairs (r, u) on N cells up to simultaneous conjugacy, in
// canonical form, optionally filtered by stratum.
std::vector<GridSurface> enumerate_origamis(int N, const std::optional<Stratum>& filter = {},
                                            int bound = 10);

struct CensusRow {
    Stratum stratum;
    Label label; // Connected for genus-1 rows (empty stratum)
    long long count = 0;
};
std::vector<CensusRow> census(int N, int jobs = 1, int bound = 8);

// Torus cover with several branch points: sheet permutations r, u for the
// torus directions and one permutation per branch point, with
// sigma_l ... sigma_1 = [r, u].
struct MonodromyDatum {
    int d = 1;
    Perm r, u;
    std::vector<Perm> sigma;
    void validate() const;
    bool operator==(const MonodromyDatum& o) const {
        return d == o.d && r == o.r && u == o.u && sigma == o.sigma;
    }
    bool operator<(const MonodromyDatum& o) const;
};

// The covering surface, branch point t placed over ((t+1)/(l+1), 0).
GridSurface realize_cover(const MonodromyDatum& m);

MonodromyDatum canonical_datum(const MonodromyDatum& m);

// Orbit under adjacent braid swaps (both directions) and whole-tuple
// conjugation by r and u; closed, BFS order, canonical representatives.
std::vector<MonodromyDatum> hurwitz_orbit(const MonodromyDatum& m, size_t cap = 10000000);

struct Certificate {
    Stratum stratum;
    Label label = Label::Connected;
    std::vector<int> psi_shape;
    int d = 0;
    bool exists = false;
    std::optional<MonodromyDatum> witness;
    long long tuples_checked = 0;
    std::vector<std::string> notes;
};

// Search all monodromy data whose branch data matches (stratum, psi shape, d)
// for a cover in the component; witness or exhaustion certificate. Throws
// CertificationFailed when the outcome contradicts expect_exists.
Certificate certify(const Stratum& st, Label label, const std::vector<int>& psi_shape, int d,
                    bool expect_exists);

} // namespace stratumforge
