#pragma once

#include "stratumforge/diagram.hpp"
#include "stratumforge/grid_surface.hpp"
#include "stratumforge/invariants.hpp"

#include <optional>

namespace stratumforge {

// Partition of the zero indices {0..k-1} into branch classes; zero j has
// order stratum.orders[j] (orders sorted descending).
using Partition = std::vector<std::vector<int>>;

Partition parse_partition(const std::string& s, int k); // "1,2|3" (1-based indices)
std::string partition_str(const Partition& p);          // 1-based

// True when the branch classes of the surface match p up to renaming zeros
// of equal order.
bool psi_matches(const GridSurface& s, const Stratum& st, const Partition& p);

// Minimal admissible width: the largest class weight sum max_i sum (n_j + 1).
int min_width(const Stratum& st, const Partition& p);

GridSurface build_hyp_minimal(int g, int d);
GridSurface build_hyp_double(int g, int d, bool same_class);
GridSurface build_odd(const Stratum& st, const Partition& p, int d);
GridSurface build_even(const Stratum& st, const Partition& p, int d);
GridSurface build_general(const Stratum& st, const Partition& p, int d);

// The slit diagrams behind the pattern-based builders. The square-tiled and
// explicit-cover constructions have no diagram form and return nothing.
SlitTorusDiagram hyp_minimal_diagram(int g, int d);
SlitTorusDiagram hyp_double_diagram(int g, int d); // distinct branch classes
SlitTorusDiagram odd_diagram(const Stratum& st, const Partition& p, int d);
std::optional<SlitTorusDiagram> even_diagram(const Stratum& st, const Partition& p, int d);
std::optional<SlitTorusDiagram> general_diagram(const Stratum& st, const Partition& p, int d);

// Dispatcher: validates the label against the stratum's component set, builds,
// and verifies the result through the invariant pipeline.
GridSurface build_component(const Stratum& st, Label label, const Partition& p, int d);

} // namespace stratumforge
