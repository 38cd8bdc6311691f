#pragma once

#include <vector>
#include <string>
#include <cstdint>

namespace stratumforge {

// Permutations act on 0..n-1; p[i] is the image of i.
using Perm = std::vector<int>;

bool is_permutation(const Perm& p);
Perm identity_perm(int n);
Perm inverse(const Perm& p);
// compose(p, q)(i) = p(q(i))
Perm compose(const Perm& p, const Perm& q);
// [p, q] = p q p^-1 q^-1
Perm commutator(const Perm& p, const Perm& q);
Perm conjugate(const Perm& p, const Perm& by); // by^-1 p by

std::vector<std::vector<int>> cycles_of(const Perm& p);
// Cycle lengths, sorted descending.
std::vector<int> cycle_type(const Perm& p);

// Orbit of the group generated by the given permutations is all of 0..n-1.
bool transitive(const std::vector<const Perm*>& gens, int n);
inline bool transitive(const Perm& r, const Perm& u) {
    return transitive({&r, &u}, (int)r.size());
}

// Permutation from cycle notation, e.g. perm_from_cycles(5, {{0,1,2}}).
Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles);

// Canonical representative of a cycle type: consecutive blocks, e.g. type
// (3,2) on 5 points -> (0 1 2)(3 4).
Perm canonical_of_type(int n, const std::vector<int>& type);

// All partitions of n, each sorted descending; deterministic order.
std::vector<std::vector<int>> partitions_of(int n);

// All elements of S_n with the given cycle type (type sorted descending).
std::vector<Perm> class_elements(int n, const std::vector<int>& type);

std::string perm_str(const Perm& p); // 1-based image list "2 3 1"

} // namespace stratumforge
