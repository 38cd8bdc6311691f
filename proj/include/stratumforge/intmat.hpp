#pragma once

#include "stratumforge/rational.hpp"

#include <vector>

namespace stratumforge {

using IMat = std::vector<std::vector<Int>>; // row major
using QMat = std::vector<std::vector<Rat>>;

IMat imat_zero(int rows, int cols);
IMat imat_identity(int n);
IMat imat_mul(const IMat& a, const IMat& b);
IMat imat_transpose(const IMat& a);

// Row-style Hermite normal form: returns H with the same row span as M,
// pivots positive, entries above pivots reduced, zero rows dropped.
IMat hnf_rows(IMat m);

int rank_q(QMat m); // rank over the rationals

// Basis of the integer kernel {x : M x = 0}, columns as vectors.
std::vector<std::vector<Int>> kernel_z(const IMat& m);

// Smith normal form: returns diagonal d and unimodular p, q with p*m*q = d.
struct Snf {
    IMat d, p, q;
};
Snf snf(const IMat& m);

// Solve M x = b over the integers; empty if no integral solution.
bool solve_z(const IMat& m, const std::vector<Int>& b, std::vector<Int>& x);

// Reduce v modulo the lattice spanned by the rows of the (full-rank, square)
// basis matrix, returning the representative with coordinates in [0, 1).
std::vector<Rat> reduce_mod_lattice(const std::vector<Rat>& v, const QMat& basis);

} // namespace stratumforge
