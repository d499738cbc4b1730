// Standard Young tableaux, Young's orthogonal representation of S_n, and
// the matrix units E^lambda_ij realized as operators on (C_d)^{tensor n}.
//
// Tableaux are kept in last-letter order: they are grouped by the shape
// alpha left after deleting the box containing n, groups ordered by
// descending row of that box (equivalently, alpha in descending
// lexicographic order), recursively. With this order the restriction of
// an irrep to S_{n-1} is block diagonal with one block per alpha.
#pragma once

#include <vector>

#include "conjucirc/linalg.hpp"
#include "conjucirc/permutation.hpp"
#include "conjucirc/young.hpp"

namespace conjucirc {

struct StandardTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;  // entries 1..n, rows/cols increasing

    int n() const { return shape.n(); }
    Box box_of(int letter) const;  // 1-based letter
    std::vector<int> flatten() const;
};

std::vector<StandardTableau> standard_tableaux(const Partition& lambda);

struct IrrepMatrix {
    Partition shape;
    Permutation permutation;
    Eigen::MatrixXd data;  // d_lambda x d_lambda, real orthogonal
};

// Young's orthogonal form: the adjacent transposition (m, m+1) acts on a
// tableau with diagonal entry 1/r and off-diagonal sqrt(1 - 1/r^2)
// coupling to the swapped tableau, where r is the signed axial distance
// from the box of m to the box of m+1.
IrrepMatrix young_orthogonal_rep(const Partition& lambda, const Permutation& pi);

// E^lambda_ij = (d_lambda/n!) sum_pi [phi^lambda(pi)]_ij V(pi), an
// operator on (C_d)^{tensor n}; indices are 1-based. Satisfies
// E_ij E_kl = delta_jk E_il and tr E_ij = delta_ij m_lambda. Returns the
// zero operator when the height exceeds d.
CMatrix matrix_unit(const Partition& lambda, int i, int j, int d);

// All d_lambda^2 units in one pass over S_n; units[i-1][j-1] = E_ij.
std::vector<std::vector<CMatrix>> matrix_units_all(const Partition& lambda, int d);

// P^lambda = sum_i E_ii; Hermitian idempotent, tr = m_lambda d_lambda.
CMatrix young_projector(const Partition& lambda, int d);

// E^alpha_ij tensor 1_d, the embedding of C[S_{n-1}] into C[S_n].
CMatrix branching_embed(const Partition& alpha, int i, int j, int d);

// The block layout of lambda's tableaux: (alpha, index offset) per group,
// in group order. Offsets are 0-based.
std::vector<std::pair<Partition, int>> branching_blocks(const Partition& lambda);

}  // namespace conjucirc
