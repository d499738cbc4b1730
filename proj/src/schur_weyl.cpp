#include "conjucirc/schur_weyl.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace conjucirc {

Box StandardTableau::box_of(int letter) const {
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (int c = 0; c < static_cast<int>(rows[r].size()); ++c)
            if (rows[r][c] == letter) return {r + 1, c + 1};
    throw std::out_of_range("letter not in tableau");
}

std::vector<int> StandardTableau::flatten() const {
    std::vector<int> out;
    for (const auto& row : rows) out.insert(out.end(), row.begin(), row.end());
    return out;
}

std::vector<StandardTableau> standard_tableaux(const Partition& lambda) {
    int n = lambda.n();
    if (n == 0) return {StandardTableau{lambda, {}}};
    if (n == 1) return {StandardTableau{lambda, {{1}}}};

    std::vector<StandardTableau> out;
    auto corners = corner_boxes(lambda);
    // descending row of the removed corner = last-letter group order
    for (auto it = corners.rbegin(); it != corners.rend(); ++it) {
        std::vector<int> parts = lambda.parts;
        parts[it->row - 1] -= 1;
        if (parts[it->row - 1] == 0) parts.erase(parts.begin() + (it->row - 1));
        for (const StandardTableau& sub : standard_tableaux(Partition(parts))) {
            StandardTableau t{lambda, sub.rows};
            if (it->col == 1 && static_cast<int>(t.rows.size()) < it->row)
                t.rows.emplace_back();
            t.rows[it->row - 1].push_back(n);
            out.push_back(std::move(t));
        }
    }
    return out;
}

std::vector<std::pair<Partition, int>> branching_blocks(const Partition& lambda) {
    std::vector<std::pair<Partition, int>> blocks;
    auto corners = corner_boxes(lambda);
    int offset = 0;
    for (auto it = corners.rbegin(); it != corners.rend(); ++it) {
        std::vector<int> parts = lambda.parts;
        parts[it->row - 1] -= 1;
        if (parts[it->row - 1] == 0) parts.erase(parts.begin() + (it->row - 1));
        Partition alpha(parts);
        blocks.emplace_back(alpha, offset);
        offset += static_cast<int>(irrep_dim(alpha));
    }
    return blocks;
}

namespace {

// Matrices of the adjacent transpositions (m, m+1), m = 1..n-1, in the
// tableau basis.
std::vector<Eigen::MatrixXd> coxeter_generators(
    const std::vector<StandardTableau>& tableaux) {
    int dim = static_cast<int>(tableaux.size());
    int n = tableaux.front().n();

    std::map<std::vector<int>, int> index_of;
    for (int t = 0; t < dim; ++t) index_of[tableaux[t].flatten()] = t;

    std::vector<Eigen::MatrixXd> gens;
    for (int m = 1; m <= n - 1; ++m) {
        Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
        for (int t = 0; t < dim; ++t) {
            Box bm = tableaux[t].box_of(m);
            Box bm1 = tableaux[t].box_of(m + 1);
            int r = (bm1.col - bm1.row) - (bm.col - bm.row);  // signed axial distance
            g(t, t) = 1.0 / r;
            if (std::abs(r) >= 2) {
                StandardTableau swapped = tableaux[t];
                swapped.rows[bm.row - 1][bm.col - 1] = m + 1;
                swapped.rows[bm1.row - 1][bm1.col - 1] = m;
                int t2 = index_of.at(swapped.flatten());
                g(t2, t) = std::sqrt(1.0 - 1.0 / (static_cast<double>(r) * r));
            }
        }
        gens.push_back(std::move(g));
    }
    return gens;
}

// pi as a word in adjacent transpositions: sorting the one-line notation
// by position swaps gives pi * s_{w1} * ... * s_{wL} = e, hence
// pi = s_{wL} * ... * s_{w1}.
std::vector<int> adjacent_word(const Permutation& pi) {
    std::vector<int> im = pi.images;
    std::vector<int> word;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int j = 0; j + 1 < static_cast<int>(im.size()); ++j)
            if (im[j] > im[j + 1]) {
                std::swap(im[j], im[j + 1]);
                word.push_back(j + 1);
                changed = true;
            }
    }
    return word;
}

Eigen::MatrixXd rep_matrix(const std::vector<Eigen::MatrixXd>& gens, int dim,
                           const Permutation& pi) {
    Eigen::MatrixXd phi = Eigen::MatrixXd::Identity(dim, dim);
    auto word = adjacent_word(pi);
    for (auto it = word.rbegin(); it != word.rend(); ++it) phi = phi * gens[*it - 1];
    return phi;
}

long pow_long(int base, int exp) {
    long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

constexpr long kMaxOperatorSide = 1 << 16;

// Row images of the sparse permutation matrix V(pi): column c maps to
// row rows[c].
std::vector<long> perm_row_map(const Permutation& p, int d) {
    int n = p.size();
    long side = pow_long(d, n);
    Permutation pinv = p.inverse();
    std::vector<long> rows(side);
    std::vector<int> idx(n);
    for (long col = 0; col < side; ++col) {
        long rem = col;
        for (int f = n - 1; f >= 0; --f) {
            idx[f] = static_cast<int>(rem % d);
            rem /= d;
        }
        long row = 0;
        for (int f = 0; f < n; ++f) row = row * d + idx[pinv(f)];
        rows[col] = row;
    }
    return rows;
}

}  // namespace

IrrepMatrix young_orthogonal_rep(const Partition& lambda, const Permutation& pi) {
    if (pi.size() != lambda.n())
        throw std::invalid_argument("young_orthogonal_rep: permutation size mismatch");
    auto tableaux = standard_tableaux(lambda);
    int dim = static_cast<int>(tableaux.size());
    if (lambda.n() == 0)
        return {lambda, pi, Eigen::MatrixXd::Identity(1, 1)};
    auto gens = coxeter_generators(tableaux);
    return {lambda, pi, rep_matrix(gens, dim, pi)};
}

std::vector<std::vector<CMatrix>> matrix_units_all(const Partition& lambda, int d) {
    int n = lambda.n();
    long side = pow_long(d, n);
    if (side > kMaxOperatorSide)
        throw std::length_error("matrix_unit: operator side exceeds supported scale");

    auto tableaux = standard_tableaux(lambda);
    int dim = static_cast<int>(tableaux.size());
    std::vector<std::vector<CMatrix>> units(
        dim, std::vector<CMatrix>(dim, CMatrix::Zero(side, side)));
    if (lambda.height() > d) return units;  // multiplicity zero

    auto gens = coxeter_generators(tableaux);
    double fact = 1.0;
    for (int i = 2; i <= n; ++i) fact *= i;
    double scale = dim / fact;

    for (const Permutation& pi : all_permutations(n)) {
        Eigen::MatrixXd phi = rep_matrix(gens, dim, pi);
        auto rows = perm_row_map(pi, d);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                double coeff = scale * phi(i, j);
                if (coeff == 0.0) continue;
                for (long col = 0; col < side; ++col)
                    units[i][j](rows[col], col) += coeff;
            }
    }
    return units;
}

CMatrix matrix_unit(const Partition& lambda, int i, int j, int d) {
    auto tableaux_count = static_cast<int>(irrep_dim(lambda));
    if (i < 1 || i > tableaux_count || j < 1 || j > tableaux_count)
        throw std::out_of_range("matrix_unit: index out of range");
    return matrix_units_all(lambda, d)[i - 1][j - 1];
}

CMatrix young_projector(const Partition& lambda, int d) {
    int n = lambda.n();
    long side = pow_long(d, n);
    if (side > kMaxOperatorSide)
        throw std::length_error("young_projector: operator side exceeds supported scale");
    CMatrix p = CMatrix::Zero(side, side);
    if (lambda.height() > d) return p;

    auto tableaux = standard_tableaux(lambda);
    int dim = static_cast<int>(tableaux.size());
    auto gens = coxeter_generators(tableaux);
    double fact = 1.0;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (const Permutation& pi : all_permutations(n)) {
        double chi = rep_matrix(gens, dim, pi).trace();
        if (chi == 0.0) continue;
        auto rows = perm_row_map(pi, d);
        double coeff = dim / fact * chi;
        for (long col = 0; col < side; ++col) p(rows[col], col) += coeff;
    }
    return p;
}

CMatrix branching_embed(const Partition& alpha, int i, int j, int d) {
    return kron(matrix_unit(alpha, i, j, d), CMatrix::Identity(d, d));
}

}  // namespace conjucirc
