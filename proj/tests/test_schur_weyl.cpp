#include "doctest.h"

#include "conjucirc/schur_weyl.hpp"

using namespace conjucirc;

TEST_CASE("standard tableaux") {
    CHECK(standard_tableaux(Partition({4})).size() == 1);
    CHECK(standard_tableaux(Partition({2, 1})).size() == 2);
    CHECK(standard_tableaux(Partition({2, 2})).size() == 2);

    for (int n = 1; n <= 6; ++n)
        for (const Partition& lambda : partitions(n, n)) {
            auto tableaux = standard_tableaux(lambda);
            CHECK(tableaux.size() == static_cast<std::size_t>(irrep_dim(lambda)));
            // rows and columns strictly increase
            for (const auto& t : tableaux) {
                for (const auto& row : t.rows)
                    for (std::size_t c = 1; c < row.size(); ++c)
                        CHECK(row[c] > row[c - 1]);
                for (std::size_t r = 1; r < t.rows.size(); ++r)
                    for (std::size_t c = 0; c < t.rows[r].size(); ++c)
                        CHECK(t.rows[r][c] > t.rows[r - 1][c]);
            }
            // last-letter order: the shape after deleting n walks through
            // branching_blocks in order
            auto blocks = branching_blocks(lambda);
            std::size_t idx = 0;
            for (const auto& [alpha, offset] : blocks) {
                CHECK(offset == static_cast<int>(idx));
                for (int i = 0; i < static_cast<int>(irrep_dim(alpha)); ++i, ++idx) {
                    Box bn = tableaux[idx].box_of(n);
                    std::vector<int> parts = lambda.parts;
                    parts[bn.row - 1] -= 1;
                    if (parts[bn.row - 1] == 0)
                        parts.erase(parts.begin() + (bn.row - 1));
                    CHECK(Partition(parts) == alpha);
                }
            }
            CHECK(idx == tableaux.size());
        }
}

TEST_CASE("Young orthogonal representation") {
    // identity maps to the identity matrix
    CHECK(max_abs(CMatrix(young_orthogonal_rep(Partition({3, 1}),
                                               Permutation::identity(4))
                              .data.cast<Complex>()) -
                  CMatrix::Identity(3, 3)) == 0.0);

    // sign representation on the single-column diagram
    for (const auto& pi : all_permutations(3)) {
        auto rep = young_orthogonal_rep(Partition({1, 1, 1}), pi);
        REQUIRE(rep.data.rows() == 1);
        CHECK(rep.data(0, 0) == doctest::Approx(double(sign(pi))));
    }

    // the adjacent transposition (1 2) on [2,1] in last-letter order
    auto g = young_orthogonal_rep(Partition({2, 1}), Permutation({1, 0, 2}));
    CHECK(g.data(0, 0) == doctest::Approx(1.0));
    CHECK(g.data(1, 1) == doctest::Approx(-1.0));
    CHECK(std::abs(g.data(0, 1)) < 1e-14);

    // homomorphism and orthogonality for all lambda |- n <= 5
    for (int n = 2; n <= 5; ++n) {
        auto perms = all_permutations(n);
        for (const Partition& lambda : partitions(n, n)) {
            int dim = static_cast<int>(irrep_dim(lambda));
            std::size_t stride = (n == 5) ? 7 : 1;
            for (std::size_t a = 0; a < perms.size(); a += stride) {
                Eigen::MatrixXd pa = young_orthogonal_rep(lambda, perms[a]).data;
                CHECK((pa * pa.transpose() - Eigen::MatrixXd::Identity(dim, dim))
                          .cwiseAbs()
                          .maxCoeff() < 1e-12);
                for (std::size_t b = 0; b < perms.size(); b += stride) {
                    Eigen::MatrixXd pb = young_orthogonal_rep(lambda, perms[b]).data;
                    Eigen::MatrixXd pab =
                        young_orthogonal_rep(lambda, perms[a] * perms[b]).data;
                    CHECK((pa * pb - pab).cwiseAbs().maxCoeff() < 1e-10);
                }
            }
        }
    }

    // restriction to S_{n-1} is block diagonal: phi^lambda(pi') equals
    // the direct sum of phi^alpha(pi') over the branching blocks
    for (int n : {3, 4}) {
        for (const Partition& lambda : partitions(n, n)) {
            auto blocks = branching_blocks(lambda);
            for (const auto& pi_small : all_permutations(n - 1)) {
                std::vector<int> im = pi_small.images;
                im.push_back(n - 1);  // embed fixing the last point
                Eigen::MatrixXd big =
                    young_orthogonal_rep(lambda, Permutation(im)).data;
                for (const auto& [alpha, offset] : blocks) {
                    int da = static_cast<int>(irrep_dim(alpha));
                    Eigen::MatrixXd sub =
                        young_orthogonal_rep(alpha, pi_small).data;
                    CHECK((big.block(offset, offset, da, da) - sub)
                              .cwiseAbs()
                              .maxCoeff() < 1e-12);
                    // off-diagonal blocks vanish
                    big.block(offset, offset, da, da).setZero();
                }
                CHECK(big.cwiseAbs().maxCoeff() < 1e-12);
            }
        }
    }
}

TEST_CASE("matrix units") {
    // E^[1]_11 is the identity on one factor, trace d
    for (int d : {2, 3}) {
        CMatrix e = matrix_unit(Partition({1}), 1, 1, d);
        CHECK(max_abs(e - CMatrix::Identity(d, d)) < 1e-14);
    }

    // E^[1,1]_11 is the two-party antisymmetric projector
    for (int d : {2, 3})
        CHECK(max_abs(matrix_unit(Partition({1, 1}), 1, 1, d) -
                      antisym_projector(d, 2)) < 1e-12);

    // tr E^[2,1]_11 at d = 2 equals the multiplicity 2
    CHECK(matrix_unit(Partition({2, 1}), 1, 1, 2).trace().real() ==
          doctest::Approx(2.0).epsilon(1e-12));

    // unit relations E_ij E_kl = delta_jk E_il, tr E_ij = delta_ij m_lambda
    for (int d = 2; d <= 3; ++d)
        for (int n = 2; n <= 3; ++n) {
            auto lams = partitions(n, n);
            std::vector<std::vector<std::vector<CMatrix>>> units;
            for (const auto& lambda : lams) units.push_back(matrix_units_all(lambda, d));
            for (std::size_t a = 0; a < lams.size(); ++a) {
                double m = static_cast<double>(multiplicity(lams[a], d));
                int da = static_cast<int>(units[a].size());
                for (int i = 0; i < da; ++i)
                    for (int j = 0; j < da; ++j) {
                        CHECK(std::abs(units[a][i][j].trace().real() -
                                       (i == j ? m : 0.0)) < 1e-9);
                        for (std::size_t b = 0; b < lams.size(); ++b) {
                            int db = static_cast<int>(units[b].size());
                            for (int p = 0; p < db; ++p)
                                for (int q = 0; q < db; ++q) {
                                    CMatrix prod = units[a][i][j] * units[b][p][q];
                                    CMatrix expect =
                                        (a == b && j == p)
                                            ? units[a][i][q]
                                            : CMatrix::Zero(prod.rows(), prod.cols());
                                    CHECK(max_abs(prod - expect) < 1e-9);
                                }
                        }
                    }
            }
        }

    // height above d gives the zero operator
    CHECK(max_abs(matrix_unit(Partition({1, 1, 1}), 1, 1, 2)) == 0.0);
}

TEST_CASE("Young projectors") {
    for (int d = 2; d <= 3; ++d)
        for (int n = 2; n <= 4; ++n) {
            long side = 1;
            for (int i = 0; i < n; ++i) side *= d;
            CMatrix total = CMatrix::Zero(side, side);
            std::vector<CMatrix> projectors;
            for (const Partition& lambda : partitions(n, d)) {
                CMatrix p = young_projector(lambda, d);
                CHECK(max_abs(p - p.adjoint()) < 1e-11);
                CHECK(max_abs(p * p - p) < 1e-10);
                CHECK(p.trace().real() ==
                      doctest::Approx(static_cast<double>(multiplicity(lambda, d) *
                                                          irrep_dim(lambda)))
                          .epsilon(1e-10));
                total += p;
                projectors.push_back(std::move(p));
            }
            CHECK(max_abs(total - CMatrix::Identity(side, side)) < 1e-10);
            for (std::size_t a = 0; a < projectors.size(); ++a)
                for (std::size_t b = a + 1; b < projectors.size(); ++b)
                    CHECK(max_abs(projectors[a] * projectors[b]) < 1e-10);
        }

    // tr P^{[2,1]} = 16 at d = 3
    CHECK(young_projector(Partition({2, 1}), 3).trace().real() ==
          doctest::Approx(16.0).epsilon(1e-10));

    // single-column projector is the antisymmetric projector
    for (int d = 2; d <= 3; ++d)
        for (int n = 2; n <= d; ++n)
            CHECK(max_abs(young_projector(Partition(std::vector<int>(n, 1)), d) -
                          antisym_projector(d, n)) < 1e-11);
}

TEST_CASE("branching embedding") {
    // alpha = [1]: E_11 (x) 1 = P^[2] + P^[1,1]
    for (int d : {2, 3}) {
        CMatrix lhs = branching_embed(Partition({1}), 1, 1, d);
        CHECK(max_abs(lhs - CMatrix::Identity(d * d, d * d)) < 1e-13);
        CMatrix rhs = young_projector(Partition({2}), d) +
                      young_projector(Partition({1, 1}), d);
        CHECK(max_abs(lhs - rhs) < 1e-11);
    }

    // trace of the embedded unit: m_alpha * d
    CHECK(branching_embed(Partition({2}), 1, 1, 2).trace().real() ==
          doctest::Approx(6.0).epsilon(1e-11));

    // E^alpha_ij (x) 1 = sum over lambda containing alpha of the unit at
    // the alpha block, for n = 3
    for (int d : {2, 3}) {
        for (const Partition& alpha : partitions(2, d)) {
            int da = static_cast<int>(irrep_dim(alpha));
            for (int i = 1; i <= da; ++i)
                for (int j = 1; j <= da; ++j) {
                    CMatrix lhs = branching_embed(alpha, i, j, d);
                    CMatrix rhs = CMatrix::Zero(lhs.rows(), lhs.cols());
                    for (const Partition& lambda : partitions(3, d))
                        for (const auto& [beta, offset] : branching_blocks(lambda))
                            if (beta == alpha)
                                rhs += matrix_unit(lambda, offset + i, offset + j, d);
                    CHECK(max_abs(lhs - rhs) < 1e-9);
                }
        }
    }
}
