// Acceptance suite: every headline claim of the construction, each at a
// fixed tolerance, one PASS/FAIL line per criterion. Exit code is the
// number of failed criteria.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "conjucirc/circuit.hpp"
#include "conjucirc/haar.hpp"
#include "conjucirc/performance.hpp"
#include "conjucirc/permutation.hpp"
#include "conjucirc/schur_weyl.hpp"
#include "conjucirc/young.hpp"

using namespace conjucirc;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, double quantity,
            const std::string& detail) {
    std::printf("[%s] criterion %d: %-34s %s = %.3e\n", pass ? "PASS" : "FAIL",
                index, name.c_str(), detail.c_str(), quantity);
    if (!pass) ++failures;
}

CMatrix kron_pow(const CMatrix& u, int k) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (int i = 0; i < k; ++i) out = kron(out, u);
    return out;
}

const std::vector<std::pair<int, int>> kCertPairs{{2, 1}, {3, 1}, {3, 2}};

void criterion_1_fidelity_theorem() {
    double worst = 0.0;
    for (auto [d, k] : std::vector<std::pair<int, int>>{
             {2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}}) {
        double theory = theory_fidelity(d, k);
        for (int rep = 0; rep < 20; ++rep) {
            CMatrix u = haar_unitary(d, derive_seed(101u, 100u * d + 10u * k + rep));
            worst = std::max(worst,
                             std::abs(conjugation_fidelity(d, k, u) - theory));
        }
    }
    report(1, "fidelity (k+1)/(d(d-k))", worst <= 1e-9, worst,
           "max |F - theory| over 20 Haar samples");
}

void criterion_2_exact_isometry() {
    double worst = 0.0;
    for (int d : {2, 3, 4}) {
        CMatrix v = exact_conjugation_isometry(d);
        for (int rep = 0; rep < 20; ++rep) {
            CMatrix u = haar_unitary(d, derive_seed(202u, 100u * d + rep));
            worst = std::max(
                worst, max_abs(v.adjoint() * kron_pow(u, d - 1) * v - u.conjugate()));
        }
    }
    report(2, "exact conjugation at k=d-1", worst <= 1e-10, worst,
           "max |V^dag U^(d-1) V - conj(U)|");
}

void criterion_3_primal_value() {
    double worst = 0.0;
    for (auto [d, k] : kCertPairs) {
        CMatrix omega = performance_operator(d, k);
        double value = primal_value(optimal_superchannel(d, k), omega);
        worst = std::max(worst, std::abs(value - theory_fidelity(d, k)));
    }
    report(3, "primal tr(S Omega)", worst <= 1e-9, worst,
           "max |tr(S Omega) - theory|");
}

void criterion_4_dual_constant() {
    bool pass = true;
    for (int d = 2; d <= 8; ++d)
        for (int k = 1; k <= d - 1; ++k)
            if (max_c(k + 1, d).value / d != Rational(k + 1, d * (d - k)))
                pass = false;
    report(4, "dual constant exact-rational", pass, pass ? 0.0 : 1.0,
           "mismatches over d <= 8");
}

void criterion_5_dual_inequality() {
    double worst_gap = 0.0;
    double worst_residual = 0.0;
    for (auto [d, k] : kCertPairs) {
        CMatrix omega = performance_operator(d, k);
        DualOperator dual = dual_operator(d, k);
        double c = static_cast<double>(dual.constant_c);
        worst_gap = std::min(worst_gap, min_eigenvalue(c * dual.matrix - omega));
        for (const auto& [name, value] : dual_residuals(dual))
            worst_residual = std::max(worst_residual, value);
    }
    bool pass = worst_gap >= -1e-9 && worst_residual <= 1e-9;
    report(5, "dual inequality Omega <= c S-hat", pass, worst_gap,
           "min eig(c S-hat - Omega), residuals <= 1e-9");
}

void criterion_6_c_lambda() {
    bool pass = true;
    for (int d = 1; d <= 8; ++d)
        for (int n = 1; n <= 8; ++n)
            for (const Partition& lambda : partitions(n, d))
                if (c_lambda_closed(lambda, d) != c_lambda_brute(lambda, d))
                    pass = false;
    for (int n = 1; n <= 10; ++n)
        for (const Partition& lambda : partitions(n, n))
            if (vershik_sum(lambda) != Rational(n)) pass = false;
    report(6, "c(lambda) closed form + Vershik", pass, pass ? 0.0 : 1.0,
           "exact-rational mismatches");
}

void criterion_7_representation_core() {
    double worst = 0.0;
    for (int d : {2, 3})
        for (int n : {3, 4}) {
            auto lams = partitions(n, n);
            std::vector<std::vector<std::vector<CMatrix>>> units;
            for (const auto& lambda : lams)
                units.push_back(matrix_units_all(lambda, d));
            for (std::size_t a = 0; a < lams.size(); ++a) {
                double m = static_cast<double>(multiplicity(lams[a], d));
                int da = static_cast<int>(units[a].size());
                for (int i = 0; i < da; ++i)
                    for (int j = 0; j < da; ++j) {
                        worst = std::max(worst,
                                         std::abs(units[a][i][j].trace().real() -
                                                  (i == j ? m : 0.0)));
                        for (std::size_t b = 0; b < lams.size(); ++b) {
                            int db = static_cast<int>(units[b].size());
                            for (int p = 0; p < db; ++p)
                                for (int q = 0; q < db; ++q) {
                                    CMatrix prod = units[a][i][j] * units[b][p][q];
                                    if (a == b && j == p) prod -= units[a][i][q];
                                    worst = std::max(worst, max_abs(prod));
                                }
                        }
                    }
            }
            // branching lemma: E^alpha_ij (x) 1 = sum_lambda E^{aa}_{ij}(lambda)
            for (const Partition& alpha : partitions(n - 1, d)) {
                int da = static_cast<int>(irrep_dim(alpha));
                for (int i = 1; i <= da; ++i)
                    for (int j = 1; j <= da; ++j) {
                        CMatrix lhs = branching_embed(alpha, i, j, d);
                        CMatrix rhs = CMatrix::Zero(lhs.rows(), lhs.cols());
                        for (std::size_t b = 0; b < lams.size(); ++b)
                            for (const auto& [beta, off] : branching_blocks(lams[b]))
                                if (beta == alpha)
                                    rhs += units[b][off + i - 1][off + j - 1];
                        worst = std::max(worst, max_abs(lhs - rhs));
                    }
            }
        }

    bool dims_ok = true;
    for (int d = 2; d <= 5; ++d)
        for (int n = 1; n <= 6; ++n) {
            BigInt total = 0;
            for (const Partition& lambda : partitions(n, d))
                total += irrep_dim(lambda) * multiplicity(lambda, d);
            BigInt expected = 1;
            for (int i = 0; i < n; ++i) expected *= d;
            if (total != expected) dims_ok = false;
        }

    report(7, "matrix units + branching lemma", worst <= 1e-9 && dims_ok, worst,
           "max deviation, dims exact");
}

void criterion_8_inversion() {
    bool pass = true;
    double worst_fid = 0.0;
    for (auto [d, k] : kCertPairs) {
        CMatrix u = haar_unitary(d, derive_seed(808u, 10u * d + k));
        auto result = inversion_simulation(d, k, u, 10000, 909u + d + k);
        double p = 1.0 / (d * d);
        double sigma = std::sqrt(p * (1 - p) / result.samples);
        if (std::abs(result.success_rate - p) > 3.0 * sigma) pass = false;
        worst_fid = std::max(
            worst_fid, std::abs(result.conditional_fidelity - theory_fidelity(d, k)));
    }
    report(8, "inversion demo", pass && worst_fid <= 1e-9, worst_fid,
           "rate in 3 sigma of 1/d^2, |F_cond - theory|");
}

void criterion_9_cross_paths() {
    double worst_link = 0.0;
    for (auto [d, k] : kCertPairs) {
        CMatrix u = su_normalize(haar_unitary(d, derive_seed(910u, 10u * d + k)));
        CVector v = choi_vector(kron_pow(u, k));
        ChoiOperator linked =
            link_product_apply(optimal_superchannel(d, k), v * v.adjoint());
        worst_link = std::max(
            worst_link, max_abs(linked.matrix - apply_circuit(d, k, u).matrix));
    }

    CMatrix omega = performance_operator(2, 1);
    auto mc = monte_carlo_omega(2, 1, 10000, 2025u);
    double worst_sigma = 0.0;
    for (long i = 0; i < omega.rows(); ++i)
        for (long j = 0; j < omega.cols(); ++j) {
            double dev = std::abs(mc.mean(i, j) - omega(i, j));
            worst_sigma = std::max(worst_sigma,
                                   dev / std::max(mc.stderr_(i, j), 1e-12));
        }

    bool pass = worst_link <= 1e-9 && worst_sigma <= 5.0;
    report(9, "link product + Monte Carlo Omega", pass, worst_link,
           "max Choi deviation; MC within 5 sigma");
}

}  // namespace

int main() {
    auto start = std::chrono::steady_clock::now();
    criterion_1_fidelity_theorem();
    criterion_2_exact_isometry();
    criterion_3_primal_value();
    criterion_4_dual_constant();
    criterion_5_dual_inequality();
    criterion_6_c_lambda();
    criterion_7_representation_core();
    criterion_8_inversion();
    criterion_9_cross_paths();
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    std::printf("%d/9 criteria passed (%.1f s)\n", 9 - failures,
                static_cast<double>(elapsed) / 1000.0);
    return failures;
}
