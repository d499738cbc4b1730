#include "conjucirc/performance.hpp"

#include <cstdlib>
#include <stdexcept>

#include "conjucirc/permutation.hpp"
#include "conjucirc/schur_weyl.hpp"

namespace conjucirc {

namespace {

long pow_long(int base, int exp) {
    long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

void check_cap(int d, int k, long cap) {
    if (pow_long(d, 2 * k + 2) > cap)
        throw std::length_error("operator side d^(2k+2) exceeds the size cap");
}

// Conjugation by the cyclic slot rotation that moves the last tensor
// factor to the front: assigns an operator indexed (I_1..I_k, P) to the
// global (P, I_1..I_k) order.
CMatrix rotate_last_to_front(const CMatrix& m, int d, int n) {
    std::vector<int> images(n);
    for (int x = 0; x < n; ++x) images[x] = (x + 1) % n;
    CMatrix w = perm_operator(Permutation(images), d);
    return w * m * w.adjoint();
}

}  // namespace

long default_size_cap() {
    static long cap = [] {
        if (const char* env = std::getenv("CONJUCIRC_SIZE_CAP")) {
            long v = std::atol(env);
            if (v > 0) return v;
        }
        return 4096L;
    }();
    return cap;
}

std::vector<CMatrix> commutant_basis(int d, int n) {
    if (n < 1) throw std::invalid_argument("commutant_basis: n must be >= 1");
    std::vector<CMatrix> perms;
    double max_norm = 0.0;
    for (const Permutation& pi : all_permutations(n)) {
        perms.push_back(perm_operator(pi, d));
        max_norm = std::max(max_norm, hs_norm(perms.back()));
    }
    return gram_schmidt_hs(perms, 1e-10 * max_norm);
}

CMatrix performance_operator(int d, int k, long size_cap) {
    if (k < 1) throw std::invalid_argument("performance_operator: k must be >= 1");
    check_cap(d, k, size_cap);
    long side = pow_long(d, 2 * k + 2);
    CMatrix omega = CMatrix::Zero(side, side);
    for (const CMatrix& b : commutant_basis(d, k + 1))
        omega += kron(rotate_last_to_front(b.conjugate(), d, k + 1), b);
    return omega / static_cast<double>(d * d);
}

MonteCarloOmega monte_carlo_omega(int d, int k, long samples, std::uint64_t seed) {
    if (samples < 2)
        throw std::invalid_argument("monte_carlo_omega: samples must be >= 2");
    long dk = pow_long(d, k);
    long side = d * dk * dk * d;

    // w = sum_{a,J} |a, J, J, a>
    CVector w = CVector::Zero(side);
    for (int a = 0; a < d; ++a)
        for (long j = 0; j < dk; ++j)
            w(((a * dk + j) * dk + j) * d + a) = 1.0;

    CMatrix mean = CMatrix::Zero(side, side);
    Eigen::MatrixXd sq = Eigen::MatrixXd::Zero(side, side);
    for (long s = 0; s < samples; ++s) {
        CMatrix u = haar_unitary(d, derive_seed(seed, static_cast<std::uint64_t>(s)));
        CMatrix uk = CMatrix::Identity(1, 1);
        for (int i = 0; i < k; ++i) uk = kron(uk, u);
        CMatrix big = kron(CMatrix::Identity(d * dk, d * dk), kron(uk, u));
        CVector v = big * w;
        CMatrix sample = (v * v.adjoint()) / static_cast<double>(d * d);
        mean += sample;
        sq += sample.cwiseAbs2();
    }
    mean /= static_cast<double>(samples);
    Eigen::MatrixXd var =
        (sq / static_cast<double>(samples) - mean.cwiseAbs2()).cwiseMax(0.0);
    return {std::move(mean), (var / static_cast<double>(samples - 1)).cwiseSqrt(),
            samples};
}

Superchannel optimal_superchannel(int d, int k) {
    EncoderResult enc = encoder(d, k);
    DecoderResult dec = decoder(d, k);
    Superchannel s;
    s.matrix = kron(enc.choi.matrix, dec.choi.matrix);
    s.shape = SubsystemShape(std::vector<int>(2 * k + 2, d));
    s.d = d;
    s.k = k;
    return s;
}

std::vector<std::pair<std::string, double>> superchannel_residuals(const Superchannel& s) {
    int d = s.d, k = s.k;
    long dPI = pow_long(d, k + 1);
    long dO = pow_long(d, k);

    std::set<int> f_factor{2 * k + 1};
    CMatrix trF = partial_trace(s.matrix, s.shape, f_factor);

    std::set<int> o_and_f;
    for (int f = k + 1; f <= 2 * k + 1; ++f) o_and_f.insert(f);
    CMatrix c = partial_trace(s.matrix, s.shape, o_and_f) / static_cast<double>(dO);

    std::set<int> i_factors;
    for (int f = 1; f <= k; ++f) i_factors.insert(f);
    SubsystemShape pi_shape(std::vector<int>(k + 1, d));
    CMatrix trIC = partial_trace(c, pi_shape, i_factors);

    return {
        {"superchannel_psd", std::max(0.0, -min_eigenvalue(s.matrix))},
        {"trF_product_structure",
         max_abs(trF - kron(c, CMatrix::Identity(dO, dO)))},
        {"trI_C_identity", max_abs(trIC - CMatrix::Identity(d, d))},
    };
}

double primal_value(const Superchannel& s, const CMatrix& omega) {
    if (s.matrix.rows() != omega.rows())
        throw std::invalid_argument("primal_value: shape mismatch");
    return s.matrix.cwiseProduct(omega.transpose()).sum().real();
}

double primal_value_factored(int d, int k) {
    EncoderResult enc = encoder(d, k);
    DecoderResult dec = decoder(d, k);
    double total = 0.0;
    for (const CMatrix& b : commutant_basis(d, k + 1)) {
        Complex te = rotate_last_to_front(b.conjugate(), d, k + 1)
                         .cwiseProduct(enc.choi.matrix.transpose())
                         .sum();
        Complex td = b.cwiseProduct(dec.choi.matrix.transpose()).sum();
        total += (te * td).real();
    }
    return total / static_cast<double>(d * d);
}

DualOperator dual_operator(int d, int k, long size_cap) {
    if (k < 1 || k > d - 1)
        throw std::invalid_argument("dual_operator: requires 1 <= k <= d-1");
    check_cap(d, k, size_cap);
    long dk = pow_long(d, k);

    CMatrix w = CMatrix::Zero(d * dk * dk, d * dk * dk);
    for (const Partition& alpha : partitions(k, d)) {
        double m_alpha = static_cast<double>(multiplicity(alpha, d));
        auto units = matrix_units_all(alpha, d);
        int dim = static_cast<int>(units.size());
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                w += kron(CMatrix::Identity(d, d) / d,
                          kron(units[i][j], units[i][j])) /
                     m_alpha;
    }

    DualOperator dual;
    dual.matrix = kron(w, CMatrix::Identity(d, d));
    dual.w = std::move(w);
    dual.constant_c = max_c(k + 1, d).value / d;
    dual.d = d;
    dual.k = k;
    return dual;
}

std::vector<std::pair<std::string, double>> dual_residuals(const DualOperator& dual) {
    int d = dual.d, k = dual.k;
    long dI = pow_long(d, k);

    std::set<int> o_factors;
    for (int f = k + 1; f <= 2 * k; ++f) o_factors.insert(f);
    SubsystemShape w_shape(std::vector<int>(2 * k + 1, d));
    CMatrix trOW = partial_trace(dual.w, w_shape, o_factors);

    // rho is pinned to the maximally mixed state by the ansatz
    CMatrix expected = kron(CMatrix::Identity(d, d) / d,
                            CMatrix::Identity(dI, dI));
    CMatrix rho = partial_trace(trOW, SubsystemShape{static_cast<int>(d),
                                                     static_cast<int>(dI)},
                                {1}) /
                  static_cast<double>(dI);

    return {
        {"trO_W_structure", max_abs(trOW - expected)},
        {"rho_trace", std::abs(rho.trace().real() - 1.0)},
        {"shat_hermitian", max_abs(dual.matrix - dual.matrix.adjoint())},
    };
}

CertificateReport certify(int d, int k, double tol, long size_cap) {
    CertificateReport report;
    report.d = d;
    report.k = k;
    report.tolerance = tol;
    report.dual_c = max_c(k + 1, d).value / d;

    if (pow_long(d, 2 * k + 2) > size_cap) {
        report.primal_value = primal_value_factored(d, k);
        report.eigengap_computed = false;
        report.valid = false;  // inequality unverified at this size
        return report;
    }

    CMatrix omega = performance_operator(d, k, size_cap);
    Superchannel s = optimal_superchannel(d, k);
    report.primal_value = primal_value(s, omega);

    DualOperator dual = dual_operator(d, k, size_cap);
    double c = static_cast<double>(report.dual_c);
    report.min_eig_gap = min_eigenvalue(c * dual.matrix - omega);
    report.eigengap_computed = true;

    report.feasibility_residuals = superchannel_residuals(s);
    for (auto& r : dual_residuals(dual))
        report.feasibility_residuals.push_back(std::move(r));
    report.feasibility_residuals.emplace_back(
        "primal_dual_value_gap", std::abs(report.primal_value - c));

    report.valid = report.min_eig_gap >= -tol;
    for (const auto& [name, value] : report.feasibility_residuals)
        if (value > tol) report.valid = false;
    return report;
}

MonteCarloMean mc_average_fidelity(int d, int k, long samples, std::uint64_t seed) {
    if (samples < 2)
        throw std::invalid_argument("mc_average_fidelity: samples must be >= 2");
    double sum = 0.0, sumsq = 0.0;
    for (long s = 0; s < samples; ++s) {
        CMatrix u = haar_unitary(d, derive_seed(seed, static_cast<std::uint64_t>(s)));
        double f = conjugation_fidelity(d, k, u);
        sum += f;
        sumsq += f * f;
    }
    double mean = sum / samples;
    double var = std::max(0.0, sumsq / samples - mean * mean);
    return {mean, std::sqrt(var / (samples - 1)), samples};
}

ChoiOperator link_product_apply(const Superchannel& s, const CMatrix& choi_in) {
    int d = s.d, k = s.k;
    long dk = pow_long(d, k);
    if (choi_in.rows() != dk * dk)
        throw std::invalid_argument("link_product_apply: input Choi shape mismatch");
    CMatrix sandwich = kron(CMatrix::Identity(d, d),
                            kron(choi_in.transpose(), CMatrix::Identity(d, d)));
    CMatrix product = s.matrix * sandwich;
    std::set<int> io_factors;
    for (int f = 1; f <= 2 * k; ++f) io_factors.insert(f);
    CMatrix reduced = partial_trace(product, s.shape, io_factors);
    return {std::move(reduced), SubsystemShape{d}, SubsystemShape{d}};
}

}  // namespace conjucirc
