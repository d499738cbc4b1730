// The performance operator Omega, the explicit optimal superchannel, the
// dual operator S-hat with its exact constant, and the optimality
// certificate that ties them together.
//
// Global tensor-slot order: P, I_1..I_k, O_1..O_k, F. Operators on k+1
// copies (commutant elements, matrix units) enter with their own factors
// assigned to (I_1..I_k with P as the extra point) on one side and to
// (O_1..O_k with F as the extra point) on the other; the extra point is
// always the last point of the S_{k+1} action, which is what the
// branching into S_k presumes.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "conjucirc/circuit.hpp"
#include "conjucirc/haar.hpp"
#include "conjucirc/linalg.hpp"
#include "conjucirc/young.hpp"

namespace conjucirc {

// Operator side cap for the d^(2k+2)-sized certificate path; overridable
// through the CONJUCIRC_SIZE_CAP environment variable.
long default_size_cap();

// Orthonormal (Hilbert-Schmidt) basis of the commutant of U^{tensor n},
// Gram-Schmidt over the permutation operators. Cardinality is
// sum over lambda |- n, H(lambda) <= d of d_lambda^2.
std::vector<CMatrix> commutant_basis(int d, int n);

// Omega = (1/d^2) sum_i B^i_{PI} (x) conj(B^i)_{FO} over an orthonormal
// commutant basis of U^{tensor (k+1)}.
CMatrix performance_operator(int d, int k, long size_cap = default_size_cap());

struct MonteCarloOmega {
    CMatrix mean;
    Eigen::MatrixXd stderr_;  // entrywise standard error of the mean
    long samples = 0;
};

// Direct Haar average of the integrand defining Omega.
MonteCarloOmega monte_carlo_omega(int d, int k, long samples, std::uint64_t seed);

struct Superchannel {
    CMatrix matrix;        // on P (x) I (x) O (x) F
    SubsystemShape shape;  // 2k+2 factors of d
    int d = 0;
    int k = 0;
};

// S = E_{PI} (x) D_{OF} built from the circuit module.
Superchannel optimal_superchannel(int d, int k);

// Residuals of the superchannel characterization: PSD, tr_F(S) = C (x) 1_O,
// tr_I(C) = 1_P.
std::vector<std::pair<std::string, double>> superchannel_residuals(const Superchannel& s);

double primal_value(const Superchannel& s, const CMatrix& omega);

// tr(S Omega) evaluated through the commutant decomposition of Omega,
// without forming the d^(2k+2)-sided operator. Valid for S = E (x) D.
double primal_value_factored(int d, int k);

struct DualOperator {
    CMatrix matrix;      // S-hat = W (x) 1_F
    CMatrix w;           // on P (x) I (x) O
    Rational constant_c; // (1/d) max_lambda c(lambda), lambda |- k+1
    int d = 0;
    int k = 0;
};

DualOperator dual_operator(int d, int k, long size_cap = default_size_cap());

// Residuals of the dual affine constraints: tr_O(W) = rho_P (x) 1_I with
// tr(rho) = 1.
std::vector<std::pair<std::string, double>> dual_residuals(const DualOperator& dual);

struct CertificateReport {
    int d = 0;
    int k = 0;
    double primal_value = 0.0;
    Rational dual_c;
    double min_eig_gap = 0.0;  // smallest eigenvalue of c S-hat - Omega
    std::vector<std::pair<std::string, double>> feasibility_residuals;
    bool eigengap_computed = false;  // false when the size cap was exceeded
    double tolerance = 1e-9;
    bool valid = false;
};

// Full optimality certificate: primal value on the explicit superchannel,
// exact dual constant, dual matrix inequality, and all feasibility
// residuals. Above the size cap the eigenvalue gap is skipped and the
// report carries the primal (factored) and dual constant only.
CertificateReport certify(int d, int k, double tol = 1e-9,
                          long size_cap = default_size_cap());

struct MonteCarloMean {
    double mean = 0.0;
    double stderr_ = 0.0;
    long samples = 0;
};

MonteCarloMean mc_average_fidelity(int d, int k, long samples, std::uint64_t seed);

// Link product: tr_IO(S (1_P (x) C_in^T (x) 1_F)), the Choi operator on
// P (x) F of the superchannel applied to the channel with Choi C_in.
ChoiOperator link_product_apply(const Superchannel& s, const CMatrix& choi_in);

}  // namespace conjucirc
