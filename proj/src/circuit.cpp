#include "conjucirc/circuit.hpp"

#include <cmath>
#include <stdexcept>

#include "conjucirc/haar.hpp"
#include "conjucirc/permutation.hpp"

namespace conjucirc {

namespace {

long pow_long(int base, int exp) {
    long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / i;
    return r;
}

void check_unitary(const CMatrix& u) {
    if (u.rows() != u.cols())
        throw std::invalid_argument("expected a square unitary");
    CMatrix g = u.adjoint() * u;
    if (max_abs(g - CMatrix::Identity(u.rows(), u.cols())) > 1e-10)
        throw std::invalid_argument("matrix is not unitary");
}

CMatrix kron_pow(const CMatrix& u, int k) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (int i = 0; i < k; ++i) out = kron(out, u);
    return out;
}

}  // namespace

SubsystemShape ChoiOperator::full_shape() const {
    std::vector<int> dims = in_dims.dims;
    dims.insert(dims.end(), out_dims.dims.begin(), out_dims.dims.end());
    return SubsystemShape(dims);
}

double ChoiOperator::tp_residual() const {
    std::set<int> out_factors;
    for (int f = 0; f < out_dims.factors(); ++f)
        out_factors.insert(in_dims.factors() + f);
    CMatrix reduced = partial_trace(matrix, full_shape(), out_factors);
    return max_abs(reduced - CMatrix::Identity(in_total(), in_total()));
}

double ChoiOperator::psd_residual() const {
    return std::max(0.0, -min_eigenvalue(matrix));
}

double KrausSet::tp_residual() const {
    if (operators.empty()) return 0.0;
    long din = operators.front().cols();
    CMatrix acc = CMatrix::Zero(din, din);
    for (const CMatrix& k : operators) acc += k.adjoint() * k;
    return max_abs(acc - CMatrix::Identity(din, din));
}

CVector choi_vector(const CMatrix& m) {
    long din = m.cols(), dout = m.rows();
    CVector v(din * dout);
    for (long i = 0; i < din; ++i)
        for (long a = 0; a < dout; ++a) v(i * dout + a) = m(a, i);
    return v;
}

ChoiOperator choi_from_kraus(const KrausSet& kraus, const SubsystemShape& in,
                             const SubsystemShape& out) {
    long side = in.total() * out.total();
    CMatrix c = CMatrix::Zero(side, side);
    for (const CMatrix& k : kraus.operators) {
        CVector v = choi_vector(k);
        c += v * v.adjoint();
    }
    return {c, in, out};
}

EncoderResult encoder(int d, int k) {
    if (k < 1 || k > d - 1)
        throw std::invalid_argument("encoder: requires 1 <= k <= d-1");
    long dk = pow_long(d, k);
    double scale = d / binom(d, k + 1);

    ChoiOperator choi{scale * antisym_projector(d, k + 1),
                      SubsystemShape{d},
                      SubsystemShape(std::vector<int>(k, d))};

    KrausSet kraus;
    for (const CVector& psi : antisym_basis(d, k + 1)) {
        CMatrix op(dk, d);  // K_i = sqrt(scale) * psi^{T_P}
        for (int a = 0; a < d; ++a)
            for (long j = 0; j < dk; ++j)
                op(j, a) = std::sqrt(scale) * psi(a * dk + j);
        kraus.operators.push_back(std::move(op));
    }
    return {std::move(choi), std::move(kraus)};
}

DecoderResult decoder(int d, int k, const CMatrix& sigma) {
    if (k < 1 || k > d - 1)
        throw std::invalid_argument("decoder: requires 1 <= k <= d-1");
    if (sigma.rows() != d || sigma.cols() != d)
        throw std::invalid_argument("decoder: sigma has wrong dimension");
    if (!is_hermitian(sigma, 1e-10) || std::abs(sigma.trace().real() - 1.0) > 1e-10 ||
        min_eigenvalue(sigma) < -1e-10)
        throw std::invalid_argument("decoder: sigma is not a quantum state");

    long dk = pow_long(d, k);
    CMatrix anti_k = antisym_projector(d, k);

    // Choi: (C(d,k)/C(d,k+1)) A(d,k+1)_{OF} + (1 - A(d,k))_O (x) sigma_F.
    // The antisymmetric branch carries C(d,k)/C(d,k+1) rather than the
    // encoder's d/C(d,k+1); this is the unique normalization that keeps
    // the channel trace-preserving for every (d,k).
    double scale = binom(d, k) / binom(d, k + 1);
    CMatrix choi_matrix = scale * antisym_projector(d, k + 1) +
                          kron(CMatrix::Identity(dk, dk) - anti_k, sigma);
    ChoiOperator choi{std::move(choi_matrix),
                      SubsystemShape(std::vector<int>(k, d)),
                      SubsystemShape{d}};

    KrausSet kraus;
    for (const CVector& psi : antisym_basis(d, k + 1)) {
        CMatrix op(d, dk);  // maps O -> F; psi indexed as (O_1..O_k, F)
        for (long j = 0; j < dk; ++j)
            for (int f = 0; f < d; ++f)
                op(f, j) = std::sqrt(scale) * std::conj(psi(j * d + f));
        kraus.operators.push_back(std::move(op));
    }
    // measure 1 - A(d,k), prepare sigma
    EigResult proj = hermitian_eig(CMatrix::Identity(dk, dk) - anti_k);
    EigResult sig = hermitian_eig(sigma);
    for (long j = 0; j < proj.eigenvalues.size(); ++j) {
        if (proj.eigenvalues(j) < 0.5) continue;
        for (int m = 0; m < d; ++m) {
            if (sig.eigenvalues(m) <= 1e-14) continue;
            kraus.operators.push_back(std::sqrt(sig.eigenvalues(m)) *
                                      sig.eigenvectors.col(m) *
                                      proj.eigenvectors.col(j).adjoint());
        }
    }
    return {std::move(choi), std::move(kraus)};
}

DecoderResult decoder(int d, int k) {
    return decoder(d, k, CMatrix::Identity(d, d) / d);
}

CMatrix exact_conjugation_isometry(int d) {
    if (d < 2)
        throw std::invalid_argument("exact_conjugation_isometry: d must be >= 2");
    long rest = pow_long(d, d - 1);
    CVector psi = antisym_basis(d, d).front();
    CMatrix v(rest, d);
    for (int a = 0; a < d; ++a)
        for (long j = 0; j < rest; ++j)
            v(j, a) = std::sqrt(static_cast<double>(d)) * psi(a * rest + j);
    return v;
}

ChoiOperator apply_circuit(int d, int k, const CMatrix& u) {
    check_unitary(u);
    if (static_cast<int>(u.rows()) != d)
        throw std::invalid_argument("apply_circuit: unitary has wrong dimension");
    CMatrix su = su_normalize(u);
    CMatrix uk = kron_pow(su, k);

    EncoderResult enc = encoder(d, k);
    DecoderResult dec = decoder(d, k);

    CMatrix c = CMatrix::Zero(d * d, d * d);
    for (const CMatrix& ki : enc.kraus.operators) {
        CMatrix mid = uk * ki;
        for (const CMatrix& lj : dec.kraus.operators) {
            CVector v = choi_vector(lj * mid);
            c += v * v.adjoint();
        }
    }
    return {std::move(c), SubsystemShape{d}, SubsystemShape{d}};
}

double channel_fidelity(const ChoiOperator& c, const CMatrix& u) {
    check_unitary(u);
    long d = u.rows();
    if (c.matrix.rows() != d * d)
        throw std::invalid_argument("channel_fidelity: shape mismatch");
    CVector v = choi_vector(u);
    return (v.adjoint() * c.matrix * v)(0).real() / static_cast<double>(d * d);
}

double conjugation_fidelity(int d, int k, const CMatrix& u) {
    CMatrix su = su_normalize(u);
    return channel_fidelity(apply_circuit(d, k, su), su.conjugate());
}

double theory_fidelity(int d, int k) {
    return static_cast<double>(k + 1) / (static_cast<double>(d) * (d - k));
}

InversionResult inversion_simulation(int d, int k, const CMatrix& u,
                                     long samples, std::uint64_t seed) {
    if (samples < 1)
        throw std::invalid_argument("inversion_simulation: samples must be >= 1");
    ChoiOperator out = apply_circuit(d, k, u);
    CMatrix su = su_normalize(u);

    // channel applied to the identity, for the per-trial Bell statistics
    CMatrix chan_of_id = partial_trace(out.matrix, out.full_shape(), {0});

    long successes = 0;
    for (long s = 0; s < samples; ++s) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
        CVector psi = haar_state(d, rng);
        // probability of the Phi+ outcome of the Bell measurement on
        // (input, channel-output half of the entangled pair)
        CVector psibar = psi.conjugate();
        double p = (psibar.adjoint() * chan_of_id * psibar)(0).real() /
                   static_cast<double>(d * d);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        if (unif(rng) < p) ++successes;
    }

    // success branch: the transpose of the output channel, Choi-swapped
    long d2 = d * d;
    CMatrix swapped(d2, d2);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int e = 0; e < d; ++e)
                    swapped(a * d + b, c * d + e) = out.matrix(b * d + a, e * d + c);
    ChoiOperator transposed{std::move(swapped), SubsystemShape{d}, SubsystemShape{d}};
    double cond_fid = channel_fidelity(transposed, su.adjoint());

    return {static_cast<double>(successes) / samples, cond_fid, successes, samples};
}

}  // namespace conjucirc
