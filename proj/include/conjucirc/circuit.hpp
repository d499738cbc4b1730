// The conjugation circuit: encoder and decoder in Choi and Kraus form,
// the exact k = d-1 isometry, channel application and fidelity, and the
// probabilistic inversion gadget.
//
// Choi operators of a map L(H_in) -> L(H_out) live on H_in (x) H_out
// with the input factors first: C = sum_ij |i><j| (x) map(|i><j|).
#pragma once

#include <cstdint>
#include <vector>

#include "conjucirc/linalg.hpp"

namespace conjucirc {

struct ChoiOperator {
    CMatrix matrix;
    SubsystemShape in_dims;
    SubsystemShape out_dims;

    long in_total() const { return in_dims.total(); }
    long out_total() const { return out_dims.total(); }
    SubsystemShape full_shape() const;

    // max deviation of tr_out(C) from 1_in
    double tp_residual() const;
    // max(0, -lambda_min)
    double psd_residual() const;
};

struct KrausSet {
    std::vector<CMatrix> operators;  // each out x in

    // max deviation of sum K^dag K from 1_in
    double tp_residual() const;
};

ChoiOperator choi_from_kraus(const KrausSet& kraus, const SubsystemShape& in,
                             const SubsystemShape& out);

// Choi vector |M>> = sum_i |i> (x) M|i>.
CVector choi_vector(const CMatrix& m);

struct EncoderResult {
    ChoiOperator choi;   // (d / C(d,k+1)) A(d,k+1) on P (x) I
    KrausSet kraus;      // C(d,k+1) operators, each d^k x d
};

// Requires 1 <= k <= d-1.
EncoderResult encoder(int d, int k);

struct DecoderResult {
    ChoiOperator choi;   // on O (x) F
    KrausSet kraus;      // antisymmetric branch + measure-and-prepare branch
};

// sigma is the state emitted on the discard branch; it never affects the
// fidelity. Defaults to maximally mixed when omitted.
DecoderResult decoder(int d, int k, const CMatrix& sigma);
DecoderResult decoder(int d, int k);

// V = sqrt(d) |psi_A>^{T_1}, a d^{d-1} x d isometry with
// V^dag U^{(x)(d-1)} V = conj(U) for U in SU(d).
CMatrix exact_conjugation_isometry(int d);

// Choi operator of D o U^{(x)k} o E as a d -> d channel; U is
// SU-normalized before use.
ChoiOperator apply_circuit(int d, int k, const CMatrix& u);

// F(C, U) = <<U| C |U>> / d^2.
double channel_fidelity(const ChoiOperator& c, const CMatrix& u);

// channel_fidelity of apply_circuit against conj(U); equals
// (k+1)/(d(d-k)) independently of U.
double conjugation_fidelity(int d, int k, const CMatrix& u);

double theory_fidelity(int d, int k);

struct InversionResult {
    double success_rate;          // empirical; the gadget succeeds w.p. 1/d^2
    double conditional_fidelity;  // exact fidelity of the success branch to U^{-1}
    long successes;
    long samples;
};

// Bell-teleportation transposition gadget after the conjugation circuit:
// the success branch carries the transpose of the circuit's output
// channel, i.e. an approximation of U^{-1}. The success indicator is
// sampled per trial on a Haar-random input state; the conditional channel
// is evaluated exactly by projection.
InversionResult inversion_simulation(int d, int k, const CMatrix& u,
                                     long samples, std::uint64_t seed);

}  // namespace conjucirc
