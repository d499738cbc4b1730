// Dense complex multilinear algebra on labelled tensor factors: Kronecker
// products, partial trace/transpose, Hermitian eigendecomposition and
// Hilbert-Schmidt Gram-Schmidt.
//
// Index convention used everywhere: factor 0 is the leftmost tensor
// factor and multi-indices flatten row-major, i.e. the last factor is
// the fastest-running index.
#pragma once

#include <complex>
#include <set>
#include <vector>

#include <Eigen/Dense>

namespace conjucirc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Ordered local dimensions of the tensor factors of a square operator.
struct SubsystemShape {
    std::vector<int> dims;

    SubsystemShape() = default;
    SubsystemShape(std::initializer_list<int> d) : dims(d) {}
    explicit SubsystemShape(std::vector<int> d) : dims(std::move(d)) {}

    int factors() const { return static_cast<int>(dims.size()); }
    long total() const;
    // Throws unless total() == side.
    void check_side(long side) const;
};

CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix kron(const std::vector<CMatrix>& factors);
CVector kron_vec(const CVector& a, const CVector& b);

// Trace over the factors listed in `traced`; the kept factors stay in
// their original order.
CMatrix partial_trace(const CMatrix& m, const SubsystemShape& shape,
                      const std::set<int>& traced);

// Transpose the designated factor in the computational basis.
CMatrix partial_transpose(const CMatrix& m, const SubsystemShape& shape,
                          int subsystem);

struct EigResult {
    RVector eigenvalues;  // ascending
    CMatrix eigenvectors; // columns match eigenvalue order
};

// Requires near-Hermitian input (max-norm deviation <= 1e-10 relative);
// throws otherwise.
EigResult hermitian_eig(const CMatrix& m);

double min_eigenvalue(const CMatrix& m);
double max_eigenvalue(const CMatrix& m);

// Orthonormalizes under <A,B> = tr(A^dag B); inputs whose residual
// Hilbert-Schmidt norm after projection is <= tol are dropped.
std::vector<CMatrix> gram_schmidt_hs(const std::vector<CMatrix>& ops,
                                     double tol);

double hs_norm(const CMatrix& m);
double max_abs(const CMatrix& m);
bool is_hermitian(const CMatrix& m, double tol = 1e-10);

}  // namespace conjucirc
