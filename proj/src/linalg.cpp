#include "conjucirc/linalg.hpp"

#include <stdexcept>

namespace conjucirc {

long SubsystemShape::total() const {
    long t = 1;
    for (int d : dims) {
        if (d < 1) throw std::invalid_argument("subsystem dimensions must be >= 1");
        t *= d;
    }
    return t;
}

void SubsystemShape::check_side(long side) const {
    if (total() != side)
        throw std::invalid_argument("subsystem shape does not match matrix side");
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
    return out;
}

CMatrix kron(const std::vector<CMatrix>& factors) {
    if (factors.empty()) return CMatrix::Identity(1, 1);
    CMatrix out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
    return out;
}

CVector kron_vec(const CVector& a, const CVector& b) {
    CVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

namespace {

// Strides for row-major flattening (factor 0 slowest).
std::vector<long> strides_of(const std::vector<int>& dims) {
    std::vector<long> s(dims.size());
    long acc = 1;
    for (int f = static_cast<int>(dims.size()) - 1; f >= 0; --f) {
        s[f] = acc;
        acc *= dims[f];
    }
    return s;
}

}  // namespace

CMatrix partial_trace(const CMatrix& m, const SubsystemShape& shape,
                      const std::set<int>& traced) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("partial_trace: matrix must be square");
    shape.check_side(m.rows());
    for (int f : traced)
        if (f < 0 || f >= shape.factors())
            throw std::out_of_range("partial_trace: factor index out of range");

    std::vector<int> kept, kept_dims, traced_dims;
    for (int f = 0; f < shape.factors(); ++f) {
        if (traced.count(f)) traced_dims.push_back(shape.dims[f]);
        else {
            kept.push_back(f);
            kept_dims.push_back(shape.dims[f]);
        }
    }
    auto strides = strides_of(shape.dims);

    long kept_total = 1;
    for (int d : kept_dims) kept_total *= d;
    long traced_total = 1;
    for (int d : traced_dims) traced_total *= d;

    // Base offsets of every kept / traced multi-index in the full index.
    std::vector<long> kept_offsets(kept_total, 0);
    for (long idx = 0; idx < kept_total; ++idx) {
        long rem = idx;
        for (int p = static_cast<int>(kept.size()) - 1; p >= 0; --p) {
            kept_offsets[idx] += (rem % kept_dims[p]) * strides[kept[p]];
            rem /= kept_dims[p];
        }
    }
    std::vector<long> traced_offsets(traced_total, 0);
    {
        std::vector<int> tlist(traced.begin(), traced.end());
        for (long idx = 0; idx < traced_total; ++idx) {
            long rem = idx;
            for (int p = static_cast<int>(tlist.size()) - 1; p >= 0; --p) {
                traced_offsets[idx] += (rem % shape.dims[tlist[p]]) * strides[tlist[p]];
                rem /= shape.dims[tlist[p]];
            }
        }
    }

    CMatrix out = CMatrix::Zero(kept_total, kept_total);
    for (long r = 0; r < kept_total; ++r)
        for (long c = 0; c < kept_total; ++c) {
            Complex sum = 0.0;
            for (long t = 0; t < traced_total; ++t)
                sum += m(kept_offsets[r] + traced_offsets[t],
                         kept_offsets[c] + traced_offsets[t]);
            out(r, c) = sum;
        }
    return out;
}

CMatrix partial_transpose(const CMatrix& m, const SubsystemShape& shape,
                          int subsystem) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("partial_transpose: matrix must be square");
    shape.check_side(m.rows());
    if (subsystem < 0 || subsystem >= shape.factors())
        throw std::out_of_range("partial_transpose: factor index out of range");

    auto strides = strides_of(shape.dims);
    long stride = strides[subsystem];
    int dsub = shape.dims[subsystem];
    long side = m.rows();

    CMatrix out(side, side);
    for (long r = 0; r < side; ++r) {
        long rsub = (r / stride) % dsub;
        long rbase = r - rsub * stride;
        for (long c = 0; c < side; ++c) {
            long csub = (c / stride) % dsub;
            long cbase = c - csub * stride;
            out(r, c) = m(rbase + csub * stride, cbase + rsub * stride);
        }
    }
    return out;
}

double hs_norm(const CMatrix& m) { return m.norm(); }

double max_abs(const CMatrix& m) {
    return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    double scale = std::max(1.0, max_abs(m));
    return max_abs(m - m.adjoint()) <= tol * scale;
}

EigResult hermitian_eig(const CMatrix& m) {
    if (!is_hermitian(m, 1e-10))
        throw std::invalid_argument("hermitian_eig: input is not Hermitian");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eig: eigensolver failed");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const CMatrix& m) {
    if (!is_hermitian(m, 1e-10))
        throw std::invalid_argument("min_eigenvalue: input is not Hermitian");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

double max_eigenvalue(const CMatrix& m) {
    if (!is_hermitian(m, 1e-10))
        throw std::invalid_argument("max_eigenvalue: input is not Hermitian");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(solver.eigenvalues().size() - 1);
}

std::vector<CMatrix> gram_schmidt_hs(const std::vector<CMatrix>& ops,
                                     double tol) {
    std::vector<CMatrix> basis;
    for (const CMatrix& op : ops) {
        if (!basis.empty() &&
            (op.rows() != basis[0].rows() || op.cols() != basis[0].cols()))
            throw std::invalid_argument("gram_schmidt_hs: mixed shapes");
        CMatrix v = op;
        // two projection sweeps keep orthogonality near machine precision
        for (int sweep = 0; sweep < 2; ++sweep)
            for (const CMatrix& b : basis)
                v -= (b.conjugate().cwiseProduct(v)).sum() * b;
        double norm = hs_norm(v);
        if (norm > tol) basis.push_back(v / norm);
    }
    return basis;
}

}  // namespace conjucirc
