#include "conjucirc/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace conjucirc {

Permutation::Permutation(std::vector<int> im) : images(std::move(im)) {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 0 || v >= size() || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(im);
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images.size());
    for (int x = 0; x < size(); ++x) im[images[x]] = x;
    return Permutation(im);
}

Permutation Permutation::operator*(const Permutation& q) const {
    if (size() != q.size())
        throw std::invalid_argument("permutation size mismatch");
    std::vector<int> im(images.size());
    for (int x = 0; x < size(); ++x) im[x] = images[q.images[x]];
    return Permutation(im);
}

int sign(const Permutation& p) {
    std::vector<bool> visited(p.size(), false);
    int sgn = 1;
    for (int x = 0; x < p.size(); ++x) {
        if (visited[x]) continue;
        int len = 0;
        for (int y = x; !visited[y]; y = p.images[y]) {
            visited[y] = true;
            ++len;
        }
        if (len % 2 == 0) sgn = -sgn;
    }
    return sgn;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::vector<Permutation> out;
    do out.emplace_back(im);
    while (std::next_permutation(im.begin(), im.end()));
    return out;
}

namespace {

long pow_long(int base, int exp) {
    long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

CMatrix perm_operator(const Permutation& p, int d) {
    int n = p.size();
    long side = pow_long(d, n);
    Permutation pinv = p.inverse();
    CMatrix out = CMatrix::Zero(side, side);
    std::vector<int> idx(n);
    for (long col = 0; col < side; ++col) {
        long rem = col;
        for (int f = n - 1; f >= 0; --f) {
            idx[f] = static_cast<int>(rem % d);
            rem /= d;
        }
        long row = 0;
        for (int f = 0; f < n; ++f) row = row * d + idx[pinv(f)];
        out(row, col) = 1.0;
    }
    return out;
}

std::vector<CVector> antisym_basis(int d, int n) {
    if (n < 1 || n > d)
        throw std::invalid_argument("antisym_basis: requires 1 <= n <= d");
    long side = pow_long(d, n);
    auto perms = all_permutations(n);
    double norm = 1.0;
    for (int i = 2; i <= n; ++i) norm *= i;
    norm = 1.0 / std::sqrt(norm);

    std::vector<CVector> basis;
    std::vector<int> subset(n);
    // lexicographic enumeration of n-subsets of {0..d-1}
    for (int i = 0; i < n; ++i) subset[i] = i;
    while (true) {
        CVector v = CVector::Zero(side);
        for (const Permutation& pi : perms) {
            long flat = 0;
            for (int f = 0; f < n; ++f) flat = flat * d + subset[pi(f)];
            v(flat) += sign(pi) * norm;
        }
        basis.push_back(v);

        int i = n - 1;
        while (i >= 0 && subset[i] == d - n + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < n; ++j) subset[j] = subset[j - 1] + 1;
    }
    return basis;
}

CMatrix antisym_projector(int d, int n) {
    if (n < 1) throw std::invalid_argument("antisym_projector: n must be >= 1");
    long side = pow_long(d, n);
    if (n > d) return CMatrix::Zero(side, side);
    // rank-C(d,n) sum of basis projectors; equals (1/n!) sum sgn(pi) V(pi)
    CMatrix a = CMatrix::Zero(side, side);
    for (const CVector& psi : antisym_basis(d, n)) a += psi * psi.adjoint();
    return a;
}

}  // namespace conjucirc
