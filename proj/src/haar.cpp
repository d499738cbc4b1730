#include "conjucirc/haar.hpp"

#include <cmath>

namespace conjucirc {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 over the concatenated inputs
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

CMatrix su_normalize(const CMatrix& u) {
    Complex det = u.determinant();
    double theta = std::arg(det);
    return u * std::polar(1.0 / std::pow(std::abs(det), 1.0 / u.rows()),
                          -theta / u.rows());
}

CMatrix haar_unitary(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix z(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            z(i, j) = Complex(gauss(rng), gauss(rng)) / std::sqrt(2.0);
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ();
    CVector rdiag = qr.matrixQR().diagonal();
    for (int j = 0; j < d; ++j) q.col(j) *= rdiag(j) / std::abs(rdiag(j));
    return su_normalize(q);
}

CMatrix haar_unitary(int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return haar_unitary(d, rng);
}

CVector haar_state(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVector v(d);
    for (int i = 0; i < d; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    return v / v.norm();
}

}  // namespace conjucirc
