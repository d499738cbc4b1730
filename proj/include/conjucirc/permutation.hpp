// Permutations of N points, their tensor representation V(pi) on
// (C_d)^{tensor N}, and the antisymmetric subspace of that space.
#pragma once

#include <vector>

#include "conjucirc/linalg.hpp"

namespace conjucirc {

// Stored as the image array over 0-based points; composition acts as
// (p * q)(x) = p(q(x)).
struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> im);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(images.size()); }
    int operator()(int x) const { return images[x]; }
    Permutation inverse() const;
    Permutation operator*(const Permutation& q) const;
    bool operator==(const Permutation& o) const { return images == o.images; }
};

int sign(const Permutation& p);

// Every element of S_n in lexicographic image order.
std::vector<Permutation> all_permutations(int n);

// V(pi) |psi_1 ... psi_N> = |psi_{pi^-1(1)} ... psi_{pi^-1(N)}>, i.e. the
// factor at position m moves to position pi(m). Homomorphism:
// V(pi) V(sigma) = V(pi sigma).
CMatrix perm_operator(const Permutation& p, int d);

// C(d,n) orthonormal totally antisymmetric vectors in (C_d)^{tensor n},
// one per size-n subset of {0..d-1} in lexicographic subset order.
std::vector<CVector> antisym_basis(int d, int n);

// Projector onto the antisymmetric subspace, (1/n!) sum sgn(pi) V(pi);
// the zero matrix when n > d.
CMatrix antisym_projector(int d, int n);

}  // namespace conjucirc
