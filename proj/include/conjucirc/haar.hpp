// Haar-distributed unitaries via Ginibre + QR with the R-diagonal phase
// fix, normalized into SU(d) by the principal d-th root of the
// determinant. Seeded streams are derived with a splitmix64 hash so that
// sample s of a run is reproducible independently of the others.
#pragma once

#include <cstdint>
#include <random>

#include "conjucirc/linalg.hpp"

namespace conjucirc {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// U with |det(U) - 1| forced to the principal root: U * det(U)^(-1/d).
CMatrix su_normalize(const CMatrix& u);

CMatrix haar_unitary(int d, std::mt19937_64& rng);
CMatrix haar_unitary(int d, std::uint64_t seed);

// Haar-random pure state, as a column vector.
CVector haar_state(int d, std::mt19937_64& rng);

}  // namespace conjucirc
