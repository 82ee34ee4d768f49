#pragma once

#include <cstdint>
#include <vector>

#include "tgc/group.hpp"
#include "tgc/pairing.hpp"

namespace tgc {

// Splitmix64-based generator. Hand-pinned so seeded sweeps reproduce the same
// instances on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    // Uniform in [0, bound) by rejection sampling; bound must be positive.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

// Every valid shape for the prime p with total weight sum(n_j * m_j) at most
// max_weight and top exponent at most max_top_exponent, in a deterministic
// order.
std::vector<PGroupShape> enumerate_shapes(std::int64_t p, int max_weight, int max_top_exponent);

// Uniformly random valid pairing matrix on the shape: independent canonical
// entries above the diagonal, mirrored by antisymmetry below.
PairingMatrix random_pairing_matrix(const PGroupShape& shape, Rng& rng);

}  // namespace tgc
