#pragma once

#include <cstdint>
#include <vector>

#include "tgc/group.hpp"
#include "tgc/pairing.hpp"

namespace tgc {

// Dense table of cocycle exponents: value(a, b) is the exponent of the root
// of unity phi(a, b), stored mod p^{n_1} and indexed by the canonical element
// enumeration. Tables are only representable for groups small enough to
// validate, which bounds the |G|^2 storage too.
class CocycleTable {
public:
    static constexpr std::uint64_t kMaxValidatableOrder = 512;

    CocycleTable(const PGroupShape& shape, std::vector<std::int64_t> values);

    const PGroupShape& shape() const { return shape_; }
    std::uint64_t order() const { return order_; }
    std::int64_t modulus_value() const { return q_; }

    std::int64_t value_by_index(std::uint64_t i, std::uint64_t j) const {
        return values_[i * order_ + j];
    }
    std::int64_t value(const GroupElement& a, const GroupElement& b) const;

    // Exponent of f(a, b) = phi(a, b) / phi(b, a), mod p^{n_1}.
    std::int64_t antisymmetrized(const GroupElement& a, const GroupElement& b) const;

private:
    PGroupShape shape_;
    std::uint64_t order_;
    std::int64_t q_;
    std::vector<std::int64_t> values_;
};

// Checks the cocycle identity over all |G|^3 triples; reports the
// lexicographically first failure in enumeration-index order.
void validate_cocycle(const CocycleTable& table);

// Antisymmetrizes the table on generator pairs, checks each value is divisible
// by p^{n_1 - min(n_u, n_v)}, divides the scale out, and assembles the
// canonical pairing matrix. Expects a validated table.
PairingMatrix derive_pairing(const CocycleTable& table);

// Builds a bilinear cocycle whose antisymmetrization is exactly the given
// pairing: value(a, b) = sum over generator pairs u > v of the normalized
// entry (u, v) times a_u b_v.
CocycleTable realize_cocycle(const PairingMatrix& a);

}  // namespace tgc
