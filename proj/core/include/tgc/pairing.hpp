#pragma once

#include <cstdint>
#include <vector>

#include "tgc/group.hpp"
#include "tgc/modmatrix.hpp"
#include "tgc/residue.hpp"

namespace tgc {

// Exponent grid of the antisymmetrized pairing on block generators. The entry
// at (u, v) is stored canonically mod p^{min(n_u, n_v)}, the order of the root
// of unity the pair (u, v) can actually produce. Construction enforces the
// zero diagonal and antisymmetry after canonicalization, so a held instance is
// always valid.
class PairingMatrix {
public:
    static PairingMatrix validate(const PGroupShape& shape,
                                  const std::vector<std::vector<std::int64_t>>& raw);

    const PGroupShape& shape() const { return shape_; }
    int dim() const { return shape_.generator_count(); }

    std::int64_t entry(int u, int v) const {
        return data_[static_cast<std::size_t>(u) * dim() + v];
    }
    Modulus entry_modulus(int u, int v) const;

    std::vector<std::vector<std::int64_t>> rows() const;

    // The m_i x m_i grid pairing block i against itself, entries mod p^{n_i}.
    std::vector<std::vector<std::int64_t>> diagonal_block(int block) const;

    bool operator==(const PairingMatrix&) const = default;

private:
    PairingMatrix(PGroupShape shape, std::vector<std::int64_t> data)
        : shape_(std::move(shape)), data_(std::move(data)) {}

    PGroupShape shape_;
    std::vector<std::int64_t> data_;
};

// The same pairing with every entry rescaled into the single ring Z/p^{n_1}:
// entry (u, v) becomes p^{n_1 - min(n_u, n_v)} times the stored exponent.
// Only normalize() can build one, which keeps the divisibility invariant
// (entry (u, v) divisible by p^{n_1 - min(n_u, n_v)}) true by construction.
class NormalizedMatrix {
public:
    const PGroupShape& shape() const { return shape_; }
    const ModMatrix& matrix() const { return mat_; }
    int dim() const { return mat_.dim(); }
    std::int64_t entry(int u, int v) const { return mat_.at(u, v); }
    std::int64_t modulus_value() const { return mat_.mod().value(); }

private:
    friend NormalizedMatrix normalize(const PairingMatrix& a);
    NormalizedMatrix(PGroupShape shape, ModMatrix mat)
        : shape_(std::move(shape)), mat_(std::move(mat)) {}

    PGroupShape shape_;
    ModMatrix mat_;
};

NormalizedMatrix normalize(const PairingMatrix& a);

// Exponent of the commutation factor between generator h and the lifted
// element g: row h of the normalized matrix dotted with g, mod p^{n_1}.
Residue commutation_phase(const NormalizedMatrix& a, int flat_row, const LiftedElement& g);
Residue commutation_phase(const NormalizedMatrix& a, const GeneratorId& h, const LiftedElement& g);

}  // namespace tgc
