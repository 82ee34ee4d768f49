#include "tgc/cocycle.hpp"

#include <algorithm>
#include <string>

#include "tgc/errors.hpp"

namespace tgc {

CocycleTable::CocycleTable(const PGroupShape& shape, std::vector<std::int64_t> values)
    : shape_(shape), q_(shape.lift_modulus().value()), values_(std::move(values)) {
    auto order = shape.order_u64();
    if (!order || *order > kMaxValidatableOrder) {
        throw TooLargeToValidate("cocycle tables are limited to groups of order <= " +
                                 std::to_string(kMaxValidatableOrder) + ", got " +
                                 shape.order().to_factored());
    }
    order_ = *order;
    if (values_.size() != order_ * order_) {
        throw WrongDimensions("cocycle table must have |G|^2 = " +
                              std::to_string(order_ * order_) + " entries, got " +
                              std::to_string(values_.size()));
    }
    for (auto& v : values_) v = mod_canonical(v, q_);
}

std::int64_t CocycleTable::value(const GroupElement& a, const GroupElement& b) const {
    return value_by_index(element_index(shape_, a), element_index(shape_, b));
}

std::int64_t CocycleTable::antisymmetrized(const GroupElement& a, const GroupElement& b) const {
    return mod_canonical(value(a, b) - value(b, a), q_);
}

void validate_cocycle(const CocycleTable& table) {
    const std::uint64_t n = table.order();
    if (n > CocycleTable::kMaxValidatableOrder) {
        throw TooLargeToValidate("cocycle validation is limited to groups of order <= " +
                                 std::to_string(CocycleTable::kMaxValidatableOrder));
    }
    const PGroupShape& shape = table.shape();
    const std::int64_t q = table.modulus_value();

    // Dense product table so the |G|^3 sweep below is pure lookups.
    std::vector<std::uint32_t> prod(n * n);
    for (std::uint64_t i = 0; i < n; ++i) {
        GroupElement a = element_at(shape, i);
        for (std::uint64_t j = 0; j < n; ++j) {
            prod[i * n + j] =
                static_cast<std::uint32_t>(element_index(shape, add(shape, a, element_at(shape, j))));
        }
    }

    for (std::uint64_t i = 0; i < n; ++i) {
        for (std::uint64_t j = 0; j < n; ++j) {
            const std::uint64_t ij = prod[i * n + j];
            const std::int64_t left_head = table.value_by_index(i, j);
            for (std::uint64_t k = 0; k < n; ++k) {
                std::int64_t lhs = left_head + table.value_by_index(ij, k);
                std::int64_t rhs = table.value_by_index(j, k) +
                                   table.value_by_index(i, prod[j * n + k]);
                if ((lhs - rhs) % q != 0) throw NotACocycle(i, j, k);
            }
        }
    }
}

PairingMatrix derive_pairing(const CocycleTable& table) {
    const PGroupShape& shape = table.shape();
    const std::int64_t p = shape.prime();
    const int n1 = shape.top_exponent();
    const int m = shape.generator_count();

    std::vector<GroupElement> gen(m);
    for (int u = 0; u < m; ++u) {
        gen[u] = identity_element(shape);
        gen[u].coords[u] = 1;
    }

    std::vector<std::vector<std::int64_t>> raw(m, std::vector<std::int64_t>(m, 0));
    for (int u = 0; u < m; ++u) {
        for (int v = 0; v < m; ++v) {
            if (u == v) continue;
            int e = std::min(shape.exponent_of(u), shape.exponent_of(v));
            std::int64_t scale = pow_i64(p, n1 - e);
            std::int64_t f = table.antisymmetrized(gen[u], gen[v]);
            if (f % scale != 0) throw PairingOrderViolation(u, v);
            raw[u][v] = f / scale;
        }
    }
    // validate() re-checks antisymmetry and the zero diagonal, which makes
    // a corrupt table fail loudly instead of producing a bogus pairing.
    return PairingMatrix::validate(shape, raw);
}

CocycleTable realize_cocycle(const PairingMatrix& a) {
    const PGroupShape& shape = a.shape();
    NormalizedMatrix scaled = normalize(a);
    const std::int64_t q = scaled.modulus_value();
    const int m = shape.generator_count();

    auto order = shape.order_u64();
    if (!order || *order > CocycleTable::kMaxValidatableOrder) {
        throw TooLargeToValidate("cocycle tables are limited to groups of order <= " +
                                 std::to_string(CocycleTable::kMaxValidatableOrder) + ", got " +
                                 shape.order().to_factored());
    }
    const std::uint64_t n = *order;

    std::vector<GroupElement> elems(n);
    for (std::uint64_t i = 0; i < n; ++i) elems[i] = element_at(shape, i);

    // Strictly lower triangular bilinear form. Using the normalized entries
    // makes every term well defined on canonical coordinates: the entry
    // (u, v) kills exactly the coordinate wraparound p^{n_u} and p^{n_v}.
    std::vector<std::int64_t> values(n * n);
    for (std::uint64_t i = 0; i < n; ++i) {
        for (std::uint64_t j = 0; j < n; ++j) {
            std::int64_t acc = 0;
            for (int u = 1; u < m; ++u) {
                if (elems[i].coords[u] == 0) continue;
                for (int v = 0; v < u; ++v) {
                    std::int64_t t = scaled.entry(u, v) * elems[i].coords[u] % q;
                    acc = (acc + t * elems[j].coords[v]) % q;
                }
            }
            values[i * n + j] = acc;
        }
    }
    return CocycleTable(shape, std::move(values));
}

}  // namespace tgc
