#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tgc/center.hpp"
#include "tgc/group.hpp"
#include "tgc/pairing.hpp"

namespace tgc::testing {

inline std::string data_path(const std::string& name) {
    return std::string(TGC_DATA_DIR) + "/" + name;
}

// The worked instance used throughout: p = 3, (Z/9)^2 (+) (Z/3)^2.
inline PGroupShape worked_shape() {
    return PGroupShape::validate(3, {Block{2, 2}, Block{1, 2}});
}

inline PairingMatrix worked_matrix() {
    return PairingMatrix::validate(worked_shape(), {
        {0, 1, 1, 1},
        {8, 0, 2, 2},
        {2, 1, 0, 1},
        {2, 1, 2, 0},
    });
}

// Closure of a generating set under the group law, as sorted coordinate
// tuples. Only for small groups.
inline std::set<std::vector<std::int64_t>> span_of(const PGroupShape& shape,
                                                   const std::vector<GroupElement>& gens) {
    std::set<std::vector<std::int64_t>> seen{identity_element(shape).coords};
    std::vector<GroupElement> frontier{identity_element(shape)};
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& g : frontier) {
            for (const auto& step : gens) {
                GroupElement h = add(shape, g, step);
                if (seen.insert(h.coords).second) next.push_back(std::move(h));
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

// Number of lifted vectors, i.e. (p^{n_1})^m, when it fits under cap.
inline std::optional<std::uint64_t> lifted_space(const PGroupShape& shape, std::uint64_t cap) {
    const auto q = static_cast<std::uint64_t>(shape.lift_modulus().value());
    std::uint64_t space = 1;
    for (int s = 0; s < shape.generator_count(); ++s) {
        if (space > cap / q) return std::nullopt;
        space *= q;
    }
    return space;
}

// Central elements of a direct product across two primes, counted by walking
// every pair and testing all phases in both components.
inline std::uint64_t mixed_central_count(const PGroupShape& shape1, const NormalizedMatrix& a1,
                                         const PGroupShape& shape2, const NormalizedMatrix& a2) {
    std::uint64_t count = 0;
    ElementEnumerator walk1(shape1, 1u << 20);
    while (auto g1 = walk1.next()) {
        LiftedElement l1 = lift(*g1);
        bool central1 = true;
        for (int h = 0; h < shape1.generator_count() && central1; ++h) {
            central1 = commutation_phase(a1, h, l1).is_zero();
        }
        if (!central1) continue;
        ElementEnumerator walk2(shape2, 1u << 20);
        while (auto g2 = walk2.next()) {
            LiftedElement l2 = lift(*g2);
            bool central2 = true;
            for (int h = 0; h < shape2.generator_count() && central2; ++h) {
                central2 = commutation_phase(a2, h, l2).is_zero();
            }
            if (central2) ++count;
        }
    }
    return count;
}

}  // namespace tgc::testing
