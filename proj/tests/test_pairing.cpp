#include <doctest.h>

#include <vector>

#include "tgc/pairing.hpp"
#include "tgc/sweep.hpp"
#include "support.hpp"

using namespace tgc;
using tgc::testing::worked_matrix;
using tgc::testing::worked_shape;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

}  // namespace

TEST_CASE("worked instance entries and per-entry moduli") {
    PairingMatrix a = worked_matrix();
    CHECK(a.dim() == 4);
    CHECK(a.entry(1, 0) == 8);
    CHECK(a.entry(0, 1) == 1);
    CHECK(a.entry(2, 0) == 2);
    CHECK(a.entry(3, 2) == 2);
    CHECK(a.entry_modulus(0, 1).value() == 9);
    CHECK(a.entry_modulus(0, 2).value() == 3);
    CHECK(a.entry_modulus(2, 0).value() == 3);
    CHECK(a.entry_modulus(2, 3).value() == 3);

    CHECK(a.rows() == Rows{{0, 1, 1, 1}, {8, 0, 2, 2}, {2, 1, 0, 1}, {2, 1, 2, 0}});
}

TEST_CASE("entries canonicalize into their own modulus") {
    // 5 at (2, 0) lives mod 3 and reduces to 2, giving the worked matrix back.
    PairingMatrix a = PairingMatrix::validate(worked_shape(), {
        {0, 1, 1, 1},
        {8, 0, 2, 2},
        {5, 1, 0, 1},
        {2, 1, 2, 0},
    });
    CHECK(a == worked_matrix());

    // Negatives canonicalize too.
    PairingMatrix b = PairingMatrix::validate(worked_shape(), {
        {0, -8, 1, 1},
        {8, 0, 2, 2},
        {2, 1, 0, 1},
        {2, 1, 2, 0},
    });
    CHECK(b == worked_matrix());
}

TEST_CASE("validation failures") {
    PGroupShape s = PGroupShape::validate(3, {Block{1, 2}});
    CHECK_THROWS_AS(PairingMatrix::validate(s, {{0, 1}, {1, 0}}), NotAntisymmetric);
    CHECK_THROWS_WITH_AS(PairingMatrix::validate(s, {{0, 1}, {1, 0}}),
                         "pairing matrix is not antisymmetric at entry (1, 2) versus (2, 1)",
                         NotAntisymmetric);
    CHECK_THROWS_AS(PairingMatrix::validate(s, {{0, 2}, {1, 1}}), NonzeroDiagonal);
    CHECK_THROWS_AS(PairingMatrix::validate(s, {{0, 1}}), WrongDimensions);
    CHECK_THROWS_AS(PairingMatrix::validate(s, {{0, 1}, {2, 0, 1}}), WrongDimensions);

    // Antisymmetry only needs to hold at each entry's own modulus.
    PGroupShape mixed = PGroupShape::validate(3, {Block{2, 1}, Block{1, 1}});
    CHECK_NOTHROW(PairingMatrix::validate(mixed, {{0, 1}, {2, 0}}));
    CHECK_THROWS_AS(PairingMatrix::validate(mixed, {{0, 1}, {1, 0}}), NotAntisymmetric);
}

TEST_CASE("diagonal blocks") {
    PairingMatrix a = worked_matrix();
    CHECK(a.diagonal_block(0) == Rows{{0, 1}, {8, 0}});
    CHECK(a.diagonal_block(1) == Rows{{0, 1}, {2, 0}});
}

TEST_CASE("normalization rescales into the top ring") {
    NormalizedMatrix t = normalize(worked_matrix());
    CHECK(t.modulus_value() == 9);
    CHECK(t.matrix().rows() == Rows{{0, 1, 3, 3}, {8, 0, 6, 6}, {6, 3, 0, 3}, {6, 3, 6, 0}});
}

TEST_CASE("normalization is reversible entry by entry") {
    // Dividing the scale factor back out must recover the input exactly.
    Rng rng(2024);
    for (auto& shape : enumerate_shapes(3, 4, 2)) {
        for (int trial = 0; trial < 10; ++trial) {
            PairingMatrix a = random_pairing_matrix(shape, rng);
            NormalizedMatrix t = normalize(a);
            for (int u = 0; u < a.dim(); ++u) {
                for (int v = 0; v < a.dim(); ++v) {
                    int e = std::min(shape.exponent_of(u), shape.exponent_of(v));
                    std::int64_t scale = pow_i64(3, shape.top_exponent() - e);
                    CHECK(t.entry(u, v) % scale == 0);
                    CHECK(t.entry(u, v) / scale == a.entry(u, v));
                }
            }
        }
    }
}

TEST_CASE("commutation phases on the worked instance") {
    NormalizedMatrix t = normalize(worked_matrix());
    CHECK(commutation_phase(t, 2, LiftedElement{{0, 0, 3, 3}}).value() == 0);
    CHECK(commutation_phase(t, 0, LiftedElement{{0, 0, 1, 0}}).value() == 3);
    CHECK(commutation_phase(t, 1, LiftedElement{{1, 0, 0, 0}}).value() == 8);
    CHECK(commutation_phase(t, 0, LiftedElement{{0, 1, 0, 0}}).value() == 1);

    // (0,0,3,3) lifts the identity's coset, so every phase vanishes.
    for (int h = 0; h < 4; ++h) {
        CHECK(commutation_phase(t, h, LiftedElement{{0, 0, 3, 3}}).is_zero());
        CHECK(commutation_phase(t, h, lift(identity_element(worked_shape()))).is_zero());
    }

    CHECK(commutation_phase(t, worked_shape().generator(0), LiftedElement{{0, 1, 0, 0}}).value()
          == 1);
    CHECK_THROWS_AS(commutation_phase(t, 0, LiftedElement{{1, 2}}), WrongDimensions);
}

TEST_CASE("phases depend only on the projected element") {
    PGroupShape s = PGroupShape::validate(3, {Block{2, 1}, Block{1, 1}});
    PairingMatrix a = PairingMatrix::validate(s, {{0, 1}, {2, 0}});
    NormalizedMatrix t = normalize(a);
    const std::int64_t q = s.lift_modulus().value();
    std::vector<std::int64_t> v(2);
    for (v[0] = 0; v[0] < q; ++v[0]) {
        for (v[1] = 0; v[1] < q; ++v[1]) {
            LiftedElement raw{v};
            LiftedElement canon = lift(project(raw, s));
            for (int h = 0; h < 2; ++h) {
                CHECK(commutation_phase(t, h, raw) == commutation_phase(t, h, canon));
            }
        }
    }
}
