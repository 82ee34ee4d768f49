#include <doctest.h>

#include <set>
#include <vector>

#include "tgc/center.hpp"
#include "tgc/sweep.hpp"
#include "support.hpp"

using namespace tgc;
using tgc::testing::span_of;
using tgc::testing::worked_matrix;
using tgc::testing::worked_shape;

namespace {

PairingMatrix zero_pairing(const PGroupShape& shape) {
    const int m = shape.generator_count();
    return PairingMatrix::validate(
        shape, std::vector<std::vector<std::int64_t>>(m, std::vector<std::int64_t>(m, 0)));
}

std::set<std::vector<std::int64_t>> listing_set(const RegularSubgroup& g) {
    std::set<std::vector<std::int64_t>> out;
    for (const auto& e : g.generators) out.insert(e.coords);
    return out;
}

}  // namespace

TEST_CASE("block criterion") {
    CHECK(center_trivial_by_theorem(worked_matrix()));
    CHECK(!center_trivial_by_theorem(zero_pairing(worked_shape())));

    // An odd-dimensional alternating block over an odd prime is singular,
    // so such shapes can never have a trivial center.
    PGroupShape odd = PGroupShape::validate(3, {Block{1, 3}});
    CHECK(!center_trivial_by_theorem(
        PairingMatrix::validate(odd, {{0, 1, 1}, {2, 0, 1}, {2, 2, 0}})));

    // p = 2 admits invertible alternating blocks in even dimension.
    PGroupShape symp = PGroupShape::validate(2, {Block{1, 2}});
    CHECK(center_trivial_by_theorem(PairingMatrix::validate(symp, {{0, 1}, {1, 0}})));
}

TEST_CASE("regular subgroup from the kernel") {
    NormalizedMatrix t = normalize(worked_matrix());
    RegularSubgroup g = greg_from_kernel(kernel(t), worked_shape());
    CHECK(g.prime == 3);
    CHECK(g.order_exponent == 0);
    CHECK(g.order().to_decimal() == "1");
    CHECK(!g.full_listing);
    // Both kernel generators project into the identity's fiber.
    REQUIRE(g.generators.size() == 1);
    CHECK(is_identity(g.generators[0]));

    // Untwisted: everything is central.
    PGroupShape s = PGroupShape::validate(3, {Block{2, 1}, Block{1, 1}});
    RegularSubgroup all = greg_from_kernel(kernel(normalize(zero_pairing(s))), s);
    CHECK(all.order_exponent == 3);  // |G| = 27

    // A kernel smaller than the identity fiber cannot come from a
    // lift-invariant system.
    KernelDescription fake{3, 0, {}, std::nullopt};
    CHECK_THROWS_AS(greg_from_kernel(fake, s), InternalInconsistency);
}

TEST_CASE("regular subgroup by enumeration") {
    NormalizedMatrix t = normalize(worked_matrix());
    RegularSubgroup g = greg_brute_force(t, worked_shape(), 1000);
    CHECK(g.order_exponent == 0);
    CHECK(g.full_listing);
    REQUIRE(g.generators.size() == 1);
    CHECK(is_identity(g.generators[0]));
    CHECK_THROWS_AS(greg_brute_force(t, worked_shape(), 728), TooLargeToEnumerate);
}

TEST_CASE("kernel route and enumeration agree on the subgroup itself") {
    Rng rng(424242);
    for (std::int64_t p : {2, 3}) {
        for (auto& shape : enumerate_shapes(p, 4, 2)) {
            for (int trial = 0; trial < 5; ++trial) {
                PairingMatrix a = random_pairing_matrix(shape, rng);
                NormalizedMatrix t = normalize(a);
                RegularSubgroup via_kernel = greg_from_kernel(kernel(t), shape);
                RegularSubgroup via_walk = greg_brute_force(t, shape, 100000);
                CHECK(via_kernel.order_exponent == via_walk.order_exponent);
                CHECK(span_of(shape, via_kernel.generators) == listing_set(via_walk));
            }
        }
    }
}

TEST_CASE("analyze on the worked instance") {
    CenterReport r = analyze(worked_shape(), worked_matrix());
    CHECK(r.trivial);
    CHECK(r.rank_exponent == 0);
    CHECK(r.rank().to_decimal() == "1");
    CHECK(r.prime() == 3);
    CHECK(r.methods_agreed ==
          std::set<Method>{Method::theorem, Method::kernel, Method::oracle});
}

TEST_CASE("analyze respects the oracle mode") {
    PGroupShape s = worked_shape();
    PairingMatrix a = worked_matrix();

    AnalyzeOptions never;
    never.oracle = OracleMode::never;
    CHECK(analyze(s, a, never).methods_agreed ==
          std::set<Method>{Method::theorem, Method::kernel});

    // if_feasible backs off silently when the group is too big for the cap.
    AnalyzeOptions small_cap;
    small_cap.enumeration_cap = 100;
    CHECK(analyze(s, a, small_cap).methods_agreed ==
          std::set<Method>{Method::theorem, Method::kernel});

    // An explicit oracle request does not back off.
    AnalyzeOptions forced;
    forced.oracle = OracleMode::always;
    forced.enumeration_cap = 100;
    CHECK_THROWS_AS(analyze(s, a, forced), TooLargeToEnumerate);

    forced.enumeration_cap = 1000;
    CHECK(analyze(s, a, forced).methods_agreed ==
          std::set<Method>{Method::theorem, Method::kernel, Method::oracle});
}

TEST_CASE("analyze a nontrivial center") {
    PGroupShape s = PGroupShape::validate(2, {Block{2, 1}});
    CenterReport r = analyze(s, zero_pairing(s));
    CHECK(!r.trivial);
    CHECK(r.rank_exponent == 2);
    CHECK(r.rank().to_factored() == "2^2");
    CHECK(span_of(s, r.greg_generators).size() == 4);
}

TEST_CASE("tensor products across primes") {
    CenterReport r2 = analyze(PGroupShape::validate(2, {Block{1, 1}}),
                              zero_pairing(PGroupShape::validate(2, {Block{1, 1}})));
    CenterReport r3 = analyze(PGroupShape::validate(3, {Block{1, 1}}),
                              zero_pairing(PGroupShape::validate(3, {Block{1, 1}})));
    CombinedReport both = tensor_combine({r2, r3});
    CHECK(!both.trivial);
    CHECK(both.rank.to_decimal() == "6");
    CHECK(both.rank.to_factored() == "2*3");
    CHECK(both.embedded_generators ==
          std::vector<std::vector<std::int64_t>>{{1, 0}, {0, 1}});

    PGroupShape symp = PGroupShape::validate(2, {Block{1, 2}});
    CenterReport rs = analyze(symp, PairingMatrix::validate(symp, {{0, 1}, {1, 0}}));
    PGroupShape flat3 = PGroupShape::validate(3, {Block{1, 2}});
    CenterReport rf = analyze(flat3, PairingMatrix::validate(flat3, {{0, 1}, {2, 0}}));
    CombinedReport trivial_both = tensor_combine({rs, rf});
    CHECK(trivial_both.trivial);
    CHECK(trivial_both.rank.to_decimal() == "1");
    CHECK(trivial_both.embedded_generators.empty());

    CombinedReport mixed = tensor_combine({rs, r3});
    CHECK(!mixed.trivial);
    CHECK(mixed.rank.to_decimal() == "3");
    CHECK(mixed.embedded_generators ==
          std::vector<std::vector<std::int64_t>>{{0, 0, 1}});

    CHECK_THROWS_AS(tensor_combine({r3, r3}), DuplicatePrime);
}

TEST_CASE("pinned random stream") {
    Rng rng(0);
    CHECK(rng.next() == 16294208416658607535ULL);
    CHECK(rng.next() == 7960286522194355700ULL);
    CHECK(rng.next() == 487617019471545679ULL);
    for (std::uint64_t bound : {1ULL, 2ULL, 7ULL, 1000ULL}) {
        Rng r2(99);
        for (int i = 0; i < 50; ++i) CHECK(r2.below(bound) < bound);
    }
}

TEST_CASE("shape sweeps stay inside their bounds") {
    auto shapes = enumerate_shapes(3, 5, 3);
    CHECK(!shapes.empty());
    using Key = std::vector<std::pair<int, int>>;
    std::set<Key> seen;
    for (const auto& s : shapes) {
        CHECK(s.prime() == 3);
        CHECK(s.top_exponent() <= 3);
        CHECK(s.order_exponent() <= 5);
        Key key;
        for (const auto& b : s.blocks()) key.emplace_back(b.exponent, b.multiplicity);
        CHECK(seen.insert(key).second);  // no duplicates
    }
    CHECK(seen.count(Key{{1, 1}}) == 1);
    CHECK(seen.count(Key{{3, 1}, {2, 1}}) == 1);
    CHECK(seen.count(Key{{2, 2}, {1, 1}}) == 1);
    CHECK(seen.count(Key{{3, 2}}) == 0);  // weight 6 > 5
}
