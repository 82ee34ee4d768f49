#include <doctest.h>

#include <map>
#include <vector>

#include "tgc/group.hpp"
#include "support.hpp"

using namespace tgc;
using tgc::testing::worked_shape;

TEST_CASE("shape validation") {
    PGroupShape s = worked_shape();
    CHECK(s.prime() == 3);
    CHECK(s.block_count() == 2);
    CHECK(s.generator_count() == 4);
    CHECK(s.top_exponent() == 2);
    CHECK(s.order_exponent() == 6);
    CHECK(s.order_u64() == std::uint64_t{729});
    CHECK(s.order().to_factored() == "3^6");

    CHECK_THROWS_AS(PGroupShape::validate(3, {Block{1, 1}, Block{2, 1}}),
                    ExponentsNotStrictlyDecreasing);
    CHECK_THROWS_AS(PGroupShape::validate(3, {Block{2, 1}, Block{2, 1}}),
                    ExponentsNotStrictlyDecreasing);
    CHECK_THROWS_AS(PGroupShape::validate(3, {}), EmptyShape);
    CHECK_THROWS_AS(PGroupShape::validate(3, {Block{2, 0}}), ExponentsNotStrictlyDecreasing);
    CHECK_THROWS_AS(PGroupShape::validate(3, {Block{0, 2}}), ExponentsNotStrictlyDecreasing);
    CHECK_THROWS_AS(PGroupShape::validate(6, {Block{1, 1}}), NotPrime);
    CHECK_THROWS_AS(PGroupShape::validate(2, {Block{40, 1}}), ModulusTooLarge);
}

TEST_CASE("generator bookkeeping") {
    PGroupShape s = worked_shape();
    CHECK(s.block_of(0) == 0);
    CHECK(s.block_of(1) == 0);
    CHECK(s.block_of(2) == 1);
    CHECK(s.block_of(3) == 1);
    CHECK(s.exponent_of(0) == 2);
    CHECK(s.exponent_of(2) == 1);
    CHECK(s.coord_modulus_value(0) == 9);
    CHECK(s.coord_modulus_value(3) == 3);
    CHECK(s.lift_modulus().value() == 9);

    GeneratorId g = s.generator(2);
    CHECK(g.block == 1);
    CHECK(g.position == 0);
    CHECK(g.flat == 2);
    CHECK(s.flat_index(1, 1) == 3);
    CHECK(s.flat_index(0, 0) == 0);
}

TEST_CASE("group operation wraps per coordinate") {
    PGroupShape s = PGroupShape::validate(3, {Block{2, 1}, Block{1, 1}});
    GroupElement a{{8, 2}}, b{{4, 2}};
    GroupElement c = add(s, a, b);
    CHECK(c.coords == std::vector<std::int64_t>{3, 1});
    CHECK(is_identity(identity_element(s)));
    CHECK(identity_element(s).coords == std::vector<std::int64_t>{0, 0});
    CHECK_THROWS_AS(add(s, a, GroupElement{{1, 2, 3}}), WrongDimensions);
}

TEST_CASE("lift then project is the identity") {
    PGroupShape s = PGroupShape::validate(3, {Block{2, 1}, Block{1, 1}});
    ElementEnumerator walk(s, 1000);
    CHECK(walk.total() == 27);
    while (auto g = walk.next()) {
        LiftedElement v = lift(*g);
        CHECK(v.coords == g->coords);
        CHECK(project(v, s).coords == g->coords);
    }
}

TEST_CASE("each element has the expected lift fiber") {
    // Lifts live in (Z/p^{n1})^m; fibers over G all have size p^{sum(n1-n_s)}.
    PGroupShape s = PGroupShape::validate(3, {Block{2, 1}, Block{1, 1}});
    std::int64_t q = s.lift_modulus().value();
    std::map<std::vector<std::int64_t>, int> fiber;
    std::vector<std::int64_t> v(2, 0);
    for (v[0] = 0; v[0] < q; ++v[0])
        for (v[1] = 0; v[1] < q; ++v[1])
            fiber[project(LiftedElement{v}, s).coords]++;
    CHECK(fiber.size() == 27);
    for (auto& [g, n] : fiber) CHECK(n == 3);  // 3^{(2-2)+(2-1)}
}

TEST_CASE("enumeration order and indexing") {
    PGroupShape s = PGroupShape::validate(3, {Block{1, 2}});
    std::vector<GroupElement> all;
    ElementEnumerator walk(s, 100);
    while (auto g = walk.next()) all.push_back(*g);
    REQUIRE(all.size() == 9);
    CHECK(all[0].coords == std::vector<std::int64_t>{0, 0});
    CHECK(all[1].coords == std::vector<std::int64_t>{0, 1});
    CHECK(all[2].coords == std::vector<std::int64_t>{0, 2});
    CHECK(all[3].coords == std::vector<std::int64_t>{1, 0});
    CHECK(all[8].coords == std::vector<std::int64_t>{2, 2});

    for (std::uint64_t i = 0; i < 9; ++i) {
        CHECK(element_index(s, all[i]) == i);
        CHECK(element_at(s, i).coords == all[i].coords);
    }

    walk.reset();
    auto again = walk.next();
    REQUIRE(again.has_value());
    CHECK(again->coords == all[0].coords);
}

TEST_CASE("mixed moduli enumerate in mixed radix") {
    PGroupShape s = PGroupShape::validate(2, {Block{2, 1}, Block{1, 1}});
    std::vector<GroupElement> all;
    ElementEnumerator walk(s, 100);
    while (auto g = walk.next()) all.push_back(*g);
    REQUIRE(all.size() == 8);
    CHECK(all[1].coords == std::vector<std::int64_t>{0, 1});
    CHECK(all[2].coords == std::vector<std::int64_t>{1, 0});
    CHECK(all[7].coords == std::vector<std::int64_t>{3, 1});
}

TEST_CASE("enumeration cap") {
    PGroupShape s = worked_shape();  // order 729
    CHECK_THROWS_AS(ElementEnumerator(s, 728), TooLargeToEnumerate);
    ElementEnumerator walk(s, 729);
    int n = 0;
    while (walk.next()) ++n;
    CHECK(n == 729);
}

TEST_CASE("element comparisons") {
    GroupElement a{{0, 1}}, b{{0, 1}}, c{{1, 0}};
    CHECK(a == b);
    CHECK(a < c);
    CHECK(!(c < a));
}
