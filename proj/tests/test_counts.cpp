#include <doctest.h>

#include "tgc/counts.hpp"

using namespace tgc;

TEST_CASE("small prime powers") {
    Count c = Count::prime_power(3, 2);
    CHECK(c.as_u64() == std::uint64_t{9});
    CHECK(c.to_decimal() == "9");
    CHECK(c.to_factored() == "3^2");
}

TEST_CASE("one") {
    Count c = Count::prime_power(5, 0);
    CHECK(c.as_u64() == std::uint64_t{1});
    CHECK(c.to_decimal() == "1");
    CHECK(c.to_factored() == "1");
}

TEST_CASE("products accumulate exponents") {
    Count c = Count::prime_power(2, 1);
    c *= Count::prime_power(3, 1);
    CHECK(c.as_u64() == std::uint64_t{6});
    CHECK(c.to_decimal() == "6");
    CHECK(c.to_factored() == "2*3");

    Count d = Count::prime_power(2, 3);
    d *= Count::prime_power(5, 3);
    CHECK(d.to_decimal() == "1000");
    CHECK(d.to_factored() == "2^3*5^3");

    Count e = Count::prime_power(3, 2);
    e *= Count::prime_power(3, 2);
    CHECK(e.to_factored() == "3^4");
    CHECK(e.as_u64() == std::uint64_t{81});
}

TEST_CASE("beyond 64 bits") {
    Count c = Count::prime_power(2, 70);
    CHECK(!c.as_u64().has_value());
    CHECK(c.to_decimal() == "1180591620717411303424");

    Count d = Count::prime_power(3, 600);
    CHECK(!d.as_u64().has_value());
    // 3^600 has 287 digits; spot-check the ends.
    std::string s = d.to_decimal();
    CHECK(s.size() == 287);
    CHECK(s.substr(0, 5) == "18739");
    CHECK(s.substr(s.size() - 5) == "32001");
}

TEST_CASE("u64 boundary") {
    Count c = Count::prime_power(2, 63);
    CHECK(c.as_u64() == (std::uint64_t{1} << 63));
    Count d = Count::prime_power(2, 64);
    CHECK(!d.as_u64().has_value());
}
