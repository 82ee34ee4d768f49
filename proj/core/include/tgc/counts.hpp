#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace tgc {

// Exact cardinality kept in factored form {prime -> exponent}. Every count in
// this library is a product of prime powers, so staying factored keeps size
// arithmetic exact no matter how large the group gets. Decimal rendering goes
// through a small digit vector, never through floating point.
class Count {
public:
    Count() = default;  // the count 1

    static Count prime_power(std::int64_t p, std::int64_t e);

    Count& operator*=(const Count& other);
    friend Count operator*(Count a, const Count& b) {
        a *= b;
        return a;
    }

    bool operator==(const Count&) const = default;

    bool is_one() const { return factors_.empty(); }
    const std::map<std::int64_t, std::int64_t>& factors() const { return factors_; }

    // Present only when the exact value fits.
    std::optional<std::uint64_t> as_u64() const;

    std::string to_decimal() const;

    // "1", "3^2", "2*3^4", ... with primes ascending.
    std::string to_factored() const;

private:
    std::map<std::int64_t, std::int64_t> factors_;
};

}  // namespace tgc
