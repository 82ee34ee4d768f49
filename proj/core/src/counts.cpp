#include "tgc/counts.hpp"

#include <limits>
#include <vector>

#include "tgc/errors.hpp"

namespace tgc {

Count Count::prime_power(std::int64_t p, std::int64_t e) {
    if (p < 2) throw InternalInconsistency("count factor base must be >= 2");
    if (e < 0) throw InternalInconsistency("count exponent must be >= 0");
    Count c;
    if (e > 0) c.factors_[p] = e;
    return c;
}

Count& Count::operator*=(const Count& other) {
    for (const auto& [p, e] : other.factors_) factors_[p] += e;
    return *this;
}

std::optional<std::uint64_t> Count::as_u64() const {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t acc = 1;
    for (const auto& [p, e] : factors_) {
        for (std::int64_t i = 0; i < e; ++i) {
            if (acc > kMax / static_cast<std::uint64_t>(p)) return std::nullopt;
            acc *= static_cast<std::uint64_t>(p);
        }
    }
    return acc;
}

std::string Count::to_decimal() const {
    // Base-1e9 digits, least significant first.
    std::vector<std::uint64_t> digits{1};
    constexpr std::uint64_t kBase = 1000000000;
    auto scale = [&](std::uint64_t f) {
        std::uint64_t carry = 0;
        for (auto& d : digits) {
            std::uint64_t t = d * f + carry;
            d = t % kBase;
            carry = t / kBase;
        }
        while (carry) {
            digits.push_back(carry % kBase);
            carry /= kBase;
        }
    };
    for (const auto& [p, e] : factors_) {
        for (std::int64_t i = 0; i < e; ++i) scale(static_cast<std::uint64_t>(p));
    }
    std::string out = std::to_string(digits.back());
    for (auto it = digits.rbegin() + 1; it != digits.rend(); ++it) {
        std::string part = std::to_string(*it);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

std::string Count::to_factored() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [p, e] : factors_) {
        if (!out.empty()) out += "*";
        out += std::to_string(p);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace tgc
