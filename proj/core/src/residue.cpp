#include "tgc/residue.hpp"

namespace tgc {

namespace {
constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::int64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::int64_t pow_i64(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::int64_t mod_canonical(std::int64_t v, std::int64_t q) {
    std::int64_t r = v % q;
    return r < 0 ? r + q : r;
}

int val_p(std::int64_t v, std::int64_t p, int cap) {
    if (v == 0) return cap;
    int e = 0;
    while (v % p == 0) {
        v /= p;
        ++e;
    }
    return e;
}

std::int64_t inv_unit_mod(std::int64_t a, std::int64_t q) {
    std::int64_t r0 = q, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t k = r0 / r1;
        std::int64_t r2 = r0 - k * r1;
        std::int64_t t2 = t0 - k * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw NotAUnit(a, q);
    return mod_canonical(t0, q);
}

Modulus::Modulus(std::int64_t p, int n) : p_(p), n_(n) {
    if (!is_prime(p)) throw NotPrime(p);
    if (n < 1) throw InputError("modulus exponent must be >= 1, got " + std::to_string(n));
    std::int64_t q = 1;
    for (int i = 0; i < n; ++i) {
        if (q > kMaxModulus / p) throw ModulusTooLarge(p, n);
        q *= p;
    }
    if (q > kMaxModulus) throw ModulusTooLarge(p, n);
    q_ = q;
}

void Residue::require_same(const Residue& other) const {
    if (!(m_ == other.m_)) {
        throw InternalInconsistency("residue arithmetic across distinct moduli");
    }
}

Valuation valuation(const Residue& a) {
    if (a.is_zero()) return Valuation{a.modulus().exponent(), true};
    return Valuation{val_p(a.value(), a.modulus().prime(), a.modulus().exponent()), false};
}

Residue unit_inverse(const Residue& a) {
    if (a.value() % a.modulus().prime() == 0) {
        throw NotAUnit(a.value(), a.modulus().value());
    }
    return Residue(inv_unit_mod(a.value(), a.modulus().value()), a.modulus());
}

}  // namespace tgc
