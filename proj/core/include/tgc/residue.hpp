#pragma once

#include <cstdint>

#include "tgc/errors.hpp"

namespace tgc {

bool is_prime(std::int64_t n);

// b^e without overflow checks; callers must know the result fits.
std::int64_t pow_i64(std::int64_t b, int e);

// Canonical representative in [0, q) for any int64, including negatives.
std::int64_t mod_canonical(std::int64_t v, std::int64_t q);

// p-adic valuation of a canonical value; returns cap when v == 0.
int val_p(std::int64_t v, std::int64_t p, int cap);

// Inverse of a unit mod q via extended gcd. Precondition: gcd(a, q) == 1.
std::int64_t inv_unit_mod(std::int64_t a, std::int64_t q);

// The chain ring Z/p^n. Keeping p^n <= 2^31 guarantees that a product of two
// canonical representatives fits in int64, so all arithmetic stays exact.
class Modulus {
public:
    Modulus(std::int64_t p, int n);

    std::int64_t prime() const { return p_; }
    int exponent() const { return n_; }
    std::int64_t value() const { return q_; }

    bool operator==(const Modulus&) const = default;

private:
    std::int64_t p_;
    int n_;
    std::int64_t q_;
};

struct Valuation {
    int v;      // in [0, n]; equals n exactly when the element is zero
    bool zero;

    bool operator==(const Valuation&) const = default;
};

// Canonical residue in [0, p^n). Mixed-modulus arithmetic is a programming
// error and is rejected loudly.
class Residue {
public:
    Residue(std::int64_t raw, Modulus m) : m_(m), v_(mod_canonical(raw, m.value())) {}

    std::int64_t value() const { return v_; }
    const Modulus& modulus() const { return m_; }
    bool is_zero() const { return v_ == 0; }

    friend Residue operator+(const Residue& a, const Residue& b) {
        a.require_same(b);
        return Residue(a.v_ + b.v_, a.m_);
    }
    friend Residue operator-(const Residue& a, const Residue& b) {
        a.require_same(b);
        return Residue(a.v_ - b.v_, a.m_);
    }
    friend Residue operator*(const Residue& a, const Residue& b) {
        a.require_same(b);
        return Residue(a.v_ * b.v_ % a.m_.value(), a.m_);
    }
    Residue operator-() const { return Residue(-v_, m_); }

    bool operator==(const Residue&) const = default;

private:
    void require_same(const Residue& other) const;

    Modulus m_;
    std::int64_t v_;
};

Valuation valuation(const Residue& a);

// Throws NotAUnit when p divides the value.
Residue unit_inverse(const Residue& a);

}  // namespace tgc
