#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tgc {

// Raised on malformed user input or on problem sizes the requested method
// cannot handle. The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Violated internal contract. Either a bug or, for MethodsDisagree, a live
// counterexample to the block criterion. The CLI maps MethodsDisagree to
// exit code 3.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class NotPrime : public InputError {
public:
    explicit NotPrime(std::int64_t p)
        : InputError("not a prime: " + std::to_string(p)), p_(p) {}
    std::int64_t value() const { return p_; }

private:
    std::int64_t p_;
};

class ModulusTooLarge : public InputError {
public:
    ModulusTooLarge(std::int64_t p, int n)
        : InputError("modulus " + std::to_string(p) + "^" + std::to_string(n) +
                     " exceeds 2^31; coordinate rings this large are not supported") {}
};

class EmptyShape : public InputError {
public:
    EmptyShape() : InputError("group shape has no blocks") {}
};

class ExponentsNotStrictlyDecreasing : public InputError {
public:
    ExponentsNotStrictlyDecreasing()
        : InputError("block exponents must be strictly decreasing and positive, "
                     "with positive multiplicities") {}
};

class NotAUnit : public InputError {
public:
    NotAUnit(std::int64_t value, std::int64_t modulus)
        : InputError("not a unit: " + std::to_string(value) + " mod " +
                     std::to_string(modulus)) {}
};

class WrongDimensions : public InputError {
public:
    explicit WrongDimensions(const std::string& what) : InputError(what) {}
};

// Row/column indices are reported 1-based, matching the printed matrices.
class NotAntisymmetric : public InputError {
public:
    NotAntisymmetric(int row, int col)
        : InputError("pairing matrix is not antisymmetric at entry (" +
                     std::to_string(row + 1) + ", " + std::to_string(col + 1) +
                     ") versus (" + std::to_string(col + 1) + ", " +
                     std::to_string(row + 1) + ")"),
          row_(row), col_(col) {}
    int row() const { return row_; }
    int col() const { return col_; }

private:
    int row_, col_;
};

class NonzeroDiagonal : public InputError {
public:
    explicit NonzeroDiagonal(int index)
        : InputError("pairing matrix has a nonzero diagonal entry at (" +
                     std::to_string(index + 1) + ", " + std::to_string(index + 1) + ")"),
          index_(index) {}
    int index() const { return index_; }

private:
    int index_;
};

class TooLargeToEnumerate : public InputError {
public:
    explicit TooLargeToEnumerate(const std::string& what) : InputError(what) {}
};

class TooLargeToValidate : public InputError {
public:
    explicit TooLargeToValidate(const std::string& what) : InputError(what) {}
};

// Element indices refer to the canonical enumeration order of the group.
class NotACocycle : public InputError {
public:
    NotACocycle(std::uint64_t sigma, std::uint64_t tau, std::uint64_t rho)
        : InputError("cocycle identity fails at element triple (" +
                     std::to_string(sigma) + ", " + std::to_string(tau) + ", " +
                     std::to_string(rho) + ")"),
          sigma_(sigma), tau_(tau), rho_(rho) {}
    std::uint64_t sigma() const { return sigma_; }
    std::uint64_t tau() const { return tau_; }
    std::uint64_t rho() const { return rho_; }

private:
    std::uint64_t sigma_, tau_, rho_;
};

class PairingOrderViolation : public InputError {
public:
    PairingOrderViolation(int row, int col)
        : InputError("antisymmetrized cocycle value at generator pair (" +
                     std::to_string(row + 1) + ", " + std::to_string(col + 1) +
                     ") is not divisible by the required power of p"),
          row_(row), col_(col) {}
    int row() const { return row_; }
    int col() const { return col_; }

private:
    int row_, col_;
};

class DuplicatePrime : public InputError {
public:
    explicit DuplicatePrime(std::int64_t p)
        : InputError("duplicate prime in problem: " + std::to_string(p)), p_(p) {}
    std::int64_t value() const { return p_; }

private:
    std::int64_t p_;
};

class InternalInconsistency : public InternalError {
public:
    explicit InternalInconsistency(const std::string& what) : InternalError(what) {}
};

class MethodsDisagree : public InternalError {
public:
    explicit MethodsDisagree(const std::string& what) : InternalError(what) {}
};

}  // namespace tgc
