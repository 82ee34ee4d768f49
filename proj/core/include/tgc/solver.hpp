#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tgc/counts.hpp"
#include "tgc/group.hpp"
#include "tgc/modmatrix.hpp"
#include "tgc/pairing.hpp"

namespace tgc {

// Result of two-sided elimination over Z/p^n: row_transform * input *
// col_transform == diagonal, both transforms invertible. Nonzero diagonal
// entries are exact powers p^{v} with v ascending; zero_count columns (and
// rows) remain identically zero at the end.
struct DiagonalForm {
    std::vector<int> diag_valuations;
    int zero_count;
    ModMatrix row_transform;
    ModMatrix col_transform;
    ModMatrix diagonal;
};

// Deterministic pivoting: minimum valuation in the remaining submatrix,
// ties broken by smallest (row, col).
DiagonalForm diagonalize(const ModMatrix& a);
DiagonalForm diagonalize(const NormalizedMatrix& a);

// Same elimination but ties between minimum-valuation pivot candidates are
// broken pseudo-randomly. Exists so cross-checks can shuffle the elimination
// order; the resulting kernel size must never change.
DiagonalForm diagonalize_shuffled(const ModMatrix& a, std::uint64_t tie_break_seed);

// The solution set S = {x in (Z/p^n)^m : A x == 0}, described by its exact
// size p^{size_exponent} and a generating set. When S is axis-aligned, i.e.
// exactly the set of x with x_s == 0 (mod per_variable[s]) for every s, the
// per-variable moduli are reported too; otherwise that field stays empty
// rather than being approximated.
struct KernelDescription {
    std::int64_t prime;
    std::int64_t size_exponent;
    std::vector<LiftedElement> generators;
    std::optional<std::vector<std::int64_t>> per_variable;

    Count size() const { return Count::prime_power(prime, size_exponent); }
};

KernelDescription kernel(const ModMatrix& a);
KernelDescription kernel(const NormalizedMatrix& a);

// Counts solutions of A x == 0 by walking all of (Z/p^n)^m. Throws
// TooLargeToEnumerate when the vector space is bigger than cap.
std::uint64_t count_solutions_brute(const ModMatrix& a, std::uint64_t cap);
std::uint64_t count_solutions_brute(const NormalizedMatrix& a, std::uint64_t cap);

}  // namespace tgc
