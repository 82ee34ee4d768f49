#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tgc/counts.hpp"
#include "tgc/group.hpp"
#include "tgc/pairing.hpp"
#include "tgc/solver.hpp"

namespace tgc {

enum class Method { theorem, kernel, oracle };
const char* method_name(Method m);

// The subgroup of elements whose commutation phases all vanish. Produced
// either from the kernel route (generating set) or by full enumeration
// (complete listing, sorted in enumeration order).
struct RegularSubgroup {
    std::int64_t prime;
    std::int64_t order_exponent;  // order is p^order_exponent
    std::vector<GroupElement> generators;
    bool full_listing;

    Count order() const { return Count::prime_power(prime, order_exponent); }
};

// Block criterion: the center is trivial iff every diagonal block of the
// pairing matrix is invertible over its own ring Z/p^{n_i}, which over a
// chain ring is the same as invertibility of the block mod p.
bool center_trivial_by_theorem(const PairingMatrix& a);

// Quotients the lifted kernel by the sublattice of coordinates that project
// to zero: |G_reg| = |S| / p^{sum_s (n_1 - n_block(s))}.
RegularSubgroup greg_from_kernel(const KernelDescription& k, const PGroupShape& shape);

// Walks the whole group and keeps the elements with all phases zero.
RegularSubgroup greg_brute_force(const NormalizedMatrix& a, const PGroupShape& shape,
                                 std::uint64_t cap);

enum class OracleMode { if_feasible, always, never };

struct AnalyzeOptions {
    std::uint64_t enumeration_cap = 1000000;
    OracleMode oracle = OracleMode::if_feasible;
};

// Per-prime verdict. rank is the center dimension |G_reg| = p^rank_exponent;
// trivial holds exactly when the exponent is zero.
struct CenterReport {
    PGroupShape shape;
    bool trivial;
    std::int64_t rank_exponent;
    std::vector<GroupElement> greg_generators;  // sorted, deduplicated
    std::set<Method> methods_agreed;

    std::int64_t prime() const { return shape.prime(); }
    Count rank() const { return Count::prime_power(shape.prime(), rank_exponent); }
};

// Runs the theorem check and the kernel route, plus the enumeration oracle
// when feasible or requested, and insists that everything that ran agrees.
// Disagreement throws MethodsDisagree with a full witness; it would mean an
// implementation bug or a counterexample to the block criterion.
CenterReport analyze(const PGroupShape& shape, const PairingMatrix& a,
                     const AnalyzeOptions& options = {});

// Tensor product across distinct primes: triviality ANDs, ranks multiply,
// generators embed into the direct sum coordinate blocks.
struct CombinedReport {
    bool trivial;
    Count rank;
    std::vector<CenterReport> components;
    std::vector<std::vector<std::int64_t>> embedded_generators;
};

CombinedReport tensor_combine(const std::vector<CenterReport>& per_prime);

}  // namespace tgc
