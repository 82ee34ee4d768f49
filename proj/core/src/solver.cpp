#include "tgc/solver.hpp"

#include <algorithm>
#include <string>

#include "tgc/errors.hpp"

namespace tgc {

namespace {

// Splitmix64. Used only for pivot tie shuffling; pinned so behaviour is
// identical everywhere.
std::uint64_t mix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct Pivot {
    int row;
    int col;
    int val;
};

DiagonalForm diagonalize_impl(const ModMatrix& a, bool shuffled, std::uint64_t seed) {
    const Modulus& mod = a.mod();
    const std::int64_t p = mod.prime();
    const std::int64_t q = mod.value();
    const int n = mod.exponent();
    const int m = a.dim();

    ModMatrix d = a;
    ModMatrix row_t = ModMatrix::identity(m, mod);
    ModMatrix col_t = ModMatrix::identity(m, mod);
    std::vector<int> vals;
    std::uint64_t rng = seed;

    int k = 0;
    for (; k < m; ++k) {
        // Find the minimum-valuation entry of the trailing submatrix.
        std::optional<Pivot> best;
        std::vector<Pivot> ties;
        for (int r = k; r < m; ++r) {
            for (int c = k; c < m; ++c) {
                std::int64_t e = d.at(r, c);
                if (e == 0) continue;
                int v = val_p(e, p, n);
                if (!best || v < best->val) {
                    best = Pivot{r, c, v};
                    ties.assign(1, *best);
                } else if (shuffled && v == best->val) {
                    ties.push_back(Pivot{r, c, v});
                }
            }
        }
        if (!best) break;  // trailing submatrix is zero
        Pivot piv = *best;
        if (shuffled && ties.size() > 1) {
            piv = ties[static_cast<std::size_t>(mix64(rng) % ties.size())];
        }

        d.swap_rows(k, piv.row);
        row_t.swap_rows(k, piv.row);
        d.swap_cols(k, piv.col);
        col_t.swap_cols(k, piv.col);

        // Make the pivot an exact power of p by stripping its unit part.
        const std::int64_t pv = pow_i64(p, piv.val);
        std::int64_t unit = d.at(k, k) / pv;
        std::int64_t inv = inv_unit_mod(mod_canonical(unit, q), q);
        d.scale_row(k, inv);
        row_t.scale_row(k, inv);

        // Everything in the pivot's row and column has valuation >= piv.val,
        // so the elimination factors below are exact integer quotients.
        for (int r = k + 1; r < m; ++r) {
            std::int64_t e = d.at(r, k);
            if (e == 0) continue;
            std::int64_t f = e / pv;
            d.add_row_multiple(r, k, -f);
            row_t.add_row_multiple(r, k, -f);
        }
        for (int c = k + 1; c < m; ++c) {
            std::int64_t e = d.at(k, c);
            if (e == 0) continue;
            std::int64_t f = e / pv;
            d.add_col_multiple(c, k, -f);
            col_t.add_col_multiple(c, k, -f);
        }
        vals.push_back(piv.val);
    }

    if (!std::is_sorted(vals.begin(), vals.end())) {
        throw InternalInconsistency("diagonal valuations came out unsorted");
    }
    if (!d.is_diagonal()) {
        throw InternalInconsistency("elimination left an off-diagonal entry");
    }
    return DiagonalForm{std::move(vals), m - k, std::move(row_t), std::move(col_t), std::move(d)};
}

}  // namespace

DiagonalForm diagonalize(const ModMatrix& a) { return diagonalize_impl(a, false, 0); }

DiagonalForm diagonalize(const NormalizedMatrix& a) { return diagonalize(a.matrix()); }

DiagonalForm diagonalize_shuffled(const ModMatrix& a, std::uint64_t tie_break_seed) {
    return diagonalize_impl(a, true, tie_break_seed);
}

KernelDescription kernel(const ModMatrix& a) {
    const Modulus& mod = a.mod();
    const std::int64_t p = mod.prime();
    const int n = mod.exponent();
    const int m = a.dim();

    DiagonalForm f = diagonalize(a);

    // Solutions of D y == 0 are generated by p^{n - v_i} e_i for each pivot
    // with v_i > 0 plus the untouched unit vectors of zero columns; x = C y
    // carries them back to the original system.
    std::vector<LiftedElement> gens;
    std::int64_t size_exp = 0;
    const int rank = static_cast<int>(f.diag_valuations.size());
    for (int i = 0; i < rank; ++i) {
        int v = f.diag_valuations[i];
        size_exp += v;
        if (v == 0) continue;
        std::vector<std::int64_t> y(m, 0);
        y[i] = pow_i64(p, n - v);
        gens.push_back(LiftedElement{f.col_transform.apply(y)});
    }
    for (int j = rank; j < m; ++j) {
        size_exp += n;
        std::vector<std::int64_t> y(m, 0);
        y[j] = 1;
        gens.push_back(LiftedElement{f.col_transform.apply(y)});
    }

    // The generators were derived through the transforms; make sure they
    // really solve the original system before reporting anything.
    for (const auto& g : gens) {
        auto img = a.apply(g.coords);
        if (std::any_of(img.begin(), img.end(), [](std::int64_t v) { return v != 0; })) {
            throw InternalInconsistency("kernel generator fails to solve the system");
        }
    }

    // Per-variable congruences are reported only when they describe the
    // kernel exactly: the product of the coordinate projections must equal
    // the kernel size. Projection s is p^{c_s} Z/p^n with c_s the smallest
    // valuation seen in coordinate s across generators.
    std::optional<std::vector<std::int64_t>> per_variable;
    {
        std::vector<int> c(m, n);
        for (const auto& g : gens) {
            for (int s = 0; s < m; ++s) {
                c[s] = std::min(c[s], val_p(g.coords[s], p, n));
            }
        }
        std::int64_t profile_exp = 0;
        for (int s = 0; s < m; ++s) profile_exp += n - c[s];
        if (profile_exp == size_exp) {
            std::vector<std::int64_t> moduli(m);
            for (int s = 0; s < m; ++s) moduli[s] = pow_i64(p, c[s]);
            per_variable = std::move(moduli);
        }
    }

    return KernelDescription{p, size_exp, std::move(gens), std::move(per_variable)};
}

KernelDescription kernel(const NormalizedMatrix& a) { return kernel(a.matrix()); }

std::uint64_t count_solutions_brute(const ModMatrix& a, std::uint64_t cap) {
    const std::int64_t q = a.mod().value();
    const int m = a.dim();

    std::uint64_t space = 1;
    for (int s = 0; s < m; ++s) {
        if (space > cap / static_cast<std::uint64_t>(q)) {
            throw TooLargeToEnumerate("solution space (" + std::to_string(q) + ")^" +
                                      std::to_string(m) + " exceeds the enumeration cap " +
                                      std::to_string(cap));
        }
        space *= static_cast<std::uint64_t>(q);
    }

    std::vector<std::int64_t> x(m, 0);
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < space; ++i) {
        bool solves = true;
        for (int r = 0; r < m && solves; ++r) {
            std::int64_t acc = 0;
            for (int c = 0; c < m; ++c) acc += a.at(r, c) * x[c] % q;
            solves = acc % q == 0;
        }
        if (solves) ++count;
        for (int s = m - 1; s >= 0; --s) {
            if (++x[s] < q) break;
            x[s] = 0;
        }
    }
    return count;
}

std::uint64_t count_solutions_brute(const NormalizedMatrix& a, std::uint64_t cap) {
    return count_solutions_brute(a.matrix(), cap);
}

}  // namespace tgc
