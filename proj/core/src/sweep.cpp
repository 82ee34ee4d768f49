#include "tgc/sweep.hpp"

#include <algorithm>

#include "tgc/errors.hpp"
#include "tgc/residue.hpp"

namespace tgc {

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw InternalInconsistency("Rng::below needs a positive bound");
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

namespace {

void extend_shapes(std::int64_t p, int weight_left, int max_exp,
                   std::vector<Block>& prefix, std::vector<PGroupShape>& out) {
    if (!prefix.empty()) {
        out.push_back(PGroupShape::validate(p, prefix));
    }
    for (int n = std::min(max_exp, weight_left); n >= 1; --n) {
        for (int m = 1; n * m <= weight_left; ++m) {
            prefix.push_back(Block{n, m});
            extend_shapes(p, weight_left - n * m, n - 1, prefix, out);
            prefix.pop_back();
        }
    }
}

}  // namespace

std::vector<PGroupShape> enumerate_shapes(std::int64_t p, int max_weight, int max_top_exponent) {
    std::vector<PGroupShape> out;
    std::vector<Block> prefix;
    extend_shapes(p, max_weight, max_top_exponent, prefix, out);
    return out;
}

PairingMatrix random_pairing_matrix(const PGroupShape& shape, Rng& rng) {
    const int m = shape.generator_count();
    std::vector<std::vector<std::int64_t>> raw(m, std::vector<std::int64_t>(m, 0));
    for (int u = 0; u < m; ++u) {
        for (int v = u + 1; v < m; ++v) {
            int e = std::min(shape.exponent_of(u), shape.exponent_of(v));
            std::int64_t q = pow_i64(shape.prime(), e);
            std::int64_t x = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(q)));
            raw[u][v] = x;
            raw[v][u] = mod_canonical(-x, q);
        }
    }
    return PairingMatrix::validate(shape, raw);
}

}  // namespace tgc
