#include "tgc/pairing.hpp"

#include <algorithm>

#include "tgc/errors.hpp"

namespace tgc {

Modulus PairingMatrix::entry_modulus(int u, int v) const {
    return Modulus(shape_.prime(), std::min(shape_.exponent_of(u), shape_.exponent_of(v)));
}

PairingMatrix PairingMatrix::validate(const PGroupShape& shape,
                                      const std::vector<std::vector<std::int64_t>>& raw) {
    const int m = shape.generator_count();
    if (static_cast<int>(raw.size()) != m) {
        throw WrongDimensions("pairing matrix must have " + std::to_string(m) + " rows, got " +
                              std::to_string(raw.size()));
    }
    std::vector<std::int64_t> data(static_cast<std::size_t>(m) * m);
    for (int u = 0; u < m; ++u) {
        if (static_cast<int>(raw[u].size()) != m) {
            throw WrongDimensions("pairing matrix row " + std::to_string(u + 1) + " must have " +
                                  std::to_string(m) + " entries, got " +
                                  std::to_string(raw[u].size()));
        }
        for (int v = 0; v < m; ++v) {
            int e = std::min(shape.exponent_of(u), shape.exponent_of(v));
            std::int64_t q = pow_i64(shape.prime(), e);
            data[static_cast<std::size_t>(u) * m + v] = mod_canonical(raw[u][v], q);
        }
    }
    for (int u = 0; u < m; ++u) {
        if (data[static_cast<std::size_t>(u) * m + u] != 0) throw NonzeroDiagonal(u);
    }
    for (int u = 0; u < m; ++u) {
        for (int v = u + 1; v < m; ++v) {
            int e = std::min(shape.exponent_of(u), shape.exponent_of(v));
            std::int64_t q = pow_i64(shape.prime(), e);
            std::int64_t sum = data[static_cast<std::size_t>(u) * m + v] +
                               data[static_cast<std::size_t>(v) * m + u];
            if (sum % q != 0) throw NotAntisymmetric(u, v);
        }
    }
    return PairingMatrix(shape, std::move(data));
}

std::vector<std::vector<std::int64_t>> PairingMatrix::rows() const {
    const int m = dim();
    std::vector<std::vector<std::int64_t>> out(m);
    for (int u = 0; u < m; ++u) {
        out[u].assign(data_.begin() + static_cast<std::size_t>(u) * m,
                      data_.begin() + static_cast<std::size_t>(u + 1) * m);
    }
    return out;
}

std::vector<std::vector<std::int64_t>> PairingMatrix::diagonal_block(int block) const {
    const int mi = shape_.blocks()[block].multiplicity;
    const int first = shape_.flat_index(block, 0);
    std::vector<std::vector<std::int64_t>> out(mi, std::vector<std::int64_t>(mi));
    for (int r = 0; r < mi; ++r) {
        for (int c = 0; c < mi; ++c) out[r][c] = entry(first + r, first + c);
    }
    return out;
}

NormalizedMatrix normalize(const PairingMatrix& a) {
    const PGroupShape& shape = a.shape();
    const int m = a.dim();
    const int n1 = shape.top_exponent();
    ModMatrix mat(m, shape.lift_modulus());
    for (int u = 0; u < m; ++u) {
        for (int v = 0; v < m; ++v) {
            int e = std::min(shape.exponent_of(u), shape.exponent_of(v));
            // No reduction needed: p^{n1-e} * x < p^{n1-e} * p^e = p^{n1}.
            mat.set(u, v, pow_i64(shape.prime(), n1 - e) * a.entry(u, v));
        }
    }
    return NormalizedMatrix(shape, std::move(mat));
}

Residue commutation_phase(const NormalizedMatrix& a, int flat_row, const LiftedElement& g) {
    const int m = a.dim();
    if (static_cast<int>(g.coords.size()) != m) {
        throw WrongDimensions("lifted element has wrong coordinate count");
    }
    const std::int64_t q = a.modulus_value();
    std::int64_t acc = 0;
    for (int v = 0; v < m; ++v) {
        acc = (acc + a.entry(flat_row, v) * mod_canonical(g.coords[v], q)) % q;
    }
    return Residue(acc, a.shape().lift_modulus());
}

Residue commutation_phase(const NormalizedMatrix& a, const GeneratorId& h,
                          const LiftedElement& g) {
    return commutation_phase(a, h.flat, g);
}

}  // namespace tgc
