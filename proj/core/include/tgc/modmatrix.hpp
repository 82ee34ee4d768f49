#pragma once

#include <cstdint>
#include <vector>

#include "tgc/residue.hpp"

namespace tgc {

// Dense square matrix over Z/p^n with canonical entries. Row and column
// operations reduce after every step, so nothing ever leaves [0, p^n).
class ModMatrix {
public:
    ModMatrix(int dim, Modulus mod);
    static ModMatrix identity(int dim, Modulus mod);
    static ModMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, Modulus mod);

    int dim() const { return dim_; }
    const Modulus& mod() const { return mod_; }

    std::int64_t at(int r, int c) const { return data_[static_cast<std::size_t>(r) * dim_ + c]; }
    void set(int r, int c, std::int64_t v) {
        data_[static_cast<std::size_t>(r) * dim_ + c] = mod_canonical(v, mod_.value());
    }

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);
    void scale_row(int r, std::int64_t f);
    void scale_col(int c, std::int64_t f);
    // row dst += f * row src (and the column analogue)
    void add_row_multiple(int dst, int src, std::int64_t f);
    void add_col_multiple(int dst, int src, std::int64_t f);

    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;

    friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
    bool operator==(const ModMatrix&) const = default;

    bool is_zero() const;
    bool is_diagonal() const;
    std::vector<std::vector<std::int64_t>> rows() const;

private:
    int dim_;
    Modulus mod_;
    std::vector<std::int64_t> data_;
};

// Rank-full test for an arbitrary integer grid reduced mod p; p need not be
// tied to any Modulus (used for block tests over varying rings).
bool invertible_mod_prime(const std::vector<std::vector<std::int64_t>>& rows, std::int64_t p);

}  // namespace tgc
