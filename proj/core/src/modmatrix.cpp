#include "tgc/modmatrix.hpp"

#include <algorithm>
#include <utility>

#include "tgc/errors.hpp"

namespace tgc {

ModMatrix::ModMatrix(int dim, Modulus mod)
    : dim_(dim), mod_(mod), data_(static_cast<std::size_t>(dim) * dim, 0) {
    if (dim < 1) throw WrongDimensions("matrix dimension must be >= 1");
}

ModMatrix ModMatrix::identity(int dim, Modulus mod) {
    ModMatrix m(dim, mod);
    for (int i = 0; i < dim; ++i) m.set(i, i, 1);
    return m;
}

ModMatrix ModMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, Modulus mod) {
    const int n = static_cast<int>(rows.size());
    ModMatrix m(n, mod);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows[r].size()) != n) {
            throw WrongDimensions("matrix rows must form a square grid");
        }
        for (int c = 0; c < n; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

void ModMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < dim_; ++c) {
        std::swap(data_[static_cast<std::size_t>(a) * dim_ + c],
                  data_[static_cast<std::size_t>(b) * dim_ + c]);
    }
}

void ModMatrix::swap_cols(int a, int b) {
    if (a == b) return;
    for (int r = 0; r < dim_; ++r) {
        std::swap(data_[static_cast<std::size_t>(r) * dim_ + a],
                  data_[static_cast<std::size_t>(r) * dim_ + b]);
    }
}

void ModMatrix::scale_row(int r, std::int64_t f) {
    f = mod_canonical(f, mod_.value());
    for (int c = 0; c < dim_; ++c) set(r, c, at(r, c) * f % mod_.value());
}

void ModMatrix::scale_col(int c, std::int64_t f) {
    f = mod_canonical(f, mod_.value());
    for (int r = 0; r < dim_; ++r) set(r, c, at(r, c) * f % mod_.value());
}

void ModMatrix::add_row_multiple(int dst, int src, std::int64_t f) {
    f = mod_canonical(f, mod_.value());
    for (int c = 0; c < dim_; ++c) {
        set(dst, c, at(dst, c) + (at(src, c) * f) % mod_.value());
    }
}

void ModMatrix::add_col_multiple(int dst, int src, std::int64_t f) {
    f = mod_canonical(f, mod_.value());
    for (int r = 0; r < dim_; ++r) {
        set(r, dst, at(r, dst) + (at(r, src) * f) % mod_.value());
    }
}

std::vector<std::int64_t> ModMatrix::apply(const std::vector<std::int64_t>& v) const {
    if (static_cast<int>(v.size()) != dim_) {
        throw WrongDimensions("vector length does not match matrix dimension");
    }
    std::vector<std::int64_t> out(dim_, 0);
    for (int r = 0; r < dim_; ++r) {
        std::int64_t acc = 0;
        for (int c = 0; c < dim_; ++c) {
            acc = (acc + at(r, c) * mod_canonical(v[c], mod_.value())) % mod_.value();
        }
        out[r] = acc;
    }
    return out;
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
    if (a.dim_ != b.dim_ || !(a.mod_ == b.mod_)) {
        throw WrongDimensions("matrix product requires equal dimension and modulus");
    }
    ModMatrix out(a.dim_, a.mod_);
    for (int r = 0; r < a.dim_; ++r) {
        for (int c = 0; c < a.dim_; ++c) {
            std::int64_t acc = 0;
            for (int k = 0; k < a.dim_; ++k) {
                acc = (acc + a.at(r, k) * b.at(k, c)) % a.mod_.value();
            }
            out.set(r, c, acc);
        }
    }
    return out;
}

bool ModMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
}

bool ModMatrix::is_diagonal() const {
    for (int r = 0; r < dim_; ++r) {
        for (int c = 0; c < dim_; ++c) {
            if (r != c && at(r, c) != 0) return false;
        }
    }
    return true;
}

std::vector<std::vector<std::int64_t>> ModMatrix::rows() const {
    std::vector<std::vector<std::int64_t>> out(dim_);
    for (int r = 0; r < dim_; ++r) {
        out[r].assign(data_.begin() + static_cast<std::size_t>(r) * dim_,
                      data_.begin() + static_cast<std::size_t>(r + 1) * dim_);
    }
    return out;
}

bool invertible_mod_prime(const std::vector<std::vector<std::int64_t>>& rows, std::int64_t p) {
    const int n = static_cast<int>(rows.size());
    std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows[r].size()) != n) {
            throw WrongDimensions("block must be square");
        }
        for (int c = 0; c < n; ++c) a[r][c] = mod_canonical(rows[r][c], p);
    }
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r) {
            if (a[r][k] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return false;
        std::swap(a[k], a[pivot]);
        std::int64_t inv = inv_unit_mod(a[k][k], p);
        for (int c = k; c < n; ++c) a[k][c] = a[k][c] * inv % p;
        for (int r = k + 1; r < n; ++r) {
            std::int64_t f = a[r][k];
            if (f == 0) continue;
            for (int c = k; c < n; ++c) {
                a[r][c] = mod_canonical(a[r][c] - f * a[k][c], p);
            }
        }
    }
    return true;
}

}  // namespace tgc
