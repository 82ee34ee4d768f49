#include "tgc/group.hpp"

#include <algorithm>

#include "tgc/errors.hpp"

namespace tgc {

PGroupShape PGroupShape::validate(std::int64_t p, const std::vector<Block>& blocks) {
    if (!is_prime(p)) throw NotPrime(p);
    if (blocks.empty()) throw EmptyShape();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].exponent < 1 || blocks[i].multiplicity < 1) {
            throw ExponentsNotStrictlyDecreasing();
        }
        if (i > 0 && blocks[i].exponent >= blocks[i - 1].exponent) {
            throw ExponentsNotStrictlyDecreasing();
        }
    }

    PGroupShape s;
    s.p_ = p;
    s.blocks_ = blocks;
    for (int j = 0; j < static_cast<int>(blocks.size()); ++j) {
        // Constructing the modulus validates p^{n_j} <= 2^31 up front.
        Modulus m(p, blocks[j].exponent);
        for (int i = 0; i < blocks[j].multiplicity; ++i) {
            s.flat_block_.push_back(j);
            s.coord_mod_.push_back(m.value());
        }
        s.order_exponent_ += static_cast<std::int64_t>(blocks[j].exponent) * blocks[j].multiplicity;
    }
    return s;
}

GeneratorId PGroupShape::generator(int flat) const {
    int b = flat_block_[flat];
    int first = 0;
    for (int j = 0; j < b; ++j) first += blocks_[j].multiplicity;
    return GeneratorId{b, flat - first, flat};
}

int PGroupShape::flat_index(int block, int position) const {
    int first = 0;
    for (int j = 0; j < block; ++j) first += blocks_[j].multiplicity;
    return first + position;
}

GroupElement identity_element(const PGroupShape& shape) {
    return GroupElement{std::vector<std::int64_t>(shape.generator_count(), 0)};
}

bool is_identity(const GroupElement& g) {
    return std::all_of(g.coords.begin(), g.coords.end(),
                       [](std::int64_t c) { return c == 0; });
}

GroupElement add(const PGroupShape& shape, const GroupElement& a, const GroupElement& b) {
    const int m = shape.generator_count();
    if (static_cast<int>(a.coords.size()) != m || static_cast<int>(b.coords.size()) != m) {
        throw WrongDimensions("group element has wrong coordinate count");
    }
    GroupElement out{std::vector<std::int64_t>(m)};
    for (int s = 0; s < m; ++s) {
        out.coords[s] = mod_canonical(a.coords[s] + b.coords[s], shape.coord_modulus_value(s));
    }
    return out;
}

LiftedElement lift(const GroupElement& g) { return LiftedElement{g.coords}; }

GroupElement project(const LiftedElement& l, const PGroupShape& shape) {
    const int m = shape.generator_count();
    if (static_cast<int>(l.coords.size()) != m) {
        throw WrongDimensions("lifted element has wrong coordinate count");
    }
    GroupElement out{std::vector<std::int64_t>(m)};
    for (int s = 0; s < m; ++s) {
        out.coords[s] = mod_canonical(l.coords[s], shape.coord_modulus_value(s));
    }
    return out;
}

ElementEnumerator::ElementEnumerator(const PGroupShape& shape, std::uint64_t cap)
    : shape_(&shape), produced_(0), current_(identity_element(shape)) {
    auto total = shape.order_u64();
    if (!total || *total > cap) {
        throw TooLargeToEnumerate("group order " + shape.order().to_factored() +
                                  " exceeds the enumeration cap " + std::to_string(cap));
    }
    total_ = *total;
}

std::optional<GroupElement> ElementEnumerator::next() {
    if (produced_ == total_) return std::nullopt;
    GroupElement out = current_;
    ++produced_;
    // Odometer increment, last coordinate fastest.
    for (int s = shape_->generator_count() - 1; s >= 0; --s) {
        if (++current_.coords[s] < shape_->coord_modulus_value(s)) break;
        current_.coords[s] = 0;
    }
    return out;
}

void ElementEnumerator::reset() {
    produced_ = 0;
    current_ = identity_element(*shape_);
}

std::uint64_t element_index(const PGroupShape& shape, const GroupElement& g) {
    if (!shape.order_u64()) {
        throw TooLargeToEnumerate("group order exceeds 64 bits; no dense indexing");
    }
    std::uint64_t idx = 0;
    for (int s = 0; s < shape.generator_count(); ++s) {
        idx = idx * static_cast<std::uint64_t>(shape.coord_modulus_value(s)) +
              static_cast<std::uint64_t>(g.coords[s]);
    }
    return idx;
}

GroupElement element_at(const PGroupShape& shape, std::uint64_t index) {
    if (!shape.order_u64()) {
        throw TooLargeToEnumerate("group order exceeds 64 bits; no dense indexing");
    }
    const int m = shape.generator_count();
    GroupElement out{std::vector<std::int64_t>(m)};
    for (int s = m - 1; s >= 0; --s) {
        auto radix = static_cast<std::uint64_t>(shape.coord_modulus_value(s));
        out.coords[s] = static_cast<std::int64_t>(index % radix);
        index /= radix;
    }
    return out;
}

}  // namespace tgc
