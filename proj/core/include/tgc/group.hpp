#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "tgc/counts.hpp"
#include "tgc/residue.hpp"

namespace tgc {

// One homogeneous layer Z/p^exponent appearing multiplicity times.
struct Block {
    int exponent;
    int multiplicity;

    bool operator==(const Block&) const = default;
};

// Addresses one generator both by (block, position) and by its flat index in
// the generator grid.
struct GeneratorId {
    int block;
    int position;
    int flat;
};

// Coordinates against the block generators; coords[s] lives mod p^{n_block(s)}.
struct GroupElement {
    std::vector<std::int64_t> coords;

    bool operator==(const GroupElement&) const = default;
    auto operator<=>(const GroupElement&) const = default;
};

// Same coordinate list but with every slot widened to Z/p^{n_1}.
struct LiftedElement {
    std::vector<std::int64_t> coords;

    bool operator==(const LiftedElement&) const = default;
    auto operator<=>(const LiftedElement&) const = default;
};

// Validated description of a finite abelian p-group in decreasing-exponent
// block form. Immutable after construction.
class PGroupShape {
public:
    static PGroupShape validate(std::int64_t p, const std::vector<Block>& blocks);

    std::int64_t prime() const { return p_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    int generator_count() const { return static_cast<int>(flat_block_.size()); }

    int top_exponent() const { return blocks_.front().exponent; }
    int block_of(int flat) const { return flat_block_[flat]; }
    int exponent_of(int flat) const { return blocks_[flat_block_[flat]].exponent; }

    // Z/p^{n_block(flat)}, the ring the flat-th coordinate lives in.
    Modulus coord_modulus(int flat) const { return Modulus(p_, exponent_of(flat)); }
    std::int64_t coord_modulus_value(int flat) const { return coord_mod_[flat]; }

    // Z/p^{n_1}, the common ring after lifting.
    Modulus lift_modulus() const { return Modulus(p_, top_exponent()); }

    GeneratorId generator(int flat) const;
    int flat_index(int block, int position) const;

    std::int64_t order_exponent() const { return order_exponent_; }
    Count order() const { return Count::prime_power(p_, order_exponent_); }
    std::optional<std::uint64_t> order_u64() const { return order().as_u64(); }

    bool operator==(const PGroupShape&) const = default;

private:
    PGroupShape() = default;

    std::int64_t p_ = 0;
    std::vector<Block> blocks_;
    std::vector<int> flat_block_;
    std::vector<std::int64_t> coord_mod_;
    std::int64_t order_exponent_ = 0;
};

GroupElement identity_element(const PGroupShape& shape);
bool is_identity(const GroupElement& g);

GroupElement add(const PGroupShape& shape, const GroupElement& a, const GroupElement& b);

// Lifting embeds coordinates unchanged; projection reduces each coordinate
// back to its own modulus.
LiftedElement lift(const GroupElement& g);
GroupElement project(const LiftedElement& l, const PGroupShape& shape);

// Walks the group in lexicographic coordinate order (identity first, last
// coordinate fastest). Construction fails when the order exceeds the cap.
class ElementEnumerator {
public:
    ElementEnumerator(const PGroupShape& shape, std::uint64_t cap);

    std::uint64_t total() const { return total_; }
    std::optional<GroupElement> next();
    void reset();

private:
    const PGroupShape* shape_;
    std::uint64_t total_;
    std::uint64_t produced_;
    GroupElement current_;
};

// Index of an element in the enumeration order, and its inverse. Both require
// the group order to fit in 64 bits.
std::uint64_t element_index(const PGroupShape& shape, const GroupElement& g);
GroupElement element_at(const PGroupShape& shape, std::uint64_t index);

}  // namespace tgc
