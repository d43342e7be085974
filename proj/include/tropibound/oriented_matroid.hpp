#pragma once

// Oriented matroids realized by linear spaces: signed circuits, closure,
// flats and maximal flags of flats.
//
// Ground sets are stored 0-based as 64-bit masks internally. Everything that
// leaves the library (JSON, CLI text) is 1-based; see io.hpp.

#include "tropibound/exact_arith.hpp"
#include "tropibound/parallel.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace tropibound {

inline constexpr std::size_t kMaxGroundSize = 64;

class IndexSet {
public:
    constexpr IndexSet() = default;
    constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}

    /// From 0-based indices.
    static IndexSet of(std::initializer_list<std::size_t> indices)
    {
        IndexSet s;
        for (auto i : indices) {
            s.insert(i);
        }
        return s;
    }
    static IndexSet of(std::span<const std::size_t> indices)
    {
        IndexSet s;
        for (auto i : indices) {
            s.insert(i);
        }
        return s;
    }
    static constexpr IndexSet full(std::size_t n)
    {
        return IndexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
    constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
    constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(IndexSet other) const { return (bits_ & other.bits_) != 0; }
    /// Smallest member; undefined on the empty set.
    constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

    friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
    friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
    friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(IndexSet, IndexSet) = default;
    friend constexpr auto operator<=>(IndexSet a, IndexSet b) { return a.bits_ <=> b.bits_; }

    template <class F>
    void for_each(F&& f) const
    {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
            f(static_cast<std::size_t>(std::countr_zero(b)));
        }
    }

    std::vector<std::size_t> to_vector() const
    {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

struct SignedCircuit {
    IndexSet positive;
    IndexSet negative;

    IndexSet support() const { return positive | negative; }
    SignedCircuit negated() const { return {negative, positive}; }

    friend bool operator==(const SignedCircuit&, const SignedCircuit&) = default;
    friend auto operator<=>(const SignedCircuit& a, const SignedCircuit& b)
    {
        if (auto c = a.support() <=> b.support(); c != 0) {
            return c;
        }
        return a.positive <=> b.positive;
    }
};

/// Sign pattern of a nonzero vector.
SignedCircuit sign_pattern(std::span<const Rational> x);

class OrientedMatroid {
public:
    /// Expert escape hatch: circuits supplied directly, no realization
    /// checks beyond the structural ones (disjoint parts, nonempty and
    /// pairwise incomparable supports). Negations are added when missing.
    static OrientedMatroid from_circuits(std::size_t ground_size, std::vector<SignedCircuit> circuits,
                                         std::optional<RationalMatrix> realization = std::nullopt);

    std::size_t ground_size() const { return ground_size_; }
    IndexSet ground() const { return IndexSet::full(ground_size_); }
    /// Both orientations of every circuit, sorted.
    const std::vector<SignedCircuit>& circuits() const { return circuits_; }
    /// Distinct circuit supports, sorted.
    const std::vector<IndexSet>& supports() const { return supports_; }
    /// Rows span the realized linear space, when known.
    const std::optional<RationalMatrix>& realization() const { return realization_; }

    bool independent(IndexSet s) const;
    std::size_t rank(IndexSet s) const;
    std::size_t rank() const { return rank(ground()); }
    bool has_loops() const;
    bool is_free() const { return circuits_.empty(); }
    /// Connected components (elements sharing a circuit), ordered by their
    /// smallest element. Coloops and loops are singleton components.
    std::vector<IndexSet> components() const;

private:
    std::size_t ground_size_ = 0;
    std::vector<SignedCircuit> circuits_;
    std::vector<IndexSet> supports_;
    std::optional<RationalMatrix> realization_;
};

/// Oriented matroid of the linear space ker(c). Circuits are the sign
/// vectors of minimal-support nonzero vectors of rowspan(c), found from the
/// (rank-1)-subsets of columns of rref(c) that have rank rank-1. An all-zero
/// matrix yields the free matroid; a matrix without rows or columns throws.
OrientedMatroid realize_from_kernel(const RationalMatrix& c, Exec exec = Exec::Parallel);

/// Signed circuits from the minimal linearly dependent column sets of g
/// (rows of g span the realized space). Both orientations, sorted.
std::vector<SignedCircuit> circuits_via_subsets(const RationalMatrix& g, Exec exec = Exec::Parallel);

/// Restriction of c to the positions where w attains its minimum over the
/// support of c.
SignedCircuit initial_circuit(std::span<const Rational> w, const SignedCircuit& c);

struct Flat {
    IndexSet elements;
    std::size_t rank = 0;

    friend bool operator==(const Flat&, const Flat&) = default;
};

struct FlagOfFlats {
    std::vector<Flat> chain;

    friend bool operator==(const FlagOfFlats&, const FlagOfFlats&) = default;
};

Flat closure(IndexSet s, const OrientedMatroid& m);

/// All flats of m contained in `within` (defaults to the ground set), sorted
/// by rank and then by element mask. Includes closure(empty set) and, when
/// `within` is a union of components, `within` itself.
std::vector<Flat> all_flats(const OrientedMatroid& m);
std::vector<Flat> all_flats(const OrientedMatroid& m, IndexSet within);

/// Chains of flats of ranks 1, ..., rank(within) - 1 inside `within`.
std::vector<FlagOfFlats> maximal_flags(const OrientedMatroid& m);
std::vector<FlagOfFlats> maximal_flags(const OrientedMatroid& m, IndexSet within);

/// Every k-element subset of {0..n-1}, in colexicographic mask order.
std::vector<IndexSet> k_subsets(std::size_t n, std::size_t k);

}  // namespace tropibound
