#pragma once

// Bergman fan of a matroid in its fine (flags of flats) structure, with the
// min convention, and the positive Bergman fan of an oriented matroid.

#include "tropibound/exact_arith.hpp"
#include "tropibound/oriented_matroid.hpp"
#include "tropibound/parallel.hpp"

#include <span>
#include <vector>

namespace tropibound {

/// Min-convention Bergman membership: over every circuit support the
/// minimum of w is attained at least twice. Works for any totally ordered
/// value type (exact rationals, or scaled integers in the kernels).
template <class T>
bool is_member_values(std::span<const T> w, const OrientedMatroid& m)
{
    for (auto support : m.supports()) {
        const T* best = nullptr;
        int hits = 0;
        support.for_each([&](std::size_t i) {
            if (best == nullptr || w[i] < *best) {
                best = &w[i];
                hits = 1;
            } else if (w[i] == *best) {
                ++hits;
            }
        });
        if (hits < 2) {
            return false;
        }
    }
    return true;
}

/// Positive membership: for every signed circuit the argmin of w over its
/// support meets both the positive and the negative part.
template <class T>
bool is_positive_member_values(std::span<const T> w, const OrientedMatroid& m)
{
    for (const auto& c : m.circuits()) {
        const T* best = nullptr;
        bool pos = false;
        bool neg = false;
        c.support().for_each([&](std::size_t i) {
            if (best == nullptr || w[i] < *best) {
                best = &w[i];
                pos = neg = false;
            }
            if (w[i] == *best) {
                (c.positive.contains(i) ? pos : neg) = true;
            }
        });
        if (!pos || !neg) {
            return false;
        }
    }
    return true;
}

bool is_member(std::span<const Rational> w, const OrientedMatroid& m);
bool is_positive_member(std::span<const Rational> w, const OrientedMatroid& m);

/// A maximal cone of the fine Bergman fan. A connected matroid contributes a
/// single maximal flag; a disconnected one contributes one flag per
/// connected component and the cone is the product of the component cones.
///
/// Cone = { sum lambda_F e_F + sum mu_c 1_{E_c} : lambda >= 0 }, where F runs
/// over the flats of all flags and E_c over the components.
struct FlagCone {
    std::vector<IndexSet> components;
    std::vector<FlagOfFlats> flags;  // flags[c] lives inside components[c]

    std::size_t ground_size = 0;

    std::vector<RationalVector> generators() const;
    std::vector<RationalVector> lineality() const;
    std::size_t dimension() const;

    /// blocks()[c] = F_1, F_2 - F_1, ..., E_c - F_k. Points of the cone are
    /// constant on each block and weakly decreasing along each chain.
    std::vector<std::vector<IndexSet>> blocks() const;

    friend bool operator==(const FlagCone&, const FlagCone&) = default;
};

bool cone_contains(const FlagCone& cone, std::span<const Rational> w);
/// Inside the cone with strictly decreasing block values on every chain.
bool cone_relative_interior(const FlagCone& cone, std::span<const Rational> w);

/// Sum of the indicator vectors of every flat in the cone's flags.
RationalVector sample_relative_interior(const FlagCone& cone);

/// Maximal cones of the fine Bergman fan, in lexicographic flag order.
/// Empty when the matroid has loops (no weight vector passes membership).
std::vector<FlagCone> fine_fan(const OrientedMatroid& m);

struct PositiveFan {
    std::vector<FlagCone> cones;
    bool free = false;  // no circuits: the positive fan is the whole space
};

/// Fine cones whose interior sample passes positive membership.
PositiveFan positive_fan(const OrientedMatroid& m, Exec exec = Exec::Parallel);
PositiveFan positive_fan(const OrientedMatroid& m, const std::vector<FlagCone>& fine, Exec exec = Exec::Parallel);

/// True iff near w the positive fan is a linear space of the fan's
/// dimension, i.e. w lies in the relative interior of a maximal cell of the
/// fan's support. Decided on the fine star of w: all positive cones through w
/// share one block partition and realize every order of the blocks tied at w.
bool locally_linear(const PositiveFan& fan, std::span<const Rational> w);

/// Diagnostic against externally supplied coarse cones given as lists of ray
/// indices: the sample of each cone is the sum of its rays.
struct CoarseConeCheck {
    std::vector<std::size_t> rays;
    RationalVector sample;
    bool member = false;
    bool positive = false;
};
std::vector<CoarseConeCheck> coarse_compare(const std::vector<RationalVector>& rays,
                                            const std::vector<std::vector<std::size_t>>& cones,
                                            const OrientedMatroid& m);

}  // namespace tropibound
