#pragma once

// Vertices of the tie arrangement of a vertically parametrized system: the
// hyperplanes { v : (A^T v + h)_j = (A^T v + h)_k } for all pairs j < k.
//
// A vertex is found exactly once, through its tie pattern (the partition of
// the ground set by equal values of A^T v + h). Partitions are explored
// depth-first in restricted-growth order with an incremental fraction-free
// echelon form, and a branch stops as soon as its ties pin v down.

#include "tropibound/bergman_fan.hpp"
#include "tropibound/exact_arith.hpp"
#include "tropibound/oriented_matroid.hpp"
#include "tropibound/parallel.hpp"

#include <span>
#include <vector>

namespace tropibound {

/// Vertices v of the tie arrangement with A^T v + h in the positive Bergman
/// fan of m, sorted lexicographically. Works in 64-bit integers and falls
/// back to GMP integers on overflow.
std::vector<RationalVector> positive_tie_vertices(const OrientedMatroid& m, const IntMatrix& a,
                                                  std::span<const Rational> h, Exec exec = Exec::Parallel);

/// Same enumeration forced onto GMP integers (test hook for the fallback).
std::vector<RationalVector> positive_tie_vertices_bignum(const OrientedMatroid& m, const IntMatrix& a,
                                                         std::span<const Rational> h, Exec exec = Exec::Parallel);

}  // namespace tropibound
