#pragma once

// The finite set (Trop+(ker C) - h) ∩ rowspan(A), parametrized by v with
// w = A^T v, and per-point transversality certification.

#include "tropibound/bergman_fan.hpp"
#include "tropibound/exact_arith.hpp"
#include "tropibound/oriented_matroid.hpp"
#include "tropibound/parallel.hpp"

#include <span>
#include <string>
#include <vector>

namespace tropibound {

struct IntersectionPoint {
    RationalVector v;
    RationalVector w;  // A^T v
    FlagCone cone;     // a positive fine cone containing w + h
    bool isolated = false;
    /// The positive fan is a linear space of full dimension near w + h (see
    /// locally_linear). Points on fine walls inside a maximal cell count.
    bool interior = false;
};

struct IntersectionReport {
    std::vector<IntersectionPoint> points;  // sorted by v
    std::size_t count = 0;
    bool transverse = false;
    bool lineality_ok = false;
    /// Some positive cone has an underdetermined block system and still meets
    /// rowspan(A) - h.
    bool degenerate_cone = false;
    std::vector<std::string> notes;
};

struct InputDiagnostics {
    std::size_t n = 0;  // rows(A)
    std::size_t rank_a = 0;
    std::size_t rank_c = 0;
    bool ones_in_rowspan = false;
    bool rank_c_matches = false;
    std::vector<std::string> notes;

    bool ok() const { return rank_c_matches && !ones_in_rowspan; }
};

/// Throws std::invalid_argument on shape mismatch, an exponent matrix without
/// rows, or rank(A) < rows(A). Softer problems (rank(C) != n, all-ones
/// vector in rowspan(A)) are reported in the diagnostics.
InputDiagnostics validate_inputs(const RationalMatrix& c, const IntMatrix& a, std::span<const Rational> h);

/// rowspan(A) meets the span of the component indicators of m only in 0.
bool lineality_ok(const OrientedMatroid& m, const IntMatrix& a);

/// Fan-span enumeration: vertices of { v : A^T v + h in sigma } over the
/// positive fine cones sigma. Complete for finite intersections; when some
/// cone meets the affine space in a positive-dimensional set, the vertices
/// of that piece are reported and degenerate_cone is set.
IntersectionReport intersect_via_fan(const OrientedMatroid& m, const IntMatrix& a, std::span<const Rational> h,
                                     Exec exec = Exec::Parallel);
IntersectionReport intersect_via_fan(const OrientedMatroid& m, const PositiveFan& fan, const IntMatrix& a,
                                     std::span<const Rational> h, Exec exec = Exec::Parallel);

/// Independent oracle: vertices of the all-pairs tie arrangement that pass
/// positive membership. Points carry no cone and no isolation verdict.
IntersectionReport intersect_via_vertices(const OrientedMatroid& m, const IntMatrix& a,
                                          std::span<const Rational> h, Exec exec = Exec::Parallel);

/// True iff no nonzero direction d keeps A^T (v + eps d) + h inside the
/// positive fan for small eps > 0, decided cone by cone on the star of w + h.
bool is_isolated(const IntersectionPoint& p, const OrientedMatroid& m, const IntMatrix& a,
                 std::span<const Rational> h);
bool is_isolated(std::span<const Rational> v, const PositiveFan& fan, const IntMatrix& a,
                 std::span<const Rational> h);

struct LowerBoundOptions {
    bool debug_oracle = false;  // also run the vertex oracle and require agreement
    Exec exec = Exec::Parallel;
};

/// Validation, realization of ker C, fan-span enumeration and certification.
/// The count is certified only when the report is transverse.
IntersectionReport lower_bound(const RationalMatrix& c, const IntMatrix& a, std::span<const Rational> h,
                               const LowerBoundOptions& options = {});

/// Sorted v-coordinates of a report's points.
std::vector<RationalVector> point_set(const IntersectionReport& report);

}  // namespace tropibound
