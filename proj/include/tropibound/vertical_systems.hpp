#pragma once

// Vertically parametrized systems C diag(t^h) x^A = 0, reaction-network
// assembly, and the combined lower-bound report.

#include "tropibound/exact_arith.hpp"
#include "tropibound/regular_subdivision.hpp"
#include "tropibound/tropical_intersection.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropibound {

struct VerticalSystem {
    RationalMatrix c;  // coefficients, m x r
    IntMatrix a;       // exponents, n x r
    RationalVector h;  // shifts, length r

    friend bool operator==(const VerticalSystem&, const VerticalSystem&) = default;
};

/// Shape checks only; rank conditions are reported by validate_inputs.
void check_shapes(const VerticalSystem& s);

struct CRNModel {
    RationalMatrix n_stoich;  // species x reactions
    IntMatrix b;              // reactant matrix, species x reactions
    RationalMatrix w;         // conservation laws, rows span the left kernel of n_stoich
    RationalVector t;         // totals, one per row of w
    RationalVector h;         // rate exponents, one per reaction

    friend bool operator==(const CRNModel&, const CRNModel&) = default;
};

/// C = [[N, 0, 0], [0, W, -T]], A = [B | Id | 0], h_full = (h, 0, ..., 0).
VerticalSystem assemble_crn(const CRNModel& model);

/// First rank(c) linearly independent rows of c (same kernel).
RationalMatrix square_rows(const RationalMatrix& c);

struct BoundReport {
    IntersectionReport tropical;
    std::optional<DecoratedCount> decorated;
    std::size_t certified_bound = 0;
    bool certified = false;
    std::vector<std::string> method_notes;
};

BoundReport bound(const VerticalSystem& system, const LowerBoundOptions& options = {});

}  // namespace tropibound
