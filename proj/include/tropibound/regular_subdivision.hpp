#pragma once

// Full-dimensional cells of the regular subdivision of the columns of A
// lifted by h, and positively decorated simplices.

#include "tropibound/exact_arith.hpp"
#include "tropibound/parallel.hpp"
#include "tropibound/tropical_intersection.hpp"

#include <optional>
#include <span>
#include <vector>

namespace tropibound {

struct Cell {
    std::vector<std::size_t> members;  // sorted, 0-based column indices
    RationalVector witness;            // v with inner normal (v, 1)

    friend bool operator==(const Cell&, const Cell&) = default;
};

struct DecoratedSimplex {
    Cell cell;
    RationalVector kernel_vector;  // strictly positive, N_cell * kernel_vector = 0

    friend bool operator==(const DecoratedSimplex&, const DecoratedSimplex&) = default;
};

struct DecoratedCount {
    std::size_t count = 0;
    std::vector<DecoratedSimplex> simplices;
};

/// Throws std::invalid_argument when two columns of a coincide.
void require_distinct_columns(const IntMatrix& a);
bool has_distinct_columns(const IntMatrix& a);

/// Full-dimensional cells, sorted lexicographically by member set. Each
/// (n+1)-subset of affinely independent columns gives a candidate normal;
/// the candidate is a cell when the subset lies in the global argmin.
std::vector<Cell> full_cells(const IntMatrix& a, std::span<const Rational> h, Exec exec = Exec::Parallel);

/// Global argmin of (v, 1) . (alpha_j, h_j).
std::vector<std::size_t> argmin_set(const IntMatrix& a, std::span<const Rational> h, std::span<const Rational> v);

RationalVector witness_normal(const Cell& cell);

bool is_triangulation(const std::vector<Cell>& cells, std::size_t n);

/// Signed cofactors of an n x (n+1) matrix: lambda_k = (-1)^k det(m without
/// column k). They span the kernel when m has full rank.
RationalVector cofactor_kernel(const RationalMatrix& m);

std::optional<DecoratedSimplex> positively_decorated(const RationalMatrix& n, const Cell& cell);

/// Decorated (n+1)-member cells; rows(n) must equal rows(a).
DecoratedCount decorated_count(const RationalMatrix& n, const IntMatrix& a, std::span<const Rational> h,
                               Exec exec = Exec::Parallel);

/// A^T v for the witness v of the simplex.
RationalVector decorated_to_tropical(const DecoratedSimplex& d, const IntMatrix& a);

/// Same, and throws std::logic_error unless the image equals the w of a
/// point in `report`.
RationalVector decorated_to_tropical(const DecoratedSimplex& d, const IntMatrix& a, const IntersectionReport& report);

}  // namespace tropibound
