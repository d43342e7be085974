#include "tropibound/regular_subdivision.hpp"

#include "tropibound/oriented_matroid.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropibound {

namespace {

Rational lifted_value(const IntMatrix& a, std::span<const Rational> h, std::span<const Rational> v, std::size_t j)
{
    Rational s = h[j];
    for (std::size_t c = 0; c < a.rows(); ++c) {
        if (a(c, j) != 0) {
            s += Rational(static_cast<long>(a(c, j))) * v[c];
        }
    }
    return s;
}

}  // namespace

bool has_distinct_columns(const IntMatrix& a)
{
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t k = j + 1; k < a.cols(); ++k) {
            bool same = true;
            for (std::size_t c = 0; c < a.rows() && same; ++c) {
                same = a(c, j) == a(c, k);
            }
            if (same) {
                return false;
            }
        }
    }
    return true;
}

void require_distinct_columns(const IntMatrix& a)
{
    if (!has_distinct_columns(a)) {
        throw std::invalid_argument("exponent matrix has repeated columns");
    }
}

std::vector<std::size_t> argmin_set(const IntMatrix& a, std::span<const Rational> h, std::span<const Rational> v)
{
    std::vector<std::size_t> out;
    Rational best;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        const Rational s = lifted_value(a, h, v, j);
        if (out.empty() || s < best) {
            best = s;
            out.assign(1, j);
        } else if (s == best) {
            out.push_back(j);
        }
    }
    return out;
}

std::vector<Cell> full_cells(const IntMatrix& a, std::span<const Rational> h, Exec exec)
{
    require_distinct_columns(a);
    if (h.size() != a.cols()) {
        throw std::invalid_argument("full_cells: length(h) differs from cols(A)");
    }
    const std::size_t n = a.rows();
    const auto subsets = k_subsets(a.cols(), n + 1);
    auto found = parallel_map(
        subsets.size(),
        [&](std::size_t i) -> std::optional<Cell> {
            // alpha_j . v - c = -h_j on the subset.
            const auto cols = subsets[i].to_vector();
            RationalMatrix sys(n + 1, n + 1);
            RationalVector rhs(n + 1);
            for (std::size_t row = 0; row <= n; ++row) {
                for (std::size_t c = 0; c < n; ++c) {
                    sys(row, c) = static_cast<long>(a(c, cols[row]));
                }
                sys(row, n) = -1;
                rhs[row] = -h[cols[row]];
            }
            const auto sol = solve_affine(sys, rhs);
            if (!sol || sol->kernel.rows() != 0) {
                return std::nullopt;
            }
            RationalVector v(sol->particular.begin(), sol->particular.begin() + static_cast<long>(n));
            auto members = argmin_set(a, h, v);
            if (!std::includes(members.begin(), members.end(), cols.begin(), cols.end())) {
                return std::nullopt;
            }
            return Cell{std::move(members), std::move(v)};
        },
        exec);
    std::vector<Cell> cells;
    for (auto& f : found) {
        if (f) {
            cells.push_back(std::move(*f));
        }
    }
    std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) { return x.members < y.members; });
    cells.erase(std::unique(cells.begin(), cells.end(),
                            [](const Cell& x, const Cell& y) { return x.members == y.members; }),
                cells.end());
    return cells;
}

RationalVector witness_normal(const Cell& cell)
{
    return cell.witness;
}

bool is_triangulation(const std::vector<Cell>& cells, std::size_t n)
{
    return std::all_of(cells.begin(), cells.end(), [&](const Cell& c) { return c.members.size() == n + 1; });
}

RationalVector cofactor_kernel(const RationalMatrix& m)
{
    if (m.cols() != m.rows() + 1) {
        throw std::invalid_argument("cofactor_kernel: expected an n x (n+1) matrix");
    }
    RationalVector lambda(m.cols());
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < m.cols(); ++k) {
        keep.clear();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j != k) {
                keep.push_back(j);
            }
        }
        const Rational d = det(m.select_columns(keep));
        lambda[k] = (k % 2 == 0) ? d : Rational(-d);
    }
    return lambda;
}

std::optional<DecoratedSimplex> positively_decorated(const RationalMatrix& n, const Cell& cell)
{
    if (cell.members.size() != n.rows() + 1) {
        return std::nullopt;
    }
    auto lambda = cofactor_kernel(n.select_columns(cell.members));
    const int s = sgn(lambda.front());
    if (s == 0 || !std::all_of(lambda.begin(), lambda.end(), [&](const Rational& x) { return sgn(x) == s; })) {
        return std::nullopt;
    }
    if (s < 0) {
        for (auto& x : lambda) {
            x = -x;
        }
    }
    return DecoratedSimplex{cell, std::move(lambda)};
}

DecoratedCount decorated_count(const RationalMatrix& n, const IntMatrix& a, std::span<const Rational> h, Exec exec)
{
    if (n.rows() != a.rows() || n.cols() != a.cols()) {
        throw std::invalid_argument("decorated_count: coefficient matrix must be n x r like the exponent matrix");
    }
    DecoratedCount out;
    for (const auto& cell : full_cells(a, h, exec)) {
        if (auto d = positively_decorated(n, cell)) {
            out.simplices.push_back(std::move(*d));
        }
    }
    out.count = out.simplices.size();
    return out;
}

RationalVector decorated_to_tropical(const DecoratedSimplex& d, const IntMatrix& a)
{
    RationalVector w(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t c = 0; c < a.rows(); ++c) {
            w[j] += Rational(static_cast<long>(a(c, j))) * d.cell.witness[c];
        }
    }
    return w;
}

RationalVector decorated_to_tropical(const DecoratedSimplex& d, const IntMatrix& a, const IntersectionReport& report)
{
    auto w = decorated_to_tropical(d, a);
    const bool hit = std::any_of(report.points.begin(), report.points.end(),
                                 [&](const IntersectionPoint& p) { return p.w == w; });
    if (!hit) {
        throw std::logic_error("decorated simplex maps outside the reported tropical intersection");
    }
    return w;
}

}  // namespace tropibound
