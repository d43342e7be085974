#include "support.hpp"

#include "tropibound/regular_subdivision.hpp"
#include "tropibound/tropical_intersection.hpp"

#include <doctest.h>

using namespace tb_test;

namespace {

using Point = std::pair<std::int64_t, std::int64_t>;

std::int64_t cross(Point o, Point a, Point b)
{
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// Twice the area of the convex hull (monotone chain).
std::int64_t hull_area2(std::vector<Point> pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) {
        return 0;
    }
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) {
            --k;
        }
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) {
            --k;
        }
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    std::int64_t area = 0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& p = hull[i];
        const auto& q = hull[(i + 1) % hull.size()];
        area += p.first * q.second - q.first * p.second;
    }
    return area < 0 ? -area : area;
}

Rational simplex_volume(const IntMatrix& a, const Cell& cell)
{
    const std::size_t n = a.rows();
    RationalMatrix m(n + 1, n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        m(0, k) = 1;
        for (std::size_t i = 0; i < n; ++i) {
            m(i + 1, k) = static_cast<long>(a(i, cell.members[k]));
        }
    }
    const Rational d = det(m);
    return d < 0 ? Rational(-d) : d;
}

// Strictly positive kernel vector by direct kernel computation.
bool kernel_positive(const RationalMatrix& n, const Cell& cell)
{
    const auto k = kernel_basis(n.select_columns(cell.members));
    if (k.rows() != 1) {
        return false;
    }
    const auto row = k.row(0);
    const bool all_pos = std::all_of(row.begin(), row.end(), [](const Rational& x) { return x > 0; });
    const bool all_neg = std::all_of(row.begin(), row.end(), [](const Rational& x) { return x < 0; });
    return all_pos || all_neg;
}

// Every subset S spanning R^n affinely is a cell iff some v gives equality on
// S and strict inequality off S.
std::vector<std::vector<std::size_t>> brute_force_cells(const IntMatrix& a, std::span<const Rational> h)
{
    const std::size_t n = a.rows();
    const std::size_t r = a.cols();
    std::vector<std::vector<std::size_t>> out;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << r); ++bits) {
        const auto s = IndexSet(bits).to_vector();
        if (s.size() < n + 1) {
            continue;
        }
        RationalMatrix sys(s.size(), n + 1);
        RationalVector rhs(s.size());
        for (std::size_t row = 0; row < s.size(); ++row) {
            for (std::size_t c = 0; c < n; ++c) {
                sys(row, c) = static_cast<long>(a(c, s[row]));
            }
            sys(row, n) = -1;
            rhs[row] = -h[s[row]];
        }
        if (rank(sys) != n + 1) {
            continue;
        }
        const auto sol = solve_affine(sys, rhs);
        if (!sol) {
            continue;
        }
        const Rational& level = sol->particular[n];
        bool strict = true;
        for (std::size_t j = 0; j < r && strict; ++j) {
            if (std::find(s.begin(), s.end(), j) != s.end()) {
                continue;
            }
            Rational value = h[j];
            for (std::size_t c = 0; c < n; ++c) {
                value += Rational(static_cast<long>(a(c, j))) * sol->particular[c];
            }
            strict = value > level;
        }
        if (strict) {
            out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("flat lift gives a single cell")
{
    const auto cells = full_cells(running_a(), rv({0, 0, 0, 0, 0}));
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].members == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK(cells[0].witness == rv({0, 0}));
    CHECK_FALSE(is_triangulation(cells, 2));
}

TEST_CASE("property: cells match the brute-force subset oracle")
{
    Gen gen(505);
    for (int trial = 0; trial < 80; ++trial) {
        const auto n = static_cast<std::size_t>(gen.uniform(1, 2));
        const auto r = static_cast<std::size_t>(gen.uniform(static_cast<long>(n) + 1, 7));
        const auto a = gen.exponent_matrix(n, r, 0, n == 1 ? 9 : 3);
        const auto h = gen.coin() ? gen.rational_vector(r, 2, 1) : gen.rational_vector(r, 20, 7);
        std::vector<std::vector<std::size_t>> got;
        for (const auto& c : full_cells(a, h)) {
            got.push_back(c.members);
        }
        CHECK(got == brute_force_cells(a, h));
    }
}

TEST_CASE("running example subdivision")
{
    const auto cells = full_cells(running_a(), running_h());
    REQUIRE(cells.size() == 4);
    CHECK(cells[0].members == std::vector<std::size_t>{0, 1, 4});
    CHECK(cells[1].members == std::vector<std::size_t>{0, 2, 4});
    CHECK(cells[2].members == std::vector<std::size_t>{1, 3, 4});
    CHECK(cells[3].members == std::vector<std::size_t>{2, 3, 4});
    CHECK(cells[1].witness == rv({1, 0}));
    CHECK(is_triangulation(cells, 2));
    CHECK(argmin_set(running_a(), running_h(), rv({1, 0})) == std::vector<std::size_t>{0, 2, 4});
    CHECK(witness_normal(cells[1]) == rv({1, 0}));
}

TEST_CASE("running example decorated simplex")
{
    const auto d = decorated_count(running_n(), running_a(), running_h());
    REQUIRE(d.count == 1);
    const auto& s = d.simplices.front();
    CHECK(s.cell.members == std::vector<std::size_t>{0, 2, 4});
    const auto& k = s.kernel_vector;
    REQUIRE(k.size() == 3);
    CHECK(k[0] > 0);
    CHECK(k[1] == k[0]);
    CHECK(k[2] == 2 * k[0]);
    CHECK(decorated_to_tropical(s, running_a()) == rv({0, 2, 0, 2, 1}));
    const auto report = lower_bound(running_n(), running_a(), running_h());
    CHECK(decorated_to_tropical(s, running_a(), report) == rv({0, 2, 0, 2, 1}));
    CHECK(d.count < report.count);
}

TEST_CASE("cofactor kernel")
{
    const RationalMatrix m{{1, 2, 3}, {4, 5, 6}};
    const auto k = cofactor_kernel(m);
    CHECK(k == rv({-3, 6, -3}));
    CHECK(multiply(m, k) == rv({0, 0}));
}

TEST_CASE("repeated columns are rejected")
{
    const IntMatrix a{{0, 1, 1}};
    CHECK_FALSE(has_distinct_columns(a));
    CHECK_THROWS_AS(require_distinct_columns(a), std::invalid_argument);
    CHECK_THROWS_AS(full_cells(a, rv({0, 0, 0})), std::invalid_argument);
}

TEST_CASE("property: cofactor kernel annihilates random matrices")
{
    Gen gen(501);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(gen.uniform(1, 4));
        const auto m = gen.int_valued_matrix(n, n + 1, 5);
        const auto k = cofactor_kernel(m);
        CHECK(multiply(m, k) == RationalVector(n));
        const bool nonzero = std::any_of(k.begin(), k.end(), [](const Rational& x) { return x != 0; });
        CHECK(nonzero == (rank(m) == n));
    }
}

TEST_CASE("property: triangulations cover the convex hull")
{
    Gen gen(502);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const auto n = static_cast<std::size_t>(gen.uniform(1, 2));
        const auto r = static_cast<std::size_t>(gen.uniform(static_cast<long>(n) + 1, 7));
        const auto a = gen.exponent_matrix(n, r, 0, n == 1 ? 9 : 4);
        const auto h = gen.rational_vector(r, 20, 7);
        const auto cells = full_cells(a, h);
        CHECK(full_cells(a, h, Exec::Serial) == cells);
        if (!is_triangulation(cells, n)) {
            continue;
        }
        ++checked;
        Rational total = 0;
        for (const auto& c : cells) {
            total += simplex_volume(a, c);
            CHECK(argmin_set(a, h, c.witness) == c.members);
        }
        if (n == 1) {
            const auto [lo, hi] = std::minmax_element(a.row(0).begin(), a.row(0).end());
            CHECK(total == Rational(static_cast<long>(*hi - *lo)));
        } else {
            std::vector<Point> pts;
            for (std::size_t j = 0; j < r; ++j) {
                pts.emplace_back(a(0, j), a(1, j));
            }
            CHECK(total == Rational(static_cast<long>(hull_area2(pts))));
        }
    }
    CHECK(checked > 60);
}

TEST_CASE("property: lifts differing by an affine function give the same cells")
{
    Gen gen(503);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::size_t>(gen.uniform(1, 2));
        const auto r = static_cast<std::size_t>(gen.uniform(static_cast<long>(n) + 1, 6));
        const auto a = gen.exponent_matrix(n, r, 0, n == 1 ? 9 : 3);
        const auto h = gen.rational_vector(r, 10, 5);
        const auto u = gen.rational_vector(n, 5, 3);
        const Rational shift = gen.rational(5, 3);
        RationalVector h2 = h;
        for (std::size_t j = 0; j < r; ++j) {
            h2[j] += shift;
            for (std::size_t i = 0; i < n; ++i) {
                h2[j] += Rational(static_cast<long>(a(i, j))) * u[i];
            }
        }
        const auto cells = full_cells(a, h);
        const auto moved = full_cells(a, h2);
        REQUIRE(moved.size() == cells.size());
        for (std::size_t k = 0; k < cells.size(); ++k) {
            CHECK(moved[k].members == cells[k].members);
            RationalVector expected = cells[k].witness;
            for (std::size_t i = 0; i < n; ++i) {
                expected[i] -= u[i];
            }
            CHECK(moved[k].witness == expected);
        }
    }
}

TEST_CASE("property: decoration agrees with a direct kernel computation")
{
    Gen gen(504);
    for (int trial = 0; trial < 80; ++trial) {
        const auto n = static_cast<std::size_t>(gen.uniform(1, 3));
        const auto r = static_cast<std::size_t>(gen.uniform(static_cast<long>(n) + 2, 7));
        const auto c = gen.coefficient_matrix(n, r, 3);
        const auto a = gen.exponent_matrix(n, r, 0, n == 1 ? 8 : 3);
        const auto h = gen.rational_vector(r, 6, 4);
        const auto cells = full_cells(a, h);
        std::size_t expected = 0;
        for (const auto& cell : cells) {
            const bool direct = kernel_positive(c, cell);
            const auto d = positively_decorated(c, cell);
            CHECK(d.has_value() == direct);
            if (d) {
                ++expected;
                CHECK(multiply(c.select_columns(cell.members), d->kernel_vector) == RationalVector(n));
            }
        }
        CHECK(decorated_count(c, a, h).count == expected);
    }
}

TEST_CASE("an all-positive coefficient row decorates nothing")
{
    const RationalMatrix n{{1, 1, 1}};
    const IntMatrix a{{0, 1, 2}};
    CHECK(decorated_count(n, a, rv({0, -1, 0})).count == 0);
    CHECK(decorated_count(n, a, rv({0, 1, 0})).count == 0);
}
