#include "tropibound/tropical_intersection.hpp"

#include "tropibound/tie_vertices.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tropibound {

namespace {

struct LexLess {
    bool operator()(const RationalVector& x, const RationalVector& y) const { return lex_less(x, y); }
};

// Visits every k-subset of {0..n-1} as an increasing index vector.
template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f)
{
    if (k > n) {
        return;
    }
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

RationalVector image(const IntMatrix& a, std::span<const Rational> v)
{
    RationalVector w(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t c = 0; c < a.rows(); ++c) {
            if (a(c, j) != 0) {
                w[j] += Rational(static_cast<long>(a(c, j))) * v[c];
            }
        }
    }
    return w;
}

RationalVector shifted(const RationalVector& w, std::span<const Rational> h)
{
    RationalVector z = w;
    for (std::size_t j = 0; j < z.size(); ++j) {
        z[j] += h[j];
    }
    return z;
}

// Row (alpha_j - alpha_k) with right-hand side h_k - h_j.
void push_tie(std::vector<RationalVector>& rows, RationalVector& rhs, const IntMatrix& a,
              std::span<const Rational> h, std::size_t j, std::size_t k)
{
    RationalVector row(a.rows());
    for (std::size_t c = 0; c < a.rows(); ++c) {
        row[c] = static_cast<long>(a(c, j) - a(c, k));
    }
    rows.push_back(std::move(row));
    rhs.push_back(h.empty() ? Rational(0) : Rational(h[k] - h[j]));
}

RationalMatrix as_matrix(const std::vector<RationalVector>& rows, std::size_t cols)
{
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t c = 0; c < cols; ++c) {
            m(i, c) = rows[i][c];
        }
    }
    return m;
}

struct ConeHit {
    RationalVector v;
    bool interior = false;
};

struct ConeResult {
    std::vector<ConeHit> hits;
    bool degenerate = false;
};

ConeResult solve_cone(const FlagCone& cone, const OrientedMatroid& m, const IntMatrix& a,
                      std::span<const Rational> h)
{
    std::vector<IndexSet> blocks;
    for (const auto& chain : cone.blocks()) {
        blocks.insert(blocks.end(), chain.begin(), chain.end());
    }
    std::vector<RationalVector> rows;
    RationalVector rhs;
    for (auto b : blocks) {
        const std::size_t rep = b.first();
        (b - IndexSet::of({rep})).for_each([&](std::size_t j) { push_tie(rows, rhs, a, h, rep, j); });
    }

    ConeResult out;
    auto accept = [&](const RationalVector& v) -> int {
        const auto z = shifted(image(a, v), h);
        if (!cone_contains(cone, z) || !is_positive_member(z, m)) {
            return 0;
        }
        return cone_relative_interior(cone, z) ? 2 : 1;
    };

    const auto base = solve_affine(as_matrix(rows, a.rows()), rhs);
    if (!base) {
        return out;
    }
    const std::size_t k = base->kernel.rows();
    if (k == 0) {
        if (const int where = accept(base->particular); where > 0) {
            out.hits.push_back({base->particular, where == 2});
        }
        return out;
    }

    // Underdetermined: the vertices of the piece are pinned by k extra ties
    // between blocks.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < blocks.size(); ++x) {
        for (std::size_t y = x + 1; y < blocks.size(); ++y) {
            pairs.emplace_back(blocks[x].first(), blocks[y].first());
        }
    }
    std::set<RationalVector, LexLess> seen;
    for_each_combination(pairs.size(), k, [&](const std::vector<std::size_t>& pick) {
        auto r2 = rows;
        auto b2 = rhs;
        for (auto p : pick) {
            push_tie(r2, b2, a, h, pairs[p].first, pairs[p].second);
        }
        const auto sol = solve_affine(as_matrix(r2, a.rows()), b2);
        if (!sol || sol->kernel.rows() != 0 || seen.count(sol->particular) != 0) {
            return;
        }
        seen.insert(sol->particular);
        if (accept(sol->particular) > 0) {
            out.hits.push_back({sol->particular, false});
        }
    });
    out.degenerate = !out.hits.empty();
    return out;
}

// Is {u : e u = 0, g u >= 0} different from {0}?
bool cone_nontrivial(const std::vector<RationalVector>& e, const std::vector<RationalVector>& g, std::size_t n)
{
    const RationalMatrix kb = e.empty() ? RationalMatrix::identity(n) : kernel_basis(as_matrix(e, n));
    const std::size_t k = kb.rows();
    if (k == 0) {
        return false;
    }
    if (g.empty()) {
        return true;
    }
    RationalMatrix gk(g.size(), k);
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t t = 0; t < k; ++t) {
            for (std::size_t c = 0; c < n; ++c) {
                gk(i, t) += g[i][c] * kb(t, c);
            }
        }
    }
    if (rank(gk) < k) {
        return true;
    }
    // Pointed cone in y-space: nonzero iff some extreme ray exists, and
    // every extreme ray is cut out by k-1 independent active rows.
    bool found = false;
    for_each_combination(g.size(), k - 1, [&](const std::vector<std::size_t>& pick) {
        if (found) {
            return;
        }
        RationalVector ray;
        if (k == 1) {
            ray = {Rational(1)};
        } else {
            const RationalMatrix ker = kernel_basis(gk.select_rows(pick));
            if (ker.rows() != 1) {
                return;
            }
            ray.assign(ker.row(0).begin(), ker.row(0).end());
        }
        bool pos = true;
        bool neg = true;
        for (std::size_t i = 0; i < g.size(); ++i) {
            Rational s = 0;
            for (std::size_t t = 0; t < k; ++t) {
                s += gk(i, t) * ray[t];
            }
            pos = pos && s >= 0;
            neg = neg && s <= 0;
        }
        found = pos || neg;
    });
    return found;
}

}  // namespace

InputDiagnostics validate_inputs(const RationalMatrix& c, const IntMatrix& a, std::span<const Rational> h)
{
    if (c.cols() != a.cols() || a.cols() != h.size()) {
        throw std::invalid_argument("validate_inputs: cols(C), cols(A) and length(h) must agree");
    }
    if (a.rows() == 0) {
        throw std::invalid_argument("validate_inputs: exponent matrix has no rows");
    }
    InputDiagnostics d;
    d.n = a.rows();
    const RationalMatrix ar = to_rational(a);
    d.rank_a = rank(ar);
    if (d.rank_a < a.rows()) {
        throw std::invalid_argument("validate_inputs: rank(A) = " + std::to_string(d.rank_a) + " < rows(A) = " +
                                    std::to_string(a.rows()) + "; v -> A^T v is not injective");
    }
    d.rank_c = rank(c);
    d.rank_c_matches = d.rank_c == d.n;
    if (!d.rank_c_matches) {
        d.notes.push_back("rank(C) = " + std::to_string(d.rank_c) + " differs from n = " + std::to_string(d.n));
    }
    RationalMatrix with_ones(a.rows() + 1, a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            with_ones(i, j) = ar(i, j);
        }
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
        with_ones(a.rows(), j) = 1;
    }
    d.ones_in_rowspan = rank(with_ones) == d.rank_a;
    if (d.ones_in_rowspan) {
        d.notes.push_back("all-ones vector lies in rowspan(A): solutions come in lines");
    }
    return d;
}

bool lineality_ok(const OrientedMatroid& m, const IntMatrix& a)
{
    const auto comps = m.components();
    RationalMatrix stacked(a.rows() + comps.size(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            stacked(i, j) = static_cast<long>(a(i, j));
        }
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
        comps[c].for_each([&](std::size_t j) { stacked(a.rows() + c, j) = 1; });
    }
    return rank(stacked) == rank(to_rational(a)) + comps.size();
}

IntersectionReport intersect_via_fan(const OrientedMatroid& m, const IntMatrix& a, std::span<const Rational> h,
                                     Exec exec)
{
    return intersect_via_fan(m, positive_fan(m, exec), a, h, exec);
}

IntersectionReport intersect_via_fan(const OrientedMatroid& m, const PositiveFan& fan, const IntMatrix& a,
                                     std::span<const Rational> h, Exec exec)
{
    if (a.cols() != m.ground_size() || h.size() != m.ground_size()) {
        throw std::invalid_argument("intersect_via_fan: A, h and the matroid disagree on the ground size");
    }
    const auto results = parallel_map(
        fan.cones.size(), [&](std::size_t i) { return solve_cone(fan.cones[i], m, a, h); }, exec);

    IntersectionReport report;
    report.lineality_ok = lineality_ok(m, a);
    struct Seen {
        std::size_t cone;
        bool interior;
    };
    std::map<RationalVector, Seen, LexLess> merged;
    for (std::size_t i = 0; i < results.size(); ++i) {
        report.degenerate_cone = report.degenerate_cone || results[i].degenerate;
        for (const auto& hit : results[i].hits) {
            auto [it, fresh] = merged.try_emplace(hit.v, Seen{i, hit.interior});
            if (!fresh && hit.interior && !it->second.interior) {
                it->second = Seen{i, true};
            }
        }
    }
    for (const auto& [v, seen] : merged) {
        IntersectionPoint p;
        p.v = v;
        p.w = image(a, v);
        p.cone = fan.cones[seen.cone];
        p.interior = locally_linear(fan, shifted(p.w, h));
        report.points.push_back(std::move(p));
    }
    const auto isolated = parallel_map(
        report.points.size(),
        [&](std::size_t i) -> unsigned char { return is_isolated(report.points[i].v, fan, a, h) ? 1 : 0; }, exec);
    bool all_good = true;
    for (std::size_t i = 0; i < report.points.size(); ++i) {
        report.points[i].isolated = isolated[i] != 0;
        all_good = all_good && report.points[i].isolated && report.points[i].interior;
    }
    report.count = report.points.size();
    report.transverse = all_good && report.lineality_ok && !report.degenerate_cone;
    if (!report.lineality_ok) {
        report.notes.push_back("rowspan(A) meets the lineality space of the fan");
    }
    if (report.degenerate_cone) {
        report.notes.push_back("a positive cone has an underdetermined block system");
    }
    if (fan.free) {
        report.notes.push_back("no circuits: the positive fan is the whole space");
    } else if (fan.cones.empty()) {
        report.notes.push_back("the positive fan is empty");
    }
    return report;
}

IntersectionReport intersect_via_vertices(const OrientedMatroid& m, const IntMatrix& a,
                                          std::span<const Rational> h, Exec exec)
{
    IntersectionReport report;
    for (auto& v : positive_tie_vertices(m, a, h, exec)) {
        IntersectionPoint p;
        p.w = image(a, v);
        p.v = std::move(v);
        report.points.push_back(std::move(p));
    }
    report.count = report.points.size();
    report.lineality_ok = lineality_ok(m, a);
    report.notes.push_back("vertex oracle: transversality not assessed");
    return report;
}

bool is_isolated(const IntersectionPoint& p, const OrientedMatroid& m, const IntMatrix& a,
                 std::span<const Rational> h)
{
    return is_isolated(p.v, positive_fan(m), a, h);
}

bool is_isolated(std::span<const Rational> v, const PositiveFan& fan, const IntMatrix& a,
                 std::span<const Rational> h)
{
    const std::size_t n = a.rows();
    const auto z = shifted(image(a, v), h);
    for (const auto& cone : fan.cones) {
        if (!cone_contains(cone, z)) {
            continue;
        }
        // Directions u with A^T u constant on blocks and not reversing the
        // order of blocks that are tied at z.
        std::vector<RationalVector> eq;
        std::vector<RationalVector> ge;
        RationalVector unused;
        for (const auto& chain : cone.blocks()) {
            for (std::size_t b = 0; b < chain.size(); ++b) {
                const std::size_t rep = chain[b].first();
                (chain[b] - IndexSet::of({rep})).for_each([&](std::size_t j) { push_tie(eq, unused, a, {}, rep, j); });
                if (b + 1 < chain.size()) {
                    const std::size_t nxt = chain[b + 1].first();
                    if (z[rep] == z[nxt]) {
                        push_tie(ge, unused, a, {}, rep, nxt);
                    }
                }
            }
        }
        if (cone_nontrivial(eq, ge, n)) {
            return false;
        }
    }
    return true;
}

IntersectionReport lower_bound(const RationalMatrix& c, const IntMatrix& a, std::span<const Rational> h,
                               const LowerBoundOptions& options)
{
    const auto diag = validate_inputs(c, a, h);
    const auto m = realize_from_kernel(c, options.exec);
    const auto fan = positive_fan(m, options.exec);
    auto report = intersect_via_fan(m, fan, a, h, options.exec);
    report.notes.insert(report.notes.begin(), diag.notes.begin(), diag.notes.end());
    if (!diag.ok()) {
        report.transverse = false;
    }
    if (options.debug_oracle) {
        const auto oracle = intersect_via_vertices(m, a, h, options.exec);
        if (point_set(oracle) != point_set(report)) {
            throw std::logic_error("lower_bound: fan enumeration and vertex oracle disagree (" +
                                   std::to_string(report.count) + " vs " + std::to_string(oracle.count) + " points)");
        }
        report.notes.push_back("vertex oracle agrees");
    }
    if (!report.transverse) {
        report.notes.push_back("count computed, transversality not certified");
    }
    return report;
}

std::vector<RationalVector> point_set(const IntersectionReport& report)
{
    std::vector<RationalVector> out;
    for (const auto& p : report.points) {
        out.push_back(p.v);
    }
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

}  // namespace tropibound
