#include "tropibound/oriented_matroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tropibound {

namespace {

void sort_unique(std::vector<SignedCircuit>& cs)
{
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
}

std::vector<SignedCircuit> with_negations(std::vector<SignedCircuit> cs)
{
    const std::size_t n = cs.size();
    for (std::size_t i = 0; i < n; ++i) {
        cs.push_back(cs[i].negated());
    }
    sort_unique(cs);
    return cs;
}

void check_ground(std::size_t n)
{
    if (n > kMaxGroundSize) {
        throw std::invalid_argument("ground set larger than 64 elements is not supported");
    }
}

}  // namespace

std::vector<IndexSet> k_subsets(std::size_t n, std::size_t k)
{
    std::vector<IndexSet> out;
    if (k > n) {
        return out;
    }
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    // Gosper's hack over n-bit masks.
    const std::uint64_t limit = n >= 64 ? 0 : (std::uint64_t{1} << n);
    std::uint64_t s = (k >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    while (true) {
        out.emplace_back(s);
        const std::uint64_t c = s & (~s + 1);
        const std::uint64_t r = s + c;
        if (r == 0) {
            break;
        }
        s = (((r ^ s) >> 2) / c) | r;
        if (limit != 0 && s >= limit) {
            break;
        }
    }
    return out;
}

SignedCircuit sign_pattern(std::span<const Rational> x)
{
    SignedCircuit c;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const int s = sgn(x[i]);
        if (s > 0) {
            c.positive.insert(i);
        } else if (s < 0) {
            c.negative.insert(i);
        }
    }
    return c;
}

OrientedMatroid OrientedMatroid::from_circuits(std::size_t ground_size, std::vector<SignedCircuit> circuits,
                                               std::optional<RationalMatrix> realization)
{
    check_ground(ground_size);
    const IndexSet ground = IndexSet::full(ground_size);
    for (const auto& c : circuits) {
        if (c.positive.intersects(c.negative)) {
            throw std::invalid_argument("circuit with overlapping positive and negative parts");
        }
        if (c.support().empty()) {
            throw std::invalid_argument("circuit with empty support");
        }
        if (!c.support().subset_of(ground)) {
            throw std::invalid_argument("circuit index outside the ground set");
        }
    }
    OrientedMatroid m;
    m.ground_size_ = ground_size;
    m.circuits_ = with_negations(std::move(circuits));
    for (const auto& c : m.circuits_) {
        m.supports_.push_back(c.support());
    }
    std::sort(m.supports_.begin(), m.supports_.end());
    m.supports_.erase(std::unique(m.supports_.begin(), m.supports_.end()), m.supports_.end());
    for (std::size_t i = 0; i < m.supports_.size(); ++i) {
        for (std::size_t j = 0; j < m.supports_.size(); ++j) {
            if (i != j && m.supports_[i].subset_of(m.supports_[j])) {
                throw std::invalid_argument("circuit supports are not inclusion-incomparable");
            }
        }
    }
    m.realization_ = std::move(realization);
    return m;
}

bool OrientedMatroid::independent(IndexSet s) const
{
    return std::none_of(supports_.begin(), supports_.end(), [&](IndexSet c) { return c.subset_of(s); });
}

std::size_t OrientedMatroid::rank(IndexSet s) const
{
    IndexSet basis;
    s.for_each([&](std::size_t e) {
        IndexSet t = basis;
        t.insert(e);
        if (independent(t)) {
            basis = t;
        }
    });
    return basis.size();
}

bool OrientedMatroid::has_loops() const
{
    return std::any_of(supports_.begin(), supports_.end(), [](IndexSet c) { return c.size() == 1; });
}

std::vector<IndexSet> OrientedMatroid::components() const
{
    std::vector<std::size_t> parent(ground_size_);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    for (auto c : supports_) {
        const std::size_t root = find(c.first());
        c.for_each([&](std::size_t e) { parent[find(e)] = root; });
    }
    std::vector<IndexSet> comps;
    std::vector<std::size_t> slot(ground_size_, ground_size_);
    for (std::size_t e = 0; e < ground_size_; ++e) {
        const std::size_t root = find(e);
        if (slot[root] == ground_size_) {
            slot[root] = comps.size();
            comps.emplace_back();
        }
        comps[slot[root]].insert(e);
    }
    return comps;
}

OrientedMatroid realize_from_kernel(const RationalMatrix& c, Exec exec)
{
    if (c.rows() == 0 || c.cols() == 0) {
        throw std::invalid_argument("realize_from_kernel: coefficient matrix has no rows or no columns");
    }
    check_ground(c.cols());
    const auto [reduced, pivots] = rref(c);
    const std::size_t k = pivots.size();
    std::vector<std::size_t> top(k);
    std::iota(top.begin(), top.end(), std::size_t{0});
    const RationalMatrix basis = reduced.select_rows(top);

    std::vector<SignedCircuit> circuits;
    if (k > 0) {
        // A vector of rowspan(c) vanishing on a column set S of rank k-1 is
        // unique up to scale and has minimal support.
        const auto subsets = k_subsets(c.cols(), k - 1);
        auto found = parallel_map(
            subsets.size(),
            [&](std::size_t i) -> std::optional<SignedCircuit> {
                const auto cols = subsets[i].to_vector();
                const RationalMatrix sub = basis.select_columns(cols);
                const RationalMatrix left = kernel_basis(sub.transpose());
                if (left.rows() != 1) {
                    return std::nullopt;
                }
                RationalVector x(c.cols());
                for (std::size_t j = 0; j < c.cols(); ++j) {
                    for (std::size_t r = 0; r < k; ++r) {
                        x[j] += left(0, r) * basis(r, j);
                    }
                }
                return sign_pattern(x);
            },
            exec);
        for (auto& f : found) {
            if (f) {
                circuits.push_back(*f);
            }
        }
    }
    return OrientedMatroid::from_circuits(c.cols(), std::move(circuits), kernel_basis(c));
}

std::vector<SignedCircuit> circuits_via_subsets(const RationalMatrix& g, Exec exec)
{
    check_ground(g.cols());
    const std::size_t d = rank(g);
    std::vector<IndexSet> candidates;
    for (std::size_t s = 1; s <= std::min(d + 1, g.cols()); ++s) {
        auto level = k_subsets(g.cols(), s);
        candidates.insert(candidates.end(), level.begin(), level.end());
    }
    auto found = parallel_map(
        candidates.size(),
        [&](std::size_t i) -> std::optional<SignedCircuit> {
            const auto cols = candidates[i].to_vector();
            const RationalMatrix rel = kernel_basis(g.select_columns(cols));
            if (rel.rows() != 1) {
                return std::nullopt;
            }
            RationalVector x(g.cols());
            for (std::size_t t = 0; t < cols.size(); ++t) {
                if (rel(0, t) == 0) {
                    return std::nullopt;  // a proper subset is already dependent
                }
                x[cols[t]] = rel(0, t);
            }
            return sign_pattern(x);
        },
        exec);
    std::vector<SignedCircuit> out;
    for (auto& f : found) {
        if (f) {
            out.push_back(*f);
        }
    }
    return with_negations(std::move(out));
}

SignedCircuit initial_circuit(std::span<const Rational> w, const SignedCircuit& c)
{
    const IndexSet support = c.support();
    const Rational* best = nullptr;
    support.for_each([&](std::size_t i) {
        if (best == nullptr || w[i] < *best) {
            best = &w[i];
        }
    });
    IndexSet argmin;
    support.for_each([&](std::size_t i) {
        if (w[i] == *best) {
            argmin.insert(i);
        }
    });
    return {c.positive & argmin, c.negative & argmin};
}

Flat closure(IndexSet s, const OrientedMatroid& m)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto c : m.supports()) {
            const IndexSet missing = c - s;
            if (missing.size() == 1) {
                s = s | missing;
                changed = true;
            }
        }
    }
    return {s, m.rank(s)};
}

std::vector<Flat> all_flats(const OrientedMatroid& m)
{
    return all_flats(m, m.ground());
}

std::vector<Flat> all_flats(const OrientedMatroid& m, IndexSet within)
{
    std::vector<Flat> out;
    std::vector<Flat> level{closure(IndexSet{}, m)};
    while (!level.empty()) {
        out.insert(out.end(), level.begin(), level.end());
        std::set<IndexSet> next;
        for (const auto& f : level) {
            (within - f.elements).for_each([&](std::size_t e) {
                IndexSet s = f.elements;
                s.insert(e);
                const Flat g = closure(s, m);
                if (g.elements.subset_of(within | out.front().elements)) {
                    next.insert(g.elements);
                }
            });
        }
        level.clear();
        const std::size_t r = out.back().rank + 1;
        for (auto s : next) {
            level.push_back({s, r});
        }
    }
    return out;
}

std::vector<FlagOfFlats> maximal_flags(const OrientedMatroid& m)
{
    return maximal_flags(m, m.ground());
}

std::vector<FlagOfFlats> maximal_flags(const OrientedMatroid& m, IndexSet within)
{
    const auto flats = all_flats(m, within);
    const std::size_t top = m.rank(within);
    std::vector<std::vector<Flat>> by_rank(top + 1);
    for (const auto& f : flats) {
        if (f.rank <= top) {
            by_rank[f.rank].push_back(f);
        }
    }
    std::vector<FlagOfFlats> out;
    if (top <= 1) {
        out.push_back({});
        return out;
    }
    std::vector<Flat> chain;
    auto extend = [&](auto&& self, std::size_t r) -> void {
        if (r == top) {
            out.push_back({chain});
            return;
        }
        for (const auto& f : by_rank[r]) {
            if (chain.empty() || chain.back().elements.subset_of(f.elements)) {
                chain.push_back(f);
                self(self, r + 1);
                chain.pop_back();
            }
        }
    };
    extend(extend, 1);
    return out;
}

}  // namespace tropibound
