#include "tropibound/bergman_fan.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropibound {

namespace {

RationalVector indicator(IndexSet s, std::size_t n)
{
    RationalVector v(n);
    s.for_each([&](std::size_t i) { v[i] = 1; });
    return v;
}

bool constant_on(IndexSet block, std::span<const Rational> w, Rational& value)
{
    const Rational& first = w[block.first()];
    bool ok = true;
    block.for_each([&](std::size_t i) { ok = ok && w[i] == first; });
    value = first;
    return ok;
}

// 0 = outside, 1 = on the boundary, 2 = relative interior.
int locate(const FlagCone& cone, std::span<const Rational> w)
{
    if (w.size() != cone.ground_size) {
        throw std::invalid_argument("weight vector length differs from ground size");
    }
    int where = 2;
    for (const auto& chain : cone.blocks()) {
        Rational prev;
        for (std::size_t b = 0; b < chain.size(); ++b) {
            Rational value;
            if (!constant_on(chain[b], w, value)) {
                return 0;
            }
            if (b > 0) {
                if (value > prev) {
                    return 0;
                }
                if (value == prev) {
                    where = 1;
                }
            }
            prev = value;
        }
    }
    return where;
}

}  // namespace

bool is_member(std::span<const Rational> w, const OrientedMatroid& m)
{
    if (w.size() != m.ground_size()) {
        throw std::invalid_argument("is_member: weight vector length differs from ground size");
    }
    return is_member_values(w, m);
}

bool is_positive_member(std::span<const Rational> w, const OrientedMatroid& m)
{
    if (w.size() != m.ground_size()) {
        throw std::invalid_argument("is_positive_member: weight vector length differs from ground size");
    }
    return is_positive_member_values(w, m);
}

std::vector<RationalVector> FlagCone::generators() const
{
    std::vector<RationalVector> out;
    for (const auto& flag : flags) {
        for (const auto& f : flag.chain) {
            out.push_back(indicator(f.elements, ground_size));
        }
    }
    return out;
}

std::vector<RationalVector> FlagCone::lineality() const
{
    std::vector<RationalVector> out;
    for (auto c : components) {
        out.push_back(indicator(c, ground_size));
    }
    return out;
}

std::size_t FlagCone::dimension() const
{
    std::size_t d = components.size();
    for (const auto& flag : flags) {
        d += flag.chain.size();
    }
    return d;
}

std::vector<std::vector<IndexSet>> FlagCone::blocks() const
{
    std::vector<std::vector<IndexSet>> out;
    for (std::size_t c = 0; c < components.size(); ++c) {
        std::vector<IndexSet> chain;
        IndexSet seen;
        for (const auto& f : flags[c].chain) {
            chain.push_back(f.elements - seen);
            seen = f.elements;
        }
        chain.push_back(components[c] - seen);
        out.push_back(std::move(chain));
    }
    return out;
}

bool cone_contains(const FlagCone& cone, std::span<const Rational> w)
{
    return locate(cone, w) > 0;
}

bool cone_relative_interior(const FlagCone& cone, std::span<const Rational> w)
{
    return locate(cone, w) == 2;
}

RationalVector sample_relative_interior(const FlagCone& cone)
{
    RationalVector w(cone.ground_size);
    for (const auto& g : cone.generators()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            w[i] += g[i];
        }
    }
    return w;
}

std::vector<FlagCone> fine_fan(const OrientedMatroid& m)
{
    std::vector<FlagCone> out;
    if (m.has_loops()) {
        return out;
    }
    const auto comps = m.components();
    std::vector<std::vector<FlagOfFlats>> per;
    for (auto c : comps) {
        per.push_back(maximal_flags(m, c));
    }
    // Cartesian product, first component varying slowest.
    std::vector<std::size_t> idx(comps.size(), 0);
    while (true) {
        FlagCone cone;
        cone.components = comps;
        cone.ground_size = m.ground_size();
        for (std::size_t c = 0; c < comps.size(); ++c) {
            cone.flags.push_back(per[c][idx[c]]);
        }
        out.push_back(std::move(cone));
        std::size_t c = comps.size();
        while (c > 0) {
            --c;
            if (++idx[c] < per[c].size()) {
                break;
            }
            idx[c] = 0;
            if (c == 0) {
                return out;
            }
        }
        if (comps.empty()) {
            return out;
        }
    }
}

PositiveFan positive_fan(const OrientedMatroid& m, Exec exec)
{
    return positive_fan(m, fine_fan(m), exec);
}

PositiveFan positive_fan(const OrientedMatroid& m, const std::vector<FlagCone>& fine, Exec exec)
{
    const auto keep = parallel_map(
        fine.size(),
        [&](std::size_t i) -> unsigned char {
            const auto w = sample_relative_interior(fine[i]);
            return is_positive_member_values(std::span<const Rational>(w), m) ? 1 : 0;
        },
        exec);
    PositiveFan fan;
    fan.free = m.is_free();
    for (std::size_t i = 0; i < fine.size(); ++i) {
        if (keep[i] != 0) {
            fan.cones.push_back(fine[i]);
        }
    }
    return fan;
}

bool locally_linear(const PositiveFan& fan, std::span<const Rational> w)
{
    std::vector<const FlagCone*> star;
    for (const auto& c : fan.cones) {
        if (cone_contains(c, w)) {
            star.push_back(&c);
        }
    }
    if (star.empty()) {
        return false;
    }
    auto partition = [](const FlagCone& c) {
        std::vector<IndexSet> out;
        for (const auto& chain : c.blocks()) {
            out.insert(out.end(), chain.begin(), chain.end());
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    const auto first = partition(*star.front());
    for (const auto* c : star) {
        if (partition(*c) != first) {
            return false;
        }
    }
    // Each run of tied blocks along a chain can appear in any order.
    std::size_t expected = 1;
    for (const auto& chain : star.front()->blocks()) {
        std::size_t run = 1;
        for (std::size_t b = 1; b <= chain.size(); ++b) {
            if (b < chain.size() && w[chain[b].first()] == w[chain[b - 1].first()]) {
                ++run;
                continue;
            }
            for (std::size_t k = 2; k <= run; ++k) {
                expected *= k;
                if (expected > star.size()) {
                    return false;
                }
            }
            run = 1;
        }
    }
    return expected == star.size();
}

std::vector<CoarseConeCheck> coarse_compare(const std::vector<RationalVector>& rays,
                                            const std::vector<std::vector<std::size_t>>& cones,
                                            const OrientedMatroid& m)
{
    std::vector<CoarseConeCheck> out;
    for (const auto& cone : cones) {
        CoarseConeCheck check;
        check.rays = cone;
        check.sample.assign(m.ground_size(), Rational(0));
        for (auto r : cone) {
            if (r >= rays.size() || rays[r].size() != m.ground_size()) {
                throw std::invalid_argument("coarse_compare: bad ray reference");
            }
            for (std::size_t i = 0; i < m.ground_size(); ++i) {
                check.sample[i] += rays[r][i];
            }
        }
        check.member = is_member(check.sample, m);
        check.positive = is_positive_member(check.sample, m);
        out.push_back(std::move(check));
    }
    return out;
}

}  // namespace tropibound
