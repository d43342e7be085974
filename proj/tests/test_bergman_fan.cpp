#include "support.hpp"

#include "tropibound/bergman_fan.hpp"

#include <doctest.h>

using namespace tb_test;

namespace {

std::vector<RationalVector> running_rays()
{
    return {rv({0, 1, 0, 0, 0}),   rv({0, 0, 0, 1, 0}),     rv({0, 0, 0, -1, -1}), rv({0, -1, -1, 0, 0}),
            rv({0, -1, -1, -1, -1}), rv({0, 0, 0, 0, 1}), rv({0, 0, 1, 0, 0})};
}

std::vector<std::vector<std::size_t>> running_cones()
{
    return {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}, {0, 5}, {3, 5}, {1, 6}, {2, 6}, {5, 6}};
}

bool in_some_cone(const std::vector<FlagCone>& cones, std::span<const Rational> w)
{
    return std::any_of(cones.begin(), cones.end(), [&](const FlagCone& c) { return cone_contains(c, w); });
}

}  // namespace

TEST_CASE("coarse rays and cones of the running example")
{
    const auto m = realize_from_kernel(running_n());
    for (const auto& r : running_rays()) {
        CHECK(is_member(r, m));
    }
    const auto checks = coarse_compare(running_rays(), running_cones(), m);
    REQUIRE(checks.size() == 10);
    for (std::size_t k = 0; k < checks.size(); ++k) {
        CHECK(checks[k].member);
        CHECK(checks[k].positive == (k < 5));
    }
    CHECK_FALSE(is_member(rv({0, 1, 2, 0, 0}), m));
}

TEST_CASE("fine and positive fans of the running example")
{
    const auto m = realize_from_kernel(running_n());
    const auto fine = fine_fan(m);
    CHECK(fine.size() == 14);
    for (const auto& c : fine) {
        CHECK(c.dimension() == 3);
        CHECK(c.lineality().size() == 1);
        CHECK(cone_relative_interior(c, sample_relative_interior(c)));
    }
    const auto pos = positive_fan(m);
    CHECK_FALSE(pos.free);
    CHECK(pos.cones.size() == 6);
    CHECK(positive_fan(m, Exec::Serial).cones == pos.cones);
}

TEST_CASE("cone blocks are the flag differences")
{
    const auto m = realize_from_kernel(running_n());
    const auto fine = fine_fan(m);
    const auto& c = fine.front();
    REQUIRE(c.flags.size() == 1);
    const auto blocks = c.blocks().front();
    CHECK(blocks.size() == 3);
    CHECK(blocks[0] == IndexSet::of({0}));
    CHECK(blocks[1] == IndexSet::of({1, 2}));
    CHECK(blocks[2] == IndexSet::of({3, 4}));
    CHECK(cone_contains(c, rv({3, 1, 1, 0, 0})));
    CHECK(cone_contains(c, rv({1, 1, 1, 1, 1})));
    CHECK_FALSE(cone_contains(c, rv({0, 1, 1, 0, 0})));
    CHECK_FALSE(cone_relative_interior(c, rv({1, 1, 1, 0, 0})));
}

TEST_CASE("locally linear points of the positive fan")
{
    const auto m = realize_from_kernel(running_n());
    const auto pos = positive_fan(m);
    // Inside coarse cone sigma1 but on the fine wall between two flags.
    CHECK(locally_linear(pos, rv({0, 2, 0, 2, 0})));
    CHECK(locally_linear(pos, rv({0, 1, 0, 2, 0})));
    // A ray of the coarse fan.
    CHECK_FALSE(locally_linear(pos, rv({0, 1, 0, 0, 0})));
    // The lineality space.
    CHECK_FALSE(locally_linear(pos, rv({1, 1, 1, 1, 1})));
    // Outside the positive fan.
    CHECK_FALSE(locally_linear(pos, rv({0, 1, 0, 0, 1})));
}

TEST_CASE("degenerate matroids")
{
    SUBCASE("loops empty the fan")
    {
        const auto m = realize_from_kernel(RationalMatrix{{1, 0, 0}, {0, 1, 1}});
        CHECK(m.has_loops());
        CHECK(fine_fan(m).empty());
        CHECK(positive_fan(m).cones.empty());
        CHECK_FALSE(is_member(rv({0, 0, 0}), m));
    }
    SUBCASE("free matroid is the whole space")
    {
        const auto m = realize_from_kernel(RationalMatrix(1, 3));
        const auto pos = positive_fan(m);
        CHECK(pos.free);
        CHECK(is_positive_member(rv({5, -2, 7}), m));
        REQUIRE(pos.cones.size() == 1);
        CHECK(pos.cones.front().dimension() == 3);
    }
    SUBCASE("size mismatch throws")
    {
        const auto m = realize_from_kernel(running_n());
        CHECK_THROWS_AS(is_member(rv({0, 0}), m), std::invalid_argument);
    }
}

TEST_CASE("property: fine fan is sound and complete on random matroids")
{
    Gen gen(301);
    for (int trial = 0; trial < 40; ++trial) {
        const auto r = static_cast<std::size_t>(gen.uniform(3, 7));
        const auto rows = static_cast<std::size_t>(gen.uniform(1, static_cast<long>(r) - 2));
        const auto c = gen.int_valued_matrix(rows, r, 2);
        const auto m = realize_from_kernel(c);
        if (m.has_loops()) {
            CHECK(fine_fan(m).empty());
            continue;
        }
        const auto fine = fine_fan(m);
        const auto pos = positive_fan(m, fine);
        for (const auto& cone : fine) {
            const auto s = sample_relative_interior(cone);
            CHECK(is_member(s, m));
            const bool positive = std::find(pos.cones.begin(), pos.cones.end(), cone) != pos.cones.end();
            CHECK(is_positive_member(s, m) == positive);
            for (const auto& g : cone.generators()) {
                CHECK(is_member(g, m));
            }
        }
        for (int k = 0; k < 200; ++k) {
            RationalVector w(r);
            for (auto& x : w) {
                x = gen.uniform(-2, 2);
            }
            CHECK(is_member(w, m) == in_some_cone(fine, w));
            CHECK(is_positive_member(w, m) == (pos.free || in_some_cone(pos.cones, w)));
        }
    }
}

TEST_CASE("property: membership is invariant under lineality and positive scaling")
{
    Gen gen(302);
    for (int trial = 0; trial < 30; ++trial) {
        const auto r = static_cast<std::size_t>(gen.uniform(3, 7));
        const auto c = gen.int_valued_matrix(static_cast<std::size_t>(gen.uniform(1, static_cast<long>(r) - 2)), r, 2);
        const auto m = realize_from_kernel(c);
        for (int k = 0; k < 100; ++k) {
            const auto w = gen.rational_vector(r, 3, 3);
            const bool member = is_member(w, m);
            const bool positive = is_positive_member(w, m);
            Rational scale(gen.uniform(1, 9), gen.uniform(1, 9));
            scale.canonicalize();
            RationalVector scaled = w;
            for (auto& x : scaled) {
                x *= scale;
            }
            CHECK(is_member(scaled, m) == member);
            CHECK(is_positive_member(scaled, m) == positive);
            for (const auto comp : m.components()) {
                RationalVector shifted = w;
                const Rational mu = gen.rational(5, 4);
                comp.for_each([&](std::size_t i) { shifted[i] += mu; });
                CHECK(is_member(shifted, m) == member);
                CHECK(is_positive_member(shifted, m) == positive);
            }
        }
    }
}
