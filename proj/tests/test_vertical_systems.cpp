#include "support.hpp"

#include "tropibound/regular_subdivision.hpp"
#include "tropibound/tropical_intersection.hpp"
#include "tropibound/vertical_systems.hpp"

#include <doctest.h>

using namespace tb_test;

TEST_CASE("assembling the histidine kinase network")
{
    const auto model = hhk_crn();
    const auto s = assemble_crn(model);
    CHECK(s.c.rows() == 8);
    CHECK(s.c.cols() == 13);
    CHECK(s.a.rows() == 6);
    CHECK(s.a.cols() == 13);
    CHECK(rank(s.c) == 6);
    CHECK(rank(to_rational(s.a)) == 6);
    CHECK(s.h == rv({7, -6, -2, -3, -3, 3, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(s.c(6, 12) == -10);
    CHECK(s.c(7, 12) == -20);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(s.a(i, 6 + i) == 1);
        CHECK(s.a(i, 12) == 0);
    }
    // dim ker C = (r_s - rank N) + (n_s + 1 - rank [W | -T]).
    const auto wt = s.c.select_rows(std::vector<std::size_t>{6, 7});
    const std::size_t expected = (6 - rank(model.n_stoich)) + (7 - rank(wt));
    CHECK(kernel_basis(s.c).rows() == expected);
}

TEST_CASE("assemble_crn rejects inconsistent models")
{
    auto model = hhk_crn();
    model.w(0, 0) = 2;
    CHECK_THROWS_AS(assemble_crn(model), std::invalid_argument);
    model = hhk_crn();
    model.t = rv({10});
    CHECK_THROWS_AS(assemble_crn(model), std::invalid_argument);
    model = hhk_crn();
    model.h = rv({1, 2});
    CHECK_THROWS_AS(assemble_crn(model), std::invalid_argument);
}

TEST_CASE("single-species network without conservation laws")
{
    CRNModel model;
    model.n_stoich = {{-1}};
    model.b = {{1}};
    model.h = rv({0});
    const auto s = assemble_crn(model);
    CHECK(s.c == RationalMatrix{{-1, 0, 0}});
    CHECK(s.a == IntMatrix{{1, 1, 0}});
    CHECK(s.h == rv({0, 0, 0}));
}

TEST_CASE("zero totals give a zero last column")
{
    auto model = hhk_crn();
    model.t = rv({0, 0});
    const auto s = assemble_crn(model);
    CHECK(s.c(6, 12) == 0);
    CHECK(s.c(7, 12) == 0);
    const bool full = rank(s.c) == 6;
    CHECK(validate_inputs(s.c, s.a, s.h).rank_c_matches == full);
}

TEST_CASE("bound on the running example")
{
    const auto b = bound(running_system());
    CHECK(b.certified);
    CHECK(b.certified_bound == 2);
    REQUIRE(b.decorated.has_value());
    CHECK(b.decorated->count == 1);
    CHECK(b.decorated->count < b.tropical.count);
}

TEST_CASE("bound on the reaction network")
{
    const auto b = bound(assemble_crn(hhk_crn()));
    CHECK(b.certified);
    CHECK(b.certified_bound == 3);
    CHECK_FALSE(b.decorated.has_value());
}

TEST_CASE("all-positive coefficient row bounds nothing")
{
    const VerticalSystem s{RationalMatrix{{1, 1, 1}}, IntMatrix{{0, 1, 2}}, rv({0, 1, 0})};
    const auto b = bound(s);
    CHECK(b.certified_bound == 0);
    CHECK(b.tropical.count == 0);
    const auto& notes = b.tropical.notes;
    CHECK(std::find(notes.begin(), notes.end(), "the positive fan is empty") != notes.end());
}

TEST_CASE("square_rows keeps the first independent rows")
{
    const RationalMatrix c{{1, 0, 1}, {2, 0, 2}, {0, 1, 1}};
    CHECK(square_rows(c) == RationalMatrix{{1, 0, 1}, {0, 1, 1}});
}

TEST_CASE("property: decorated count never exceeds a transverse tropical count")
{
    Gen gen(601);
    int compared = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const auto n = static_cast<std::size_t>(gen.uniform(1, 2));
        const auto r = static_cast<std::size_t>(gen.uniform(static_cast<long>(n) + 2, 6));
        const VerticalSystem s{gen.coefficient_matrix(n, r, 3), gen.exponent_matrix(n, r, 0, n == 1 ? 8 : 3),
                               gen.rational_vector(r, 4, 3)};
        const auto b = bound(s);
        REQUIRE(b.decorated.has_value());
        if (b.tropical.transverse) {
            ++compared;
            CHECK(b.decorated->count <= b.tropical.count);
            CHECK(b.certified_bound == b.tropical.count);
        } else {
            CHECK(b.certified_bound == b.decorated->count);
        }
        CHECK(b.certified);
    }
    CHECK(compared > 40);
}
