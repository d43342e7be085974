#include "support.hpp"

#include "tropibound/io.hpp"

#include <doctest.h>

using namespace tb_test;
using tropibound::io::Json;
namespace io = tropibound::io;

namespace {

std::string parse_error_of(const std::string& text)
{
    try {
        io::parse_input(io::parse_json_text(text));
    } catch (const io::ParseError& e) {
        return e.what();
    }
    return "";
}

// Serialize, print, re-read and serialize again.
Json reparse(const Json& j)
{
    return io::parse_json_text(io::dump(j));
}

}  // namespace

TEST_CASE("shipped running example parses to the fixture")
{
    const auto doc = io::parse_input(data_dir() / "running_2x5.json");
    REQUIRE(doc.kind == io::InputKind::System);
    CHECK(doc.system.c == running_n());
    CHECK(doc.system.a == running_a());
    CHECK(doc.system.h == running_h());
}

TEST_CASE("shipped reaction network parses to the fixture")
{
    const auto doc = io::parse_input(data_dir() / "hhk_crn.json");
    REQUIRE(doc.kind == io::InputKind::Crn);
    const auto m = hhk_crn();
    CHECK(doc.crn.n_stoich == m.n_stoich);
    CHECK(doc.crn.b == m.b);
    CHECK(doc.crn.w == m.w);
    CHECK(doc.crn.t == rv({10, 20}));
    CHECK(doc.crn.h == rv({7, -6, -2, -3, -3, 3}));
    CHECK(doc.system.c == assemble_crn(m).c);
}

TEST_CASE("matrix documents")
{
    const auto doc = io::parse_input(data_dir() / "running_matrix.json");
    CHECK(doc.kind == io::InputKind::Matrix);
    CHECK(io::coefficient_matrix(doc) == running_n());
    CHECK_THROWS_AS(io::system_of(doc), io::ParseError);
}

TEST_CASE("parse errors name the field")
{
    CHECK(parse_error_of(R"({"C": [["1/0", "1"]]})").find("C[0][0]") != std::string::npos);
    CHECK(parse_error_of(R"({"C": [["1/0", "1"]]})").find("zero denominator") != std::string::npos);
    CHECK(parse_error_of(R"({"C": [["1", "2"], ["3"]]})").find("C[1]") != std::string::npos);
    CHECK(parse_error_of(R"({"C": [["1", "2"]], "A": [[0, "1/2"]]})").find("A[0][1]") != std::string::npos);
    CHECK(parse_error_of(R"({"C": [["1", "2"]], "A": [[0, 1, 2]]})").find("must agree") != std::string::npos);
    CHECK(parse_error_of(R"({"N": [["1"]], "B": [[1]]})").find("h") != std::string::npos);
    CHECK(parse_error_of(R"([1, 2])").find("expected an object") != std::string::npos);
    CHECK(parse_error_of(R"({"C": [[true]]})").find("C[0][0]") != std::string::npos);
    CHECK(parse_error_of(R"({"C": [["1", "2"]]})").empty());
}

TEST_CASE("syntax errors carry line and column")
{
    try {
        io::parse_json_text("{\n  \"C\": [1,,]\n}", "doc.json");
        FAIL("expected a parse error");
    } catch (const io::ParseError& e) {
        CHECK(std::string(e.what()).find("doc.json:2:") != std::string::npos);
    }
    CHECK_THROWS_AS(io::read_json_file(data_dir() / "missing.json"), io::ParseError);
}

TEST_CASE("numbers and indices")
{
    CHECK(io::to_json(Rational(-3, 2)) == "-3/2");
    CHECK(io::rational_from_json(Json(4), "x") == 4);
    CHECK(io::rational_from_json(Json("6/8"), "x") == Rational(3, 4));
    CHECK_THROWS_AS(io::rational_from_json(Json(1.5), "x"), io::ParseError);
    CHECK(io::to_json(IndexSet::of({0, 2})) == Json::array({1, 3}));
    CHECK(io::index_set_from_json(Json::array({1, 3}), "s") == IndexSet::of({0, 2}));
    CHECK_THROWS_AS(io::index_set_from_json(Json::array({0}), "s"), io::ParseError);
    CHECK_THROWS_AS(io::integer_from_json(Json("1/2"), "k"), io::ParseError);
}

TEST_CASE("round trips of every report")
{
    const auto s = running_system();
    const auto m = realize_from_kernel(s.c);

    SUBCASE("inputs")
    {
        const auto sys = io::parse_input(reparse(io::system_to_json(s)));
        CHECK(sys.system.c == s.c);
        CHECK(sys.system.a == s.a);
        CHECK(sys.system.h == s.h);
        const auto crn = io::parse_input(reparse(io::crn_to_json(hhk_crn())));
        CHECK(crn.kind == io::InputKind::Crn);
        CHECK(crn.crn.h == hhk_crn().h);
    }
    SUBCASE("circuits and flats")
    {
        CHECK(io::circuits_from_json(reparse(io::circuits_to_json(5, m.circuits()))) == m.circuits());
        const auto flats = all_flats(m);
        CHECK(io::flats_from_json(reparse(io::flats_to_json(5, flats))) == flats);
    }
    SUBCASE("fans")
    {
        const auto fine = fine_fan(m);
        CHECK(io::fan_from_json(reparse(io::fan_to_json("bergman", 5, fine, false))) == fine);
        const auto pos = positive_fan(m);
        CHECK(io::fan_from_json(reparse(io::fan_to_json("positive-bergman", 5, pos.cones, pos.free))) == pos.cones);
    }
    SUBCASE("intersection and bound reports")
    {
        const auto b = bound(s);
        const auto r = io::report_from_json(reparse(io::report_to_json(b.tropical)));
        CHECK(point_set(r) == point_set(b.tropical));
        CHECK(r.transverse == b.tropical.transverse);
        REQUIRE(r.points.size() == b.tropical.points.size());
        for (std::size_t i = 0; i < r.points.size(); ++i) {
            CHECK(r.points[i].w == b.tropical.points[i].w);
            CHECK(r.points[i].cone == b.tropical.points[i].cone);
            CHECK(r.points[i].isolated == b.tropical.points[i].isolated);
            CHECK(r.points[i].interior == b.tropical.points[i].interior);
        }
        const auto back = io::bound_from_json(reparse(io::bound_to_json(b)));
        CHECK(back.certified_bound == b.certified_bound);
        CHECK(back.method_notes == b.method_notes);
        REQUIRE(back.decorated.has_value());
        CHECK(back.decorated->simplices == b.decorated->simplices);
        CHECK(io::dump(io::bound_to_json(back)) == io::dump(io::bound_to_json(b)));
    }
    SUBCASE("subdivision and witnesses")
    {
        const auto cells = full_cells(s.a, s.h);
        CHECK(io::cells_from_json(reparse(io::cells_to_json(cells, true))) == cells);
        const auto report = lower_bound(s.c, s.a, s.h);
        const CountOptions opt;
        const auto ws = count_roots(s, report, opt);
        const auto j = io::witnesses_to_json(ws, opt, 2);
        CHECK(j["label"] == "empirical witness");
        const auto back = io::witnesses_from_json(reparse(j));
        REQUIRE(back.size() == ws.size());
        for (std::size_t i = 0; i < ws.size(); ++i) {
            CHECK(back[i].x == ws[i].x);
            CHECK(back[i].seed == ws[i].seed);
        }
    }
}

TEST_CASE("reports are rejected under the wrong kind")
{
    const auto j = io::cells_to_json(full_cells(running_a(), running_h()), true);
    CHECK_THROWS_AS(io::report_from_json(j), io::ParseError);
    CHECK_THROWS_AS(io::decorated_from_json(j), io::ParseError);
}

TEST_CASE("coarse comparison input")
{
    const auto [rays, cones] = io::coarse_input_from_json(io::read_json_file(data_dir() / "running_coarse.json"));
    CHECK(rays.size() == 7);
    REQUIRE(cones.size() == 10);
    CHECK(cones[0] == std::vector<std::size_t>{0, 1});
}

TEST_CASE("output is deterministic")
{
    const auto s = assemble_crn(hhk_crn());
    const auto first = io::dump(io::bound_to_json(bound(s)));
    const auto second = io::dump(io::bound_to_json(bound(s)));
    CHECK(first == second);
    CHECK(first.back() == '\n');
}
