#include "tropibound/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace tropibound::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what)
{
    throw ParseError(field + ": " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& field)
{
    if (!j.is_object()) {
        fail(field, "expected an object");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        fail(field, "missing field \"" + key + "\"");
    }
    return *it;
}

const Json& array_at(const Json& j, const std::string& field)
{
    if (!j.is_array()) {
        fail(field, "expected an array");
    }
    return j;
}

bool boolean(const Json& j, const std::string& key, const std::string& field)
{
    const Json& b = member(j, key, field);
    if (!b.is_boolean()) {
        fail(field + "." + key, "expected true or false");
    }
    return b.get<bool>();
}

std::size_t count_field(const Json& j, const std::string& key, const std::string& field)
{
    const auto v = integer_from_json(member(j, key, field), field + "." + key);
    if (v < 0) {
        fail(field + "." + key, "expected a non-negative integer");
    }
    return static_cast<std::size_t>(v);
}

std::vector<std::string> notes_from_json(const Json& j, const std::string& field)
{
    std::vector<std::string> out;
    for (const auto& n : array_at(j, field)) {
        if (!n.is_string()) {
            fail(field, "expected strings");
        }
        out.push_back(n.get<std::string>());
    }
    return out;
}

void expect_kind(const Json& j, const std::string& kind)
{
    const Json& k = member(j, "kind", "document");
    if (!k.is_string() || k.get<std::string>() != kind) {
        fail("document.kind", "expected \"" + kind + "\"");
    }
}

std::vector<std::size_t> index_list_from_json(const Json& j, const std::string& field)
{
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    for (const auto& x : array_at(j, field)) {
        const auto v = integer_from_json(x, field + "[" + std::to_string(pos++) + "]");
        if (v < 1) {
            fail(field, "indices are 1-based");
        }
        out.push_back(static_cast<std::size_t>(v - 1));
    }
    return out;
}

Json index_list_to_json(const std::vector<std::size_t>& xs)
{
    Json out = Json::array();
    for (auto x : xs) {
        out.push_back(x + 1);
    }
    return out;
}

Json flag_to_json(const FlagOfFlats& flag)
{
    Json out = Json::array();
    for (const auto& f : flag.chain) {
        out.push_back({{"rank", f.rank}, {"elements", to_json(f.elements)}});
    }
    return out;
}

FlagOfFlats flag_from_json(const Json& j, const std::string& field)
{
    FlagOfFlats flag;
    std::size_t pos = 0;
    for (const auto& f : array_at(j, field)) {
        const std::string at = field + "[" + std::to_string(pos++) + "]";
        flag.chain.push_back({index_set_from_json(member(f, "elements", at), at + ".elements"),
                              count_field(f, "rank", at)});
    }
    return flag;
}

Json cell_fields(const Cell& c)
{
    return {{"members", index_list_to_json(c.members)}, {"witness", to_json(c.witness)}};
}

Cell cell_from_json(const Json& j, const std::string& field)
{
    return {index_list_from_json(member(j, "members", field), field + ".members"),
            rational_vector_from_json(member(j, "witness", field), field + ".witness")};
}

double number(const Json& j, const std::string& key, const std::string& field)
{
    const Json& x = member(j, key, field);
    if (!x.is_number()) {
        fail(field + "." + key, "expected a number");
    }
    return x.get<double>();
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
    }
}

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path.string() + ": cannot open file");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_json_text(text.str(), path.string());
}

Rational rational_from_json(const Json& j, const std::string& field)
{
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail(field, e.what());
        }
    }
    fail(field, "expected a fraction string or an integer");
}

RationalVector rational_vector_from_json(const Json& j, const std::string& field)
{
    RationalVector out;
    std::size_t pos = 0;
    for (const auto& x : array_at(j, field)) {
        out.push_back(rational_from_json(x, field + "[" + std::to_string(pos++) + "]"));
    }
    return out;
}

RationalMatrix rational_matrix_from_json(const Json& j, const std::string& field)
{
    std::vector<RationalVector> rows;
    std::size_t pos = 0;
    for (const auto& row : array_at(j, field)) {
        const std::string at = field + "[" + std::to_string(pos++) + "]";
        rows.push_back(rational_vector_from_json(row, at));
        if (rows.back().size() != rows.front().size()) {
            fail(at, "row length differs from the first row");
        }
    }
    return RationalMatrix::from_rows(rows);
}

std::int64_t integer_from_json(const Json& j, const std::string& field)
{
    if (j.is_number_unsigned()) {
        const auto u = j.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
            fail(field, "integer out of range");
        }
        return static_cast<std::int64_t>(u);
    }
    if (j.is_number_integer()) {
        return j.get<std::int64_t>();
    }
    if (j.is_string()) {
        const Rational q = rational_from_json(j, field);
        if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
            fail(field, "expected an integer");
        }
        return q.get_num().get_si();
    }
    fail(field, "expected an integer");
}

IntMatrix int_matrix_from_json(const Json& j, const std::string& field)
{
    std::vector<std::vector<std::int64_t>> rows;
    std::size_t pos = 0;
    for (const auto& row : array_at(j, field)) {
        const std::string at = field + "[" + std::to_string(pos++) + "]";
        std::vector<std::int64_t> r;
        std::size_t k = 0;
        for (const auto& x : array_at(row, at)) {
            r.push_back(integer_from_json(x, at + "[" + std::to_string(k++) + "]"));
        }
        if (!rows.empty() && r.size() != rows.front().size()) {
            fail(at, "row length differs from the first row");
        }
        rows.push_back(std::move(r));
    }
    return IntMatrix::from_rows(rows);
}

IndexSet index_set_from_json(const Json& j, const std::string& field)
{
    IndexSet s;
    for (auto i : index_list_from_json(j, field)) {
        if (i >= kMaxGroundSize) {
            fail(field, "index beyond the supported ground size");
        }
        s.insert(i);
    }
    return s;
}

Json to_json(const Rational& x)
{
    return to_string(x);
}

Json to_json(const RationalVector& v)
{
    Json out = Json::array();
    for (const auto& x : v) {
        out.push_back(to_json(x));
    }
    return out;
}

Json to_json(const RationalMatrix& m)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out.push_back(to_json(RationalVector(m.row(i).begin(), m.row(i).end())));
    }
    return out;
}

Json to_json(const IntMatrix& m)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (auto x : m.row(i)) {
            row.push_back(x);
        }
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(IndexSet s)
{
    return index_list_to_json(s.to_vector());
}

InputDocument parse_input(const Json& j)
{
    if (!j.is_object()) {
        fail("document", "expected an object");
    }
    InputDocument doc;
    if (j.contains("B")) {
        doc.kind = InputKind::Crn;
        doc.crn.n_stoich = rational_matrix_from_json(member(j, "N", "crn"), "N");
        doc.crn.b = int_matrix_from_json(member(j, "B", "crn"), "B");
        doc.crn.w = j.contains("W") ? rational_matrix_from_json(j.at("W"), "W") : RationalMatrix();
        doc.crn.t = j.contains("T") ? rational_vector_from_json(j.at("T"), "T") : RationalVector();
        doc.crn.h = rational_vector_from_json(member(j, "h", "crn"), "h");
        try {
            doc.system = assemble_crn(doc.crn);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        return doc;
    }
    const char* ckey = j.contains("C") ? "C" : "N";
    if (j.contains("A")) {
        doc.kind = InputKind::System;
        doc.system.c = rational_matrix_from_json(member(j, ckey, "system"), ckey);
        doc.system.a = int_matrix_from_json(member(j, "A", "system"), "A");
        doc.system.h = j.contains("h") ? rational_vector_from_json(j.at("h"), "h")
                                       : RationalVector(doc.system.a.cols(), Rational(0));
        try {
            check_shapes(doc.system);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        return doc;
    }
    doc.kind = InputKind::Matrix;
    doc.matrix = rational_matrix_from_json(member(j, ckey, "matrix"), ckey);
    return doc;
}

InputDocument parse_input(const std::filesystem::path& path)
{
    try {
        return parse_input(read_json_file(path));
    } catch (const ParseError& e) {
        const std::string what = e.what();
        if (what.rfind(path.string(), 0) == 0) {
            throw;
        }
        throw ParseError(path.string() + ": " + what);
    }
}

const RationalMatrix& coefficient_matrix(const InputDocument& doc)
{
    return doc.kind == InputKind::Matrix ? doc.matrix : doc.system.c;
}

const VerticalSystem& system_of(const InputDocument& doc)
{
    if (doc.kind == InputKind::Matrix) {
        throw ParseError("document: this command needs an exponent matrix \"A\" and shifts \"h\"");
    }
    return doc.system;
}

Json system_to_json(const VerticalSystem& s)
{
    return {{"kind", "system"}, {"C", to_json(s.c)}, {"A", to_json(s.a)}, {"h", to_json(s.h)}};
}

Json crn_to_json(const CRNModel& m)
{
    return {{"kind", "crn"},          {"N", to_json(m.n_stoich)}, {"B", to_json(m.b)},
            {"W", to_json(m.w)},      {"T", to_json(m.t)},        {"h", to_json(m.h)}};
}

Json circuits_to_json(std::size_t ground_size, const std::vector<SignedCircuit>& circuits)
{
    Json list = Json::array();
    for (const auto& c : circuits) {
        list.push_back({{"positive", to_json(c.positive)}, {"negative", to_json(c.negative)}});
    }
    return {{"kind", "circuits"}, {"ground_size", ground_size}, {"circuits", std::move(list)}};
}

std::vector<SignedCircuit> circuits_from_json(const Json& j)
{
    expect_kind(j, "circuits");
    std::vector<SignedCircuit> out;
    std::size_t pos = 0;
    for (const auto& c : array_at(member(j, "circuits", "document"), "circuits")) {
        const std::string at = "circuits[" + std::to_string(pos++) + "]";
        out.push_back({index_set_from_json(member(c, "positive", at), at + ".positive"),
                       index_set_from_json(member(c, "negative", at), at + ".negative")});
    }
    return out;
}

Json flats_to_json(std::size_t ground_size, const std::vector<Flat>& flats)
{
    Json list = Json::array();
    for (const auto& f : flats) {
        list.push_back({{"rank", f.rank}, {"elements", to_json(f.elements)}});
    }
    return {{"kind", "flats"}, {"ground_size", ground_size}, {"flats", std::move(list)}};
}

std::vector<Flat> flats_from_json(const Json& j)
{
    expect_kind(j, "flats");
    std::vector<Flat> out;
    std::size_t pos = 0;
    for (const auto& f : array_at(member(j, "flats", "document"), "flats")) {
        const std::string at = "flats[" + std::to_string(pos++) + "]";
        out.push_back({index_set_from_json(member(f, "elements", at), at + ".elements"), count_field(f, "rank", at)});
    }
    return out;
}

Json cone_to_json(const FlagCone& cone)
{
    Json comps = Json::array();
    Json flags = Json::array();
    for (std::size_t c = 0; c < cone.components.size(); ++c) {
        comps.push_back(to_json(cone.components[c]));
        flags.push_back(flag_to_json(cone.flags[c]));
    }
    return {{"components", std::move(comps)},
            {"flags", std::move(flags)},
            {"sample", to_json(sample_relative_interior(cone))}};
}

FlagCone cone_from_json(const Json& j)
{
    FlagCone cone;
    std::size_t pos = 0;
    for (const auto& c : array_at(member(j, "components", "cone"), "cone.components")) {
        cone.components.push_back(index_set_from_json(c, "cone.components[" + std::to_string(pos++) + "]"));
    }
    pos = 0;
    for (const auto& f : array_at(member(j, "flags", "cone"), "cone.flags")) {
        cone.flags.push_back(flag_from_json(f, "cone.flags[" + std::to_string(pos++) + "]"));
    }
    if (cone.flags.size() != cone.components.size()) {
        fail("cone", "one flag per component expected");
    }
    cone.ground_size = rational_vector_from_json(member(j, "sample", "cone"), "cone.sample").size();
    return cone;
}

Json fan_to_json(const std::string& kind, std::size_t ground_size, const std::vector<FlagCone>& cones, bool free)
{
    Json list = Json::array();
    for (const auto& c : cones) {
        list.push_back(cone_to_json(c));
    }
    return {{"kind", kind},
            {"ground_size", ground_size},
            {"free", free},
            {"cone_count", cones.size()},
            {"cones", std::move(list)}};
}

std::vector<FlagCone> fan_from_json(const Json& j)
{
    const Json& k = member(j, "kind", "document");
    if (!k.is_string() || (k.get<std::string>() != "bergman" && k.get<std::string>() != "positive-bergman")) {
        fail("document.kind", "expected \"bergman\" or \"positive-bergman\"");
    }
    std::vector<FlagCone> out;
    for (const auto& c : array_at(member(j, "cones", "document"), "cones")) {
        out.push_back(cone_from_json(c));
    }
    return out;
}

Json coarse_to_json(const std::vector<CoarseConeCheck>& checks)
{
    Json list = Json::array();
    for (const auto& c : checks) {
        list.push_back({{"rays", index_list_to_json(c.rays)},
                        {"sample", to_json(c.sample)},
                        {"member", c.member},
                        {"positive", c.positive}});
    }
    return list;
}

std::pair<std::vector<RationalVector>, std::vector<std::vector<std::size_t>>> coarse_input_from_json(const Json& j)
{
    std::vector<RationalVector> rays;
    std::size_t pos = 0;
    for (const auto& r : array_at(member(j, "rays", "coarse"), "rays")) {
        rays.push_back(rational_vector_from_json(r, "rays[" + std::to_string(pos++) + "]"));
    }
    std::vector<std::vector<std::size_t>> cones;
    pos = 0;
    for (const auto& c : array_at(member(j, "cones", "coarse"), "cones")) {
        cones.push_back(index_list_from_json(c, "cones[" + std::to_string(pos++) + "]"));
    }
    return {std::move(rays), std::move(cones)};
}

Json report_to_json(const IntersectionReport& r)
{
    Json points = Json::array();
    for (const auto& p : r.points) {
        points.push_back({{"v", to_json(p.v)},
                          {"w", to_json(p.w)},
                          {"isolated", p.isolated},
                          {"interior", p.interior},
                          {"cone", p.cone.ground_size == 0 ? Json(nullptr) : cone_to_json(p.cone)}});
    }
    return {{"kind", "intersection"},
            {"count", r.count},
            {"transverse", r.transverse},
            {"lineality_ok", r.lineality_ok},
            {"degenerate_cone", r.degenerate_cone},
            {"points", std::move(points)},
            {"notes", r.notes}};
}

IntersectionReport report_from_json(const Json& j)
{
    expect_kind(j, "intersection");
    IntersectionReport r;
    r.count = count_field(j, "count", "intersection");
    r.transverse = boolean(j, "transverse", "intersection");
    r.lineality_ok = boolean(j, "lineality_ok", "intersection");
    r.degenerate_cone = boolean(j, "degenerate_cone", "intersection");
    std::size_t pos = 0;
    for (const auto& p : array_at(member(j, "points", "intersection"), "points")) {
        const std::string at = "points[" + std::to_string(pos++) + "]";
        IntersectionPoint q;
        q.v = rational_vector_from_json(member(p, "v", at), at + ".v");
        q.w = rational_vector_from_json(member(p, "w", at), at + ".w");
        q.isolated = boolean(p, "isolated", at);
        q.interior = boolean(p, "interior", at);
        if (const Json& c = member(p, "cone", at); !c.is_null()) {
            q.cone = cone_from_json(c);
        }
        r.points.push_back(std::move(q));
    }
    if (r.count != r.points.size()) {
        fail("intersection.count", "differs from the number of points");
    }
    r.notes = notes_from_json(member(j, "notes", "intersection"), "notes");
    return r;
}

Json cells_to_json(const std::vector<Cell>& cells, bool triangulation)
{
    Json list = Json::array();
    for (const auto& c : cells) {
        list.push_back(cell_fields(c));
    }
    return {{"kind", "subdivision"}, {"triangulation", triangulation}, {"cells", std::move(list)}};
}

std::vector<Cell> cells_from_json(const Json& j)
{
    expect_kind(j, "subdivision");
    std::vector<Cell> out;
    std::size_t pos = 0;
    for (const auto& c : array_at(member(j, "cells", "document"), "cells")) {
        out.push_back(cell_from_json(c, "cells[" + std::to_string(pos++) + "]"));
    }
    return out;
}

Json decorated_to_json(const DecoratedCount& d)
{
    Json list = Json::array();
    for (const auto& s : d.simplices) {
        Json entry = cell_fields(s.cell);
        entry["kernel"] = to_json(s.kernel_vector);
        list.push_back(std::move(entry));
    }
    return {{"kind", "decorated"}, {"count", d.count}, {"simplices", std::move(list)}};
}

DecoratedCount decorated_from_json(const Json& j)
{
    expect_kind(j, "decorated");
    DecoratedCount d;
    d.count = count_field(j, "count", "decorated");
    std::size_t pos = 0;
    for (const auto& s : array_at(member(j, "simplices", "decorated"), "simplices")) {
        const std::string at = "simplices[" + std::to_string(pos++) + "]";
        d.simplices.push_back({cell_from_json(s, at), rational_vector_from_json(member(s, "kernel", at), at + ".kernel")});
    }
    if (d.count != d.simplices.size()) {
        fail("decorated.count", "differs from the number of simplices");
    }
    return d;
}

Json bound_to_json(const BoundReport& b)
{
    return {{"kind", "bound"},
            {"certified_bound", b.certified_bound},
            {"certified", b.certified},
            {"tropical", report_to_json(b.tropical)},
            {"decorated", b.decorated ? decorated_to_json(*b.decorated) : Json(nullptr)},
            {"notes", b.method_notes}};
}

BoundReport bound_from_json(const Json& j)
{
    expect_kind(j, "bound");
    BoundReport b;
    b.certified_bound = count_field(j, "certified_bound", "bound");
    b.certified = boolean(j, "certified", "bound");
    b.tropical = report_from_json(member(j, "tropical", "bound"));
    if (const Json& d = member(j, "decorated", "bound"); !d.is_null()) {
        b.decorated = decorated_from_json(d);
    }
    b.method_notes = notes_from_json(member(j, "notes", "bound"), "notes");
    return b;
}

Json witnesses_to_json(const std::vector<RootWitness>& ws, const CountOptions& options, std::size_t certified_bound)
{
    Json list = Json::array();
    for (const auto& w : ws) {
        list.push_back({{"x", w.x},
                        {"residual", w.residual},
                        {"jacobian_ok", w.jacobian_ok},
                        {"seed", w.seed ? to_json(*w.seed) : Json("random")}});
    }
    return {{"kind", "witnesses"},
            {"label", "empirical witness"},
            {"t", options.t},
            {"tol", options.tol},
            {"separation", options.separation},
            {"multistarts", options.multistarts},
            {"seed", options.seed},
            {"certified_bound", certified_bound},
            {"count", ws.size()},
            {"witnesses", std::move(list)}};
}

std::vector<RootWitness> witnesses_from_json(const Json& j)
{
    expect_kind(j, "witnesses");
    std::vector<RootWitness> out;
    std::size_t pos = 0;
    for (const auto& w : array_at(member(j, "witnesses", "document"), "witnesses")) {
        const std::string at = "witnesses[" + std::to_string(pos++) + "]";
        RootWitness r;
        for (const auto& x : array_at(member(w, "x", at), at + ".x")) {
            if (!x.is_number()) {
                fail(at + ".x", "expected numbers");
            }
            r.x.push_back(x.get<double>());
        }
        r.residual = number(w, "residual", at);
        r.jacobian_ok = boolean(w, "jacobian_ok", at);
        if (const Json& s = member(w, "seed", at); !(s.is_string() && s.get<std::string>() == "random")) {
            r.seed = rational_vector_from_json(s, at + ".seed");
        }
        out.push_back(std::move(r));
    }
    if (count_field(j, "count", "witnesses") != out.size()) {
        fail("witnesses.count", "differs from the number of witnesses");
    }
    return out;
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

}  // namespace tropibound::io
