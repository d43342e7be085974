// tropibound: command-line front end.
//
//   tropibound <command> <input.json> [options]
//
// Exit status: 0 on success (certified for intersect, bound and verify),
// 2 when a result was computed but is not certified, 1 on any error.

#include "tropibound/bergman_fan.hpp"
#include "tropibound/io.hpp"
#include "tropibound/numeric_verify.hpp"
#include "tropibound/oriented_matroid.hpp"
#include "tropibound/parallel.hpp"
#include "tropibound/regular_subdivision.hpp"
#include "tropibound/tropical_intersection.hpp"
#include "tropibound/vertical_systems.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace tropibound;
using io::Json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_uncertified = 2;

struct Options {
    std::string input;
    bool json = false;
    int threads = 0;
    bool debug_oracle = false;
    std::string coarse_compare;
    CountOptions count;
};

struct Rendered {
    Json json;
    std::string text;
    int status = exit_ok;
};

std::string vec(std::span<const Rational> v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + to_string(v[i]);
    }
    return out + ")";
}

std::string set1(IndexSet s)
{
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < 64; ++i) {
        if (s.contains(i)) {
            out += (first ? "" : ",") + std::to_string(i + 1);
            first = false;
        }
    }
    return out + "}";
}

std::string set1(const std::vector<std::size_t>& members)
{
    std::string out = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        out += (i ? "," : "") + std::to_string(members[i] + 1);
    }
    return out + "}";
}

// Positive multiple of v with coprime integer entries.
RationalVector primitive(const RationalVector& v)
{
    mpz_class den = 1;
    for (const auto& x : v) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    }
    mpz_class g = 0;
    for (const auto& x : v) {
        const mpz_class num = x.get_num() * (den / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    if (g == 0) {
        return v;
    }
    RationalVector out;
    for (const auto& x : v) {
        out.emplace_back(x * Rational(den) / Rational(g));
    }
    return out;
}

std::string decimal(double x)
{
    std::ostringstream s;
    s << std::setprecision(10) << x;
    return s.str();
}

void render_cone(std::ostream& out, const FlagCone& cone)
{
    out << "  flags:";
    for (const auto& f : cone.flags) {
        out << " ";
        for (std::size_t k = 0; k < f.chain.size(); ++k) {
            out << (k ? " < " : "") << set1(f.chain[k].elements);
        }
    }
    out << "\n  sample " << vec(sample_relative_interior(cone)) << "\n";
}

void render_report(std::ostream& out, const IntersectionReport& r)
{
    out << "tropical intersection: " << r.count << " point" << (r.count == 1 ? "" : "s") << ", "
        << (r.transverse ? "transverse" : "not certified transverse") << "\n";
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        const auto& p = r.points[i];
        out << "  point " << i + 1 << ": v = " << vec(p.v) << ", w = " << vec(p.w)
            << (p.isolated ? ", isolated" : ", not isolated") << (p.interior ? ", interior" : ", not interior")
            << "\n";
    }
    if (!r.lineality_ok) {
        out << "  lineality condition fails\n";
    }
    if (r.degenerate_cone) {
        out << "  a cone meets the tropical hypersurface in more than a point\n";
    }
    for (const auto& n : r.notes) {
        out << "  note: " << n << "\n";
    }
}

void render_decorated(std::ostream& out, const DecoratedCount& d)
{
    out << "positively decorated simplices: " << d.count << "\n";
    for (const auto& s : d.simplices) {
        out << "  simplex " << set1(s.cell.members) << ", kernel " << vec(s.kernel_vector)
            << " (primitive " << vec(primitive(s.kernel_vector)) << ")\n";
    }
}

void render_bound(std::ostream& out, const BoundReport& b)
{
    render_report(out, b.tropical);
    if (b.decorated) {
        render_decorated(out, *b.decorated);
    }
    for (const auto& n : b.method_notes) {
        out << "note: " << n << "\n";
    }
    out << "certified_bound " << b.certified_bound << (b.certified ? "" : " (not certified)") << "\n";
}

Rendered run_circuits(const io::InputDocument& doc)
{
    const auto m = realize_from_kernel(io::coefficient_matrix(doc));
    std::ostringstream out;
    out << m.circuits().size() << " signed circuits on " << m.ground_size() << " elements\n";
    for (const auto& c : m.circuits()) {
        out << "  (" << set1(c.positive) << ", " << set1(c.negative) << ")\n";
    }
    return {io::circuits_to_json(m.ground_size(), m.circuits()), out.str()};
}

Rendered run_flats(const io::InputDocument& doc)
{
    const auto m = realize_from_kernel(io::coefficient_matrix(doc));
    const auto flats = all_flats(m);
    std::ostringstream out;
    out << flats.size() << " flats\n";
    for (const auto& f : flats) {
        out << "  rank " << f.rank << ": " << set1(f.elements) << "\n";
    }
    return {io::flats_to_json(m.ground_size(), flats), out.str()};
}

Rendered run_bergman(const io::InputDocument& doc, const Options& opt)
{
    const auto m = realize_from_kernel(io::coefficient_matrix(doc));
    const auto fine = fine_fan(m);
    std::ostringstream out;
    out << "fine Bergman fan: " << fine.size() << " maximal cones\n";
    for (const auto& c : fine) {
        render_cone(out, c);
    }
    Json j = io::fan_to_json("bergman", m.ground_size(), fine, false);
    if (!opt.coarse_compare.empty()) {
        const auto [rays, cones] = io::coarse_input_from_json(io::read_json_file(opt.coarse_compare));
        const auto checks = coarse_compare(rays, cones, m);
        out << "coarse comparison:\n";
        for (const auto& c : checks) {
            out << "  cone " << set1(c.rays) << ": sample " << vec(c.sample) << (c.member ? " in fan" : " NOT in fan")
                << (c.positive ? ", positive" : ", not positive") << "\n";
        }
        j["coarse_compare"] = io::coarse_to_json(checks);
    }
    return {std::move(j), out.str()};
}

Rendered run_positive_bergman(const io::InputDocument& doc)
{
    const auto m = realize_from_kernel(io::coefficient_matrix(doc));
    const auto fan = positive_fan(m);
    std::ostringstream out;
    out << "positive Bergman fan: " << fan.cones.size() << " maximal cones" << (fan.free ? " (whole space)" : "")
        << "\n";
    for (const auto& c : fan.cones) {
        render_cone(out, c);
    }
    return {io::fan_to_json("positive-bergman", m.ground_size(), fan.cones, fan.free), out.str()};
}

Rendered run_intersect(const io::InputDocument& doc, const Options& opt)
{
    const auto& s = io::system_of(doc);
    LowerBoundOptions lb;
    lb.debug_oracle = opt.debug_oracle;
    const auto report = lower_bound(s.c, s.a, s.h, lb);
    std::ostringstream out;
    render_report(out, report);
    return {io::report_to_json(report), out.str(), report.transverse ? exit_ok : exit_uncertified};
}

Rendered run_subdivision(const io::InputDocument& doc)
{
    const auto& s = io::system_of(doc);
    const auto cells = full_cells(s.a, s.h);
    const bool tri = is_triangulation(cells, s.a.rows());
    std::ostringstream out;
    out << cells.size() << " full-dimensional cells" << (tri ? ", a triangulation" : "") << "\n";
    for (const auto& c : cells) {
        out << "  " << set1(c.members) << ", witness v = " << vec(c.witness) << "\n";
    }
    return {io::cells_to_json(cells, tri), out.str()};
}

Rendered run_decorated(const io::InputDocument& doc)
{
    const auto& s = io::system_of(doc);
    const auto d = decorated_count(square_rows(s.c), s.a, s.h);
    std::ostringstream out;
    render_decorated(out, d);
    return {io::decorated_to_json(d), out.str()};
}

Rendered run_bound(const io::InputDocument& doc, const Options& opt)
{
    LowerBoundOptions lb;
    lb.debug_oracle = opt.debug_oracle;
    const auto b = bound(io::system_of(doc), lb);
    std::ostringstream out;
    render_bound(out, b);
    return {io::bound_to_json(b), out.str(), b.certified ? exit_ok : exit_uncertified};
}

Rendered run_crn(const io::InputDocument& doc, const Options& opt)
{
    if (doc.kind != io::InputKind::Crn) {
        throw io::ParseError("document: the crn command needs \"N\", \"B\", \"W\", \"T\" and \"h\"");
    }
    LowerBoundOptions lb;
    lb.debug_oracle = opt.debug_oracle;
    const auto b = bound(doc.system, lb);
    std::ostringstream out;
    out << "assembled system: " << doc.system.c.rows() << " equations, " << doc.system.c.cols() << " monomials in "
        << doc.system.a.rows() << " variables\n";
    render_bound(out, b);
    Json j = {{"kind", "crn-report"}, {"system", io::system_to_json(doc.system)}, {"bound", io::bound_to_json(b)}};
    return {std::move(j), out.str(), b.certified ? exit_ok : exit_uncertified};
}

Rendered run_verify(const io::InputDocument& doc, const Options& opt)
{
    const auto& s = io::system_of(doc);
    const auto b = bound(s);
    const auto ws = count_roots(s, b.tropical, opt.count);
    std::ostringstream out;
    out << ws.size() << " empirical witness" << (ws.size() == 1 ? "" : "es") << " at t = " << decimal(opt.count.t)
        << " (certified_bound " << b.certified_bound << ")\n";
    for (std::size_t i = 0; i < ws.size(); ++i) {
        out << "  witness " << i + 1 << ": x ~ (";
        for (std::size_t k = 0; k < ws[i].x.size(); ++k) {
            out << (k ? ", " : "") << decimal(ws[i].x[k]);
        }
        out << "), residual ~ " << decimal(ws[i].residual)
            << (ws[i].seed ? ", tropical seed " + vec(*ws[i].seed) : std::string(", random start")) << "\n";
    }
    out << "decimal values are approximate; witnesses are empirical, not certificates\n";
    const bool enough = b.certified && ws.size() >= b.certified_bound;
    return {io::witnesses_to_json(ws, opt.count, b.certified_bound), out.str(), enough ? exit_ok : exit_uncertified};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lower bounds on positive real solutions of vertically parametrized systems"};
    app.require_subcommand(1);
    Options opt;

    const std::vector<std::pair<std::string, std::string>> commands{
        {"circuits", "signed circuits of the oriented matroid of ker C"},
        {"flats", "lattice of flats of the matroid of ker C"},
        {"bergman", "fine Bergman fan of ker C"},
        {"positive-bergman", "positive part of the Bergman fan of ker C"},
        {"intersect", "tropical intersection with the shifted hypersurface"},
        {"subdivision", "regular subdivision of A lifted by h"},
        {"decorated", "positively decorated simplices"},
        {"bound", "certified lower bound on positive solutions"},
        {"crn", "assemble a reaction network and bound its steady states"},
        {"verify", "numeric root witnesses at a concrete t"},
    };
    for (const auto& [name, description] : commands) {
        auto* sub = app.add_subcommand(name, description);
        sub->add_option("input", opt.input, "input document (JSON)")->required()->check(CLI::ExistingFile);
        sub->add_flag("--json", opt.json, "machine-readable output");
        sub->add_option("--threads", opt.threads, "worker threads (0 = default)")
            ->envname("TROPIBOUND_THREADS")
            ->check(CLI::NonNegativeNumber);
        if (name == "intersect" || name == "bound" || name == "crn") {
            sub->add_flag("--debug-oracle", opt.debug_oracle, "cross-check against the vertex enumeration oracle");
        }
        if (name == "bergman") {
            sub->add_option("--coarse-compare", opt.coarse_compare, "coarse rays and cones to compare against")
                ->check(CLI::ExistingFile);
        }
        if (name == "verify") {
            sub->add_option("--t", opt.count.t, "parameter value in (0, 1)")->check(CLI::Range(0.0, 1.0));
            sub->add_option("--tol", opt.count.tol, "residual tolerance")->check(CLI::PositiveNumber);
            sub->add_option("--multistarts", opt.count.multistarts, "random starting points");
            sub->add_option("--seed", opt.count.seed, "pseudorandom seed");
            sub->add_option("--separation", opt.count.separation, "distinctness threshold in log coordinates")
                ->check(CLI::PositiveNumber);
            sub->add_option("--max-iter", opt.count.max_iter, "Newton iteration limit")->check(CLI::PositiveNumber);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_error;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        set_thread_count(opt.threads);
        const auto doc = io::parse_input(std::filesystem::path(opt.input));
        Rendered r;
        if (command == "circuits") {
            r = run_circuits(doc);
        } else if (command == "flats") {
            r = run_flats(doc);
        } else if (command == "bergman") {
            r = run_bergman(doc, opt);
        } else if (command == "positive-bergman") {
            r = run_positive_bergman(doc);
        } else if (command == "intersect") {
            r = run_intersect(doc, opt);
        } else if (command == "subdivision") {
            r = run_subdivision(doc);
        } else if (command == "decorated") {
            r = run_decorated(doc);
        } else if (command == "bound") {
            r = run_bound(doc, opt);
        } else if (command == "crn") {
            r = run_crn(doc, opt);
        } else {
            r = run_verify(doc, opt);
        }
        std::cout << (opt.json ? io::dump(r.json) : r.text);
        return r.status;
    } catch (const io::ParseError& e) {
        std::cerr << "tropibound: parse error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "tropibound: " << command << ": " << e.what() << "\n";
    }
    return exit_error;
}
