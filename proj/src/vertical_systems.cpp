#include "tropibound/vertical_systems.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tropibound {

void check_shapes(const VerticalSystem& s)
{
    if (s.c.cols() != s.a.cols() || s.h.size() != s.a.cols()) {
        throw std::invalid_argument("system: cols(C) = " + std::to_string(s.c.cols()) + ", cols(A) = " +
                                    std::to_string(s.a.cols()) + ", length(h) = " + std::to_string(s.h.size()) +
                                    " must agree");
    }
}

VerticalSystem assemble_crn(const CRNModel& model)
{
    const std::size_t ns = model.n_stoich.rows();
    const std::size_t rs = model.n_stoich.cols();
    const std::size_t q = model.w.rows();
    if (model.b.rows() != ns || model.b.cols() != rs) {
        throw std::invalid_argument("crn: B must have the shape of N");
    }
    if (model.h.size() != rs) {
        throw std::invalid_argument("crn: length(h) must equal the number of reactions");
    }
    if (q > 0 && model.w.cols() != ns) {
        throw std::invalid_argument("crn: W must have one column per species");
    }
    if (model.t.size() != q) {
        throw std::invalid_argument("crn: length(T) must equal rows(W)");
    }
    if (q > 0 && !is_zero(multiply(model.w, model.n_stoich))) {
        throw std::invalid_argument("crn: W * N is not zero");
    }

    const std::size_t r = rs + ns + 1;
    VerticalSystem s;
    s.c = RationalMatrix(ns + q, r);
    s.a = IntMatrix(ns, r);
    s.h.assign(r, Rational(0));
    for (std::size_t i = 0; i < ns; ++i) {
        for (std::size_t j = 0; j < rs; ++j) {
            s.c(i, j) = model.n_stoich(i, j);
            s.a(i, j) = model.b(i, j);
        }
        s.a(i, rs + i) = 1;
    }
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t k = 0; k < ns; ++k) {
            s.c(ns + i, rs + k) = model.w(i, k);
        }
        s.c(ns + i, r - 1) = -model.t[i];
    }
    for (std::size_t j = 0; j < rs; ++j) {
        s.h[j] = model.h[j];
    }
    return s;
}

RationalMatrix square_rows(const RationalMatrix& c)
{
    return c.select_rows(independent_rows(c));
}

BoundReport bound(const VerticalSystem& system, const LowerBoundOptions& options)
{
    check_shapes(system);
    BoundReport out;
    out.tropical = lower_bound(system.c, system.a, system.h, options);
    const std::size_t n = system.a.rows();

    if (!has_distinct_columns(system.a)) {
        out.method_notes.push_back("exponent matrix has repeated columns: decorated simplices skipped");
    } else {
        const RationalMatrix reduced = square_rows(system.c);
        if (reduced.rows() != n) {
            out.method_notes.push_back("rank(C) differs from n: decorated simplices skipped");
        } else {
            if (reduced.rows() != system.c.rows()) {
                out.method_notes.push_back("decorated simplices use the first " + std::to_string(n) +
                                           " independent rows of C");
            }
            out.decorated = decorated_count(reduced, system.a, system.h, options.exec);
            std::set<RationalVector> images;
            for (const auto& d : out.decorated->simplices) {
                const auto w = out.tropical.transverse ? decorated_to_tropical(d, system.a, out.tropical)
                                                       : decorated_to_tropical(d, system.a);
                if (!images.insert(w).second) {
                    throw std::logic_error("two decorated simplices map to the same tropical point");
                }
            }
            if (out.tropical.transverse && out.decorated->count > out.tropical.count) {
                throw std::logic_error("decorated count exceeds the transverse tropical count");
            }
        }
    }

    if (out.tropical.transverse) {
        out.certified_bound = out.tropical.count;
        out.certified = true;
        out.method_notes.push_back("bound from the transverse tropical intersection");
    } else if (out.decorated) {
        out.certified_bound = out.decorated->count;
        out.certified = true;
        out.method_notes.push_back("tropical count not certified: bound from decorated simplices");
    } else {
        out.method_notes.push_back("no certified method applies: bound 0");
    }
    return out;
}

}  // namespace tropibound
