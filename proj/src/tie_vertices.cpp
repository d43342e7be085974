#include "tropibound/tie_vertices.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace tropibound {

namespace {

struct Overflow {};

template <class Int>
struct Ops;

template <>
struct Ops<std::int64_t> {
    using Wide = __int128;

    static std::int64_t mul(std::int64_t a, std::int64_t b)
    {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) {
            throw Overflow{};
        }
        return r;
    }
    static std::int64_t sub(std::int64_t a, std::int64_t b)
    {
        std::int64_t r;
        if (__builtin_sub_overflow(a, b, &r)) {
            throw Overflow{};
        }
        return r;
    }
    static std::int64_t gcd(std::int64_t a, std::int64_t b)
    {
        if (a == INT64_MIN || b == INT64_MIN) {
            throw Overflow{};
        }
        return std::gcd(a, b);
    }
    static std::int64_t from(const mpz_class& z)
    {
        if (!z.fits_slong_p()) {
            throw Overflow{};
        }
        return z.get_si();
    }
    static Wide wide(std::int64_t a) { return a; }
    static Wide wmul(Wide a, Wide b)
    {
        Wide r;
        if (__builtin_mul_overflow(a, b, &r)) {
            throw Overflow{};
        }
        return r;
    }
    static Wide wadd(Wide a, Wide b)
    {
        Wide r;
        if (__builtin_add_overflow(a, b, &r)) {
            throw Overflow{};
        }
        return r;
    }
    static mpz_class to_mpz(std::int64_t a) { return mpz_class(static_cast<long>(a)); }
};

template <>
struct Ops<mpz_class> {
    using Wide = mpz_class;

    static mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
    static mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
    static mpz_class gcd(const mpz_class& a, const mpz_class& b)
    {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }
    static mpz_class from(const mpz_class& z) { return z; }
    static Wide wide(const mpz_class& a) { return a; }
    static Wide wmul(const Wide& a, const Wide& b) { return a * b; }
    static Wide wadd(const Wide& a, const Wide& b) { return a + b; }
    static mpz_class to_mpz(const mpz_class& a) { return a; }
};

// Integer data of the arrangement: column alpha_j of A and D*h_j.
template <class Int>
struct Problem {
    std::size_t n = 0;
    std::size_t r = 0;
    std::vector<Int> alpha;  // r x n, row j = column j of A
    std::vector<Int> lift;   // D*h
    mpz_class scale;         // D
    const OrientedMatroid* matroid = nullptr;

    const Int& a(std::size_t j, std::size_t c) const { return alpha[j * n + c]; }
};

// Fully reduced fraction-free echelon form of an integer system
// rows * u = rhs; each row is stored as n coefficients followed by the rhs.
template <class Int>
struct Echelon {
    using O = Ops<Int>;

    std::size_t n = 0;
    std::vector<Int> rows;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return pivots.size(); }
    Int* row(std::size_t i) { return rows.data() + i * (n + 1); }

    static void normalize(Int* a, std::size_t len)
    {
        Int g = 0;
        for (std::size_t c = 0; c < len; ++c) {
            if (a[c] != 0) {
                g = O::gcd(g, a[c]);
            }
        }
        if (g > 1) {
            for (std::size_t c = 0; c < len; ++c) {
                a[c] /= g;
            }
        }
    }

    // a := a*p - f*b
    static void combine(Int* a, const Int* b, const Int& p, const Int& f, std::size_t len)
    {
        for (std::size_t c = 0; c < len; ++c) {
            a[c] = O::sub(O::mul(a[c], p), O::mul(f, b[c]));
        }
    }

    // -1 inconsistent, 0 redundant, 1 rank increased.
    int add(std::vector<Int> a)
    {
        const std::size_t len = n + 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            const std::size_t c = pivots[i];
            if (a[c] != 0) {
                const Int f = a[c];
                combine(a.data(), row(i), row(i)[c], f, len);
                normalize(a.data(), len);
            }
        }
        std::size_t lead = n;
        for (std::size_t c = 0; c < n; ++c) {
            if (a[c] != 0) {
                lead = c;
                break;
            }
        }
        if (lead == n) {
            return a[n] == 0 ? 0 : -1;
        }
        if (a[lead] < 0) {
            for (auto& x : a) {
                x = -x;
            }
        }
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            Int* ri = row(i);
            if (ri[lead] != 0) {
                const Int f = ri[lead];
                combine(ri, a.data(), a[lead], f, len);
                normalize(ri, len);
            }
        }
        rows.insert(rows.end(), a.begin(), a.end());
        pivots.push_back(lead);
        return 1;
    }
};

template <class Int>
struct State {
    Echelon<Int> ech;
    std::vector<std::size_t> reps;  // first element of each block
    std::size_t next = 0;           // elements [0, next) are assigned
};

template <class Int>
class Search {
public:
    using O = Ops<Int>;
    using Wide = typename O::Wide;

    explicit Search(const Problem<Int>& p) : p_(p) {}

    // Runs from s; states reaching `split` elements are deferred into
    // `frontier` when it is non-null.
    void visit(const State<Int>& s, std::size_t split, std::vector<State<Int>>* frontier)
    {
        if (frontier != nullptr && s.next == split) {
            frontier->push_back(s);
            return;
        }
        const std::size_t j = s.next;
        if (j == p_.r) {
            return;
        }
        const std::size_t left = p_.r - j - 1;
        for (auto rep : s.reps) {
            State<Int> t = s;
            const int res = t.ech.add(tie(j, rep));
            if (res < 0) {
                continue;
            }
            t.next = j + 1;
            if (t.ech.rank() == p_.n) {
                finish(t);
            } else if (t.ech.rank() + left >= p_.n) {
                visit(t, split, frontier);
            }
        }
        if (s.ech.rank() + left >= p_.n) {
            State<Int> t = s;
            t.reps.push_back(j);
            t.next = j + 1;
            visit(t, split, frontier);
        }
    }

    std::vector<RationalVector> take() { return std::move(found_); }

private:
    std::vector<Int> tie(std::size_t j, std::size_t k) const
    {
        // (alpha_j - alpha_k) . u = lift_k - lift_j
        std::vector<Int> a(p_.n + 1);
        for (std::size_t c = 0; c < p_.n; ++c) {
            a[c] = O::sub(p_.a(j, c), p_.a(k, c));
        }
        a[p_.n] = O::sub(p_.lift[k], p_.lift[j]);
        return a;
    }

    void finish(State<Int>& s)
    {
        const std::size_t n = p_.n;
        // Common denominator L of the pivots, U = L*u.
        Int l = 1;
        for (std::size_t i = 0; i < n; ++i) {
            const Int& piv = s.ech.row(i)[s.ech.pivots[i]];
            l = O::mul(l / O::gcd(l, piv), piv);
        }
        std::vector<Int> u(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Int* ri = s.ech.row(i);
            u[s.ech.pivots[i]] = O::mul(ri[n], l / ri[s.ech.pivots[i]]);
        }
        values_.resize(p_.r);
        const Wide wl = O::wide(l);
        for (std::size_t j = 0; j < p_.r; ++j) {
            Wide z = O::wmul(wl, O::wide(p_.lift[j]));
            for (std::size_t c = 0; c < n; ++c) {
                z = O::wadd(z, O::wmul(O::wide(p_.a(j, c)), O::wide(u[c])));
            }
            values_[j] = z;
        }
        // The prefix partition must be the exact tie pattern there.
        for (std::size_t x = 0; x < s.reps.size(); ++x) {
            for (std::size_t y = x + 1; y < s.reps.size(); ++y) {
                if (values_[s.reps[x]] == values_[s.reps[y]]) {
                    return;
                }
            }
        }
        if (!is_positive_member_values(std::span<const Wide>(values_), *p_.matroid)) {
            return;
        }
        RationalVector v(n);
        const mpz_class denom = O::to_mpz(l) * p_.scale;
        for (std::size_t c = 0; c < n; ++c) {
            v[c] = Rational(O::to_mpz(u[c]), denom);
            v[c].canonicalize();
        }
        found_.push_back(std::move(v));
    }

    const Problem<Int>& p_;
    std::vector<Wide> values_;
    std::vector<RationalVector> found_;
};

template <class Int>
std::vector<RationalVector> enumerate(const OrientedMatroid& m, const IntMatrix& a, std::span<const Rational> h,
                                      Exec exec)
{
    using O = Ops<Int>;
    Problem<Int> p;
    p.n = a.rows();
    p.r = a.cols();
    p.matroid = &m;
    p.scale = 1;
    for (const auto& x : h) {
        mpz_lcm(p.scale.get_mpz_t(), p.scale.get_mpz_t(), x.get_den_mpz_t());
    }
    for (std::size_t j = 0; j < p.r; ++j) {
        for (std::size_t c = 0; c < p.n; ++c) {
            p.alpha.push_back(O::from(mpz_class(static_cast<long>(a(c, j)))));
        }
        const mpz_class lifted = h[j].get_num() * (p.scale / h[j].get_den());
        p.lift.push_back(O::from(lifted));
    }

    State<Int> root;
    root.ech.n = p.n;
    if (p.n == 0 || p.r == 0) {
        return {};
    }

    // Split the search tree at a fixed depth into independent tasks.
    const std::size_t split = std::min<std::size_t>(p.r, 6);
    Search<Int> head(p);
    std::vector<State<Int>> tasks;
    head.visit(root, split, &tasks);
    std::vector<RationalVector> out = head.take();

    auto parts = parallel_map(
        tasks.size(),
        [&](std::size_t i) {
            Search<Int> s(p);
            s.visit(tasks[i], split, nullptr);
            return s.take();
        },
        exec);
    for (auto& part : parts) {
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    std::sort(out.begin(), out.end(), [](const RationalVector& x, const RationalVector& y) { return lex_less(x, y); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void check_shapes(const OrientedMatroid& m, const IntMatrix& a, std::span<const Rational> h)
{
    if (a.cols() != m.ground_size() || h.size() != m.ground_size()) {
        throw std::invalid_argument("positive_tie_vertices: A, h and the matroid disagree on the ground size");
    }
}

}  // namespace

std::vector<RationalVector> positive_tie_vertices(const OrientedMatroid& m, const IntMatrix& a,
                                                  std::span<const Rational> h, Exec exec)
{
    check_shapes(m, a, h);
    try {
        return enumerate<std::int64_t>(m, a, h, exec);
    } catch (const Overflow&) {
        return enumerate<mpz_class>(m, a, h, exec);
    }
}

std::vector<RationalVector> positive_tie_vertices_bignum(const OrientedMatroid& m, const IntMatrix& a,
                                                         std::span<const Rational> h, Exec exec)
{
    check_shapes(m, a, h);
    return enumerate<mpz_class>(m, a, h, exec);
}

}  // namespace tropibound
