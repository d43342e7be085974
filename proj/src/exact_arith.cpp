#include "tropibound/exact_arith.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace tropibound {

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Row-wise integer scaling: row i of the result is row i of m times the lcm
// of its denominators. Row spaces and pivot structure are unchanged.
std::vector<std::vector<mpz_class>> integer_rows(const RationalMatrix& m, std::vector<mpz_class>* scales)
{
    std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
    if (scales != nullptr) {
        scales->assign(m.rows(), mpz_class(1));
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
        }
        if (scales != nullptr) {
            (*scales)[i] = l;
        }
    }
    return a;
}

struct BareissResult {
    std::vector<std::size_t> pivots;
    bool swapped_odd = false;
};

// Fraction-free forward elimination in place. Pivot = first nonzero entry in
// the column at or below the current row.
BareissResult bareiss_forward(std::vector<std::vector<mpz_class>>& a, std::size_t cols)
{
    BareissResult res;
    const std::size_t rows = a.size();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        if (p != r) {
            std::swap(a[p], a[r]);
            res.swapped_odd = !res.swapped_odd;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        res.pivots.push_back(c);
        ++r;
    }
    return res;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string s;
    s.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        // U+2212 MINUS SIGN
        if (text.substr(i, 3) == "\xE2\x88\x92") {
            s.push_back('-');
            i += 2;
        } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            s.push_back(text[i]);
        }
    }
    std::string_view body = s;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(negative ? mpz_class(-n) : n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value)
{
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

RationalMatrix to_rational(const IntMatrix& m)
{
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(i, j) = Rational(static_cast<long>(m(i, j)));
        }
    }
    return out;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("multiply: inner dimensions differ");
    }
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

RationalVector multiply(const RationalMatrix& a, std::span<const Rational> x)
{
    if (a.cols() != x.size()) {
        throw std::invalid_argument("multiply: vector length differs from column count");
    }
    RationalVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out[i] += a(i, j) * x[j];
        }
    }
    return out;
}

bool is_zero(const RationalMatrix& m)
{
    return std::all_of(m.data().begin(), m.data().end(), [](const Rational& q) { return q == 0; });
}

RowEchelon rref(const RationalMatrix& m)
{
    auto a = integer_rows(m, nullptr);
    const auto fwd = bareiss_forward(a, m.cols());

    RationalMatrix reduced(m.rows(), m.cols());
    const std::size_t r = fwd.pivots.size();
    for (std::size_t k = 0; k < r; ++k) {
        const std::size_t pc = fwd.pivots[k];
        for (std::size_t j = 0; j < m.cols(); ++j) {
            reduced(k, j) = Rational(a[k][j], a[k][pc]);
            reduced(k, j).canonicalize();
        }
    }
    for (std::size_t k = r; k-- > 0;) {
        const std::size_t pc = fwd.pivots[k];
        for (std::size_t i = 0; i < k; ++i) {
            const Rational f = reduced(i, pc);
            if (f == 0) {
                continue;
            }
            for (std::size_t j = pc; j < m.cols(); ++j) {
                reduced(i, j) -= f * reduced(k, j);
            }
        }
    }
    return {std::move(reduced), fwd.pivots};
}

std::size_t rank(const RationalMatrix& m)
{
    auto a = integer_rows(m, nullptr);
    return bareiss_forward(a, m.cols()).pivots.size();
}

RationalMatrix kernel_basis(const RationalMatrix& m)
{
    const auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!is_pivot[j]) {
            free_cols.push_back(j);
        }
    }
    RationalMatrix basis(free_cols.size(), m.cols());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        basis(k, f) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            basis(k, pivots[i]) = -r(i, f);
        }
    }
    return basis;
}

std::optional<AffineSolution> solve_affine(const RationalMatrix& m, std::span<const Rational> b)
{
    if (b.size() != m.rows()) {
        throw std::invalid_argument("solve_affine: rhs length differs from row count");
    }
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            aug(i, j) = m(i, j);
        }
        aug(i, m.cols()) = b[i];
    }
    const auto [r, pivots] = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) {
        return std::nullopt;
    }
    RationalVector particular(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        particular[pivots[i]] = r(i, m.cols());
    }
    return AffineSolution{std::move(particular), kernel_basis(m)};
}

Rational det(const RationalMatrix& m)
{
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("det: matrix is not square");
    }
    if (m.rows() == 0) {
        return Rational(1);
    }
    std::vector<mpz_class> scales;
    auto a = integer_rows(m, &scales);
    const auto fwd = bareiss_forward(a, m.cols());
    if (fwd.pivots.size() < m.rows()) {
        return Rational(0);
    }
    mpz_class denom = 1;
    for (const auto& s : scales) {
        denom *= s;
    }
    Rational d(a.back().back(), denom);
    d.canonicalize();
    return fwd.swapped_odd ? Rational(-d) : d;
}

std::vector<std::size_t> independent_rows(const RationalMatrix& m)
{
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        chosen.push_back(i);
        if (rank(m.select_rows(chosen)) < chosen.size()) {
            chosen.pop_back();
        }
    }
    return chosen;
}

bool lex_less(std::span<const Rational> a, std::span<const Rational> b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace tropibound
