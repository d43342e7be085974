#pragma once

// Exact linear algebra over arbitrary-precision rationals.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tropibound {

/// Arbitrary-precision rational in canonical (lowest terms, positive
/// denominator) form.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p", "-p", "p/q" (optional surrounding whitespace, optional
/// leading U+2212 minus). Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Dense row-major matrix. Values are treated as immutable: every algebraic
/// operation below returns a fresh matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data))
    {
        if (data_.size() != rows_ * cols_) {
            throw std::invalid_argument("Matrix: entry count does not match shape");
        }
    }
    Matrix(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) {
                throw std::invalid_argument("Matrix: ragged initializer");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows)
    {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        std::vector<T> data;
        data.reserve(rows.size() * cols);
        for (const auto& row : rows) {
            if (row.size() != cols) {
                throw std::invalid_argument("Matrix: ragged rows");
            }
            data.insert(data.end(), row.begin(), row.end());
        }
        return Matrix(rows.size(), cols, std::move(data));
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            out.push_back((*this)(i, j));
        }
        return out;
    }

    const std::vector<T>& data() const { return data_; }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    Matrix select_columns(std::span<const std::size_t> cols) const
    {
        Matrix out(rows_, cols.size());
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols.size(); ++k) {
                out(i, k) = (*this)(i, cols[k]);
            }
        }
        return out;
    }

    Matrix select_rows(std::span<const std::size_t> rows) const
    {
        Matrix out(rows.size(), cols_);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            for (std::size_t j = 0; j < cols_; ++j) {
                out(k, j) = (*this)(rows[k], j);
            }
        }
        return out;
    }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntMatrix = Matrix<std::int64_t>;

RationalMatrix to_rational(const IntMatrix& m);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalVector multiply(const RationalMatrix& a, std::span<const Rational> x);
bool is_zero(const RationalMatrix& m);

struct RowEchelon {
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form via fraction-free (Bareiss) forward elimination
/// followed by rational back substitution. The pivot in each column is the
/// first nonzero entry at or below the current row, so the output is
/// deterministic.
RowEchelon rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Rows form a basis of {x : m x = 0}, one row per free column of rref(m).
RationalMatrix kernel_basis(const RationalMatrix& m);

struct AffineSolution {
    RationalVector particular;
    RationalMatrix kernel;  // rows span the homogeneous solutions
};

/// One particular solution plus a kernel basis, or nullopt when m x = b is
/// inconsistent.
std::optional<AffineSolution> solve_affine(const RationalMatrix& m, std::span<const Rational> b);

/// Exact determinant (Bareiss). Throws std::invalid_argument if m is not
/// square.
Rational det(const RationalMatrix& m);

/// Indices of the first maximal set of linearly independent rows, scanning
/// top to bottom.
std::vector<std::size_t> independent_rows(const RationalMatrix& m);

/// Lexicographic order on equal-length vectors.
bool lex_less(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace tropibound
