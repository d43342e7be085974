#pragma once

// Shared fixtures and random generators for the test executables.

#include "tropibound/exact_arith.hpp"
#include "tropibound/oriented_matroid.hpp"
#include "tropibound/vertical_systems.hpp"

#include <algorithm>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace tb_test {

using namespace tropibound;

inline RationalVector rv(std::initializer_list<long> xs)
{
    RationalVector out;
    for (auto x : xs) {
        out.emplace_back(x);
    }
    return out;
}

inline RationalVector rq(std::initializer_list<const char*> xs)
{
    RationalVector out;
    for (auto x : xs) {
        out.push_back(parse_rational(x));
    }
    return out;
}

/// Signed circuit from 1-based index lists.
inline SignedCircuit sc(std::initializer_list<std::size_t> pos, std::initializer_list<std::size_t> neg)
{
    SignedCircuit c;
    for (auto i : pos) {
        c.positive.insert(i - 1);
    }
    for (auto i : neg) {
        c.negative.insert(i - 1);
    }
    return c;
}

inline RationalMatrix running_n()
{
    return {{-3, 1, -1, -2, 2}, {-1, 1, -1, -1, 1}};
}

inline IntMatrix running_a()
{
    return {{0, 2, 0, 2, 1}, {0, 0, 2, 2, 1}};
}

inline RationalVector running_h()
{
    return rv({0, 0, 0, 0, -1});
}

inline VerticalSystem running_system()
{
    return {running_n(), running_a(), running_h()};
}

inline CRNModel hhk_crn()
{
    CRNModel m;
    m.n_stoich = {{-1, 0, 0, 1, 0, 0},  {1, -1, 0, 0, 1, 0},  {0, 1, -1, -1, 0, 0},
                  {0, 0, 1, 0, -1, 0},  {0, 0, 0, -1, -1, 1}, {0, 0, 0, 1, 1, -1}};
    m.b = {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0},
           {0, 0, 0, 0, 1, 0}, {0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 1}};
    m.w = {{1, 1, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}};
    m.t = rv({10, 20});
    m.h = rv({7, -6, -2, -3, -3, 3});
    return m;
}

inline std::filesystem::path data_dir()
{
    return TROPIBOUND_DATA_DIR;
}

/// Deterministic generator for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }

    Rational rational(long num_range, long den_max)
    {
        Rational q(uniform(-num_range, num_range), uniform(1, den_max));
        q.canonicalize();
        return q;
    }

    RationalVector rational_vector(std::size_t n, long num_range, long den_max)
    {
        RationalVector v;
        for (std::size_t i = 0; i < n; ++i) {
            v.push_back(rational(num_range, den_max));
        }
        return v;
    }

    RationalMatrix int_valued_matrix(std::size_t rows, std::size_t cols, long range)
    {
        RationalMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                m(i, j) = uniform(-range, range);
            }
        }
        return m;
    }

    /// Full row rank n x r exponent matrix with pairwise distinct columns and
    /// the all-ones vector outside its row span.
    IntMatrix exponent_matrix(std::size_t n, std::size_t r, long lo, long hi)
    {
        double distinct = 1;
        for (std::size_t i = 0; i < n; ++i) {
            distinct *= static_cast<double>(hi - lo + 1);
        }
        if (distinct < static_cast<double>(r)) {
            throw std::invalid_argument("exponent_matrix: entry range too small for distinct columns");
        }
        while (true) {
            IntMatrix a(n, r);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < r; ++j) {
                    a(i, j) = uniform(lo, hi);
                }
            }
            std::set<std::vector<std::int64_t>> cols;
            for (std::size_t j = 0; j < r; ++j) {
                std::vector<std::int64_t> c;
                for (std::size_t i = 0; i < n; ++i) {
                    c.push_back(a(i, j));
                }
                cols.insert(c);
            }
            if (cols.size() != r) {
                continue;
            }
            const RationalMatrix ar = to_rational(a);
            if (rank(ar) != n) {
                continue;
            }
            RationalMatrix with_ones(n + 1, r);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < r; ++j) {
                    with_ones(i, j) = ar(i, j);
                }
            }
            for (std::size_t j = 0; j < r; ++j) {
                with_ones(n, j) = 1;
            }
            if (rank(with_ones) == n) {
                continue;
            }
            return a;
        }
    }

    /// n x r coefficient matrix of rank n.
    RationalMatrix coefficient_matrix(std::size_t n, std::size_t r, long range)
    {
        while (true) {
            auto c = int_valued_matrix(n, r, range);
            if (rank(c) == n) {
                return c;
            }
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace tb_test
