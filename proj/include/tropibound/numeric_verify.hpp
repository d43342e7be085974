#pragma once

// Floating-point witnesses for small t: Newton's method in log coordinates
// seeded from tropical points. Results are empirical, never certificates.

#include "tropibound/parallel.hpp"
#include "tropibound/tropical_intersection.hpp"
#include "tropibound/vertical_systems.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tropibound {

struct Term {
    double coefficient = 0.0;
    std::vector<std::int64_t> exponent;
};

struct InstantiatedSystem {
    std::size_t n = 0;
    std::vector<std::vector<Term>> equations;
};

/// Rank-selected rows of C with coefficients C_ij * t^h_j. Requires 0 < t < 1
/// and rank(C) = rows(A).
InstantiatedSystem instantiate(const VerticalSystem& system, double t);

/// max_i |f_i(x)| / sum_j |term_ij(x)|: the size of each equation relative to
/// the magnitude of its terms.
double residual(const InstantiatedSystem& f, std::span<const double> x);

struct RootWitness {
    std::vector<double> x;
    double residual = 0.0;
    bool jacobian_ok = false;
    std::optional<RationalVector> seed;  // tropical point, or none for a random start
};

std::optional<RootWitness> newton(const InstantiatedSystem& f, std::vector<double> x0, double tol = 1e-9,
                                  int max_iter = 100);

struct CountOptions {
    double t = 0.01;
    double tol = 1e-9;
    int max_iter = 100;
    std::size_t multistarts = 32;
    std::uint64_t seed = 20240611;
    double separation = 1e-4;  // max-norm distance in log coordinates
    Exec exec = Exec::Parallel;
};

/// One tropical-seeded run per intersection point (with a continuation in t
/// from 0.1 and 0.05 when the direct run fails), then random log-uniform
/// multistarts. Distinct roots only, tropical seeds first.
std::vector<RootWitness> count_roots(const VerticalSystem& system, const IntersectionReport& report,
                                     const CountOptions& options = {});

}  // namespace tropibound
