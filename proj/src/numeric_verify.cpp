#include "tropibound/numeric_verify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace tropibound {

namespace {

// Row-equilibrated value and Jacobian with respect to y = log x. Returns
// false when something is not finite.
bool evaluate(const InstantiatedSystem& f, const Eigen::VectorXd& y, Eigen::VectorXd& value, Eigen::MatrixXd* jac)
{
    const auto n = static_cast<Eigen::Index>(f.n);
    value.setZero(n);
    if (jac != nullptr) {
        jac->setZero(n, n);
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        double scale = 0.0;
        for (const auto& term : f.equations[static_cast<std::size_t>(i)]) {
            double e = 0.0;
            for (Eigen::Index k = 0; k < n; ++k) {
                e += static_cast<double>(term.exponent[static_cast<std::size_t>(k)]) * y[k];
            }
            const double monomial = term.coefficient * std::exp(e);
            scale += std::abs(monomial);
            value[i] += monomial;
            if (jac != nullptr) {
                for (Eigen::Index k = 0; k < n; ++k) {
                    (*jac)(i, k) += monomial * static_cast<double>(term.exponent[static_cast<std::size_t>(k)]);
                }
            }
        }
        if (!std::isfinite(scale)) {
            return false;
        }
        if (scale > 0.0) {
            value[i] /= scale;
            if (jac != nullptr) {
                jac->row(i) /= scale;
            }
        }
    }
    return value.allFinite() && (jac == nullptr || jac->allFinite());
}

double log_distance(const std::vector<double>& x, const std::vector<double>& y)
{
    double d = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        d = std::max(d, std::abs(std::log(x[k]) - std::log(y[k])));
    }
    return d;
}

std::vector<double> tropical_start(const RationalVector& v, double t)
{
    std::vector<double> x;
    for (const auto& c : v) {
        x.push_back(std::pow(t, c.get_d()));
    }
    return x;
}

bool valid(const RootWitness& w, double tol)
{
    return w.residual <= tol && std::all_of(w.x.begin(), w.x.end(), [](double c) { return std::isfinite(c) && c > 0.0; });
}

}  // namespace

InstantiatedSystem instantiate(const VerticalSystem& system, double t)
{
    if (!(t > 0.0 && t < 1.0)) {
        throw std::invalid_argument("instantiate: t must lie in (0, 1)");
    }
    check_shapes(system);
    const RationalMatrix c = square_rows(system.c);
    if (c.rows() != system.a.rows()) {
        throw std::invalid_argument("instantiate: rank(C) differs from the number of variables");
    }
    InstantiatedSystem f;
    f.n = system.a.rows();
    for (std::size_t i = 0; i < c.rows(); ++i) {
        std::vector<Term> eq;
        for (std::size_t j = 0; j < c.cols(); ++j) {
            if (c(i, j) == 0) {
                continue;
            }
            Term term;
            term.coefficient = c(i, j).get_d() * std::pow(t, system.h[j].get_d());
            for (std::size_t k = 0; k < f.n; ++k) {
                term.exponent.push_back(system.a(k, j));
            }
            eq.push_back(std::move(term));
        }
        f.equations.push_back(std::move(eq));
    }
    return f;
}

double residual(const InstantiatedSystem& f, std::span<const double> x)
{
    Eigen::VectorXd y(static_cast<Eigen::Index>(f.n));
    for (std::size_t k = 0; k < f.n; ++k) {
        y[static_cast<Eigen::Index>(k)] = std::log(x[k]);
    }
    Eigen::VectorXd value;
    if (!evaluate(f, y, value, nullptr)) {
        return std::numeric_limits<double>::infinity();
    }
    return f.n == 0 ? 0.0 : value.cwiseAbs().maxCoeff();
}

std::optional<RootWitness> newton(const InstantiatedSystem& f, std::vector<double> x0, double tol, int max_iter)
{
    if (x0.size() != f.n || f.equations.size() != f.n) {
        throw std::invalid_argument("newton: start point and system sizes differ");
    }
    if (!std::all_of(x0.begin(), x0.end(), [](double c) { return c > 0.0 && std::isfinite(c); })) {
        throw std::invalid_argument("newton: start point must be strictly positive");
    }
    const auto n = static_cast<Eigen::Index>(f.n);
    Eigen::VectorXd y(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        y[k] = std::log(x0[static_cast<std::size_t>(k)]);
    }
    Eigen::VectorXd value;
    Eigen::MatrixXd jac;
    if (!evaluate(f, y, value, &jac)) {
        return std::nullopt;
    }
    double merit = n == 0 ? 0.0 : value.cwiseAbs().maxCoeff();
    constexpr double max_step = 5.0;
    for (int iter = 0; iter < max_iter && merit >= tol; ++iter) {
        Eigen::VectorXd step = jac.colPivHouseholderQr().solve(-value);
        if (!step.allFinite()) {
            return std::nullopt;
        }
        const double len = step.cwiseAbs().maxCoeff();
        if (len > max_step) {
            step *= max_step / len;
        }
        bool moved = false;
        for (double lambda = 1.0; lambda > 1e-10; lambda /= 2) {
            const Eigen::VectorXd trial = y + lambda * step;
            Eigen::VectorXd tv;
            Eigen::MatrixXd tj;
            if (!evaluate(f, trial, tv, &tj)) {
                continue;
            }
            const double tm = tv.cwiseAbs().maxCoeff();
            if (tm < merit) {
                y = trial;
                value = tv;
                jac = tj;
                merit = tm;
                moved = true;
                break;
            }
        }
        if (!moved) {
            return std::nullopt;
        }
    }
    if (!(merit < tol)) {
        return std::nullopt;
    }
    RootWitness w;
    for (Eigen::Index k = 0; k < n; ++k) {
        const double xk = std::exp(y[k]);
        if (!(xk > 0.0) || !std::isfinite(xk)) {
            return std::nullopt;
        }
        w.x.push_back(xk);
    }
    w.residual = residual(f, w.x);
    if (n > 0) {
        const Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
        const auto& s = svd.singularValues();
        w.jacobian_ok = s[n - 1] > 1e-12 * s[0];
    }
    if (!valid(w, tol)) {
        return std::nullopt;
    }
    return w;
}

std::vector<RootWitness> count_roots(const VerticalSystem& system, const IntersectionReport& report,
                                     const CountOptions& options)
{
    const InstantiatedSystem f = instantiate(system, options.t);
    const std::size_t n = f.n;

    struct Start {
        std::vector<double> x;
        std::optional<RationalVector> origin;
    };
    std::vector<Start> starts;
    double spread = 1.0;
    for (const auto& p : report.points) {
        starts.push_back({tropical_start(p.v, options.t), p.v});
        for (const auto& c : p.v) {
            spread = std::max(spread, std::abs(c.get_d()) + 1.0);
        }
    }
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> exponent(-spread, spread);
    for (std::size_t s = 0; s < options.multistarts; ++s) {
        std::vector<double> x(n);
        for (auto& c : x) {
            c = std::pow(options.t, exponent(rng));
        }
        starts.push_back({std::move(x), std::nullopt});
    }

    std::vector<double> schedule;
    for (double s : {0.1, 0.05}) {
        if (s > options.t) {
            schedule.push_back(s);
        }
    }

    const auto runs = parallel_map(
        starts.size(),
        [&](std::size_t i) -> std::optional<RootWitness> {
            auto r = newton(f, starts[i].x, options.tol, options.max_iter);
            if (!r && starts[i].origin && !schedule.empty()) {
                std::vector<double> x = tropical_start(*starts[i].origin, schedule.front());
                for (double s : schedule) {
                    if (auto step = newton(instantiate(system, s), x, options.tol, options.max_iter)) {
                        x = step->x;
                    }
                }
                r = newton(f, x, options.tol, options.max_iter);
            }
            if (r) {
                r->seed = starts[i].origin;
            }
            return r;
        },
        options.exec);

    std::vector<RootWitness> kept;
    for (const auto& r : runs) {
        if (!r || !valid(*r, options.tol)) {
            continue;
        }
        const bool fresh = std::all_of(kept.begin(), kept.end(), [&](const RootWitness& k) {
            return log_distance(k.x, r->x) > options.separation;
        });
        if (fresh) {
            kept.push_back(*r);
        }
    }
    return kept;
}

}  // namespace tropibound
