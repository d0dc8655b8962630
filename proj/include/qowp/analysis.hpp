#pragma once

// Numerics for the decay and normalization checks: finite-range
// negligibility verdicts on a doubling grid, the Cauchy density, and the
// quadrature of 1 / (x^2 + x + 1) against its closed-form constant
// N = 2 pi / sqrt(3). Verdicts are about the sampled range only; no
// asymptotic claim is ever produced.

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qowp/core.hpp"

namespace qowp::analysis {

struct RealFunction {
    std::function<double(double)> evaluate;
    std::string description;
};

enum class RangeVerdict { negligible_on_range, not_negligible_on_range };

struct NegligibilityReport {
    std::vector<std::int64_t> grid;
    std::vector<double> products;  // p(n) * n^degree
    RangeVerdict verdict = RangeVerdict::not_negligible_on_range;
};

/// Evaluates p(n) * n^degree on a doubling grid up to n_max (denser when
/// points_per_octave > 1). Negligible on this range means the product is
/// non-increasing over the last four grid points and ends below 1e-6.
inline NegligibilityReport negligibility_check(const RealFunction& p, int poly_degree,
                                               std::int64_t n_max, int points_per_octave = 1) {
    if (n_max < 8) throw std::domain_error("analysis: need n_max >= 8");
    if (poly_degree < 1) throw std::domain_error("analysis: need poly_degree >= 1");
    if (points_per_octave < 1) throw std::domain_error("analysis: need points_per_octave >= 1");

    NegligibilityReport report;
    for (int k = 0;; ++k) {
        const double raw = std::pow(2.0, static_cast<double>(k) / points_per_octave);
        const auto n = static_cast<std::int64_t>(std::llround(raw));
        if (n > n_max) break;
        if (!report.grid.empty() && report.grid.back() >= n) continue;
        report.grid.push_back(n);
    }
    for (std::int64_t n : report.grid) {
        const double value = p.evaluate(static_cast<double>(n));
        if (std::isnan(value))
            throw std::domain_error("analysis: evaluator returned NaN at n=" + std::to_string(n));
        report.products.push_back(value * std::pow(static_cast<double>(n), poly_degree));
    }

    const std::size_t m = report.products.size();
    bool tail_decreasing = m >= 4;
    for (std::size_t i = m - 3; tail_decreasing && i < m; ++i)
        if (report.products[i] > report.products[i - 1]) tail_decreasing = false;
    const bool small_end = m > 0 && report.products.back() < 1e-6;
    report.verdict = tail_decreasing && small_end ? RangeVerdict::negligible_on_range
                                                  : RangeVerdict::not_negligible_on_range;
    return report;
}

/// (1/pi) alpha / ((x - mu)^2 + alpha^2); alpha is the half width at half
/// maximum, mu the median.
inline double cauchy_pdf(double x, double mu, double alpha) {
    if (!(alpha > 0)) throw std::domain_error("analysis: cauchy scale must be positive");
    const double d = x - mu;
    return (1.0 / 3.14159265358979323846) * alpha / (d * d + alpha * alpha);
}

/// Composite Simpson rule with an even panel count.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      std::int64_t panels) {
    if (panels < 2) throw std::domain_error("analysis: need at least two panels");
    if (panels % 2) ++panels;
    const double h = (b - a) / static_cast<double>(panels);
    double odd = 0, even = 0;
    for (std::int64_t i = 1; i < panels; i += 2) odd += f(a + h * static_cast<double>(i));
    for (std::int64_t i = 2; i < panels; i += 2) even += f(a + h * static_cast<double>(i));
    return (f(a) + f(b) + 4.0 * odd + 2.0 * even) * h / 3.0;
}

inline double reciprocal_poly(double x) { return 1.0 / (x * x + x + 1.0); }

/// Tail mass bound past |T|: integrand is below 1/(x -+ 1)^2 on either side.
inline double reciprocal_poly_tail_bound(double T) { return 1.0 / (T - 1.0); }

struct NormalizationResult {
    double integral = 0;    // truncated quadrature plus both tail bounds
    double n_const = 0;     // 2 pi / sqrt(3)
    double normalized = 0;  // integral / n_const, approaches 1
};

/// Integrates 1/(x^2+x+1) over [-T, T], adds the two analytic tail bounds,
/// and divides by the closed-form total.
inline NormalizationResult reciprocal_poly_normalization(double T, std::int64_t steps) {
    if (T < 100) throw std::domain_error("analysis: need T >= 100");
    if (steps < 10000) throw std::domain_error("analysis: need steps >= 10^4");
    NormalizationResult r;
    r.integral = simpson(reciprocal_poly, -T, T, steps) + 2.0 * reciprocal_poly_tail_bound(T);
    r.n_const = 2.0 * 3.14159265358979323846 / std::sqrt(3.0);
    r.normalized = r.integral / r.n_const;
    return r;
}

/// Mass left of the median -1/2: half the total by symmetry.
inline double reciprocal_poly_half_line(double T, std::int64_t steps) {
    if (T < 100) throw std::domain_error("analysis: need T >= 100");
    if (steps < 10000) throw std::domain_error("analysis: need steps >= 10^4");
    return simpson(reciprocal_poly, -T, -0.5, steps) + reciprocal_poly_tail_bound(T);
}

// ---- exports ----

inline nlohmann::json negligibility_to_json(const NegligibilityReport& r) {
    return {{"grid", r.grid},
            {"products", r.products},
            {"verdict", r.verdict == RangeVerdict::negligible_on_range
                            ? "negligible_on_range"
                            : "not_negligible_on_range"}};
}

inline nlohmann::json normalization_to_json(double T, std::int64_t steps,
                                            const NormalizationResult& r) {
    return {{"T", T},
            {"steps", steps},
            {"integral", r.integral},
            {"N", r.n_const},
            {"normalized", r.normalized}};
}

}  // namespace qowp::analysis
