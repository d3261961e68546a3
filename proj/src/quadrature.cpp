#include "sldiag/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace sldiag {

namespace {

// Gauss-Kronrod 7/15 pair on [-1, 1]. Kronrod abscissae (positive half,
// descending) with their weights, plus the embedded 7-point Gauss weights.
constexpr double kKronrodNodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0,
};
constexpr double kKronrodWeights[8] = {
    0.02293532201052922, 0.06309209262997855, 0.10479001032225018, 0.14065325971552592,
    0.16900472663926790, 0.19035057806478540, 0.20443294007529889, 0.20948214108472783,
};
constexpr double kGaussWeights[4] = {
    0.12948496616886969, 0.27970539148927666, 0.38183005050511894, 0.41795918367346938,
};

struct Panel {
    double a, b;
    double value;
    double error;
};

struct WorseError {
    bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

// One 15-point Kronrod evaluation over [a, b] with the QUADPACK-style
// scaled error estimate.
Panel evaluate_panel(const std::function<double(double)>& f, double a, double b,
                     std::size_t& evaluations) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double fv[15];
    int n = 0;
    auto eval = [&](double x) {
        const double v = f(x);
        ++evaluations;
        if (std::isnan(v)) {
            throw integrand_error("integrand returned NaN at x = " + std::to_string(x), x);
        }
        fv[n++] = v;
        return v;
    };

    const double fc = eval(center);
    double result_gauss = kGaussWeights[3] * fc;
    double result_kronrod = kKronrodWeights[7] * fc;
    double result_abs = std::abs(result_kronrod);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const double f1 = eval(center - dx);
        const double f2 = eval(center + dx);
        const double sum = f1 + f2;
        result_kronrod += kKronrodWeights[j] * sum;
        result_abs += kKronrodWeights[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) {
            result_gauss += kGaussWeights[j / 2] * sum;
        }
    }

    // resasc: Kronrod integral of |f - mean|, used to scale the raw
    // Gauss/Kronrod difference into an error bound.
    const double mean = result_kronrod * 0.5;
    double result_asc = kKronrodWeights[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j) {
        result_asc += kKronrodWeights[j] *
                      (std::abs(fv[1 + 2 * j] - mean) + std::abs(fv[2 + 2 * j] - mean));
    }

    const double value = result_kronrod * half;
    result_abs *= std::abs(half);
    result_asc *= std::abs(half);
    double err = std::abs((result_kronrod - result_gauss) * half);
    if (result_asc != 0.0 && err != 0.0) {
        err = result_asc * std::min(1.0, std::pow(200.0 * err / result_asc, 1.5));
    }
    const double eps = std::numeric_limits<double>::epsilon();
    const double min_err = std::numeric_limits<double>::min();
    if (result_abs > min_err / (50.0 * eps)) {
        err = std::max(err, 50.0 * eps * result_abs);
    }
    return Panel{a, b, value, err};
}

struct Transformed {
    std::function<double(double)> f;
    double lower, upper;
};

// Map the requested interval onto a finite one. The wrapped integrand
// returns 0 wherever the substitution degenerates in floating point
// (only reachable when the tail contribution is negligible anyway).
Transformed transform_interval(const std::function<double(double)>& f, double lower,
                               double upper) {
    const bool lower_inf = std::isinf(lower);
    const bool upper_inf = std::isinf(upper);
    if (!lower_inf && !upper_inf) {
        return {f, lower, upper};
    }
    if (lower_inf && upper_inf) {
        // x = t/(1 - t^2), t in (-1, 1)
        auto ft = [f](double t) {
            const double d = 1.0 - t * t;
            if (!(d > 0.0)) return 0.0;
            const double x = t / d;
            if (!std::isfinite(x)) return 0.0;
            return f(x) * (1.0 + t * t) / (d * d);
        };
        return {ft, -1.0, 1.0};
    }
    if (!lower_inf) {
        // x = l + t/(1 - t), t in [0, 1)
        const double l = lower;
        auto ft = [f, l](double t) {
            const double d = 1.0 - t;
            if (!(d > 0.0)) return 0.0;
            const double x = l + t / d;
            if (!std::isfinite(x)) return 0.0;
            return f(x) / (d * d);
        };
        return {ft, 0.0, 1.0};
    }
    // x = u - t/(1 - t)
    const double u = upper;
    auto ft = [f, u](double t) {
        const double d = 1.0 - t;
        if (!(d > 0.0)) return 0.0;
        const double x = u - t / d;
        if (!std::isfinite(x)) return 0.0;
        return f(x) / (d * d);
    };
    return {ft, 0.0, 1.0};
}

}  // namespace

Integral integrate(const std::function<double(double)>& f, double lower, double upper,
                   const IntegrateOptions& options) {
    if (std::isnan(lower) || std::isnan(upper) || !(lower < upper)) {
        throw std::invalid_argument("integrate: requires lower < upper");
    }
    if (!(options.abs_tol > 0.0) || !(options.rel_tol > 0.0)) {
        throw std::invalid_argument("integrate: tolerances must be positive");
    }

    const Transformed t = transform_interval(f, lower, upper);
    std::size_t evaluations = 0;

    std::priority_queue<Panel, std::vector<Panel>, WorseError> panels;
    panels.push(evaluate_panel(t.f, t.lower, t.upper, evaluations));
    double value = panels.top().value;
    double error = panels.top().error;
    double stuck_error = 0.0;  // panels too narrow to bisect further

    while (error > std::max(options.abs_tol, options.rel_tol * std::abs(value))) {
        if (evaluations + 30 > options.max_evaluations) {
            throw quadrature_error(
                "integrate: evaluation budget exhausted",
                Integral{value, std::max(error, 0.0) + stuck_error, evaluations});
        }
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            stuck_error += worst.error;
            error -= worst.error;
            continue;
        }
        const Panel left = evaluate_panel(t.f, worst.a, mid, evaluations);
        const Panel right = evaluate_panel(t.f, mid, worst.b, evaluations);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    return Integral{value, std::max(error, 0.0) + stuck_error, evaluations};
}

}  // namespace sldiag
