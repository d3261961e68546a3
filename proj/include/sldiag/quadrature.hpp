#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace sldiag {

/// Result of a one-dimensional numerical integration.
struct Integral {
    double value = 0.0;
    /// Computed bound on |value - true integral| (sum of per-panel estimates).
    double error_estimate = 0.0;
    /// Number of integrand evaluations spent.
    std::size_t evaluations = 0;
};

struct IntegrateOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    std::size_t max_evaluations = 1'000'000;
};

/// The adaptive scheme exhausted its evaluation budget before reaching the
/// requested tolerance. best() carries the estimate reached so far.
class quadrature_error : public std::runtime_error {
public:
    quadrature_error(const std::string& what, const Integral& best)
        : std::runtime_error(what), best_(best) {}
    [[nodiscard]] const Integral& best() const noexcept { return best_; }

private:
    Integral best_;
};

/// The integrand returned NaN. abscissa() names the offending point.
class integrand_error : public std::runtime_error {
public:
    integrand_error(const std::string& what, double abscissa)
        : std::runtime_error(what), abscissa_(abscissa) {}
    [[nodiscard]] double abscissa() const noexcept { return abscissa_; }

private:
    double abscissa_;
};

/// Adaptive Gauss-Kronrod (7/15) integration of f over [lower, upper].
///
/// Either bound may be infinite; semi-infinite and doubly infinite intervals
/// are mapped onto finite ones with x = l + t/(1-t) and x = t/(1-t^2).
/// Panels are bisected worst-error-first until the total estimate drops
/// below max(abs_tol, rel_tol*|value|). The rule never evaluates f at panel
/// endpoints, so integrable endpoint singularities (e.g. log at 0) are fine.
///
/// Throws std::invalid_argument unless lower < upper and tolerances are
/// positive, integrand_error on NaN, quadrature_error when the evaluation
/// budget runs out.
Integral integrate(const std::function<double(double)>& f, double lower, double upper,
                   const IntegrateOptions& options = {});

}  // namespace sldiag
