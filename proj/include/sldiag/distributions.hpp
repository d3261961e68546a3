#pragma once

#include <string>

namespace sldiag {

/// A symmetric zero-mean error distribution with an evaluable density.
///
/// Four families are provided: Gaussian, Student-t, contaminated normal
/// (a scale mixture of two centered normals) and Laplace. Parameters are
/// validated at construction so density evaluation never fails; every
/// model has a finite third absolute moment (for Student-t this forces
/// df > 3).
class ErrorModel {
public:
    enum class Kind { gaussian, student_t, contaminated_normal, laplace };

    static ErrorModel gaussian(double scale = 1.0);
    /// Standard t density with df degrees of freedom (df need not be an
    /// integer), optionally rescaled.
    static ErrorModel student_t(double df, double scale = 1.0);
    /// (1 - eps) N(0, scale^2) + eps N(0, (inflation*scale)^2): a model of
    /// occasional gross errors.
    static ErrorModel contaminated_normal(double contamination_fraction = 0.05,
                                          double scale_inflation = 3.0, double scale = 1.0);
    /// Density exp(-|e|/scale) / (2*scale).
    static ErrorModel laplace(double scale = 1.0);

    /// f(e).
    [[nodiscard]] double density(double e) const;

    /// Density of A = |E|: g(a) = f(a) + f(-a), which is 2 f(a) here since
    /// every model is symmetric. Throws std::domain_error for a < 0.
    [[nodiscard]] double folded_density(double a) const;

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] double scale() const noexcept { return scale_; }
    [[nodiscard]] double df() const noexcept { return df_; }
    [[nodiscard]] double contamination_fraction() const noexcept { return contamination_; }
    [[nodiscard]] double scale_inflation() const noexcept { return inflation_; }

    /// "gaussian", "t(5)", "contaminated(0.05,3)" or "laplace".
    [[nodiscard]] std::string name() const;

    /// Copy of this model with the scale multiplied by c > 0.
    [[nodiscard]] ErrorModel rescaled(double c) const;

private:
    ErrorModel(Kind kind, double scale, double df, double contamination, double inflation);

    Kind kind_;
    double scale_;
    double df_;
    double contamination_;
    double inflation_;
};

}  // namespace sldiag
