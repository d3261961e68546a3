#include "sldiag/distributions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sldiag {

namespace {

double standard_normal_pdf(double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

double student_t_pdf(double t, double df) {
    const double log_norm = std::lgamma(0.5 * (df + 1.0)) - std::lgamma(0.5 * df) -
                            0.5 * std::log(df * std::numbers::pi);
    return std::exp(log_norm - 0.5 * (df + 1.0) * std::log1p(t * t / df));
}

}  // namespace

ErrorModel::ErrorModel(Kind kind, double scale, double df, double contamination,
                       double inflation)
    : kind_(kind), scale_(scale), df_(df), contamination_(contamination),
      inflation_(inflation) {
    if (!(scale_ > 0.0) || !std::isfinite(scale_)) {
        throw std::invalid_argument("ErrorModel: scale must be positive and finite");
    }
    if (kind_ == Kind::student_t && !(df_ > 3.0 && std::isfinite(df_))) {
        // df <= 3 would make E|E|^3 infinite
        throw std::invalid_argument("ErrorModel: student_t requires df > 3");
    }
    if (kind_ == Kind::contaminated_normal) {
        if (!(contamination_ > 0.0 && contamination_ < 1.0)) {
            throw std::invalid_argument(
                "ErrorModel: contamination_fraction must lie in (0, 1)");
        }
        if (!(inflation_ > 1.0) || !std::isfinite(inflation_)) {
            throw std::invalid_argument("ErrorModel: scale_inflation must exceed 1");
        }
    }
}

ErrorModel ErrorModel::gaussian(double scale) {
    return ErrorModel(Kind::gaussian, scale, 0.0, 0.0, 0.0);
}

ErrorModel ErrorModel::student_t(double df, double scale) {
    return ErrorModel(Kind::student_t, scale, df, 0.0, 0.0);
}

ErrorModel ErrorModel::contaminated_normal(double contamination_fraction,
                                           double scale_inflation, double scale) {
    return ErrorModel(Kind::contaminated_normal, scale, 0.0, contamination_fraction,
                      scale_inflation);
}

ErrorModel ErrorModel::laplace(double scale) {
    return ErrorModel(Kind::laplace, scale, 0.0, 0.0, 0.0);
}

double ErrorModel::density(double e) const {
    const double z = e / scale_;
    double unit = 0.0;
    switch (kind_) {
        case Kind::gaussian:
            unit = standard_normal_pdf(z);
            break;
        case Kind::student_t:
            unit = student_t_pdf(z, df_);
            break;
        case Kind::contaminated_normal:
            unit = (1.0 - contamination_) * standard_normal_pdf(z) +
                   contamination_ * standard_normal_pdf(z / inflation_) / inflation_;
            break;
        case Kind::laplace:
            unit = 0.5 * std::exp(-std::abs(z));
            break;
    }
    return unit / scale_;
}

double ErrorModel::folded_density(double a) const {
    if (a < 0.0 || std::isnan(a)) {
        throw std::domain_error("folded_density: requires a >= 0");
    }
    return 2.0 * density(a);
}

std::string ErrorModel::name() const {
    auto trimmed = [](double v) {
        std::string s = std::to_string(v);
        s.erase(s.find_last_not_of('0') + 1);
        if (!s.empty() && s.back() == '.') s.pop_back();
        return s;
    };
    switch (kind_) {
        case Kind::gaussian:
            return "gaussian";
        case Kind::student_t:
            return "t(" + trimmed(df_) + ")";
        case Kind::contaminated_normal:
            return "contaminated(" + trimmed(contamination_) + "," + trimmed(inflation_) + ")";
        case Kind::laplace:
            return "laplace";
    }
    return "unknown";
}

ErrorModel ErrorModel::rescaled(double c) const {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw std::invalid_argument("ErrorModel::rescaled: factor must be positive");
    }
    ErrorModel copy = *this;
    copy.scale_ *= c;
    return copy;
}

}  // namespace sldiag
