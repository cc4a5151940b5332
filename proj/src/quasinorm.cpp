#include "uncert/quasinorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace uncert {

PExponent PExponent::of(double p) {
    if (std::isnan(p) || p <= 0.0) {
        throw InputError("exponent p must satisfy p > 0");
    }
    if (std::isinf(p)) {
        return infinity();
    }
    Regime r = p < 1.0 ? Regime::sub_one : (p == 1.0 ? Regime::one : Regime::super_one);
    return PExponent(p, r);
}

PExponent PExponent::infinity() {
    return PExponent(std::numeric_limits<double>::infinity(), Regime::infinite);
}

void validate_coeffs(const CoeffSeq& a) {
    if (a.size() < 1) {
        throw InputError("coefficient sequence must have length >= 1");
    }
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (!std::isfinite(a[i].real()) || !std::isfinite(a[i].imag())) {
            throw InputError("coefficient sequence has a non-finite entry");
        }
    }
}

double pow_p(double magnitude, double p) {
    if (magnitude == 0.0) return 0.0;
    return std::exp(p * std::log(magnitude));
}

double p_quasinorm(const CoeffSeq& a, const PExponent& p) {
    validate_coeffs(a);
    switch (p.regime()) {
        case PExponent::Regime::infinite: {
            double m = 0.0;
            for (Eigen::Index i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i]));
            return m;
        }
        case PExponent::Regime::one: {
            double s = 0.0;
            for (Eigen::Index i = 0; i < a.size(); ++i) s += std::abs(a[i]);
            return s;
        }
        case PExponent::Regime::sub_one: {
            double s = 0.0;
            for (Eigen::Index i = 0; i < a.size(); ++i) s += pow_p(std::abs(a[i]), p.value());
            return s;
        }
        case PExponent::Regime::super_one: {
            double s = 0.0;
            for (Eigen::Index i = 0; i < a.size(); ++i) s += pow_p(std::abs(a[i]), p.value());
            return s == 0.0 ? 0.0 : std::pow(s, 1.0 / p.value());
        }
    }
    return 0.0; // unreachable
}

Eigen::Index support_count(const CoeffSeq& a, const SupportPolicy& policy) {
    validate_coeffs(a);
    double peak = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i) peak = std::max(peak, std::abs(a[i]));
    const double threshold = std::max(policy.abs_floor, policy.rel_tol * peak);
    Eigen::Index n = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (std::abs(a[i]) > threshold) ++n;
    }
    return n;
}

GarlingReport garling_check(const CoeffSeq& a, const PExponent& p) {
    validate_coeffs(a);
    if (!p.is_sub_one()) {
        throw RegimeError("garling_check requires p in (0,1)");
    }
    double abs_sum = 0.0;
    double rhs = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const double m = std::abs(a[i]);
        abs_sum += m;
        rhs += pow_p(m, p.value());
    }
    const double lhs = pow_p(abs_sum, p.value());
    const double tol = 1e-12 * std::max(1.0, rhs);
    return GarlingReport{lhs, rhs, lhs <= rhs + tol, std::abs(lhs - rhs) <= tol};
}

ContinuousGarlingWitness continuous_garling_counterexample(const PExponent& p,
                                                           double measure,
                                                           double constant) {
    if (!p.is_sub_one()) {
        throw RegimeError("counterexample requires p in (0,1)");
    }
    if (!(measure > 0.0 && measure < 1.0) || !(constant > 0.0) ||
        !std::isfinite(measure) || !std::isfinite(constant)) {
        throw InputError("witness needs measure in (0,1) and constant > 0");
    }
    const double lhs = pow_p(constant * measure, p.value());
    const double rhs = pow_p(constant, p.value()) * measure;
    return ContinuousGarlingWitness{measure, constant, lhs, rhs};
}

} // namespace uncert
