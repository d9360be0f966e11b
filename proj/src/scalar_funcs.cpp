// SPDX-License-Identifier: Apache-2.0
#include "neumat/scalar_funcs.hpp"

#include <cmath>
#include <limits>

#include "neumat/common.hpp"
#include "neumat/quadrature.hpp"

namespace neumat {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
constexpr double kTwoInvSqrtPi = 1.12837916709551257390;

double normal_cdf(double x) { return 0.5 * (1.0 + std::erf(x * kInvSqrt2)); }
double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

// GELU'(x) = Phi(x) + x*phi(x) has a single zero (the function minimum).
// Located once by bisection; GELU decreases left of it and increases right.
double gelu_stationary_point() {
    static const double value = [] {
        double lo = -1.0, hi = -0.5;
        for (int i = 0; i < 200; ++i) {
            double mid = 0.5 * (lo + hi);
            if (gelu_derivative(mid) < 0.0)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }();
    return value;
}

}  // namespace

double gelu(double x) { return x * normal_cdf(x); }
double gelu_derivative(double x) { return normal_cdf(x) + x * normal_pdf(x); }

double ScalarFunc::segment_mean(double a, double b) const {
    if (a == b) return f(a);
    if (antiderivative) {
        return (antiderivative(b) - antiderivative(a)) / (b - a);
    }
    return integrate_adaptive(f, a, b, 1e-12, 40) / (b - a);
}

void ScalarFunc::check_range(double r_min, double r_max) const {
    if (!(r_min < r_max)) {
        throw ValidationError("range is empty or degenerate",
                              {{"r_min", real_to_string(r_min)},
                               {"r_max", real_to_string(r_max)}});
    }
    if (!std::isfinite(r_min) || !std::isfinite(r_max)) {
        throw ValidationError("range endpoints must be finite");
    }
    if (pole && r_min <= *pole && *pole <= r_max) {
        throw ValidationError("range contains a pole of " + name,
                              {{"pole", real_to_string(*pole)}});
    }
    if (domain_min && r_min < *domain_min) {
        throw ValidationError("range leaves the domain of " + name,
                              {{"domain_min", real_to_string(*domain_min)}});
    }
}

std::pair<double, double> ScalarFunc::monotone_interval(double x) const {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    if (domain_min && *domain_min > lo) lo = *domain_min;
    for (double s : monotone_splits) {
        if (s <= x && s > lo) lo = s;
        if (s > x && s < hi) hi = s;
    }
    if (pole) {
        if (*pole <= x && *pole > lo) lo = *pole;
        if (*pole > x && *pole < hi) hi = *pole;
    }
    return {lo, hi};
}

ScalarFunc scalar_func(FuncKind kind) {
    ScalarFunc s;
    switch (kind) {
        case FuncKind::Exp:
            s.name = "exp";
            s.f = [](double x) { return std::exp(x); };
            s.df = [](double x) { return std::exp(x); };
            s.antiderivative = [](double x) { return std::exp(x); };
            break;
        case FuncKind::Reciprocal:
            s.name = "recip";
            s.f = [](double x) { return 1.0 / x; };
            s.df = [](double x) { return -1.0 / (x * x); };
            s.antiderivative = [](double x) { return std::log(std::abs(x)); };
            s.pole = 0.0;
            break;
        case FuncKind::Sqrt:
            s.name = "sqrt";
            s.f = [](double x) { return std::sqrt(x); };
            s.df = [](double x) { return 0.5 / std::sqrt(x); };
            s.antiderivative = [](double x) { return 2.0 / 3.0 * x * std::sqrt(x); };
            s.domain_min = 0.0;
            break;
        case FuncKind::Rsqrt:
            s.name = "rsqrt";
            s.f = [](double x) { return 1.0 / std::sqrt(x); };
            s.df = [](double x) { return -0.5 / (x * x * std::sqrt(x)); };
            s.antiderivative = [](double x) { return 2.0 * std::sqrt(x); };
            s.pole = 0.0;
            s.domain_min = 0.0;
            break;
        case FuncKind::Gelu:
            s.name = "gelu";
            s.f = [](double x) { return gelu(x); };
            s.df = [](double x) { return gelu_derivative(x); };
            s.monotone_splits = {gelu_stationary_point()};
            break;
        case FuncKind::Tanh:
            s.name = "tanh";
            s.f = [](double x) { return std::tanh(x); };
            s.df = [](double x) {
                double t = std::tanh(x);
                return 1.0 - t * t;
            };
            s.antiderivative = [](double x) { return std::log(std::cosh(x)); };
            break;
        case FuncKind::Sigmoid:
            s.name = "sigmoid";
            s.f = [](double x) { return 1.0 / (1.0 + std::exp(-x)); };
            s.df = [](double x) {
                double v = 1.0 / (1.0 + std::exp(-x));
                return v * (1.0 - v);
            };
            s.antiderivative = [](double x) { return x + std::log1p(std::exp(-x)); };
            break;
        case FuncKind::Erf:
            s.name = "erf";
            s.f = [](double x) { return std::erf(x); };
            s.df = [](double x) { return kTwoInvSqrtPi * std::exp(-x * x); };
            break;
        case FuncKind::Square:
            s.name = "square";
            s.f = [](double x) { return x * x; };
            s.df = [](double x) { return 2.0 * x; };
            s.antiderivative = [](double x) { return x * x * x / 3.0; };
            s.monotone_splits = {0.0};
            break;
    }
    return s;
}

std::optional<FuncKind> func_kind_from_name(const std::string& name) {
    if (name == "exp") return FuncKind::Exp;
    if (name == "recip" || name == "reciprocal") return FuncKind::Reciprocal;
    if (name == "sqrt") return FuncKind::Sqrt;
    if (name == "rsqrt") return FuncKind::Rsqrt;
    if (name == "gelu") return FuncKind::Gelu;
    if (name == "tanh") return FuncKind::Tanh;
    if (name == "sigmoid") return FuncKind::Sigmoid;
    if (name == "erf") return FuncKind::Erf;
    if (name == "square") return FuncKind::Square;
    return std::nullopt;
}

std::string func_kind_name(FuncKind kind) {
    return scalar_func(kind).name;
}

}  // namespace neumat
