// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace neumat {

enum class FuncKind {
    Exp,
    Reciprocal,
    Sqrt,
    Rsqrt,
    Gelu,
    Tanh,
    Sigmoid,
    Erf,
    Square,
};

/// A scalar nonlinear function together with the metadata the approximation
/// pipeline needs: exact forward and derivative, an optional closed-form
/// antiderivative for segment means, the points where monotonicity flips,
/// and pole / domain restrictions.
struct ScalarFunc {
    std::string name = "custom";
    std::function<double(double)> f;
    std::function<double(double)> df;
    std::function<double(double)> antiderivative;  // null when no closed form

    // Interior x-values where the function switches between increasing and
    // decreasing. The real line (intersected with the domain) is partitioned
    // into monotone subintervals by these points.
    std::vector<double> monotone_splits;

    std::optional<double> pole;        // ranges must exclude a neighborhood of it
    std::optional<double> domain_min;  // inclusive lower bound (sqrt: 0)

    double operator()(double x) const { return f(x); }

    /// Mean value of f over [a, b]: closed-form antiderivative when present,
    /// adaptive quadrature (abs tol 1e-12) otherwise.
    double segment_mean(double a, double b) const;

    /// Rejects ranges that touch a pole or leave the domain.
    void check_range(double r_min, double r_max) const;

    /// Endpoints of the maximal monotone subinterval containing x.
    std::pair<double, double> monotone_interval(double x) const;
};

ScalarFunc scalar_func(FuncKind kind);
std::optional<FuncKind> func_kind_from_name(const std::string& name);
std::string func_kind_name(FuncKind kind);

/// Exact GELU, x * Phi(x) with Phi the standard normal CDF (erf form).
double gelu(double x);
double gelu_derivative(double x);

}  // namespace neumat
