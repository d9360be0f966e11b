// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "neumat/scalar_funcs.hpp"

namespace neumat {

/// Knobs of the elastic segment-sizing pass. delta_lx is the default
/// horizontal step, delta_ly the vertical span budget that triggers a
/// shorter segment, e_th the expectation-bias threshold below which a
/// segment's intercept is left alone.
struct ElasticConfig {
    double delta_lx = 0.5;
    double delta_ly = 0.1;
    double e_th = 0.0;
    int max_segments = 65536;

    void validate() const;
};

/// Piecewise-linear approximant. x holds the n+1 breakpoints (x.front() ==
/// r_min, x.back() == r_max); segment i covers [x[i], x[i+1]) with
/// y = k[i]*t + b[i]. Inputs left of r_min reuse segment 0's parameters and
/// inputs right of r_max reuse the last segment's, so the table is total on
/// the real line. The final interior segment is closed at r_max.
struct PwlTable {
    std::string function = "custom";
    double r_min = 0.0;
    double r_max = 0.0;
    std::vector<double> x;
    std::vector<double> k;
    std::vector<double> b;
    bool corrected = false;
    bool uniform = false;
    ElasticConfig config{0.0, 0.0, 0.0, 65536};

    int segments() const { return static_cast<int>(k.size()); }

    /// 0-based index of the segment whose parameters apply to this input.
    /// Binary search over x; uniform tables take a closed-form shortcut that
    /// agrees with the search everywhere, breakpoints included.
    int segment_index(double v) const;

    double evaluate(double v) const;

    /// Elementwise evaluate; order-preserving and bit-identical to the
    /// scalar form regardless of the thread cap.
    std::vector<double> evaluate_batch(std::span<const double> xs) const;

    void validate() const;
};

/// Chord interpolant on n uniform segments: each segment's line passes
/// through the function values at its endpoints.
PwlTable fit_uniform(const ScalarFunc& f, double r_min, double r_max, int segments);

/// Chord interpolant on explicit (strictly increasing) breakpoints.
PwlTable fit_breakpoints(const ScalarFunc& f, std::vector<double> breakpoints);

/// Per-segment expectation bias: mean of f over the segment minus the mean
/// of the chord, i.e. the shift that would zero the segment's average error.
std::vector<double> expectation_bias(const ScalarFunc& f, const PwlTable& table);

/// Adds each segment's expectation bias to its intercept when |bias| > e_th.
/// Marks the result corrected; continuity at breakpoints may be lost by the
/// applied shifts.
PwlTable vertical_bias_correction(const ScalarFunc& f, PwlTable table, double e_th);

struct HorizontalResult {
    std::vector<double> breakpoints;
    // Steps where the bisection bracket crossed a monotonicity switch and the
    // fixed delta_lx step was used instead (index into the step sequence).
    std::vector<int> fallback_steps;
};

/// Variable-width breakpoint placement: steps of delta_lx while the function
/// changes by at most delta_ly, otherwise the step shrinks so the vertical
/// span equals delta_ly (inverse found by bisection inside the current
/// monotone subinterval).
HorizontalResult horizontal_size_optimization(const ScalarFunc& f,
                                              const ElasticConfig& cfg,
                                              double r_min, double r_max);

/// Full elastic pipeline: horizontal sizing, chord fit, bias correction.
PwlTable build_elastic(const ScalarFunc& f, double r_min, double r_max,
                       const ElasticConfig& cfg);

/// Mean squared approximation error over [r_min, r_max] under the uniform
/// (Lebesgue) weighting, by per-segment adaptive quadrature.
double mse_uniform(const ScalarFunc& f, const PwlTable& table, double r_min,
                   double r_max);

/// Mean squared error over an empirical sample.
double mse_empirical(const ScalarFunc& f, const PwlTable& table,
                     std::span<const double> samples);

/// The exact two-segment ReLU table {(0,0),(1,0)}.
PwlTable make_relu_table();

}  // namespace neumat
