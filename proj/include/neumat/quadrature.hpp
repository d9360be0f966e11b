// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace neumat {

/// Adaptive Simpson integration of f over [a, b] to an absolute tolerance.
/// Throws NumericalError if the recursion depth limit is reached before the
/// local error estimate drops below tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol = 1e-12, int max_depth = 40);

}  // namespace neumat
