// SPDX-License-Identifier: Apache-2.0
#include "neumat/quadrature.hpp"

#include <cmath>

#include "neumat/common.hpp"

namespace neumat {
namespace {

using Fn = std::function<double(double)>;

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

// Classic recursive bisection: accept when the two half-interval estimates
// agree with the whole-interval estimate within 15*tol (Richardson bound).
double adapt(const Fn& f, double a, double b, double fa, double fm, double fb,
             double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = f(lm);
    double frm = f(rm);
    double left = simpson(fa, flm, fm, m - a);
    double right = simpson(fm, frm, fb, b - m);
    double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    if (depth <= 0) {
        throw NumericalError("quadrature did not converge",
                             {{"a", real_to_string(a)}, {"b", real_to_string(b)}});
    }
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const Fn& f, double a, double b, double abs_tol,
                          int max_depth) {
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = simpson(fa, fm, fb, b - a);
    return sign * adapt(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

}  // namespace neumat
