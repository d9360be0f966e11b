// SPDX-License-Identifier: Apache-2.0
#include "neumat/pwl.hpp"

#include <algorithm>
#include <cmath>

#include "neumat/common.hpp"
#include "neumat/parallel.hpp"
#include "neumat/quadrature.hpp"

namespace neumat {

void ElasticConfig::validate() const {
    if (!(delta_lx > 0.0) || !std::isfinite(delta_lx))
        throw ValidationError("delta_lx must be finite and positive");
    if (!(delta_ly > 0.0) || !std::isfinite(delta_ly))
        throw ValidationError("delta_ly must be finite and positive");
    if (!(e_th >= 0.0) || !std::isfinite(e_th))
        throw ValidationError("e_th must be finite and non-negative");
    if (max_segments < 1) throw ValidationError("max_segments must be >= 1");
}

void PwlTable::validate() const {
    if (k.empty() || k.size() != b.size() || x.size() != k.size() + 1)
        throw ValidationError("table arrays inconsistent");
    for (size_t i = 0; i + 1 < x.size(); ++i) {
        if (!(x[i] < x[i + 1]))
            throw ValidationError("breakpoints not strictly increasing",
                                  {{"index", std::to_string(i)}});
    }
    if (x.front() != r_min || x.back() != r_max)
        throw ValidationError("breakpoints do not match [r_min, r_max]");
}

int PwlTable::segment_index(double v) const {
    const int n = segments();
    if (uniform) {
        double delta = (r_max - r_min) / n;
        double pos = std::floor((v - r_min) / delta);
        int idx = 0;
        if (pos >= static_cast<double>(n - 1)) {
            idx = n - 1;
        } else if (pos > 0.0) {
            idx = static_cast<int>(pos);
        }
        // Snap against the stored breakpoints so the closed form and the
        // binary search agree even when the division rounds across an edge.
        while (idx > 0 && v < x[idx]) --idx;
        while (idx + 1 < n && v >= x[idx + 1]) ++idx;
        return idx;
    }
    auto it = std::upper_bound(x.begin(), x.end(), v);
    int idx = static_cast<int>(it - x.begin()) - 1;
    if (idx < 0) idx = 0;
    if (idx > n - 1) idx = n - 1;
    return idx;
}

double PwlTable::evaluate(double v) const {
    int s = segment_index(v);
    return k[s] * v + b[s];
}

std::vector<double> PwlTable::evaluate_batch(std::span<const double> xs) const {
    std::vector<double> out(xs.size());
    parallel_chunks(static_cast<int64_t>(xs.size()), [&](int64_t lo, int64_t hi) {
        for (int64_t i = lo; i < hi; ++i) out[i] = evaluate(xs[i]);
    });
    return out;
}

PwlTable fit_breakpoints(const ScalarFunc& f, std::vector<double> breakpoints) {
    if (breakpoints.size() < 2)
        throw ValidationError("need at least two breakpoints");
    PwlTable t;
    t.function = f.name;
    t.x = std::move(breakpoints);
    t.r_min = t.x.front();
    t.r_max = t.x.back();
    f.check_range(t.r_min, t.r_max);
    const int n = static_cast<int>(t.x.size()) - 1;
    t.k.resize(n);
    t.b.resize(n);
    for (int i = 0; i < n; ++i) {
        double x0 = t.x[i], x1 = t.x[i + 1];
        if (!(x0 < x1)) throw ValidationError("breakpoints not strictly increasing");
        double f0 = f(x0), f1 = f(x1);
        t.k[i] = (f1 - f0) / (x1 - x0);
        t.b[i] = f0 - t.k[i] * x0;
    }
    return t;
}

PwlTable fit_uniform(const ScalarFunc& f, double r_min, double r_max, int segments) {
    if (segments < 1) throw ValidationError("segment count must be >= 1");
    f.check_range(r_min, r_max);
    std::vector<double> xs(segments + 1);
    for (int i = 0; i <= segments; ++i) {
        xs[i] = r_min + (r_max - r_min) * (static_cast<double>(i) / segments);
    }
    xs.front() = r_min;
    xs.back() = r_max;
    PwlTable t = fit_breakpoints(f, std::move(xs));
    t.uniform = true;
    t.config = ElasticConfig{(r_max - r_min) / segments, 0.0, 0.0, 65536};
    return t;
}

std::vector<double> expectation_bias(const ScalarFunc& f, const PwlTable& table) {
    const int n = table.segments();
    std::vector<double> bias(n);
    for (int i = 0; i < n; ++i) {
        double a = table.x[i], b = table.x[i + 1];
        double mean_f;
        try {
            mean_f = f.segment_mean(a, b);
        } catch (const NumericalError& e) {
            throw NumericalError(std::string(e.what()) + " in segment " +
                                     std::to_string(i),
                                 {{"segment", std::to_string(i)}});
        }
        bias[i] = mean_f - 0.5 * (f(a) + f(b));
    }
    return bias;
}

PwlTable vertical_bias_correction(const ScalarFunc& f, PwlTable table, double e_th) {
    if (table.corrected)
        throw ValidationError("table already bias-corrected");
    std::vector<double> bias = expectation_bias(f, table);
    for (int i = 0; i < table.segments(); ++i) {
        if (std::abs(bias[i]) > e_th) table.b[i] += bias[i];
    }
    table.corrected = true;
    table.config.e_th = e_th;
    return table;
}

namespace {

// Solve f(t) = target for t in [lo, hi], f monotone on the bracket.
double bisect_inverse(const ScalarFunc& f, double lo, double hi, double target,
                      bool increasing) {
    for (int iter = 0; iter < 200 && hi - lo > 1e-10; ++iter) {
        double mid = 0.5 * (lo + hi);
        double v = f(mid);
        bool go_right = increasing ? (v < target) : (v > target);
        if (go_right)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

HorizontalResult horizontal_size_optimization(const ScalarFunc& f,
                                              const ElasticConfig& cfg,
                                              double r_min, double r_max) {
    cfg.validate();
    f.check_range(r_min, r_max);
    HorizontalResult res;
    res.breakpoints.push_back(r_min);
    double x = r_min;
    int step = 0;
    while (x < r_max) {
        if (static_cast<int>(res.breakpoints.size()) >= cfg.max_segments) {
            throw ValidationError(
                "breakpoint budget exceeded",
                {{"max_segments", std::to_string(cfg.max_segments)}});
        }
        double probe = x + cfg.delta_lx;
        double dy = f(probe) - f(x);
        double next;
        if (std::abs(dy) <= cfg.delta_ly) {
            next = probe;
        } else {
            auto [mlo, mhi] = f.monotone_interval(x);
            double bracket_hi = std::min(probe, mhi);
            double target = f(x) + (dy > 0 ? cfg.delta_ly : -cfg.delta_ly);
            double g_lo = f(x) - target;
            double g_hi = f(bracket_hi) - target;
            if (bracket_hi <= x || g_lo * g_hi > 0.0) {
                // Bracket crosses a monotonicity switch, or the target is not
                // reachable inside the monotone piece. Fixed step instead.
                res.fallback_steps.push_back(step);
                next = probe;
            } else {
                next = bisect_inverse(f, x, bracket_hi, target, dy > 0);
            }
        }
        if (next >= r_max || r_max - next < 1e-12) next = r_max;
        res.breakpoints.push_back(next);
        x = next;
        ++step;
    }
    return res;
}

PwlTable build_elastic(const ScalarFunc& f, double r_min, double r_max,
                       const ElasticConfig& cfg) {
    HorizontalResult hr = horizontal_size_optimization(f, cfg, r_min, r_max);
    PwlTable t = fit_breakpoints(f, std::move(hr.breakpoints));
    t = vertical_bias_correction(f, std::move(t), cfg.e_th);
    t.config = cfg;
    return t;
}

double mse_uniform(const ScalarFunc& f, const PwlTable& table, double r_min,
                   double r_max) {
    if (!(r_min < r_max)) throw ValidationError("mse range degenerate");
    // Split the integration range at every breakpoint it straddles so each
    // quadrature call sees a smooth integrand.
    std::vector<double> cuts;
    cuts.push_back(r_min);
    for (double bx : table.x) {
        if (bx > r_min && bx < r_max) cuts.push_back(bx);
    }
    cuts.push_back(r_max);
    double total = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        double a = cuts[i], b = cuts[i + 1];
        int seg = table.segment_index(0.5 * (a + b));
        double kk = table.k[seg], bb = table.b[seg];
        auto err2 = [&](double t) {
            double e = f(t) - (kk * t + bb);
            return e * e;
        };
        total += integrate_adaptive(err2, a, b, 1e-12, 40);
    }
    return total / (r_max - r_min);
}

double mse_empirical(const ScalarFunc& f, const PwlTable& table,
                     std::span<const double> samples) {
    if (samples.empty()) throw ValidationError("empirical mse needs samples");
    double acc = 0.0;
    for (double s : samples) {
        double e = f(s) - table.evaluate(s);
        acc += e * e;
    }
    return acc / static_cast<double>(samples.size());
}

PwlTable make_relu_table() {
    PwlTable t;
    t.function = "relu";
    t.r_min = -1.0;
    t.r_max = 1.0;
    t.x = {-1.0, 0.0, 1.0};
    t.k = {0.0, 1.0};
    t.b = {0.0, 0.0};
    t.uniform = true;
    return t;
}

}  // namespace neumat
