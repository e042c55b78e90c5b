#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "rydsim/core.hpp"

namespace rydsim {

struct IntegratorError : std::runtime_error {
    double t_fail;
    IntegratorError(const std::string& msg, double t)
        : std::runtime_error(msg + " at t = " + std::to_string(t)), t_fail(t) {}
};

struct IntegratorConfig {
    enum class Method { adaptive_rk, fixed_rk4 };

    Method method   = Method::adaptive_rk;
    double rel_tol  = 1e-10;
    double abs_tol  = 1e-12;
    double max_step = 0.0;                // seconds; must be set by the caller
    std::vector<double> sample_times;     // seconds, ascending
    long long max_steps = 200'000'000;

    void validate() const
    {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw std::invalid_argument("IntegratorConfig: tolerances must be positive");
        if (!(max_step > 0.0))
            throw std::invalid_argument("IntegratorConfig: max_step must be positive");
        for (std::size_t i = 1; i < sample_times.size(); ++i)
            if (sample_times[i] < sample_times[i - 1])
                throw std::invalid_argument("IntegratorConfig: sample_times not ascending");
    }
};

// Step cap for oscillatory Hamiltonians: at least 20 steps per period of the
// fastest angular frequency, so the adaptive controller can never step over
// a modulation cycle.
inline double max_step_cap(double max_angular_freq)
{
    if (max_angular_freq <= 0.0) return std::numeric_limits<double>::infinity();
    return (two_pi / max_angular_freq) / 20.0;
}

using Rhs = std::function<void(double, const Vector&, Vector&)>;
using SampleSink = std::function<void(std::size_t, double, const Vector&)>;

struct OdeStats {
    long long steps_accepted = 0;
    long long steps_rejected = 0;
};

namespace detail {

// Dormand-Prince 5(4) tableau.
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
inline constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
inline constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// Dense-output weights (continuous 4th-order extension).
inline constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                        d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                        d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

inline double error_norm(const Vector& err, const Vector& y0, const Vector& y1, double atol,
                         double rtol)
{
    double acc = 0.0;
    for (Index i = 0; i < err.size(); ++i) {
        const double w = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
        const double e = std::abs(err[i]) / w;
        acc += e * e;
    }
    return std::sqrt(acc / static_cast<double>(err.size()));
}

} // namespace detail

// Adaptive Dormand-Prince 5(4) with dense output at the requested sample
// times. emit(i, t, y) is called once per sample, in order.
inline OdeStats integrate_dopri5(const Rhs& f, double t0, double t_end, Vector y,
                                 const IntegratorConfig& cfg, const SampleSink& emit)
{
    cfg.validate();
    const Index n = y.size();
    Vector k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);
    Vector ytmp(n), ynew(n), yerr(n);
    Vector rc2(n), rc3(n), rc4(n), rc5(n);

    OdeStats stats;
    std::size_t si = 0;
    const auto& samples = cfg.sample_times;
    while (si < samples.size() && samples[si] <= t0) {
        emit(si, samples[si], y);
        ++si;
    }
    if (t_end <= t0 && si >= samples.size()) return stats;

    double t = t0;
    double h = std::min(cfg.max_step, t_end - t0);
    f(t, y, k1);
    bool rejected_last = false;

    while (t < t_end) {
        if (stats.steps_accepted + stats.steps_rejected > cfg.max_steps)
            throw IntegratorError("integrator exceeded max step count", t);
        h = std::min(h, t_end - t);
        if (h < 16.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(t), 1.0))
            throw IntegratorError("step size underflow", t);

        using namespace detail;
        ytmp = y + h * (a21 * k1);
        f(t + c2 * h, ytmp, k2);
        ytmp = y + h * (a31 * k1 + a32 * k2);
        f(t + c3 * h, ytmp, k3);
        ytmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
        f(t + c4 * h, ytmp, k4);
        ytmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
        f(t + c5 * h, ytmp, k5);
        ytmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        f(t + h, ytmp, k6);
        ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        f(t + h, ynew, k7);

        yerr = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        const double err = error_norm(yerr, y, ynew, cfg.abs_tol, cfg.rel_tol);

        if (err <= 1.0) {
            // Accept; fill dense-output coefficients and emit samples in (t, t+h].
            const double t_new = t + h;
            if (si < samples.size() && samples[si] <= t_new) {
                rc2 = ynew - y;
                rc3 = h * k1 - rc2;
                rc4 = rc2 - h * k7 - rc3;
                rc5 = h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
                while (si < samples.size() && samples[si] <= t_new) {
                    const double theta  = (samples[si] - t) / h;
                    const double theta1 = 1.0 - theta;
                    ytmp = y + theta * (rc2 + theta1 * (rc3 + theta * (rc4 + theta1 * rc5)));
                    emit(si, samples[si], ytmp);
                    ++si;
                }
            }
            t = t_new;
            y.swap(ynew);
            k1.swap(k7);  // FSAL
            ++stats.steps_accepted;
            const double fac = std::clamp(0.9 * std::pow(err, -0.2), 0.2, rejected_last ? 1.0 : 5.0);
            h = std::min(h * fac, cfg.max_step);
            rejected_last = false;
        } else {
            ++stats.steps_rejected;
            h *= std::clamp(0.9 * std::pow(err, -0.2), 0.2, 1.0);
            rejected_last = true;
        }
    }
    // Samples exactly at t_end may remain when rounding left si behind.
    while (si < samples.size() && samples[si] <= t_end + 1e-12 * std::max(1.0, std::abs(t_end))) {
        emit(si, samples[si], y);
        ++si;
    }
    if (si != samples.size())
        throw IntegratorError("sample time beyond integration span", t_end);
    return stats;
}

// Fixed-step classic RK4 landing exactly on every sample time; retained as a
// cross-check oracle for the adaptive path.
inline OdeStats integrate_rk4(const Rhs& f, double t0, double t_end, Vector y,
                              const IntegratorConfig& cfg, const SampleSink& emit)
{
    cfg.validate();
    const Index n = y.size();
    Vector k1(n), k2(n), k3(n), k4(n), ytmp(n);
    OdeStats stats;

    std::size_t si = 0;
    const auto& samples = cfg.sample_times;
    while (si < samples.size() && samples[si] <= t0) {
        emit(si, samples[si], y);
        ++si;
    }

    double t = t0;
    auto advance_to = [&](double target) {
        const double span = target - t;
        if (span <= 0.0) return;
        const long long steps = std::max<long long>(1, static_cast<long long>(std::ceil(span / cfg.max_step)));
        const double h = span / static_cast<double>(steps);
        for (long long s = 0; s < steps; ++s) {
            f(t, y, k1);
            ytmp = y + (0.5 * h) * k1;
            f(t + 0.5 * h, ytmp, k2);
            ytmp = y + (0.5 * h) * k2;
            f(t + 0.5 * h, ytmp, k3);
            ytmp = y + h * k3;
            f(t + h, ytmp, k4);
            y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            t += h;
            ++stats.steps_accepted;
        }
        t = target;
    };

    while (si < samples.size()) {
        advance_to(samples[si]);
        emit(si, samples[si], y);
        ++si;
    }
    advance_to(t_end);
    return stats;
}

inline OdeStats integrate(const Rhs& f, double t0, double t_end, const Vector& y0,
                          const IntegratorConfig& cfg, const SampleSink& emit)
{
    return cfg.method == IntegratorConfig::Method::adaptive_rk
               ? integrate_dopri5(f, t0, t_end, y0, cfg, emit)
               : integrate_rk4(f, t0, t_end, y0, cfg, emit);
}

} // namespace rydsim
