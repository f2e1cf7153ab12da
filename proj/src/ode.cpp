#include "epibound/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace epibound {

std::vector<double> linspace(double a, double b, int count) {
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k)
        out[k] = a + (b - a) * static_cast<double>(k) / (count - 1);
    out.front() = a;
    out.back() = b;
    return out;
}

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// b - bhat, including the FSAL stage.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

struct Stepper {
    const IvpSpec& spec;
    int dim;
    std::vector<double> y, ynew, work;
    std::vector<double> k1, k2, k3, k4, k5, k6, k7;
    double t;

    explicit Stepper(const IvpSpec& s)
        : spec(s), dim(s.dimension), y(s.y0), ynew(dim), work(dim),
          k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim), k7(dim), t(s.t0) {}

    void eval(double tt, const std::vector<double>& yy, std::vector<double>& out) {
        spec.rhs(tt, yy, out);
        for (double v : out)
            if (!std::isfinite(v))
                throw NumericalError("integrate: non-finite derivative at t=" + std::to_string(tt));
    }

    double error_norm(const std::vector<double>& err_scaled_src_h) {
        // err_scaled_src_h holds h * sum(e_i k_i); scale per component.
        double acc = 0.0;
        for (int i = 0; i < dim; ++i) {
            const double sc =
                spec.abs_tol + spec.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            const double q = err_scaled_src_h[i] / sc;
            acc += q * q;
        }
        return std::sqrt(acc / dim);
    }

    // One attempted step of size h from (t, y, k1). Returns the error norm;
    // fills ynew and k7 (= f(t+h, ynew), the FSAL stage).
    double attempt(double h) {
        for (int i = 0; i < dim; ++i) work[i] = y[i] + h * a21 * k1[i];
        eval(t + c2 * h, work, k2);
        for (int i = 0; i < dim; ++i) work[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        eval(t + c3 * h, work, k3);
        for (int i = 0; i < dim; ++i)
            work[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        eval(t + c4 * h, work, k4);
        for (int i = 0; i < dim; ++i)
            work[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        eval(t + c5 * h, work, k5);
        for (int i = 0; i < dim; ++i)
            work[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        eval(t + h, work, k6);
        for (int i = 0; i < dim; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        eval(t + h, ynew, k7);
        for (int i = 0; i < dim; ++i)
            work[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        return error_norm(work);
    }

    double initial_step(double direction_span) {
        // Hairer-style h0 heuristic from y0 and f(t0, y0).
        double d0 = 0.0, d1 = 0.0;
        for (int i = 0; i < dim; ++i) {
            const double sc = spec.abs_tol + spec.rel_tol * std::abs(y[i]);
            d0 = std::max(d0, std::abs(y[i]) / sc);
            d1 = std::max(d1, std::abs(k1[i]) / sc);
        }
        double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * (d0 / d1);
        h0 = std::min(h0, direction_span);
        for (int i = 0; i < dim; ++i) work[i] = y[i] + h0 * k1[i];
        eval(t + h0, work, k2);
        double d2 = 0.0;
        for (int i = 0; i < dim; ++i) {
            const double sc = spec.abs_tol + spec.rel_tol * std::abs(y[i]);
            d2 = std::max(d2, std::abs(k2[i] - k1[i]) / sc);
        }
        d2 /= h0;
        const double dmax = std::max(d1, d2);
        const double h1 = (dmax <= 1e-15) ? std::max(1e-6, h0 * 1e-3)
                                          : std::pow(0.01 / dmax, 0.2);
        return std::min({100.0 * h0, h1, direction_span});
    }
};

}  // namespace

Trajectory integrate(const IvpSpec& spec) {
    if (spec.dimension <= 0) throw ValidationError("integrate: dimension must be positive");
    if (!spec.rhs) throw ValidationError("integrate: missing rhs");
    if (!(spec.t0 < spec.t1)) throw ValidationError("integrate: need t0 < t1");
    if (spec.y0.size() != static_cast<std::size_t>(spec.dimension))
        throw ValidationError("integrate: y0 size mismatch");
    if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0))
        throw ValidationError("integrate: tolerances must be positive");
    if (spec.output_times.empty()) throw ValidationError("integrate: no output times");
    for (std::size_t k = 0; k < spec.output_times.size(); ++k) {
        const double tk = spec.output_times[k];
        if (tk < spec.t0 || tk > spec.t1)
            throw ValidationError("integrate: output time outside [t0, t1]");
        if (k > 0 && !(spec.output_times[k - 1] < tk))
            throw ValidationError("integrate: output times must be strictly increasing");
    }

    Trajectory traj;
    traj.dim = spec.dimension;
    traj.times = spec.output_times;
    traj.states.reserve(spec.output_times.size() * spec.dimension);

    Stepper st(spec);
    st.eval(st.t, st.y, st.k1);
    double h = st.initial_step(spec.t1 - spec.t0);
    bool rejected_last = false;

    auto emit = [&] { traj.states.insert(traj.states.end(), st.y.begin(), st.y.end()); };

    for (double t_out : spec.output_times) {
        while (st.t < t_out) {
            const double remaining = t_out - st.t;
            const bool final_step = h >= remaining;
            const double h_try = final_step ? remaining : h;
            if (h_try < 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(st.t)))
                throw IntegrationError(
                    "integrate: step size underflow at t=" + std::to_string(st.t), st.t);

            const double err = st.attempt(h_try);
            if (err <= 1.0) {
                st.t = final_step ? t_out : st.t + h_try;
                std::swap(st.y, st.ynew);
                std::swap(st.k1, st.k7);  // FSAL
                double fac = 0.9 * std::pow(std::max(err, 1e-16), -0.2);
                fac = std::clamp(fac, 0.2, rejected_last ? 1.0 : 10.0);
                // keep the controller's natural step when the attempt was
                // merely capped to land on an output time
                h = final_step ? std::max(h, h_try * fac) : h_try * fac;
                rejected_last = false;
            } else {
                h = h_try * std::clamp(0.9 * std::pow(err, -0.2), 0.2, 1.0);
                rejected_last = true;
            }
        }
        emit();
    }
    return traj;
}

}  // namespace epibound
