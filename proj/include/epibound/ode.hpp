#pragma once

#include <functional>
#include <span>
#include <vector>

#include "epibound/errors.hpp"

namespace epibound {

struct Trajectory {
    std::vector<double> times;
    std::vector<double> states;  // row-major, times.size() x dim
    int dim = 0;

    std::span<const double> state(std::size_t k) const {
        return {states.data() + k * dim, static_cast<std::size_t>(dim)};
    }
    double value(std::size_t k, int component) const {
        return states[k * dim + component];
    }
    std::size_t points() const { return times.size(); }
};

using RhsFn = std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;

struct IvpSpec {
    int dimension = 0;
    RhsFn rhs;
    double t0 = 0.0;
    double t1 = 0.0;
    std::vector<double> y0;
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    std::vector<double> output_times;  // strictly increasing, within [t0, t1]
};

/// Adaptive Dormand-Prince 5(4) integration. States are produced at exactly
/// the requested output times by capping steps to land on them. Deterministic
/// for fixed inputs.
Trajectory integrate(const IvpSpec& spec);

/// count evenly spaced points on [a, b], endpoints exact.
std::vector<double> linspace(double a, double b, int count);

}  // namespace epibound
