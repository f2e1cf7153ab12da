#pragma once

#include <span>
#include <vector>

#include "epibound/closure.hpp"
#include "epibound/graph.hpp"
#include "epibound/master.hpp"
#include "epibound/ode.hpp"

namespace epibound {

/// Closed node-level model dX_i/dt = tau * sum_j g_ij (X_j - W(X_i, X_j)) - gamma X_i.
struct ClosedModel {
    Graph graph;
    EpidemicParams params;
    Closure closure;
};

/// Closure arguments are clamped to [0,1]; the linear terms use the raw state.
void closed_rhs(const ClosedModel& m, std::span<const double> x, std::span<double> dxdt);
std::vector<double> closed_rhs(const ClosedModel& m, std::span<const double> x);

/// dY_i/dt = tau * sum_j g_ij (Y_j - Y_i Y_j) - gamma Y_i; identical to
/// closed_rhs with the product closure.
void nimfa_rhs(const Graph& g, const EpidemicParams& params,
               std::span<const double> y, std::span<double> dydt);
std::vector<double> nimfa_rhs(const Graph& g, const EpidemicParams& params,
                              std::span<const double> y);

Trajectory integrate_closed(const ClosedModel& m, std::span<const double> init,
                            std::vector<double> output_times,
                            double abs_tol = 1e-10, double rel_tol = 1e-10);

enum class BoundDirection { Upper, Lower };

struct BoundReport {
    BoundDirection direction = BoundDirection::Upper;
    int n = 0;
    std::vector<double> times;
    /// Row-major times x n. Upper: closed - exact; lower: exact - closed.
    std::vector<double> margins;
    double worst_violation = 0.0;  // minimum margin (negative = violation)
    double violation_time = 0.0;
    int violation_node = 0;

    double margin(std::size_t k, int i) const { return margins[k * n + i]; }
};

/// Solves the exact master equation (product-initialized from init) and the
/// closed model on the same grid and reports the per-time per-node margins.
/// The direction declares which comparison theorem the caller asserts.
BoundReport verify_bounds(const Graph& g, const EpidemicParams& params,
                          std::span<const double> init,
                          std::vector<double> output_times,
                          const Closure& closure, BoundDirection direction,
                          int max_nodes = kMasterMaxNodes);

}  // namespace epibound
