#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "epibound/closure.hpp"
#include "epibound/graph.hpp"

namespace epibound {

enum class Regime { BelowThreshold, AboveThreshold, Critical };
enum class Classification { DiseaseFree, Endemic };

struct SteadyStateResult {
    Regime regime = Regime::BelowThreshold;
    double lambda_max = 0.0;
    double alpha = 0.0;  // gamma / tau
    std::vector<double> fixed_point;
    double residual = 0.0;  // ||x - T(x)||_inf at exit
    Classification classification = Classification::DiseaseFree;
    int iterations = 0;
};

/// One application of the steady-state map
/// T_i(x) = ((Gx)_i - F_i(x)) / (alpha + (Gx)_i) with
/// F_i(x) = sum_j g_ij (W(x_i, x_j) - x_i x_j). Maps [0,1]^N into itself for
/// closures with xy <= W <= min; F_i < -1e-12 raises a closure-contract error.
std::vector<double> fixed_point_map(const Graph& g, const EpidemicParams& params,
                                    const Closure& closure, std::span<const double> x);

/// Picard iteration on T with automatic 0.5 damping once the residual stops
/// decreasing for 10 consecutive iterations. Classifies the converged point
/// as endemic when ||x||_inf exceeds 10*tol.
SteadyStateResult solve_steady_state(const Graph& g, const EpidemicParams& params,
                                     const Closure& closure, std::span<const double> init,
                                     double tol = 1e-10, int max_iter = 200000);

struct ExtinctionReport {
    int samples = 0;
    int converged_to_zero = 0;
    double max_final_norm = 0.0;
    /// min over samples of (gamma - tau*lambda) * <v, x> with v the left
    /// Perron vector: positive margins refute the fixed-point necessary
    /// condition gamma*<v,x> <= tau*<v,Gx> for every nonzero candidate.
    double min_refutation_margin = 0.0;
    bool critical = false;  // gamma == tau*lambda within tolerance band
    bool pass(double tol = 1e-8) const {
        return !critical && converged_to_zero == samples && max_final_norm <= tol;
    }
};

/// Below threshold (gamma > tau*lambda), iterates T from random starting
/// points and confirms extinction plus the refutation margin above.
ExtinctionReport verify_no_endemic(const Graph& g, const EpidemicParams& params,
                                   const Closure& closure, int samples, std::uint64_t seed,
                                   double tol = 1e-10);

struct BifurcationCurve {
    std::vector<double> tau_values;
    std::vector<double> steady_state_norms;  // ||x*||_1 / n per tau
    double threshold_estimate = 0.0;         // NaN when no branch was detected
};

/// Sweeps tau over [tau_min, tau_max]; sequential mode warm-starts each solve
/// from the previous endemic solution (uniform 0.5 otherwise), parallel mode
/// cold-starts every tau from uniform 0.5. threshold_estimate is the first
/// tau whose mean steady-state value exceeds 1e-4.
BifurcationCurve bifurcation_sweep(const Graph& g, double gamma, const Closure& closure,
                                   double tau_min, double tau_max, int steps,
                                   bool parallel_cold_start = false,
                                   double tol = 1e-10, int max_iter = 200000);

}  // namespace epibound
