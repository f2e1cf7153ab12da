#pragma once

#include <span>
#include <vector>

#include "epibound/graph.hpp"
#include "epibound/master.hpp"

namespace epibound {

/// Correlation deficits along a master trajectory. deficit(t,i,j) is
/// <S_i><I_j> - <S_iI_j> for the ordered pair (i,j); nonnegative deficits
/// mean S-I pairs are negatively correlated. conditional(t,i,j,k) is the same
/// quantity conditioned on node k being susceptible.
struct CorrelationReport {
    int n = 0;
    std::vector<double> times;
    std::vector<double> deficit;      // times x n x n, diagonal unused (zero)
    std::vector<double> conditional;  // times x n x n x n when computed
    bool has_conditionals = false;
    double min_value = 0.0;           // most negative deficit over all t, i != j
    double max_identity_gap = 0.0;    // worst disagreement of the two algebraic forms

    double at(std::size_t t, int i, int j) const {
        return deficit[(t * n + i) * n + j];
    }
    double conditional_at(std::size_t t, int i, int j, int k) const {
        return conditional[((t * n + i) * n + j) * n + k];
    }
};

CorrelationReport compute_correlations(const MasterTrajectory& traj,
                                       bool with_conditionals = true);

struct CorrelationCheck {
    double min_deficit = 0.0;
    double min_deficit_time = 0.0;
    int min_i = 0, min_j = 0;
    double min_ii_gap = 0.0;      // min over t, i != j of <I_iI_j> - <I_i><I_j>
    bool hypothesis_ok = false;   // initial deficits all nonnegative
    double max_identity_gap = 0.0;

    bool pass(double tol = 1e-8) const { return min_deficit >= -tol && min_ii_gap >= -tol; }
};

/// Sign checks on an already-solved trajectory (any initial distribution).
CorrelationCheck check_correlations(const MasterTrajectory& traj);

/// Solves the master equation from a product initial measure (so deficits
/// start at exactly zero) and runs the sign checks.
CorrelationCheck verify_nonnegative_correlation(const Graph& g, const EpidemicParams& params,
                                                std::span<const double> init_marginals,
                                                std::vector<double> output_times,
                                                double abs_tol = 1e-13, double rel_tol = 1e-10);

/// Right side of the deficit evolution equation for every ordered pair,
/// evaluated from the distribution's marginals. Returned row-major n x n with
/// zero diagonal. Conditioning terms with <S_k> below 1e-12 are dropped
/// (their contribution carries the factor <S_k>).
std::vector<double> correlation_rhs(const Graph& g, const EpidemicParams& params,
                                    const MasterDistribution& d);

struct DecompositionReport {
    double min_coupling = 0.0;       // smallest off-diagonal coupling coefficient
    double min_conditional = 0.0;    // smallest conditional deficit
    double min_inhomogeneity = 0.0;  // smallest forcing term R_ij
    bool couplings_ok = false;
    bool inhomogeneity_ok = false;   // R >= -1e-9 whenever conditionals >= -1e-9
    bool pass() const { return couplings_ok && inhomogeneity_ok; }
};

/// Confirms the cooperative structure of the deficit system: nonnegative
/// couplings and nonnegative forcing given nonnegative conditional deficits.
DecompositionReport nonneg_decomposition_check(const Graph& g, const EpidemicParams& params,
                                               const MasterDistribution& d);

}  // namespace epibound
