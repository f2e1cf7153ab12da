#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "epibound/closure.hpp"
#include "epibound/graph.hpp"
#include "epibound/ode.hpp"

namespace epibound {

/// Hard cap on exact-model size (2^20 states).
inline constexpr int kMasterMaxNodes = 20;

/// Probability vector over all 2^n node-state configurations. Bit i of the
/// index is set iff node i (0-based) is infected.
struct MasterDistribution {
    int n = 0;
    std::vector<double> probs;

    std::size_t states() const { return probs.size(); }
    double sum() const;
};

/// Independent-node initial measure, P(s) = prod p_i^{s_i} (1-p_i)^{1-s_i}.
MasterDistribution init_product_distribution(int n, std::span<const double> marginals);
MasterDistribution point_mass(int n, std::uint32_t config);

/// Joint and marginal probabilities of an ordered node pair (i, j):
/// a=<I_iI_j>, b=<S_iI_j>, c=<I_iS_j>, d=<S_iS_j>, p=<I_i>, q=<I_j>.
struct PairState {
    double a = 0, b = 0, c = 0, d = 0, p = 0, q = 0;
};

/// Sparse transition-rate structure of the SIS Markov chain: per configuration,
/// recovery s -> s\{i} at rate gamma for infected i and infection s -> s+{i}
/// at rate tau * sum_{j in s} g_ij for susceptible i. apply() realizes
/// dP/dt = Q P; column sums of Q vanish by construction.
class Generator {
public:
    Generator(const Graph& g, const EpidemicParams& params, int max_nodes = kMasterMaxNodes);

    int nodes() const noexcept { return n_; }
    std::size_t states() const noexcept { return out_rate_.size(); }
    void apply(std::span<const double> p, std::span<double> dp) const;

    double out_rate(std::size_t s) const { return out_rate_[s]; }
    std::span<const std::uint32_t> targets(std::size_t s) const {
        return {target_.data() + row_ptr_[s], row_ptr_[s + 1] - row_ptr_[s]};
    }
    std::span<const double> rates(std::size_t s) const {
        return {rate_.data() + row_ptr_[s], row_ptr_[s + 1] - row_ptr_[s]};
    }
    /// Per-source-column sums of Q (transition rates minus exit rate); all
    /// zero by construction, exposed for verification.
    std::vector<double> column_sums() const;

private:
    int n_ = 0;
    std::vector<std::size_t> row_ptr_;
    std::vector<std::uint32_t> target_;
    std::vector<double> rate_;
    std::vector<double> out_rate_;
};

struct MasterTrajectory {
    std::vector<double> times;
    std::vector<MasterDistribution> states;
    /// Largest negative magnitude clamped to zero on output (solver noise).
    double max_clamp = 0.0;
};

MasterTrajectory solve_master(const Graph& g, const EpidemicParams& params,
                              const MasterDistribution& init,
                              std::vector<double> output_times,
                              double abs_tol = 1e-13, double rel_tol = 1e-10,
                              int max_nodes = kMasterMaxNodes);

/// <I_i> (and 1 - <I_i> for the susceptible marginal).
double marginal_node_infected(const MasterDistribution& d, int node);
PairState marginal_pair(const MasterDistribution& d, int i, int j);
/// Probability of a triple pattern such as "SSI" on pairwise-distinct (i,j,k).
double marginal_triple(const MasterDistribution& d, int i, int j, int k, std::string_view pattern);

/// All node, pair and (optionally) triple marginals in one sweep.
struct MarginalTables {
    int n = 0;
    bool has_triples = false;
    std::vector<double> infected;        // <I_i>
    std::vector<double> si, ii, ss;      // n*n: <S_iI_j>, <I_iI_j>, <S_iS_j>
    std::vector<double> sis, ssi, sii;   // n*n*n: <S_iI_jS_k>, <S_iS_jI_k>, <S_iI_jI_k>

    double pair_si(int i, int j) const { return si[idx2(i, j)]; }
    double pair_is(int i, int j) const { return si[idx2(j, i)]; }
    double pair_ii(int i, int j) const { return ii[idx2(i, j)]; }
    double pair_ss(int i, int j) const { return ss[idx2(i, j)]; }
    double triple_sis(int i, int j, int k) const { return sis[idx3(i, j, k)]; }
    double triple_ssi(int i, int j, int k) const { return ssi[idx3(i, j, k)]; }
    double triple_sii(int i, int j, int k) const { return sii[idx3(i, j, k)]; }

    std::size_t idx2(int i, int j) const { return static_cast<std::size_t>(i) * n + j; }
    std::size_t idx3(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * n + j) * n + k;
    }
};
MarginalTables compute_marginal_tables(const MasterDistribution& d, bool with_triples);

/// The explicit two-node exact system for the unit-weight bidirectional edge.
/// State columns: (<I_1>, <I_2>, <SI>, <IS>, <II>, <SS>). Serves as an
/// independent oracle for solve_master at n = 2.
Trajectory two_node_system(const EpidemicParams& params, const PairState& init,
                           std::vector<double> output_times,
                           double abs_tol = 1e-12, double rel_tol = 1e-12);

/// 4-state distribution matching a two-node PairState (possibly correlated).
MasterDistribution distribution_from_pair(const PairState& init);

/// Right side of the exact node equation d<I_i>/dt evaluated from pair
/// marginals; used for residual checks against finite differences.
double node_equation_rhs(const Graph& g, const EpidemicParams& params,
                         const MasterDistribution& d, int i);

struct PairDerivatives {
    double si = 0, is = 0, ii = 0, ss = 0;
};
/// Right sides of the exact (unclosed) pair equations from triple marginals.
PairDerivatives pair_equation_rhs(const Graph& g, const EpidemicParams& params,
                                  const MasterDistribution& d, int i, int j);

}  // namespace epibound
