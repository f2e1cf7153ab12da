#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "epibound/closure.hpp"
#include "epibound/graph.hpp"

namespace epibound {

/// Deterministic random source. The double mapping is fixed here (rather than
/// relying on std distributions) so seeded runs are reproducible across
/// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }
    double uniform() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int uniform_int(int lo, int hi) {  // inclusive bounds
        const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(raw() % range);
    }

private:
    std::mt19937_64 eng_;
};

/// Stable per-instance seed derivation (splitmix64 of seed ^ index).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Directed Erdős–Rényi graph with uniform weights, rejection-sampled until
/// strongly connected.
Graph random_strongly_connected_graph(Rng& rng, int n, double edge_prob = 0.5,
                                      double w_min = 0.2, double w_max = 1.5);

struct RandomInstance {
    Graph graph;
    EpidemicParams params;
    std::vector<double> init;  // per-node infection marginals
};

RandomInstance random_instance(Rng& rng, int n_min, int n_max,
                               double tau_min, double tau_max,
                               double gamma_min, double gamma_max);

}  // namespace epibound
