#pragma once

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "epibound/errors.hpp"

namespace epibound {

/// Weighted directed network. weight(i, j) = g_ij is the weight of the edge
/// from node j to node i, i.e. the transmission-rate multiplier for j
/// infecting i. Immutable after construction; safe to share across threads.
class Graph {
public:
    /// weights is row-major n*n, entry i*n+j = g_ij. Validates nonnegativity,
    /// finiteness and a zero diagonal (no self-loops).
    Graph(int n, std::vector<double> weights);

    /// Parses a graph document: {"n": int, "edges": [{"from","to","weight"}]}
    /// with 1-based indices (edge from->to stored as g_{to,from}), or
    /// {"n": int, "matrix": [[...], ...]} row-major with entry (i,j) = g_ij.
    static Graph from_json(const nlohmann::json& doc);
    static Graph from_file(const std::string& path);

    int size() const noexcept { return n_; }
    double weight(int i, int j) const { return w_[static_cast<std::size_t>(i) * n_ + j]; }
    std::span<const double> row(int i) const {
        return {w_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
    }
    const std::vector<double>& weights() const noexcept { return w_; }
    double row_sum(int i) const;
    Graph transposed() const;

private:
    int n_;
    std::vector<double> w_;
};

Graph complete_graph(int n, double weight = 1.0);
Graph directed_cycle(int n, double weight = 1.0);

/// True iff every node reaches every other node along edges of positive weight.
bool is_strongly_connected(const Graph& g);

struct SpectralInfo {
    double lambda_max = 0.0;      // Perron value of the weight matrix
    std::vector<double> eigvec;   // positive right eigenvector, unit 1-norm
    int iterations = 0;
    double residual = 0.0;        // ||G u - lambda u||_inf at exit
};

/// Perron value and eigenvector of a strongly connected graph via power
/// iteration on G + I (the shift keeps periodic matrices convergent).
SpectralInfo spectral_radius(const Graph& g, double tol = 1e-12, int max_iter = 200000);

}  // namespace epibound
