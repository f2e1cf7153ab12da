#include "epibound/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <utility>

#include <nlohmann/json.hpp>

namespace epibound {

namespace {

std::string edge_label(int from, int to) {
    return std::to_string(from) + "->" + std::to_string(to);
}

}  // namespace

Graph::Graph(int n, std::vector<double> weights) : n_(n), w_(std::move(weights)) {
    if (n_ <= 0) throw ValidationError("graph: node count must be positive, got " + std::to_string(n_));
    if (w_.size() != static_cast<std::size_t>(n_) * n_)
        throw ValidationError("graph: weight matrix size mismatch");
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            const double w = weight(i, j);
            if (!std::isfinite(w))
                throw ValidationError("graph: non-finite weight on edge " + edge_label(j + 1, i + 1));
            if (w < 0.0)
                throw ValidationError("graph: negative weight " + std::to_string(w) + " on edge " +
                                      edge_label(j + 1, i + 1));
        }
        if (weight(i, i) != 0.0)
            throw ValidationError("graph: self-loop with nonzero weight at node " + std::to_string(i + 1));
    }
}

Graph Graph::from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ValidationError("graph document: expected an object");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw ValidationError("graph document: missing integer field 'n'");
    const int n = doc["n"].get<int>();
    if (n <= 0) throw ValidationError("graph document: n must be positive");

    const bool has_edges = doc.contains("edges");
    const bool has_matrix = doc.contains("matrix");
    if (has_edges == has_matrix)
        throw ValidationError("graph document: provide exactly one of 'edges' or 'matrix'");

    std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
    if (has_edges) {
        const auto& edges = doc["edges"];
        if (!edges.is_array()) throw ValidationError("graph document: 'edges' must be an array");
        std::set<std::pair<int, int>> seen;
        for (const auto& e : edges) {
            if (!e.is_object() || !e.contains("from") || !e.contains("to"))
                throw ValidationError("graph document: edge entries need 'from' and 'to'");
            const int from = e["from"].get<int>();
            const int to = e["to"].get<int>();
            double weight = 1.0;
            if (e.contains("weight")) weight = e["weight"].get<double>();
            else if (e.contains("w")) weight = e["w"].get<double>();
            if (from < 1 || from > n || to < 1 || to > n)
                throw ValidationError("graph document: edge " + edge_label(from, to) +
                                      " references a node outside 1.." + std::to_string(n));
            if (!seen.insert({from, to}).second)
                throw ValidationError("graph document: duplicate edge " + edge_label(from, to));
            if (from == to && weight != 0.0)
                throw ValidationError("graph document: self-loop on node " + std::to_string(from));
            if (!std::isfinite(weight) || weight < 0.0)
                throw ValidationError("graph document: invalid weight on edge " + edge_label(from, to));
            w[static_cast<std::size_t>(to - 1) * n + (from - 1)] = weight;
        }
    } else {
        const auto& m = doc["matrix"];
        if (!m.is_array()) throw ValidationError("graph document: 'matrix' must be an array");
        if (!m.empty() && m[0].is_array()) {
            if (m.size() != static_cast<std::size_t>(n))
                throw ValidationError("graph document: matrix must have n rows");
            for (int i = 0; i < n; ++i) {
                if (m[i].size() != static_cast<std::size_t>(n))
                    throw ValidationError("graph document: matrix row " + std::to_string(i + 1) +
                                          " must have n entries");
                for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(i) * n + j] = m[i][j].get<double>();
            }
        } else {
            if (m.size() != static_cast<std::size_t>(n) * n)
                throw ValidationError("graph document: flat matrix must have n*n entries");
            for (std::size_t k = 0; k < m.size(); ++k) w[k] = m[k].get<double>();
        }
    }
    return Graph(n, std::move(w));
}

Graph Graph::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("graph document: cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("graph document: parse error in " + path + ": " + e.what());
    }
    return from_json(doc);
}

double Graph::row_sum(int i) const {
    double s = 0.0;
    for (int j = 0; j < n_; ++j) s += weight(i, j);
    return s;
}

Graph Graph::transposed() const {
    std::vector<double> w(w_.size());
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) w[static_cast<std::size_t>(j) * n_ + i] = weight(i, j);
    return Graph(n_, std::move(w));
}

Graph complete_graph(int n, double weight) {
    std::vector<double> w(static_cast<std::size_t>(n) * n, weight);
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i) * n + i] = 0.0;
    return Graph(n, std::move(w));
}

Graph directed_cycle(int n, double weight) {
    std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
    // edge i -> i+1 (mod n): stored as g_{i+1, i}
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>((i + 1) % n) * n + i] = weight;
    return Graph(n, std::move(w));
}

namespace {

// Tarjan SCC over edges with positive weight; returns the number of components.
struct SccState {
    const Graph& g;
    std::vector<int> index, lowlink, stack;
    std::vector<bool> on_stack;
    int next_index = 0;
    int components = 0;

    explicit SccState(const Graph& graph)
        : g(graph), index(graph.size(), -1), lowlink(graph.size(), 0), on_stack(graph.size(), false) {}

    void visit(int v) {
        index[v] = lowlink[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
        // successors of v: nodes u with an edge v -> u, i.e. g_{u,v} > 0
        for (int u = 0; u < g.size(); ++u) {
            if (g.weight(u, v) <= 0.0) continue;
            if (index[u] < 0) {
                visit(u);
                lowlink[v] = std::min(lowlink[v], lowlink[u]);
            } else if (on_stack[u]) {
                lowlink[v] = std::min(lowlink[v], index[u]);
            }
        }
        if (lowlink[v] == index[v]) {
            ++components;
            int u;
            do {
                u = stack.back();
                stack.pop_back();
                on_stack[u] = false;
            } while (u != v);
        }
    }
};

}  // namespace

bool is_strongly_connected(const Graph& g) {
    SccState scc(g);
    for (int v = 0; v < g.size(); ++v)
        if (scc.index[v] < 0) scc.visit(v);
    return scc.components == 1;
}

SpectralInfo spectral_radius(const Graph& g, double tol, int max_iter) {
    if (tol <= 0.0) throw ValidationError("spectral_radius: tol must be positive");
    if (!is_strongly_connected(g))
        throw ValidationError("spectral_radius: graph must be strongly connected");

    const int n = g.size();
    // Power iteration on G + I. The shift makes the irreducible matrix
    // primitive, so the iteration converges even for periodic structures.
    std::vector<double> v(n, 1.0 / n), gv(n, 0.0);
    double lambda = 0.0;
    double residual = 0.0;
    for (int iter = 1; iter <= max_iter; ++iter) {
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += g.weight(i, j) * v[j];
            gv[i] = s;
        }
        // shifted image (G + I) v and its 1-norm (entries are nonnegative)
        double norm = 0.0;
        for (int i = 0; i < n; ++i) norm += gv[i] + v[i];
        lambda = norm - 1.0;
        residual = 0.0;
        for (int i = 0; i < n; ++i) residual = std::max(residual, std::abs(gv[i] - lambda * v[i]));
        if (residual <= tol) return {lambda, v, iter, residual};
        for (int i = 0; i < n; ++i) v[i] = (gv[i] + v[i]) / norm;
    }
    throw ConvergenceError("spectral_radius: no convergence after " + std::to_string(max_iter) +
                               " iterations, last residual " + std::to_string(residual),
                           {residual});
}

}  // namespace epibound
