#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace repdim {

// Simple undirected graph on vertices 0..n-1, dense adjacency.
// Immutable in spirit: build it, then share freely.
class Graph {
public:
    Graph() : n_(0) {}
    explicit Graph(int n);

    int n() const { return n_; }
    bool adjacent(int u, int v) const { return adj_[idx(u, v)]; }

    void add_edge(int u, int v);

    int degree(int v) const;
    int edge_count() const;
    // Edges as (u,v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    Eigen::MatrixXd adjacency() const;

    bool operator==(const Graph& other) const = default;

private:
    int idx(int u, int v) const { return u * n_ + v; }
    int n_;
    std::vector<bool> adj_;
};

struct CliqueUnionInfo {
    std::vector<int> component_sizes; // descending
    int r = 0;                        // number of components of maximal size
};

// --- formats ---
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);
Graph parse_edge_list(std::string_view text);

// --- basic constructions ---
Graph complement(const Graph& g);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();
Graph disjoint_union(const std::vector<Graph>& parts);
Graph line_graph(const Graph& g);

// --- classifiers ---
std::vector<std::vector<int>> connected_components(const Graph& g);
std::optional<CliqueUnionInfo> classify_clique_union(const Graph& g);
std::optional<int> regularity(const Graph& g);
int bipartite_component_count(const Graph& g);

bool is_complete(const Graph& g);
bool is_empty(const Graph& g);

} // namespace repdim
