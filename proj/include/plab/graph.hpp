#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace plab {

// Finite simple undirected graph with 0-based vertex indices and sorted
// adjacency lists. Immutable in practice once built: construction helpers
// below return graphs by value and nothing mutates them afterwards, so they
// are safe to share across concurrent readers.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, std::string name = "");

    int order() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const;
    const std::vector<int>& neighbours(int v) const;
    int degree(int v) const { return static_cast<int>(neighbours(v).size()); }
    bool adjacent(int u, int v) const;

    // Inserts an undirected edge, keeping lists sorted. Duplicates are
    // silently collapsed; self-loops and bad endpoints throw.
    void add_edge(int u, int v);

    // Edge list as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    const std::string& name() const { return name_; }
    void rename(std::string name) { name_ = std::move(name); }

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    std::string name_;
};

Graph complete_graph(int q);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);  // vertex 0 is the centre
Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                       std::string name = "");

// BFS from `source` up to depth `cutoff`; returns (vertex, distance) pairs in
// discovery order, source included. Vertices beyond the cutoff (or
// unreachable) are absent.
std::vector<std::pair<int, int>> bounded_distances(const Graph& g, int source,
                                                   int cutoff);

// Full single-source distances; nullopt for unreachable vertices.
std::vector<std::optional<int>> distances_from(const Graph& g, int source);

// Max finite pairwise distance; nullopt when the graph is disconnected.
std::optional<int> diameter(const Graph& g);

// Same vertex set, u ~ v iff 1 <= dist(u, v) <= l.
Graph graph_power(const Graph& g, int l);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> original;  // new index -> vertex of the host graph
};

// Induced subgraph on `vertices` (deduplicated, kept in sorted order).
InducedSubgraph induced_subgraph(const Graph& g,
                                 const std::vector<int>& vertices);

}  // namespace plab
