#include "plab/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace plab {

Graph::Graph(int n, std::string name) : name_(std::move(name)) {
    if (n < 1) throw std::invalid_argument("graph order must be at least 1");
    adj_.resize(static_cast<std::size_t>(n));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order())
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " out of range [0, " +
                                    std::to_string(order()) + ")");
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (const auto& nb : adj_) twice += static_cast<long long>(nb.size());
    return twice / 2;
}

const std::vector<int>& Graph::neighbours(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop rejected at vertex " +
                                            std::to_string(u));
    auto insert = [this](int a, int b) {
        auto& nb = adj_[static_cast<std::size_t>(a)];
        auto it = std::lower_bound(nb.begin(), nb.end(), b);
        if (it == nb.end() || *it != b) nb.insert(it, b);
    };
    insert(u, v);
    insert(v, u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph complete_graph(int q) {
    if (q < 1) throw std::invalid_argument("complete graph needs q >= 1");
    Graph g(q, "K" + std::to_string(q));
    for (int u = 0; u < q; ++u)
        for (int v = u + 1; v < q; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path graph needs n >= 1");
    Graph g(n, "P" + std::to_string(n));
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
    Graph g(n, "C" + std::to_string(n));
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph star_graph(int n) {
    if (n < 2) throw std::invalid_argument("star graph needs n >= 2");
    Graph g(n, "S" + std::to_string(n));
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                       std::string name) {
    Graph g(n, std::move(name));
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::vector<std::pair<int, int>> bounded_distances(const Graph& g, int source,
                                                   int cutoff) {
    if (source < 0 || source >= g.order())
        throw std::invalid_argument("bounded_distances: invalid source");
    if (cutoff < 0) throw std::invalid_argument("bounded_distances: negative cutoff");
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<std::pair<int, int>> out;
    out.emplace_back(source, 0);
    dist[static_cast<std::size_t>(source)] = 0;
    std::size_t head = 0;
    while (head < out.size()) {
        auto [v, d] = out[head++];
        if (d == cutoff) continue;
        for (int w : g.neighbours(v)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = d + 1;
                out.emplace_back(w, d + 1);
            }
        }
    }
    return out;
}

std::vector<std::optional<int>> distances_from(const Graph& g, int source) {
    std::vector<std::optional<int>> dist(static_cast<std::size_t>(g.order()));
    for (auto [v, d] : bounded_distances(g, source, g.order()))
        dist[static_cast<std::size_t>(v)] = d;
    return dist;
}

std::optional<int> diameter(const Graph& g) {
    int best = 0;
    for (int s = 0; s < g.order(); ++s) {
        auto reached = bounded_distances(g, s, g.order());
        if (static_cast<int>(reached.size()) != g.order()) return std::nullopt;
        best = std::max(best, reached.back().second);
    }
    return best;
}

Graph graph_power(const Graph& g, int l) {
    if (l < 1) throw std::invalid_argument("graph power needs l >= 1");
    Graph out(g.order(), g.name().empty() ? "" : g.name() + "^" + std::to_string(l));
    for (int s = 0; s < g.order(); ++s)
        for (auto [v, d] : bounded_distances(g, s, l))
            if (s < v) out.add_edge(s, v);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g,
                                 const std::vector<int>& vertices) {
    if (vertices.empty())
        throw std::invalid_argument("induced subgraph of empty vertex set");
    std::vector<int> keep(vertices);
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= g.order())
            throw std::invalid_argument("induced subgraph: vertex out of range");
        index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    }
    InducedSubgraph out{Graph(static_cast<int>(keep.size())), keep};
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (int w : g.neighbours(keep[i])) {
            int j = index[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) out.graph.add_edge(static_cast<int>(i), j);
        }
    return out;
}

}  // namespace plab
