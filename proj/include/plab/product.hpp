#pragma once

#include <optional>
#include <vector>

#include "plab/graph.hpp"

namespace plab {

// Cartesian product of graphs, keeping the factor structure and a coordinate
// codec. Flat vertex indices are row-major over the factor digit vectors with
// the last coordinate fastest, so fixing all but the last coordinate gives a
// contiguous block.
struct ProductGraph {
    Graph graph;                 // flattened product
    std::vector<Graph> factors;

    int order() const { return graph.order(); }
    std::vector<int> orders() const;

    int encode(const std::vector<int>& digits) const;
    std::vector<int> decode(int v) const;

    // Sum of per-factor distances; nullopt when some coordinate pair is
    // unreachable in its factor. Factor tables are precomputed, the full
    // product is never swept.
    std::optional<int> distance(int u, int v) const;

    std::vector<long long> strides;  // strides[i] = product of orders after i
    // per factor: dist[i][a][b], nullopt = unreachable
    std::vector<std::vector<std::vector<std::optional<int>>>> factor_dist;
};

ProductGraph cartesian_product(const std::vector<Graph>& factors);
ProductGraph hamming_graph(const std::vector<int>& orders);
ProductGraph hypercube(int d);

}  // namespace plab
