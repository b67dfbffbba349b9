#include "plab/product.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace plab {

std::vector<int> ProductGraph::orders() const {
    std::vector<int> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(f.order());
    return out;
}

int ProductGraph::encode(const std::vector<int>& digits) const {
    if (digits.size() != factors.size())
        throw std::invalid_argument("encode: wrong digit count");
    long long v = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] < 0 || digits[i] >= factors[i].order())
            throw std::invalid_argument("encode: digit out of range");
        v += digits[i] * strides[i];
    }
    return static_cast<int>(v);
}

std::vector<int> ProductGraph::decode(int v) const {
    if (v < 0 || v >= order()) throw std::invalid_argument("decode: out of range");
    std::vector<int> digits(factors.size());
    long long rest = v;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        digits[i] = static_cast<int>(rest / strides[i]);
        rest %= strides[i];
    }
    return digits;
}

std::optional<int> ProductGraph::distance(int u, int v) const {
    auto du = decode(u);
    auto dv = decode(v);
    int total = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& d = factor_dist[i][static_cast<std::size_t>(du[i])]
                                   [static_cast<std::size_t>(dv[i])];
        if (!d) return std::nullopt;
        total += *d;
    }
    return total;
}

ProductGraph cartesian_product(const std::vector<Graph>& factors) {
    if (factors.empty())
        throw std::invalid_argument("cartesian product of no factors");
    long long n = 1;
    for (const auto& f : factors) {
        n *= f.order();
        if (n > std::numeric_limits<int>::max())
            throw std::invalid_argument("cartesian product too large");
    }

    ProductGraph pg;
    pg.factors = factors;
    pg.strides.assign(factors.size(), 1);
    for (std::size_t i = factors.size(); i-- > 1;)
        pg.strides[i - 1] = pg.strides[i] * factors[i].order();

    std::string name;
    for (const auto& f : factors) {
        if (!name.empty()) name += "*";
        name += f.name().empty() ? ("G" + std::to_string(f.order())) : f.name();
    }
    pg.graph = Graph(static_cast<int>(n), name);

    // Adjacency straight from the product rule: change exactly one coordinate
    // along a factor edge.
    std::vector<int> digits(factors.size(), 0);
    for (int v = 0; v < static_cast<int>(n); ++v) {
        for (std::size_t i = 0; i < factors.size(); ++i) {
            for (int w : factors[i].neighbours(digits[i])) {
                if (w > digits[i]) {
                    long long u = v + (w - digits[i]) * pg.strides[i];
                    pg.graph.add_edge(v, static_cast<int>(u));
                }
            }
        }
        // odometer increment, last digit fastest
        for (std::size_t i = factors.size(); i-- > 0;) {
            if (++digits[i] < factors[i].order()) break;
            digits[i] = 0;
        }
    }

    pg.factor_dist.resize(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const Graph& f = factors[i];
        auto& table = pg.factor_dist[i];
        table.resize(static_cast<std::size_t>(f.order()));
        for (int s = 0; s < f.order(); ++s)
            table[static_cast<std::size_t>(s)] = distances_from(f, s);
    }
    return pg;
}

ProductGraph hamming_graph(const std::vector<int>& orders) {
    if (orders.empty()) throw std::invalid_argument("hamming graph needs orders");
    std::vector<Graph> factors;
    factors.reserve(orders.size());
    for (int q : orders) {
        if (q < 2) throw std::invalid_argument("hamming graph orders must be >= 2");
        factors.push_back(complete_graph(q));
    }
    auto pg = cartesian_product(factors);
    std::string name = "H_";
    for (std::size_t i = 0; i < orders.size(); ++i)
        name += (i ? "," : "") + std::to_string(orders[i]);
    pg.graph.rename(name);
    return pg;
}

ProductGraph hypercube(int d) {
    if (d < 1) throw std::invalid_argument("hypercube needs d >= 1");
    auto pg = hamming_graph(std::vector<int>(static_cast<std::size_t>(d), 2));
    pg.graph.rename("Q" + std::to_string(d));
    return pg;
}

}  // namespace plab
