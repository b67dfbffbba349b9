#include "plab/theorem.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

namespace plab {

namespace {

long long product_of(const std::vector<int>& xs) {
    long long p = 1;
    for (int x : xs) p *= x;
    return p;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

ConditionCheck check_product_condition(const std::vector<int>& prefix_orders,
                                       int q) {
    if (prefix_orders.size() < 2)
        throw std::invalid_argument("product condition needs l >= 3");
    long long lhs = product_of(prefix_orders);
    long long m = *std::min_element(prefix_orders.begin(), prefix_orders.end());
    long long rhs = 3 * (m + 1) * q;
    return {"product_condition", lhs, rhs, lhs > rhs};
}

ConditionCheck check_hamming_condition(const std::vector<int>& orders, int l) {
    if (!std::is_sorted(orders.begin(), orders.end(), std::greater<int>()))
        throw std::invalid_argument("hamming condition expects nonincreasing orders");
    int d = static_cast<int>(orders.size());
    if (l < 3 || l >= d)
        throw std::invalid_argument("hamming condition needs 3 <= l < d");
    long long lhs = 1;
    for (int i = 0; i < l - 1; ++i) lhs *= orders[static_cast<std::size_t>(i)];
    long long tail = 1;
    for (int i = l - 1; i < d; ++i) tail *= orders[static_cast<std::size_t>(i)];
    long long rhs = 3 * (orders[static_cast<std::size_t>(l - 2)] + 1) * tail;
    return {"hamming_condition", lhs, rhs, lhs > rhs};
}

ConditionCheck check_hypercube_condition(int d, int q, int l) {
    if (d < 6 || q < 2)
        throw std::invalid_argument("hypercube condition needs d >= 6, q >= 2");
    long long lhs = d + 4 + std::max(4 - q, 0);  // compared against 2l
    bool holds = lhs <= 2LL * l && l < d;
    return {"hypercube_condition", lhs, 2LL * l, holds};
}

ConditionCheck necessary_ball_condition(const std::vector<int>& orders, int l) {
    if (orders.empty()) throw std::invalid_argument("no orders");
    if (l < 1 || l > static_cast<int>(orders.size()))
        throw std::invalid_argument("ball condition needs 1 <= l <= d");
    std::vector<int> sorted(orders);
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    long long lhs = 1;
    for (int i = 0; i < l; ++i) lhs *= sorted[static_cast<std::size_t>(i)];
    // elementary symmetric sums of (q_j - 1)
    int l0 = l / 2;
    std::vector<long long> e(static_cast<std::size_t>(l0) + 1, 0);
    e[0] = 1;
    for (int q : sorted)
        for (int j = l0; j >= 1; --j)
            e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * (q - 1);
    long long rhs = 0;
    for (int j = 1; j <= l0; ++j) rhs += e[static_cast<std::size_t>(j)];
    return {"necessary_ball_condition", lhs, rhs, lhs >= rhs};
}

ConditionCheck necessary_neighbor_condition(const std::vector<int>& orders,
                                            int l, int h) {
    if (h < 1) throw std::invalid_argument("neighbour condition needs h >= 1");
    if (l < 1 || l > static_cast<int>(orders.size()))
        throw std::invalid_argument("neighbour condition needs 1 <= l <= d");
    std::vector<int> sorted(orders);
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    long long lhs = 1;
    for (int i = 0; i < l; ++i) lhs *= sorted[static_cast<std::size_t>(i)];
    long long rhs = h;
    for (int q : sorted) rhs += q - 1;
    return {"necessary_neighbor_condition", lhs, rhs, lhs >= rhs};
}

Graph build_factor(const FactorSpec& spec) {
    if (spec.kind == "complete") return complete_graph(spec.n);
    if (spec.kind == "path") return path_graph(spec.n);
    if (spec.kind == "cycle") return cycle_graph(spec.n);
    if (spec.kind == "star") return star_graph(spec.n);
    if (spec.kind == "edges") return graph_from_edges(spec.n, spec.edges);
    throw std::invalid_argument("unknown factor kind: " + spec.kind);
}

Graph combine_tail(const std::vector<Graph>& tail_factors, int separation,
                   bool residue_numbering) {
    if (tail_factors.empty()) throw std::invalid_argument("empty tail");
    if (tail_factors.size() == 1) return tail_factors.front();
    ProductGraph tail = cartesian_product(tail_factors);
    const int n = tail.order();
    if (!residue_numbering || separation <= 1) return tail.graph;

    // Group vertices by digit sum mod separation; class c takes the indices
    // congruent to c. Vertices sharing a residue then differ in at least two
    // coordinates whenever every tail order is <= separation.
    std::vector<std::vector<int>> buckets(static_cast<std::size_t>(separation));
    for (int v = 0; v < n; ++v) {
        auto digits = tail.decode(v);
        long long sum = std::accumulate(digits.begin(), digits.end(), 0LL);
        buckets[static_cast<std::size_t>(sum % separation)].push_back(v);
    }
    for (const auto& b : buckets)
        if (static_cast<int>(b.size()) * separation != n)
            return tail.graph;  // uneven classes, keep row-major order

    std::vector<int> new_index(static_cast<std::size_t>(n));
    for (int c = 0; c < separation; ++c)
        for (std::size_t r = 0; r < buckets[static_cast<std::size_t>(c)].size(); ++r)
            new_index[static_cast<std::size_t>(
                buckets[static_cast<std::size_t>(c)][r])] =
                c + static_cast<int>(r) * separation;

    Graph out(n, tail.graph.name());
    for (auto [u, v] : tail.graph.edges())
        out.add_edge(new_index[static_cast<std::size_t>(u)],
                     new_index[static_cast<std::size_t>(v)]);
    return out;
}

long long Instance::target() const {
    long long n1 = separation;
    for (const auto& f : prefix) n1 *= f.order();
    return n1 - 1;
}

Instance realize(const InstanceSpec& spec) {
    if (spec.l < 3) throw std::invalid_argument("instance needs l >= 3");
    if (spec.h < 1) throw std::invalid_argument("instance needs h >= 1");
    if (static_cast<int>(spec.factors.size()) < spec.l)
        throw std::invalid_argument("instance needs at least l factors");

    Instance inst;
    inst.spec = spec;
    inst.name = spec.name;
    inst.l = spec.l;
    inst.h = spec.h;
    inst.separation = spec.separation;
    inst.gstar = spec.gstar;

    std::vector<Graph> tail_factors;
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        Graph f = build_factor(spec.factors[i]);
        if (f.order() < 2) throw std::invalid_argument("instance factor is trivial");
        inst.all_orders.push_back(f.order());
        if (static_cast<int>(i) < spec.l - 1)
            inst.prefix.push_back(std::move(f));
        else
            tail_factors.push_back(std::move(f));
    }
    inst.tail = combine_tail(tail_factors, spec.separation,
                             spec.residue_numbered_tail);
    if (spec.separation < 1 || spec.separation > inst.tail.order())
        throw std::invalid_argument("instance separation out of [1, |V(G)|]");
    for (int v : spec.gstar)
        if (v < 0 || v >= inst.tail.order())
            throw std::invalid_argument("gstar vertex outside the last factor");

    std::vector<Graph> all(inst.prefix);
    all.push_back(inst.tail);
    inst.product = cartesian_product(all);
    if (!inst.name.empty()) inst.product.graph.rename(inst.name);
    return inst;
}

namespace {

// Lexicographically first clique of the requested size, empty if none.
std::vector<int> first_clique(const Graph& g, int size) {
    std::vector<int> current;
    std::vector<int> found;
    auto extend = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(current.size()) == size) {
            found = current;
            return true;
        }
        for (int v = from; v < g.order(); ++v) {
            bool ok = true;
            for (int u : current)
                if (!g.adjacent(u, v)) { ok = false; break; }
            if (!ok) continue;
            current.push_back(v);
            if (self(self, v + 1)) return true;
            current.pop_back();
        }
        return false;
    };
    extend(extend, 0);
    return found;
}

}  // namespace

std::vector<int> canonical_certificate(const Instance& inst) {
    const long long n1 = inst.target() + 1;
    std::vector<int> set;

    if (!inst.gstar.empty()) {
        // general route: first factor x pinned middles x gstar
        long long expect = static_cast<long long>(inst.prefix.front().order()) *
                           static_cast<long long>(inst.gstar.size());
        if (expect != n1)
            throw CertificateMissing(
                "gstar set does not yield a certificate of the required order");
        std::vector<int> digits(static_cast<std::size_t>(inst.l), 0);
        for (int x1 = 0; x1 < inst.prefix.front().order(); ++x1)
            for (int g : inst.gstar) {
                digits.assign(static_cast<std::size_t>(inst.l), 0);
                digits[0] = x1;
                digits[static_cast<std::size_t>(inst.l - 1)] = g;
                set.push_back(inst.product.encode(digits));
            }
    } else {
        auto clique = first_clique(inst.tail, inst.separation);
        if (clique.empty())
            throw CertificateMissing(
                "no clique of size " + std::to_string(inst.separation) +
                " in the last factor and no gstar set supplied");
        // every prefix digit combination x the clique
        std::vector<int> digits(static_cast<std::size_t>(inst.l), 0);
        long long prefix_count = 1;
        for (const auto& f : inst.prefix) prefix_count *= f.order();
        for (long long p = 0; p < prefix_count; ++p) {
            long long rest = p;
            for (std::size_t i = inst.prefix.size(); i-- > 0;) {
                digits[i] = static_cast<int>(rest % inst.prefix[i].order());
                rest /= inst.prefix[i].order();
            }
            for (int g : clique) {
                digits[static_cast<std::size_t>(inst.l - 1)] = g;
                set.push_back(inst.product.encode(digits));
            }
        }
    }
    std::sort(set.begin(), set.end());
    return set;
}

ExperimentReport run_theorem_experiment(const Instance& inst) {
    if (inst.h > inst.separation)
        throw std::invalid_argument("experiment requires 1 <= h <= q_l");

    ExperimentReport report;
    report.instance = inst.name;
    report.l = inst.l;
    report.h = inst.h;
    report.separation = inst.separation;
    report.target = inst.target();
    const int n1 = static_cast<int>(report.target + 1);

    std::vector<int> prefix_orders;
    for (const auto& f : inst.prefix) prefix_orders.push_back(f.order());
    auto product_cond = check_product_condition(prefix_orders, inst.tail.order());
    report.hypothesis_ok = product_cond.holds;
    report.conditions.push_back(product_cond);
    report.conditions.push_back(
        necessary_ball_condition(inst.all_orders, inst.l));
    report.conditions.push_back(
        necessary_neighbor_condition(inst.all_orders, inst.l, inst.h));

    auto t0 = std::chrono::steady_clock::now();
    std::optional<ConstructionResult> construction;
    try {
        construction = construct_labelling(inst.prefix, inst.tail, inst.separation);
        report.constructed = true;
    } catch (const ConstructionStuck& stuck) {
        report.stuck_step = stuck.step;
    }
    report.timings_ms["construct"] = ms_since(t0);

    HVector hv = separation_tuple(inst.h, inst.l);
    Labelling linear_view;
    if (construction) {
        t0 = std::chrono::steady_clock::now();
        const Labelling& phi = construction->labelling;
        report.cyclic_ok =
            verify_cyclic(inst.product.graph, hv, phi, n1).pass;
        report.no_hole_cyclic_ok = no_hole_cyclic(phi, n1);
        linear_view = linear_labelling(phi.labels);
        report.linear_ok = verify_linear(inst.product.graph, hv, linear_view).pass;
        report.no_hole_linear_ok = no_hole_linear(linear_view);
        report.constructed_span = span(linear_view);
        report.timings_ms["verify"] = ms_since(t0);
    }

    t0 = std::chrono::steady_clock::now();
    try {
        auto set = canonical_certificate(inst);
        auto check = certificate_check(inst.product.graph, set, inst.l);
        report.certificate.vertices = std::move(set);
        report.certificate.order =
            static_cast<int>(report.certificate.vertices.size());
        report.certificate.diameter = check.diameter;
        report.certificate.accepted = check.accepted;
        report.certificate.bound = check.accepted ? check.bound : -1;
    } catch (const CertificateMissing&) {
        report.certificate.accepted = false;
    }
    report.timings_ms["certificate"] = ms_since(t0);

    if (construction) {
        t0 = std::chrono::steady_clock::now();
        auto colouring = colouring_from_labelling(inst.product.graph, inst.l,
                                                  linear_view);
        report.chi_pairs_checked = colouring.pairs_checked;
        // proper N_1-colouring of H^l plus an N_1-clique (the certificate)
        report.chi_ok = colouring.proper && colouring.colours == n1 &&
                        report.certificate.accepted;
        if (report.chi_ok) report.chi = n1;
        report.timings_ms["colouring"] = ms_since(t0);
    }

    report.reproduced = report.constructed && report.cyclic_ok &&
                        report.linear_ok && report.no_hole_cyclic_ok &&
                        report.no_hole_linear_ok &&
                        report.constructed_span == report.target &&
                        report.certificate.accepted &&
                        report.certificate.bound == report.target &&
                        report.chi_ok;
    if (report.reproduced) report.invariant_value = report.target;
    report.construction = std::move(construction);
    return report;
}

Graph sandwich_sample(const ProductGraph& product,
                      const std::vector<int>& certificate, double density,
                      std::uint64_t seed) {
    if (density < 0.0 || density > 1.0)
        throw std::invalid_argument("sandwich density must be in [0, 1]");
    std::vector<char> in_k(static_cast<std::size_t>(product.order()), 0);
    for (int v : certificate) {
        if (v < 0 || v >= product.order())
            throw std::invalid_argument("certificate vertex out of range");
        in_k[static_cast<std::size_t>(v)] = 1;
    }
    std::mt19937_64 rng(seed);
    auto draw = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    Graph x(product.order(),
            product.graph.name().empty() ? "X" : product.graph.name() + "|X");
    for (auto [u, v] : product.graph.edges()) {
        bool keep = in_k[static_cast<std::size_t>(u)] &&
                    in_k[static_cast<std::size_t>(v)];
        if (!keep) keep = draw() < density;
        if (keep) x.add_edge(u, v);
    }
    return x;
}

SandwichReport run_sandwich_experiment(const Instance& inst, int samples,
                                       double density, std::uint64_t seed) {
    SandwichReport out;
    out.base = run_theorem_experiment(inst);
    if (!out.base.reproduced) return out;

    const int n1 = static_cast<int>(out.base.target + 1);
    const Labelling& phi = out.base.construction->labelling;
    Labelling linear_view = linear_labelling(phi.labels);
    HVector hv = separation_tuple(inst.h, inst.l);
    const auto& certificate = out.base.certificate.vertices;

    out.all_reproduced = samples > 0;
    for (int i = 0; i < samples; ++i) {
        SandwichSampleReport s;
        s.seed = seed + static_cast<std::uint64_t>(i);
        Graph x = sandwich_sample(inst.product, certificate, density, s.seed);
        s.edge_count = x.edge_count();
        s.linear_ok = verify_linear(x, hv, linear_view).pass;
        s.cyclic_ok = verify_cyclic(x, hv, phi, n1).pass;
        s.no_hole_linear_ok = no_hole_linear(linear_view);
        s.no_hole_cyclic_ok = no_hole_cyclic(phi, n1);
        s.span_ok = span(linear_view) == out.base.target;

        auto on_k = restrict_labelling(linear_view, certificate);
        std::vector<int> sorted(on_k.labels);
        std::sort(sorted.begin(), sorted.end());
        s.bijection_ok = static_cast<int>(sorted.size()) == n1;
        for (int j = 0; j < static_cast<int>(sorted.size()) && s.bijection_ok; ++j)
            if (sorted[static_cast<std::size_t>(j)] != j) s.bijection_ok = false;

        auto colouring = colouring_from_labelling(x, inst.l, linear_view);
        bool clique_ok = certificate_check(x, certificate, inst.l).accepted;
        s.chi_ok = colouring.proper && colouring.colours == n1 && clique_ok;

        s.reproduced = s.linear_ok && s.cyclic_ok && s.no_hole_linear_ok &&
                       s.no_hole_cyclic_ok && s.span_ok && s.bijection_ok &&
                       s.chi_ok;
        out.all_reproduced = out.all_reproduced && s.reproduced;
        out.samples.push_back(std::move(s));
    }
    return out;
}

InstanceSpec section4_instance(int q1, int l, const std::vector<int>& mids,
                               int separation, int q) {
    if (l < 3) throw std::invalid_argument("general instance needs l >= 3");
    if (static_cast<int>(mids.size()) != l - 2)
        throw std::invalid_argument("general instance needs l - 2 middle orders");
    for (int m : mids)
        if (m < 2) throw std::invalid_argument("middle orders must be >= 2");
    int qlm1 = mids.back();
    if (qlm1 != *std::min_element(mids.begin(), mids.end()) || qlm1 > q1)
        throw std::invalid_argument(
            "the last middle order must be the minimum prefix order");
    if (3LL * qlm1 * (qlm1 + 1) >= q1)
        throw std::invalid_argument("recipe requires 3*q_{l-1}*(q_{l-1}+1) < q_1");
    if (separation < 1 || separation > qlm1)
        throw std::invalid_argument("recipe requires 1 <= q_l <= q_{l-1}");

    long long mprod = product_of(mids);
    long long mstar = mprod * separation;  // order of the spanning certificate
    // window: q_2...q_{l-1} q_l <= q < q_1 q_2...q_{l-2} q_l / (3(q_{l-1}+1))
    long long rhs = static_cast<long long>(q1) * (mprod / qlm1) * separation;
    if (q < mstar || 3LL * (qlm1 + 1) * q >= rhs)
        throw std::invalid_argument("q outside the admissible window");

    // Last factor: a certificate core of order mstar and diameter l-1, plus
    // pendants up to order q, indexed to keep same-residue slices apart.
    std::vector<std::pair<int, int>> edges;
    int core = static_cast<int>(mstar);
    if (l == 3 && core == 4) {
        edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    } else if (l == 3) {
        for (int v = 1; v < core; ++v) edges.emplace_back(0, v);  // star
    } else {
        for (int v = 0; v + 1 < l; ++v) edges.emplace_back(v, v + 1);  // path core
        for (int v = l; v < core; ++v) edges.emplace_back((l - 1) / 2, v);
    }
    for (int v = core; v < q; ++v)
        edges.emplace_back(v, (v % 2 == 0) ? 1 % core : 0);

    InstanceSpec spec;
    spec.name = "general-" + std::to_string(q1) + "-l" + std::to_string(l) +
                "-q" + std::to_string(q);
    spec.factors.push_back({"complete", q1, {}});
    for (int m : mids) spec.factors.push_back({"complete", m, {}});
    spec.factors.push_back({"edges", q, edges});
    spec.l = l;
    spec.h = separation;
    spec.separation = separation;
    spec.gstar.resize(static_cast<std::size_t>(core));
    std::iota(spec.gstar.begin(), spec.gstar.end(), 0);
    spec.residue_numbered_tail = false;  // the last factor is explicit
    return spec;
}

}  // namespace plab
