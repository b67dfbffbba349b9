#include "plab/solve.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace plab {

std::string invariant_name(Invariant inv) {
    switch (inv) {
        case Invariant::lambda: return "lambda";
        case Invariant::no_hole_lambda: return "nlambda";
        case Invariant::sigma: return "sigma";
        case Invariant::no_hole_sigma: return "nsigma";
        case Invariant::chromatic: return "chromatic";
    }
    return "?";
}

namespace {

struct BudgetExceeded {};

void check_h(const HVector& h) {
    if (!h.monotone())
        throw std::invalid_argument("solver requires a nonincreasing separation tuple");
}

// (other, required) lists over all pairs within distance l, required >= 1.
using ConstraintLists = std::vector<std::vector<std::pair<int, int>>>;

ConstraintLists build_constraints(const Graph& g, const HVector& h) {
    ConstraintLists lists(static_cast<std::size_t>(g.order()));
    for (int u = 0; u < g.order(); ++u)
        for (auto [v, d] : bounded_distances(g, u, h.classes())) {
            if (v == u) continue;
            int req = h.at(d);
            if (req >= 1) lists[static_cast<std::size_t>(u)].emplace_back(v, req);
        }
    return lists;
}

Graph constraint_graph(int n, const ConstraintLists& lists) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (auto [v, req] : lists[static_cast<std::size_t>(u)])
            if (u < v) g.add_edge(u, v);
    return g;
}

std::vector<int> assignment_order(int n, const ConstraintLists& lists,
                                  bool oracle) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    if (!oracle)
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return lists[static_cast<std::size_t>(a)].size() >
                   lists[static_cast<std::size_t>(b)].size();
        });
    return order;
}

struct LabelSearch {
    const ConstraintLists& constraints;
    std::vector<int> order;
    int n;
    int label_count;   // labels 0 .. label_count-1
    bool cyclic;
    bool no_hole;
    bool oracle;
    unsigned long long budget;
    unsigned long long* nodes;

    std::vector<int> label;
    std::vector<int> used_count;
    int distinct = 0;

    bool run(std::vector<int>& out) {
        label.assign(static_cast<std::size_t>(n), -1);
        used_count.assign(static_cast<std::size_t>(label_count), 0);
        distinct = 0;
        if (!dfs(0)) return false;
        out = label;
        return true;
    }

    bool dfs(int pos) {
        if (pos == n) return !no_hole || hole_free();
        int v = order[static_cast<std::size_t>(pos)];
        // Rotating every label by a constant preserves cyclic constraints and
        // cyclic hole-freeness, so the first assigned vertex can be pinned.
        int hi = (cyclic && !oracle && pos == 0) ? 1 : label_count;
        for (int cand = 0; cand < hi; ++cand) {
            if (++*nodes > budget) throw BudgetExceeded{};
            if (!feasible(v, cand)) continue;
            if (no_hole && !oracle && !cyclic) {
                // every later vertex adds at most one unused label
                int would = distinct + (used_count[static_cast<std::size_t>(cand)] == 0);
                if (label_count - would > n - pos - 1) continue;
            }
            label[static_cast<std::size_t>(v)] = cand;
            ++used_count[static_cast<std::size_t>(cand)];
            if (used_count[static_cast<std::size_t>(cand)] == 1) ++distinct;
            if (dfs(pos + 1)) return true;
            --used_count[static_cast<std::size_t>(cand)];
            if (used_count[static_cast<std::size_t>(cand)] == 0) --distinct;
            label[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    bool feasible(int v, int cand) const {
        for (auto [w, req] : constraints[static_cast<std::size_t>(v)]) {
            int other = label[static_cast<std::size_t>(w)];
            if (other < 0) continue;
            int sep = std::abs(cand - other);
            if (cyclic) sep = std::min(sep, label_count - sep);
            if (sep < req) return false;
        }
        return true;
    }

    bool hole_free() const {
        if (!cyclic) return distinct == label_count;
        int runs = 0;
        for (int i = 0; i < label_count; ++i) {
            int prev = (i + label_count - 1) % label_count;
            if (used_count[static_cast<std::size_t>(i)] == 0 &&
                used_count[static_cast<std::size_t>(prev)] != 0)
                ++runs;
        }
        return runs <= 1;
    }
};

std::optional<std::vector<int>> decide_linear(const ConstraintLists& lists,
                                              int n, int k, bool no_hole,
                                              const SolveOptions& opts,
                                              unsigned long long* nodes) {
    LabelSearch search{lists,  assignment_order(n, lists, opts.oracle),
                       n,      k + 1,
                       false,  no_hole,
                       opts.oracle, opts.node_budget,
                       nodes};
    std::vector<int> out;
    if (search.run(out)) return out;
    return std::nullopt;
}

std::optional<std::vector<int>> decide_cyclic(const ConstraintLists& lists,
                                              int n, int k, bool no_hole,
                                              const SolveOptions& opts,
                                              unsigned long long* nodes) {
    LabelSearch search{lists,  assignment_order(n, lists, opts.oracle),
                       n,      k,
                       true,   no_hole,
                       opts.oracle, opts.node_budget,
                       nodes};
    std::vector<int> out;
    if (search.run(out)) return out;
    return std::nullopt;
}

int max_clique_size(const Graph& g) {
    int n = g.order();
    std::vector<int> verts(static_cast<std::size_t>(n));
    std::iota(verts.begin(), verts.end(), 0);
    std::stable_sort(verts.begin(), verts.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    int best = 0;
    std::vector<int> current;
    auto extend = [&](auto&& self, const std::vector<int>& candidates) -> void {
        if (static_cast<int>(current.size()) > best)
            best = static_cast<int>(current.size());
        if (current.size() + candidates.size() <= static_cast<std::size_t>(best))
            return;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (current.size() + (candidates.size() - i) <= static_cast<std::size_t>(best))
                return;
            int v = candidates[i];
            std::vector<int> next;
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
            current.push_back(v);
            self(self, next);
            current.pop_back();
        }
    };
    extend(extend, verts);
    return best;
}

std::vector<int> some_max_clique(const Graph& g, int size) {
    // Recover one clique of the given size, vertices ascending.
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
            if (g.order() - v < size - static_cast<int>(current.size())) break;
            current.push_back(v);
            if (self(self, v + 1)) return true;
            current.pop_back();
        }
        return false;
    };
    extend(extend, 0);
    return found;
}

bool colourable(const Graph& g, int k, const std::vector<int>& seed,
                const SolveOptions& opts, unsigned long long* nodes) {
    int n = g.order();
    std::vector<int> order;
    std::vector<char> seeded(static_cast<std::size_t>(n), 0);
    for (int v : seed) {
        order.push_back(v);
        seeded[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!seeded[static_cast<std::size_t>(v)]) rest.push_back(v);
    std::stable_sort(rest.begin(), rest.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    order.insert(order.end(), rest.begin(), rest.end());

    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < seed.size(); ++i)
        colour[static_cast<std::size_t>(seed[i])] = static_cast<int>(i);

    auto dfs = [&](auto&& self, int pos, int used) -> bool {
        if (pos == n) return true;
        int v = order[static_cast<std::size_t>(pos)];
        if (colour[static_cast<std::size_t>(v)] >= 0) return self(self, pos + 1, used);
        int limit = opts.oracle ? k : std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (++*nodes > opts.node_budget) throw BudgetExceeded{};
            bool ok = true;
            for (int w : g.neighbours(v))
                if (colour[static_cast<std::size_t>(w)] == c) { ok = false; break; }
            if (!ok) continue;
            colour[static_cast<std::size_t>(v)] = c;
            if (self(self, pos + 1, std::max(used, c + 1))) return true;
            colour[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    return dfs(dfs, 0, static_cast<int>(seed.size()));
}

std::optional<std::vector<int>> colour_witness(const Graph& g, int k,
                                               const std::vector<int>& seed,
                                               const SolveOptions& opts,
                                               unsigned long long* nodes);

SolveResult unresolved(Invariant inv, int lo, int hi, unsigned long long nodes) {
    SolveResult r;
    r.invariant = inv;
    r.status = SolveResult::Status::unresolved;
    r.bracket_lo = lo;
    r.bracket_hi = hi;
    r.nodes = nodes;
    return r;
}

SolveResult all_zero_result(Invariant inv, const Graph& g) {
    SolveResult r;
    r.invariant = inv;
    r.status = SolveResult::Status::finite;
    r.value = 0;
    std::vector<int> zeros(static_cast<std::size_t>(g.order()), 0);
    r.witness = inv == Invariant::sigma || inv == Invariant::no_hole_sigma
                    ? cyclic_labelling(zeros, 1)
                    : linear_labelling(zeros);
    return r;
}

}  // namespace

std::optional<Labelling> feasible_linear(const Graph& g, const HVector& h,
                                         int k, const SolveOptions& opts) {
    check_h(h);
    if (k < 0) throw std::invalid_argument("feasible_linear: negative budget");
    auto lists = build_constraints(g, h);
    unsigned long long nodes = 0;
    auto out = decide_linear(lists, g.order(), k, false, opts, &nodes);
    if (!out) return std::nullopt;
    return linear_labelling(*out);
}

SolveResult lambda_exact(const Graph& g, const HVector& h,
                         const SolveOptions& opts) {
    check_h(h);
    if (h.h[0] == 0) return all_zero_result(Invariant::lambda, g);
    auto lists = build_constraints(g, h);
    SolveResult r;
    r.invariant = Invariant::lambda;

    int lo = 0;
    int hi = h.h[0] * (g.order() - 1);  // spaced labels along any order
    if (!opts.oracle) {
        Graph power = constraint_graph(g.order(), lists);
        lo = max_clique_size(power) - 1;
        auto chi = chromatic_exact(power, opts);
        r.nodes += chi.nodes;
        if (chi.status == SolveResult::Status::finite)
            hi = h.h[0] * (chi.value - 1);
    }

    for (int k = lo; k <= hi; ++k) {
        try {
            auto out = decide_linear(lists, g.order(), k, false, opts, &r.nodes);
            if (out) {
                r.status = SolveResult::Status::finite;
                r.value = k;
                r.witness = linear_labelling(*out);
                return r;
            }
        } catch (const BudgetExceeded&) {
            return unresolved(Invariant::lambda, k, hi, r.nodes);
        }
    }
    throw std::logic_error("lambda search exhausted its certified window");
}

SolveResult nlambda_exact(const Graph& g, const HVector& h,
                          const SolveOptions& opts) {
    check_h(h);
    if (h.h[0] == 0) return all_zero_result(Invariant::no_hole_lambda, g);
    auto lists = build_constraints(g, h);
    SolveResult r;
    r.invariant = Invariant::no_hole_lambda;

    int start = 0;
    if (!opts.oracle) {
        auto lam = lambda_exact(g, h, opts);
        r.nodes += lam.nodes;
        if (lam.status == SolveResult::Status::unresolved)
            return unresolved(Invariant::no_hole_lambda, lam.bracket_lo,
                              g.order() - 1, r.nodes);
        start = lam.value;
    }

    // A no-hole labelling of span s uses all s+1 labels, so s <= n-1.
    for (int s = start; s <= g.order() - 1; ++s) {
        try {
            auto out = decide_linear(lists, g.order(), s, true, opts, &r.nodes);
            if (out) {
                r.status = SolveResult::Status::finite;
                r.value = s;
                r.witness = linear_labelling(*out);
                return r;
            }
        } catch (const BudgetExceeded&) {
            return unresolved(Invariant::no_hole_lambda, s, g.order() - 1, r.nodes);
        }
    }
    r.status = SolveResult::Status::infinite;
    return r;
}

SolveResult sigma_exact(const Graph& g, const HVector& h,
                        const SolveOptions& opts) {
    check_h(h);
    if (h.h[0] == 0) return all_zero_result(Invariant::sigma, g);
    auto lists = build_constraints(g, h);
    SolveResult r;
    r.invariant = Invariant::sigma;

    int k_lo = 1;
    int k_hi = h.h[0] * (g.order() - 1) + h.h[0];  // linear witness wrapped
    if (!opts.oracle) {
        auto lam = lambda_exact(g, h, opts);
        r.nodes += lam.nodes;
        if (lam.status == SolveResult::Status::unresolved)
            return unresolved(Invariant::sigma, lam.bracket_lo,
                              lam.bracket_hi + h.h[0] - 1, r.nodes);
        k_lo = lam.value + 1;
        k_hi = lam.value + h.h[0];
    }

    for (int k = k_lo; k <= k_hi; ++k) {
        try {
            auto out = decide_cyclic(lists, g.order(), k, false, opts, &r.nodes);
            if (out) {
                r.status = SolveResult::Status::finite;
                r.value = k - 1;
                r.witness = cyclic_labelling(*out, k);
                return r;
            }
        } catch (const BudgetExceeded&) {
            return unresolved(Invariant::sigma, k - 1, k_hi - 1, r.nodes);
        }
    }
    throw std::logic_error("sigma search exhausted its certified window");
}

SolveResult nsigma_exact(const Graph& g, const HVector& h,
                         const SolveOptions& opts) {
    check_h(h);
    if (h.h[0] == 0) return all_zero_result(Invariant::no_hole_sigma, g);
    auto lists = build_constraints(g, h);
    SolveResult r;
    r.invariant = Invariant::no_hole_sigma;

    auto nl = nlambda_exact(g, h, opts);
    r.nodes += nl.nodes;
    if (nl.status == SolveResult::Status::unresolved)
        return unresolved(Invariant::no_hole_sigma, nl.bracket_lo,
                          nl.bracket_hi + h.h[0], r.nodes);
    if (nl.status == SolveResult::Status::infinite) {
        // no-hole linear is a lower bound in the chain, so no-hole cyclic
        // cannot be finite either
        r.status = SolveResult::Status::infinite;
        return r;
    }

    int k_lo = 1;
    if (!opts.oracle) {
        auto sig = sigma_exact(g, h, opts);
        r.nodes += sig.nodes;
        if (sig.status == SolveResult::Status::unresolved)
            return unresolved(Invariant::no_hole_sigma, sig.bracket_lo,
                              nl.value + h.h[0], r.nodes);
        k_lo = sig.value + 1;
    }
    // A no-hole linear witness of span s read modulo s + h_1 keeps every
    // separation (the wrap gap is at least h_1) and stays hole-free, so the
    // scan below always terminates within the window.
    int k_hi = nl.value + h.h[0] + 1;

    for (int k = k_lo; k <= k_hi; ++k) {
        try {
            auto out = decide_cyclic(lists, g.order(), k, true, opts, &r.nodes);
            if (out) {
                r.status = SolveResult::Status::finite;
                r.value = k - 1;
                r.witness = cyclic_labelling(*out, k);
                return r;
            }
        } catch (const BudgetExceeded&) {
            return unresolved(Invariant::no_hole_sigma, k - 1, k_hi - 1, r.nodes);
        }
    }
    throw std::logic_error("nsigma search exhausted its certified window");
}

SolveResult chromatic_exact(const Graph& g, const SolveOptions& opts) {
    SolveResult r;
    r.invariant = Invariant::chromatic;

    int lo = 1;
    std::vector<int> seed;
    if (!opts.oracle) {
        lo = max_clique_size(g);
        seed = some_max_clique(g, lo);
    }
    for (int k = lo; k <= g.order(); ++k) {
        try {
            auto out = colour_witness(g, k, seed, opts, &r.nodes);
            if (out) {
                r.status = SolveResult::Status::finite;
                r.value = k;
                r.witness = linear_labelling(*out);
                return r;
            }
        } catch (const BudgetExceeded&) {
            return unresolved(Invariant::chromatic, k, g.order(), r.nodes);
        }
    }
    throw std::logic_error("chromatic search exhausted [clique, n]");
}

namespace {

std::optional<std::vector<int>> colour_witness(const Graph& g, int k,
                                               const std::vector<int>& seed,
                                               const SolveOptions& opts,
                                               unsigned long long* nodes) {
    int n = g.order();
    std::vector<int> order;
    std::vector<char> seeded(static_cast<std::size_t>(n), 0);
    for (int v : seed) {
        order.push_back(v);
        seeded[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!seeded[static_cast<std::size_t>(v)]) rest.push_back(v);
    if (!opts.oracle)
        std::stable_sort(rest.begin(), rest.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    order.insert(order.end(), rest.begin(), rest.end());

    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < seed.size(); ++i) {
        if (static_cast<int>(i) >= k) return std::nullopt;  // clique needs k >= |seed|
        colour[static_cast<std::size_t>(seed[i])] = static_cast<int>(i);
    }

    auto dfs = [&](auto&& self, int pos, int used) -> bool {
        if (pos == n) return true;
        int v = order[static_cast<std::size_t>(pos)];
        if (colour[static_cast<std::size_t>(v)] >= 0)
            return self(self, pos + 1, std::max(used, colour[static_cast<std::size_t>(v)] + 1));
        int limit = opts.oracle ? k : std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (++*nodes > opts.node_budget) throw BudgetExceeded{};
            bool ok = true;
            for (int w : g.neighbours(v))
                if (colour[static_cast<std::size_t>(w)] == c) { ok = false; break; }
            if (!ok) continue;
            colour[static_cast<std::size_t>(v)] = c;
            if (self(self, pos + 1, std::max(used, c + 1))) return true;
            colour[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    if (dfs(dfs, 0, static_cast<int>(seed.size()))) return colour;
    return std::nullopt;
}

}  // namespace

SolveResult solve_invariant(Invariant inv, const Graph& g, const HVector& h,
                            const SolveOptions& opts) {
    switch (inv) {
        case Invariant::lambda: return lambda_exact(g, h, opts);
        case Invariant::no_hole_lambda: return nlambda_exact(g, h, opts);
        case Invariant::sigma: return sigma_exact(g, h, opts);
        case Invariant::no_hole_sigma: return nsigma_exact(g, h, opts);
        case Invariant::chromatic: return chromatic_exact(g, opts);
    }
    throw std::invalid_argument("unknown invariant");
}

CertificateResult certificate_check(const Graph& g, const std::vector<int>& set,
                                    int l) {
    if (set.empty()) throw std::invalid_argument("certificate set is empty");
    auto sub = induced_subgraph(g, set);
    CertificateResult r;
    r.diameter = diameter(sub.graph);
    r.accepted = r.diameter.has_value() && *r.diameter <= l;
    r.bound = r.accepted ? sub.graph.order() - 1 : 0;
    return r;
}

}  // namespace plab
