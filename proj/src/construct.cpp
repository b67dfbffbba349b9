#include "plab/construct.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "plab/product.hpp"

namespace plab {

namespace {

std::vector<std::vector<int>> distance_table(const Graph& g) {
    std::vector<std::vector<int>> table(
        static_cast<std::size_t>(g.order()),
        std::vector<int>(static_cast<std::size_t>(g.order()), -1));
    for (int s = 0; s < g.order(); ++s)
        for (auto [v, d] : bounded_distances(g, s, g.order()))
            table[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] = d;
    return table;
}

}  // namespace

ConstructionContext make_construction_context(
    const std::vector<Graph>& prefix_factors, const Graph& last,
    int separation) {
    if (prefix_factors.size() < 2)
        throw std::invalid_argument("construction needs at least two prefix factors (l >= 3)");
    for (const auto& f : prefix_factors)
        if (f.order() < 2)
            throw std::invalid_argument("construction: trivial prefix factor");
    if (last.order() < 2)
        throw std::invalid_argument("construction: trivial last factor");
    if (separation < 1 || separation > last.order())
        throw std::invalid_argument("construction: separation must be in [1, |V(G)|]");

    ConstructionContext ctx;
    ctx.l = static_cast<int>(prefix_factors.size()) + 1;
    ctx.separation = separation;
    ctx.last = last;

    // Move one minimum-order factor to the back, preserving the relative
    // order of the rest. The induction's tightest case lives in the last
    // prefix coordinate, which must carry the smallest radix.
    const int m = static_cast<int>(prefix_factors.size());
    int min_at = 0;
    for (int i = 1; i < m; ++i)
        if (prefix_factors[static_cast<std::size_t>(i)].order() <
            prefix_factors[static_cast<std::size_t>(min_at)].order())
            min_at = i;
    ctx.permutation.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        if (i != min_at) ctx.permutation.push_back(i);
    ctx.permutation.push_back(min_at);
    for (int i : ctx.permutation)
        ctx.prefix.push_back(prefix_factors[static_cast<std::size_t>(i)]);

    std::vector<int> radices;
    for (const auto& f : ctx.prefix) radices.push_back(f.order());
    radices.push_back(separation);
    ctx.spec = radix_spec(radices);
    if (ctx.spec.total() > std::numeric_limits<int>::max())
        throw std::invalid_argument("construction: label range overflow");
    ctx.modulus = static_cast<int>(ctx.spec.total());

    long long q_count = 1;
    for (const auto& f : ctx.prefix) q_count *= f.order();
    ctx.prefix_count = static_cast<int>(q_count);

    ctx.prefix_digits.resize(static_cast<std::size_t>(ctx.prefix_count));
    std::vector<int> digits(static_cast<std::size_t>(m), 0);
    for (int p = 0; p < ctx.prefix_count; ++p) {
        ctx.prefix_digits[static_cast<std::size_t>(p)] = digits;
        for (std::size_t i = digits.size(); i-- > 0;) {
            if (++digits[i] < ctx.prefix[i].order()) break;
            digits[i] = 0;
        }
    }

    std::vector<std::vector<std::vector<int>>> factor_tables;
    factor_tables.reserve(ctx.prefix.size());
    for (const auto& f : ctx.prefix) factor_tables.push_back(distance_table(f));

    ctx.prefix_dist.assign(static_cast<std::size_t>(ctx.prefix_count),
                           std::vector<int>(static_cast<std::size_t>(ctx.prefix_count), -1));
    for (int p = 0; p < ctx.prefix_count; ++p) {
        const auto& dp = ctx.prefix_digits[static_cast<std::size_t>(p)];
        for (int r = 0; r < ctx.prefix_count; ++r) {
            const auto& dr = ctx.prefix_digits[static_cast<std::size_t>(r)];
            int total = 0;
            bool reachable = true;
            for (int i = 0; i < m && reachable; ++i) {
                int d = factor_tables[static_cast<std::size_t>(i)]
                                     [static_cast<std::size_t>(dp[static_cast<std::size_t>(i)])]
                                     [static_cast<std::size_t>(dr[static_cast<std::size_t>(i)])];
                if (d < 0)
                    reachable = false;
                else
                    total += d;
            }
            if (reachable)
                ctx.prefix_dist[static_cast<std::size_t>(p)][static_cast<std::size_t>(r)] = total;
        }
    }

    ctx.last_dist = distance_table(last);
    return ctx;
}

int evaluate_label(const ConstructionContext& ctx, const OffsetSet& offsets,
                   const std::vector<int>& prefix_digits, int slice) {
    if (slice < 0 || slice >= offsets.slices())
        throw std::invalid_argument("evaluate_label: slice has no offset yet");
    const int m = ctx.l - 1;
    if (static_cast<int>(prefix_digits.size()) != m)
        throw std::invalid_argument("evaluate_label: wrong digit count");
    const auto& a = offsets.vectors[static_cast<std::size_t>(slice)];
    int label = slice_residue(slice, ctx.separation);
    for (int i = 0; i < m; ++i) {
        int q = ctx.prefix[static_cast<std::size_t>(i)].order();
        int d = prefix_digits[static_cast<std::size_t>(i)];
        if (d < 0 || d >= q)
            throw std::invalid_argument("evaluate_label: digit out of range");
        label += ((a[static_cast<std::size_t>(i)] + d) % q) * ctx.weight(i);
    }
    return label;
}

bool slice_pair_ok(const ConstructionContext& ctx, const OffsetSet& offsets,
                   int u_prefix, int u_slice, int v_prefix, int v_slice) {
    if (u_prefix == v_prefix && u_slice == v_slice)
        throw std::invalid_argument("slice_pair_ok: identical vertices");
    int dp = ctx.prefix_dist[static_cast<std::size_t>(u_prefix)]
                            [static_cast<std::size_t>(v_prefix)];
    int dg = ctx.last_dist[static_cast<std::size_t>(u_slice)]
                          [static_cast<std::size_t>(v_slice)];
    if (dp < 0 || dg < 0) return true;  // unreachable pair, no constraint
    int dist = dp + dg;
    if (dist > ctx.l) return true;
    int lu = evaluate_label(ctx, offsets,
                            ctx.prefix_digits[static_cast<std::size_t>(u_prefix)], u_slice);
    int lv = evaluate_label(ctx, offsets,
                            ctx.prefix_digits[static_cast<std::size_t>(v_prefix)], v_slice);
    int required = dist == 1 ? ctx.separation : 1;
    return cyclic_distance(lu, lv, ctx.modulus) >= required;
}

long long shift_encoding(const ConstructionContext& ctx,
                         const std::vector<int>& base,
                         const std::vector<int>& candidate) {
    const int m = ctx.l - 1;
    if (static_cast<int>(base.size()) != m ||
        static_cast<int>(candidate.size()) != m)
        throw std::invalid_argument("shift_encoding: wrong vector length");
    long long value = 0;
    for (int i = 0; i < m; ++i) {
        int q = ctx.prefix[static_cast<std::size_t>(i)].order();
        int diff = candidate[static_cast<std::size_t>(i)] - base[static_cast<std::size_t>(i)];
        value += static_cast<long long>(((diff % q) + q) % q) * ctx.weight(i);
    }
    return value;
}

bool prefilter_accepts(const ConstructionContext& ctx,
                       const std::vector<int>& base,
                       const std::vector<int>& candidate) {
    long long psi = shift_encoding(ctx, base, candidate);
    long long wrap = ctx.modulus - psi;
    return std::min(psi, wrap) >= 2LL * ctx.separation;
}

ConstructionStuck::ConstructionStuck(int step_, std::vector<PairViolation> rejected_)
    : std::runtime_error("construction stuck at slice " + std::to_string(step_) +
                         ": no offset satisfies the pair constraints"),
      step(step_),
      rejected(std::move(rejected_)) {}

std::vector<int> choose_offset(const ConstructionContext& ctx,
                               const OffsetSet& offsets, int t,
                               long long* rejected_count) {
    if (t < 1 || t >= ctx.last_order())
        throw std::invalid_argument("choose_offset: slice out of range");
    if (offsets.slices() != t)
        throw std::invalid_argument("choose_offset: offsets must cover slices 0..t-1");

    const int m = ctx.l - 1;
    const int Q = ctx.prefix_count;

    // Labels of the settled slices, fixed during this step.
    std::vector<std::vector<int>> settled(static_cast<std::size_t>(t));
    for (int y = 0; y < t; ++y) {
        auto& row = settled[static_cast<std::size_t>(y)];
        row.resize(static_cast<std::size_t>(Q));
        for (int p = 0; p < Q; ++p)
            row[static_cast<std::size_t>(p)] =
                evaluate_label(ctx, offsets, ctx.prefix_digits[static_cast<std::size_t>(p)], y);
    }

    // Check the slices most likely to kill a candidate first: nearest in the
    // last factor, with ties towards equal slice residue.
    std::vector<int> slice_order(static_cast<std::size_t>(t));
    std::iota(slice_order.begin(), slice_order.end(), 0);
    std::stable_sort(slice_order.begin(), slice_order.end(), [&](int a, int b) {
        bool ra = slice_residue(a, ctx.separation) == slice_residue(t, ctx.separation);
        bool rb = slice_residue(b, ctx.separation) == slice_residue(t, ctx.separation);
        if (ra != rb) return ra;
        return ctx.last_dist[static_cast<std::size_t>(t)][static_cast<std::size_t>(a)] <
               ctx.last_dist[static_cast<std::size_t>(t)][static_cast<std::size_t>(b)];
    });

    std::vector<PairViolation> rejected;
    std::vector<int> fresh(static_cast<std::size_t>(Q));
    std::vector<int> z(static_cast<std::size_t>(m), 0);
    const int r_t = slice_residue(t, ctx.separation);
    long long tried = 0;

    for (int c = 0; c < Q; ++c) {
        const std::vector<int>& zd = ctx.prefix_digits[static_cast<std::size_t>(c)];
        std::copy(zd.begin(), zd.end(), z.begin());
        ++tried;

        for (int p = 0; p < Q; ++p) {
            int label = r_t;
            const auto& digits = ctx.prefix_digits[static_cast<std::size_t>(p)];
            for (int i = 0; i < m; ++i) {
                int q = ctx.prefix[static_cast<std::size_t>(i)].order();
                label += ((z[static_cast<std::size_t>(i)] + digits[static_cast<std::size_t>(i)]) % q) *
                         ctx.weight(i);
            }
            fresh[static_cast<std::size_t>(p)] = label;
        }

        const PairViolation* first_violation = nullptr;
        PairViolation violation;

        // New slice against every settled slice.
        for (int yi = 0; yi < t && !first_violation; ++yi) {
            int y = slice_order[static_cast<std::size_t>(yi)];
            int dg = ctx.last_dist[static_cast<std::size_t>(t)][static_cast<std::size_t>(y)];
            if (dg < 0 || dg > ctx.l) continue;
            const auto& lab_y = settled[static_cast<std::size_t>(y)];
            for (int p = 0; p < Q && !first_violation; ++p) {
                const auto& row = ctx.prefix_dist[static_cast<std::size_t>(p)];
                for (int r = 0; r < Q; ++r) {
                    int dp = row[static_cast<std::size_t>(r)];
                    if (dp < 0) continue;
                    int dist = dp + dg;
                    if (dist > ctx.l) continue;
                    int sep = cyclic_distance(fresh[static_cast<std::size_t>(p)],
                                              lab_y[static_cast<std::size_t>(r)], ctx.modulus);
                    int required = dist == 1 ? ctx.separation : 1;
                    if (sep < required) {
                        violation = {z, ctx.prefix_digits[static_cast<std::size_t>(p)], t,
                                     ctx.prefix_digits[static_cast<std::size_t>(r)], y,
                                     dist, required, sep};
                        first_violation = &violation;
                        break;
                    }
                }
            }
        }
        // Pairs inside the new slice. Their label gaps are nonzero multiples
        // of the separation for any offset, but they are part of the contract,
        // so they are checked rather than assumed.
        for (int p = 0; p < Q && !first_violation; ++p) {
            const auto& row = ctx.prefix_dist[static_cast<std::size_t>(p)];
            for (int r = p + 1; r < Q; ++r) {
                int dp = row[static_cast<std::size_t>(r)];
                if (dp < 0 || dp > ctx.l || dp == 0) continue;
                int sep = cyclic_distance(fresh[static_cast<std::size_t>(p)],
                                          fresh[static_cast<std::size_t>(r)], ctx.modulus);
                int required = dp == 1 ? ctx.separation : 1;
                if (sep < required) {
                    violation = {z, ctx.prefix_digits[static_cast<std::size_t>(p)], t,
                                 ctx.prefix_digits[static_cast<std::size_t>(r)], t,
                                 dp, required, sep};
                    first_violation = &violation;
                    break;
                }
            }
        }

        if (!first_violation) {
            if (rejected_count) *rejected_count = tried - 1;
            return z;
        }
        rejected.push_back(violation);
    }

    if (rejected_count) *rejected_count = tried;
    throw ConstructionStuck(t, std::move(rejected));
}

ConstructionResult construct_labelling(const std::vector<Graph>& prefix_factors,
                                        const Graph& last, int separation) {
    ConstructionContext ctx = make_construction_context(prefix_factors, last, separation);
    const int q = ctx.last_order();
    const int m = ctx.l - 1;

    OffsetSet offsets;
    offsets.vectors.push_back(std::vector<int>(static_cast<std::size_t>(m), 0));

    ConstructionResult result;
    result.permutation = ctx.permutation;
    result.modulus = ctx.modulus;
    result.rejected_per_step.reserve(static_cast<std::size_t>(q - 1));

    for (int t = 1; t < q; ++t) {
        long long rejected = 0;
        offsets.vectors.push_back(choose_offset(ctx, offsets, t, &rejected));
        result.rejected_per_step.push_back(rejected);
    }
    result.offsets = offsets;

    // Assemble the labelling on the product in its original factor order.
    std::vector<Graph> all_factors(prefix_factors);
    all_factors.push_back(last);
    ProductGraph h = cartesian_product(all_factors);

    std::vector<int> labels(static_cast<std::size_t>(h.order()));
    std::vector<int> construction_digits(static_cast<std::size_t>(m));
    for (int v = 0; v < h.order(); ++v) {
        auto digits = h.decode(v);
        for (int i = 0; i < m; ++i)
            construction_digits[static_cast<std::size_t>(i)] =
                digits[static_cast<std::size_t>(ctx.permutation[static_cast<std::size_t>(i)])];
        labels[static_cast<std::size_t>(v)] =
            evaluate_label(ctx, offsets, construction_digits, digits.back());
    }
    result.labelling = cyclic_labelling(std::move(labels), ctx.modulus);

    long long prefix_product = 1;
    for (const auto& f : prefix_factors) prefix_product *= f.order();
    long long min_order = prefix_factors.front().order();
    for (const auto& f : prefix_factors)
        min_order = std::min<long long>(min_order, f.order());
    result.hypothesis_holds = prefix_product > 3 * (min_order + 1) * last.order();

    // The induction only ever checks pairs touching the newest slice; the
    // finished labelling is re-verified wholesale before leaving.
    HVector hv = separation_tuple(separation, ctx.l);
    auto report = verify_cyclic(h.graph, hv, result.labelling, ctx.modulus);
    if (!report.pass)
        throw std::logic_error("construction produced an invalid labelling");

    return result;
}

}  // namespace plab
