#include "plab/labelling.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace plab {

bool HVector::monotone() const {
    for (std::size_t i = 1; i < h.size(); ++i)
        if (h[i] > h[i - 1]) return false;
    return true;
}

HVector hvector(std::vector<int> entries) {
    if (entries.empty()) throw std::invalid_argument("separation tuple is empty");
    for (int e : entries)
        if (e < 0) throw std::invalid_argument("separation entries must be >= 0");
    return HVector{std::move(entries)};
}

HVector separation_tuple(int h1, int length) {
    if (length < 1) throw std::invalid_argument("separation tuple length >= 1");
    std::vector<int> h(static_cast<std::size_t>(length), 1);
    h[0] = h1;
    return hvector(std::move(h));
}

Labelling linear_labelling(std::vector<int> labels) {
    if (labels.empty()) throw std::invalid_argument("labelling needs a vertex");
    int lo = *std::min_element(labels.begin(), labels.end());
    if (lo < 0) throw std::invalid_argument("labels must be nonnegative");
    for (int& x : labels) x -= lo;
    return Labelling{LabelMode::linear, 0, std::move(labels)};
}

Labelling cyclic_labelling(std::vector<int> labels, int k) {
    if (labels.empty()) throw std::invalid_argument("labelling needs a vertex");
    if (k < 1) throw std::invalid_argument("cyclic modulus must be >= 1");
    for (int x : labels)
        if (x < 0 || x >= k)
            throw std::invalid_argument("cyclic label out of [0, k)");
    return Labelling{LabelMode::cyclic, k, std::move(labels)};
}

int cyclic_distance(int x, int y, int k) {
    if (k < 1) throw std::invalid_argument("cyclic distance: modulus >= 1");
    if (x < 0 || x >= k || y < 0 || y >= k)
        throw std::invalid_argument("cyclic distance: labels out of [0, k)");
    int d = std::abs(x - y);
    return std::min(d, k - d);
}

int span(const Labelling& phi) {
    if (phi.labels.empty()) throw std::invalid_argument("span of empty labelling");
    if (phi.mode == LabelMode::cyclic) return phi.modulus - 1;
    auto [lo, hi] = std::minmax_element(phi.labels.begin(), phi.labels.end());
    return *hi - *lo;
}

long long VerificationReport::total_pairs() const {
    long long t = 0;
    for (long long c : pairs_checked) t += c;
    return t;
}

namespace {

VerificationReport sweep(const Graph& g, const HVector& h,
                         const std::vector<int>& labels, bool cyclic, int k,
                         int threads) {
    const int l = h.classes();
    const int n = g.order();
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("labelling is not total on the graph");

    threads = std::max(1, std::min(threads, n));
    std::vector<std::vector<Violation>> violations(static_cast<std::size_t>(threads));
    std::vector<std::vector<long long>> counts(
        static_cast<std::size_t>(threads),
        std::vector<long long>(static_cast<std::size_t>(l), 0));

    auto work = [&](int worker, int lo, int hi) {
        auto& vio = violations[static_cast<std::size_t>(worker)];
        auto& cnt = counts[static_cast<std::size_t>(worker)];
        for (int u = lo; u < hi; ++u) {
            for (auto [v, d] : bounded_distances(g, u, l)) {
                if (v <= u || d == 0) continue;
                ++cnt[static_cast<std::size_t>(d - 1)];
                int sep = cyclic ? cyclic_distance(labels[static_cast<std::size_t>(u)],
                                                   labels[static_cast<std::size_t>(v)], k)
                                 : std::abs(labels[static_cast<std::size_t>(u)] -
                                            labels[static_cast<std::size_t>(v)]);
                int req = h.at(d);
                if (sep < req) vio.push_back({u, v, d, req, sep});
            }
        }
    };

    if (threads == 1) {
        work(0, 0, n);
    } else {
        std::vector<std::thread> pool;
        int chunk = (n + threads - 1) / threads;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back(work, w, std::min(n, w * chunk),
                              std::min(n, (w + 1) * chunk));
        for (auto& t : pool) t.join();
    }

    VerificationReport report;
    report.pairs_checked.assign(static_cast<std::size_t>(l), 0);
    for (int w = 0; w < threads; ++w) {
        for (int i = 0; i < l; ++i)
            report.pairs_checked[static_cast<std::size_t>(i)] +=
                counts[static_cast<std::size_t>(w)][static_cast<std::size_t>(i)];
        report.violations.insert(report.violations.end(),
                                 violations[static_cast<std::size_t>(w)].begin(),
                                 violations[static_cast<std::size_t>(w)].end());
    }
    std::sort(report.violations.begin(), report.violations.end());
    report.pass = report.violations.empty();
    return report;
}

}  // namespace

VerificationReport verify_linear(const Graph& g, const HVector& h,
                                 const Labelling& phi, int threads) {
    for (int x : phi.labels)
        if (x < 0) throw std::invalid_argument("verify_linear: negative label");
    auto report = sweep(g, h, phi.labels, false, 0, threads);
    report.no_hole = no_hole_linear(phi);
    return report;
}

VerificationReport verify_cyclic(const Graph& g, const HVector& h,
                                 const Labelling& phi, int k, int threads) {
    if (k < 1) throw std::invalid_argument("verify_cyclic: modulus >= 1");
    for (int x : phi.labels)
        if (x < 0 || x >= k)
            throw std::invalid_argument("verify_cyclic: label out of [0, k)");
    auto report = sweep(g, h, phi.labels, true, k, threads);
    report.no_hole = no_hole_cyclic(phi, k);
    return report;
}

bool no_hole_linear(const Labelling& phi) {
    if (phi.labels.empty()) throw std::invalid_argument("empty labelling");
    std::vector<int> used(phi.labels);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    return used.back() - used.front() + 1 == static_cast<int>(used.size());
}

bool no_hole_cyclic(const Labelling& phi, int k) {
    if (phi.labels.empty()) throw std::invalid_argument("empty labelling");
    if (k < 1) throw std::invalid_argument("no_hole_cyclic: modulus >= 1");
    std::vector<char> used(static_cast<std::size_t>(k), 0);
    for (int x : phi.labels) {
        if (x < 0 || x >= k)
            throw std::invalid_argument("no_hole_cyclic: label out of [0, k)");
        used[static_cast<std::size_t>(x)] = 1;
    }
    // cyclic interval <=> at most one maximal run of unused residues
    int runs = 0;
    for (int i = 0; i < k; ++i) {
        int prev = (i + k - 1) % k;
        if (!used[static_cast<std::size_t>(i)] && used[static_cast<std::size_t>(prev)])
            ++runs;
    }
    if (runs == 0) return true;  // everything used, or k == 1
    return runs == 1;
}

Labelling restrict_labelling(const Labelling& phi,
                             const std::vector<int>& vertices) {
    if (vertices.empty()) throw std::invalid_argument("restriction to empty set");
    Labelling out;
    out.mode = phi.mode;
    out.modulus = phi.modulus;
    out.labels.reserve(vertices.size());
    for (int v : vertices) {
        if (v < 0 || v >= static_cast<int>(phi.labels.size()))
            throw std::invalid_argument("restriction: vertex outside labelling");
        out.labels.push_back(phi.labels[static_cast<std::size_t>(v)]);
    }
    return out;
}

ColouringReport colouring_from_labelling(const Graph& g, int l,
                                         const Labelling& phi) {
    if (l < 1) throw std::invalid_argument("colouring needs l >= 1");
    HVector ones = hvector(std::vector<int>(static_cast<std::size_t>(l), 1));
    auto sweep_report = sweep(g, ones, phi.labels, false, 0, 1);
    ColouringReport report;
    report.proper = sweep_report.pass;
    report.colours = span(phi) + 1;
    report.pairs_checked = sweep_report.total_pairs();
    report.clashes = std::move(sweep_report.violations);
    return report;
}

}  // namespace plab
