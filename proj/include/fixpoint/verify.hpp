#ifndef FIXPOINT_VERIFY_HPP
#define FIXPOINT_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fixpoint/alpha.hpp"
#include "fixpoint/defaults.hpp"
#include "fixpoint/errors.hpp"
#include "fixpoint/iterate.hpp"
#include "fixpoint/metric.hpp"
#include "fixpoint/types.hpp"

namespace fixpoint {

// ---------------------------------------------------------------------------
// Strict contraction scan (the pairwise consequence of the MK property)
// ---------------------------------------------------------------------------

template <class P>
struct ContractionViolation {
    P x, y;
    double dist = 0.0;     // d(x, y)
    double alpha_dT = 0.0; // alpha(x,y) d(Tx,Ty)
};

/// Every ordered sampled pair x != y with alpha(x,y) d(Tx,Ty) >= d(x,y).
/// An empty result means no violation at sample resolution, nothing more.
template <class P>
std::vector<ContractionViolation<P>> check_strict_contraction(const SampledSpace<P>& space,
                                                              const SelfMap<P>& T,
                                                              const AlphaFn<P>& alpha) {
    std::vector<P> images;
    images.reserve(space.points.size());
    for (const P& p : space.points) images.push_back(T(p));

    std::vector<ContractionViolation<P>> out;
    const std::size_t n = space.points.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double d = space.dist(space.points[i], space.points[j]);
            const double dT = space.dist(images[i], images[j]);
            if (!std::isfinite(dT))
                throw domain_error("map image of " + point_repr(space.points[i]) +
                                   " left the distance domain");
            const double a = alpha(space.points[i], space.points[j]);
            if (a * dT >= d)
                out.push_back({space.points[i], space.points[j], d, a * dT});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Meir-Keeler probe
// ---------------------------------------------------------------------------

template <class P>
struct MKViolation {
    P x, y;
    double dist = 0.0;
    double alpha_dT = 0.0;
    double epsilon = 0.0;
};

/// Probe outcome. The probe is a falsifier: it reports either "violated" at
/// an epsilon or the largest sampled delta for which the implication held.
template <class P>
struct MKProbeReport {
    std::vector<double> epsilon_grid;
    std::vector<std::optional<double>> delta_estimates; // nullopt = violated
    std::vector<MKViolation<P>> violations;             // capped per epsilon
    std::size_t violation_total = 0;
    std::size_t sample_size = 0;

    bool passed() const { return violation_total == 0; }
};

namespace detail {

/// Cluster-min deduplication of an ascending distance multiset. Floating
/// noise spreads mathematically equal distances over a few ulps; values
/// within the relative tolerance collapse to the smallest member, which is
/// itself a realized distance.
inline std::vector<double> distance_reps(const std::vector<double>& sorted_positive) {
    std::vector<double> reps;
    double cluster_min = sorted_positive.front();
    for (double d : sorted_positive) {
        if (d > cluster_min * (1.0 + defaults::distance_dedup_rel_tol)) {
            reps.push_back(cluster_min);
            cluster_min = d;
        }
    }
    reps.push_back(cluster_min);
    return reps;
}

} // namespace detail

/// Distinct sampled pairwise distances, ascending, deduplicated and thinned
/// to at most cap values keeping both ends. Every realized distance scale
/// gets probed.
template <class P>
std::vector<double> default_epsilon_grid(const SampledSpace<P>& space,
                                         std::size_t cap = defaults::epsilon_grid_cap) {
    const std::size_t n = space.points.size();
    std::vector<double> ds;
    ds.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = space.dist(space.points[i], space.points[j]);
            if (d > 0.0) ds.push_back(d);
        }
    if (ds.empty()) throw argument_error("space has no positive sampled distance");
    std::sort(ds.begin(), ds.end());
    std::vector<double> reps = detail::distance_reps(ds);

    if (reps.size() <= cap || cap < 2) return reps;
    std::vector<double> grid;
    grid.reserve(cap);
    for (std::size_t k = 0; k < cap; ++k) {
        const std::size_t idx = k * (reps.size() - 1) / (cap - 1);
        grid.push_back(reps[idx]);
    }
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

/// For each epsilon, searches the candidate set
/// { d(x,y) - epsilon : sampled pairs with d > epsilon } + { epsilon }
/// for the largest delta such that every sampled pair with
/// epsilon <= d < epsilon + delta satisfies alpha(x,y) d(Tx,Ty) < epsilon.
/// Records a violation where even the smallest candidate fails.
template <class P>
MKProbeReport<P> probe_meir_keeler(const SampledSpace<P>& space, const SelfMap<P>& T,
                                   const AlphaFn<P>& alpha,
                                   const std::vector<double>& epsilon_grid,
                                   std::size_t violations_per_epsilon_cap = 16) {
    if (epsilon_grid.empty()) throw argument_error("epsilon grid is empty");
    for (std::size_t k = 0; k < epsilon_grid.size(); ++k) {
        if (!(epsilon_grid[k] > 0.0)) throw argument_error("epsilon grid must be positive");
        if (k > 0 && !(epsilon_grid[k] > epsilon_grid[k - 1]))
            throw argument_error("epsilon grid must be strictly increasing");
    }

    const std::size_t n = space.points.size();
    std::vector<P> images;
    images.reserve(n);
    for (const P& p : space.points) images.push_back(T(p));

    // Unordered pairs; the MK implication for (x,y) and (y,x) shares d, so
    // only the worse alpha-weighted image distance matters per pair.
    struct PairEval {
        std::size_t i, j;
        double d;
        double adT;    // max over both orientations
        bool reversed; // worst orientation is (y, x)
    };
    std::vector<PairEval> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = space.dist(space.points[i], space.points[j]);
            const double dT = space.dist(images[i], images[j]);
            if (!std::isfinite(dT))
                throw domain_error("map image of " + point_repr(space.points[i]) +
                                   " left the distance domain");
            const double fwd = alpha(space.points[i], space.points[j]) * dT;
            const double bwd = alpha(space.points[j], space.points[i]) * dT;
            pairs.push_back({i, j, d, std::max(fwd, bwd), bwd > fwd});
        }
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const PairEval& a, const PairEval& b) { return a.d < b.d; });
    std::vector<double> sorted_d(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) sorted_d[k] = pairs[k].d;

    MKProbeReport<P> report;
    report.epsilon_grid = epsilon_grid;
    report.sample_size = n;

    const std::vector<double> reps = detail::distance_reps(sorted_d);

    const double inf = std::numeric_limits<double>::infinity();
    for (double eps : epsilon_grid) {
        // First pair (by distance) at d >= eps whose weighted image gap
        // breaks the implication.
        const auto lo_it = std::lower_bound(sorted_d.begin(), sorted_d.end(), eps);
        const std::size_t lo = static_cast<std::size_t>(lo_it - sorted_d.begin());
        double d_bad_min = inf;
        for (std::size_t k = lo; k < pairs.size(); ++k) {
            if (pairs[k].adT >= eps) {
                d_bad_min = pairs[k].d;
                break;
            }
        }

        // Largest feasible candidate. A distance candidate d* - eps opens the
        // window [eps, d*), feasible iff d* <= d_bad_min; the epsilon
        // candidate opens [eps, 2 eps), feasible iff 2 eps <= d_bad_min.
        // Feasibility tests compare realized distances directly, no derived
        // arithmetic.
        std::optional<double> best;
        if (2.0 * eps <= d_bad_min) best = eps;
        auto hi_it = std::upper_bound(reps.begin(), reps.end(), d_bad_min);
        if (hi_it != reps.begin()) {
            const double r = *std::prev(hi_it); // largest rep <= d_bad_min
            if (r > eps && (!best || r - eps > *best)) best = r - eps;
        }

        if (best) {
            report.delta_estimates.push_back(best);
            continue;
        }

        // Even the smallest candidate failed: record the witnesses inside
        // the smallest window.
        report.delta_estimates.push_back(std::nullopt);
        double window_end = 2.0 * eps;
        if (auto above = std::upper_bound(reps.begin(), reps.end(), eps); above != reps.end())
            window_end = std::min(window_end, *above);
        std::size_t recorded = 0;
        for (std::size_t k = lo; k < pairs.size() && pairs[k].d < window_end; ++k) {
            if (pairs[k].adT < eps) continue;
            ++report.violation_total;
            if (recorded >= violations_per_epsilon_cap) continue;
            const auto& pe = pairs[k];
            const P& x = pe.reversed ? space.points[pe.j] : space.points[pe.i];
            const P& y = pe.reversed ? space.points[pe.i] : space.points[pe.j];
            report.violations.push_back({x, y, pe.d, pe.adT, eps});
            ++recorded;
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Admissibility
// ---------------------------------------------------------------------------

template <class P>
struct AdmissibilityViolation {
    P x, y;
    double alpha_before = 0.0;
    double alpha_after = 0.0;
};

/// Pairs with alpha(x,y) >= 1 whose images drop below the threshold.
template <class P>
std::vector<AdmissibilityViolation<P>> check_admissible(
    const std::vector<std::pair<P, P>>& pairs, const SelfMap<P>& T, const AlphaFn<P>& alpha) {
    std::vector<AdmissibilityViolation<P>> out;
    for (const auto& [x, y] : pairs) {
        const double before = alpha(x, y);
        if (before < 1.0) continue;
        const double after = alpha(T(x), T(y));
        if (after < 1.0) out.push_back({x, y, before, after});
    }
    return out;
}

// ---------------------------------------------------------------------------
// N-transitivity via boolean matrix powers
// ---------------------------------------------------------------------------

struct NTransitivityReport {
    bool pass = true;
    std::vector<std::size_t> chain; // x_0..x_{N+1} witnessing failure
};

inline BoolMatrix bool_matrix_from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t n = rows.size();
    BoolMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw argument_error("relation matrix is not square");
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, rows[i][j] != 0);
    }
    return m;
}

namespace detail {

inline BoolMatrix bool_multiply(const BoolMatrix& a, const BoolMatrix& b) {
    BoolMatrix c(a.n);
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t k = 0; k < a.n; ++k)
            if (a.at(i, k))
                for (std::size_t j = 0; j < a.n; ++j)
                    if (b.at(k, j)) c.set(i, j, true);
    return c;
}

inline bool all_zero(const BoolMatrix& m) {
    return std::all_of(m.cells.begin(), m.cells.end(), [](char c) { return c == 0; });
}

} // namespace detail

/// Pass iff R^{N+1} is contained in R (equivalent to the chain form of
/// N-transitivity). On failure returns an explicit chain x_0..x_{N+1} with
/// every link related but the endpoints unrelated.
inline NTransitivityReport check_n_transitive(const BoolMatrix& rel, std::size_t N) {
    if (rel.n == 0) throw argument_error("relation matrix is empty");
    if (rel.cells.size() != rel.n * rel.n) throw argument_error("relation matrix is not square");
    NTransitivityReport report;
    if (N == 0) return report; // R^1 is contained in R

    std::vector<BoolMatrix> powers; // powers[k] = R^{k+1}
    powers.push_back(rel);
    for (std::size_t step = 0; step < N; ++step) {
        powers.push_back(detail::bool_multiply(powers.back(), rel));
        if (detail::all_zero(powers.back())) return report; // no chains that long
    }

    const BoolMatrix& target = powers.back(); // R^{N+1}
    for (std::size_t i = 0; i < rel.n; ++i) {
        for (std::size_t j = 0; j < rel.n; ++j) {
            if (!target.at(i, j) || rel.at(i, j)) continue;
            // Walk the witness path backward through the stored powers.
            report.pass = false;
            report.chain.assign(1, i);
            std::size_t from = i;
            for (std::size_t remaining = N + 1; remaining > 1; --remaining) {
                const BoolMatrix& tail = powers[remaining - 2]; // R^{remaining-1}
                for (std::size_t m = 0; m < rel.n; ++m) {
                    if (rel.at(from, m) && tail.at(m, j)) {
                        report.chain.push_back(m);
                        from = m;
                        break;
                    }
                }
            }
            report.chain.push_back(j);
            return report;
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Alpha-connectivity
// ---------------------------------------------------------------------------

struct ConnectivityReport {
    std::vector<std::size_t> component; // component id per point index
    std::size_t component_count = 0;

    bool connected() const { return component_count <= 1; }
};

namespace detail {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace detail

/// Components of the undirected comparability graph (edge when alpha >= 1 in
/// either direction).
template <class P>
ConnectivityReport check_connected(const SampledSpace<P>& space, const AlphaFn<P>& alpha) {
    const std::size_t n = space.points.size();
    detail::UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (alpha(space.points[i], space.points[j]) >= 1.0 ||
                alpha(space.points[j], space.points[i]) >= 1.0)
                uf.unite(i, j);

    ConnectivityReport report;
    report.component.assign(n, 0);
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = uf.find(i);
        auto it = std::find(roots.begin(), roots.end(), r);
        if (it == roots.end()) {
            roots.push_back(r);
            report.component[i] = roots.size() - 1;
        } else {
            report.component[i] = static_cast<std::size_t>(it - roots.begin());
        }
    }
    report.component_count = roots.size();
    return report;
}

/// Breadth-first shortest alpha-chain between two sampled points, by index.
template <class P>
std::optional<ChainCertificate<P>> find_chain(const SampledSpace<P>& space,
                                              const AlphaFn<P>& alpha, std::size_t from,
                                              std::size_t to) {
    const std::size_t n = space.points.size();
    if (from >= n || to >= n) throw argument_error("queried point outside the sample");

    std::vector<std::size_t> prev(n, n);
    std::deque<std::size_t> queue{from};
    prev[from] = from;
    while (!queue.empty() && prev[to] == n) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        for (std::size_t next = 0; next < n; ++next) {
            if (prev[next] != n) continue;
            if (alpha(space.points[cur], space.points[next]) >= 1.0 ||
                alpha(space.points[next], space.points[cur]) >= 1.0) {
                prev[next] = cur;
                queue.push_back(next);
            }
        }
    }
    if (prev[to] == n) return std::nullopt;

    std::vector<std::size_t> path{to};
    while (path.back() != from) path.push_back(prev[path.back()]);
    std::reverse(path.begin(), path.end());

    ChainCertificate<P> chain;
    for (std::size_t idx : path) chain.nodes.push_back(space.points[idx]);
    for (std::size_t l = 1; l < chain.nodes.size(); ++l) {
        chain.forward_ok.push_back(alpha(chain.nodes[l - 1], chain.nodes[l]) >= 1.0 ? 1 : 0);
        chain.backward_ok.push_back(alpha(chain.nodes[l], chain.nodes[l - 1]) >= 1.0 ? 1 : 0);
    }
    return chain;
}

/// Value-based lookup convenience for equality-comparable points.
template <class P>
std::optional<ChainCertificate<P>> find_chain(const SampledSpace<P>& space,
                                              const AlphaFn<P>& alpha, const P& from,
                                              const P& to) {
    const auto locate = [&](const P& p) {
        auto it = std::find(space.points.begin(), space.points.end(), p);
        if (it == space.points.end())
            throw argument_error("queried point " + point_repr(p) + " outside the sample");
        return static_cast<std::size_t>(it - space.points.begin());
    };
    return find_chain(space, alpha, locate(from), locate(to));
}

} // namespace fixpoint

#endif // FIXPOINT_VERIFY_HPP
