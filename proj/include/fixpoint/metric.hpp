#ifndef FIXPOINT_METRIC_HPP
#define FIXPOINT_METRIC_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fixpoint/defaults.hpp"
#include "fixpoint/errors.hpp"
#include "fixpoint/types.hpp"

namespace fixpoint {

/// A finite sample of a metric space: the desk-scale stand-in for (X, d).
/// Construction validates the metric axioms on the sample (exhaustively for
/// small samples, by deterministic random triples for large ones) and aborts
/// with a diagnostic naming the offending pair or triple. Completeness of the
/// underlying space is an assumption, never verified here.
template <class P>
struct SampledSpace {
    std::vector<P> points;
    Metric<P> dist;
};

namespace detail {

template <class P>
void check_metric_pair(const Metric<P>& d, const std::vector<P>& pts,
                       std::size_t i, std::size_t j) {
    const double dij = d(pts[i], pts[j]);
    const double dji = d(pts[j], pts[i]);
    if (!std::isfinite(dij) || dij < 0.0)
        throw metric_axiom_error("metric not finite/nonnegative at pair (" +
                                 point_repr(pts[i]) + ", " + point_repr(pts[j]) + ")");
    if (i == j) {
        if (dij != 0.0)
            throw metric_axiom_error("d(p,p) != 0 at p = " + point_repr(pts[i]));
        return;
    }
    if (dij == 0.0)
        throw metric_axiom_error("d = 0 for distinct pair (" + point_repr(pts[i]) +
                                 ", " + point_repr(pts[j]) + ")");
    if (dij != dji)
        throw metric_axiom_error("asymmetric pair (" + point_repr(pts[i]) + ", " +
                                 point_repr(pts[j]) + "): " + point_repr(dij) +
                                 " vs " + point_repr(dji));
}

template <class P>
void check_metric_triple(const Metric<P>& d, const std::vector<P>& pts,
                         std::size_t i, std::size_t j, std::size_t k) {
    const double dik = d(pts[i], pts[k]);
    const double dij = d(pts[i], pts[j]);
    const double djk = d(pts[j], pts[k]);
    // Small relative slack absorbs floating roundoff in injected metrics.
    const double slack = 1e-12 * (dij + djk + 1.0);
    if (dik > dij + djk + slack)
        throw metric_axiom_error("triangle inequality fails on (" + point_repr(pts[i]) +
                                 ", " + point_repr(pts[j]) + ", " + point_repr(pts[k]) +
                                 "): " + point_repr(dik) + " > " + point_repr(dij) +
                                 " + " + point_repr(djk));
}

} // namespace detail

/// Validates the metric axioms on the sample and returns the space.
/// Identity/symmetry/positivity are checked on every pair. Triangles are
/// exhaustive up to defaults::metric_exhaustive_limit points, seeded-random
/// beyond that.
template <class P>
SampledSpace<P> make_sampled_space(std::vector<P> points, Metric<P> dist) {
    if (points.empty()) throw argument_error("sampled space needs at least one point");
    if (!dist) throw argument_error("sampled space needs a distance function");

    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            detail::check_metric_pair(dist, points, i, j);

    if (n <= defaults::metric_exhaustive_limit) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    detail::check_metric_triple(dist, points, i, j, k);
    } else {
        std::mt19937_64 rng(0x5eedu);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t t = 0; t < defaults::metric_triple_samples; ++t)
            detail::check_metric_triple(dist, points, pick(rng), pick(rng), pick(rng));
    }
    return SampledSpace<P>{std::move(points), std::move(dist)};
}

/// Absolute-value metric on the real line.
inline Metric<double> real_line_metric() {
    return [](const double& a, const double& b) { return std::fabs(a - b); };
}

/// n equally spaced sample points covering [a, b].
inline std::vector<double> uniform_sample(double a, double b, std::size_t n) {
    if (n < 2 || !(a < b)) throw argument_error("uniform_sample needs n >= 2 and a < b");
    std::vector<double> pts(n);
    for (std::size_t i = 0; i < n; ++i)
        pts[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    return pts;
}

inline SampledSpace<double> real_line_space(std::vector<double> points) {
    return make_sampled_space<double>(std::move(points), real_line_metric());
}

/// D((x,y),(u,v)) = (d(x,u) + d(y,v)) / 2: the product metric under which
/// coupled problems lift to plain fixed-point problems.
template <class P>
Metric<std::pair<P, P>> product_metric(Metric<P> d) {
    return [d = std::move(d)](const std::pair<P, P>& a, const std::pair<P, P>& b) {
        return 0.5 * (d(a.first, b.first) + d(a.second, b.second));
    };
}

/// Pair sample {(p,q) : p,q in base} for lifting verification to X x X.
template <class P>
std::vector<std::pair<P, P>> pair_sample(const std::vector<P>& base) {
    std::vector<std::pair<P, P>> out;
    out.reserve(base.size() * base.size());
    for (const P& p : base)
        for (const P& q : base) out.emplace_back(p, q);
    return out;
}

} // namespace fixpoint

#endif // FIXPOINT_METRIC_HPP
