#ifndef FIXPOINT_ITERATE_HPP
#define FIXPOINT_ITERATE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fixpoint/alpha.hpp"
#include "fixpoint/defaults.hpp"
#include "fixpoint/errors.hpp"
#include "fixpoint/types.hpp"

namespace fixpoint {

enum class IterationStatus { converged, max_iterations, domain_error };

inline const char* to_string(IterationStatus s) {
    switch (s) {
        case IterationStatus::converged: return "converged";
        case IterationStatus::max_iterations: return "max_iterations";
        case IterationStatus::domain_error: return "domain_error";
    }
    return "unknown";
}

template <class P>
struct IterationConfig {
    P start{};
    double tolerance = defaults::tolerance;
    int max_iterations = defaults::max_iterations;
    int cauchy_window = defaults::cauchy_window;

    void validate() const {
        if (!(tolerance > 0.0)) throw argument_error("tolerance must be positive");
        if (max_iterations < 1) throw argument_error("max_iterations must be >= 1");
        if (cauchy_window < 2) throw argument_error("cauchy_window must be >= 2");
    }
};

/// The Picard orbit with residuals d(x_n, x_{n+1}), per-step alpha flags
/// (when an alpha is attached) and the trailing-window Cauchy diagnostic.
template <class P>
struct IterationTrace {
    std::vector<P> iterates;
    std::vector<double> residuals;
    std::vector<char> alpha_flags;       // empty when no alpha was attached
    std::vector<double> window_max;      // max pairwise distance, trailing window
    IterationStatus status = IterationStatus::max_iterations;
    std::string note;                    // diagnostic for domain_error

    std::size_t steps() const { return residuals.size(); }
};

template <class P>
struct FixedPointResult {
    P point{};
    double residual = 0.0; // d(point, T point), recomputed
    std::size_t iterations = 0;
    IterationTrace<P> trace;

    bool converged() const { return trace.status == IterationStatus::converged; }
};

/// Picard iteration x_{n+1} = T x_n.
///
/// Stops as converged at the first step whose residual is below tolerance
/// AND whose trailing cauchy_window iterates are pairwise within tolerance;
/// a plain residual test can quit early on slowly contracting maps. Reaching
/// max_iterations is a reported status, not an error. A non-finite distance
/// stops the run with status domain_error naming the iterate.
template <class P>
FixedPointResult<P> iterate(const SelfMap<P>& T, const Metric<P>& dist,
                            const IterationConfig<P>& cfg, AlphaFn<P> alpha = {}) {
    cfg.validate();
    if (!T) throw argument_error("iterate needs a map");
    if (!dist) throw argument_error("iterate needs a metric");

    IterationTrace<P> trace;
    trace.iterates.push_back(cfg.start);

    for (int n = 0; n < cfg.max_iterations; ++n) {
        const P& cur = trace.iterates.back();
        P next = T(cur);
        const double r = dist(cur, next);
        if (!std::isfinite(r)) {
            trace.status = IterationStatus::domain_error;
            trace.note = "distance undefined between " + point_repr(cur) + " and its image";
            break;
        }
        if (alpha) trace.alpha_flags.push_back(alpha(cur, next) >= 1.0 ? 1 : 0);
        trace.iterates.push_back(std::move(next));
        trace.residuals.push_back(r);

        const std::size_t w =
            std::min<std::size_t>(static_cast<std::size_t>(cfg.cauchy_window), trace.iterates.size());
        double wm = 0.0;
        const std::size_t lo = trace.iterates.size() - w;
        for (std::size_t a = lo; a < trace.iterates.size(); ++a)
            for (std::size_t b = a + 1; b < trace.iterates.size(); ++b)
                wm = std::max(wm, dist(trace.iterates[a], trace.iterates[b]));
        trace.window_max.push_back(wm);

        if (r < cfg.tolerance && wm < cfg.tolerance) {
            trace.status = IterationStatus::converged;
            break;
        }
    }

    FixedPointResult<P> out;
    out.point = trace.iterates.back();
    if (trace.status == IterationStatus::domain_error) {
        out.residual = std::numeric_limits<double>::quiet_NaN();
        out.iterations = trace.residuals.size();
    } else {
        out.residual = dist(out.point, T(out.point));
        out.iterations = trace.status == IterationStatus::converged
                             ? trace.residuals.size() - 1
                             : trace.residuals.size();
    }
    out.trace = std::move(trace);
    return out;
}

struct MonotoneReport {
    bool pass = true;
    std::size_t first_offender = 0; // index into residuals, valid when !pass
};

/// Nonincreasing-residual diagnostic. rel_slack absorbs roundoff for
/// floating maps (use 0 for tabulated ones).
template <class P>
MonotoneReport residual_monotone(const IterationTrace<P>& trace, double rel_slack = 0.0) {
    if (trace.residuals.size() < 2)
        throw argument_error("residual_monotone needs at least 2 residuals");
    for (std::size_t i = 1; i < trace.residuals.size(); ++i) {
        const double prev = trace.residuals[i - 1];
        if (trace.residuals[i] > prev * (1.0 + rel_slack))
            return MonotoneReport{false, i};
    }
    return MonotoneReport{true, 0};
}

template <class P>
struct GapSequence {
    std::vector<double> gaps;   // d(T^n x, T^n y) for n = 0..steps
    bool alpha_start_ok = true; // alpha(x, y) >= 1 held at the start
    bool decaying = true;       // final gap strictly below the first nonzero gap
};

/// Gap sequence d(T^n x, T^n y). Warns (via the report flag) and proceeds
/// when alpha(x, y) < 1, since the hypothesis is part of what gets probed.
template <class P>
GapSequence<P> orbital_gap_decay(const SelfMap<P>& T, const Metric<P>& dist, const P& x,
                                 const P& y, const AlphaFn<P>& alpha, std::size_t steps) {
    GapSequence<P> out;
    out.alpha_start_ok = !alpha || alpha(x, y) >= 1.0;
    P a = x, b = y;
    out.gaps.push_back(dist(a, b));
    for (std::size_t n = 0; n < steps; ++n) {
        a = T(a);
        b = T(b);
        out.gaps.push_back(dist(a, b));
    }
    out.decaying = out.gaps.back() < out.gaps.front() || out.gaps.front() == 0.0;
    return out;
}

template <class P>
struct ChainConvergence {
    std::vector<std::vector<P>> orbits;            // per chain node
    std::vector<std::vector<double>> link_gaps;    // per link, per step
    bool head_fixed = false;                       // z_0 is a fixed point
    double certificate = 0.0;                      // max terminal link gap
};

/// Iterates every chain node simultaneously; when the head node is fixed the
/// maximal terminal gap certifies convergence of the tail orbit toward it.
template <class P>
ChainConvergence<P> chain_convergence(const SelfMap<P>& T, const Metric<P>& dist,
                                      const ChainCertificate<P>& chain, const AlphaFn<P>& alpha,
                                      std::size_t steps, double fixed_tol = 0.0) {
    if (chain.nodes.empty()) throw argument_error("chain is empty");
    if (alpha && !validate_chain(chain, alpha)) throw argument_error("chain does not validate");

    ChainConvergence<P> out;
    out.orbits.assign(chain.nodes.size(), {});
    for (std::size_t i = 0; i < chain.nodes.size(); ++i) {
        out.orbits[i].push_back(chain.nodes[i]);
        for (std::size_t n = 0; n < steps; ++n) out.orbits[i].push_back(T(out.orbits[i].back()));
    }
    out.link_gaps.assign(chain.order(), {});
    for (std::size_t l = 0; l + 1 < chain.nodes.size(); ++l)
        for (std::size_t n = 0; n <= steps; ++n)
            out.link_gaps[l].push_back(dist(out.orbits[l][n], out.orbits[l + 1][n]));

    out.head_fixed = dist(chain.nodes.front(), T(chain.nodes.front())) <= fixed_tol;
    for (const auto& gaps : out.link_gaps)
        out.certificate = std::max(out.certificate, gaps.back());
    return out;
}

/// Indices n with alpha(x_n, limit) >= 1. Trace-level regularity diagnostic,
/// not a proof: the subsequence property concerns infinite sequences.
template <class P>
std::vector<std::size_t> check_regular_on_trace(const std::vector<P>& iterates, const P& limit,
                                                const AlphaFn<P>& alpha) {
    std::vector<std::size_t> idx;
    for (std::size_t n = 0; n < iterates.size(); ++n)
        if (alpha(iterates[n], limit) >= 1.0) idx.push_back(n);
    return idx;
}

template <class P>
std::vector<std::size_t> check_regular_on_trace(const IterationTrace<P>& trace, const P& limit,
                                                const AlphaFn<P>& alpha) {
    return check_regular_on_trace(trace.iterates, limit, alpha);
}

/// Ratio of the last two positive residuals; the plain contraction-rate
/// estimate used in reports. Returns nullopt when fewer than two exist.
inline std::optional<double> contraction_rate_estimate(const std::vector<double>& residuals) {
    double prev = -1.0, last = -1.0;
    for (double r : residuals) {
        if (r > 0.0) {
            prev = last;
            last = r;
        }
    }
    if (prev <= 0.0) return std::nullopt;
    return last / prev;
}

} // namespace fixpoint

#endif // FIXPOINT_ITERATE_HPP
