#ifndef FIXPOINT_ALPHA_HPP
#define FIXPOINT_ALPHA_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fixpoint/defaults.hpp"
#include "fixpoint/errors.hpp"
#include "fixpoint/types.hpp"

namespace fixpoint {

/// Square boolean matrix, the materialized form of a relation on a sample.
struct BoolMatrix {
    std::size_t n = 0;
    std::vector<char> cells; // row-major, n*n

    BoolMatrix() = default;
    explicit BoolMatrix(std::size_t side) : n(side), cells(side * side, 0) {}

    bool at(std::size_t i, std::size_t j) const { return cells[i * n + j] != 0; }
    void set(std::size_t i, std::size_t j, bool v) { cells[i * n + j] = v ? 1 : 0; }
};

/// Binary relation given as a predicate; materialize() builds the matrix form
/// on a sample (the two forms agree by construction).
template <class P>
struct Relation {
    std::function<bool(const P&, const P&)> holds;

    // Set when the relation is declared a partial order.
    bool reflexive = false;
    bool antisymmetric = false;
    bool transitive = false;
};

template <class P>
Relation<P> partial_order(std::function<bool(const P&, const P&)> holds) {
    return Relation<P>{std::move(holds), true, true, true};
}

inline Relation<double> less_equal_order() {
    return partial_order<double>([](const double& a, const double& b) { return a <= b; });
}

template <class P>
BoolMatrix materialize(const Relation<P>& rel, const std::vector<P>& points) {
    if (!rel.holds) throw argument_error("relation has no predicate");
    BoolMatrix m(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j)
            m.set(i, j, rel.holds(points[i], points[j]));
    return m;
}

/// Indicator alpha of a relation: 1 on related pairs, 0 elsewhere.
template <class P>
AlphaFn<P> alpha_from_relation(Relation<P> rel) {
    if (!rel.holds) throw argument_error("relation has no predicate");
    return [holds = std::move(rel.holds)](const P& x, const P& y) {
        return holds(x, y) ? 1.0 : 0.0;
    };
}

template <class P>
AlphaFn<P> alpha_constant(double value) {
    if (!(value >= 0.0)) throw argument_error("alpha must be nonnegative");
    return [value](const P&, const P&) { return value; };
}

/// alpha(x,y) = e^{x-y} for x >= y, 0 otherwise. Satisfies
/// alpha(x,y) >= 1 iff x >= y, so a real map is admissible for it exactly
/// when it is nondecreasing.
inline double alpha_exponential(double x, double y) {
    return x >= y ? std::exp(x - y) : 0.0;
}

inline AlphaFn<double> alpha_exponential_fn() {
    return [](const double& x, const double& y) { return alpha_exponential(x, y); };
}

/// An alpha-chain z_0..z_n: every consecutive link is comparable under alpha
/// in at least one direction.
template <class P>
struct ChainCertificate {
    std::vector<P> nodes;
    std::vector<char> forward_ok;  // alpha(z_{i-1}, z_i) >= 1
    std::vector<char> backward_ok; // alpha(z_i, z_{i-1}) >= 1

    std::size_t order() const { return nodes.empty() ? 0 : nodes.size() - 1; }
};

/// Re-evaluates every link; true when each one is comparable some direction.
template <class P>
bool validate_chain(const ChainCertificate<P>& chain, const AlphaFn<P>& alpha) {
    if (chain.nodes.empty()) return false;
    if (chain.forward_ok.size() != chain.order() || chain.backward_ok.size() != chain.order())
        return false;
    for (std::size_t i = 1; i < chain.nodes.size(); ++i) {
        const bool fwd = alpha(chain.nodes[i - 1], chain.nodes[i]) >= 1.0;
        const bool bwd = alpha(chain.nodes[i], chain.nodes[i - 1]) >= 1.0;
        if (!fwd && !bwd) return false;
        if (static_cast<bool>(chain.forward_ok[i - 1]) != fwd) return false;
        if (static_cast<bool>(chain.backward_ok[i - 1]) != bwd) return false;
    }
    return true;
}

/// Membership predicate of one closed set; tol widens the boundary.
template <class P>
using MemberFn = std::function<bool(const P&, double tol)>;

/// Cyclic family A_1..A_N with wrapping index arithmetic (A_{N+1} = A_1).
template <class P>
struct CyclicFamily {
    std::vector<MemberFn<P>> sets;
    double boundary_tol = defaults::boundary_tolerance;

    std::size_t size() const { return sets.size(); }

    bool member(std::size_t i, const P& x) const {
        return sets[i % sets.size()](x, boundary_tol);
    }

    /// All set indices containing x (empty means x escaped the union).
    std::vector<std::size_t> sets_of(const P& x) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (sets[i](x, boundary_tol)) out.push_back(i);
        return out;
    }
};

/// Closed interval [a, b] as a cyclic set on the real line.
inline MemberFn<double> interval_set(double a, double b) {
    if (!(a <= b)) throw argument_error("interval_set needs a <= b");
    return [a, b](const double& x, double tol) { return x >= a - tol && x <= b + tol; };
}

template <class P>
CyclicFamily<P> make_cyclic_family(std::vector<MemberFn<P>> sets,
                                   double boundary_tol = defaults::boundary_tolerance) {
    if (sets.empty()) throw argument_error("cyclic family needs at least one set");
    for (const auto& s : sets)
        if (!s) throw argument_error("cyclic family has an empty membership predicate");
    return CyclicFamily<P>{std::move(sets), boundary_tol};
}

/// Checks that every family set is nonempty on the sample and every sampled
/// point belongs to some set.
template <class P>
void validate_family_on(const CyclicFamily<P>& fam, const std::vector<P>& sample) {
    std::vector<char> hit(fam.size(), 0);
    for (const P& x : sample) {
        auto idx = fam.sets_of(x);
        if (idx.empty())
            throw domain_error("sample point " + point_repr(x) +
                               " belongs to no set of the cyclic family");
        for (std::size_t i : idx) hit[i] = 1;
    }
    for (std::size_t i = 0; i < fam.size(); ++i)
        if (!hit[i])
            throw argument_error("cyclic family set " + std::to_string(i + 1) +
                                 " is empty on the sample");
}

/// Indicator of R = union of A_i x A_{i+1} (wrapping): alpha(x,y) = 1 iff
/// some i has x in A_i and y in A_{i+1}. Points outside the union are a
/// domain error, since the family is supposed to cover its space.
template <class P>
AlphaFn<P> alpha_from_cyclic(CyclicFamily<P> fam) {
    if (fam.size() == 0) throw argument_error("cyclic family is empty");
    return [fam = std::move(fam)](const P& x, const P& y) {
        const auto ix = fam.sets_of(x);
        if (ix.empty())
            throw domain_error("point " + point_repr(x) + " outside the cyclic union");
        if (fam.sets_of(y).empty())
            throw domain_error("point " + point_repr(y) + " outside the cyclic union");
        for (std::size_t i : ix)
            if (fam.member(i + 1, y)) return 1.0;
        return 0.0;
    };
}

} // namespace fixpoint

#endif // FIXPOINT_ALPHA_HPP
