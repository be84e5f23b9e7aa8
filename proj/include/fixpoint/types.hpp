#ifndef FIXPOINT_TYPES_HPP
#define FIXPOINT_TYPES_HPP

#include <cstddef>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace fixpoint {

/// Distance function injected into a space. Must be a metric on the sample.
template <class P>
using Metric = std::function<double(const P&, const P&)>;

/// Self map T : X -> X under study.
template <class P>
using SelfMap = std::function<P(const P&)>;

/// Pair weight alpha(x, y) >= 0. The admissibility threshold is the exact
/// comparison alpha >= 1, no slack.
template <class P>
using AlphaFn = std::function<double(const P&, const P&)>;

/// Bivariate map F : X x X -> X.
template <class P>
using CoupledMap = std::function<P(const P&, const P&)>;

inline std::string point_repr(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline std::string point_repr(std::size_t i) { return std::to_string(i); }
inline std::string point_repr(int i) { return std::to_string(i); }

template <class A, class B>
std::string point_repr(const std::pair<A, B>& p) {
    return "(" + point_repr(p.first) + "|" + point_repr(p.second) + ")";
}

} // namespace fixpoint

#endif // FIXPOINT_TYPES_HPP
