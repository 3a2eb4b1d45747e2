#pragma once

#include <vector>

#include "knotpoly/diagram.hpp"
#include "knotpoly/errors.hpp"

namespace knotpoly {

/// Closure of the knot arc between basepoints b_i and b_j by an arc running
/// above everything else, realized on the original crossing set: the deleted
/// stretch of the knot is reused as the route of the closure arc.
///
/// Role assignment per crossing:
///   - both passages in the core [i, j-1]: original roles;
///   - core vs closure: the closure passage is forced Over;
///   - both on the closure arc: the passage reached first from b_j is Over,
///     making the closure arc descending, hence an unknotted overpass.
/// A crossing whose role assignment changed gets its sign negated (the strand
/// orientations are untouched, so a role swap is exactly a sign flip).
///
/// With smooth_q set, the crossing at position i (which must have its partner
/// inside [i+1, j-1]) is smoothed as well, producing the two-component
/// diagram that the skein step at state (i, j) branches to.
inline Diagram build_hat_closure(const Diagram& knot, const TraversalView& view, int i, int j,
                                 bool smooth_q = false) {
    if (i < 0 || i > j || j > view.m) throw usage_error("closure interval out of range");

    auto is_core = [&](int p) { return p >= i && p < j; };
    auto closure_rank = [&](int p) { return (p - j + view.m) % view.m; };

    const int m = view.m;
    std::vector<Role> new_role(static_cast<size_t>(m));
    for (int p = 0; p < m; ++p) {
        const int q = view.partner[static_cast<size_t>(p)];
        if (is_core(p) && is_core(q))
            new_role[static_cast<size_t>(p)] = view.role[static_cast<size_t>(p)];
        else if (is_core(p))
            new_role[static_cast<size_t>(p)] = Role::Under;
        else if (is_core(q))
            new_role[static_cast<size_t>(p)] = Role::Over;
        else
            new_role[static_cast<size_t>(p)] = closure_rank(p) < closure_rank(q) ? Role::Over : Role::Under;
    }

    Diagram out;
    out.realizable = knot.realizable;
    out.components.emplace_back();
    auto& comp = out.components[0];
    comp.reserve(static_cast<size_t>(m));
    for (int p = 0; p < m; ++p) {
        comp.push_back(Passage{view.crossing[static_cast<size_t>(p)], new_role[static_cast<size_t>(p)]});
        const bool changed = new_role[static_cast<size_t>(p)] != view.role[static_cast<size_t>(p)];
        const int sign = changed ? -view.sign[static_cast<size_t>(p)] : view.sign[static_cast<size_t>(p)];
        out.signs[view.crossing[static_cast<size_t>(p)]] = sign;
    }

    if (smooth_q) {
        if (i >= m) throw usage_error("no skein crossing at an empty state");
        const int k = view.partner[static_cast<size_t>(i)];
        if (!(k >= i + 1 && k <= j - 1))
            throw usage_error("smooth_q requires the partner of position i inside [i+1, j-1]");
        return smooth_oriented(out, view.crossing[static_cast<size_t>(i)]);
    }
    return out;
}

}  // namespace knotpoly
