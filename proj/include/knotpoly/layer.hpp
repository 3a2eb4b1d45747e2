#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <tuple>
#include <vector>

#include "knotpoly/diagram.hpp"
#include "knotpoly/errors.hpp"
#include "knotpoly/laurent.hpp"

namespace knotpoly {

/// Plan for pushing a link diagram into layered split form: an ordering of
/// the components plus the mixed crossings that must be switched because a
/// later-ordered component currently passes over an earlier-ordered one.
/// After all switches, earlier components lie entirely above later ones and
/// the diagram is a split union.
struct LayerPlan {
    std::vector<int> component_order;         // component indices, outermost first
    std::vector<int> switch_crossings;        // processed in this order
};

inline LayerPlan layer_plan(const Diagram& d, bool reverse_order = false) {
    LayerPlan plan;
    plan.component_order.resize(static_cast<size_t>(d.component_count()));
    std::iota(plan.component_order.begin(), plan.component_order.end(), 0);
    if (reverse_order) std::reverse(plan.component_order.begin(), plan.component_order.end());

    std::vector<int> order_index(static_cast<size_t>(d.component_count()));
    for (size_t idx = 0; idx < plan.component_order.size(); ++idx)
        order_index[static_cast<size_t>(plan.component_order[idx])] = static_cast<int>(idx);

    // Sort the offending crossings by traversal order of the earlier (under)
    // component so the plan is deterministic.
    struct Entry {
        int under_order, under_pos, crossing;
    };
    std::vector<Entry> entries;
    for (const auto& [id, sign] : d.signs) {
        (void)sign;
        auto site = d.locate(id);
        if (site.over_comp == site.under_comp) continue;
        if (order_index[static_cast<size_t>(site.over_comp)] >
            order_index[static_cast<size_t>(site.under_comp)])
            entries.push_back(Entry{order_index[static_cast<size_t>(site.under_comp)],
                                    site.under_pos, id});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.under_order, a.under_pos, a.crossing) <
               std::tie(b.under_order, b.under_pos, b.crossing);
    });
    for (const auto& e : entries) plan.switch_crossings.push_back(e.crossing);
    return plan;
}

/// One term of the unlayering expansion. Applying the mixed-crossing skein
/// relation along the plan gives
///   P_2r(X) = sum_s factor_s * P_(2r-2)(corrections[s])
///           + final_factor * P_2r(layered),
/// where factor_s = prod_{s'<s}(-a^(-2 eps_s')) * a^(-eps_s) and final_factor
/// is the full product (-a^-2)^(sum eps) over switched crossings.
struct UnlayerChain {
    struct Correction {
        LaurentPolyA factor;  // monomial
        Diagram diagram;      // one fewer crossing, one fewer component
    };
    std::vector<Correction> corrections;
    LaurentPolyA final_factor = LaurentPolyA::one();
    Diagram layered;
};

inline UnlayerChain unlayer_chain(const Diagram& d, const LayerPlan& plan) {
    UnlayerChain chain;
    Diagram current = d;
    LaurentPolyA prefix = LaurentPolyA::one();
    for (int c : plan.switch_crossings) {
        const int eps = current.sign(c);
        if (!is_mixed_crossing(current, c))
            throw invariant_error("layer plan lists a non-mixed crossing");
        LaurentPolyA factor = prefix;
        factor.scale_monomial(-eps, 1);
        chain.corrections.push_back(UnlayerChain::Correction{std::move(factor),
                                                             smooth_oriented(current, c)});
        prefix.scale_monomial(-2 * eps, -1);
        current = switch_crossing(current, c);
    }
    chain.final_factor = std::move(prefix);
    chain.layered = std::move(current);
    return chain;
}

/// Coefficient vector of a split union from its components' vectors:
/// entry r = (a+a^-1)^(com-1) * sum over r_1+...+r_com = r of the products.
inline CoeffVector split_union_coeffs(const std::vector<CoeffVector>& component_vectors, int R) {
    if (component_vectors.empty()) throw usage_error("split union of zero components");
    if (R < 0) throw usage_error("truncation order must be >= 0");

    std::vector<LaurentPolyA> conv(static_cast<size_t>(R) + 1, LaurentPolyA::zero());
    conv[0] = LaurentPolyA::one();
    for (const auto& v : component_vectors) {
        if (v.mode != InvariantMode::Homflypt)
            throw usage_error("split union expects homflypt-mode vectors");
        std::vector<LaurentPolyA> next(static_cast<size_t>(R) + 1, LaurentPolyA::zero());
        for (int r1 = 0; r1 <= R; ++r1) {
            if (conv[static_cast<size_t>(r1)].is_zero()) continue;
            const int top = std::min<int>(v.order(), R - r1);
            for (int r2 = 0; r2 <= top; ++r2)
                next[static_cast<size_t>(r1 + r2)] +=
                    conv[static_cast<size_t>(r1)] * v.entries[static_cast<size_t>(r2)];
        }
        conv = std::move(next);
    }

    CoeffVector out;
    out.mode = InvariantMode::Homflypt;
    out.com = static_cast<int>(component_vectors.size());
    const LaurentPolyA loops = LaurentPolyA::a_plus_ainv().pow(
        static_cast<unsigned>(component_vectors.size() - 1));
    out.entries.reserve(static_cast<size_t>(R) + 1);
    for (int r = 0; r <= R; ++r) out.entries.push_back(loops * conv[static_cast<size_t>(r)]);
    return out;
}

}  // namespace knotpoly
