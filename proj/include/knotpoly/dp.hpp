#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

#include "knotpoly/closure.hpp"
#include "knotpoly/diagram.hpp"
#include "knotpoly/errors.hpp"
#include "knotpoly/laurent.hpp"
#include "knotpoly/layer.hpp"

namespace knotpoly {

/// Interval state (i, j), 0 <= i <= j <= m, naming the closure of the knot
/// arc between basepoints b_i and b_j; (0, m) is the whole diagram.
struct State {
    int i = 0, j = 0;
};

enum class StateTag : std::uint8_t { Base, Skip, Absorb, Skein };

struct StateClass {
    StateTag tag = StateTag::Base;
    int q = 0;    // Skein only: crossing id at position i
    int k = 0;    // Skein only: partner position of i
    int eps = 0;  // Skein only: crossing sign
};

/// Classification of a state by its first passage:
///   i == j                          -> Base   (empty arc, unknot, value 1)
///   partner of i inside [i+1, j-1]  -> Absorb (position i Over) or Skein (Under)
///   otherwise                       -> Skip   (same closure as (i+1, j))
inline StateClass classify_state(const TraversalView& view, State s) {
    if (s.i < 0 || s.i > s.j || s.j > view.m) throw usage_error("state out of range");
    StateClass out;
    if (s.i == s.j) {
        out.tag = StateTag::Base;
        return out;
    }
    const int k = view.partner[static_cast<size_t>(s.i)];
    if (k >= s.i + 1 && k <= s.j - 1) {
        if (view.role[static_cast<size_t>(s.i)] == Role::Over) {
            out.tag = StateTag::Absorb;
        } else {
            out.tag = StateTag::Skein;
            out.q = view.crossing[static_cast<size_t>(s.i)];
            out.k = k;
            out.eps = view.sign[static_cast<size_t>(s.i)];
        }
    } else {
        out.tag = StateTag::Skip;
    }
    return out;
}

/// Rectangle-sum tables over the chord set {(p, t(p))} of a knot traversal,
/// supporting O(1) evaluation of the linking number of smoothed closures.
///   G weights a chord end by sigma(p);
///   H weights it by sigma(p) * phi(t(p)), phi = +1 on Over, -1 on Under.
class LkPrefixTables {
public:
    explicit LkPrefixTables(const TraversalView& view) : m_(view.m) {
        const size_t w = static_cast<size_t>(m_) + 1;
        g_.assign(w * w, 0);
        h_.assign(w * w, 0);
        for (int x = 0; x < m_; ++x) {
            const int y = view.partner[static_cast<size_t>(x)];
            const int sigma = view.sign[static_cast<size_t>(x)];
            const int phi = view.role[static_cast<size_t>(y)] == Role::Over ? 1 : -1;
            at(g_, x + 1, y + 1) += sigma;
            at(h_, x + 1, y + 1) += sigma * phi;
        }
        for (int x = 1; x <= m_; ++x)
            for (int y = 1; y <= m_; ++y) {
                at(g_, x, y) += at(g_, x - 1, y) + at(g_, x, y - 1) - at(g_, x - 1, y - 1);
                at(h_, x, y) += at(h_, x - 1, y) + at(h_, x, y - 1) - at(h_, x - 1, y - 1);
            }
    }

    /// Sum of weights over positions p in [x1, x2] with partner in [y1, y2].
    int rect_g(int x1, int x2, int y1, int y2) const { return rect(g_, x1, x2, y1, y2); }
    int rect_h(int x1, int x2, int y1, int y2) const { return rect(h_, x1, x2, y1, y2); }

    int m() const { return m_; }

private:
    int m_;
    std::vector<int> g_, h_;

    int& at(std::vector<int>& t, int x, int y) {
        return t[static_cast<size_t>(x) * (static_cast<size_t>(m_) + 1) + static_cast<size_t>(y)];
    }
    int at(const std::vector<int>& t, int x, int y) const {
        return t[static_cast<size_t>(x) * (static_cast<size_t>(m_) + 1) + static_cast<size_t>(y)];
    }
    int rect(const std::vector<int>& t, int x1, int x2, int y1, int y2) const {
        if (x1 > x2 || y1 > y2) return 0;
        x1 = std::max(x1, 0);
        y1 = std::max(y1, 0);
        x2 = std::min(x2, m_ - 1);
        y2 = std::min(y2, m_ - 1);
        if (x1 > x2 || y1 > y2) return 0;
        return at(t, x2 + 1, y2 + 1) - at(t, x1, y2 + 1) - at(t, x2 + 1, y1) + at(t, x1, y1);
    }
};

struct DpStats {
    std::uint64_t states_evaluated = 0;
    std::uint64_t skein_states = 0;
    std::uint64_t lk_queries = 0;

    DpStats& operator+=(const DpStats& o) {
        states_evaluated += o.states_evaluated;
        skein_states += o.skein_states;
        lk_queries += o.lk_queries;
        return *this;
    }
};

/// Linking number of the two-component smoothed closure at Skein state
/// (i, j) with partner k: half of
///   A = sum of sigma(p) over loop positions p in [i+1, k-1] whose partner
///       lands in the other core stretch [k+1, j-1], plus
///   B = sum of sigma(p) * phi(t(p)) over loop positions whose partner lies
///       on the closure arc (outside [i, j-1]); the forced-Over closure flips
///       the sign exactly when that partner was originally Under.
inline int loop_linking(const LkPrefixTables& tables, int i, int j, int k, DpStats* stats = nullptr) {
    if (stats) ++stats->lk_queries;
    const int a = tables.rect_g(i + 1, k - 1, k + 1, j - 1);
    const int full = tables.rect_h(i + 1, k - 1, 0, tables.m() - 1);
    const int inside = tables.rect_h(i + 1, k - 1, i, j - 1);
    const int b = full - inside;
    if ((a + b) % 2 != 0) throw invariant_error("odd doubled linking number at skein state");
    return (a + b) / 2;
}

/// Computes coefficient vectors of arbitrary link diagrams; used for the
/// correction subproblems that the skein states of order >= 1 spawn.
using Reducer = std::function<CoeffVector(const Diagram&, int)>;

/// One memoized evaluation over one knot diagram. Exposes per-state values
/// and counters so audits can replay every interval against the oracle.
class KnotDp {
public:
    KnotDp(const Diagram& knot, int R, Reducer reducer)
        : knot_(knot),
          view_(TraversalView::of_knot(knot)),
          tables_(view_),
          R_(R),
          reducer_(std::move(reducer)) {
        if (R_ < 0) throw usage_error("truncation order must be >= 0");
        if (R_ >= 1 && !reducer_) throw usage_error("orders >= 1 need a reducer");
    }

    using Vec = std::vector<LaurentPolyA>;
    using VecPtr = std::shared_ptr<const Vec>;

    VecPtr run() { return solve(0, view_.m); }

    VecPtr state_value(int i, int j) { return solve(i, j); }

    const TraversalView& view() const { return view_; }
    const LkPrefixTables& tables() const { return tables_; }
    const DpStats& stats() const { return stats_; }

    /// All states the run touched, for audits.
    std::vector<State> visited_states() const {
        std::vector<State> out;
        out.reserve(memo_.size());
        for (const auto& [key, v] : memo_) {
            (void)v;
            out.push_back(State{static_cast<int>(key / (static_cast<std::uint64_t>(view_.m) + 1)),
                                static_cast<int>(key % (static_cast<std::uint64_t>(view_.m) + 1))});
        }
        return out;
    }

private:
    const Diagram& knot_;
    TraversalView view_;
    LkPrefixTables tables_;
    int R_;
    Reducer reducer_;
    std::unordered_map<std::uint64_t, VecPtr> memo_;
    DpStats stats_;

    std::uint64_t key(int i, int j) const {
        return static_cast<std::uint64_t>(i) * (static_cast<std::uint64_t>(view_.m) + 1) +
               static_cast<std::uint64_t>(j);
    }

    VecPtr solve(int i, int j) {
        const auto k = key(i, j);
        if (auto it = memo_.find(k); it != memo_.end()) return it->second;
        ++stats_.states_evaluated;

        const StateClass cls = classify_state(view_, State{i, j});
        VecPtr result;
        switch (cls.tag) {
            case StateTag::Base: {
                auto vec = std::make_shared<Vec>(static_cast<size_t>(R_) + 1, LaurentPolyA::zero());
                (*vec)[0] = LaurentPolyA::one();
                result = vec;
                break;
            }
            case StateTag::Skip:
            case StateTag::Absorb:
                result = solve(i + 1, j);
                break;
            case StateTag::Skein:
                result = skein(i, j, cls);
                break;
        }
        memo_.emplace(k, result);
        return result;
    }

    VecPtr skein(int i, int j, const StateClass& cls) {
        ++stats_.skein_states;
        const int k = cls.k;
        const int eps = cls.eps;
        const VecPtr left = solve(i + 1, k);
        const VecPtr right = solve(k + 1, j);
        const VecPtr cont = solve(i + 1, j);

        auto vec = std::make_shared<Vec>(static_cast<size_t>(R_) + 1, LaurentPolyA::zero());
        const LaurentPolyA loop = LaurentPolyA::a_plus_ainv();

        // Order 0: the smoothed closure splits into the two loop closures,
        // whose first coefficient is the product scaled by the linking factor.
        const int lambda = loop_linking(tables_, i, j, k, &stats_);
        {
            LaurentPolyA d0 = LaurentPolyA::neg_a2_pow(lambda) * loop * (*left)[0] * (*right)[0];
            d0.scale_monomial(-eps, 1);
            LaurentPolyA c = (*cont)[0];
            c.scale_monomial(-2 * eps, -1);
            (*vec)[0] = d0 + c;
        }

        if (R_ >= 1) {
            // Higher coefficients of the smoothed two-component closure: its
            // component knots are exactly the (i+1,k) and (k+1,j) closures, so
            // their vectors come from this table; the unlayering corrections
            // spawn fresh smaller diagrams handled by the reducer.
            const Diagram d0 = build_hat_closure(knot_, view_, i, j, /*smooth_q=*/true);
            const UnlayerChain chain = unlayer_chain(d0, layer_plan(d0));
            std::vector<CoeffVector> corr_vecs;
            corr_vecs.reserve(chain.corrections.size());
            for (const auto& corr : chain.corrections)
                corr_vecs.push_back(reducer_(corr.diagram, R_ - 1));

            for (int r = 1; r <= R_; ++r) {
                LaurentPolyA conv;
                for (int r1 = 0; r1 <= r; ++r1)
                    conv += (*left)[static_cast<size_t>(r1)] * (*right)[static_cast<size_t>(r - r1)];
                LaurentPolyA d0_r = chain.final_factor * loop * conv;
                for (size_t s = 0; s < corr_vecs.size(); ++s)
                    d0_r += chain.corrections[s].factor * corr_vecs[s].at(r - 1);
                d0_r.scale_monomial(-eps, 1);
                LaurentPolyA c = (*cont)[static_cast<size_t>(r)];
                c.scale_monomial(-2 * eps, -1);
                (*vec)[static_cast<size_t>(r)] = d0_r + c;
            }
        }
        return vec;
    }
};

struct KnotDpRun {
    CoeffVector value;
    DpStats stats;
};

/// First coefficient of a knot diagram by the interval dynamic program;
/// quadratic in the crossing number.
inline KnotDpRun p0_knot_run(const Diagram& knot) {
    if (knot.component_count() != 1)
        throw usage_error("p0_knot needs a knot diagram; reduce links first");
    KnotDp dp(knot, 0, nullptr);
    auto vec = dp.run();
    KnotDpRun out;
    out.value.mode = InvariantMode::Homflypt;
    out.value.com = 1;
    out.value.entries = *vec;
    out.stats = dp.stats();
    return out;
}

inline LaurentPolyA p0_knot(const Diagram& knot) { return p0_knot_run(knot).value.entries[0]; }

/// Full coefficient vector (P_0, ..., P_2R) of a knot diagram. The reducer
/// evaluates the correction subproblems (arbitrary smaller link diagrams) up
/// to order R-1 and must be safe to call reentrantly.
inline KnotDpRun coeff_dp_knot_run(const Diagram& knot, int R, const Reducer& reducer) {
    if (knot.component_count() != 1)
        throw usage_error("coeff_dp_knot needs a knot diagram; reduce links first");
    KnotDp dp(knot, R, reducer);
    auto vec = dp.run();
    KnotDpRun out;
    out.value.mode = InvariantMode::Homflypt;
    out.value.com = 1;
    out.value.entries = *vec;
    out.stats = dp.stats();
    return out;
}

inline CoeffVector coeff_dp_knot(const Diagram& knot, int R, const Reducer& reducer) {
    return coeff_dp_knot_run(knot, R, reducer).value;
}

}  // namespace knotpoly
