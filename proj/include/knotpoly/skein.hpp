#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "knotpoly/diagram.hpp"
#include "knotpoly/dp.hpp"
#include "knotpoly/errors.hpp"
#include "knotpoly/laurent.hpp"
#include "knotpoly/layer.hpp"

namespace knotpoly {

namespace detail {

// Token stream of one component under a given rotation, relabeling crossings
// in first-visit order. `labels` carries assignments made by earlier
// components and is extended in place.
inline std::string encode_component(const Diagram& d, const std::vector<Passage>& comp,
                                    size_t rotation, std::map<int, int>& labels, int& next_label) {
    std::string out;
    const size_t len = comp.size();
    for (size_t idx = 0; idx < len; ++idx) {
        const auto& p = comp[(rotation + idx) % len];
        auto [it, fresh] = labels.emplace(p.crossing, next_label);
        if (fresh) ++next_label;
        out += (p.role == Role::Over) ? 'O' : 'U';
        out += std::to_string(it->second);
        out += (d.sign(p.crossing) > 0) ? '+' : '-';
        out += ' ';
    }
    return out;
}

}  // namespace detail

/// Canonical text key: identical for diagrams equal up to component cyclic
/// rotation, component permutation, and crossing relabeling. Computed as the
/// lexicographically minimal relabeled signed Gauss encoding, minimized stage
/// by stage over component choices and rotations (carrying ties forward).
inline std::string canonical_key(const Diagram& d) {
    int empty_components = 0;
    std::vector<int> nonempty;
    for (int ci = 0; ci < d.component_count(); ++ci) {
        if (d.components[static_cast<size_t>(ci)].empty())
            ++empty_components;
        else
            nonempty.push_back(ci);
    }

    struct Candidate {
        std::string text;
        std::map<int, int> labels;
        int next_label;
        std::vector<int> remaining;
    };
    std::vector<Candidate> frontier{Candidate{"", {}, 1, nonempty}};

    while (!frontier.empty() && !frontier.front().remaining.empty()) {
        std::vector<Candidate> next;
        std::string best;
        bool have_best = false;
        for (const auto& cand : frontier) {
            for (size_t pick = 0; pick < cand.remaining.size(); ++pick) {
                const int ci = cand.remaining[pick];
                const auto& comp = d.components[static_cast<size_t>(ci)];
                for (size_t rot = 0; rot < comp.size(); ++rot) {
                    std::map<int, int> labels = cand.labels;
                    int next_label = cand.next_label;
                    std::string text =
                        cand.text + detail::encode_component(d, comp, rot, labels, next_label) + "; ";
                    if (have_best && text > best) continue;
                    if (!have_best || text < best) {
                        best = text;
                        have_best = true;
                        next.clear();
                    }
                    std::vector<int> remaining = cand.remaining;
                    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
                    next.push_back(Candidate{text, std::move(labels), next_label, std::move(remaining)});
                }
            }
        }
        frontier = std::move(next);
    }

    std::string body = frontier.empty() ? std::string() : frontier.front().text;
    return "E" + std::to_string(empty_components) + "|" + body;
}

/// Get-or-compute table from canonical diagram keys (plus requested order) to
/// coefficient vectors. Purely an accelerator: results must match a cache-off run.
class MemoCache {
public:
    const CoeffVector* find(const std::string& key, int R) const {
        auto it = table_.find(compose(key, R));
        return it == table_.end() ? nullptr : &it->second;
    }
    void store(const std::string& key, int R, CoeffVector value) {
        table_.emplace(compose(key, R), std::move(value));
    }
    size_t size() const { return table_.size(); }

private:
    static std::string compose(const std::string& key, int R) {
        return key + "#" + std::to_string(R);
    }
    std::unordered_map<std::string, CoeffVector> table_;
};

/// Knobs and counters threaded through one whole reduction.
struct ReduceOptions {
    bool use_cache = true;
    bool reverse_component_order = false;  // exercised by order-independence checks
};

class SkeinReducer {
public:
    explicit SkeinReducer(ReduceOptions options = {}) : options_(options) {}

    /// Exact (P_0, ..., P_2R) of the link type of the diagram. Knots go to
    /// the interval DP with this reducer handling its correction subproblems;
    /// links are unlayered to a split union of their component knots.
    CoeffVector p_coeffs(const Diagram& link, int R) {
        if (R < 0) throw usage_error("truncation order must be >= 0");
        std::string key;
        if (options_.use_cache) {
            key = canonical_key(link);
            if (const CoeffVector* hit = cache_.find(key, R)) return *hit;
        }

        CoeffVector result;
        if (link.component_count() == 1) {
            KnotDpRun run = coeff_dp_knot_run(
                link, R, [this](const Diagram& d, int r) { return p_coeffs(d, r); });
            dp_totals_ += run.stats;
            result = std::move(run.value);
        } else {
            result = reduce_link(link, R);
        }

        if (options_.use_cache) cache_.store(key, R, result);
        return result;
    }

    LaurentPolyA p0(const Diagram& link) { return p_coeffs(link, 0).entries[0]; }

    const DpStats& dp_totals() const { return dp_totals_; }
    const MemoCache& cache() const { return cache_; }

private:
    ReduceOptions options_;
    MemoCache cache_;
    DpStats dp_totals_;

    CoeffVector reduce_link(const Diagram& link, int R) {
        const LayerPlan plan = layer_plan(link, options_.reverse_component_order);
        const UnlayerChain chain = unlayer_chain(link, plan);

        std::vector<CoeffVector> component_vectors;
        component_vectors.reserve(static_cast<size_t>(link.component_count()));
        for (int ci = 0; ci < link.component_count(); ++ci)
            component_vectors.push_back(p_coeffs(component_extract(link, ci), R));
        const CoeffVector split = split_union_coeffs(component_vectors, R);

        std::vector<CoeffVector> corr_vecs;
        if (R >= 1) {
            corr_vecs.reserve(chain.corrections.size());
            for (const auto& corr : chain.corrections)
                corr_vecs.push_back(p_coeffs(corr.diagram, R - 1));
        }

        CoeffVector out;
        out.mode = InvariantMode::Homflypt;
        out.com = link.component_count();
        out.entries.reserve(static_cast<size_t>(R) + 1);
        for (int r = 0; r <= R; ++r) {
            LaurentPolyA entry = chain.final_factor * split.entries[static_cast<size_t>(r)];
            if (r >= 1)
                for (size_t s = 0; s < corr_vecs.size(); ++s)
                    entry += chain.corrections[s].factor * corr_vecs[s].at(r - 1);
            out.entries.push_back(std::move(entry));
        }
        return out;
    }
};

/// One-call conveniences.
inline CoeffVector p_coeffs(const Diagram& link, int R, ReduceOptions options = {}) {
    SkeinReducer reducer(options);
    return reducer.p_coeffs(link, R);
}

/// First Kauffman coefficient in polynomial time: F_0 = P_0.
inline LaurentPolyA f0_fast(const Diagram& link) {
    SkeinReducer reducer;
    return reducer.p0(link);
}

}  // namespace knotpoly
