#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "knotpoly/braid.hpp"
#include "knotpoly/closure.hpp"
#include "knotpoly/dp.hpp"
#include "knotpoly/gauss.hpp"
#include "knotpoly/oracle.hpp"
#include "knotpoly/skein.hpp"

namespace knotpoly {

struct VerifyConfig {
    std::uint64_t seed = 7;
    int count = 50;
    int max_crossings = 8;
    int max_width = 4;
    ResolutionBudget budget{};
};

struct VerifyFailure {
    std::string suite;
    std::string gauss;   // replayable input
    std::string detail;  // state indices / crossing ids involved
};

struct VerifyReport {
    VerifyConfig config;
    std::vector<std::pair<std::string, std::uint64_t>> checks;  // suite -> checks run
    std::vector<VerifyFailure> failures;

    std::uint64_t& counter(const std::string& suite) {
        for (auto& [name, n] : checks)
            if (name == suite) return n;
        checks.emplace_back(suite, 0);
        return checks.back().second;
    }
};

namespace detail {

inline LaurentPolyA oracle_p0(const Diagram& d, const ResolutionBudget& budget) {
    return extract_coefficients(homflypt_oracle(d, budget), d.component_count(),
                                InvariantMode::Homflypt, 0)
        .at(0);
}

inline std::vector<BraidWord> verification_corpus(const VerifyConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> wd(2, std::max(2, cfg.max_width));
    std::vector<BraidWord> out;
    out.reserve(static_cast<size_t>(cfg.count));
    for (int i = 0; i < cfg.count; ++i) {
        BraidWord b;
        b.width = wd(rng);
        std::uniform_int_distribution<int> ld(1, std::max(1, cfg.max_crossings));
        b.letters = random_braid_word(b.width, ld(rng), rng());
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace detail

/// The full property campaign over a seeded random braid-closure corpus:
/// interval-DP state values and linking numbers against the oracle, short
/// closures, the two-component product formula, the first-Kauffman identity,
/// the Kauffman coefficient relation, and Markov-move invariance.
inline VerifyReport run_verification(const VerifyConfig& cfg) {
    VerifyReport report;
    report.config = cfg;
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);  // site picks, independent of corpus

    const auto corpus = detail::verification_corpus(cfg);
    for (const auto& word : corpus) {
        const Diagram d = braid_closure(word.letters, word.width);
        const std::string gauss = emit_gauss(d);

        if (d.component_count() == 1 && d.crossing_count() >= 1) {
            const TraversalView view = TraversalView::of_knot(d);
            const LkPrefixTables tables(view);
            KnotDp dp(d, 0, nullptr);
            dp.run();
            auto states = dp.visited_states();
            std::sort(states.begin(), states.end(),
                      [](const State& a, const State& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });

            for (const State& s : states) {
                const LaurentPolyA stored = (*dp.state_value(s.i, s.j))[0];
                const Diagram hat = build_hat_closure(d, view, s.i, s.j);
                ++report.counter("per_state_equivalence");
                if (stored != detail::oracle_p0(hat, cfg.budget))
                    report.failures.push_back({"per_state_equivalence", gauss,
                                               "state (" + std::to_string(s.i) + ", " +
                                                   std::to_string(s.j) + ")"});

                const StateClass cls = classify_state(view, s);
                if (cls.tag == StateTag::Skein) {
                    const Diagram d0 = build_hat_closure(d, view, s.i, s.j, true);
                    ++report.counter("lambda_equivalence");
                    if (loop_linking(tables, s.i, s.j, cls.k) != writhe_and_linking(d0).linking)
                        report.failures.push_back({"lambda_equivalence", gauss,
                                                   "state (" + std::to_string(s.i) + ", " +
                                                       std::to_string(s.j) +
                                                       "), k=" + std::to_string(cls.k)});
                }
            }

            // Closures of at most four edges represent the unknot.
            for (int i = 0; i <= view.m; ++i)
                for (int j = i; j <= std::min(view.m, i + 4); ++j) {
                    ++report.counter("short_closures");
                    if (homflypt_oracle(build_hat_closure(d, view, i, j), cfg.budget) != PolyAZ::one())
                        report.failures.push_back({"short_closures", gauss,
                                                   "interval (" + std::to_string(i) + ", " +
                                                       std::to_string(j) + ")"});
                }
        }

        if (d.component_count() == 2) {
            ++report.counter("two_component_product");
            const LaurentPolyA lhs = p_coeffs(d, 0).at(0);
            const LaurentPolyA rhs = LaurentPolyA::neg_a2_pow(writhe_and_linking(d).linking) *
                                     LaurentPolyA::a_plus_ainv() *
                                     p0_knot(component_extract(d, 0)) *
                                     p0_knot(component_extract(d, 1));
            if (lhs != rhs)
                report.failures.push_back({"two_component_product", gauss, "order 0 entry"});
        }

        {
            ++report.counter("f0_equals_p0");
            const CoeffVector kf = extract_coefficients(kauffman_oracle(d, cfg.budget),
                                                        d.component_count(), InvariantMode::Kauffman, 0);
            if (f0_fast(d) != kf.at(0))
                report.failures.push_back({"f0_equals_p0", gauss, "order 0 entry"});
        }

        if (d.crossing_count() >= 1) {
            std::vector<int> ids;
            for (const auto& [id, s] : d.signs) {
                (void)s;
                ids.push_back(id);
            }
            const int c = ids[std::uniform_int_distribution<size_t>(0, ids.size() - 1)(rng)];
            const int order = static_cast<int>(rng() % 2);
            ++report.counter("kauffman_relation");
            const RelationCheck check = check_kauffman_relation(d, c, order, cfg.budget);
            if (!check.holds)
                report.failures.push_back({"kauffman_relation", gauss,
                                           "crossing " + std::to_string(c) + ", order " +
                                               std::to_string(order) + ": " + check.report()});
        }

        {
            const CoeffVector reference = p_coeffs(d, 1);
            std::uniform_int_distribution<int> gd(1, word.width - 1);
            const int g = word.width >= 2 ? gd(rng) * (rng() % 2 ? 1 : -1) : 0;
            std::vector<int> conj;
            if (g != 0) conj.push_back(g);
            conj.insert(conj.end(), word.letters.begin(), word.letters.end());
            if (g != 0) conj.push_back(-g);
            std::vector<int> stab = word.letters;
            stab.push_back(rng() % 2 ? word.width : -word.width);

            ++report.counter("markov_moves");
            if (p_coeffs(braid_closure(conj, word.width), 1).entries != reference.entries ||
                p_coeffs(braid_closure(stab, word.width + 1), 1).entries != reference.entries)
                report.failures.push_back({"markov_moves", gauss, emit_braid(word)});
        }
    }
    return report;
}

}  // namespace knotpoly
