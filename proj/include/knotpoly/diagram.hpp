#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "knotpoly/errors.hpp"

namespace knotpoly {

enum class Role : std::uint8_t { Over, Under };

inline Role opposite(Role r) { return r == Role::Over ? Role::Under : Role::Over; }

/// One transit of a strand through a crossing.
struct Passage {
    int crossing = 0;
    Role role = Role::Over;

    bool operator==(const Passage&) const = default;
};

enum class Realizable : std::uint8_t { CheckedPlanar, Unchecked, Virtual };

/// Oriented link diagram as a signed Gauss structure: each component is a
/// cyclic passage sequence, each crossing id appears exactly twice (once Over,
/// once Under) and carries a sign in {+1,-1}. No planar embedding is stored.
struct Diagram {
    std::vector<std::vector<Passage>> components;
    std::map<int, int> signs;  // crossing id -> +1 / -1
    Realizable realizable = Realizable::Unchecked;

    int crossing_count() const { return static_cast<int>(signs.size()); }
    int component_count() const { return static_cast<int>(components.size()); }

    int sign(int crossing) const {
        auto it = signs.find(crossing);
        if (it == signs.end()) throw usage_error("unknown crossing id " + std::to_string(crossing));
        return it->second;
    }

    /// Component and slot of both passages of a crossing, Over first.
    struct CrossingSite {
        int over_comp, over_pos;
        int under_comp, under_pos;
    };
    CrossingSite locate(int crossing) const {
        CrossingSite s{-1, -1, -1, -1};
        for (int ci = 0; ci < component_count(); ++ci) {
            const auto& comp = components[static_cast<size_t>(ci)];
            for (int p = 0; p < static_cast<int>(comp.size()); ++p) {
                if (comp[static_cast<size_t>(p)].crossing != crossing) continue;
                if (comp[static_cast<size_t>(p)].role == Role::Over) {
                    s.over_comp = ci;
                    s.over_pos = p;
                } else {
                    s.under_comp = ci;
                    s.under_pos = p;
                }
            }
        }
        if (s.over_comp < 0 || s.under_comp < 0)
            throw usage_error("unknown crossing id " + std::to_string(crossing));
        return s;
    }

    /// Full structural check of the Gauss invariants.
    void validate() const {
        std::map<int, std::pair<int, int>> seen;  // id -> (over count, under count)
        size_t passages = 0;
        for (const auto& comp : components) {
            passages += comp.size();
            for (const auto& p : comp) {
                auto& cnt = seen[p.crossing];
                (p.role == Role::Over ? cnt.first : cnt.second)++;
            }
        }
        if (seen.size() != signs.size())
            throw invariant_error("crossing table does not match passages");
        for (const auto& [id, cnt] : seen) {
            if (cnt.first != 1 || cnt.second != 1)
                throw invariant_error("crossing " + std::to_string(id) +
                                      " must appear exactly once Over and once Under");
            if (!signs.count(id)) throw invariant_error("missing sign for crossing " + std::to_string(id));
        }
        for (const auto& [id, s] : signs)
            if (s != 1 && s != -1)
                throw invariant_error("sign of crossing " + std::to_string(id) + " must be +-1");
        if (passages != 2 * signs.size())
            throw invariant_error("passage count must equal twice the crossing count");
        if (components.empty()) throw invariant_error("diagram needs at least one component");
    }
};

/// Writhe, global linking number and the per-pair linking table.
struct LinkingData {
    int writhe = 0;
    int linking = 0;                          // half the signed sum over mixed crossings
    std::map<std::pair<int, int>, int> pairwise;  // (comp s < comp t) -> lk(s,t)
};

inline LinkingData writhe_and_linking(const Diagram& d) {
    LinkingData out;
    std::map<std::pair<int, int>, int> doubled;
    for (const auto& [id, s] : d.signs) {
        out.writhe += s;
        auto site = d.locate(id);
        if (site.over_comp != site.under_comp) {
            auto key = std::minmax(site.over_comp, site.under_comp);
            doubled[{key.first, key.second}] += s;
        }
    }
    int total = 0;
    for (const auto& [pair, sum] : doubled) {
        if (sum % 2 != 0) throw invariant_error("odd mixed signed sum between components");
        out.pairwise[pair] = sum / 2;
        total += sum / 2;
    }
    out.linking = total;
    return out;
}

inline bool is_mixed_crossing(const Diagram& d, int crossing) {
    auto site = d.locate(crossing);
    return site.over_comp != site.under_comp;
}

/// Flip Over/Under at one crossing and negate its sign.
inline Diagram switch_crossing(const Diagram& d, int crossing) {
    Diagram out = d;
    auto site = out.locate(crossing);
    out.components[static_cast<size_t>(site.over_comp)][static_cast<size_t>(site.over_pos)].role =
        Role::Under;
    out.components[static_cast<size_t>(site.under_comp)][static_cast<size_t>(site.under_pos)].role =
        Role::Over;
    out.signs[crossing] = -out.signs[crossing];
    return out;
}

namespace detail {

// comp[from..to] walked cyclically, inclusive bounds; empty when to+1 == from (mod size)
// would wrap the whole way. Caller guarantees from/to are valid slots.
inline std::vector<Passage> cyclic_slice(const std::vector<Passage>& comp, size_t from, size_t to) {
    std::vector<Passage> out;
    const size_t n = comp.size();
    for (size_t i = from;; i = (i + 1) % n) {
        out.push_back(comp[i]);
        if (i == to) break;
    }
    return out;
}

// The piece of comp strictly between slot q and slot p (exclusive ends), cyclic.
inline std::vector<Passage> between_exclusive(const std::vector<Passage>& comp, size_t q, size_t p) {
    std::vector<Passage> out;
    const size_t n = comp.size();
    for (size_t i = (q + 1) % n; i != p; i = (i + 1) % n) out.push_back(comp[i]);
    return out;
}

}  // namespace detail

/// Remove one crossing and reconnect the strands respecting orientation.
/// A self-crossing splits its component in two; a mixed crossing merges the
/// two components. Other crossings keep their roles and signs.
inline Diagram smooth_oriented(const Diagram& d, int crossing) {
    auto site = d.locate(crossing);
    Diagram out;
    out.realizable = d.realizable;
    out.signs = d.signs;
    out.signs.erase(crossing);

    if (site.over_comp == site.under_comp) {
        const auto& comp = d.components[static_cast<size_t>(site.over_comp)];
        const size_t p = static_cast<size_t>(std::min(site.over_pos, site.under_pos));
        const size_t q = static_cast<size_t>(std::max(site.over_pos, site.under_pos));
        for (int ci = 0; ci < d.component_count(); ++ci) {
            if (ci == site.over_comp) {
                out.components.push_back(detail::between_exclusive(comp, p, q));
                out.components.push_back(detail::between_exclusive(comp, q, p));
            } else {
                out.components.push_back(d.components[static_cast<size_t>(ci)]);
            }
        }
    } else {
        const int ca = std::min(site.over_comp, site.under_comp);
        const int cb = std::max(site.over_comp, site.under_comp);
        const size_t pa = static_cast<size_t>(ca == site.over_comp ? site.over_pos : site.under_pos);
        const size_t pb = static_cast<size_t>(cb == site.over_comp ? site.over_pos : site.under_pos);
        const auto& compa = d.components[static_cast<size_t>(ca)];
        const auto& compb = d.components[static_cast<size_t>(cb)];
        // Incoming strand of a continues along b's outgoing strand: a's tail
        // (after pa) then b's tail (after pb), both cyclic with the passage cut out.
        std::vector<Passage> merged = detail::between_exclusive(compa, pa, pa);
        auto tailb = detail::between_exclusive(compb, pb, pb);
        merged.insert(merged.end(), tailb.begin(), tailb.end());
        for (int ci = 0; ci < d.component_count(); ++ci) {
            if (ci == cb) continue;
            if (ci == ca)
                out.components.push_back(std::move(merged));
            else
                out.components.push_back(d.components[static_cast<size_t>(ci)]);
        }
    }
    return out;
}

/// The other (orientation-breaking) smoothing: reconnects the strands the
/// wrong way round, reversing part of the diagram. Crossings with exactly one
/// passage on the reversed stretch get their sign negated; roles never change.
inline Diagram smooth_disoriented(const Diagram& d, int crossing) {
    auto site = d.locate(crossing);
    Diagram out;
    out.realizable = d.realizable;
    out.signs = d.signs;
    out.signs.erase(crossing);

    auto reversed = [](std::vector<Passage> v) {
        std::reverse(v.begin(), v.end());
        return v;
    };

    std::vector<Passage> merged;
    std::vector<Passage> reversed_part;  // passages whose strand direction flips

    if (site.over_comp == site.under_comp) {
        const auto& comp = d.components[static_cast<size_t>(site.over_comp)];
        const size_t p = static_cast<size_t>(std::min(site.over_pos, site.under_pos));
        const size_t q = static_cast<size_t>(std::max(site.over_pos, site.under_pos));
        auto first = detail::between_exclusive(comp, p, q);   // keeps direction
        auto second = detail::between_exclusive(comp, q, p);  // gets reversed
        reversed_part = second;
        merged = std::move(first);
        auto rev = reversed(std::move(second));
        merged.insert(merged.end(), rev.begin(), rev.end());
        for (int ci = 0; ci < d.component_count(); ++ci) {
            if (ci == site.over_comp)
                out.components.push_back(merged);
            else
                out.components.push_back(d.components[static_cast<size_t>(ci)]);
        }
    } else {
        const int ca = std::min(site.over_comp, site.under_comp);
        const int cb = std::max(site.over_comp, site.under_comp);
        const size_t pa = static_cast<size_t>(ca == site.over_comp ? site.over_pos : site.under_pos);
        const size_t pb = static_cast<size_t>(cb == site.over_comp ? site.over_pos : site.under_pos);
        const auto& compa = d.components[static_cast<size_t>(ca)];
        const auto& compb = d.components[static_cast<size_t>(cb)];
        auto taila = detail::between_exclusive(compa, pa, pa);
        auto tailb = detail::between_exclusive(compb, pb, pb);  // whole of b, reversed below
        reversed_part = tailb;
        merged = std::move(taila);
        auto rev = reversed(std::move(tailb));
        merged.insert(merged.end(), rev.begin(), rev.end());
        for (int ci = 0; ci < d.component_count(); ++ci) {
            if (ci == cb) continue;
            if (ci == ca)
                out.components.push_back(merged);
            else
                out.components.push_back(d.components[static_cast<size_t>(ci)]);
        }
    }

    // A crossing straddling the reversed stretch has one strand direction
    // flipped, which negates its orientation sign.
    std::map<int, int> hits;
    for (const auto& pass : reversed_part) hits[pass.crossing]++;
    for (const auto& [id, count] : hits)
        if (count == 1) out.signs[id] = -out.signs[id];
    return out;
}

/// Swap all roles and negate all signs.
inline Diagram mirror(const Diagram& d) {
    Diagram out = d;
    for (auto& comp : out.components)
        for (auto& p : comp) p.role = opposite(p.role);
    for (auto& [id, s] : out.signs) s = -s;
    return out;
}

/// One component as a standalone knot diagram: self-crossings keep their
/// roles and signs, crossings shared with other components are deleted.
inline Diagram component_extract(const Diagram& d, int index) {
    if (index < 0 || index >= d.component_count()) throw usage_error("component index out of range");
    std::map<int, int> count;
    for (const auto& p : d.components[static_cast<size_t>(index)]) count[p.crossing]++;
    Diagram out;
    out.realizable = d.realizable;
    out.components.emplace_back();
    for (const auto& p : d.components[static_cast<size_t>(index)]) {
        if (count[p.crossing] == 2) {
            out.components[0].push_back(p);
            out.signs[p.crossing] = d.sign(p.crossing);
        }
    }
    return out;
}

/// k crossing-free circles.
inline Diagram trivial_link(int k) {
    if (k < 1) throw usage_error("trivial link needs at least one component");
    Diagram out;
    out.realizable = Realizable::CheckedPlanar;
    out.components.assign(static_cast<size_t>(k), {});
    return out;
}

/// Cyclic shift of a knot's passage sequence: new position p reads old p+s.
inline Diagram rotate_basepoint(const Diagram& d, int s) {
    if (d.component_count() != 1) throw usage_error("basepoint rotation needs a knot diagram");
    Diagram out = d;
    auto& comp = out.components[0];
    if (comp.empty()) return out;
    const int m = static_cast<int>(comp.size());
    int shift = ((s % m) + m) % m;
    std::rotate(comp.begin(), comp.begin() + shift, comp.end());
    return out;
}

/// Flattened traversal of a knot diagram: arrays indexed by passage position.
/// Position p is the passage between basepoints b_p and b_(p+1).
struct TraversalView {
    int m = 0;
    std::vector<int> crossing;  // crossing id at position p
    std::vector<int> partner;   // position of the other passage of that crossing
    std::vector<Role> role;
    std::vector<int> sign;

    static TraversalView of_knot(const Diagram& d) {
        if (d.component_count() != 1) throw usage_error("traversal view needs a knot diagram");
        const auto& comp = d.components[0];
        TraversalView v;
        v.m = static_cast<int>(comp.size());
        v.crossing.resize(static_cast<size_t>(v.m));
        v.partner.assign(static_cast<size_t>(v.m), -1);
        v.role.resize(static_cast<size_t>(v.m));
        v.sign.resize(static_cast<size_t>(v.m));
        std::map<int, int> first_seen;
        for (int p = 0; p < v.m; ++p) {
            const auto& pass = comp[static_cast<size_t>(p)];
            v.crossing[static_cast<size_t>(p)] = pass.crossing;
            v.role[static_cast<size_t>(p)] = pass.role;
            v.sign[static_cast<size_t>(p)] = d.sign(pass.crossing);
            auto it = first_seen.find(pass.crossing);
            if (it == first_seen.end()) {
                first_seen.emplace(pass.crossing, p);
            } else {
                v.partner[static_cast<size_t>(p)] = it->second;
                v.partner[static_cast<size_t>(it->second)] = p;
            }
        }
        for (int p = 0; p < v.m; ++p)
            if (v.partner[static_cast<size_t>(p)] < 0)
                throw invariant_error("unpaired passage in knot traversal");
        return v;
    }
};

}  // namespace knotpoly
