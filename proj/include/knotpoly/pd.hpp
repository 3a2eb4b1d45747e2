#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "knotpoly/diagram.hpp"
#include "knotpoly/errors.hpp"

namespace knotpoly {

/// PD quadruple: edge ends listed counterclockwise starting at the incoming
/// under-strand edge. The under-strand runs p -> r. The over-strand direction
/// is whichever of q -> s / s -> q orients every edge with exactly one tail
/// and one head; q -> s is the positive-crossing configuration.
struct PdEntry {
    long p, q, r, s;
};

namespace detail {

inline std::vector<PdEntry> tokenize_pd(const std::string& text) {
    std::vector<PdEntry> out;
    std::istringstream in(text);
    std::string tok;
    size_t index = 0;
    while (in >> tok) {
        ++index;
        if (tok.size() < 4 || (tok[0] != 'X' && tok[0] != 'x') || tok[1] != '[' || tok.back() != ']')
            throw parse_error("expected X[p,q,r,s], got '" + tok + "'", index);
        std::string body = tok.substr(2, tok.size() - 3);
        std::vector<long> vals;
        std::string cur;
        for (char c : body + ",") {
            if (c == ',') {
                if (cur.empty()) throw parse_error("empty entry in '" + tok + "'", index);
                try {
                    vals.push_back(std::stol(cur));
                } catch (const std::exception&) {
                    throw parse_error("bad edge label in '" + tok + "'", index);
                }
                cur.clear();
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                cur += c;
            } else {
                throw parse_error("bad character in '" + tok + "'", index);
            }
        }
        if (vals.size() != 4) throw parse_error("quadruple needs 4 entries: '" + tok + "'", index);
        out.push_back(PdEntry{vals[0], vals[1], vals[2], vals[3]});
    }
    return out;
}

}  // namespace detail

inline Diagram parse_pd(const std::string& text) {
    const auto entries = detail::tokenize_pd(text);
    if (entries.empty()) throw parse_error("empty PD code", 0);
    const int n = static_cast<int>(entries.size());

    std::map<long, int> occurrences;
    for (const auto& e : entries)
        for (long v : {e.p, e.q, e.r, e.s}) occurrences[v]++;
    for (const auto& [edge, count] : occurrences)
        if (count != 2)
            throw parse_error("edge " + std::to_string(edge) + " appears " + std::to_string(count) +
                                  " times, expected 2",
                              entries.size());

    // Orient each over-strand so that every edge gets exactly one head (flows
    // into a crossing) and one tail (flows out). Under-strands are fixed.
    std::map<long, int> heads, tails;
    for (const auto& e : entries) {
        heads[e.p]++;
        tails[e.r]++;
    }
    std::vector<int> over_dir(static_cast<size_t>(n), 0);  // +1: q->s, -1: s->q
    auto feasible_qs = [&](const PdEntry& e) { return heads[e.q] < 1 && tails[e.s] < 1; };
    auto feasible_sq = [&](const PdEntry& e) { return heads[e.s] < 1 && tails[e.q] < 1; };
    auto apply = [&](int i, int dir) {
        const auto& e = entries[static_cast<size_t>(i)];
        over_dir[static_cast<size_t>(i)] = dir;
        heads[dir > 0 ? e.q : e.s]++;
        tails[dir > 0 ? e.s : e.q]++;
    };

    int undecided = n;
    while (undecided > 0) {
        bool progress = false;
        for (int i = 0; i < n; ++i) {
            if (over_dir[static_cast<size_t>(i)] != 0) continue;
            const auto& e = entries[static_cast<size_t>(i)];
            const bool qs = feasible_qs(e), sq = feasible_sq(e);
            if (!qs && !sq)
                throw parse_error("orientation inconsistency at X[" + std::to_string(e.p) + "," +
                                      std::to_string(e.q) + "," + std::to_string(e.r) + "," +
                                      std::to_string(e.s) + "]",
                                  static_cast<size_t>(i + 1));
            if (qs != sq) {
                apply(i, qs ? 1 : -1);
                --undecided;
                progress = true;
            }
        }
        if (!progress && undecided > 0) {
            // Only components that never pass under reach here; their edges
            // give no head/tail constraint to start from. Seed assuming edges
            // are numbered consecutively along the strand: the smallest edge
            // E of the cycle flows into the crossing pairing it with E+1.
            long best_edge = 0;
            int best_crossing = -1;
            bool best_consecutive = false;
            for (int i = 0; i < n; ++i) {
                if (over_dir[static_cast<size_t>(i)] != 0) continue;
                const auto& e = entries[static_cast<size_t>(i)];
                const long lo = std::min(e.q, e.s), hi = std::max(e.q, e.s);
                const bool consecutive = (hi == lo + 1) || (e.q == e.s);
                if (best_crossing < 0 || lo < best_edge ||
                    (lo == best_edge && consecutive && !best_consecutive)) {
                    best_edge = lo;
                    best_crossing = i;
                    best_consecutive = consecutive;
                }
            }
            const auto& e = entries[static_cast<size_t>(best_crossing)];
            apply(best_crossing, e.q <= e.s ? 1 : -1);  // over-in = smaller label
            --undecided;
        }
    }
    for (const auto& [edge, count] : heads)
        if (count != 1 || tails[edge] != 1)
            throw parse_error("orientation inconsistency on edge " + std::to_string(edge),
                              entries.size());

    // in_site[e]: the passage edge e flows into; out_edge of a passage leads on.
    struct Site {
        int crossing;
        Role role;
    };
    std::map<long, Site> in_site;
    std::map<std::pair<int, int>, long> out_edge;  // (crossing, role as int) -> edge
    for (int i = 0; i < n; ++i) {
        const auto& e = entries[static_cast<size_t>(i)];
        const long over_in = over_dir[static_cast<size_t>(i)] > 0 ? e.q : e.s;
        const long over_out = over_dir[static_cast<size_t>(i)] > 0 ? e.s : e.q;
        in_site[e.p] = Site{i, Role::Under};
        in_site[over_in] = Site{i, Role::Over};
        out_edge[{i, 0}] = over_out;
        out_edge[{i, 1}] = e.r;
    }

    Diagram d;
    d.realizable = Realizable::CheckedPlanar;
    for (int i = 0; i < n; ++i)
        d.signs[i + 1] = over_dir[static_cast<size_t>(i)] > 0 ? 1 : -1;

    // Components come out ordered by their smallest incoming edge label.
    std::map<std::pair<int, int>, bool> visited;
    for (const auto& [start_edge, start_site] : in_site) {
        auto key = std::make_pair(start_site.crossing, start_site.role == Role::Over ? 0 : 1);
        if (visited[key]) continue;
        std::vector<Passage> comp;
        long edge = start_edge;
        while (true) {
            const Site site = in_site.at(edge);
            auto vkey = std::make_pair(site.crossing, site.role == Role::Over ? 0 : 1);
            if (visited[vkey]) break;
            visited[vkey] = true;
            comp.push_back(Passage{site.crossing + 1, site.role});
            edge = out_edge.at({site.crossing, site.role == Role::Over ? 0 : 1});
        }
        d.components.push_back(std::move(comp));
    }
    d.validate();
    return d;
}

/// PD emission; requires every component to carry at least one passage
/// (a crossing-free circle has no edges to name).
inline std::string emit_pd(const Diagram& d) {
    for (const auto& comp : d.components)
        if (comp.empty()) throw usage_error("PD cannot encode a zero-crossing component");

    // Edge entering passage p of a component is base+p; edges numbered 1..2n.
    std::map<int, std::pair<long, long>> under_edges, over_edges;  // crossing -> (in, out)
    long base = 1;
    for (const auto& comp : d.components) {
        const long len = static_cast<long>(comp.size());
        for (long p = 0; p < len; ++p) {
            const long in = base + p;
            const long out = base + (p + 1) % len;
            const auto& pass = comp[static_cast<size_t>(p)];
            if (pass.role == Role::Under)
                under_edges[pass.crossing] = {in, out};
            else
                over_edges[pass.crossing] = {in, out};
        }
        base += len;
    }

    std::string out;
    for (const auto& [id, sign] : d.signs) {
        const auto [up, ur] = under_edges.at(id);
        const auto [oin, oout] = over_edges.at(id);
        const long q = sign > 0 ? oin : oout;
        const long s = sign > 0 ? oout : oin;
        if (!out.empty()) out += " ";
        out += "X[" + std::to_string(up) + "," + std::to_string(q) + "," + std::to_string(ur) + "," +
               std::to_string(s) + "]";
    }
    return out;
}

}  // namespace knotpoly
