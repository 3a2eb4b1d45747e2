#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "knotpoly/diagram.hpp"
#include "knotpoly/errors.hpp"

namespace knotpoly {

/// Braid text format "k; w1 w2 ... wL", letters +-1..+-(k-1).
struct BraidWord {
    int width = 2;
    std::vector<int> letters;
};

inline BraidWord parse_braid(const std::string& text) {
    const auto sep = text.find(';');
    if (sep == std::string::npos) throw parse_error("braid input needs 'width; letters'", 0);
    BraidWord out;
    try {
        size_t used = 0;
        out.width = std::stoi(text.substr(0, sep), &used);
        while (used < sep)
            if (!std::isspace(static_cast<unsigned char>(text[used++])))
                throw parse_error("bad braid width", 0);
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception&) {
        throw parse_error("bad braid width", 0);
    }
    if (out.width < 1) throw parse_error("braid width must be >= 1", 0);
    std::istringstream in(text.substr(sep + 1));
    std::string tok;
    size_t index = 0;
    while (in >> tok) {
        ++index;
        try {
            size_t used = 0;
            const int w = std::stoi(tok, &used);
            if (used != tok.size() || w == 0 || std::abs(w) > out.width - 1)
                throw parse_error("braid letter out of range: '" + tok + "'", index);
            out.letters.push_back(w);
        } catch (const parse_error&) {
            throw;
        } catch (const std::exception&) {
            throw parse_error("bad braid letter: '" + tok + "'", index);
        }
    }
    return out;
}

inline std::string emit_braid(const BraidWord& b) {
    std::string out = std::to_string(b.width) + ";";
    for (int w : b.letters) out += " " + std::to_string(w);
    return out;
}

/// Closure of a braid word on `width` strands. Letter +i crosses strands
/// i, i+1 with the right-moving strand (position i to i+1) on top, sign +1;
/// letter -i puts it underneath, sign -1. Components are the cycles of the
/// underlying permutation; the result is planar by construction.
inline Diagram braid_closure(const std::vector<int>& word, int width) {
    if (width < 1) throw usage_error("braid width must be >= 1");
    for (int w : word) {
        const int i = std::abs(w);
        if (i < 1 || i > width - 1)
            throw usage_error("braid letter " + std::to_string(w) + " out of range for width " +
                              std::to_string(width));
    }

    // strand_at[pos] = index of the strand currently occupying the position.
    std::vector<int> strand_at(static_cast<size_t>(width));
    std::iota(strand_at.begin(), strand_at.end(), 0);
    std::vector<std::vector<Passage>> strand_passages(static_cast<size_t>(width));
    std::map<int, int> signs;

    int crossing_id = 1;
    for (int w : word) {
        const int i = std::abs(w);
        const int a = strand_at[static_cast<size_t>(i - 1)];  // moves right
        const int b = strand_at[static_cast<size_t>(i)];      // moves left
        const Role right_mover = (w > 0) ? Role::Over : Role::Under;
        strand_passages[static_cast<size_t>(a)].push_back(Passage{crossing_id, right_mover});
        strand_passages[static_cast<size_t>(b)].push_back(Passage{crossing_id, opposite(right_mover)});
        signs[crossing_id] = (w > 0) ? 1 : -1;
        std::swap(strand_at[static_cast<size_t>(i - 1)], strand_at[static_cast<size_t>(i)]);
        ++crossing_id;
    }

    // Permutation: strand starting at s ends at position perm_inv; closure
    // joins each bottom position back to the same top position.
    std::vector<int> ends_at(static_cast<size_t>(width));
    for (int pos = 0; pos < width; ++pos) ends_at[static_cast<size_t>(strand_at[static_cast<size_t>(pos)])] = pos;

    Diagram d;
    d.realizable = Realizable::CheckedPlanar;
    d.signs = std::move(signs);
    std::vector<bool> used(static_cast<size_t>(width), false);
    for (int start = 0; start < width; ++start) {
        if (used[static_cast<size_t>(start)]) continue;
        std::vector<Passage> comp;
        int s = start;
        do {
            used[static_cast<size_t>(s)] = true;
            const auto& ps = strand_passages[static_cast<size_t>(s)];
            comp.insert(comp.end(), ps.begin(), ps.end());
            s = ends_at[static_cast<size_t>(s)];
        } while (s != start);
        d.components.push_back(std::move(comp));
    }
    d.validate();
    return d;
}

/// (sigma_1 ... sigma_(width-1))^len, the standard torus braid.
inline std::vector<int> torus_braid_word(int width, int len) {
    if (width < 2 || len < 0) throw usage_error("torus braid needs width >= 2, len >= 0");
    std::vector<int> word;
    word.reserve(static_cast<size_t>(len) * static_cast<size_t>(width - 1));
    for (int t = 0; t < len; ++t)
        for (int i = 1; i < width; ++i) word.push_back(i);
    return word;
}

inline Diagram torus_braid(int width, int len) {
    return braid_closure(torus_braid_word(width, len), width);
}

/// Seeded uniform braid word; letters drawn from +-{1..width-1}.
inline std::vector<int> random_braid_word(int width, int len, std::uint64_t seed) {
    if (width < 2 || len < 0) throw usage_error("random braid needs width >= 2, len >= 0");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> gen(1, width - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<int> word(static_cast<size_t>(len));
    for (auto& w : word) w = coin(rng) ? gen(rng) : -gen(rng);
    return word;
}

inline Diagram random_braid(int width, int len, std::uint64_t seed) {
    return braid_closure(random_braid_word(width, len, seed), width);
}

}  // namespace knotpoly
