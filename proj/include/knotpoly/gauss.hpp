#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "knotpoly/diagram.hpp"
#include "knotpoly/errors.hpp"

namespace knotpoly {

/// Gauss code text format:
///   components separated by ";", tokens whitespace-separated;
///   token = ("O"|"U") + decimal crossing label + ("+"|"-");
///   a zero-passage component is the single token "*".
inline Diagram parse_gauss(const std::string& text) {
    Diagram d;
    d.realizable = Realizable::Unchecked;

    std::vector<std::string> comp_texts;
    {
        std::string cur;
        for (char ch : text) {
            if (ch == ';') {
                comp_texts.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        comp_texts.push_back(cur);
    }

    size_t token_index = 0;
    for (const auto& comp_text : comp_texts) {
        std::vector<Passage> comp;
        std::istringstream in(comp_text);
        std::string tok;
        bool starred = false;
        bool any_token = false;
        while (in >> tok) {
            ++token_index;
            any_token = true;
            if (tok == "*") {
                starred = true;
                continue;
            }
            if (tok.size() < 3) throw parse_error("token too short: '" + tok + "'", token_index);
            Role role;
            if (tok[0] == 'O' || tok[0] == 'o')
                role = Role::Over;
            else if (tok[0] == 'U' || tok[0] == 'u')
                role = Role::Under;
            else
                throw parse_error("token must start with O or U: '" + tok + "'", token_index);
            char sc = tok.back();
            int sign;
            if (sc == '+')
                sign = 1;
            else if (sc == '-')
                sign = -1;
            else
                throw parse_error("token must end with + or -: '" + tok + "'", token_index);
            const std::string digits = tok.substr(1, tok.size() - 2);
            if (digits.empty()) throw parse_error("missing crossing label: '" + tok + "'", token_index);
            for (char c : digits)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw parse_error("bad crossing label: '" + tok + "'", token_index);
            int label = 0;
            try {
                label = std::stoi(digits);
            } catch (const std::exception&) {
                throw parse_error("crossing label out of range: '" + tok + "'", token_index);
            }
            auto it = d.signs.find(label);
            if (it != d.signs.end() && it->second != sign)
                throw parse_error("inconsistent signs for crossing " + std::to_string(label),
                                  token_index);
            d.signs.emplace(label, sign);
            comp.push_back(Passage{label, role});
        }
        if (starred && !comp.empty())
            throw parse_error("'*' cannot be mixed with passages in one component", token_index);
        if (!any_token) throw parse_error("empty component (use '*' for a crossing-free circle)",
                                          token_index);
        d.components.push_back(std::move(comp));
    }

    // Per-crossing validation with a useful token position.
    std::map<int, std::pair<int, int>> seen;
    size_t pos = 0;
    for (const auto& comp : d.components)
        for (const auto& p : comp) {
            ++pos;
            auto& cnt = seen[p.crossing];
            (p.role == Role::Over ? cnt.first : cnt.second)++;
        }
    for (const auto& [id, cnt] : seen) {
        if (cnt.first + cnt.second != 2)
            throw parse_error("crossing " + std::to_string(id) + " appears " +
                                  std::to_string(cnt.first + cnt.second) + " times, expected 2",
                              pos);
        if (cnt.first != 1)
            throw parse_error("crossing " + std::to_string(id) + " needs one Over and one Under",
                              pos);
    }
    d.validate();
    return d;
}

inline std::string emit_gauss(const Diagram& d) {
    std::string out;
    bool first_comp = true;
    for (const auto& comp : d.components) {
        if (!first_comp) out += " ; ";
        first_comp = false;
        if (comp.empty()) {
            out += "*";
            continue;
        }
        bool first_tok = true;
        for (const auto& p : comp) {
            if (!first_tok) out += " ";
            first_tok = false;
            out += (p.role == Role::Over) ? "O" : "U";
            out += std::to_string(p.crossing);
            out += (d.sign(p.crossing) > 0) ? "+" : "-";
        }
    }
    return out;
}

}  // namespace knotpoly
