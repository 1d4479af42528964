#pragma once

// Permutations of {0..deg-1} as index vectors, with cycle-notation parsing
// (1-based in the notation, as in "(1 2 3)(4 5)") and the standard
// symmetric / alternating groups.

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "schurkit/closure.hpp"
#include "schurkit/error.hpp"

namespace schurkit {

using Perm = std::vector<std::uint8_t>;

inline Perm perm_identity(std::size_t deg) {
    Perm p(deg);
    for (std::size_t i = 0; i < deg; ++i) p[i] = static_cast<std::uint8_t>(i);
    return p;
}

// (p*q)(i) = p(q(i)): apply q, then p.
inline Perm perm_mul(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

inline Perm perm_inv(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint8_t>(i);
    return r;
}

inline std::string perm_cycle_string(const Perm& p) {
    std::string out;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == i) continue;
        out += "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) out += " ";
            out += std::to_string(j + 1);
            first = false;
            j = p[j];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

// Parses cycle notation with 1-based points, e.g. "(1 2 3)(4 5)". Commas
// between points are accepted. `deg` extends the result to at least that
// many points.
inline Perm parse_perm(const std::string& s, std::size_t deg = 0) {
    std::vector<std::vector<std::size_t>> cycles;
    std::size_t i = 0;
    std::size_t maxpt = deg;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        if (s[i] != '(') throw ParseError("permutation: expected '(' in cycle notation");
        ++i;
        std::vector<std::size_t> cyc;
        while (i < s.size() && s[i] != ')') {
            if (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',') {
                ++i;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
                throw ParseError("permutation: expected a point number");
            }
            std::size_t v = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                v = v * 10 + static_cast<std::size_t>(s[i] - '0');
                ++i;
            }
            if (v == 0 || v > 255) throw ParseError("permutation: points must be in 1..255");
            cyc.push_back(v);
            maxpt = std::max(maxpt, v);
        }
        if (i == s.size()) throw ParseError("permutation: unterminated cycle");
        ++i;  // ')'
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
    }
    Perm p = perm_identity(maxpt);
    for (const auto& cyc : cycles) {
        for (std::size_t t = 0; t < cyc.size(); ++t) {
            std::size_t from = cyc[t] - 1;
            std::size_t to = cyc[(t + 1) % cyc.size()] - 1;
            if (p[from] != from) throw ParseError("permutation: point repeated across cycles");
            p[from] = static_cast<std::uint8_t>(to);
        }
    }
    return p;
}

using PermClosure = ClosureResult<Perm, SeqHash<Perm>>;

inline PermClosure permutation_group(std::vector<Perm> gens,
                                     std::size_t cap = FiniteGroup::kDefaultElementCap) {
    std::size_t deg = 1;
    for (const auto& g : gens) deg = std::max(deg, g.size());
    for (auto& g : gens) {
        while (g.size() < deg) g.push_back(static_cast<std::uint8_t>(g.size()));
    }
    auto labeler = [](const Perm& p) { return perm_cycle_string(p); };
    return closure_with_labels<Perm, SeqHash<Perm>>(gens, perm_mul, perm_inv, perm_identity(deg), labeler, cap);
}

// S_n generated by the adjacent transpositions (i, i+1).
inline PermClosure symmetric_group(unsigned n, std::size_t cap = FiniteGroup::kDefaultElementCap) {
    if (n < 1 || n > 10) throw ContractError("symmetric_group: n must be in 1..10");
    std::vector<Perm> gens;
    for (unsigned i = 0; i + 1 < n; ++i) {
        Perm t = perm_identity(n);
        std::swap(t[i], t[i + 1]);
        gens.push_back(std::move(t));
    }
    return permutation_group(std::move(gens), cap);
}

// A_n generated by the 3-cycles (1, 2, i).
inline PermClosure alternating_group(unsigned n, std::size_t cap = FiniteGroup::kDefaultElementCap) {
    if (n < 1 || n > 10) throw ContractError("alternating_group: n must be in 1..10");
    std::vector<Perm> gens;
    for (unsigned i = 3; i <= n; ++i) {
        Perm t = perm_identity(n);
        t[0] = 1;
        t[1] = static_cast<std::uint8_t>(i - 1);
        t[i - 1] = 0;
        gens.push_back(std::move(t));
    }
    return permutation_group(std::move(gens), cap);
}

}  // namespace schurkit
