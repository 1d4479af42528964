#pragma once

// The sign calculus on signed subsets of {1..n}: elements eps * e_A with
// e_i e_j = -e_j e_i for i != j and e_i^2 = 1. E_n is the full group of
// order 2^(n+1); F_{n-1} is its index-2 subgroup on even subsets. Both are
// packaged as central extensions of elementary abelian 2-groups by {+-1}.

#include <cstdint>
#include <string>
#include <vector>

#include "schurkit/error.hpp"
#include "schurkit/extension.hpp"
#include "schurkit/finite_group.hpp"
#include "schurkit/group_builders.hpp"

namespace schurkit {

// Parity of #{(i, j) : i in A, j in B, i > j}: the transpositions needed to
// move each factor of e_B leftward past the larger-indexed factors of e_A.
// Squares e_i^2 = 1 contribute no sign.
inline int sign_factor(std::uint32_t a, std::uint32_t b) {
    unsigned t = 0;
    while (b != 0) {
        unsigned j = static_cast<unsigned>(__builtin_ctz(b));
        b &= b - 1;
        t += static_cast<unsigned>(__builtin_popcount(a >> (j + 1)));
    }
    return t % 2 == 0 ? 1 : -1;
}

struct CliffordGroup {
    FiniteGroup group;
    unsigned n = 0;
    bool even_only = false;
    std::vector<std::uint32_t> mask_of;  // element index -> subset bitmask
    std::vector<elem_t> index_of_mask;   // bitmask -> index of (+1, mask); even masks only for F

    elem_t encode(bool negative, std::uint32_t mask) const {
        return index_of_mask[mask] + (negative ? 1 : 0);
    }
    elem_t minus_one() const { return encode(true, 0); }
};

namespace detail {

inline std::string clifford_label(bool neg, std::uint32_t mask, unsigned n) {
    std::string s = neg ? "-" : "";
    if (mask == 0) return s.empty() ? "1" : "-1";
    s += "e";
    for (unsigned i = 0; i < n; ++i) {
        if (mask & (1u << i)) s += std::to_string(i + 1) + ".";
    }
    s.pop_back();
    return s;
}

inline CliffordGroup clifford_build(unsigned n, bool even_only) {
    if (n < 1 || n > 16) throw CapacityError("clifford: n must be in 1..16");
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        if (!even_only || __builtin_popcount(m) % 2 == 0) masks.push_back(m);
    }
    const elem_t order = static_cast<elem_t>(2 * masks.size());
    std::vector<elem_t> index_of_mask(1u << n, 0);
    for (std::size_t i = 0; i < masks.size(); ++i) index_of_mask[masks[i]] = static_cast<elem_t>(2 * i);
    auto iom = index_of_mask;
    std::vector<std::uint32_t> mof = masks;
    auto law = [iom, mof](elem_t x, elem_t y) {
        std::uint32_t a = mof[x / 2], b = mof[y / 2];
        elem_t s = (x ^ y) & 1u;
        if (sign_factor(a, b) < 0) s ^= 1u;
        return iom[a ^ b] + s;
    };
    std::vector<elem_t> inverse(order);
    for (elem_t x = 0; x < order; ++x) {
        // (eps e_A)^-1 = eps sign(A,A) e_A
        std::uint32_t a = mof[x / 2];
        elem_t s = x & 1u;
        if (sign_factor(a, a) < 0) s ^= 1u;
        inverse[x] = iom[a] + s;
    }
    std::vector<elem_t> gens;
    if (even_only) {
        for (unsigned i = 0; i + 1 < n; ++i) gens.push_back(iom[(1u << i) | (1u << (i + 1))]);
        gens.push_back(iom[0] + 1);  // -1
    } else {
        for (unsigned i = 0; i < n; ++i) gens.push_back(iom[1u << i]);
    }
    std::vector<std::string> labels;
    if (order <= FiniteGroup::kTableLimit) {
        for (elem_t x = 0; x < order; ++x) labels.push_back(clifford_label(x & 1, mof[x / 2], n));
    }
    CliffordGroup cg;
    cg.group = FiniteGroup::from_law(order, law, 0, std::move(inverse), std::move(gens), std::move(labels));
    cg.n = n;
    cg.even_only = even_only;
    cg.mask_of = std::move(mof);
    cg.index_of_mask = std::move(index_of_mask);
    return cg;
}

}  // namespace detail

// E_n, order 2^(n+1).
inline CliffordGroup clifford_E(unsigned n) { return detail::clifford_build(n, false); }

// F_{n-1} = even subsets of E_n, order 2^n.
inline CliffordGroup clifford_F(unsigned n) { return detail::clifford_build(n, true); }

// E_n over {+-1}^n (the subsets), or F_{n-1} over {+-1}^(n-1) (even subsets
// truncated to their first n-1 coordinates).
inline CentralExtension clifford_extension(const CliffordGroup& cg) {
    const unsigned n = cg.n;
    const unsigned base_dim = cg.even_only ? n - 1 : n;
    FiniteGroup base = elementary_abelian(2, base_dim);
    const std::uint32_t trunc = (1u << base_dim) - 1;
    CentralExtension x;
    x.total = cg.group;
    x.base = base;
    x.kernel = cyclic_group(2);
    x.kernel_cyclic = true;
    x.embed = {cg.group.identity(), cg.minus_one()};
    x.project.resize(cg.group.order());
    for (elem_t t = 0; t < cg.group.order(); ++t) x.project[t] = cg.mask_of[t / 2] & trunc;
    x.section.resize(base.order());
    for (elem_t b = 0; b < base.order(); ++b) {
        std::uint32_t mask = b;
        if (cg.even_only && __builtin_popcount(b) % 2 == 1) mask |= 1u << (n - 1);
        x.section[b] = cg.index_of_mask[mask];
    }
    x.validate();
    return x;
}

// Character-degree bookkeeping for an extraspecial-shaped 2-group: the
// center must have order 2 and lie inside the derived subgroup. With one
// conjugacy class beyond the |G^ab| linear ones, the squares identity
// |G| = |G^ab| + d^2 forces the unique nonlinear degree d.
struct ExtraspecialProfile {
    std::int64_t linear_count = 0;
    std::int64_t nonlinear_count = 0;
    std::int64_t forced_dimension = 0;  // 0 when nonlinear_count != 1
};

inline ExtraspecialProfile extraspecial_profile(const FiniteGroup& g) {
    Subgroup z = center(g);
    if (z.order() != 2) {
        throw ContractError("extraspecial_profile: center has order " + std::to_string(z.order()) +
                            ", expected 2");
    }
    Subgroup d = derived_subgroup(g);
    for (elem_t m : z.members) {
        if (!d.contains(m)) {
            throw ContractError("extraspecial_profile: center is not contained in the derived subgroup");
        }
    }
    ExtraspecialProfile pr;
    pr.linear_count = abelianization(g).order();
    pr.nonlinear_count = static_cast<std::int64_t>(conjugacy_classes(g).size()) - pr.linear_count;
    if (pr.nonlinear_count == 1) {
        std::int64_t dd = static_cast<std::int64_t>(g.order()) - pr.linear_count;
        std::int64_t root = 1;
        while (root * root < dd) ++root;
        if (root * root != dd) {
            throw ContractError("extraspecial_profile: |G| - |G^ab| is not a perfect square");
        }
        pr.forced_dimension = root;
    }
    return pr;
}

enum class CoverKind { EOverBase, FOverBase, Alt, Sym };

}  // namespace schurkit
