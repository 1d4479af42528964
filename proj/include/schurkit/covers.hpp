#pragma once

// Double covers of the symmetric and alternating groups, realized from
// presentations by coset enumeration.
//
// S_n is presented on the adjacent transpositions t_1..t_{n-1} (squares,
// braid relations, distant commutation). The cover adds a central z with
// z^2 = 1 and t_i^2 = z, keeps the braid relation exact, and twists distant
// commutation to t_j t_i = z t_i t_j. With an exactly-commuting distant
// relation the presented group is the pullback of the sign map through
// Z/4 -> Z/2, whose restriction to A_n splits; the twisted relation gives
// the spin-type cover whose restriction to A_n is the nonsplit double cover
// for n >= 4. The central relators [z, t_i] are included explicitly.
//
// The even subgroup (the cover of A_n) is generated by the products
// t_i t_j over all pairs, which includes z = t_i t_i.

#include <string>
#include <vector>

#include "schurkit/clifford.hpp"
#include "schurkit/closure.hpp"
#include "schurkit/error.hpp"
#include "schurkit/extension.hpp"
#include "schurkit/finite_group.hpp"
#include "schurkit/presentation.hpp"

namespace schurkit {

inline Presentation symmetric_presentation(unsigned n) {
    if (n < 2) throw ContractError("symmetric_presentation: n must be >= 2");
    Presentation p;
    p.ngens = n - 1;
    for (unsigned i = 1; i <= n - 1; ++i) p.names.push_back("t" + std::to_string(i));
    auto t = [](unsigned i) { return static_cast<int>(i); };
    for (unsigned i = 1; i <= n - 1; ++i) p.relators.push_back({t(i), t(i)});
    for (unsigned i = 1; i + 1 <= n - 1; ++i) {
        p.relators.push_back({t(i + 1), t(i), t(i + 1), -t(i), -t(i + 1), -t(i)});
    }
    for (unsigned i = 1; i <= n - 1; ++i) {
        for (unsigned j = i + 2; j <= n - 1; ++j) {
            p.relators.push_back({t(j), t(i), -t(j), -t(i)});
        }
    }
    p.validate();
    return p;
}

// Generator 1 is z; generator 1+i is t_i.
inline Presentation cover_symmetric_presentation(unsigned n) {
    if (n < 2) throw ContractError("cover_symmetric_presentation: n must be >= 2");
    Presentation p;
    p.ngens = n;
    p.names.push_back("z");
    for (unsigned i = 1; i <= n - 1; ++i) p.names.push_back("t" + std::to_string(i));
    const int z = 1;
    auto t = [](unsigned i) { return static_cast<int>(i + 1); };
    p.relators.push_back({z, z});
    for (unsigned i = 1; i <= n - 1; ++i) p.relators.push_back({z, t(i), -z, -t(i)});
    for (unsigned i = 1; i <= n - 1; ++i) p.relators.push_back({t(i), t(i), -z});
    for (unsigned i = 1; i + 1 <= n - 1; ++i) {
        p.relators.push_back({t(i + 1), t(i), t(i + 1), -t(i), -t(i + 1), -t(i)});
    }
    for (unsigned i = 1; i <= n - 1; ++i) {
        for (unsigned j = i + 2; j <= n - 1; ++j) {
            p.relators.push_back({t(j), t(i), -t(j), -t(i), -z});
        }
    }
    p.validate();
    return p;
}

struct CoverGroup {
    FiniteGroup group;
    elem_t z = 0;                     // the central involution
    std::vector<elem_t> t_images;     // images of t_1..t_{n-1} (in `group`)
    unsigned n = 0;
};

inline CoverGroup cover_sym(unsigned n, std::uint32_t cap = 200000) {
    RealizedGroup r = realize(cover_symmetric_presentation(n), cap);
    CoverGroup c;
    c.group = r.group;
    c.z = r.gen_images[0];
    c.t_images.assign(r.gen_images.begin() + 1, r.gen_images.end());
    c.n = n;
    return c;
}

inline CoverGroup cover_alt(unsigned n, std::uint32_t cap = 200000) {
    CoverGroup s = cover_sym(n, cap);
    std::vector<elem_t> gens;
    for (elem_t a : s.t_images) {
        for (elem_t b : s.t_images) gens.push_back(s.group.mul(a, b));
    }
    auto sub = closure_in_group(s.group, gens);
    CoverGroup c;
    c.group = sub.group;
    c.z = sub.index_of(s.z);
    for (std::size_t i = 0; i + 1 < s.t_images.size(); ++i) {
        c.t_images.push_back(sub.index_of(s.group.mul(s.t_images[i], s.t_images[i + 1])));
    }
    c.n = n;
    return c;
}

// The cover as a central extension of S_n (resp. A_n) by <z>.
inline CentralExtension cover_extension(const CoverGroup& c) {
    return extension_from_central_subgroup(c.group, {c.group.identity(), c.z});
}

// Nontriviality of the four double-cover families: builds the relevant
// central extension and negates the splitting test.
inline bool double_cover_nontriviality(unsigned n, CoverKind which, std::uint32_t coset_cap = 200000) {
    switch (which) {
        case CoverKind::EOverBase:
            return !is_split(clifford_extension(clifford_E(n))).split;
        case CoverKind::FOverBase:
            return !is_split(clifford_extension(clifford_F(n))).split;
        case CoverKind::Alt:
            return !is_split(cover_extension(cover_alt(n, coset_cap))).split;
        case CoverKind::Sym:
            return !is_split(cover_extension(cover_sym(n, coset_cap))).split;
    }
    throw ContractError("double_cover_nontriviality: unknown cover kind");
}

}  // namespace schurkit
