#pragma once

// Equivariant-splitting decision for the restriction sequence over
// V = Z/2 x Z/2 with Z/2 coefficients:
//
//   0 -> Ext^1(V, Z/2) -> H^2(V, Z/2) -> Hom(L^2 V, Z/2) -> 0
//
// as modules over Aut(V) = GL_2(F_2). Aut(V) acts trivially on the
// quotient, so a module section exists exactly when some Aut(V)-invariant
// class maps onto the generator of Hom(L^2 V, Z/2). The decision is fully
// exhaustive: all 8 classes are swept as section candidates against all 6
// automorphisms, and the verdict is whatever the computation finds, with
// the witness (or the exhaustion record) in the report.

#include <optional>
#include <string>
#include <vector>

#include "schurkit/cohomology.hpp"
#include "schurkit/extension.hpp"
#include "schurkit/group_builders.hpp"

namespace schurkit {

struct AutSplitCandidate {
    std::vector<std::uint32_t> coords;  // class coordinates in the H^2 basis
    bool maps_to_generator = false;     // nonzero image in Hom(L^2 V, Z/2)
    bool invariant = false;             // fixed by every automorphism
    bool abelian_total = false;         // the built extension is abelian
};

struct AutSplitReport {
    std::int64_t h2_order = 0;
    unsigned automorphism_count = 0;
    unsigned ext_part_order = 0;  // classes with zero commutator pairing
    std::vector<AutSplitCandidate> candidates;
    bool section_exists = false;
    std::optional<std::vector<std::uint32_t>> witness_coords;
    std::optional<std::vector<std::uint32_t>> witness_values;  // 4x4 cocycle table
    bool consistent = true;
    std::vector<std::string> failures;  // empty when consistent
};

inline AutSplitReport aut_splitting_check() {
    AutSplitReport rep;
    auto fail = [&rep](const std::string& why) {
        rep.consistent = false;
        rep.failures.push_back(why);
    };
    FiniteGroup v = elementary_abelian(2, 2);
    CohomologyResult h2 = second_cohomology(v, 2);
    rep.h2_order = h2.structure.order();
    if (rep.h2_order != 8 || h2.basis.size() != 3) fail("H^2(V, Z/2) does not have order 8 with a 3-class basis");

    const elem_t n = v.order();
    auto class_table = [&](std::uint32_t x) {
        std::vector<std::uint32_t> t(static_cast<std::size_t>(n) * n, 0);
        for (unsigned i = 0; i < h2.basis.size(); ++i) {
            if (!(x >> i & 1)) continue;
            for (elem_t g = 0; g < n; ++g) {
                for (elem_t h = 0; h < n; ++h) {
                    t[static_cast<std::size_t>(g) * n + h] ^= static_cast<std::uint32_t>(h2.basis[i](g, h));
                }
            }
        }
        return t;
    };
    auto as_cocycle = [&](const std::vector<std::uint32_t>& t) { return Cocycle2::from_values(v, 2, t); };
    // Image in Hom(L^2 V, Z/2): the commutator pairing evaluated on the two
    // generators of V.
    auto pairing_bit = [&](const std::vector<std::uint32_t>& t) {
        return (t[static_cast<std::size_t>(1) * n + 2] ^ t[static_cast<std::size_t>(2) * n + 1]) & 1u;
    };
    // Coordinates of an arbitrary cocycle: the unique x whose difference is
    // a coboundary.
    auto coords_of = [&](const std::vector<std::uint32_t>& t) -> std::uint32_t {
        std::optional<std::uint32_t> found;
        for (std::uint32_t x = 0; x < 8; ++x) {
            std::vector<std::uint32_t> diff = class_table(x);
            for (std::size_t i = 0; i < diff.size(); ++i) diff[i] ^= t[i];
            if (is_coboundary(as_cocycle(diff))) {
                if (found) fail("two classes differ by a coboundary");
                found = x;
            }
        }
        if (!found) {
            fail("cocycle has no class coordinates");
            return 0;
        }
        return *found;
    };

    // All automorphisms of V: bijections fixing 0 that respect the law.
    std::vector<std::vector<elem_t>> autos;
    std::vector<elem_t> perm{0, 1, 2, 3};
    std::vector<elem_t> img(4);
    elem_t nonid[3] = {1, 2, 3};
    do {
        img[0] = 0;
        for (int i = 0; i < 3; ++i) img[static_cast<std::size_t>(nonid[i])] = perm[static_cast<std::size_t>(i) + 1];
        bool ok = true;
        for (elem_t a = 0; a < 4 && ok; ++a) {
            for (elem_t b = 0; b < 4 && ok; ++b) ok = img[v.mul(a, b)] == v.mul(img[a], img[b]);
        }
        if (ok) autos.push_back(img);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    rep.automorphism_count = static_cast<unsigned>(autos.size());
    if (autos.size() != 6) fail("Aut(V) does not have 6 elements");

    // Action on classes: pull back along the inverse and re-coordinatize.
    auto act = [&](const std::vector<elem_t>& phi, std::uint32_t x) {
        std::vector<elem_t> inv(4);
        for (elem_t a = 0; a < 4; ++a) inv[phi[a]] = a;
        std::vector<std::uint32_t> t = class_table(x);
        std::vector<std::uint32_t> pulled(t.size());
        for (elem_t g = 0; g < n; ++g) {
            for (elem_t h = 0; h < n; ++h) {
                pulled[static_cast<std::size_t>(g) * n + h] = t[static_cast<std::size_t>(inv[g]) * n + inv[h]];
            }
        }
        return coords_of(pulled);
    };
    std::vector<std::vector<std::uint32_t>> action;
    for (const auto& phi : autos) {
        std::vector<std::uint32_t> row(8);
        for (std::uint32_t x = 0; x < 8; ++x) row[x] = act(phi, x);
        // The action must be additive and preserve the projection.
        for (std::uint32_t x = 0; x < 8; ++x) {
            for (std::uint32_t y = 0; y < 8; ++y) {
                if (row[x ^ y] != (row[x] ^ row[y])) fail("class action is not additive");
            }
            if (pairing_bit(class_table(row[x])) != pairing_bit(class_table(x))) {
                fail("class action moves the pairing image");
            }
        }
        action.push_back(std::move(row));
    }

    for (std::uint32_t x = 0; x < 8; ++x) {
        AutSplitCandidate cand;
        for (unsigned i = 0; i < 3; ++i) cand.coords.push_back(x >> i & 1);
        std::vector<std::uint32_t> t = class_table(x);
        cand.maps_to_generator = pairing_bit(t) == 1;
        cand.invariant = true;
        for (const auto& row : action) cand.invariant = cand.invariant && row[x] == x;
        CentralExtension e = build_extension(v, 2, as_cocycle(t));
        cand.abelian_total = is_abelian(e.total);
        if (cand.abelian_total == cand.maps_to_generator) {
            fail("abelian extensions do not match the kernel of the pairing map");
        }
        if (!cand.maps_to_generator) ++rep.ext_part_order;
        if (cand.maps_to_generator && cand.invariant && !rep.section_exists) {
            rep.section_exists = true;
            rep.witness_coords = cand.coords;
            rep.witness_values = t;
        }
        rep.candidates.push_back(std::move(cand));
    }
    if (rep.ext_part_order != 4) fail("the abelian (Ext) part does not have order 4");
    // Re-verify the witness directly: invariance under every automorphism
    // as a cocycle class, not just through the action table.
    if (rep.section_exists) {
        for (const auto& phi : autos) {
            std::vector<elem_t> inv(4);
            for (elem_t a = 0; a < 4; ++a) inv[phi[a]] = a;
            std::vector<std::uint32_t> t = *rep.witness_values;
            std::vector<std::uint32_t> pulled(t.size());
            for (elem_t g = 0; g < n; ++g) {
                for (elem_t h = 0; h < n; ++h) {
                    pulled[static_cast<std::size_t>(g) * n + h] = t[static_cast<std::size_t>(inv[g]) * n + inv[h]];
                }
            }
            for (std::size_t i = 0; i < t.size(); ++i) pulled[i] ^= t[i];
            if (!is_coboundary(as_cocycle(pulled))) {
                fail("witness class is not invariant on direct re-check");
            }
        }
    }
    return rep;
}

}  // namespace schurkit
