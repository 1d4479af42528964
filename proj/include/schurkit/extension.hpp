#pragma once

// Concrete central extensions 1 -> A -> E -> G -> 1: building E from a
// normalized 2-cocycle on G, packaging a given group over a central
// subgroup, splitting detection by both the coboundary route and a
// complement search, cocycle extraction from a section, and the commutator
// pairing over an abelian base.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schurkit/cocycle.hpp"
#include "schurkit/cohomology.hpp"
#include "schurkit/error.hpp"
#include "schurkit/finite_group.hpp"
#include "schurkit/group_builders.hpp"

namespace schurkit {

struct CentralExtension {
    FiniteGroup total;
    FiniteGroup base;
    FiniteGroup kernel;              // abelian; cyclic in the cocycle-built case
    std::vector<elem_t> embed;       // kernel index -> total index
    std::vector<elem_t> project;     // total index -> base index
    std::vector<elem_t> section;     // base index -> total index (set-theoretic)
    bool kernel_cyclic = true;

    elem_t kernel_order() const { return kernel.order(); }

    elem_t kernel_index_of(elem_t total_elem) const {
        for (elem_t i = 0; i < kernel.order(); ++i) {
            if (embed[i] == total_elem) return i;
        }
        throw ContractError("CentralExtension: element not in the kernel image");
    }

    // Structural invariants: exactness, centrality of the kernel image,
    // projection o section = id, normalized section, order bookkeeping.
    void validate() const {
        if (static_cast<std::uint64_t>(base.order()) * kernel.order() != total.order()) {
            throw ContractError("CentralExtension: |total| != |base| * |kernel|");
        }
        if (section[base.identity()] != total.identity()) {
            throw ContractError("CentralExtension: section is not normalized");
        }
        Homomorphism emb{kernel, total, embed};
        if (!emb.verify()) throw ContractError("CentralExtension: kernel embedding is not a homomorphism");
        // Projection homomorphism: exhaustive on small totals, sampled on
        // large ones.
        auto proj_ok = [&](elem_t a, elem_t b) {
            return project[total.mul(a, b)] == base.mul(project[a], project[b]);
        };
        if (total.order() <= 2048) {
            for (elem_t a = 0; a < total.order(); ++a) {
                for (elem_t b = 0; b < total.order(); ++b) {
                    if (!proj_ok(a, b)) throw ContractError("CentralExtension: projection is not a homomorphism");
                }
            }
        } else {
            SplitMix64 rng(0x86041307);
            for (int t = 0; t < 20000; ++t) {
                if (!proj_ok(static_cast<elem_t>(rng.below(total.order())),
                             static_cast<elem_t>(rng.below(total.order())))) {
                    throw ContractError("CentralExtension: projection is not a homomorphism");
                }
            }
        }
        for (elem_t i = 0; i < kernel.order(); ++i) {
            if (project[embed[i]] != base.identity()) {
                throw ContractError("CentralExtension: projection o embedding is not trivial");
            }
        }
        for (elem_t b = 0; b < base.order(); ++b) {
            if (project[section[b]] != b) throw ContractError("CentralExtension: projection o section != id");
        }
        std::vector<elem_t> gens = generating_set(total);
        for (elem_t i = 0; i < kernel.order(); ++i) {
            for (elem_t h : gens) {
                if (total.mul(embed[i], h) != total.mul(h, embed[i])) {
                    throw ContractError("CentralExtension: kernel image is not central");
                }
            }
        }
        // Exactness at the kernel: the fiber over the identity is exactly
        // the kernel image, by the order count plus injectivity.
        std::vector<elem_t> img = embed;
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end()) {
            throw ContractError("CentralExtension: kernel embedding is not injective");
        }
    }
};

// E = G x Z/m with (g,a)(h,b) = (gh, a + b + beta(g,h)); element index is
// g*m + a, so the canonical section g -> (g,0) is g*m.
inline CentralExtension build_extension(const FiniteGroup& base, std::uint64_t m, const Cocycle2& beta) {
    if (m < 2) throw ContractError("build_extension: kernel order must be >= 2");
    if (beta.modulus() != m || beta.group().order() != base.order()) {
        throw ContractError("build_extension: cocycle does not match base and modulus");
    }
    beta.require_normalized_cocycle();
    std::uint64_t n = static_cast<std::uint64_t>(base.order()) * m;
    if (n > FiniteGroup::kDefaultElementCap) {
        throw CapacityError("build_extension: total order exceeds element cap");
    }
    const elem_t mm = static_cast<elem_t>(m);
    FiniteGroup b = base;
    Cocycle2 bt = beta;
    auto law = [b, bt, mm](elem_t x, elem_t y) {
        elem_t g = x / mm, a = x % mm, h = y / mm, c = y % mm;
        return b.mul(g, h) * mm + static_cast<elem_t>((a + c + bt(g, h)) % mm);
    };
    std::vector<elem_t> inverse(n);
    for (elem_t g = 0; g < base.order(); ++g) {
        elem_t gi = base.inv(g);
        std::uint64_t w = bt(g, gi) % m;
        for (elem_t a = 0; a < mm; ++a) {
            inverse[static_cast<std::size_t>(g) * mm + a] =
                gi * mm + static_cast<elem_t>((2 * m - a - w) % m);
        }
    }
    std::vector<elem_t> gens;
    for (elem_t g : generating_set(base)) gens.push_back(g * mm);
    gens.push_back(base.identity() * mm + 1);
    std::vector<std::string> labels;
    if (n <= FiniteGroup::kTableLimit && !base.labels().empty()) {
        for (elem_t g = 0; g < base.order(); ++g) {
            for (elem_t a = 0; a < mm; ++a) labels.push_back("(" + base.label(g) + "," + std::to_string(a) + ")");
        }
    }
    FiniteGroup total = FiniteGroup::from_law(static_cast<elem_t>(n), law, base.identity() * mm,
                                              std::move(inverse), std::move(gens), std::move(labels));
    CentralExtension x;
    x.total = std::move(total);
    x.base = base;
    x.kernel = cyclic_group(m);
    x.kernel_cyclic = true;
    x.embed.resize(mm);
    for (elem_t a = 0; a < mm; ++a) x.embed[a] = base.identity() * mm + a;
    x.project.resize(n);
    for (std::size_t t = 0; t < n; ++t) x.project[t] = static_cast<elem_t>(t / mm);
    x.section.resize(base.order());
    for (elem_t g = 0; g < base.order(); ++g) x.section[g] = g * mm;
    x.validate();
    return x;
}

// Package an ambient group as a central extension over a central subgroup
// given by its member list. The section picks the least representative of
// each coset.
inline CentralExtension extension_from_central_subgroup(const FiniteGroup& total,
                                                        const std::vector<elem_t>& kernel_members) {
    QuotientGroup q = quotient(total, kernel_members);
    CentralExtension x;
    x.total = total;
    x.base = q.group;
    x.project = q.coset_of;
    x.section = q.rep_of;
    const elem_t m = static_cast<elem_t>(kernel_members.size());
    // Cyclic kernel: index i embeds as z^i for the least generator z.
    elem_t zgen = total.identity();
    for (elem_t z : kernel_members) {
        if (static_cast<elem_t>(element_order(total, z)) == m) {
            zgen = z;
            break;
        }
    }
    if (m > 1 && zgen != total.identity()) {
        x.kernel = cyclic_group(m);
        x.kernel_cyclic = true;
        x.embed.resize(m);
        elem_t cur = total.identity();
        for (elem_t i = 0; i < m; ++i) {
            x.embed[i] = cur;
            cur = total.mul(cur, zgen);
        }
    } else if (m == 1) {
        x.kernel = FiniteGroup::trivial();
        x.kernel_cyclic = true;
        x.embed = {total.identity()};
    } else {
        // Non-cyclic abelian kernel: re-enumerate the members as their own
        // group, embedding in sorted member order.
        std::vector<elem_t> members = kernel_members;
        std::sort(members.begin(), members.end());
        std::vector<elem_t> local(total.order(), 0);
        for (elem_t i = 0; i < m; ++i) local[members[i]] = i;
        std::vector<elem_t> table(static_cast<std::size_t>(m) * m);
        for (elem_t i = 0; i < m; ++i) {
            for (elem_t j = 0; j < m; ++j) {
                table[static_cast<std::size_t>(i) * m + j] = local[total.mul(members[i], members[j])];
            }
        }
        x.kernel = FiniteGroup::from_table(std::move(table), m);
        x.kernel_cyclic = false;
        x.embed = members;
    }
    x.validate();
    return x;
}

// The cocycle of the stored section: beta(g,h) = s(g) s(h) s(gh)^-1, read
// through the kernel indexing (cyclic kernels only).
inline Cocycle2 extract_cocycle(const CentralExtension& x) {
    if (!x.kernel_cyclic) {
        throw ContractError("extract_cocycle: kernel is not cyclic; no Z/m value table exists");
    }
    const elem_t n = x.base.order();
    if (static_cast<std::uint64_t>(n) * n > (1u << 24)) {
        throw CapacityError("extract_cocycle: base too large for a dense cocycle table");
    }
    std::map<elem_t, elem_t> kidx;
    for (elem_t i = 0; i < x.kernel.order(); ++i) kidx[x.embed[i]] = i;
    std::vector<std::uint32_t> vals(static_cast<std::size_t>(n) * n);
    for (elem_t g = 0; g < n; ++g) {
        for (elem_t h = 0; h < n; ++h) {
            elem_t prod = x.total.mul(x.section[g], x.section[h]);
            elem_t diff = x.total.mul(prod, x.total.inv(x.section[x.base.mul(g, h)]));
            auto it = kidx.find(diff);
            if (it == kidx.end()) throw ContractError("extract_cocycle: section defect outside kernel");
            vals[static_cast<std::size_t>(g) * n + h] = it->second;
        }
    }
    return Cocycle2::from_values(x.base, std::max<std::uint64_t>(x.kernel.order(), 2), std::move(vals));
}

struct SplitResult {
    bool split = false;
    std::optional<std::vector<elem_t>> complement;          // total indices, sorted
    std::optional<std::vector<std::uint32_t>> witness;      // 1-cochain when the cocycle route ran
};

// Splitting test. The coboundary route (complete) runs whenever the kernel
// is cyclic; the complement search over generator lifts runs when
// m^#gens fits the combo limit and supplies the witness subgroup. When both
// run their verdicts are cross-checked.
inline SplitResult is_split(const CentralExtension& x, std::uint64_t combo_limit = 100000) {
    SplitResult res;
    std::optional<bool> by_cocycle;
    if (x.kernel_cyclic && x.kernel.order() >= 2) {
        auto w = is_coboundary(extract_cocycle(x));
        by_cocycle = w.has_value();
        if (w) {
            res.witness = *w;
            // Corrected section t(g) = s(g) i(-w(g)) is a homomorphism.
            const std::uint64_t m = x.kernel.order();
            std::vector<elem_t> comp;
            for (elem_t g = 0; g < x.base.order(); ++g) {
                elem_t corr = x.embed[static_cast<elem_t>((m - (*w)[g] % m) % m)];
                comp.push_back(x.total.mul(x.section[g], corr));
            }
            std::sort(comp.begin(), comp.end());
            res.complement = comp;
        }
    }
    std::optional<bool> by_search;
    std::vector<elem_t> gens = generating_set(x.base);
    const std::uint64_t m = x.kernel.order();
    std::uint64_t combos = 1;
    bool feasible = true;
    for (std::size_t i = 0; i < gens.size() && feasible; ++i) {
        combos *= m;
        if (combos > combo_limit) feasible = false;
    }
    if (feasible && (!by_cocycle.has_value() || !res.complement.has_value())) {
        bool found = false;
        std::vector<elem_t> lifts(gens.size());
        for (std::uint64_t combo = 0; combo < combos && !found; ++combo) {
            std::uint64_t c = combo;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                lifts[i] = x.total.mul(x.section[gens[i]], x.embed[static_cast<elem_t>(c % m)]);
                c /= m;
            }
            std::vector<elem_t> sub = subgroup_closure(x.total, lifts);
            if (sub.size() == x.base.order()) {
                found = true;
                if (!res.complement) res.complement = sub;
            }
        }
        by_search = found;
    }
    if (by_cocycle && by_search && *by_cocycle != *by_search) {
        throw ContractError("is_split: coboundary route and complement search disagree (internal)");
    }
    if (by_cocycle) {
        res.split = *by_cocycle;
    } else if (by_search) {
        res.split = *by_search;
    } else {
        throw CapacityError("is_split: kernel not cyclic and complement search infeasible");
    }
    return res;
}

// Commutator pairing of an extension with abelian base: (g,h) -> [s(g),
// s(h)] as a kernel index. Independence of the lifts is a consequence of
// centrality; a seeded lift perturbation re-checks it.
struct CommutatorPairing {
    elem_t base_order = 0;
    std::vector<elem_t> value;  // base x base -> kernel index

    elem_t operator()(elem_t g, elem_t h) const { return value[static_cast<std::size_t>(g) * base_order + h]; }

    bool is_zero() const {
        for (auto v : value) {
            if (v != 0) return false;
        }
        return true;
    }
};

inline CommutatorPairing commutator_pairing(const CentralExtension& x, std::uint64_t seed = 0x9a112261) {
    if (!is_abelian(x.base)) throw ContractError("commutator_pairing: base is not abelian");
    std::map<elem_t, elem_t> kidx;
    for (elem_t i = 0; i < x.kernel.order(); ++i) kidx[x.embed[i]] = i;
    const elem_t n = x.base.order();
    CommutatorPairing pr;
    pr.base_order = n;
    pr.value.resize(static_cast<std::size_t>(n) * n);
    SplitMix64 rng(seed);
    const elem_t m = x.kernel.order();
    for (elem_t g = 0; g < n; ++g) {
        for (elem_t h = 0; h < n; ++h) {
            elem_t c = x.total.commutator(x.section[g], x.section[h]);
            auto it = kidx.find(c);
            if (it == kidx.end()) throw ContractError("commutator_pairing: commutator not in kernel");
            // Re-evaluate with perturbed lifts: central kernels must not
            // change the value.
            elem_t g2 = x.total.mul(x.section[g], x.embed[static_cast<elem_t>(rng.below(m))]);
            elem_t h2 = x.total.mul(x.section[h], x.embed[static_cast<elem_t>(rng.below(m))]);
            if (x.total.commutator(g2, h2) != c) {
                throw ContractError("commutator_pairing: value depends on the lift (internal)");
            }
            pr.value[static_cast<std::size_t>(g) * n + h] = it->second;
        }
    }
    return pr;
}

}  // namespace schurkit
