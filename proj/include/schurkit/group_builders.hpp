#pragma once

// Direct constructions of the standard small abelian groups and products.

#include <string>
#include <vector>

#include "schurkit/error.hpp"
#include "schurkit/finite_group.hpp"

namespace schurkit {

inline FiniteGroup cyclic_group(std::uint64_t n) {
    if (n == 0 || n > FiniteGroup::kTableLimit) {
        throw ContractError("cyclic_group: order must be in 1.." + std::to_string(FiniteGroup::kTableLimit));
    }
    const elem_t nn = static_cast<elem_t>(n);
    std::vector<elem_t> inverse(nn);
    for (elem_t i = 0; i < nn; ++i) inverse[i] = static_cast<elem_t>((nn - i) % nn);
    std::vector<elem_t> gens;
    if (nn > 1) gens.push_back(1);
    return FiniteGroup::from_law(
        nn, [nn](elem_t a, elem_t b) { return static_cast<elem_t>((a + b) % nn); }, 0, std::move(inverse),
        std::move(gens));
}

// (Z/p)^k with tuple index sum_i c_i p^i.
inline FiniteGroup elementary_abelian(std::uint64_t p, unsigned k) {
    if (!is_prime_u64(p)) throw ContractError("elementary_abelian: p must be prime");
    std::uint64_t n = 1;
    for (unsigned i = 0; i < k; ++i) {
        n *= p;
        if (n > FiniteGroup::kTableLimit) throw CapacityError("elementary_abelian: order exceeds table limit");
    }
    const elem_t nn = static_cast<elem_t>(n);
    auto law = [p, k](elem_t a, elem_t b) {
        elem_t out = 0, mult = 1;
        for (unsigned i = 0; i < k; ++i) {
            elem_t da = (a / mult) % static_cast<elem_t>(p);
            elem_t db = (b / mult) % static_cast<elem_t>(p);
            out += ((da + db) % static_cast<elem_t>(p)) * mult;
            mult *= static_cast<elem_t>(p);
        }
        return out;
    };
    std::vector<elem_t> inverse(nn);
    for (elem_t a = 0; a < nn; ++a) {
        elem_t out = 0, mult = 1;
        for (unsigned i = 0; i < k; ++i) {
            elem_t da = (a / mult) % static_cast<elem_t>(p);
            out += ((static_cast<elem_t>(p) - da) % static_cast<elem_t>(p)) * mult;
            mult *= static_cast<elem_t>(p);
        }
        inverse[a] = out;
    }
    std::vector<elem_t> gens;
    elem_t mult = 1;
    for (unsigned i = 0; i < k; ++i) {
        gens.push_back(mult);
        mult *= static_cast<elem_t>(p);
    }
    return FiniteGroup::from_law(nn, law, 0, std::move(inverse), std::move(gens));
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    std::uint64_t n = static_cast<std::uint64_t>(a.order()) * b.order();
    if (n > FiniteGroup::kDefaultElementCap) throw CapacityError("direct_product: order exceeds element cap");
    const elem_t nb = b.order();
    FiniteGroup ga = a, gb = b;
    auto law = [ga, gb, nb](elem_t x, elem_t y) {
        return ga.mul(x / nb, y / nb) * nb + gb.mul(x % nb, y % nb);
    };
    std::vector<elem_t> inverse(n);
    for (elem_t x = 0; x < n; ++x) inverse[x] = ga.inv(x / nb) * nb + gb.inv(x % nb);
    std::vector<elem_t> gens;
    for (elem_t g : generating_set(a)) gens.push_back(g * nb + b.identity());
    for (elem_t g : generating_set(b)) gens.push_back(a.identity() * nb + g);
    return FiniteGroup::from_law(static_cast<elem_t>(n), law, a.identity() * nb + b.identity(),
                                 std::move(inverse), std::move(gens));
}

}  // namespace schurkit
