#pragma once

// K_2 of small finite fields by brute force, and the symbol calculus inside
// explicit central extensions of SL_n(F_q): {a, b} is the commutator of
// lifts of the commuting diagonal matrices diag(a, a^-1, 1, ...) and
// diag(b, 1, b^-1, ...). Symbols land in the central kernel, do not depend
// on the lifts, and are bimultiplicative.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "schurkit/abelian.hpp"
#include "schurkit/error.hpp"
#include "schurkit/extension.hpp"
#include "schurkit/finite_field.hpp"
#include "schurkit/matrix_groups.hpp"

namespace schurkit {

struct K2Result {
    std::uint32_t q = 2;
    AbelianStructure structure;
};

// F_q^x tensor F_q^x is Z/(q-1) through a fixed generator g (g^i tensor g^j
// maps to i*j); the Steinberg relations a tensor (1-a) generate the
// subgroup of index gcd over the relation values.
inline K2Result k2_finite_field(std::uint32_t q) {
    if (q > 1024) throw ContractError("k2_finite_field: q must be a prime power <= 1024");
    FieldFq f(q);
    K2Result r;
    r.q = q;
    std::uint64_t m = q - 1;
    if (m <= 1) return r;  // F_2: the unit group is trivial
    // log(a) * log(1-a) mod (q-1) for every a with a(1-a) != 0.
    std::uint64_t g = m;
    for (std::uint32_t a = 2; a < q; ++a) {  // skip 0 and 1
        std::uint32_t one_minus = f.sub(1, a);
        std::uint64_t rel = (static_cast<std::uint64_t>(f.log(a)) * f.log(one_minus)) % m;
        g = std::gcd(g, rel);
    }
    if (g > 1) r.structure = AbelianStructure({static_cast<std::int64_t>(g)});
    return r;
}

struct SteinbergContext {
    MatrixGroup sl;        // SL_n(F_q), n >= 3
    CentralExtension ext;  // a central extension of sl.group()
    std::uint64_t seed = 1;
};

namespace detail {

inline FqMat sl_coroot_r(const FieldFq& f, unsigned n, std::uint32_t a) {
    FqMat m = mat_identity(n);
    m.set(0, 0, static_cast<std::uint16_t>(a));
    m.set(1, 1, static_cast<std::uint16_t>(f.inv(a)));
    return m;
}
inline FqMat sl_coroot_tau(const FieldFq& f, unsigned n, std::uint32_t b) {
    FqMat m = mat_identity(n);
    m.set(0, 0, static_cast<std::uint16_t>(b));
    m.set(2, 2, static_cast<std::uint16_t>(f.inv(b)));
    return m;
}

}  // namespace detail

// {a, b} as a kernel index. Evaluated twice, with the canonical section
// lifts and with seeded offsets; centrality makes both agree and the
// disagreement case is reported as an internal error.
inline elem_t steinberg_symbol(const SteinbergContext& ctx, std::uint32_t a, std::uint32_t b) {
    if (ctx.sl.n < 3) {
        throw ContractError("steinberg_symbol: needs SL_n with n >= 3 (two distinct coroots)");
    }
    const FieldFq& f = ctx.sl.field;
    if (a == 0 || a >= f.q() || b == 0 || b >= f.q()) {
        throw ContractError("steinberg_symbol: arguments must be units of F_q");
    }
    elem_t ra = ctx.sl.index_of(detail::sl_coroot_r(f, ctx.sl.n, a));
    elem_t tb = ctx.sl.index_of(detail::sl_coroot_tau(f, ctx.sl.n, b));
    const CentralExtension& x = ctx.ext;
    elem_t lift_r = x.section[ra];
    elem_t lift_t = x.section[tb];
    elem_t c = x.total.commutator(lift_r, lift_t);
    SplitMix64 rng(ctx.seed ^ (static_cast<std::uint64_t>(a) << 20) ^ b);
    elem_t m = x.kernel.order();
    elem_t lift_r2 = x.total.mul(lift_r, x.embed[static_cast<elem_t>(rng.below(m))]);
    elem_t lift_t2 = x.total.mul(lift_t, x.embed[static_cast<elem_t>(rng.below(m))]);
    if (x.total.commutator(lift_r2, lift_t2) != c) {
        throw ContractError("steinberg_symbol: value depends on the lift (internal)");
    }
    return x.kernel_index_of(c);
}

struct SymbolReport {
    std::uint32_t q = 2;
    bool vacuous = false;           // F_2: only a = 1
    std::uint64_t pairs = 0;        // symbols evaluated
    bool lift_independent = true;   // second-lift re-evaluations agreed
    bool bimultiplicative = true;   // {a, b1 b2} = {a,b1}{a,b2} and symmetrically
    bool skew = true;               // {a,b}{b,a} = 1
    bool a_minus_a = true;          // {a,-a} = 1
    bool a_one_minus_a = true;      // {a,1-a} = 1 where 1-a is a unit
    std::uint64_t steinberg_pairs = 0;  // pairs checked for {a,1-a}
    bool coroot_swap_agrees = true;     // symbols from the swapped coroot pair agree
    bool all_trivial = true;            // every symbol is the kernel identity

    bool all_pass() const {
        return lift_independent && bimultiplicative && skew && a_minus_a && a_one_minus_a && coroot_swap_agrees;
    }
};

// Sweeps every identity over all unit pairs (exhaustive for the intended
// q <= 5 range).
inline SymbolReport symbol_identities_check(const SteinbergContext& ctx) {
    const FieldFq& f = ctx.sl.field;
    SymbolReport rep;
    rep.q = f.q();
    if (f.q() == 2) {
        rep.vacuous = true;
        rep.pairs = 1;
        if (steinberg_symbol(ctx, 1, 1) != 0) rep.all_trivial = false;
        return rep;
    }
    const CentralExtension& x = ctx.ext;
    auto kmul = [&x](elem_t i, elem_t j) { return x.kernel.mul(i, j); };
    std::vector<std::vector<elem_t>> sym(f.q(), std::vector<elem_t>(f.q(), 0));
    for (std::uint32_t a = 1; a < f.q(); ++a) {
        for (std::uint32_t b = 1; b < f.q(); ++b) {
            sym[a][b] = steinberg_symbol(ctx, a, b);
            ++rep.pairs;
            if (sym[a][b] != 0) rep.all_trivial = false;
        }
    }
    for (std::uint32_t a = 1; a < f.q(); ++a) {
        for (std::uint32_t b1 = 1; b1 < f.q(); ++b1) {
            for (std::uint32_t b2 = 1; b2 < f.q(); ++b2) {
                if (sym[a][f.mul(b1, b2)] != kmul(sym[a][b1], sym[a][b2])) rep.bimultiplicative = false;
                if (sym[f.mul(b1, b2)][a] != kmul(sym[b1][a], sym[b2][a])) rep.bimultiplicative = false;
            }
        }
    }
    for (std::uint32_t a = 1; a < f.q(); ++a) {
        for (std::uint32_t b = 1; b < f.q(); ++b) {
            if (kmul(sym[a][b], sym[b][a]) != 0) rep.skew = false;
        }
        if (sym[a][f.neg(a)] != 0) rep.a_minus_a = false;
        std::uint32_t oma = f.sub(1, a);
        if (oma != 0) {
            ++rep.steinberg_pairs;
            if (sym[a][oma] != 0) rep.a_one_minus_a = false;
        }
    }
    // Coroot independence: the symbol built from the swapped pair
    // (tau-direction, r-direction) agrees with {a, b}.
    for (std::uint32_t a = 1; a < f.q(); ++a) {
        for (std::uint32_t b = 1; b < f.q(); ++b) {
            elem_t ta = ctx.sl.index_of(detail::sl_coroot_tau(f, ctx.sl.n, a));
            elem_t rb = ctx.sl.index_of(detail::sl_coroot_r(f, ctx.sl.n, b));
            elem_t c = x.total.commutator(x.section[ta], x.section[rb]);
            if (x.kernel_index_of(c) != sym[a][b]) rep.coroot_swap_agrees = false;
        }
    }
    return rep;
}

}  // namespace schurkit
