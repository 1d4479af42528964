// Acceptance gate: one pass/fail line per criterion, with the stated
// runtime budget enforced. Exit code is the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "schurkit/schurkit.hpp"

using namespace schurkit;

namespace {

struct Ctx {
    std::vector<std::string> failures;
    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

struct Criterion {
    int id;
    std::string label;
    double budget_ms;
    std::function<void(Ctx&)> body;
};

std::int64_t factorial(unsigned n) {
    std::int64_t f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

// ---- 1: the cocycle dictionary on Z/2 ------------------------------------
void crit_cocycle_dictionary(Ctx& c) {
    FiniteGroup z2 = cyclic_group(2);
    Cocycle2 beta = Cocycle2::from_values(z2, 2, {0, 0, 0, 1});
    Cocycle2 zero = Cocycle2::zero(z2, 2);
    double best = 1e18;
    bool order4 = false, exp2 = true;
    for (int rep = 0; rep < 3; ++rep) {
        Stopwatch sw;
        CentralExtension x = build_extension(z2, 2, beta);
        CentralExtension d = build_extension(z2, 2, zero);
        order4 = false;
        exp2 = true;
        for (elem_t e = 0; e < 4; ++e) {
            order4 = order4 || element_order(x.total, e) == 4;
            exp2 = exp2 && element_order(d.total, e) <= 2;
        }
        best = std::min(best, sw.ms());
    }
    c.require(order4, "the nontrivial class must contain an element of order 4");
    c.require(exp2, "the zero cocycle must give exponent 2");
    c.require(best < 1.0, "core construction exceeded 1 ms (best of 3: " + std::to_string(best) + " ms)");
}

// ---- 2: the rank-2 elementary abelian example -----------------------------
void crit_v4_example(Ctx& c) {
    FiniteGroup v = elementary_abelian(2, 2);
    auto h = second_cohomology(v, 2);
    AbelianStructure inv = abelian_invariants(v);
    std::int64_t ext = ext1(inv, 2).order();
    std::int64_t hom = lambda2(inv).hom_order(2);
    c.require(h.structure.order() == 8, "|H2(V, Z/2)| must be 8");
    c.require(ext == 4, "|Ext1(V, Z/2)| must be 4");
    c.require(hom == 2, "|Hom(L^2 V, Z/2)| must be 2");
    c.require(8 == ext * hom, "8 = 4 * 2 must hold");
}

// ---- 3: UCT cardinality identity ------------------------------------------
void crit_uct_sweep(Ctx& c) {
    std::vector<std::pair<std::string, FiniteGroup>> groups;
    groups.emplace_back("Z/4", cyclic_group(4));
    groups.emplace_back("Z/2^2", elementary_abelian(2, 2));
    groups.emplace_back("Z/2^3", elementary_abelian(2, 3));
    groups.emplace_back("S3", symmetric_group(3).group);
    groups.emplace_back("D4", realize(parse_presentation("gens: r s; rels: r^4, s^2, (r s)^2")).group);
    groups.emplace_back("Q8", realize(parse_presentation("gens: a b; rels: a^4, a^2 b^-2, b^-1 a b a")).group);
    groups.emplace_back("A4", alternating_group(4).group);
    for (const auto& [name, g] : groups) {
        AbelianStructure ab = abelianization(g);
        AbelianStructure mult = schur_multiplier(g);
        for (std::int64_t m : {2, 3, 4}) {
            auto h = second_cohomology(g, static_cast<std::uint64_t>(m));
            std::int64_t want = ext1(ab, m).order() * mult.hom_order(m);
            c.require(h.structure.order() == want,
                      "UCT identity fails for " + name + ", m=" + std::to_string(m));
        }
    }
}

// ---- 4: Schur multipliers (with the large cochain job) --------------------
void crit_multipliers(Ctx& c) {
    c.require(schur_multiplier(elementary_abelian(2, 2)).divisors == std::vector<std::int64_t>{2},
              "M(Z/2^2) must be [2]");
    c.require(schur_multiplier(alternating_group(4).group).divisors == std::vector<std::int64_t>{2},
              "M(A4) must be [2]");
    c.require(schur_multiplier(symmetric_group(3).group).is_trivial(), "M(S3) must be trivial");
    c.require(schur_multiplier(cyclic_group(12)).is_trivial(), "M(Z/12) must be trivial");
    c.require(schur_multiplier(cyclic_group(7)).is_trivial(), "M(Z/7) must be trivial");
    // the |G| = 60 job through the bit-packed kernel
    auto a5 = alternating_group(5);
    auto h = second_cohomology(a5.group, 2, 64);
    c.require(h.structure.order() == 2, "|H2(A5, Z/2)| must be 2");
}

// ---- 5: sign-calculus groups -----------------------------------------------
void crit_clifford(Ctx& c) {
    for (unsigned n = 2; n <= 8; ++n) {
        auto e = clifford_E(n);
        c.require(e.group.order() == (1u << (n + 1)), "|E_n| must be 2^(n+1) at n=" + std::to_string(n));
        Subgroup d = derived_subgroup(e.group);
        c.require(d.order() == 2 && d.contains(e.minus_one()),
                  "[E_n, E_n] must be {+-1} at n=" + std::to_string(n));
        c.require(center(e.group).order() == (n % 2 == 0 ? 2u : 4u),
                  "center parity rule fails for E_n at n=" + std::to_string(n));
        auto f = clifford_F(n);
        c.require(f.group.order() == (1u << n), "|F_(n-1)| must be 2^n at n=" + std::to_string(n));
        c.require(center(f.group).order() == (n % 2 == 1 ? 2u : 4u),
                  "center parity rule fails for F_(n-1) at n=" + std::to_string(n));
        c.require(!is_split(clifford_extension(e)).split, "E_n must be nonsplit at n=" + std::to_string(n));
        c.require(!is_split(clifford_extension(f)).split, "F_(n-1) must be nonsplit at n=" + std::to_string(n));
    }
}

// ---- 6: extraspecial profiles ----------------------------------------------
void crit_extraspecial(Ctx& c) {
    for (unsigned n : {4u, 6u, 8u}) {
        auto pr = extraspecial_profile(clifford_E(n).group);
        std::int64_t dim = 1 << (n / 2);
        c.require(pr.nonlinear_count == 1, "E_n must have exactly one nonlinear class, n=" + std::to_string(n));
        c.require(pr.forced_dimension == dim, "E_n forced degree must be 2^(n/2), n=" + std::to_string(n));
        c.require(pr.linear_count == (1 << n), "E_n must have |G^ab| linear classes, n=" + std::to_string(n));
    }
    for (unsigned n : {3u, 5u, 7u}) {
        auto pr = extraspecial_profile(clifford_F(n).group);
        std::int64_t dim = 1 << (n / 2);
        c.require(pr.nonlinear_count == 1,
                  "F_(n-1) must have exactly one nonlinear class, n=" + std::to_string(n));
        c.require(pr.forced_dimension == dim, "F_(n-1) forced degree must be 2^((n-1)/2), n=" + std::to_string(n));
    }
}

// ---- 7: covers -------------------------------------------------------------
void crit_covers(Ctx& c) {
    for (unsigned n = 2; n <= 5; ++n) {
        auto s = cover_sym(n);
        c.require(s.group.order() == static_cast<elem_t>(2 * factorial(n)),
                  "cover of S_n must have order 2 n! at n=" + std::to_string(n));
    }
    c.require(is_split(cover_extension(cover_alt(3))).split, "the cover of A_3 must split");
    c.require(!is_split(cover_extension(cover_alt(4))).split, "the cover of A_4 must be nonsplit");
    c.require(!is_split(cover_extension(cover_alt(5))).split, "the cover of A_5 must be nonsplit");
    auto a4 = cover_alt(4);
    auto sl = sl_group(2, 3);
    c.require(a4.group.order() == sl.group().order(), "the A_4 cover must match sl(2,3) in order");
    c.require(abelianization(a4.group) == abelianization(sl.group()),
              "the A_4 cover must match sl(2,3) in abelianization");
    c.require(center(a4.group).order() == center(sl.group()).order(),
              "the A_4 cover must match sl(2,3) in center order");
    auto h = second_cohomology(alternating_group(4).group, 2);
    c.require(h.structure.order() == 2, "|H2(A4, Z/2)| must be 2");
}

// ---- 8: Heisenberg groups ---------------------------------------------------
void crit_heisenberg(Ctx& c) {
    for (auto [n, q] : std::vector<std::pair<unsigned, std::uint32_t>>{{1, 2}, {1, 3}, {2, 2}}) {
        HeisenbergGroup h = heisenberg(n, q);
        std::uint64_t want = 1;
        for (unsigned i = 0; i < 2 * n + 1; ++i) want *= q;
        std::string tag = " at (n,q)=(" + std::to_string(n) + "," + std::to_string(q) + ")";
        c.require(h.ext.total.order() == want, "order must be q^(2n+1)" + tag);
        c.require(center(h.ext.total).order() == q, "center must be F_q" + tag);
        CommutatorPairing pr = commutator_pairing(h.ext);
        bool alt = true, form = true, nondeg = true;
        for (elem_t x = 0; x < h.ext.base.order(); ++x) {
            auto xv = h.base_coords(x);
            alt = alt && pr(x, x) == 0;
            bool hit = false;
            for (elem_t y = 0; y < h.ext.base.order(); ++y) {
                auto yv = h.base_coords(y);
                std::uint32_t w = 0;
                for (unsigned i = 0; i < n; ++i) {
                    w = h.field.add(w, h.field.mul(xv[i], yv[n + i]));
                    w = h.field.sub(w, h.field.mul(yv[i], xv[n + i]));
                }
                form = form && pr(x, y) == w;
                hit = hit || pr(x, y) != 0;
            }
            nondeg = nondeg && (x == h.ext.base.identity() || hit);
        }
        c.require(alt, "pairing must be alternating" + tag);
        c.require(form, "pairing must equal the standard symplectic form" + tag);
        c.require(nondeg, "pairing must be nondegenerate" + tag);
    }
}

// ---- 9: small classical groups ----------------------------------------------
void crit_classical(Ctx& c) {
    c.require(abelianization(sl_group(2, 2).group()).divisors == std::vector<std::int64_t>{2},
              "sl(2,2) abelianization must be [2]");
    c.require(abelianization(sl_group(2, 3).group()).divisors == std::vector<std::int64_t>{3},
              "sl(2,3) abelianization must be [3]");
    c.require(abelianization(sp4_group(2).group()).divisors == std::vector<std::int64_t>{2},
              "sp(4,2) abelianization must be [2]");
    c.require(!abelianization(su_group(3, 2).group()).is_trivial(), "su(3,2) must not be perfect");
    c.require(is_perfect(sl_group(2, 4).group()), "sl(2,4) must be perfect");
    c.require(is_perfect(sl_group(3, 2).group()), "sl(3,2) must be perfect");
    c.require(is_perfect(sl_group(4, 2).group()), "sl(4,2) must be perfect");
}

// ---- 10: the projective order bookkeeping ------------------------------------
void crit_dual_sequence(Ctx& c) {
    for (auto [n, q] : std::vector<std::pair<unsigned, std::uint32_t>>{{2, 3}, {2, 5}, {3, 4}}) {
        DualSequenceReport r = dual_sequence_check(n, q);
        c.require(r.verified, "order identity fails at (n,q)=(" + std::to_string(n) + "," + std::to_string(q) + ")");
    }
}

// ---- 11: K2 sweep --------------------------------------------------------------
void crit_k2(Ctx& c) {
    for (std::uint32_t q = 2; q <= 64; ++q) {
        std::uint64_t p;
        unsigned k;
        if (!as_prime_power(q, p, k)) continue;
        c.require(k2_finite_field(q).structure.is_trivial(), "K2(F_q) must be trivial at q=" + std::to_string(q));
    }
}

// ---- 12: symbol identities ------------------------------------------------------
void crit_symbols(Ctx& c) {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        SteinbergContext ctx{sl_group(3, q), {}, 1000 + q};
        ctx.ext = build_extension(ctx.sl.group(), 2, Cocycle2::random_coboundary(ctx.sl.group(), 2, 1000 + q));
        SymbolReport rep = symbol_identities_check(ctx);
        std::string tag = " over F_" + std::to_string(q);
        c.require(rep.lift_independent, "symbols must be lift-independent" + tag);
        c.require(rep.bimultiplicative, "symbols must be bimultiplicative" + tag);
        c.require(rep.skew, "{a,b}{b,a} = 1 must hold" + tag);
        c.require(rep.a_minus_a, "{a,-a} = 1 must hold" + tag);
        c.require(rep.a_one_minus_a, "{a,1-a} = 1 must hold" + tag);
        c.require(rep.all_trivial, "all symbols must be the identity" + tag);
        if (q == 2) c.require(rep.vacuous, "F_2 must be reported vacuous");
    }
}

// ---- 13: property suites ---------------------------------------------------------
void crit_properties(Ctx& c) {
    // (a) 1000 coboundaries of random 1-cochains satisfy the cocycle identity
    {
        SplitMix64 rng(1302);
        std::vector<FiniteGroup> gs{cyclic_group(6), elementary_abelian(2, 3), symmetric_group(3).group,
                                    alternating_group(4).group};
        int bad = 0;
        for (int t = 0; t < 1000; ++t) {
            const FiniteGroup& g = gs[t % gs.size()];
            std::uint64_t m = 2 + rng.below(5);
            Cocycle2 cb = Cocycle2::random_coboundary(g, m, rng.next());
            if (!cb.satisfies_cocycle_identity() || !cb.is_normalized()) ++bad;
        }
        c.require(bad == 0, "d1 images violating the cocycle identity: " + std::to_string(bad));
    }
    // (b) 1000 random SNF re-multiplications (entries <= 1000, dims <= 8x8);
    //     smith_normal_form re-verifies U A V = D and the unimodularity of
    //     the transforms internally before returning
    {
        SplitMix64 rng(1303);
        for (int t = 0; t < 1000; ++t) {
            std::size_t r = 1 + rng.below(8), cc = 1 + rng.below(8);
            IntMatrix m(r, cc);
            for (auto& x : m.a) x = BigInt(static_cast<long long>(rng.below(2001)) - 1000);
            auto s = smith_normal_form(m);
            if (!(s.U * m * s.V == s.D)) {
                c.require(false, "SNF re-multiplication failed");
                return;
            }
        }
    }
    // (c) solve_mod against the exhaustive oracle on systems with m^cols <= 10^4
    {
        SplitMix64 rng(1304);
        int done = 0;
        while (done < 300) {
            std::uint64_t m = 2 + rng.below(13);
            std::size_t cols = 1 + rng.below(4);
            std::uint64_t space = 1;
            for (std::size_t i = 0; i < cols; ++i) space *= m;
            if (space > 10000) continue;
            std::size_t rows = 1 + rng.below(4);
            std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
            std::vector<std::uint64_t> b(rows);
            for (auto& row : a) {
                for (auto& x : row) x = rng.below(m);
            }
            for (auto& x : b) x = rng.below(m);
            bool got = solve_mod(a, b, m).has_value();
            bool want = false;
            for (std::uint64_t v = 0; v < space && !want; ++v) {
                std::uint64_t tv = v;
                std::vector<std::uint64_t> x(cols);
                for (auto& xi : x) {
                    xi = tv % m;
                    tv /= m;
                }
                bool ok = true;
                for (std::size_t i = 0; i < rows && ok; ++i) {
                    std::uint64_t acc = 0;
                    for (std::size_t j = 0; j < cols; ++j) acc = (acc + a[i][j] * x[j]) % m;
                    ok = acc == b[i];
                }
                want = ok;
            }
            if (got != want) {
                c.require(false, "solve_mod disagrees with the exhaustive oracle");
                return;
            }
            ++done;
        }
    }
}

// ---- 14: the equivariant-splitting report -----------------------------------------
void crit_aut_splitting(Ctx& c) {
    AutSplitReport rep = aut_splitting_check();
    c.require(rep.consistent, "the computation must be internally consistent");
    c.require(rep.candidates.size() == 8, "all 8 candidate classes must be swept");
    bool any = false;
    for (const auto& cand : rep.candidates) any = any || (cand.maps_to_generator && cand.invariant);
    c.require(rep.section_exists == any, "the verdict must match the sweep");
    c.require(rep.witness_coords.has_value() == rep.section_exists,
              "a witness must be reported exactly when the verdict is positive");
    std::printf("         (reported verdict: equivariant section %s)\n",
                rep.section_exists ? "EXISTS" : "does not exist");
}

}  // namespace

int main(int argc, char** argv) {
    bool enforce_time = true;
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--no-time-budgets") enforce_time = false;
    }
    std::vector<Criterion> criteria{
        {1, "cocycle dictionary on Z/2: order-4 element vs exponent 2", 1.0, crit_cocycle_dictionary},
        {2, "H2(V, Z/2) = 8 = 4 * 2 for V = Z/2 x Z/2", 1000.0, crit_v4_example},
        {3, "UCT cardinality identity over 7 groups x m in {2,3,4}", 30000.0, crit_uct_sweep},
        {4, "Schur multipliers and the |G| = 60 bit-packed job", 600000.0, crit_multipliers},
        {5, "sign-calculus groups E_n / F_(n-1), n <= 8", 5000.0, crit_clifford},
        {6, "extraspecial profiles force the nonlinear degree 2^[n/2]", 5000.0, crit_extraspecial},
        {7, "double covers: orders by enumeration, splitting, uniqueness", 60000.0, crit_covers},
        {8, "Heisenberg groups: order, center, symplectic pairing", 5000.0, crit_heisenberg},
        {9, "small classical groups: abelianizations and perfectness", 180000.0, crit_classical},
        {10, "projective order bookkeeping over F_q", 60000.0, crit_dual_sequence},
        {11, "K2(F_q) trivial for every prime power q <= 64", 1000.0, crit_k2},
        {12, "symbol identities in extensions of SL_3(F_q), q in {2,3,4}", 120000.0, crit_symbols},
        {13, "property suites: cocycle identity, SNF, solve_mod oracle", 30000.0, crit_properties},
        {14, "equivariant-splitting decision over V = Z/2 x Z/2", 1000.0, crit_aut_splitting},
    };
    int failed = 0;
    double total = 0;
    for (const auto& cr : criteria) {
        Ctx ctx;
        Stopwatch sw;
        try {
            cr.body(ctx);
        } catch (const std::exception& e) {
            ctx.failures.push_back(std::string("exception: ") + e.what());
        }
        double ms = sw.ms();
        total += ms;
        if (enforce_time && ms > cr.budget_ms) {
            ctx.failures.push_back("runtime " + std::to_string(ms) + " ms exceeds the budget " +
                                   std::to_string(cr.budget_ms) + " ms");
        }
        bool pass = ctx.failures.empty();
        failed += pass ? 0 : 1;
        std::printf("[%s] %2d. %s (%.1f ms, budget %.0f ms)\n", pass ? "PASS" : "FAIL", cr.id, cr.label.c_str(),
                    ms, cr.budget_ms);
        for (const auto& f : ctx.failures) std::printf("         - %s\n", f.c_str());
    }
    std::printf("%d/%zu criteria passed (%.1f ms total)\n", static_cast<int>(criteria.size()) - failed,
                criteria.size(), total);
    return failed;
}
