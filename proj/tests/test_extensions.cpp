#include <doctest.h>

#include "schurkit/extension.hpp"
#include "schurkit/group_builders.hpp"
#include "schurkit/perm.hpp"

using namespace schurkit;

namespace {

Cocycle2 z4_cocycle() {
    return Cocycle2::from_values(cyclic_group(2), 2, {0, 0, 0, 1});
}

Cocycle2 heisenberg_cocycle() {
    // beta((x,y),(x',y')) = x * y' on V = F_2^2, index = x + 2y
    FiniteGroup v = elementary_abelian(2, 2);
    std::vector<std::uint32_t> vals(16);
    for (elem_t a = 0; a < 4; ++a) {
        for (elem_t b = 0; b < 4; ++b) vals[a * 4 + b] = (a & 1) * ((b >> 1) & 1);
    }
    return Cocycle2::from_values(v, 2, vals);
}

}  // namespace

TEST_CASE("build_extension: the two extensions of Z/2 by Z/2") {
    FiniteGroup z2 = cyclic_group(2);
    CentralExtension x = build_extension(z2, 2, z4_cocycle());
    CHECK(x.total.order() == 4);
    bool order4 = false;
    for (elem_t e = 0; e < 4; ++e) order4 = order4 || element_order(x.total, e) == 4;
    CHECK(order4);  // the nontrivial class builds Z/4

    CentralExtension direct = build_extension(z2, 2, Cocycle2::zero(z2, 2));
    for (elem_t e = 0; e < 4; ++e) CHECK(element_order(direct.total, e) <= 2);
    // the canonical section of the zero cocycle is a homomorphism
    for (elem_t a = 0; a < 2; ++a) {
        for (elem_t b = 0; b < 2; ++b) {
            CHECK(direct.total.mul(direct.section[a], direct.section[b]) == direct.section[z2.mul(a, b)]);
        }
    }
}

TEST_CASE("build_extension rejects non-cocycles") {
    FiniteGroup z3 = cyclic_group(3);
    std::vector<std::uint32_t> junk(9, 0);
    junk[4] = 1;
    CHECK_THROWS_AS(build_extension(z3, 2, Cocycle2::from_values(z3, 2, junk)), ContractError);
}

TEST_CASE("the Heisenberg cocycle builds the order-8 extraspecial extension") {
    CentralExtension x = build_extension(elementary_abelian(2, 2), 2, heisenberg_cocycle());
    CHECK(x.total.order() == 8);
    CHECK_FALSE(is_abelian(x.total));
    CHECK(center(x.total).order() == 2);
    // the kernel image is exactly the center here
    CHECK(center(x.total).contains(x.embed[1]));
}

TEST_CASE("extension structural invariants") {
    for (const auto& x :
         {build_extension(cyclic_group(2), 2, z4_cocycle()),
          build_extension(elementary_abelian(2, 2), 2, heisenberg_cocycle()),
          build_extension(symmetric_group(3).group, 3, Cocycle2::random_coboundary(symmetric_group(3).group, 3, 5))}) {
        x.validate();
        CHECK(x.total.order() == x.base.order() * x.kernel.order());
    }
}

TEST_CASE("extract_cocycle round-trips the defining cocycle") {
    FiniteGroup z2 = cyclic_group(2);
    CentralExtension x = build_extension(z2, 2, z4_cocycle());
    Cocycle2 back = extract_cocycle(x);
    for (elem_t g = 0; g < 2; ++g) {
        for (elem_t h = 0; h < 2; ++h) CHECK(back(g, h) == z4_cocycle()(g, h));
    }
}

TEST_CASE("different sections extract cohomologous cocycles") {
    // Z/4 over Z/2 with the canonical section gives beta(1,1) = 1; moving
    // the section to the other fiber point changes the cocycle only by a
    // coboundary.
    FiniteGroup z2 = cyclic_group(2);
    CentralExtension x = build_extension(z2, 2, z4_cocycle());
    CentralExtension moved = x;
    moved.section[1] = x.total.mul(x.section[1], x.embed[1]);
    Cocycle2 a = extract_cocycle(x);
    Cocycle2 b = extract_cocycle(moved);
    CHECK(a(1, 1) == 1);
    auto w = is_coboundary(a.minus(b));
    CHECK(w.has_value());
    // and neither cocycle is itself a coboundary
    CHECK_FALSE(is_coboundary(a).has_value());
    CHECK_FALSE(is_coboundary(b).has_value());
}

TEST_CASE("is_split: both routes agree and produce witnesses") {
    FiniteGroup z2 = cyclic_group(2);
    // direct product: split with the obvious complement
    SplitResult s0 = is_split(build_extension(z2, 2, Cocycle2::zero(z2, 2)));
    CHECK(s0.split);
    REQUIRE(s0.complement.has_value());
    CHECK(s0.complement->size() == 2);
    // Z/4: nonsplit
    CHECK_FALSE(is_split(build_extension(z2, 2, z4_cocycle())).split);
    // coboundary-built extensions split, and the complement projects onto
    // the base bijectively
    FiniteGroup s4 = symmetric_group(4).group;
    CentralExtension x = build_extension(s4, 2, Cocycle2::random_coboundary(s4, 2, 99));
    SplitResult sr = is_split(x);
    CHECK(sr.split);
    REQUIRE(sr.complement.has_value());
    CHECK(sr.complement->size() == s4.order());
    std::vector<char> seen(s4.order(), 0);
    for (elem_t t : *sr.complement) seen[x.project[t]] = 1;
    for (char c : seen) CHECK(c == 1);
}

TEST_CASE("is_split matches is_coboundary across random cocycle classes") {
    FiniteGroup v = elementary_abelian(2, 2);
    auto h = second_cohomology(v, 2);
    // sweep all 8 classes of H^2(V, Z/2)
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
        const elem_t n = v.order();
        std::vector<std::uint32_t> vals(static_cast<std::size_t>(n) * n, 0);
        for (unsigned i = 0; i < 3; ++i) {
            if (!(mask >> i & 1)) continue;
            for (elem_t a = 0; a < n; ++a) {
                for (elem_t b = 0; b < n; ++b) {
                    vals[static_cast<std::size_t>(a) * n + b] ^= static_cast<std::uint32_t>(h.basis[i](a, b));
                }
            }
        }
        Cocycle2 beta = Cocycle2::from_values(v, 2, vals);
        CentralExtension x = build_extension(v, 2, beta);
        CHECK(is_split(x).split == is_coboundary(beta).has_value());
        CHECK(is_split(x).split == (mask == 0));
    }
}

TEST_CASE("cohomologous cocycles give matching invariants and an equivalence map") {
    FiniteGroup v = elementary_abelian(2, 2);
    Cocycle2 beta = heisenberg_cocycle();
    SplitMix64 rng(2718);
    for (int t = 0; t < 10; ++t) {
        std::vector<std::uint32_t> s(v.order());
        for (auto& x : s) x = static_cast<std::uint32_t>(rng.below(2));
        s[v.identity()] = 0;
        Cocycle2 shift = Cocycle2::coboundary(v, 2, s);
        const elem_t n = v.order();
        std::vector<std::uint32_t> vals(static_cast<std::size_t>(n) * n);
        for (elem_t a = 0; a < n; ++a) {
            for (elem_t b = 0; b < n; ++b) {
                vals[static_cast<std::size_t>(a) * n + b] =
                    static_cast<std::uint32_t>((beta(a, b) + shift(a, b)) % 2);
            }
        }
        Cocycle2 beta2 = Cocycle2::from_values(v, 2, vals);
        CentralExtension x1 = build_extension(v, 2, beta);
        CentralExtension x2 = build_extension(v, 2, beta2);
        CHECK(x1.total.order() == x2.total.order());
        CHECK(center(x1.total).order() == center(x2.total).order());
        CHECK(abelianization(x1.total) == abelianization(x2.total));
        // The pair map (g, a) -> (g, a + s(g)) is an isomorphism fixing the
        // kernel and the base.
        auto phi = [&](elem_t e) {
            elem_t g = e / 2, a = e % 2;
            return g * 2 + static_cast<elem_t>((a + s[g]) % 2);
        };
        for (elem_t e1 = 0; e1 < x1.total.order(); ++e1) {
            for (elem_t e2 = 0; e2 < x1.total.order(); ++e2) {
                CHECK(phi(x2.total.mul(e1, e2)) == x1.total.mul(phi(e1), phi(e2)));
            }
        }
    }
}

TEST_CASE("commutator pairing: pinned examples and bilinearity") {
    // direct product: zero pairing
    FiniteGroup v = elementary_abelian(2, 2);
    CHECK(commutator_pairing(build_extension(v, 2, Cocycle2::zero(v, 2))).is_zero());

    // Z/4 over Z/2: abelian total, zero pairing (the class sits in the
    // abelian-extension part)
    CentralExtension z4 = build_extension(cyclic_group(2), 2,
                                          Cocycle2::from_values(cyclic_group(2), 2, {0, 0, 0, 1}));
    CHECK(commutator_pairing(z4).is_zero());
    CHECK(is_abelian(z4.total));

    // the Heisenberg extension: the standard symplectic form, nondegenerate
    CentralExtension hx = build_extension(v, 2, heisenberg_cocycle());
    CommutatorPairing pr = commutator_pairing(hx);
    for (elem_t a = 0; a < 4; ++a) {
        CHECK(pr(a, a) == 0);
        for (elem_t b = 0; b < 4; ++b) {
            unsigned want = ((a & 1) * ((b >> 1) & 1) + (b & 1) * ((a >> 1) & 1)) % 2;
            CHECK(pr(a, b) == want);
            // bilinearity in the first slot
            for (elem_t c = 0; c < 4; ++c) {
                CHECK(pr(v.mul(a, c), b) == hx.kernel.mul(pr(a, b), pr(c, b)));
            }
        }
    }
    // abelian total iff zero pairing
    CHECK_FALSE(is_abelian(hx.total));
    CHECK_FALSE(pr.is_zero());

    // nonabelian base is rejected
    auto s3 = symmetric_group(3);
    CentralExtension xs3 = build_extension(s3.group, 2, Cocycle2::zero(s3.group, 2));
    CHECK_THROWS_AS(commutator_pairing(xs3), ContractError);
}

TEST_CASE("extension_from_central_subgroup round-trips a built extension") {
    FiniteGroup v = elementary_abelian(2, 2);
    CentralExtension built = build_extension(v, 2, heisenberg_cocycle());
    std::vector<elem_t> kernel_members(built.embed.begin(), built.embed.end());
    std::sort(kernel_members.begin(), kernel_members.end());
    CentralExtension repack = extension_from_central_subgroup(built.total, kernel_members);
    CHECK(repack.base.order() == 4);
    CHECK(repack.kernel.order() == 2);
    CHECK(repack.kernel_cyclic);
    CHECK_FALSE(is_split(repack).split);
    // packaging a non-central subgroup fails
    auto s3 = symmetric_group(3);
    auto t = subgroup_closure(s3.group, {generating_set(s3.group)[0]});
    CHECK_THROWS_AS(extension_from_central_subgroup(s3.group, t), ContractError);
}
