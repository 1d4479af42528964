#include <doctest.h>

#include "schurkit/extension.hpp"
#include "schurkit/finite_field.hpp"
#include "schurkit/matrix_groups.hpp"

using namespace schurkit;

TEST_CASE("field construction: deterministic moduli") {
    FieldFq f2(2);
    CHECK(f2.q() == 2);
    CHECK(f2.degree() == 1);

    FieldFq f4(4);
    CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1, 1});  // x^2 + x + 1, the unique irreducible

    FieldFq f9(9);
    CHECK(f9.modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1, smallest low-degree-first
    // the stored generator has multiplicative order 8
    std::uint32_t x = f9.generator();
    int o = 1;
    while (x != 1) {
        x = f9.mul(x, f9.generator());
        ++o;
    }
    CHECK(o == 8);

    CHECK_THROWS_AS(FieldFq(12), ContractError);
    CHECK_THROWS_AS(FieldFq(1), ContractError);
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        FieldFq f(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (std::uint32_t c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("Frobenius is an automorphism for q <= 256") {
    for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u, 81u, 121u, 125u, 128u, 169u, 243u, 256u}) {
        FieldFq f(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
                CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
            }
        }
    }
}

TEST_CASE("SL_n orders match the classical formula") {
    for (auto [n, q] : std::vector<std::pair<unsigned, std::uint32_t>>{
             {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 7}, {2, 9}, {3, 2}, {3, 3}, {4, 2}}) {
        auto g = sl_group(n, q);  // the builder itself checks against sl_order
        CHECK(g.group().order() == sl_order(n, q));
    }
}

TEST_CASE("the small exceptional behaviors") {
    auto sl22 = sl_group(2, 2);
    CHECK(sl22.group().order() == 6);
    CHECK(abelianization(sl22.group()).divisors == std::vector<std::int64_t>{2});
    CHECK(derived_subgroup(sl22.group()).order() == 3);

    auto sl23 = sl_group(2, 3);
    CHECK(abelianization(sl23.group()).divisors == std::vector<std::int64_t>{3});

    auto sp42 = sp4_group(2);
    CHECK(sp42.group().order() == 720);
    CHECK(abelianization(sp42.group()).divisors == std::vector<std::int64_t>{2});

    auto su32 = su_group(3, 2);
    CHECK(su32.group().order() == 216);
    CHECK_FALSE(is_perfect(su32.group()));
    CHECK(su32.group().order() == su_order(3, 2));

    CHECK(is_perfect(sl_group(2, 4).group()));
    CHECK(is_perfect(sl_group(3, 2).group()));
}

TEST_CASE("SU_4(F_2) enumerates to the formula order") {
    auto su42 = su_group(4, 2);
    CHECK(su42.group().order() == su_order(4, 2));
    CHECK(su42.group().order() == 25920);
}

TEST_CASE("projective groups: orders against |GL|/(q-1) and |SL|/gcd") {
    CHECK(pgl_group(2, 3).group.order() == 24);
    CHECK(psl_group(2, 3).group.order() == 12);
    CHECK(pgl_group(2, 5).group.order() == 120);
    CHECK(psl_group(2, 5).group.order() == 60);
    CHECK(psl_group(3, 2).group.order() == 168);
    CHECK(psl_group(2, 4).group.order() == 60);
}

TEST_CASE("capacity and family guards") {
    CHECK_THROWS_AS(sl_group(4, 5), CapacityError);   // order too large
    CHECK_THROWS_AS(su_group(4, 3), CapacityError);   // order too large
    CHECK_THROWS_AS(sl_group(5, 2), ContractError);   // unsupported degree
    CHECK_THROWS_AS(gl_group(4, 2), ContractError);   // unsupported degree
    CHECK_THROWS_AS(heisenberg(4, 5), CapacityError); // 5^9 > cap
}

TEST_CASE("heisenberg: orders, centers, exponent, packaging") {
    auto h12 = heisenberg(1, 2);
    CHECK(h12.ext.total.order() == 8);
    CHECK(center(h12.ext.total).order() == 2);
    CHECK_FALSE(is_abelian(h12.ext.total));
    CHECK_FALSE(is_split(h12.ext).split);

    auto h13 = heisenberg(1, 3);
    CHECK(h13.ext.total.order() == 27);
    for (elem_t e = 0; e < 27; ++e) CHECK(element_order(h13.ext.total, e) <= 3);
    CHECK(center(h13.ext.total).order() == 3);

    auto h22 = heisenberg(2, 2);
    CHECK(h22.ext.total.order() == 32);
    CHECK(center(h22.ext.total).order() == 2);

    // q = 4: the kernel is the additive group of F_4, not cyclic
    auto h14 = heisenberg(1, 4);
    CHECK(h14.ext.total.order() == 64);
    CHECK_FALSE(h14.ext.kernel_cyclic);
    CHECK(center(h14.ext.total).order() == 4);
    CHECK_THROWS_AS(extract_cocycle(h14.ext), ContractError);
}

TEST_CASE("heisenberg tuple law matches explicit unipotent matrix products") {
    // Oracle: multiply the actual (n+2)x(n+2) matrices with free first row
    // and last column, exhaustively for the three small instances.
    for (auto [n, q] : std::vector<std::pair<unsigned, std::uint32_t>>{{1, 2}, {1, 3}, {2, 2}}) {
        HeisenbergGroup h = heisenberg(n, q);
        FieldFq f(q);
        const unsigned dim = n + 2;
        const std::uint32_t qn = [&] {
            std::uint32_t r = 1;
            for (unsigned i = 0; i < n; ++i) r *= q;
            return r;
        }();
        auto decode = [&](elem_t idx) {
            // (a, b, c): index = ((a || b) base-q digits) * q + c
            std::vector<std::uint32_t> av(n), bv(n);
            std::uint32_t cc = idx % q;
            elem_t t = idx / q;
            for (unsigned i = 0; i < n; ++i) {
                av[i] = t % q;
                t /= q;
            }
            for (unsigned i = 0; i < n; ++i) {
                bv[i] = t % q;
                t /= q;
            }
            return std::tuple<std::vector<std::uint32_t>, std::vector<std::uint32_t>, std::uint32_t>{av, bv, cc};
        };
        auto to_matrix = [&](elem_t idx) {
            auto [av, bv, cc] = decode(idx);
            std::vector<std::uint32_t> m(dim * dim, 0);
            for (unsigned i = 0; i < dim; ++i) m[i * dim + i] = 1;
            for (unsigned i = 0; i < n; ++i) m[0 * dim + (i + 1)] = av[i];
            for (unsigned i = 0; i < n; ++i) m[(i + 1) * dim + (dim - 1)] = bv[i];
            m[0 * dim + (dim - 1)] = cc;
            return m;
        };
        auto mat_mul_q = [&](const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y) {
            std::vector<std::uint32_t> r(dim * dim, 0);
            for (unsigned i = 0; i < dim; ++i) {
                for (unsigned j = 0; j < dim; ++j) {
                    std::uint32_t acc = 0;
                    for (unsigned k = 0; k < dim; ++k) acc = f.add(acc, f.mul(x[i * dim + k], y[k * dim + j]));
                    r[i * dim + j] = acc;
                }
            }
            return r;
        };
        const elem_t order = h.ext.total.order();
        REQUIRE(order == static_cast<elem_t>(qn) * qn * q);
        for (elem_t x = 0; x < order; ++x) {
            for (elem_t y = 0; y < order; ++y) {
                CHECK(to_matrix(h.ext.total.mul(x, y)) == mat_mul_q(to_matrix(x), to_matrix(y)));
            }
        }
    }
}

TEST_CASE("heisenberg commutator pairing is the standard symplectic form") {
    for (auto [n, q] : std::vector<std::pair<unsigned, std::uint32_t>>{{1, 2}, {1, 3}, {2, 2}, {1, 4}}) {
        HeisenbergGroup h = heisenberg(n, q);
        CommutatorPairing pr = commutator_pairing(h.ext);
        bool nondegenerate = true;
        for (elem_t x = 0; x < h.ext.base.order(); ++x) {
            auto xv = h.base_coords(x);
            CHECK(pr(x, x) == 0);
            bool hits = false;
            for (elem_t y = 0; y < h.ext.base.order(); ++y) {
                auto yv = h.base_coords(y);
                std::uint32_t want = 0;
                for (unsigned i = 0; i < n; ++i) {
                    want = h.field.add(want, h.field.mul(xv[i], yv[n + i]));
                    want = h.field.sub(want, h.field.mul(yv[i], xv[n + i]));
                }
                CHECK(pr(x, y) == want);
                hits = hits || pr(x, y) != 0;
            }
            if (x != h.ext.base.identity() && !hits) nondegenerate = false;
        }
        CHECK(nondegenerate);
    }
}

TEST_CASE("dual sequence order bookkeeping") {
    auto r23 = dual_sequence_check(2, 3);
    CHECK(r23.verified);
    CHECK(r23.sl_order == 24);
    CHECK(r23.mu_order == 2);
    CHECK(r23.pgl_order == 24);  // 24 = 12 * 2

    auto r22 = dual_sequence_check(2, 2);
    CHECK(r22.verified);
    CHECK(r22.mu_order == 1);  // characteristic 2: mu_2 trivial
    CHECK(r22.pgl_order == 6);

    auto r25 = dual_sequence_check(2, 5);
    CHECK(r25.verified);
    CHECK(r25.pgl_order == 120);
}
