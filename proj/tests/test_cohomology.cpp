#include <doctest.h>

#include "schurkit/cohomology.hpp"
#include "schurkit/group_builders.hpp"
#include "schurkit/intmatrix.hpp"
#include "schurkit/perm.hpp"
#include "schurkit/presentation.hpp"

using namespace schurkit;

namespace {

// Independent oracle: enumerate every normalized 2-cochain on a tiny group
// and count cocycles and coboundaries directly from the definitions.
struct CochainCensus {
    std::uint64_t cocycles = 0;
    std::uint64_t coboundaries = 0;
};

CochainCensus census(const FiniteGroup& g, std::uint64_t m) {
    const elem_t n = g.order();
    std::vector<std::pair<elem_t, elem_t>> pairs;
    for (elem_t a = 0; a < n; ++a) {
        for (elem_t b = 0; b < n; ++b) {
            if (a != g.identity() && b != g.identity()) pairs.emplace_back(a, b);
        }
    }
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) total *= m;
    CochainCensus out;
    std::vector<std::uint32_t> table(static_cast<std::size_t>(n) * n, 0);
    for (std::uint64_t v = 0; v < total; ++v) {
        std::uint64_t t = v;
        std::fill(table.begin(), table.end(), 0);
        for (const auto& [a, b] : pairs) {
            table[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint32_t>(t % m);
            t /= m;
        }
        bool cocycle = true;
        for (elem_t a = 0; a < n && cocycle; ++a) {
            for (elem_t b = 0; b < n && cocycle; ++b) {
                for (elem_t c = 0; c < n && cocycle; ++c) {
                    std::uint64_t lhs = table[static_cast<std::size_t>(a) * n + b] +
                                        table[static_cast<std::size_t>(g.mul(a, b)) * n + c];
                    std::uint64_t rhs = table[static_cast<std::size_t>(b) * n + c] +
                                        table[static_cast<std::size_t>(a) * n + g.mul(b, c)];
                    cocycle = lhs % m == rhs % m;
                }
            }
        }
        if (!cocycle) continue;
        ++out.cocycles;
        // Coboundary: search all normalized 1-cochains.
        std::uint64_t stotal = 1;
        for (elem_t i = 1; i < n; ++i) stotal *= m;
        bool cob = false;
        for (std::uint64_t sv = 0; sv < stotal && !cob; ++sv) {
            std::uint64_t st = sv;
            std::vector<std::uint32_t> s(n, 0);
            for (elem_t i = 0; i < n; ++i) {
                if (i == g.identity()) continue;
                s[i] = static_cast<std::uint32_t>(st % m);
                st /= m;
            }
            bool match = true;
            for (elem_t a = 0; a < n && match; ++a) {
                for (elem_t b = 0; b < n && match; ++b) {
                    std::uint64_t want = table[static_cast<std::size_t>(a) * n + b];
                    std::uint64_t got = (s[a] + s[b] + m - s[g.mul(a, b)] % m) % m;
                    match = want == got;
                }
            }
            cob = match;
        }
        if (cob) ++out.coboundaries;
    }
    return out;
}

}  // namespace

TEST_CASE("H2 for tiny groups agrees with the exhaustive cochain oracle") {
    // Z/2 with Z/2 coefficients: 2 classes (direct product and Z/4).
    {
        FiniteGroup g = cyclic_group(2);
        CochainCensus c = census(g, 2);
        auto h = second_cohomology(g, 2);
        CHECK(c.cocycles / c.coboundaries == 2);
        CHECK(h.structure.order() == 2);
    }
    // Z/3 with Z/2 coefficients: coprime orders, trivial.
    {
        FiniteGroup g = cyclic_group(3);
        CochainCensus c = census(g, 2);
        auto h = second_cohomology(g, 2);
        CHECK(c.cocycles == c.coboundaries);
        CHECK(h.structure.is_trivial());
    }
    // Z/2 x Z/2 with Z/2 coefficients: order 8.
    {
        FiniteGroup g = elementary_abelian(2, 2);
        CochainCensus c = census(g, 2);
        auto h = second_cohomology(g, 2);
        CHECK(c.cocycles / c.coboundaries == 8);
        CHECK(h.structure.order() == 8);
        CHECK(h.structure.divisors == (std::vector<std::int64_t>{2, 2, 2}));
    }
    // Z/2 with Z/4 coefficients.
    {
        FiniteGroup g = cyclic_group(2);
        CochainCensus c = census(g, 4);
        auto h = second_cohomology(g, 4);
        CHECK(c.cocycles / c.coboundaries == static_cast<std::uint64_t>(h.structure.order()));
        CHECK(h.structure.divisors == std::vector<std::int64_t>{2});
    }
}

TEST_CASE("H2 basis classes are independent non-coboundaries") {
    for (const FiniteGroup& g : {elementary_abelian(2, 2), cyclic_group(4),
                                 realize(parse_presentation("gens: r s; rels: r^4, s^2, (r s)^2")).group}) {
        for (std::uint64_t m : {2ull, 4ull}) {
            auto h = second_cohomology(g, m);
            REQUIRE(h.basis.size() == h.structure.divisors.size());
            for (std::size_t i = 0; i < h.basis.size(); ++i) {
                CHECK(h.basis[i].satisfies_cocycle_identity());
                CHECK(h.basis[i].is_normalized());
                CHECK_FALSE(is_coboundary(h.basis[i]).has_value());
                // the class has the declared order: divisor * class is a
                // coboundary, smaller multiples of a generator are not
                std::int64_t d = h.structure.divisors[i];
                const elem_t n = g.order();
                std::vector<std::uint32_t> scaled(static_cast<std::size_t>(n) * n);
                for (elem_t a = 0; a < n; ++a) {
                    for (elem_t b = 0; b < n; ++b) {
                        scaled[static_cast<std::size_t>(a) * n + b] =
                            static_cast<std::uint32_t>((h.basis[i](a, b) * static_cast<std::uint64_t>(d)) % m);
                    }
                }
                CHECK(is_coboundary(Cocycle2::from_values(g, m, scaled)).has_value());
            }
        }
    }
}

TEST_CASE("d2 o d1 = 0: coboundaries of random 1-cochains satisfy the cocycle identity") {
    SplitMix64 rng(77);
    std::vector<FiniteGroup> groups{cyclic_group(6), elementary_abelian(2, 3), symmetric_group(3).group,
                                    alternating_group(4).group};
    for (const auto& g : groups) {
        for (std::uint64_t m : {2ull, 3ull, 4ull, 6ull}) {
            for (int t = 0; t < 25; ++t) {
                Cocycle2 c = Cocycle2::random_coboundary(g, m, rng.next());
                CHECK(c.is_normalized());
                CHECK(c.satisfies_cocycle_identity());
                CHECK(is_coboundary(c).has_value());
            }
        }
    }
}

TEST_CASE("is_coboundary: pinned examples") {
    FiniteGroup z2 = cyclic_group(2);
    auto w = is_coboundary(Cocycle2::zero(z2, 2));
    REQUIRE(w.has_value());
    CHECK((*w)[0] == 0);
    CHECK((*w)[1] == 0);

    // the extension-of-Z/2-defining cocycle with beta(1,1) = 1 is not a
    // coboundary (it builds Z/4)
    CHECK_FALSE(is_coboundary(Cocycle2::from_values(z2, 2, {0, 0, 0, 1})).has_value());

    // a non-cocycle is rejected up front
    FiniteGroup z3 = cyclic_group(3);
    std::vector<std::uint32_t> junk(9, 0);
    junk[4] = 1;  // beta(1,1) = 1 alone violates the identity on Z/3
    CHECK_THROWS_AS(is_coboundary(Cocycle2::from_values(z3, 2, junk)), ContractError);
}

TEST_CASE("ext1: the gcd formula and the abelian-extension count oracle") {
    CHECK(ext1(AbelianStructure({2}), 2).divisors == std::vector<std::int64_t>{2});
    CHECK(ext1(AbelianStructure({}), 5).is_trivial());
    CHECK(ext1(AbelianStructure({2, 4}), 2).divisors == (std::vector<std::int64_t>{2, 2}));
    CHECK(ext1(AbelianStructure({6, 12}), 4).divisors == (std::vector<std::int64_t>{2, 4}));

    // Independent oracle for A = Z/2 x Z/4, m = 2: abelian extension classes
    // are symmetric normalized cocycles modulo coboundaries; sweep all
    // symmetric cocycle classes through the library's class enumeration is
    // avoided on purpose -- instead count via H^2 of the abelian group and
    // its alternating quotient: |Ext1| = |H^2| / |Hom(L^2 A, Z/2)|.
    FiniteGroup a = direct_product(cyclic_group(2), cyclic_group(4));
    auto h = second_cohomology(a, 2);
    AbelianStructure inv = abelian_invariants(a);
    std::int64_t hom_l2 = lambda2(inv).hom_order(2);
    CHECK(h.structure.order() / hom_l2 == 4);  // = |Z/2 x Z/2|
    CHECK(ext1(inv, 2).order() == 4);
}

TEST_CASE("lambda2: chain formula against the brute-force tensor quotient") {
    CHECK(lambda2(AbelianStructure({2, 2})).divisors == std::vector<std::int64_t>{2});
    CHECK(lambda2(AbelianStructure({7})).is_trivial());
    CHECK(lambda2(AbelianStructure({2, 2, 2})).divisors == (std::vector<std::int64_t>{2, 2, 2}));

    // Brute force: A tensor A / <g tensor g> for every abelian group of
    // order <= 64, via an integer lattice presentation.
    std::vector<std::vector<std::int64_t>> shapes = {
        {2},    {3},       {4},    {2, 2},    {6},    {8},        {2, 4}, {2, 2, 2}, {9},      {3, 3},
        {12},   {2, 6},    {16},   {2, 8},    {4, 4}, {2, 2, 4},  {2, 2, 2, 2},     {18},     {3, 6},
        {2, 3, 6},         {25},   {5, 5},    {27},   {3, 9},     {3, 3, 3},        {2, 4, 8}, {36},
        {2, 2, 3, 3},      {2, 2, 16},        {4, 12}};
    for (const auto& ds : shapes) {
        AbelianStructure a = AbelianStructure::from_cyclic_orders(ds);
        if (a.order() > 64) continue;
        const auto& d = a.divisors;
        const std::size_t k = d.size();
        // Tensor square: generators e_i (x) e_j with order gcd(d_i, d_j);
        // relations from g (x) g for every g in A.
        const std::size_t dim = k * k;
        std::vector<std::vector<std::int64_t>> rels;
        std::vector<std::int64_t> g(k, 0);
        std::int64_t total = a.order();
        for (std::int64_t v = 0; v < total; ++v) {
            std::int64_t t = v;
            for (std::size_t i = 0; i < k; ++i) {
                g[i] = t % d[i];
                t /= d[i];
            }
            std::vector<std::int64_t> rel(dim, 0);
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j) rel[i * k + j] = g[i] * g[j];
            }
            rels.push_back(std::move(rel));
        }
        IntMatrix m(dim, dim + rels.size());
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                m.at(i * k + j, i * k + j) = BigInt(std::gcd(d[i], d[j]));
            }
        }
        for (std::size_t r = 0; r < rels.size(); ++r) {
            for (std::size_t x = 0; x < dim; ++x) m.at(x, dim + r) = BigInt(rels[r][x]);
        }
        auto snf = smith_normal_form(m);
        std::vector<std::int64_t> quot;
        for (const auto& dd : snf.diagonal()) {
            std::int64_t v = dd.to_int64();
            if (v > 1) quot.push_back(v);
        }
        CHECK(AbelianStructure::from_cyclic_orders(quot) == lambda2(a));
    }
}

TEST_CASE("schur multipliers: pinned examples") {
    CHECK(schur_multiplier(alternating_group(4).group).divisors == std::vector<std::int64_t>{2});
    CHECK(schur_multiplier(elementary_abelian(2, 2)).divisors == std::vector<std::int64_t>{2});
    CHECK(schur_multiplier(symmetric_group(3).group).is_trivial());
    for (std::uint64_t n : {2ull, 5ull, 12ull, 30ull}) CHECK(schur_multiplier(cyclic_group(n)).is_trivial());
    CHECK(schur_multiplier(elementary_abelian(2, 3)).divisors == (std::vector<std::int64_t>{2, 2, 2}));
    // the quaternion group has trivial multiplier, the dihedral group of
    // order 8 has Z/2
    CHECK(schur_multiplier(realize(parse_presentation("gens: a b; rels: a^4, a^2 b^-2, b^-1 a b a")).group)
              .is_trivial());
    CHECK(schur_multiplier(realize(parse_presentation("gens: r s; rels: r^4, s^2, (r s)^2")).group).divisors ==
          std::vector<std::int64_t>{2});
}

TEST_CASE("UCT cardinality identity across groups and moduli") {
    std::vector<FiniteGroup> groups{cyclic_group(4), elementary_abelian(2, 2), elementary_abelian(2, 3),
                                    symmetric_group(3).group,
                                    realize(parse_presentation("gens: r s; rels: r^4, s^2, (r s)^2")).group,
                                    realize(parse_presentation("gens: a b; rels: a^4, a^2 b^-2, b^-1 a b a")).group,
                                    alternating_group(4).group};
    for (const auto& g : groups) {
        AbelianStructure ab = abelianization(g);
        AbelianStructure mult = schur_multiplier(g);
        for (std::uint64_t m : {2ull, 3ull, 4ull}) {
            auto h = second_cohomology(g, m);
            CHECK(h.structure.order() ==
                  ext1(ab, static_cast<std::int64_t>(m)).order() * mult.hom_order(static_cast<std::int64_t>(m)));
        }
    }
}

TEST_CASE("abelian groups: |H2| / |Ext1| = |Hom(L^2 G, Z/m)|") {
    std::vector<FiniteGroup> groups{elementary_abelian(2, 2), cyclic_group(6),
                                    direct_product(cyclic_group(2), cyclic_group(4)),
                                    elementary_abelian(3, 2)};
    for (const auto& g : groups) {
        AbelianStructure inv = abelian_invariants(g);
        for (std::uint64_t m : {2ull, 3ull, 4ull, 6ull}) {
            auto h = second_cohomology(g, m);
            std::int64_t ext = ext1(inv, static_cast<std::int64_t>(m)).order();
            CHECK(h.structure.order() % ext == 0);
            CHECK(h.structure.order() / ext == lambda2(inv).hom_order(static_cast<std::int64_t>(m)));
        }
    }
}

TEST_CASE("h2_order_log agrees with the structure computation") {
    std::vector<FiniteGroup> groups{symmetric_group(3).group, alternating_group(4).group, cyclic_group(8),
                                    elementary_abelian(2, 3)};
    for (const auto& g : groups) {
        AbelianStructure ab = abelianization(g);
        for (const auto& pp : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 2}, {3, 1}}) {
            auto h = second_cohomology(g, PkRing::make(pp.first, pp.second).q);
            std::uint64_t lg = h2_order_log(g, ab, pp.first, pp.second);
            std::int64_t expect = 1;
            for (std::uint64_t i = 0; i < lg; ++i) expect *= static_cast<std::int64_t>(pp.first);
            CHECK(h.structure.order() == expect);
        }
    }
}

TEST_CASE("cochain bound raises capacity errors naming the bound") {
    auto big = permutation_group({parse_perm("(1 2 3 4 5 6 7)"), parse_perm("(1 2)")});  // S7
    CHECK_THROWS_AS(second_cohomology(big.group, 2), CapacityError);
    try {
        second_cohomology(big.group, 2);
    } catch (const CapacityError& e) {
        CHECK(std::string(e.what()).find("60") != std::string::npos);
    }
    CHECK_THROWS_AS(schur_multiplier(big.group), CapacityError);
}
