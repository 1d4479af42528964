#pragma once

// Data-driven verification suites: each suite is a JSON manifest of checks
// (operation + arguments + expected value + a short justification note);
// the runner evaluates every check through the library and assembles a
// pass/fail ledger. Suites are independent of each other and deterministic.

#include <string>
#include <vector>

#include <json.hpp>

#include "schurkit/aut_split.hpp"
#include "schurkit/clifford.hpp"
#include "schurkit/cohomology.hpp"
#include "schurkit/covers.hpp"
#include "schurkit/extension.hpp"
#include "schurkit/groupspec.hpp"
#include "schurkit/ktheory.hpp"
#include "schurkit/report.hpp"

namespace schurkit {

struct VerifyOptions {
    std::size_t cap = FiniteGroup::kDefaultElementCap;
    elem_t cochain_bound = kDefaultCochainBound;
    bool stretch = false;  // lifts the cochain bound for |G| > 60 jobs
    std::uint64_t seed = 1;
    std::uint32_t coset_cap = 200000;

    elem_t effective_bound() const { return stretch ? 4096 : cochain_bound; }
};

namespace detail {

inline std::string divisors_str(const AbelianStructure& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.divisors.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a.divisors[i]);
    }
    return s + "]";
}

inline AbelianStructure expect_divisors(const nlohmann::json& j) {
    std::vector<std::int64_t> d = j.get<std::vector<std::int64_t>>();
    return AbelianStructure(std::move(d));
}

inline std::int64_t factorial(unsigned n) {
    std::int64_t f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

// One manifest entry -> one CheckResult.
inline CheckResult run_check(const nlohmann::json& c, const VerifyOptions& opt) {
    CheckResult res;
    res.name = c.value("name", std::string("check"));
    res.note = c.value("note", std::string());
    Stopwatch sw;
    const std::string op = c.at("op").get<std::string>();
    auto group_of = [&](const char* key = "group") {
        return parse_group_spec(c.at(key).get<std::string>(), opt.cap, opt.coset_cap);
    };
    auto pass_eq = [&](auto want, auto got) {
        res.expected = std::to_string(want);
        res.got = std::to_string(got);
        res.pass = want == got;
    };
    if (op == "order") {
        pass_eq(c.at("expect").get<std::int64_t>(), static_cast<std::int64_t>(group_of().group.order()));
    } else if (op == "center_order") {
        pass_eq(c.at("expect").get<std::int64_t>(), static_cast<std::int64_t>(center(group_of().group).order()));
    } else if (op == "derived_order") {
        pass_eq(c.at("expect").get<std::int64_t>(),
                static_cast<std::int64_t>(derived_subgroup(group_of().group).order()));
    } else if (op == "class_count") {
        pass_eq(c.at("expect").get<std::int64_t>(),
                static_cast<std::int64_t>(conjugacy_classes(group_of().group).size()));
    } else if (op == "abelianization") {
        AbelianStructure want = expect_divisors(c.at("expect"));
        AbelianStructure got = abelianization(group_of().group);
        res.expected = divisors_str(want);
        res.got = divisors_str(got);
        res.pass = want == got;
    } else if (op == "abelianization_nontrivial") {
        AbelianStructure got = abelianization(group_of().group);
        res.expected = "nontrivial";
        res.got = divisors_str(got);
        res.pass = !got.is_trivial();
    } else if (op == "is_perfect") {
        pass_eq(c.at("expect").get<bool>(), is_perfect(group_of().group));
    } else if (op == "multiplier") {
        AbelianStructure want = expect_divisors(c.at("expect"));
        AbelianStructure got = schur_multiplier(group_of().group, opt.effective_bound());
        res.expected = divisors_str(want);
        res.got = divisors_str(got);
        res.pass = want == got;
    } else if (op == "h2_order") {
        std::uint64_t m = c.at("m").get<std::uint64_t>();
        auto h = second_cohomology(group_of().group, m, opt.effective_bound());
        pass_eq(c.at("expect").get<std::int64_t>(), h.structure.order());
    } else if (op == "uct_identity") {
        std::uint64_t m = c.at("m").get<std::uint64_t>();
        FiniteGroup g = group_of().group;
        auto h = second_cohomology(g, m, opt.effective_bound());
        AbelianStructure ab = abelianization(g);
        AbelianStructure ext = ext1(ab, static_cast<std::int64_t>(m));
        AbelianStructure mult = schur_multiplier(g, opt.effective_bound());
        std::int64_t lhs = h.structure.order();
        std::int64_t rhs = ext.order() * mult.hom_order(static_cast<std::int64_t>(m));
        res.expected = "|H2| = |Ext1| * |Hom(M, Z/m)|";
        res.got = std::to_string(lhs) + " vs " + std::to_string(ext.order()) + " * " +
                  std::to_string(mult.hom_order(static_cast<std::int64_t>(m)));
        res.pass = lhs == rhs;
    } else if (op == "uct_example") {
        // V = Z/2 x Z/2, m = 2: |H^2| = 8 splits as 4 * 2.
        FiniteGroup v = elementary_abelian(2, 2);
        auto h = second_cohomology(v, 2);
        std::int64_t eo = ext1(abelianization(v), 2).order();
        std::int64_t lo = lambda2(abelianization(v)).hom_order(2);
        res.expected = "8 = 4 * 2";
        res.got = std::to_string(h.structure.order()) + " = " + std::to_string(eo) + " * " + std::to_string(lo);
        res.pass = h.structure.order() == 8 && eo == 4 && lo == 2 && 8 == eo * lo;
    } else if (op == "hom_lambda2_order") {
        std::uint64_t m = c.at("m").get<std::uint64_t>();
        AbelianStructure ab = abelian_invariants(group_of().group);
        pass_eq(c.at("expect").get<std::int64_t>(), lambda2(ab).hom_order(static_cast<std::int64_t>(m)));
    } else if (op == "clifford_order") {
        unsigned n = c.at("n").get<unsigned>();
        bool even = c.at("family").get<std::string>() == "F";
        auto cg = even ? clifford_F(n) : clifford_E(n);
        pass_eq(c.at("expect").get<std::int64_t>(), static_cast<std::int64_t>(cg.group.order()));
    } else if (op == "clifford_derived") {
        unsigned n = c.at("n").get<unsigned>();
        auto cg = clifford_E(n);
        Subgroup d = derived_subgroup(cg.group);
        res.expected = "{+1, -1}";
        res.got = "order " + std::to_string(d.order());
        res.pass = d.order() == 2 && d.contains(cg.minus_one());
    } else if (op == "clifford_center_order") {
        unsigned n = c.at("n").get<unsigned>();
        bool even = c.at("family").get<std::string>() == "F";
        auto cg = even ? clifford_F(n) : clifford_E(n);
        pass_eq(c.at("expect").get<std::int64_t>(), static_cast<std::int64_t>(center(cg.group).order()));
    } else if (op == "clifford_nonsplit") {
        unsigned n = c.at("n").get<unsigned>();
        bool even = c.at("family").get<std::string>() == "F";
        auto cg = even ? clifford_F(n) : clifford_E(n);
        res.expected = "nonsplit";
        bool split = is_split(clifford_extension(cg)).split;
        res.got = split ? "split" : "nonsplit";
        res.pass = !split;
    } else if (op == "extraspecial") {
        unsigned n = c.at("n").get<unsigned>();
        bool even = c.at("family").get<std::string>() == "F";
        auto cg = even ? clifford_F(n) : clifford_E(n);
        ExtraspecialProfile pr = extraspecial_profile(cg.group);
        std::int64_t dim = c.at("expect").get<std::int64_t>();
        res.expected = "1 nonlinear class, degree " + std::to_string(dim);
        res.got = std::to_string(pr.nonlinear_count) + " nonlinear, degree " +
                  std::to_string(pr.forced_dimension);
        res.pass = pr.nonlinear_count == 1 && pr.forced_dimension == dim &&
                   pr.linear_count == static_cast<std::int64_t>(cg.group.order()) / 2;
    } else if (op == "cover_order") {
        unsigned n = c.at("n").get<unsigned>();
        auto cg = cover_sym(n, opt.coset_cap);
        std::int64_t want = c.contains("expect") ? c.at("expect").get<std::int64_t>() : 2 * factorial(n);
        pass_eq(want, static_cast<std::int64_t>(cg.group.order()));
    } else if (op == "cover_split") {
        unsigned n = c.at("n").get<unsigned>();
        bool alt = c.at("kind").get<std::string>() == "alt";
        auto cg = alt ? cover_alt(n, opt.coset_cap) : cover_sym(n, opt.coset_cap);
        bool want = c.at("expect").get<bool>();
        bool got = is_split(cover_extension(cg)).split;
        res.expected = want ? "split" : "nonsplit";
        res.got = got ? "split" : "nonsplit";
        res.pass = want == got;
    } else if (op == "cover_alt4_matches_sl23") {
        auto cg = cover_alt(4, opt.coset_cap);
        auto sl = sl_group(2, 3, opt.cap);
        std::string got = "order " + std::to_string(cg.group.order()) + ", ab " +
                          divisors_str(abelianization(cg.group)) + ", center " +
                          std::to_string(center(cg.group).order());
        res.expected = "order 24, ab [3], center 2";
        res.got = got;
        res.pass = cg.group.order() == sl.group().order() &&
                   abelianization(cg.group) == abelianization(sl.group()) &&
                   center(cg.group).order() == center(sl.group()).order();
    } else if (op == "heisenberg") {
        unsigned n = c.at("n").get<unsigned>();
        std::uint32_t q = c.at("q").get<std::uint32_t>();
        HeisenbergGroup h = heisenberg(n, q, opt.cap);
        std::uint64_t want_order = 1;
        for (unsigned i = 0; i < 2 * n + 1; ++i) want_order *= q;
        bool order_ok = h.ext.total.order() == want_order;
        bool center_ok = center(h.ext.total).order() == q;
        CommutatorPairing pr = commutator_pairing(h.ext);
        bool form_ok = true, alternating = true;
        std::vector<char> hits(h.ext.base.order(), 0);
        for (elem_t x = 0; x < h.ext.base.order(); ++x) {
            auto xv = h.base_coords(x);
            if (pr(x, x) != 0) alternating = false;
            for (elem_t y = 0; y < h.ext.base.order(); ++y) {
                auto yv = h.base_coords(y);
                std::uint32_t want = 0;
                for (unsigned i = 0; i < n; ++i) {
                    want = h.field.add(want, h.field.mul(xv[i], yv[n + i]));
                    want = h.field.sub(want, h.field.mul(yv[i], xv[n + i]));
                }
                if (pr(x, y) != want) form_ok = false;
                if (pr(x, y) != 0) hits[x] = 1;
            }
        }
        bool nondegenerate = true;
        for (elem_t x = 0; x < h.ext.base.order(); ++x) {
            if (x != h.ext.base.identity() && !hits[x]) nondegenerate = false;
        }
        res.expected = "order q^(2n+1), center F_q, standard symplectic pairing";
        res.got = std::string(order_ok ? "order ok" : "order BAD") + ", " +
                  (center_ok ? "center ok" : "center BAD") + ", " + (form_ok ? "form ok" : "form BAD") + ", " +
                  (alternating ? "alternating" : "NOT alternating") + ", " +
                  (nondegenerate ? "nondegenerate" : "DEGENERATE");
        res.pass = order_ok && center_ok && form_ok && alternating && nondegenerate;
    } else if (op == "dual_sequence") {
        unsigned n = c.at("n").get<unsigned>();
        std::uint32_t q = c.at("q").get<std::uint32_t>();
        DualSequenceReport r = dual_sequence_check(n, q, opt.cap);
        res.expected = "|PGL| = |SL/mu| * |mu|";
        res.got = std::to_string(r.pgl_order) + " = " + std::to_string(r.sl_order / r.mu_order) + " * " +
                  std::to_string(r.mu_order);
        res.pass = r.verified;
    } else if (op == "k2") {
        std::uint32_t q = c.at("q").get<std::uint32_t>();
        K2Result k = k2_finite_field(q);
        res.expected = "trivial";
        res.got = k.structure.is_trivial() ? "trivial" : divisors_str(k.structure);
        res.pass = k.structure.is_trivial();
    } else if (op == "k2_trivial_range") {
        std::uint32_t maxq = c.at("max_q").get<std::uint32_t>();
        std::vector<std::uint32_t> bad;
        for (std::uint32_t q = 2; q <= maxq; ++q) {
            std::uint64_t p;
            unsigned k;
            if (!as_prime_power(q, p, k)) continue;
            if (!k2_finite_field(q).structure.is_trivial()) bad.push_back(q);
        }
        res.expected = "trivial for every prime power <= " + std::to_string(maxq);
        res.got = bad.empty() ? "all trivial" : "nontrivial at q=" + std::to_string(bad[0]);
        res.pass = bad.empty();
    } else if (op == "symbols") {
        std::uint32_t q = c.at("q").get<std::uint32_t>();
        std::uint64_t m = c.value("m", 2);
        std::uint64_t seed = c.value("seed", opt.seed);
        SteinbergContext ctx{sl_group(3, q, opt.cap), {}, seed};
        ctx.ext = build_extension(ctx.sl.group(), m, Cocycle2::random_coboundary(ctx.sl.group(), m, seed));
        SymbolReport rep = symbol_identities_check(ctx);
        res.expected = "well-defined, bimultiplicative, skew, Steinberg relations, trivial";
        res.got = std::string(rep.vacuous ? "vacuous (only a = 1), " : "") +
                  (rep.all_pass() ? "identities ok" : "identity FAILED") + ", " +
                  (rep.all_trivial ? "all trivial" : "NONTRIVIAL symbol");
        res.pass = rep.all_pass() && rep.all_trivial;
    } else if (op == "aut_splitting") {
        AutSplitReport rep = aut_splitting_check();
        res.expected = "exhaustive decision, internally consistent";
        std::string evidence;
        if (rep.section_exists) {
            evidence = "; witness class coords ";
            for (auto b : *rep.witness_coords) evidence += std::to_string(b);
        } else {
            evidence = "; all " + std::to_string(rep.candidates.size()) + " candidates exhausted";
        }
        res.got = std::string(rep.consistent ? "consistent" : "INCONSISTENT") + "; section " +
                  (rep.section_exists ? "EXISTS" : "does not exist") + evidence;
        res.pass = rep.consistent;
    } else {
        throw ParseError("verify: unknown op '" + op + "'");
    }
    res.millis = sw.ms();
    return res;
}

}  // namespace detail

inline CommandReport run_suite(const std::string& suite_name, const nlohmann::json& manifest,
                               const VerifyOptions& opt) {
    Stopwatch sw;
    CommandReport rep;
    rep.command = "verify " + suite_name;
    rep.suite_mode = true;
    if (!manifest.is_object() || !manifest.contains("checks") || !manifest.at("checks").is_array()) {
        throw ParseError("verify: manifest must be an object with a \"checks\" array");
    }
    rep.data["suite"] = manifest.value("suite", suite_name);
    if (manifest.contains("description")) rep.data["description"] = manifest.at("description");
    for (const auto& c : manifest.at("checks")) rep.checks.push_back(detail::run_check(c, opt));
    rep.elapsed_ms = sw.ms();
    return rep;
}

inline const std::vector<std::string>& builtin_suite_names() {
    static const std::vector<std::string> names{"uct",       "clifford", "covers",  "heisenberg",
                                                "theorem15", "remark16", "k2",      "symbols",
                                                "aut-splitting"};
    return names;
}

}  // namespace schurkit
