#pragma once

// The schurkit command line: group construction grammar, invariant queries,
// cohomology computations, extension tooling, K_2 / symbol sweeps, and the
// named verification suites. run() is the testable entry point; exit codes
// are 0 (success / all checks pass), 1 (computational failure or a failed
// check), 2 (usage errors).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schurkit/aut_split.hpp"
#include "schurkit/cohomology.hpp"
#include "schurkit/extension.hpp"
#include "schurkit/group_io.hpp"
#include "schurkit/groupspec.hpp"
#include "schurkit/ktheory.hpp"
#include "schurkit/report.hpp"
#include "schurkit/verify.hpp"

#ifndef SCHURKIT_DEFAULT_SUITES_DIR
#define SCHURKIT_DEFAULT_SUITES_DIR "suites"
#endif

namespace schurkit {
namespace cli {

struct Options {
    std::string format = "text";
    std::string suites_dir;
    VerifyOptions vo;
};

namespace detail {

inline void emit(const CommandReport& rep, const Options& opt, std::ostream& out) {
    if (opt.format == "json") {
        out << rep.to_json().dump(2) << "\n";
    } else {
        out << rep.to_text();
    }
}

inline std::string resolve_suites_dir(const Options& opt) {
    if (!opt.suites_dir.empty()) return opt.suites_dir;
    if (const char* env = std::getenv("SCHURKIT_SUITES_DIR")) return env;
    return SCHURKIT_DEFAULT_SUITES_DIR;
}

inline Cocycle2 cocycle_from_source(const std::string& src, const FiniteGroup& g, std::uint64_t m,
                                    std::size_t cap, std::uint32_t coset_cap) {
    if (src == "zero") return Cocycle2::zero(g, m);
    const std::string rc = "random-coboundary:";
    if (src.rfind(rc, 0) == 0) {
        std::uint64_t seed = std::strtoull(src.c_str() + rc.size(), nullptr, 10);
        return Cocycle2::random_coboundary(g, m, seed);
    }
    std::string path = src.rfind("file:", 0) == 0 ? src.substr(5) : src;
    nlohmann::json j = read_json_file(path);
    if (j.contains("group") && j.at("group").is_string()) {
        GroupSpecResult ref = parse_group_spec(j.at("group").get<std::string>(), cap, coset_cap);
        if (ref.group.order() != g.order()) {
            throw ParseError("cocycle file: group reference order does not match the base group");
        }
    }
    return cocycle_from_json(j, g);
}

inline nlohmann::json structure_json(const AbelianStructure& a) {
    return nlohmann::json{{"divisors", a.divisors}, {"order", a.order()}, {"pretty", a.to_string()}};
}

inline CommandReport cmd_info(const std::string& spec, const Options& opt) {
    Stopwatch sw;
    CommandReport rep;
    rep.command = "info " + spec;
    GroupSpecResult r = parse_group_spec(spec, opt.vo.cap, opt.vo.coset_cap);
    const FiniteGroup& g = r.group;
    rep.data["order"] = g.order();
    rep.data["identity"] = g.identity();
    rep.data["is_abelian"] = is_abelian(g);
    rep.data["is_perfect"] = is_perfect(g);
    rep.data["center_order"] = center(g).order();
    rep.data["derived_order"] = derived_subgroup(g).order();
    rep.data["abelianization"] = structure_json(abelianization(g));
    auto classes = conjugacy_classes(g);
    rep.data["class_count"] = classes.size();
    if (classes.size() <= 256) {
        std::vector<std::size_t> sizes;
        for (const auto& cl : classes) sizes.push_back(cl.size());
        rep.data["class_sizes"] = sizes;
    }
    if (r.extension) {
        rep.data["extension"] = nlohmann::json{{"base_order", r.extension->base.order()},
                                               {"kernel_order", r.extension->kernel.order()},
                                               {"kernel_cyclic", r.extension->kernel_cyclic}};
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

inline CommandReport cmd_h2(const std::string& spec, std::uint64_t m, const std::string& basis_out,
                            const Options& opt) {
    Stopwatch sw;
    CommandReport rep;
    rep.command = "h2 " + spec + " " + std::to_string(m);
    GroupSpecResult r = parse_group_spec(spec, opt.vo.cap, opt.vo.coset_cap);
    CohomologyResult h = second_cohomology(r.group, m, opt.vo.effective_bound());
    rep.data["structure"] = structure_json(h.structure);
    rep.data["basis_count"] = h.basis.size();
    if (!basis_out.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& b : h.basis) arr.push_back(cocycle_to_json(b, spec));
        std::ofstream f(basis_out);
        if (!f) throw ParseError("h2: cannot write " + basis_out);
        f << arr.dump(2) << "\n";
        rep.data["basis_file"] = basis_out;
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

inline CommandReport cmd_multiplier(const std::string& spec, const Options& opt) {
    Stopwatch sw;
    CommandReport rep;
    rep.command = "multiplier " + spec;
    GroupSpecResult r = parse_group_spec(spec, opt.vo.cap, opt.vo.coset_cap);
    rep.data["multiplier"] = structure_json(schur_multiplier(r.group, opt.vo.effective_bound()));
    rep.elapsed_ms = sw.ms();
    return rep;
}

struct ExtensionArgs {
    std::string base;
    std::uint64_t m = 2;
    std::string cocycle = "zero";
    std::string builtin;
    std::string out;
};

inline CentralExtension make_extension(const ExtensionArgs& a, const Options& opt, std::string& what) {
    if (!a.builtin.empty()) {
        GroupSpecResult r = parse_group_spec(a.builtin, opt.vo.cap, opt.vo.coset_cap);
        if (!r.extension) {
            throw ParseError("extension: spec '" + a.builtin +
                             "' carries no built-in extension (use heis/cover_*/clifford_*)");
        }
        what = a.builtin;
        return *r.extension;
    }
    if (a.base.empty()) throw ParseError("extension: need --base <spec> (or --builtin <spec>)");
    GroupSpecResult r = parse_group_spec(a.base, opt.vo.cap, opt.vo.coset_cap);
    Cocycle2 beta = cocycle_from_source(a.cocycle, r.group, a.m, opt.vo.cap, opt.vo.coset_cap);
    what = a.base + " by Z/" + std::to_string(a.m) + " via " + a.cocycle;
    return build_extension(r.group, a.m, beta);
}

inline CommandReport cmd_extension_build(const ExtensionArgs& a, const Options& opt) {
    Stopwatch sw;
    CommandReport rep;
    std::string what;
    CentralExtension x = make_extension(a, opt, what);
    rep.command = "extension build " + what;
    rep.data["total_order"] = x.total.order();
    rep.data["base_order"] = x.base.order();
    rep.data["kernel_order"] = x.kernel.order();
    rep.data["center_order"] = center(x.total).order();
    rep.data["is_abelian"] = is_abelian(x.total);
    rep.data["abelianization"] = structure_json(abelianization(x.total));
    if (!a.out.empty()) {
        std::ofstream f(a.out);
        if (!f) throw ParseError("extension build: cannot write " + a.out);
        f << group_to_json(x.total).dump() << "\n";
        rep.data["table_file"] = a.out;
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

inline CommandReport cmd_extension_split(const ExtensionArgs& a, const Options& opt) {
    Stopwatch sw;
    CommandReport rep;
    std::string what;
    CentralExtension x = make_extension(a, opt, what);
    rep.command = "extension split " + what;
    SplitResult s = is_split(x);
    rep.data["split"] = s.split;
    rep.data["complement_found"] = s.complement.has_value();
    if (s.complement) rep.data["complement_order"] = s.complement->size();
    rep.data["coboundary_witness"] = s.witness.has_value();
    rep.elapsed_ms = sw.ms();
    return rep;
}

inline CommandReport cmd_extension_pairing(const ExtensionArgs& a, const Options& opt) {
    Stopwatch sw;
    CommandReport rep;
    std::string what;
    CentralExtension x = make_extension(a, opt, what);
    rep.command = "extension pairing " + what;
    CommutatorPairing pr = commutator_pairing(x);
    const elem_t n = x.base.order();
    bool alternating = true, bilinear = true;
    for (elem_t g = 0; g < n; ++g) {
        if (pr(g, g) != 0) alternating = false;
    }
    if (static_cast<std::uint64_t>(n) * n * n <= 1u << 21) {
        for (elem_t g1 = 0; g1 < n && bilinear; ++g1) {
            for (elem_t g2 = 0; g2 < n && bilinear; ++g2) {
                for (elem_t h = 0; h < n; ++h) {
                    if (pr(x.base.mul(g1, g2), h) != x.kernel.mul(pr(g1, h), pr(g2, h))) {
                        bilinear = false;
                        break;
                    }
                }
            }
        }
    } else {
        SplitMix64 rng(opt.vo.seed);
        for (int t = 0; t < 20000 && bilinear; ++t) {
            elem_t g1 = static_cast<elem_t>(rng.below(n));
            elem_t g2 = static_cast<elem_t>(rng.below(n));
            elem_t h = static_cast<elem_t>(rng.below(n));
            if (pr(x.base.mul(g1, g2), h) != x.kernel.mul(pr(g1, h), pr(g2, h))) bilinear = false;
        }
    }
    bool zero = pr.is_zero();
    bool nondegenerate = true;
    for (elem_t g = 0; g < n; ++g) {
        if (g == x.base.identity()) continue;
        bool hit = false;
        for (elem_t h = 0; h < n; ++h) hit = hit || pr(g, h) != 0;
        if (!hit) nondegenerate = false;
    }
    rep.data["alternating"] = alternating;
    rep.data["bilinear"] = bilinear;
    rep.data["zero"] = zero;
    rep.data["nondegenerate"] = nondegenerate;
    rep.data["abelian_total"] = is_abelian(x.total);
    if (n <= 16) {
        nlohmann::json rows = nlohmann::json::array();
        for (elem_t g = 0; g < n; ++g) {
            nlohmann::json row = nlohmann::json::array();
            for (elem_t h = 0; h < n; ++h) row.push_back(pr(g, h));
            rows.push_back(std::move(row));
        }
        rep.data["table"] = std::move(rows);
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

inline CommandReport cmd_k2(std::uint32_t q, const Options&) {
    Stopwatch sw;
    CommandReport rep;
    rep.command = "k2 " + std::to_string(q);
    K2Result k = k2_finite_field(q);
    rep.data["q"] = q;
    rep.data["structure"] = structure_json(k.structure);
    rep.data["trivial"] = k.structure.is_trivial();
    rep.elapsed_ms = sw.ms();
    return rep;
}

inline CommandReport cmd_symbols(const std::string& spec, std::uint64_t m, const std::string& cocycle,
                                 const Options& opt) {
    Stopwatch sw;
    CommandReport rep;
    rep.suite_mode = true;
    rep.command = "symbols --group " + spec + " --m " + std::to_string(m) + " --cocycle " + cocycle;
    GroupSpecResult r = parse_group_spec(spec, opt.vo.cap, opt.vo.coset_cap);
    if (!r.matrix || r.matrix->n < 3) {
        throw ParseError("symbols: --group must be sl(n,q) with n >= 3");
    }
    SteinbergContext ctx{*r.matrix, {}, opt.vo.seed};
    ctx.ext = build_extension(r.group, m, cocycle_from_source(cocycle, r.group, m, opt.vo.cap, opt.vo.coset_cap));
    SymbolReport s = symbol_identities_check(ctx);
    rep.data["q"] = s.q;
    rep.data["vacuous"] = s.vacuous;
    rep.data["pairs"] = s.pairs;
    auto check = [&rep](const std::string& name, bool pass, const std::string& note) {
        rep.checks.push_back(CheckResult{name, pass, "holds", pass ? "holds" : "fails", 0, note});
    };
    check("lift-independent", s.lift_independent, "commutator of lifts of commuting coroot images");
    check("bimultiplicative", s.bimultiplicative, "{a, b1 b2} = {a,b1}{a,b2} in both slots");
    check("skew", s.skew, "{a,b}{b,a} = 1");
    check("a,-a", s.a_minus_a, "{a,-a} = 1");
    check("a,1-a", s.a_one_minus_a, "{a,1-a} = 1 on " + std::to_string(s.steinberg_pairs) + " pairs");
    check("coroot-swap", s.coroot_swap_agrees, "swapped coroot pair yields the same symbols");
    check("all-trivial", s.all_trivial, "forced by triviality of K2 for this field");
    rep.elapsed_ms = sw.ms();
    return rep;
}

inline CommandReport cmd_verify(const std::string& suite, const Options& opt) {
    std::string path = suite;
    if (suite.find('/') == std::string::npos && suite.find(".json") == std::string::npos) {
        path = resolve_suites_dir(opt) + "/" + suite + ".json";
    }
    nlohmann::json manifest = read_json_file(path);
    return run_suite(suite, manifest, opt.vo);
}

}  // namespace detail

// Entry point shared by the binary and the tests.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"schurkit: central extensions, second cohomology and Schur multipliers of finite groups"};
    app.set_help_all_flag("--help-all");
    app.add_option("--format", opt.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cap", opt.vo.cap, "Element cap for group enumeration (default 1000000)");
    app.add_option("--cochain-bound", opt.vo.cochain_bound, "Group-order bound for cochain jobs (default 60)");
    app.add_option("--coset-cap", opt.vo.coset_cap, "Coset cap for enumerations (default 200000)");
    app.add_flag("--stretch", opt.vo.stretch, "Allow cochain jobs with |G| > 60");
    app.add_option("--seed", opt.vo.seed, "Seed for randomized sweeps (default 1)");
    app.add_option("--suites-dir", opt.suites_dir, "Directory holding the verification suite manifests");

    std::string spec, basis_out, cocycle = "zero", suite;
    std::uint64_t m = 2;
    std::uint32_t q = 2;
    detail::ExtensionArgs ext;

    app.fallthrough();
    CLI::App* info = app.add_subcommand("info", "Order, center, abelianization and classes of a group");
    info->add_option("groupspec", spec, "Group spec, e.g. sl(2,3) or clifford_E(4)")->required();

    CLI::App* h2 = app.add_subcommand("h2", "H^2(G, Z/m) with a basis of representative cocycles");
    h2->add_option("groupspec", spec)->required();
    h2->add_option("m", m, "Coefficient modulus")->required();
    h2->add_option("--basis-out", basis_out, "Write basis cocycles to this JSON file");

    CLI::App* mult = app.add_subcommand("multiplier", "Schur multiplier H_2(G, Z)");
    mult->add_option("groupspec", spec)->required();

    CLI::App* extension = app.add_subcommand("extension", "Build and examine central extensions");
    extension->require_subcommand(1);
    for (const char* name : {"build", "split", "pairing"}) {
        CLI::App* sub = extension->add_subcommand(
            name, name == std::string("build")   ? "Construct the extension group from a cocycle"
                  : name == std::string("split") ? "Decide splitting (coboundary route + complement search)"
                                                 : "Commutator pairing over an abelian base");
        sub->add_option("--base", ext.base, "Base group spec");
        sub->add_option("--m", ext.m, "Kernel order Z/m (default 2)");
        sub->add_option("--cocycle", ext.cocycle, "zero | random-coboundary:<seed> | <file.json>");
        sub->add_option("--builtin", ext.builtin, "Use the natural extension of heis/cover_*/clifford_* specs");
        if (name == std::string("build")) sub->add_option("--out", ext.out, "Write the total group table JSON");
    }

    CLI::App* k2cmd = app.add_subcommand("k2", "K_2 of a finite field by brute force");
    k2cmd->add_option("q", q, "Field size (prime power <= 1024)")->required();

    CLI::App* symbols = app.add_subcommand("symbols", "Symbol identities in a central extension of SL_n");
    symbols->add_option("--group", spec, "sl(n,q) with n >= 3")->required();
    symbols->add_option("--m", m, "Kernel order (default 2)");
    symbols->add_option("--cocycle", cocycle, "zero | random-coboundary:<seed> | <file.json>");

    CLI::App* verify = app.add_subcommand("verify", "Run a named verification suite");
    std::string suite_list;
    for (const auto& s : builtin_suite_names()) suite_list += (suite_list.empty() ? "" : ", ") + s;
    verify->add_option("suite", suite, "One of: " + suite_list + " (or a manifest path)")->required();

    std::vector<std::string> argv = args;
    try {
        std::vector<const char*> cargv;
        cargv.push_back("schurkit");
        for (const auto& a : argv) cargv.push_back(a.c_str());
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        CommandReport rep;
        if (*info) {
            rep = detail::cmd_info(spec, opt);
        } else if (*h2) {
            rep = detail::cmd_h2(spec, m, basis_out, opt);
        } else if (*mult) {
            rep = detail::cmd_multiplier(spec, opt);
        } else if (*extension) {
            if (*extension->get_subcommand("build")) {
                rep = detail::cmd_extension_build(ext, opt);
            } else if (*extension->get_subcommand("split")) {
                rep = detail::cmd_extension_split(ext, opt);
            } else {
                rep = detail::cmd_extension_pairing(ext, opt);
            }
        } else if (*k2cmd) {
            rep = detail::cmd_k2(q, opt);
        } else if (*symbols) {
            rep = detail::cmd_symbols(spec, m, cocycle, opt);
        } else if (*verify) {
            rep = detail::cmd_verify(suite, opt);
        } else {
            out << app.help();
            return 2;
        }
        detail::emit(rep, opt, out);
        return rep.ok() ? 0 : 1;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return 1;
    } catch (const ContractError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const OverflowError& e) {
        err << "overflow: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cli
}  // namespace schurkit
