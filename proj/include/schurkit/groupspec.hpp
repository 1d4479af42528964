#pragma once

// The group-spec grammar shared by the CLI and the verification suites:
//
//   sl(n,q) gl(n,q) sp(4,q) su(3,q) su(4,q) pgl(n,q) psl(n,q) heis(n,q)
//   cyclic(n) elementary(p,k) perm("(1 2 3)(4 5)", ...) table(path)
//   cover_sym(n) cover_alt(n) clifford_E(n) clifford_F(n)
//   fp("gens: ...; rels: ...")
//
// Specs that are naturally central extensions (heis, cover_*, clifford_*)
// carry their extension packaging; the matrix families keep their matrix
// context for the symbol calculus.

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "schurkit/clifford.hpp"
#include "schurkit/covers.hpp"
#include "schurkit/extension.hpp"
#include "schurkit/finite_group.hpp"
#include "schurkit/group_builders.hpp"
#include "schurkit/group_io.hpp"
#include "schurkit/matrix_groups.hpp"
#include "schurkit/perm.hpp"
#include "schurkit/presentation.hpp"

namespace schurkit {

struct GroupSpecResult {
    std::string spec;
    FiniteGroup group;
    std::optional<CentralExtension> extension;   // natural packaging, when one exists
    std::shared_ptr<MatrixGroup> matrix;         // for sl/gl/sp/su
    std::shared_ptr<HeisenbergGroup> heis;       // for heis
};

namespace detail {

struct SpecArgs {
    std::string name;
    std::vector<std::string> args;  // numbers or unquoted/quoted strings
};

inline SpecArgs parse_spec_syntax(const std::string& s) {
    SpecArgs out;
    std::size_t i = 0;
    auto ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    ws();
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
        out.name.push_back(s[i++]);
    }
    if (out.name.empty()) throw ParseError("group spec: expected a family name");
    ws();
    if (i >= s.size()) return out;  // bare name
    if (s[i] != '(') throw ParseError("group spec: expected '(' after " + out.name);
    ++i;
    for (;;) {
        ws();
        if (i >= s.size()) throw ParseError("group spec: unterminated argument list");
        if (s[i] == ')') {
            ++i;
            break;
        }
        if (s[i] == '"') {
            ++i;
            std::string a;
            while (i < s.size() && s[i] != '"') a.push_back(s[i++]);
            if (i >= s.size()) throw ParseError("group spec: unterminated string");
            ++i;
            out.args.push_back(std::move(a));
        } else {
            std::string a;
            int depth = 0;
            while (i < s.size() && (depth > 0 || (s[i] != ',' && s[i] != ')'))) {
                if (s[i] == '(') ++depth;
                if (s[i] == ')') --depth;
                a.push_back(s[i++]);
            }
            while (!a.empty() && std::isspace(static_cast<unsigned char>(a.back()))) a.pop_back();
            out.args.push_back(std::move(a));
        }
        ws();
        if (i < s.size() && s[i] == ',') ++i;
    }
    ws();
    if (i != s.size()) throw ParseError("group spec: trailing characters after ')'");
    return out;
}

inline std::uint64_t spec_num(const SpecArgs& a, std::size_t idx, const char* what) {
    if (idx >= a.args.size()) throw ParseError(std::string("group spec: missing argument: ") + what);
    const std::string& s = a.args[idx];
    if (s.empty()) throw ParseError(std::string("group spec: empty argument: ") + what);
    std::uint64_t v = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw ParseError("group spec: expected a number for " + std::string(what) + ", got '" + s + "'");
        }
        v = v * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    return v;
}

}  // namespace detail

inline GroupSpecResult parse_group_spec(const std::string& spec,
                                        std::size_t cap = FiniteGroup::kDefaultElementCap,
                                        std::uint32_t coset_cap = 200000) {
    detail::SpecArgs a = detail::parse_spec_syntax(spec);
    GroupSpecResult r;
    r.spec = spec;
    auto need = [&](std::size_t n) {
        if (a.args.size() != n) {
            throw ParseError("group spec: " + a.name + " takes " + std::to_string(n) + " argument(s)");
        }
    };
    if (a.name == "sl" || a.name == "gl" || a.name == "sp" || a.name == "su") {
        need(2);
        unsigned n = static_cast<unsigned>(detail::spec_num(a, 0, "degree"));
        std::uint32_t q = static_cast<std::uint32_t>(detail::spec_num(a, 1, "field size"));
        MatrixGroup mg = a.name == "sl"   ? sl_group(n, q, cap)
                         : a.name == "gl" ? gl_group(n, q, cap)
                         : a.name == "sp" ? (n == 4 ? sp4_group(q, cap)
                                                    : throw ParseError("group spec: only sp(4,q) is supported"))
                                          : su_group(n, q, cap);
        r.matrix = std::make_shared<MatrixGroup>(std::move(mg));
        r.group = r.matrix->group();
    } else if (a.name == "pgl" || a.name == "psl") {
        need(2);
        unsigned n = static_cast<unsigned>(detail::spec_num(a, 0, "degree"));
        std::uint32_t q = static_cast<std::uint32_t>(detail::spec_num(a, 1, "field size"));
        r.group = (a.name == "pgl" ? pgl_group(n, q, cap) : psl_group(n, q, cap)).group;
    } else if (a.name == "heis") {
        need(2);
        unsigned n = static_cast<unsigned>(detail::spec_num(a, 0, "n"));
        std::uint32_t q = static_cast<std::uint32_t>(detail::spec_num(a, 1, "field size"));
        r.heis = std::make_shared<HeisenbergGroup>(heisenberg(n, q, cap));
        r.group = r.heis->ext.total;
        r.extension = r.heis->ext;
    } else if (a.name == "cyclic") {
        need(1);
        r.group = cyclic_group(detail::spec_num(a, 0, "order"));
    } else if (a.name == "elementary") {
        need(2);
        r.group = elementary_abelian(detail::spec_num(a, 0, "prime"),
                                     static_cast<unsigned>(detail::spec_num(a, 1, "rank")));
    } else if (a.name == "perm") {
        if (a.args.empty()) throw ParseError("group spec: perm needs at least one permutation");
        std::vector<Perm> gens;
        for (const auto& s : a.args) gens.push_back(parse_perm(s));
        r.group = permutation_group(std::move(gens), cap).group;
    } else if (a.name == "table") {
        need(1);
        r.group = load_group_table(a.args[0]);
    } else if (a.name == "cover_sym" || a.name == "cover_alt") {
        need(1);
        unsigned n = static_cast<unsigned>(detail::spec_num(a, 0, "n"));
        CoverGroup c = a.name == "cover_sym" ? cover_sym(n, coset_cap) : cover_alt(n, coset_cap);
        r.group = c.group;
        r.extension = cover_extension(c);
    } else if (a.name == "clifford_E" || a.name == "clifford_F") {
        need(1);
        unsigned n = static_cast<unsigned>(detail::spec_num(a, 0, "n"));
        CliffordGroup c = a.name == "clifford_E" ? clifford_E(n) : clifford_F(n);
        r.group = c.group;
        r.extension = clifford_extension(c);
    } else if (a.name == "fp") {
        need(1);
        r.group = realize(parse_presentation(a.args[0]), coset_cap).group;
    } else {
        throw ParseError("group spec: unknown family '" + a.name +
                         "' (expected sl, gl, sp, su, pgl, psl, heis, cyclic, elementary, perm, table, "
                         "cover_sym, cover_alt, clifford_E, clifford_F, fp)");
    }
    return r;
}

}  // namespace schurkit
