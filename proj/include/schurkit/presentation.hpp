#pragma once

// Finitely presented groups and Todd-Coxeter coset enumeration, Felsch
// strategy: define one table slot at a time, then drain the deduction stack,
// scanning the cyclic conjugates of the relators that start with the newly
// defined letter. Coincidences merge cosets through a union-find keyed to
// the least representative. Enumeration is capped and deterministic.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "schurkit/error.hpp"
#include "schurkit/finite_group.hpp"

namespace schurkit {

// Nonzero signed 1-based generator indices: +g or -g.
using Word = std::vector<int>;

inline Word word_inverse(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (std::size_t i = w.size(); i-- > 0;) r.push_back(-w[i]);
    return r;
}

inline Word free_reduce(Word w) {
    Word r;
    for (int x : w) {
        if (!r.empty() && r.back() == -x) {
            r.pop_back();
        } else {
            r.push_back(x);
        }
    }
    return r;
}

inline Word word_pow(const Word& w, int e) {
    Word base = e >= 0 ? w : word_inverse(w);
    int n = e >= 0 ? e : -e;
    Word r;
    for (int i = 0; i < n; ++i) r.insert(r.end(), base.begin(), base.end());
    return r;
}

struct Presentation {
    unsigned ngens = 0;
    std::vector<Word> relators;
    std::vector<std::string> names;

    std::string name(unsigned g) const {  // 1-based
        return g <= names.size() && !names[g - 1].empty() ? names[g - 1] : "g" + std::to_string(g);
    }
    void validate() const {
        for (const auto& w : relators) {
            for (int x : w) {
                unsigned a = static_cast<unsigned>(x < 0 ? -x : x);
                if (x == 0 || a > ngens) throw ContractError("Presentation: relator index out of range");
            }
        }
    }
};

// Mini-syntax: "gens: t1 t2; rels: t1^2, (t1 t2)^3, t2 t1 t2^-1 t1^-1".
// A word is a juxtaposition of factors; a factor is a generator name or a
// parenthesized word, optionally followed by ^<integer>.
inline Presentation parse_presentation(const std::string& text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect_kw = [&](const std::string& kw) {
        skip_ws();
        if (text.compare(i, kw.size(), kw) != 0) throw ParseError("presentation: expected '" + kw + "'");
        i += kw.size();
    };
    auto ident = [&]() -> std::string {
        skip_ws();
        std::size_t s = i;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' || text[i] == '.')) {
            ++i;
        }
        if (s == i) throw ParseError("presentation: expected an identifier");
        return text.substr(s, i - s);
    };
    Presentation p;
    std::map<std::string, unsigned> id;
    expect_kw("gens");
    expect_kw(":");
    for (;;) {
        skip_ws();
        if (i >= text.size() || text[i] == ';') break;
        std::string nm = ident();
        if (id.count(nm)) throw ParseError("presentation: duplicate generator " + nm);
        id[nm] = ++p.ngens;
        p.names.push_back(nm);
    }
    expect_kw(";");
    expect_kw("rels");
    expect_kw(":");

    std::function<Word()> parse_word = [&]() -> Word {
        Word w;
        for (;;) {
            skip_ws();
            if (i >= text.size() || text[i] == ',' || text[i] == ')') break;
            Word factor;
            if (text[i] == '(') {
                ++i;
                factor = parse_word();
                skip_ws();
                if (i >= text.size() || text[i] != ')') throw ParseError("presentation: expected ')'");
                ++i;
            } else {
                std::string nm = ident();
                auto it = id.find(nm);
                if (it == id.end()) throw ParseError("presentation: unknown generator " + nm);
                factor = {static_cast<int>(it->second)};
            }
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                bool neg = false;
                if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                    neg = text[i] == '-';
                    ++i;
                }
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
                    throw ParseError("presentation: expected an exponent");
                }
                int e = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    e = e * 10 + (text[i] - '0');
                    ++i;
                }
                factor = word_pow(factor, neg ? -e : e);
            }
            w.insert(w.end(), factor.begin(), factor.end());
        }
        return w;
    };
    for (;;) {
        skip_ws();
        if (i >= text.size()) break;
        Word w = free_reduce(parse_word());
        if (!w.empty()) p.relators.push_back(std::move(w));
        skip_ws();
        if (i < text.size()) {
            if (text[i] != ',') throw ParseError("presentation: expected ','");
            ++i;
        }
    }
    p.validate();
    return p;
}

struct CosetTable {
    unsigned ngens = 0;
    std::uint32_t count = 0;
    std::vector<std::vector<std::uint32_t>> action;      // [gen-1][coset]
    std::vector<std::vector<std::uint32_t>> action_inv;  // [gen-1][coset]

    std::uint32_t apply(std::uint32_t c, const Word& w) const {
        for (int x : w) c = x > 0 ? action[x - 1][c] : action_inv[-x - 1][c];
        return c;
    }
};

namespace detail {

class ToddCoxeter {
  public:
    ToddCoxeter(const Presentation& p, std::uint32_t cap) : ngens_(p.ngens), cols_(2 * p.ngens), cap_(cap) {
        p.validate();
        build_scan_lists(p);
        new_coset_row();  // coset 0 = the subgroup
    }

    void enumerate(const std::vector<Word>& subgroup_gens) {
        for (const Word& w : subgroup_gens) {
            Word r = free_reduce(w);
            if (r.empty()) continue;
            scan(0, to_cols(r), true);
            drain();
        }
        for (std::uint32_t a = 0; a < ncosets_; ++a) {
            if (rep(a) != a) continue;
            for (unsigned x = 0; x < cols_ && rep(a) == a; ++x) {
                if (at(a, x) < 0) {
                    define(a, x);
                    drain();
                }
            }
        }
    }

    CosetTable compressed_table() const {
        // Canonical renumbering: breadth-first from the subgroup coset over
        // the generator actions in order.
        std::vector<std::uint32_t> order;
        std::vector<std::int64_t> newidx(ncosets_, -1);
        std::uint32_t root = rep_const(0);
        order.push_back(root);
        newidx[root] = 0;
        for (std::size_t qi = 0; qi < order.size(); ++qi) {
            std::uint32_t c = order[qi];
            for (unsigned g = 0; g < ngens_; ++g) {
                std::int32_t t = at_const(c, 2 * g);
                if (t < 0) throw ContractError("todd_coxeter: incomplete table (internal)");
                std::uint32_t r = rep_const(static_cast<std::uint32_t>(t));
                if (newidx[r] < 0) {
                    newidx[r] = static_cast<std::int64_t>(order.size());
                    order.push_back(r);
                }
            }
        }
        CosetTable out;
        out.ngens = ngens_;
        out.count = static_cast<std::uint32_t>(order.size());
        out.action.assign(ngens_, std::vector<std::uint32_t>(out.count));
        out.action_inv.assign(ngens_, std::vector<std::uint32_t>(out.count));
        for (std::uint32_t ni = 0; ni < out.count; ++ni) {
            std::uint32_t c = order[ni];
            for (unsigned g = 0; g < ngens_; ++g) {
                out.action[g][ni] =
                    static_cast<std::uint32_t>(newidx[rep_const(static_cast<std::uint32_t>(at_const(c, 2 * g)))]);
                out.action_inv[g][ni] = static_cast<std::uint32_t>(
                    newidx[rep_const(static_cast<std::uint32_t>(at_const(c, 2 * g + 1)))]);
            }
        }
        return out;
    }

    std::uint32_t live_count() const {
        std::uint32_t n = 0;
        for (std::uint32_t a = 0; a < ncosets_; ++a) {
            if (rep_const(a) == a) ++n;
        }
        return n;
    }

  private:
    unsigned ngens_, cols_;
    std::uint32_t cap_;
    std::uint32_t ncosets_ = 0;
    std::vector<std::int32_t> tab_;
    std::vector<std::uint32_t> p_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> deductions_;
    std::vector<std::vector<std::vector<std::uint32_t>>> scans_;  // [col] -> conjugate col-words

    static unsigned col_of(int x) { return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1; }
    static unsigned inv_col(unsigned c) { return c ^ 1u; }
    std::vector<std::uint32_t> to_cols(const Word& w) const {
        std::vector<std::uint32_t> r;
        r.reserve(w.size());
        for (int x : w) r.push_back(col_of(x));
        return r;
    }

    void build_scan_lists(const Presentation& p) {
        scans_.assign(cols_, {});
        std::set<std::vector<std::uint32_t>> seen;
        for (const Word& rel : p.relators) {
            Word r = free_reduce(rel);
            if (r.empty()) continue;
            for (const Word& base : {r, word_inverse(r)}) {
                std::vector<std::uint32_t> cw = to_cols(base);
                for (std::size_t s = 0; s < cw.size(); ++s) {
                    std::vector<std::uint32_t> rot(cw.begin() + static_cast<std::ptrdiff_t>(s), cw.end());
                    rot.insert(rot.end(), cw.begin(), cw.begin() + static_cast<std::ptrdiff_t>(s));
                    if (seen.insert(rot).second) scans_[rot[0]].push_back(rot);
                }
            }
        }
    }

    std::int32_t at(std::uint32_t c, unsigned x) const { return tab_[static_cast<std::size_t>(c) * cols_ + x]; }
    std::int32_t at_const(std::uint32_t c, unsigned x) const { return at(c, x); }
    void put(std::uint32_t c, unsigned x, std::int32_t v) { tab_[static_cast<std::size_t>(c) * cols_ + x] = v; }

    std::uint32_t rep(std::uint32_t a) {
        std::uint32_t r = a;
        while (p_[r] != r) r = p_[r];
        while (p_[a] != r) {
            std::uint32_t next = p_[a];
            p_[a] = r;
            a = next;
        }
        return r;
    }
    std::uint32_t rep_const(std::uint32_t a) const {
        while (p_[a] != a) a = p_[a];
        return a;
    }

    std::uint32_t new_coset_row() {
        if (ncosets_ >= cap_) {
            throw CapacityError("todd_coxeter: coset cap " + std::to_string(cap_) +
                                " exceeded (group may be infinite or the cap too small)");
        }
        tab_.insert(tab_.end(), cols_, -1);
        p_.push_back(ncosets_);
        return ncosets_++;
    }

    void define(std::uint32_t a, unsigned x) {
        std::uint32_t b = new_coset_row();
        put(a, x, static_cast<std::int32_t>(b));
        put(b, inv_col(x), static_cast<std::int32_t>(a));
        deductions_.emplace_back(a, x);
        deductions_.emplace_back(b, inv_col(x));
    }

    void drain() {
        while (!deductions_.empty()) {
            auto [a, x] = deductions_.back();
            deductions_.pop_back();
            std::uint32_t r = rep(a);
            for (const auto& w : scans_[x]) scan(r, w, false);
        }
    }

    // Scan the relator instance `w` at coset `a`. With `fill`, gaps larger
    // than one are closed by defining new cosets (used for the subgroup
    // generator words).
    void scan(std::uint32_t a, const std::vector<std::uint32_t>& w, bool fill) {
        std::uint32_t f = a, b = a;
        std::size_t i = 0, j = w.size();  // j is one past the backward position
        for (;;) {
            while (i < j && at(f, w[i]) >= 0) f = static_cast<std::uint32_t>(at(f, w[i])), ++i;
            if (i >= j) {
                if (f != b) coincide(f, b);
                return;
            }
            while (j > i && at(b, inv_col(w[j - 1])) >= 0) {
                b = static_cast<std::uint32_t>(at(b, inv_col(w[j - 1])));
                --j;
            }
            if (j == i) {
                if (f != b) coincide(f, b);
                return;
            }
            if (j == i + 1) {
                put(f, w[i], static_cast<std::int32_t>(b));
                put(b, inv_col(w[i]), static_cast<std::int32_t>(f));
                deductions_.emplace_back(f, w[i]);
                deductions_.emplace_back(b, inv_col(w[i]));
                return;
            }
            if (!fill) return;
            define(f, w[i]);
        }
    }

    void merge(std::uint32_t a, std::uint32_t b, std::vector<std::uint32_t>& queue) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        std::uint32_t keep = std::min(a, b), drop = std::max(a, b);
        p_[drop] = keep;
        queue.push_back(drop);
    }

    void coincide(std::uint32_t a, std::uint32_t b) {
        std::vector<std::uint32_t> queue;
        merge(a, b, queue);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            std::uint32_t e = queue[qi];
            for (unsigned x = 0; x < cols_; ++x) {
                std::int32_t f = at(e, x);
                if (f < 0) continue;
                put(static_cast<std::uint32_t>(f), inv_col(x), -1);
                put(e, x, -1);
                std::uint32_t e1 = rep(e);
                std::uint32_t f1 = rep(static_cast<std::uint32_t>(f));
                if (at(e1, x) >= 0) {
                    merge(f1, static_cast<std::uint32_t>(at(e1, x)), queue);
                } else if (at(f1, inv_col(x)) >= 0) {
                    merge(e1, static_cast<std::uint32_t>(at(f1, inv_col(x))), queue);
                } else {
                    put(e1, x, static_cast<std::int32_t>(f1));
                    put(f1, inv_col(x), static_cast<std::int32_t>(e1));
                    deductions_.emplace_back(e1, x);
                    deductions_.emplace_back(f1, inv_col(x));
                }
            }
        }
    }
};

}  // namespace detail

// Complete coset table of <subgroup_gens> in the presented group; the coset
// count is the index. The table is verified: every relator fixes every
// coset, and the subgroup generators fix coset 0.
inline CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_gens,
                               std::uint32_t cap = 200000) {
    if (cap < 1) throw ContractError("todd_coxeter: cap must be >= 1");
    detail::ToddCoxeter tc(p, cap);
    tc.enumerate(subgroup_gens);
    CosetTable t = tc.compressed_table();
    for (std::uint32_t c = 0; c < t.count; ++c) {
        for (const Word& r : p.relators) {
            if (t.apply(c, r) != c) throw ContractError("todd_coxeter: relator fails on the table (internal)");
        }
    }
    for (const Word& w : subgroup_gens) {
        if (t.apply(0, w) != 0) throw ContractError("todd_coxeter: subgroup generator moves coset 0 (internal)");
    }
    return t;
}

struct RealizedGroup {
    FiniteGroup group;
    std::vector<elem_t> gen_images;  // per presentation generator
    CosetTable table;
};

// The presented group as a FiniteGroup through its regular action: cosets
// of the trivial subgroup are the elements, multiplication applies the
// right factor's definition word.
inline RealizedGroup realize(const Presentation& p, std::uint32_t cap = 200000) {
    CosetTable t = todd_coxeter(p, {}, cap);
    const std::uint32_t n = t.count;
    // BFS definition tree: element i reached from parent[i] by generator
    // pgen[i].
    std::vector<std::uint32_t> parent(n, 0);
    std::vector<unsigned> pgen(n, 0);
    std::vector<unsigned> depth(n, 0);
    {
        std::vector<char> seen(n, 0);
        std::vector<std::uint32_t> q{0};
        seen[0] = 1;
        for (std::size_t qi = 0; qi < q.size(); ++qi) {
            std::uint32_t c = q[qi];
            for (unsigned g = 0; g < t.ngens; ++g) {
                std::uint32_t d = t.action[g][c];
                if (!seen[d]) {
                    seen[d] = 1;
                    parent[d] = c;
                    pgen[d] = g;
                    depth[d] = depth[c] + 1;
                    q.push_back(d);
                }
            }
        }
    }
    (void)depth;
    auto apply_path = [t, parent, pgen](std::uint32_t from, std::uint32_t b) {
        // from * (word of b): collect the root-to-b path, then act.
        static thread_local std::vector<unsigned> path;
        path.clear();
        for (std::uint32_t c = b; c != 0; c = parent[c]) path.push_back(pgen[c]);
        std::uint32_t r = from;
        for (std::size_t i = path.size(); i-- > 0;) r = t.action[path[i]][r];
        return r;
    };
    std::vector<elem_t> inverse(n);
    for (std::uint32_t a = 0; a < n; ++a) {
        // a^-1 = 0 * (word of a)^-1
        std::uint32_t r = 0;
        for (std::uint32_t c = a; c != 0; c = parent[c]) r = t.action_inv[pgen[c]][r];
        inverse[a] = r;
    }
    std::vector<elem_t> gens;
    for (unsigned g = 0; g < t.ngens; ++g) {
        elem_t img = t.action[g][0];
        if (img != 0 && std::find(gens.begin(), gens.end(), img) == gens.end()) gens.push_back(img);
    }
    FiniteGroup grp = FiniteGroup::from_law(
        n, [apply_path](elem_t a, elem_t b) { return apply_path(a, b); }, 0, std::move(inverse), std::move(gens));
    std::vector<elem_t> images;
    for (unsigned g = 0; g < t.ngens; ++g) images.push_back(t.action[g][0]);
    return RealizedGroup{std::move(grp), std::move(images), std::move(t)};
}

}  // namespace schurkit
