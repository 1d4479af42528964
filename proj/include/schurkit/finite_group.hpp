#pragma once

// Uniform finite groups: elements are indices 0..order-1 with a total
// multiplication law. Groups of order <= 4096 carry a full multiplication
// table; larger ones evaluate the law through their backing context (a
// function capturing the enumerated elements) with a memoized inverse
// table. Instances are immutable after construction and cheap to copy.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "schurkit/abelian.hpp"
#include "schurkit/error.hpp"
#include "schurkit/numtheory.hpp"

namespace schurkit {

using elem_t = std::uint32_t;

class FiniteGroup {
  public:
    static constexpr elem_t kTableLimit = 4096;
    static constexpr std::size_t kDefaultElementCap = 1000000;

    FiniteGroup() : FiniteGroup(trivial()) {}

    elem_t order() const { return d_->order; }
    elem_t identity() const { return d_->identity; }
    elem_t mul(elem_t a, elem_t b) const {
        return d_->table.empty() ? d_->law(a, b) : d_->table[static_cast<std::size_t>(a) * d_->order + b];
    }
    elem_t inv(elem_t a) const { return d_->inverse[a]; }
    elem_t conj(elem_t g, elem_t x) const { return mul(mul(g, x), inv(g)); }
    elem_t commutator(elem_t a, elem_t b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
    bool has_table() const { return !d_->table.empty(); }

    // Declared generators (empty for table-loaded groups).
    const std::vector<elem_t>& generators() const { return d_->generators; }
    const std::vector<std::string>& labels() const { return d_->labels; }
    std::string label(elem_t i) const {
        return i < d_->labels.size() && !d_->labels[i].empty() ? d_->labels[i] : std::to_string(i);
    }

    static FiniteGroup trivial() {
        Data d;
        d.order = 1;
        d.identity = 0;
        d.table = {0};
        d.inverse = {0};
        return FiniteGroup(std::move(d));
    }

    static FiniteGroup from_table(std::vector<elem_t> table, elem_t order, std::vector<std::string> labels = {},
                                  std::vector<elem_t> generators = {}) {
        if (static_cast<std::size_t>(order) * order != table.size()) {
            throw ContractError("FiniteGroup: table size does not match order");
        }
        Data d;
        d.order = order;
        d.table = std::move(table);
        d.labels = std::move(labels);
        d.generators = std::move(generators);
        for (auto x : d.table) {
            if (x >= order) throw ContractError("FiniteGroup: table entry out of range");
        }
        // Locate the two-sided identity.
        bool found = false;
        for (elem_t e = 0; e < order && !found; ++e) {
            bool ok = true;
            for (elem_t x = 0; x < order && ok; ++x) {
                ok = d.table[static_cast<std::size_t>(e) * order + x] == x &&
                     d.table[static_cast<std::size_t>(x) * order + e] == x;
            }
            if (ok) {
                d.identity = e;
                found = true;
            }
        }
        if (!found) throw ContractError("FiniteGroup: table has no two-sided identity");
        d.inverse.assign(order, 0);
        for (elem_t x = 0; x < order; ++x) {
            bool has = false;
            for (elem_t y = 0; y < order; ++y) {
                if (d.table[static_cast<std::size_t>(x) * order + y] == d.identity &&
                    d.table[static_cast<std::size_t>(y) * order + x] == d.identity) {
                    d.inverse[x] = y;
                    has = true;
                    break;
                }
            }
            if (!has) throw ContractError("FiniteGroup: element without inverse");
        }
        FiniteGroup g(std::move(d));
        g.check_associativity();
        return g;
    }

    static FiniteGroup from_law(elem_t order, std::function<elem_t(elem_t, elem_t)> law, elem_t identity,
                                std::vector<elem_t> inverse, std::vector<elem_t> generators = {},
                                std::vector<std::string> labels = {}) {
        Data d;
        d.order = order;
        d.identity = identity;
        d.inverse = std::move(inverse);
        d.generators = std::move(generators);
        d.labels = std::move(labels);
        if (order <= kTableLimit) {
            d.table.resize(static_cast<std::size_t>(order) * order);
            for (elem_t a = 0; a < order; ++a) {
                for (elem_t b = 0; b < order; ++b) {
                    elem_t c = law(a, b);
                    if (c >= order) throw ContractError("FiniteGroup: law value out of range");
                    d.table[static_cast<std::size_t>(a) * order + b] = c;
                }
            }
        } else {
            d.law = std::move(law);
        }
        FiniteGroup g(std::move(d));
        g.check_identity_and_inverses();
        g.check_associativity();
        return g;
    }

    // Associativity: exhaustive for order <= 512, deterministic sampling
    // schedule above that.
    void check_associativity() const {
        const elem_t n = order();
        if (n <= 512) {
            for (elem_t a = 0; a < n; ++a) {
                for (elem_t b = 0; b < n; ++b) {
                    elem_t ab = mul(a, b);
                    for (elem_t c = 0; c < n; ++c) {
                        if (mul(ab, c) != mul(a, mul(b, c))) {
                            throw ContractError("FiniteGroup: associativity fails at (" + std::to_string(a) + "," +
                                                std::to_string(b) + "," + std::to_string(c) + ")");
                        }
                    }
                }
            }
        } else {
            SplitMix64 rng(0x5ca1ab1e);
            for (int t = 0; t < 20000; ++t) {
                elem_t a = static_cast<elem_t>(rng.below(n));
                elem_t b = static_cast<elem_t>(rng.below(n));
                elem_t c = static_cast<elem_t>(rng.below(n));
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
                    throw ContractError("FiniteGroup: associativity fails (sampled)");
                }
            }
        }
    }

    void check_identity_and_inverses() const {
        const elem_t n = order();
        if (d_->inverse.size() != n) throw ContractError("FiniteGroup: inverse table size mismatch");
        for (elem_t x = 0; x < n; ++x) {
            if (mul(identity(), x) != x || mul(x, identity()) != x) {
                throw ContractError("FiniteGroup: identity is not two-sided");
            }
            if (mul(inv(x), x) != identity() || mul(x, inv(x)) != identity()) {
                throw ContractError("FiniteGroup: inverse law fails");
            }
        }
    }

  private:
    struct Data {
        elem_t order = 1;
        elem_t identity = 0;
        std::vector<elem_t> table;
        std::function<elem_t(elem_t, elem_t)> law;
        std::vector<elem_t> inverse;
        std::vector<elem_t> generators;
        std::vector<std::string> labels;
    };
    std::shared_ptr<const Data> d_;
    explicit FiniteGroup(Data d) : d_(std::make_shared<const Data>(std::move(d))) {}
};

struct Subgroup {
    FiniteGroup parent;
    std::vector<elem_t> members;  // sorted

    elem_t order() const { return static_cast<elem_t>(members.size()); }
    bool contains(elem_t x) const { return std::binary_search(members.begin(), members.end(), x); }
};

struct Homomorphism {
    FiniteGroup source, target;
    std::vector<elem_t> image;  // per-element map

    elem_t operator()(elem_t x) const { return image[x]; }
    bool verify() const {
        for (elem_t a = 0; a < source.order(); ++a) {
            for (elem_t b = 0; b < source.order(); ++b) {
                if (image[source.mul(a, b)] != target.mul(image[a], image[b])) return false;
            }
        }
        return true;
    }
};

// Members of the subgroup generated by `seeds`, by breadth-first right
// multiplication from the identity. Returned sorted.
inline std::vector<elem_t> subgroup_closure(const FiniteGroup& g, const std::vector<elem_t>& seeds) {
    std::vector<char> seen(g.order(), 0);
    std::vector<elem_t> frontier{g.identity()};
    seen[g.identity()] = 1;
    std::size_t qi = 0;
    while (qi < frontier.size()) {
        elem_t x = frontier[qi++];
        for (elem_t s : seeds) {
            elem_t y = g.mul(x, s);
            if (!seen[y]) {
                seen[y] = 1;
                frontier.push_back(y);
            }
        }
    }
    std::sort(frontier.begin(), frontier.end());
    return frontier;
}

// A small generating set: the declared generators when present, otherwise a
// greedy sweep in index order.
inline std::vector<elem_t> generating_set(const FiniteGroup& g) {
    if (!g.generators().empty()) return g.generators();
    std::vector<elem_t> gens;
    std::vector<elem_t> have{g.identity()};
    for (elem_t x = 0; x < g.order() && have.size() < g.order(); ++x) {
        if (!std::binary_search(have.begin(), have.end(), x)) {
            gens.push_back(x);
            have = subgroup_closure(g, gens);
        }
    }
    return gens;
}

inline Subgroup center(const FiniteGroup& g) {
    std::vector<elem_t> gens = generating_set(g);
    std::vector<elem_t> members;
    for (elem_t x = 0; x < g.order(); ++x) {
        bool central = true;
        for (elem_t h : gens) {
            if (g.mul(x, h) != g.mul(h, x)) {
                central = false;
                break;
            }
        }
        if (central) members.push_back(x);
    }
    return Subgroup{g, std::move(members)};
}

// Derived subgroup: normal closure of the commutators of generator pairs.
inline Subgroup derived_subgroup(const FiniteGroup& g) {
    std::vector<elem_t> gens = generating_set(g);
    std::vector<elem_t> seeds;
    for (elem_t a : gens) {
        for (elem_t b : gens) {
            elem_t c = g.commutator(a, b);
            if (c != g.identity()) seeds.push_back(c);
        }
    }
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    std::vector<elem_t> members;
    for (;;) {
        members = subgroup_closure(g, seeds);
        std::vector<elem_t> extra;
        for (elem_t h : gens) {
            for (elem_t s : members) {
                elem_t t = g.conj(h, s);
                if (!std::binary_search(members.begin(), members.end(), t)) extra.push_back(t);
            }
        }
        if (extra.empty()) break;
        seeds.insert(seeds.end(), extra.begin(), extra.end());
        std::sort(seeds.begin(), seeds.end());
        seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    }
    return Subgroup{g, std::move(members)};
}

inline bool is_perfect(const FiniteGroup& g) { return derived_subgroup(g).order() == g.order(); }

inline bool is_abelian(const FiniteGroup& g) {
    std::vector<elem_t> gens = generating_set(g);
    for (elem_t a : gens) {
        for (elem_t b : gens) {
            if (g.mul(a, b) != g.mul(b, a)) return false;
        }
    }
    return true;
}

inline std::int64_t element_order(const FiniteGroup& g, elem_t x) {
    std::int64_t n = 1;
    elem_t y = x;
    while (y != g.identity()) {
        y = g.mul(y, x);
        ++n;
    }
    return n;
}

// Conjugacy classes as a partition; classes ordered by least member, each
// class sorted.
inline std::vector<std::vector<elem_t>> conjugacy_classes(const FiniteGroup& g) {
    std::vector<elem_t> gens = generating_set(g);
    std::vector<char> seen(g.order(), 0);
    std::vector<std::vector<elem_t>> classes;
    for (elem_t x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        std::vector<elem_t> orbit{x};
        seen[x] = 1;
        std::size_t qi = 0;
        while (qi < orbit.size()) {
            elem_t y = orbit[qi++];
            for (elem_t h : gens) {
                elem_t z = g.conj(h, y);
                if (!seen[z]) {
                    seen[z] = 1;
                    orbit.push_back(z);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    return classes;
}

struct QuotientGroup {
    FiniteGroup group;
    std::vector<elem_t> coset_of;  // parent element -> quotient index
    std::vector<elem_t> rep_of;    // quotient index -> least parent representative
    Homomorphism projection;       // parent -> quotient
};

// Quotient by a normal subgroup given by its (sorted) member list.
// Normality is verified against the parent's generators. Coset indices
// follow least-representative discovery order; the identity coset is 0.
inline QuotientGroup quotient(const FiniteGroup& g, const std::vector<elem_t>& normal_members) {
    std::vector<char> in_n(g.order(), 0);
    for (elem_t x : normal_members) in_n[x] = 1;
    if (!in_n[g.identity()]) throw ContractError("quotient: subgroup does not contain the identity");
    for (elem_t h : generating_set(g)) {
        for (elem_t x : normal_members) {
            if (!in_n[g.conj(h, x)]) throw ContractError("quotient: subgroup is not normal");
        }
    }
    const elem_t n = g.order();
    std::vector<elem_t> coset_of(n, static_cast<elem_t>(-1));
    std::vector<elem_t> rep_of;
    // Assign identity's coset first so it gets index 0.
    for (elem_t start : {g.identity()}) {
        rep_of.push_back(start);
        for (elem_t x : normal_members) coset_of[g.mul(start, x)] = 0;
    }
    for (elem_t a = 0; a < n; ++a) {
        if (coset_of[a] != static_cast<elem_t>(-1)) continue;
        elem_t idx = static_cast<elem_t>(rep_of.size());
        rep_of.push_back(a);
        for (elem_t x : normal_members) coset_of[g.mul(a, x)] = idx;
    }
    const elem_t q = static_cast<elem_t>(rep_of.size());
    auto data = std::make_shared<std::pair<std::vector<elem_t>, std::vector<elem_t>>>(coset_of, rep_of);
    FiniteGroup parent = g;
    auto law = [parent, data](elem_t a, elem_t b) {
        return data->first[parent.mul(data->second[a], data->second[b])];
    };
    std::vector<elem_t> inverse(q);
    for (elem_t a = 0; a < q; ++a) inverse[a] = coset_of[g.inv(rep_of[a])];
    std::vector<elem_t> qgens;
    for (elem_t h : generating_set(g)) {
        elem_t c = coset_of[h];
        if (c != 0 && std::find(qgens.begin(), qgens.end(), c) == qgens.end()) qgens.push_back(c);
    }
    FiniteGroup qg = FiniteGroup::from_law(q, law, 0, std::move(inverse), std::move(qgens));
    Homomorphism proj{g, qg, coset_of};
    return QuotientGroup{qg, std::move(coset_of), std::move(rep_of), std::move(proj)};
}

// Elementary divisors of a finite abelian group, by repeatedly splitting
// off a cyclic factor of maximal order.
inline AbelianStructure abelian_invariants(const FiniteGroup& g) {
    if (!is_abelian(g)) throw ContractError("abelian_invariants: group is not abelian");
    std::vector<std::int64_t> divisors;
    FiniteGroup cur = g;
    while (cur.order() > 1) {
        std::int64_t best = 1;
        elem_t who = cur.identity();
        for (elem_t x = 0; x < cur.order(); ++x) {
            std::int64_t o = element_order(cur, x);
            if (o > best) {
                best = o;
                who = x;
            }
        }
        divisors.push_back(best);
        cur = quotient(cur, subgroup_closure(cur, {who})).group;
    }
    std::reverse(divisors.begin(), divisors.end());
    return AbelianStructure(std::move(divisors));
}

// G / [G,G] in elementary-divisor form.
inline AbelianStructure abelianization(const FiniteGroup& g) {
    Subgroup d = derived_subgroup(g);
    return abelian_invariants(quotient(g, d.members).group);
}

}  // namespace schurkit
