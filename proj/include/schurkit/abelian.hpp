#pragma once

// Finite abelian groups in elementary-divisor form: an ordered list of
// integers d1 | d2 | ... | dk, each >= 2. The empty list is the trivial
// group. This is the result type of abelianizations, H^2 structures and
// Schur multipliers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "schurkit/error.hpp"
#include "schurkit/numtheory.hpp"

namespace schurkit {

struct AbelianStructure {
    std::vector<std::int64_t> divisors;

    AbelianStructure() = default;
    explicit AbelianStructure(std::vector<std::int64_t> d) : divisors(std::move(d)) { check(); }
    AbelianStructure(std::initializer_list<std::int64_t> d) : divisors(d) { check(); }

    bool is_trivial() const { return divisors.empty(); }

    std::int64_t order() const {
        std::int64_t o = 1;
        for (auto d : divisors) o *= d;
        return o;
    }

    std::int64_t exponent() const { return divisors.empty() ? 1 : divisors.back(); }

    // Number of elementary divisors divisible by p (the p-rank).
    unsigned rank_p(std::uint64_t p) const {
        unsigned r = 0;
        for (auto d : divisors) {
            if (d % static_cast<std::int64_t>(p) == 0) ++r;
        }
        return r;
    }

    // |Hom(this, Z/m)| = prod gcd(d_i, m).
    std::int64_t hom_order(std::int64_t m) const {
        std::int64_t o = 1;
        for (auto d : divisors) o *= std::gcd(d, m);
        return o;
    }

    // Canonical form of an arbitrary multiset of cyclic orders: per prime,
    // sort exponents descending and zip the j-th largest powers together.
    static AbelianStructure from_cyclic_orders(const std::vector<std::int64_t>& orders) {
        std::map<std::uint64_t, std::vector<unsigned>> exps;
        for (auto n : orders) {
            if (n <= 0) throw ContractError("AbelianStructure: cyclic order must be positive");
            for (const auto& pp : factorize(static_cast<std::uint64_t>(n))) {
                exps[pp.p].push_back(pp.k);
            }
        }
        std::size_t ranks = 0;
        for (auto& [p, es] : exps) {
            std::sort(es.begin(), es.end(), std::greater<unsigned>());
            ranks = std::max(ranks, es.size());
        }
        std::vector<std::int64_t> desc;
        for (std::size_t j = 0; j < ranks; ++j) {
            std::int64_t d = 1;
            for (auto& [p, es] : exps) {
                if (j < es.size()) {
                    for (unsigned t = 0; t < es[j]; ++t) d *= static_cast<std::int64_t>(p);
                }
            }
            desc.push_back(d);
        }
        std::reverse(desc.begin(), desc.end());
        AbelianStructure out;
        out.divisors = std::move(desc);
        out.check();
        return out;
    }

    static AbelianStructure direct_sum(const AbelianStructure& a, const AbelianStructure& b) {
        std::vector<std::int64_t> all = a.divisors;
        all.insert(all.end(), b.divisors.begin(), b.divisors.end());
        return from_cyclic_orders(all);
    }

    std::string to_string() const {
        if (divisors.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (i != 0) s += " x ";
            s += "Z/" + std::to_string(divisors[i]);
        }
        return s;
    }

    friend bool operator==(const AbelianStructure& a, const AbelianStructure& b) {
        return a.divisors == b.divisors;
    }
    friend bool operator!=(const AbelianStructure& a, const AbelianStructure& b) { return !(a == b); }

  private:
    void check() const {
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (divisors[i] < 2) throw ContractError("AbelianStructure: divisor < 2");
            if (i > 0 && divisors[i] % divisors[i - 1] != 0) {
                throw ContractError("AbelianStructure: divisibility chain violated");
            }
        }
    }
};

}  // namespace schurkit
