#pragma once

// Normalized 2-cochains on a finite group with values in Z/m, written
// additively. Small groups use a dense value table; cochains on large bases
// (coboundaries of a stored 1-cochain) are evaluated on the fly.

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "schurkit/error.hpp"
#include "schurkit/finite_group.hpp"
#include "schurkit/numtheory.hpp"

namespace schurkit {

class Cocycle2 {
  public:
    Cocycle2() = default;

    const FiniteGroup& group() const { return group_; }
    std::uint64_t modulus() const { return m_; }
    bool is_dense() const { return !dense_.empty(); }

    std::uint64_t operator()(elem_t g, elem_t h) const {
        return dense_.empty() ? fn_(g, h) : dense_[static_cast<std::size_t>(g) * group_.order() + h];
    }

    static Cocycle2 zero(const FiniteGroup& g, std::uint64_t m) {
        check_modulus(m);
        Cocycle2 c;
        c.group_ = g;
        c.m_ = m;
        c.fn_ = [](elem_t, elem_t) { return std::uint64_t{0}; };
        return c;
    }

    static Cocycle2 from_values(const FiniteGroup& g, std::uint64_t m, std::vector<std::uint32_t> values) {
        check_modulus(m);
        if (values.size() != static_cast<std::size_t>(g.order()) * g.order()) {
            throw ContractError("Cocycle2: value table size mismatch");
        }
        Cocycle2 c;
        c.group_ = g;
        c.m_ = m;
        c.dense_ = std::move(values);
        for (auto& v : c.dense_) v = static_cast<std::uint32_t>(v % m);
        return c;
    }

    // d^1 s for a normalized 1-cochain s (s[identity] must be 0):
    // (d s)(g,h) = s(g) + s(h) - s(gh).
    static Cocycle2 coboundary(const FiniteGroup& g, std::uint64_t m, std::vector<std::uint32_t> s) {
        check_modulus(m);
        if (s.size() != g.order()) throw ContractError("Cocycle2: 1-cochain size mismatch");
        if (s[g.identity()] % m != 0) throw ContractError("Cocycle2: 1-cochain not normalized");
        auto sv = std::make_shared<const std::vector<std::uint32_t>>(std::move(s));
        Cocycle2 c;
        c.group_ = g;
        c.m_ = m;
        FiniteGroup grp = g;
        c.fn_ = [grp, sv, m](elem_t x, elem_t y) {
            std::uint64_t v = (*sv)[x] % m + (*sv)[y] % m + m - (*sv)[grp.mul(x, y)] % m;
            return v % m;
        };
        if (static_cast<std::size_t>(g.order()) * g.order() <= (1u << 22)) c.densify();
        return c;
    }

    // Deterministic seeded coboundary, for sweeps on large bases.
    static Cocycle2 random_coboundary(const FiniteGroup& g, std::uint64_t m, std::uint64_t seed) {
        SplitMix64 rng(seed);
        std::vector<std::uint32_t> s(g.order());
        for (auto& v : s) v = static_cast<std::uint32_t>(rng.below(m));
        s[g.identity()] = 0;
        return coboundary(g, m, std::move(s));
    }

    Cocycle2 minus(const Cocycle2& o) const {
        if (o.m_ != m_ || o.group_.order() != group_.order()) {
            throw ContractError("Cocycle2: mismatched difference");
        }
        const elem_t n = group_.order();
        std::vector<std::uint32_t> vals(static_cast<std::size_t>(n) * n);
        for (elem_t g = 0; g < n; ++g) {
            for (elem_t h = 0; h < n; ++h) {
                vals[static_cast<std::size_t>(g) * n + h] =
                    static_cast<std::uint32_t>(((*this)(g, h) + m_ - o(g, h)) % m_);
            }
        }
        return from_values(group_, m_, std::move(vals));
    }

    bool is_normalized() const {
        const elem_t e = group_.identity();
        for (elem_t g = 0; g < group_.order(); ++g) {
            if ((*this)(e, g) != 0 || (*this)(g, e) != 0) return false;
        }
        return true;
    }

    // Cocycle identity b(g,h) + b(gh,k) = b(h,k) + b(g,hk); exhaustive up to
    // order 256, deterministic sampling above.
    bool satisfies_cocycle_identity() const {
        const elem_t n = group_.order();
        auto check = [&](elem_t g, elem_t h, elem_t k) {
            std::uint64_t lhs = ((*this)(g, h) + (*this)(group_.mul(g, h), k)) % m_;
            std::uint64_t rhs = ((*this)(h, k) + (*this)(g, group_.mul(h, k))) % m_;
            return lhs == rhs;
        };
        if (n <= 256) {
            for (elem_t g = 0; g < n; ++g) {
                for (elem_t h = 0; h < n; ++h) {
                    for (elem_t k = 0; k < n; ++k) {
                        if (!check(g, h, k)) return false;
                    }
                }
            }
        } else {
            SplitMix64 rng(0xc0c7c1e);
            for (int t = 0; t < 50000; ++t) {
                if (!check(static_cast<elem_t>(rng.below(n)), static_cast<elem_t>(rng.below(n)),
                           static_cast<elem_t>(rng.below(n)))) {
                    return false;
                }
            }
        }
        return true;
    }

    void require_normalized_cocycle() const {
        if (!is_normalized()) throw ContractError("Cocycle2: cochain is not normalized");
        if (!satisfies_cocycle_identity()) throw ContractError("Cocycle2: cocycle identity fails");
    }

  private:
    FiniteGroup group_;
    std::uint64_t m_ = 2;
    std::vector<std::uint32_t> dense_;
    std::function<std::uint64_t(elem_t, elem_t)> fn_;

    static void check_modulus(std::uint64_t m) {
        if (m < 2) throw ContractError("Cocycle2: modulus must be >= 2");
    }
    void densify() {
        const elem_t n = group_.order();
        dense_.resize(static_cast<std::size_t>(n) * n);
        for (elem_t g = 0; g < n; ++g) {
            for (elem_t h = 0; h < n; ++h) {
                dense_[static_cast<std::size_t>(g) * n + h] = static_cast<std::uint32_t>(fn_(g, h));
            }
        }
        fn_ = nullptr;
    }
};

}  // namespace schurkit
