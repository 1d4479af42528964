#pragma once

// Generic closure: enumerate the subgroup generated by elements of an
// ambient multiplication context (permutations, matrices over a finite
// field, or an existing FiniteGroup). Discovery is breadth-first from the
// identity over the given generator sequence, which fixes the canonical
// element indexing.

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "schurkit/error.hpp"
#include "schurkit/finite_group.hpp"

namespace schurkit {

template <class Elem, class Hash>
struct ClosureResult {
    FiniteGroup group;
    std::shared_ptr<const std::vector<Elem>> elements;
    std::shared_ptr<const std::unordered_map<Elem, elem_t, Hash>> index;

    const Elem& element(elem_t i) const { return (*elements)[i]; }
    elem_t index_of(const Elem& e) const {
        auto it = index->find(e);
        if (it == index->end()) throw ContractError("closure: element not in enumerated group");
        return it->second;
    }
};

template <class Elem, class Hash, class Mul, class Inv, class Labeler>
ClosureResult<Elem, Hash> closure_with_labels(const std::vector<Elem>& gens, Mul mul, Inv inverse, Elem id,
                                              Labeler labeler, std::size_t cap) {
    auto elements = std::make_shared<std::vector<Elem>>();
    auto index = std::make_shared<std::unordered_map<Elem, elem_t, Hash>>();
    elements->push_back(id);
    index->emplace(id, 0);
    std::size_t qi = 0;
    while (qi < elements->size()) {
        Elem x = (*elements)[qi++];
        for (const Elem& g : gens) {
            Elem y = mul(x, g);
            if (index->count(y)) continue;
            if (elements->size() >= cap) {
                throw CapacityError("closure: element cap " + std::to_string(cap) + " exceeded");
            }
            index->emplace(y, static_cast<elem_t>(elements->size()));
            elements->push_back(std::move(y));
        }
    }
    const elem_t n = static_cast<elem_t>(elements->size());
    std::vector<elem_t> invs(n);
    for (elem_t i = 0; i < n; ++i) invs[i] = index->at(inverse((*elements)[i]));
    std::vector<elem_t> gen_idx;
    for (const Elem& g : gens) {
        elem_t gi = index->at(g);
        if (gi != 0 && std::find(gen_idx.begin(), gen_idx.end(), gi) == gen_idx.end()) gen_idx.push_back(gi);
    }
    std::vector<std::string> labels;
    if constexpr (!std::is_same_v<Labeler, std::nullptr_t>) {
        labels.reserve(n);
        for (elem_t i = 0; i < n; ++i) labels.push_back(labeler((*elements)[i]));
    }
    auto law = [elements, index, mul](elem_t a, elem_t b) {
        return index->at(mul((*elements)[a], (*elements)[b]));
    };
    FiniteGroup group = FiniteGroup::from_law(n, law, 0, std::move(invs), std::move(gen_idx), std::move(labels));
    return ClosureResult<Elem, Hash>{std::move(group), elements, index};
}

template <class Elem, class Hash, class Mul, class Inv>
ClosureResult<Elem, Hash> closure(const std::vector<Elem>& gens, Mul mul, Inv inverse, Elem id, std::size_t cap) {
    return closure_with_labels<Elem, Hash>(gens, mul, inverse, id, nullptr, cap);
}

// Subgroup of an existing FiniteGroup, re-enumerated with its own canonical
// indexing.
inline ClosureResult<elem_t, std::hash<elem_t>> closure_in_group(const FiniteGroup& g,
                                                                 const std::vector<elem_t>& gens,
                                                                 std::size_t cap = FiniteGroup::kDefaultElementCap) {
    auto mul = [g](elem_t a, elem_t b) { return g.mul(a, b); };
    auto inverse = [g](elem_t a) { return g.inv(a); };
    return closure<elem_t, std::hash<elem_t>>(gens, mul, inverse, g.identity(), cap);
}

// FNV-1a over the raw bytes of a POD sequence.
template <class Seq>
struct SeqHash {
    std::size_t operator()(const Seq& s) const {
        std::uint64_t h = 1469598103934665603ull;
        const auto* p = reinterpret_cast<const unsigned char*>(s.data());
        std::size_t nbytes = s.size() * sizeof(*s.data());
        for (std::size_t i = 0; i < nbytes; ++i) {
            h ^= p[i];
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace schurkit
