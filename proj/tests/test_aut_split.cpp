#include <doctest.h>

#include "schurkit/aut_split.hpp"

using namespace schurkit;

// The equivariant-splitting question is decided by exhaustive search; these
// tests pin the *consistency* of the computation and the coherence of the
// reported verdict, not a presumed answer.
TEST_CASE("aut splitting decision: completes and is internally consistent") {
    AutSplitReport rep = aut_splitting_check();
    CHECK(rep.consistent);
    for (const auto& f : rep.failures) {
        CAPTURE(f);
        CHECK(false);
    }
    CHECK(rep.h2_order == 8);
    CHECK(rep.automorphism_count == 6);
    CHECK(rep.ext_part_order == 4);
    CHECK(rep.candidates.size() == 8);

    // The verdict agrees with the candidate sweep.
    bool any = false;
    for (const auto& c : rep.candidates) any = any || (c.maps_to_generator && c.invariant);
    CHECK(rep.section_exists == any);

    // Witness coherence: present exactly when the verdict is positive, and
    // its flags check out.
    CHECK(rep.witness_coords.has_value() == rep.section_exists);
    if (rep.witness_coords) {
        std::uint32_t x = 0;
        for (unsigned i = 0; i < 3; ++i) x |= (*rep.witness_coords)[i] << i;
        const auto& c = rep.candidates[x];
        CHECK(c.maps_to_generator);
        CHECK(c.invariant);
        CHECK_FALSE(c.abelian_total);
    }

    // Exactly half the classes map to the generator (the projection is a
    // surjective homomorphism to Z/2).
    unsigned over_gen = 0;
    for (const auto& c : rep.candidates) over_gen += c.maps_to_generator ? 1 : 0;
    CHECK(over_gen == 4);
}

TEST_CASE("aut splitting decision is deterministic") {
    AutSplitReport a = aut_splitting_check();
    AutSplitReport b = aut_splitting_check();
    CHECK(a.section_exists == b.section_exists);
    CHECK(a.witness_coords == b.witness_coords);
    CHECK(a.candidates.size() == b.candidates.size());
    for (std::size_t i = 0; i < a.candidates.size(); ++i) {
        CHECK(a.candidates[i].invariant == b.candidates[i].invariant);
        CHECK(a.candidates[i].maps_to_generator == b.candidates[i].maps_to_generator);
    }
}
