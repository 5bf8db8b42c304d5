#include <doctest.h>

#include <functional>

#include "k3acm/cohomology.hpp"
#include "k3acm/lattice.hpp"
#include "k3acm/polarization.hpp"
#include "oracles.hpp"

using namespace k3acm;

namespace {

PicardLattice quartic_with_line() { return PicardLattice::from_gram({{4, 1}, {1, -2}}); }

bool fails_with(ErrorCode code, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

} // namespace

TEST_SUITE("polarization") {

    TEST_CASE("ampleness on worked examples") {
        PicardLattice q2 = quartic_with_line();
        CHECK(is_ample(q2, DivisorClass{1, 0}));
        CHECK(!is_ample(q2, DivisorClass{0, 1}));  // negative square
        CHECK(!is_ample(q2, DivisorClass{2, 1}));  // orthogonal to the line: wall class
        CHECK(!is_ample(q2, DivisorClass{-1, 0})); // wrong side of the cone
        CHECK(!is_ample(q2, q2.zero_class()));
        // (1,1) sits in the chamber mirrored across the wall: equally valid.
        CHECK(is_ample(q2, DivisorClass{1, 1}));

        CHECK(is_ample(rank2_family(5, 3), DivisorClass{1, 0}));
        CHECK(is_ample(PicardLattice::from_gram({{2}}), DivisorClass{1}));
        CHECK(!is_ample(PicardLattice::from_gram({{4, 0}, {0, -2}}), DivisorClass{1, 0}));
    }

    TEST_CASE("ample classes pair positively with every enumerable effective class") {
        std::vector<std::pair<PicardLattice, DivisorClass>> setups = {
            {quartic_with_line(), DivisorClass{1, 0}},
            {rank2_family(6, 3), DivisorClass{1, 0}},
            {PicardLattice::from_gram({{2, 1, 1}, {1, -2, 0}, {1, 0, -2}}), DivisorClass{1, 0, 0}},
        };
        for (const auto& [lat, h] : setups) {
            REQUIRE(is_ample(lat, h));
            CohomologyEngine eng(lat, h);
            for (const auto& d : enumerate_degree_range(lat, h, 1, 8, -40))
                if (eng.is_effective(d)) CHECK(lat.pair(h, d) > 0);
        }
    }

    TEST_CASE("very ampleness on worked examples") {
        PicardLattice q2 = quartic_with_line();
        CHECK(is_very_ample(q2, DivisorClass{1, 0}));

        PicardLattice fam53 = rank2_family(5, 3);
        CHECK(is_very_ample(fam53, DivisorClass{1, 0}));
        CHECK(is_very_ample(fam53, DivisorClass{2, 0}));

        // Elliptic pencil of degree 1 against 3F + Gamma: never very ample.
        PicardLattice pencil = PicardLattice::from_gram({{0, 1}, {1, -2}});
        CHECK(is_ample(pencil, DivisorClass{3, 1}));
        CHECK(!is_very_ample(pencil, DivisorClass{3, 1}));

        // Degree-4 polarization with an elliptic pencil of degree 2 and one
        // of degree 1: ample but not very ample.
        PicardLattice lowdeg = PicardLattice::from_gram({{4, 1}, {1, 0}});
        CHECK(is_ample(lowdeg, DivisorClass{1, 0}));
        CHECK(!is_very_ample(lowdeg, DivisorClass{1, 0}));

        // Square < 4 fails outright; twice a square-2 class is the
        // double cover of the plane, also not very ample.
        PicardLattice deg2 = PicardLattice::from_gram({{2}});
        CHECK(is_ample(deg2, DivisorClass{1}));
        CHECK(!is_very_ample(deg2, DivisorClass{1}));
        CHECK(is_ample(deg2, DivisorClass{2}));
        CHECK(!is_very_ample(deg2, DivisorClass{2}));

        // Non-ample classes are never very ample.
        CHECK(!is_very_ample(PicardLattice::from_gram({{4, 0}, {0, -2}}), DivisorClass{1, 0}));
        CHECK(!is_very_ample(q2, DivisorClass{0, 1}));
    }

    TEST_CASE("very ample implies ample implies positive square, no walls") {
        PicardLattice q2 = quartic_with_line();
        for (const auto& d : enumerate_by_degree(q2, DivisorClass{1, 0}, 12, 0)) {
            if (is_very_ample(q2, d)) CHECK(is_ample(q2, d));
            if (is_ample(q2, d)) {
                CHECK(q2.square(d) > 0);
                CHECK(orthogonal_roots(q2, d).empty());
            }
        }
        // Wall classes stay nef but lose ampleness.
        CohomologyEngine eng(q2, DivisorClass{1, 0});
        CHECK(eng.is_nef(DivisorClass{2, 1}));
        CHECK(!is_ample(q2, DivisorClass{2, 1}));
    }

    TEST_CASE("family polarization C is very ample across the allowed range") {
        for (Int g = 3; g <= 12; ++g)
            for (Int d = 3; 2 * d <= g + 3; ++d) {
                PicardLattice lat = rank2_family(g, d);
                CHECK(is_ample(lat, DivisorClass{1, 0}));
                CHECK(is_very_ample(lat, DivisorClass{1, 0}));
            }
    }

    TEST_CASE("sectional genus") {
        CHECK(sectional_genus(quartic_with_line(), DivisorClass{1, 0}) == 3);
        CHECK(sectional_genus(rank2_family(5, 3), DivisorClass{1, 0}) == 5);
        CHECK(sectional_genus(rank2_family(5, 3), DivisorClass{2, 0}) == 17);
        CHECK(fails_with(ErrorCode::non_positive_polarization, [] {
            sectional_genus(quartic_with_line(), DivisorClass{0, 1});
        }));
    }

    TEST_CASE("polarization wrapper validates and reports invariants") {
        Polarization pol(quartic_with_line(), DivisorClass{1, 0});
        CHECK(pol.square() == 4);
        CHECK(pol.genus() == 3);
        CHECK(pol.cls() == DivisorClass{1, 0});

        CHECK(fails_with(ErrorCode::not_very_ample, [] {
            Polarization(quartic_with_line(), DivisorClass{0, 1});
        }));
        CHECK(fails_with(ErrorCode::not_very_ample, [] {
            Polarization(PicardLattice::from_gram({{0, 1}, {1, -2}}), DivisorClass{3, 1});
        }));
    }
}
