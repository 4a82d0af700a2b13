#include "doctest.h"

#include "tpd/errors.hpp"
#include "tpd/lattice.hpp"
#include "tpd/sections.hpp"

#include <algorithm>
#include <string>
#include <vector>

using namespace tpd;

namespace {

const SurfaceModel kP2 = SurfaceModel::projective_plane();

DimensionResult dim_of(const SurfaceModel& s, const char* divisor,
                       std::vector<unsigned> mults, std::uint64_t seed = 1,
                       unsigned trials = 3) {
    const FatPointSpec fat{std::move(mults), Placement::random_seeded(seed)};
    return dim_fat_point_system(s, s.parse_divisor(divisor), fat, trials);
}

} // namespace

TEST_CASE("section counts on the plane") {
    CHECK(h0(kP2, kP2.parse_divisor("0")) == 1);
    CHECK(h0(kP2, kP2.parse_divisor("H")) == 3);
    CHECK(h0(kP2, kP2.parse_divisor("2H")) == 6);
    CHECK(h0(kP2, kP2.parse_divisor("4H")) == 15);
    CHECK(h0(kP2, kP2.parse_divisor("-H")) == 0);

    const SectionBasis basis = section_basis(kP2, kP2.parse_divisor("H"));
    CHECK(basis.monomials ==
          std::vector<SectionMonomial>{{0, 0}, {1, 0}, {0, 1}});
    for (int r = 0; r <= 6; ++r) {
        const DivisorClass d = kP2.parse_divisor(std::to_string(r) + "H");
        CHECK(static_cast<long>(section_basis(kP2, d).monomials.size()) == h0(kP2, d));
    }
}

TEST_CASE("section counts on hirzebruch surfaces") {
    const SurfaceModel f0 = SurfaceModel::hirzebruch(0);
    const SurfaceModel f1 = SurfaceModel::hirzebruch(1);
    const SurfaceModel f2 = SurfaceModel::hirzebruch(2);
    CHECK(h0(f1, f1.parse_divisor("C0+3F")) == 7);
    CHECK(h0(f0, f0.parse_divisor("2C0+3F")) == 12);
    CHECK(h0(f2, f2.parse_divisor("2C0+F")) == 2);
    CHECK(h0(f1, f1.parse_divisor("-C0+3F")) == 0);
    CHECK(h0(f1, f1.parse_divisor("C0-F")) == 0);

    for (const auto* text : {"C0+3F", "2C0+3F", "3C0+2F"}) {
        const DivisorClass d = f2.parse_divisor(text);
        CHECK(static_cast<long>(section_basis(f2, d).monomials.size()) == h0(f2, d));
    }
    // the C0-degree of every chart monomial stays within the C0-coefficient
    for (const auto& m : section_basis(f2, f2.parse_divisor("3C0+7F")).monomials) {
        CHECK(m.ydeg <= 3);
        CHECK(m.xdeg <= 7 - 2 * m.ydeg);
    }
}

TEST_CASE("blowup models have no chart basis") {
    const SurfaceModel bl = SurfaceModel::blowup_plane(2);
    CHECK_THROWS_AS(section_basis(bl, bl.parse_divisor("2H-E1-E2")), NotApplicable);
    CHECK_THROWS_AS(h0(bl, bl.parse_divisor("2H-E1-E2")), NotApplicable);
}

TEST_CASE("placement parsing") {
    CHECK(parse_placement("random:42") == Placement::random_seeded(42));
    CHECK(parse_placement("random:0") == Placement::random_seeded(0));
    CHECK(parse_placement("(1,2);(3/4,-5)") ==
          Placement::explicit_points({{Rat(1), Rat(2)}, {Rat(3, 4), Rat(-5)}}));
    CHECK(parse_placement(" ( 1 , 2 ) ") == Placement::explicit_points({{Rat(1), Rat(2)}}));
    CHECK(parse_placement("(-1/3,0)") ==
          Placement::explicit_points({{Rat(-1, 3), Rat(0)}}));

    CHECK_THROWS_AS(parse_placement(""), ParseError);
    CHECK_THROWS_AS(parse_placement("random:"), ParseError);
    CHECK_THROWS_AS(parse_placement("random:abc"), ParseError);
    CHECK_THROWS_AS(parse_placement("random:123456789012345678901"), ParseError);
    CHECK_THROWS_AS(parse_placement("(1,2);"), ParseError);
    CHECK_THROWS_AS(parse_placement("(1)"), ParseError);
    CHECK_THROWS_AS(parse_placement("1,2"), ParseError);
    CHECK_THROWS_AS(parse_placement("(1,1/0)"), ParseError);
}

TEST_CASE("expected dimensions") {
    CHECK(expected_dim(kP2, kP2.parse_divisor("4H"), {3}) == 8);
    CHECK(expected_dim(kP2, kP2.parse_divisor("2H"), {2, 2}) == -1);
    CHECK(expected_dim(kP2, kP2.parse_divisor("H"), {3}) == -1);
    CHECK(expected_dim(kP2, kP2.parse_divisor("4H"), {}) == 14);

    const SurfaceModel f1 = SurfaceModel::hirzebruch(1);
    CHECK(expected_dim(f1, f1.parse_divisor("C0+3F"), {3}) == 0);

    const SurfaceModel bl = SurfaceModel::blowup_plane(2);
    CHECK(expected_dim(bl, bl.parse_divisor("4H-E1-E2"), {2}) == 9);
    CHECK(expected_dim(bl, bl.parse_divisor("2H-E1-E2"), {}) == 3);
}

TEST_CASE("random fat point dimensions") {
    SUBCASE("two double points on conics leave the double line") {
        const DimensionResult res = dim_of(kP2, "2H", {2, 2}, 5);
        CHECK(res.h0 == 6);
        CHECK(res.rank == 5);
        CHECK(res.projective_dim == 0);
        CHECK(res.agreed);
        CHECK(res.trials.size() == 3);
    }
    SUBCASE("a triple point imposes independent conditions on quartics") {
        const DimensionResult res = dim_of(kP2, "4H", {3}, 2);
        CHECK(res.rank == 6);
        CHECK(res.projective_dim == 8);
        CHECK(res.agreed);
    }
    SUBCASE("reruns are reproducible") {
        const DimensionResult a = dim_of(kP2, "3H", {2, 1, 1}, 9, 2);
        const DimensionResult b = dim_of(kP2, "3H", {2, 1, 1}, 9, 2);
        CHECK(a == b);
        CHECK(a.projective_dim == 9 - 3 - 1 - 1);
    }
    SUBCASE("trials are sorted and consistent") {
        const DimensionResult res = dim_of(kP2, "3H", {2}, 11, 4);
        CHECK(res.trials.size() == 4);
        CHECK(std::is_sorted(res.trials.begin(), res.trials.end(),
                             [](const TrialRecord& a, const TrialRecord& b) {
                                 return a.prime != b.prime ? a.prime < b.prime
                                                          : a.seed < b.seed;
                             }));
        CHECK(res.projective_dim == res.h0 - res.rank - 1);
    }
    SUBCASE("at least one trial is required") {
        CHECK_THROWS_AS(dim_of(kP2, "2H", {1}, 1, 0), PreconditionFailed);
    }
}

TEST_CASE("explicit placements") {
    const DivisorClass conics = kP2.parse_divisor("2H");
    SUBCASE("simple points evaluate at the given coordinates") {
        const FatPointSpec fat{{1, 1}, parse_placement("(0,0);(1,1)")};
        const DimensionResult res = dim_fat_point_system(kP2, conics, fat, 2);
        CHECK(res.rank == 2);
        CHECK(res.projective_dim == 3);
        CHECK(res.trials[0].note.empty());
    }
    SUBCASE("count mismatch") {
        const FatPointSpec fat{{1, 1}, parse_placement("(0,0)")};
        CHECK_THROWS_AS(dim_fat_point_system(kP2, conics, fat, 2), DimensionMismatch);
    }
    SUBCASE("duplicate points are noted, not fatal") {
        const FatPointSpec fat{{1, 1}, parse_placement("(1,1);(1,1)")};
        const DimensionResult res = dim_fat_point_system(kP2, conics, fat, 2);
        CHECK(res.rank == 1);
        CHECK(res.projective_dim == 4);
        for (const auto& t : res.trials) {
            CHECK(t.note == "placement has duplicate points");
        }
    }
}

TEST_CASE("blowup dimensions run through the plane chart") {
    const SurfaceModel bl2 = SurfaceModel::blowup_plane(2);
    const DimensionResult res = dim_of(bl2, "2H-E1-E2", {}, 3);
    CHECK(res.h0 == 6);
    CHECK(res.rank == 2);
    CHECK(res.projective_dim == 3);

    const DimensionResult more = dim_of(bl2, "2H-E1-E2", {1}, 3);
    CHECK(more.projective_dim == 2);

    const SurfaceModel bl1 = SurfaceModel::blowup_plane(1);
    CHECK(dim_of(bl1, "4H-2E1", {}, 4).projective_dim == 11);
}

TEST_CASE("fiber multiplicity check") {
    const SurfaceModel f1 = SurfaceModel::hirzebruch(1);
    CHECK(verify_double_fiber(f1, f1.parse_divisor("C0+3F"), 7));

    const SurfaceModel f2 = SurfaceModel::hirzebruch(2);
    CHECK(verify_double_fiber(f2, f2.parse_divisor("C0+4F"), 7));

    const SurfaceModel f0 = SurfaceModel::hirzebruch(0);
    CHECK(!verify_double_fiber(f0, f0.parse_divisor("2C0+3F"), 7));

    CHECK_THROWS_AS(verify_double_fiber(kP2, kP2.parse_divisor("2H"), 1), NotApplicable);
    CHECK_THROWS_AS(verify_double_fiber(f1, f1.parse_divisor("C0+F"), 1),
                    PreconditionFailed);
    CHECK_THROWS_AS(verify_double_fiber(f1, f1.parse_divisor("-C0+5F"), 1),
                    PreconditionFailed);
}

TEST_CASE("system size guards") {
    CHECK_THROWS_AS(dim_of(kP2, "200H", {1}), UnsupportedInput);
    CHECK_THROWS_AS(dim_of(kP2, "2H", {1001}), UnsupportedInput);
    CHECK_THROWS_AS(dim_of(kP2, "2H", {1000}), UnsupportedInput);
}
