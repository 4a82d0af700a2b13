#include "doctest.h"

#include "tpd/caseanalysis.hpp"
#include "tpd/errors.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace tpd;

namespace {

std::vector<CaseRow> rows_with(const std::vector<CaseRow>& rows, bool extra) {
    std::vector<CaseRow> out;
    for (const auto& r : rows) {
        if (r.extra == extra) out.push_back(r);
    }
    return out;
}

} // namespace

TEST_CASE("instability threshold") {
    CHECK(bogomolov_unstable(17, 4));
    CHECK(bogomolov_unstable(25, 4));
    CHECK(bogomolov_unstable(13, 3));
    CHECK(!bogomolov_unstable(16, 4));
    CHECK(!bogomolov_unstable(12, 3));
    CHECK(!bogomolov_unstable(0, 0));
}

TEST_CASE("feasible destabilizing pairs") {
    const InstabilityProfile p17 = feasible_pairs(17, 4);
    CHECK(p17.pairs == std::vector<std::pair<int, int>>{
                           {1, 0}, {2, 0}, {3, 0}, {4, 0}, {4, 1}, {4, 2}});
    CHECK(p17.b2_set() == std::vector<int>{0, 1, 2});

    const InstabilityProfile p17l3 = feasible_pairs(17, 3);
    CHECK(p17l3.pairs == std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {3, 0}});
    CHECK(p17l3.b2_set() == std::vector<int>{0});

    CHECK(feasible_pairs(25, 4).b2_set() == std::vector<int>{0, 1});
    CHECK_THROWS_AS(feasible_pairs(16, 4), NotApplicable);
    CHECK_THROWS_AS(feasible_pairs(12, 3), NotApplicable);
}

TEST_CASE("splitting annotation") {
    CHECK(splitting_annotation(4, 4) == std::pair<int, int>{4, 0});
    CHECK(splitting_annotation(3, 3) == std::pair<int, int>{3, 0});
    CHECK(!splitting_annotation(3, 4).has_value());
    CHECK(!splitting_annotation(1, 3).has_value());
}

TEST_CASE("case enumeration for length 4") {
    const std::vector<CaseRow> rows = enumerate_cases(4, false);
    CHECK(rows.size() == 12);
    CHECK(rows_with(rows, false).size() == 11);

    const std::vector<CaseRow> block1 = [&] {
        std::vector<CaseRow> out;
        for (const auto& r : rows) {
            if (r.r.has_value()) out.push_back(r);
        }
        return out;
    }();
    CHECK(block1.size() == 7);

    SUBCASE("every row satisfies the block inequalities") {
        for (const auto& row : rows) {
            CHECK(row.length == 4);
            CHECK(row.d2 != 1);
            CHECK(!row.ab_values.empty());
            CHECK(row.ab_values.back() == 4);
            const int min_ab = row.ab_values.front();
            if (row.r.has_value()) {
                CHECK(row.c2_div <= 0);
                CHECK(*row.r >= 1);
                CHECK(min_ab == *row.r - row.c2_div + row.d2 + 1);
            } else {
                REQUIRE(row.cd.has_value());
                CHECK(row.c2_div >= 1);
                CHECK(min_ab == row.d2 + 2 * *row.cd + row.c2_div + 1);
            }
        }
    }
    SUBCASE("pairing annotations appear exactly when ab is forced") {
        for (const auto& row : rows) {
            if (row.ab_values.size() == 1) {
                CHECK(row.ad == 4);
                CHECK(row.ac == 0);
            } else {
                CHECK(!row.ad.has_value());
                CHECK(!row.ac.has_value());
            }
        }
    }
    SUBCASE("divisor shape annotation marks the d2 = 0 rows") {
        for (const auto& row : rows) {
            if (row.d2 == 0) {
                CHECK(row.d_shape == "kE,k>=2");
            } else {
                CHECK(!row.d_shape.has_value());
            }
        }
    }
    SUBCASE("the one extra row is the (d2,c2_div,cd) = (0,3,0) case") {
        const std::vector<CaseRow> extras = rows_with(rows, true);
        REQUIRE(extras.size() == 1);
        CHECK(extras[0].d2 == 0);
        CHECK(extras[0].c2_div == 3);
        CHECK(extras[0].cd == 0);
        CHECK(!extras[0].r.has_value());
        CHECK(extras[0].ab_values == std::vector<int>{4});
    }
}

TEST_CASE("case enumeration for length 3") {
    const std::vector<CaseRow> rows = enumerate_cases(3, false);
    CHECK(rows.size() == 7);
    const std::vector<CaseRow> extras = rows_with(rows, true);
    REQUIRE(extras.size() == 1);
    const CaseRow& extra = extras[0];
    CHECK(extra.d2 == 0);
    CHECK(extra.c2_div == 2);
    CHECK(extra.cd == 0);

    // length 3 admits d2 = 1 and no shape annotation
    bool saw_d2_one = false;
    for (const auto& row : rows) {
        CHECK(!row.d_shape.has_value());
        saw_d2_one = saw_d2_one || row.d2 == 1;
    }
    CHECK(saw_d2_one);
}

TEST_CASE("hodge filter drops infeasible block-2 rows") {
    const std::vector<CaseRow> all4 = enumerate_cases(4, false);
    const std::vector<CaseRow> kept4 = enumerate_cases(4, true, 17);
    CHECK(kept4.size() == 9);
    for (const auto& row : kept4) {
        if (!row.r.has_value()) {
            const int b2 = row.d2 + 2 * *row.cd + row.c2_div;
            CHECK((b2 >= 0 && b2 <= 2));
        }
    }
    // block 1 is never filtered
    const auto count_block1 = [](const std::vector<CaseRow>& rows) {
        return std::count_if(rows.begin(), rows.end(),
                             [](const CaseRow& r) { return r.r.has_value(); });
    };
    CHECK(count_block1(all4) == count_block1(kept4));

    const std::vector<CaseRow> kept3 = enumerate_cases(3, true, 17);
    CHECK(kept3.size() == 4);
    for (const auto& row : kept3) CHECK(row.r.has_value());

    // a larger (L-K)^2 only shrinks the feasible b2 set further
    CHECK(enumerate_cases(4, true, 25).size() >= 7);
}

TEST_CASE("case enumeration rejects other lengths") {
    CHECK_THROWS_AS(enumerate_cases(2, false), UnsupportedInput);
    CHECK_THROWS_AS(enumerate_cases(5, false), UnsupportedInput);
    CHECK_THROWS_AS(enumerate_cases(0, false), UnsupportedInput);
}

TEST_CASE("case enumeration is deterministic") {
    CHECK(enumerate_cases(4, false) == enumerate_cases(4, false));
    CHECK(enumerate_cases(3, true) == enumerate_cases(3, true));
}

TEST_CASE("case rows round-trip through json") {
    for (int length : {3, 4}) {
        for (const auto& row : enumerate_cases(length, false)) {
            CHECK(case_row_from_json(case_row_json(row)) == row);
        }
    }

    nlohmann::json bad;
    bad["length"] = 4;
    CHECK_THROWS_AS(case_row_from_json(bad), ParseError);
    nlohmann::json wrong_type = nlohmann::json::parse(
        R"({"length":"x","d2":0,"c2_div":0,"ab_values":[1]})");
    CHECK_THROWS_AS(case_row_from_json(wrong_type), ParseError);
}
