#include "tpd/caseanalysis.hpp"

#include "tpd/errors.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace tpd {

bool bogomolov_unstable(long lk_sq, long c2) { return lk_sq - 4 * c2 > 0; }

std::vector<int> InstabilityProfile::b2_set() const {
    std::set<int> vals;
    for (const auto& [ab, b2] : pairs) vals.insert(b2);
    return {vals.begin(), vals.end()};
}

InstabilityProfile feasible_pairs(long lk_sq, long c2) {
    if (!bogomolov_unstable(lk_sq, c2)) {
        throw NotApplicable("(L-K)^2 - 4*c2 = " + std::to_string(lk_sq - 4 * c2) +
                            " is not positive");
    }
    InstabilityProfile out{lk_sq, c2, {}};
    for (long ab = 1; ab <= c2; ++ab) {
        for (long b2 = 0; b2 + 1 <= ab; ++b2) {
            if (ab * ab >= (lk_sq - 2 * ab - b2) * b2) {
                out.pairs.push_back({static_cast<int>(ab), static_cast<int>(b2)});
            }
        }
    }
    return out;
}

std::optional<std::pair<int, int>> splitting_annotation(int ab, int length) {
    if (ab == length) return std::pair<int, int>{length, 0};
    return std::nullopt;
}

namespace {

CaseRow make_row(int length, int d2, int c2_div, std::optional<int> cd, std::optional<int> r,
                 int min_ab) {
    CaseRow row;
    row.length = length;
    row.d2 = d2;
    row.c2_div = c2_div;
    row.cd = cd;
    row.r = r;
    for (int ab = min_ab; ab <= length; ++ab) row.ab_values.push_back(ab);
    if (row.ab_values.size() == 1 && row.ab_values[0] == length) {
        if (const auto split = splitting_annotation(length, length)) {
            row.ad = split->first;
            row.ac = split->second;
        }
    }
    if (length == 4 && d2 == 0) row.d_shape = "kE,k>=2";
    return row;
}

// Cases matching the classified table; anything else is flagged extra.
const std::set<std::tuple<int, int, int, int, int>>& classified_keys() {
    static const std::set<std::tuple<int, int, int, int, int>> keys = {
        {4, 0, -2, -1, 1}, {4, 0, -1, -1, 2}, {4, 0, 0, -1, 3}, {4, 0, -1, -1, 1},
        {4, 2, 0, -1, 1},  {4, 0, 0, -1, 2},  {4, 0, 0, -1, 1}, {3, 0, -1, -1, 1},
        {3, 0, 0, -1, 2},  {3, 1, 0, -1, 1},  {3, 0, 0, -1, 1}, {4, 0, 1, 1, -1},
        {4, 2, 1, 0, -1},  {4, 0, 1, 0, -1},  {4, 0, 2, 0, -1}, {3, 1, 1, 0, -1},
        {3, 0, 1, 0, -1},
    };
    return keys;
}

auto sort_key(const CaseRow& row) {
    const int block = row.r.has_value() ? 0 : 1;
    const int shape_rank = row.d_shape.has_value() ? 0 : 1;
    return std::tuple(block, shape_rank, -row.ab_values.front(), row.c2_div, row.d2,
                      -row.r.value_or(0), row.cd.value_or(0));
}

} // namespace

std::vector<CaseRow> enumerate_cases(int length, bool apply_hodge, long lk_sq) {
    if (length != 3 && length != 4) {
        throw UnsupportedInput("scheme length must be 3 or 4");
    }
    std::vector<int> hodge_b2;
    if (apply_hodge) hodge_b2 = feasible_pairs(lk_sq, length).b2_set();

    std::vector<CaseRow> rows;
    // Block 1: the destabilizing curve has C^2 <= 0, recorded as r >= 1.
    for (int d2 = 0; d2 <= length; ++d2) {
        if (length == 4 && d2 == 1) continue;
        for (int neg = 0; neg <= length; ++neg) {
            for (int r = 1; r <= length; ++r) {
                const int min_ab = r + neg + d2 + 1;
                if (min_ab > length) continue;
                rows.push_back(make_row(length, d2, -neg, std::nullopt, r, min_ab));
            }
        }
    }
    // Block 2: C^2 >= 1; cd counts the excess intersection with the divisor.
    for (int d2 = 0; d2 <= length; ++d2) {
        if (length == 4 && d2 == 1) continue;
        for (int cd = 0; 2 * cd <= length; ++cd) {
            for (int c2_div = 1; c2_div <= length; ++c2_div) {
                const int min_ab = d2 + 2 * cd + c2_div + 1;
                if (min_ab > length) continue;
                const int b2 = d2 + 2 * cd + c2_div;
                if (apply_hodge &&
                    !std::binary_search(hodge_b2.begin(), hodge_b2.end(), b2)) {
                    continue;
                }
                rows.push_back(make_row(length, d2, c2_div, cd, std::nullopt, min_ab));
            }
        }
    }
    for (auto& row : rows) {
        row.extra = classified_keys().count(row.key()) == 0;
    }
    std::sort(rows.begin(), rows.end(),
              [](const CaseRow& a, const CaseRow& b) { return sort_key(a) < sort_key(b); });
    return rows;
}

nlohmann::ordered_json case_row_json(const CaseRow& row) {
    nlohmann::ordered_json j;
    j["length"] = row.length;
    j["d2"] = row.d2;
    j["c2_div"] = row.c2_div;
    j["cd"] = row.cd ? nlohmann::ordered_json(*row.cd) : nlohmann::ordered_json(nullptr);
    j["r"] = row.r ? nlohmann::ordered_json(*row.r) : nlohmann::ordered_json(nullptr);
    j["ab_values"] = row.ab_values;
    j["ad"] = row.ad ? nlohmann::ordered_json(*row.ad) : nlohmann::ordered_json(nullptr);
    j["ac"] = row.ac ? nlohmann::ordered_json(*row.ac) : nlohmann::ordered_json(nullptr);
    j["d_shape"] =
        row.d_shape ? nlohmann::ordered_json(*row.d_shape) : nlohmann::ordered_json(nullptr);
    j["extra"] = row.extra;
    return j;
}

CaseRow case_row_from_json(const nlohmann::json& j) {
    CaseRow row;
    try {
        row.length = j.at("length").get<int>();
        row.d2 = j.at("d2").get<int>();
        row.c2_div = j.at("c2_div").get<int>();
        if (j.contains("cd") && !j["cd"].is_null()) row.cd = j["cd"].get<int>();
        if (j.contains("r") && !j["r"].is_null()) row.r = j["r"].get<int>();
        row.ab_values = j.at("ab_values").get<std::vector<int>>();
        if (j.contains("ad") && !j["ad"].is_null()) row.ad = j["ad"].get<int>();
        if (j.contains("ac") && !j["ac"].is_null()) row.ac = j["ac"].get<int>();
        if (j.contains("d_shape") && !j["d_shape"].is_null()) {
            row.d_shape = j["d_shape"].get<std::string>();
        }
        if (j.contains("extra")) row.extra = j["extra"].get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad case row: ") + e.what());
    }
    return row;
}

} // namespace tpd
