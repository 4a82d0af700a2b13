#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace tpd {

// Bogomolov instability threshold: (L-K)^2 - 4*c2 > 0.
bool bogomolov_unstable(long lk_sq, long c2);

struct InstabilityProfile {
    long lk_sq = 0;
    long c2 = 0;
    // (A.B, B^2) pairs surviving the destabilizing constraints.
    std::vector<std::pair<int, int>> pairs;

    std::vector<int> b2_set() const;
};

// All (ab, b2) with 1 <= ab <= c2, b2 >= 0, ab >= b2 + 1 and the index bound
// ab^2 >= (lk_sq - 2*ab - b2) * b2.  Requires bogomolov_unstable(lk_sq, c2).
InstabilityProfile feasible_pairs(long lk_sq, long c2);

// One combinatorial case for a destabilized length-3 or length-4 scheme.
// Block 1 rows carry r (C^2 <= 0); block 2 rows carry cd (C^2 >= 1).
struct CaseRow {
    int length = 0;
    int d2 = 0;
    int c2_div = 0;
    std::optional<int> cd;
    std::optional<int> r;
    std::vector<int> ab_values;
    std::optional<int> ad;
    std::optional<int> ac;
    std::optional<std::string> d_shape;
    bool extra = false;

    bool operator==(const CaseRow&) const = default;
    // Fields that identify the case independently of derived annotations.
    auto key() const {
        return std::tuple(length, d2, c2_div, cd.value_or(-1), r.value_or(-1));
    }
};

// (ad, ac) = (length, 0) when the pairing forces ab = length; nullopt otherwise.
std::optional<std::pair<int, int>> splitting_annotation(int ab, int length);

// Enumerates the case rows for schemes of the given length (3 or 4):
//   block 1: d2 >= 0, c2_div <= 0, r >= 1, ab in [r - c2_div + d2 + 1, length]
//   block 2: d2 >= 0, c2_div >= 1, cd >= 0, ab in [d2 + 2*cd + c2_div + 1, length]
// with d2 != 1 when length = 4.  When apply_hodge is set, block-2 rows whose
// b2 = d2 + 2*cd + c2_div is not feasible for (lk_sq, length) are dropped
// (block 1 is kept: its cd is not determined).  Rows beyond the classified
// table are emitted with extra = true, never suppressed.
std::vector<CaseRow> enumerate_cases(int length, bool apply_hodge, long lk_sq = 17);

nlohmann::ordered_json case_row_json(const CaseRow& row);
CaseRow case_row_from_json(const nlohmann::json& j);

} // namespace tpd
