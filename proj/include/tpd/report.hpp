#pragma once

#include "tpd/config.hpp"
#include "tpd/lattice.hpp"
#include "tpd/sections.hpp"

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace tpd {

struct AnalysisReport {
    std::string surface;
    std::string divisor;
    long dim_L = -1;
    long expdim = -1;
    long actual_dim = -1;
    long defect = 0;
    bool defective = false;
    long long lk2 = 0;
    bool bogomolov_applicable = false;
    std::optional<std::vector<int>> feasible_b2; // present iff applicable
    std::optional<bool> double_fiber;            // Hirzebruch only
    std::vector<TrialRecord> trials;
    std::vector<std::string> notes;

    bool operator==(const AnalysisReport&) const = default;
};

// Full triple-point analysis of |D|: dimensions with one random triple point,
// defect, (L-K)^2 and the instability screen merged over lengths 3 and 4.
AnalysisReport analyze(const SurfaceModel& s, const DivisorClass& d, const Config& cfg,
                       bool require_unstable = false);

nlohmann::ordered_json report_to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);

} // namespace tpd
