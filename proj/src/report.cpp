#include "tpd/report.hpp"

#include "tpd/caseanalysis.hpp"
#include "tpd/errors.hpp"

#include <algorithm>
#include <set>

namespace tpd {

AnalysisReport analyze(const SurfaceModel& s, const DivisorClass& d, const Config& cfg,
                       bool require_unstable) {
    validate_config(cfg);
    AnalysisReport r;
    r.surface = s.spec_string();
    r.divisor = s.format_divisor(d);

    if (s.kind() == SurfaceKind::BlowupPlane) {
        const FatPointSpec none{{}, Placement::random_seeded(cfg.seed)};
        const DimensionResult base =
            dim_fat_point_system(s, d, none, cfg.trials, cfg.prime_bits);
        r.dim_L = base.projective_dim;
        r.notes.push_back("dim |D| on blowup-p2 is a Monte-Carlo rank, not a closed count");
    } else {
        r.dim_L = h0(s, d) - 1;
    }

    const FatPointSpec triple{{3}, Placement::random_seeded(cfg.seed)};
    const DimensionResult full =
        dim_fat_point_system(s, d, triple, cfg.trials, cfg.prime_bits);
    r.actual_dim = full.projective_dim;
    r.trials = full.trials;
    r.expdim = std::max(-1L, r.dim_L - 6);
    r.defect = std::max(0L, r.actual_dim - r.expdim);
    r.defective = r.defect > 0;
    r.notes.push_back(full.agreed
                          ? "triple-point rank agreed across all trials"
                          : "triple-point rank disagreed across trials; maximum taken");

    const DivisorClass lk = d - canonical_class(s);
    r.lk2 = to_int64(intersect(s, lk, lk));
    r.bogomolov_applicable = bogomolov_unstable(r.lk2, 4);
    if (require_unstable && !r.bogomolov_applicable) {
        throw NotApplicable("(L-K)^2 = " + std::to_string(r.lk2) +
                            " does not exceed the instability threshold 16");
    }
    if (r.bogomolov_applicable) {
        std::set<int> b2;
        for (long len : {3L, 4L}) {
            for (int v : feasible_pairs(r.lk2, len).b2_set()) b2.insert(v);
        }
        r.feasible_b2 = std::vector<int>(b2.begin(), b2.end());
    } else {
        r.notes.push_back("(L-K)^2 <= 16: the instability screen does not apply");
    }

    if (s.kind() == SurfaceKind::Hirzebruch) {
        const long long a = to_int64(d[0]);
        const long long b = to_int64(d[1]);
        if (a >= 0 && b >= 2) {
            r.double_fiber = verify_double_fiber(s, d, cfg.seed, cfg.trials, cfg.prime_bits);
        } else {
            r.notes.push_back("double-fiber check skipped: needs a >= 0 and b >= 2");
        }
        if (a == 1 && b == static_cast<long long>(s.param()) + 2) {
            r.notes.push_back("(L-K)^2 = 3e+24 for L = C0+(2+e)F; the value 24 occurs "
                              "exactly at e=0");
        }
    }
    return r;
}

namespace {

nlohmann::ordered_json trial_json(const TrialRecord& t) {
    nlohmann::ordered_json j;
    j["prime"] = t.prime;
    j["seed"] = t.seed;
    j["rank"] = t.rank;
    j["note"] = t.note;
    return j;
}

} // namespace

nlohmann::ordered_json report_to_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;
    j["surface"] = r.surface;
    j["divisor"] = r.divisor;
    j["dim_L"] = r.dim_L;
    j["expdim"] = r.expdim;
    j["actual_dim"] = r.actual_dim;
    j["defect"] = r.defect;
    j["defective"] = r.defective;
    j["lk2"] = r.lk2;
    j["bogomolov_applicable"] = r.bogomolov_applicable;
    if (r.feasible_b2) j["feasible_b2"] = *r.feasible_b2;
    if (r.double_fiber) j["double_fiber"] = *r.double_fiber;
    j["trials"] = nlohmann::ordered_json::array();
    for (const auto& t : r.trials) j["trials"].push_back(trial_json(t));
    j["notes"] = r.notes;
    return j;
}

AnalysisReport report_from_json(const nlohmann::json& j) {
    AnalysisReport r;
    try {
        r.surface = j.at("surface").get<std::string>();
        r.divisor = j.at("divisor").get<std::string>();
        r.dim_L = j.at("dim_L").get<long>();
        r.expdim = j.at("expdim").get<long>();
        r.actual_dim = j.at("actual_dim").get<long>();
        r.defect = j.at("defect").get<long>();
        r.defective = j.at("defective").get<bool>();
        r.lk2 = j.at("lk2").get<long long>();
        r.bogomolov_applicable = j.at("bogomolov_applicable").get<bool>();
        if (j.contains("feasible_b2") && !j["feasible_b2"].is_null()) {
            r.feasible_b2 = j["feasible_b2"].get<std::vector<int>>();
        }
        if (j.contains("double_fiber") && !j["double_fiber"].is_null()) {
            r.double_fiber = j["double_fiber"].get<bool>();
        }
        for (const auto& t : j.at("trials")) {
            TrialRecord rec;
            rec.prime = t.at("prime").get<std::uint64_t>();
            rec.seed = t.at("seed").get<std::uint64_t>();
            rec.rank = t.at("rank").get<long>();
            if (t.contains("note")) rec.note = t.at("note").get<std::string>();
            r.trials.push_back(std::move(rec));
        }
        r.notes = j.at("notes").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad analysis report: ") + e.what());
    }
    return r;
}

} // namespace tpd
