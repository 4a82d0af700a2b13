#include "tpd/acceptance.hpp"
#include "tpd/caseanalysis.hpp"
#include "tpd/config.hpp"
#include "tpd/errors.hpp"
#include "tpd/lattice.hpp"
#include "tpd/localalg.hpp"
#include "tpd/report.hpp"
#include "tpd/sections.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cctype>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

void print_json(const ordered_json& j, bool pretty) {
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

std::vector<unsigned> parse_mults(const std::string& text) {
    std::vector<unsigned> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string tok = text.substr(pos, comma - pos);
        if (tok.empty() || tok.size() > 4 ||
            tok.find_first_not_of("0123456789") != std::string::npos) {
            throw tpd::ParseError("bad multiplicity '" + tok + "'");
        }
        out.push_back(static_cast<unsigned>(std::stoul(tok)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

ordered_json trials_json(const std::vector<tpd::TrialRecord>& trials) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : trials) {
        ordered_json j;
        j["prime"] = t.prime;
        j["seed"] = t.seed;
        j["rank"] = t.rank;
        j["note"] = t.note;
        arr.push_back(std::move(j));
    }
    return arr;
}

bool ranks_agree(const std::vector<tpd::TrialRecord>& trials) {
    for (const auto& t : trials) {
        if (t.rank != trials.front().rank) return false;
    }
    return true;
}

int print_checklist(const std::vector<tpd::CriterionResult>& results) {
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name;
        if (!r.detail.empty()) std::cout << ": " << r.detail;
        if (!r.pass && r.mc_disagreement) std::cout << " (mc-disagreement)";
        std::cout << "\n";
    }
    return tpd::acceptance_exit_code(results);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear systems with fat points on rational surfaces: dimensions, "
                 "defects, and instability screening"};
    app.require_subcommand(1);

    std::string config_path;
    bool pretty = false;
    auto* config_opt = app.add_option("--config", config_path, "key = value config file");
    app.add_flag("--pretty", pretty, "indent JSON output");

    std::string surface, divisor, mults_text, points_text, poly;
    std::uint64_t seed = 0;
    unsigned trials = 0;
    bool require_unstable = false, hodge_flag = false;
    int length = 0;
    long lk2 = 17, c2 = 0;

    auto* cmd_analyze = app.add_subcommand("analyze", "full triple-point report for |D|");
    cmd_analyze->fallthrough();
    cmd_analyze->add_option("--surface", surface, "p2 | hirzebruch:<e> | blowup-p2:<n>")
        ->required();
    cmd_analyze->add_option("--divisor", divisor, "divisor in the surface basis")
        ->required();
    auto* an_seed = cmd_analyze->add_option("--seed", seed, "trial seed");
    auto* an_trials = cmd_analyze->add_option("--trials", trials, "Monte-Carlo trials");
    cmd_analyze->add_flag("--require-unstable", require_unstable,
                          "fail when (L-K)^2 <= 16");

    auto* cmd_dim = app.add_subcommand("dim", "dimension of |D - m1p1 - ... - mnpn|");
    cmd_dim->fallthrough();
    cmd_dim->add_option("--surface", surface, "p2 | hirzebruch:<e> | blowup-p2:<n>")
        ->required();
    cmd_dim->add_option("--divisor", divisor, "divisor in the surface basis")->required();
    cmd_dim->add_option("--mults", mults_text, "comma list of multiplicities")->required();
    auto* dim_points =
        cmd_dim->add_option("--points", points_text, "random:<seed> or (x,y);(u,v);...");
    auto* dim_seed = cmd_dim->add_option("--seed", seed, "trial seed");
    auto* dim_trials = cmd_dim->add_option("--trials", trials, "Monte-Carlo trials");

    auto* cmd_jet = app.add_subcommand("jet", "degree-3 jet class of a germ");
    cmd_jet->fallthrough();
    cmd_jet->add_option("--poly", poly, "polynomial in x, y")->required();

    auto* cmd_equimult =
        app.add_subcommand("equimult", "equimultiplicity ideal of a multiplicity-3 germ");
    cmd_equimult->fallthrough();
    cmd_equimult->add_option("--poly", poly, "polynomial in x, y")->required();

    auto* cmd_cases = app.add_subcommand("cases", "destabilized-scheme case table");
    cmd_cases->fallthrough();
    cmd_cases->add_option("--length", length, "scheme length, 3 or 4")->required();
    cmd_cases->add_flag("--hodge", hodge_flag, "drop block-2 rows with infeasible B^2");
    cmd_cases->add_option("--lk2", lk2, "(L-K)^2 for the feasibility screen");

    auto* cmd_hodge = app.add_subcommand("hodge", "feasible (A.B, B^2) pairs");
    cmd_hodge->fallthrough();
    cmd_hodge->add_option("--lk2", lk2, "(L-K)^2")->required();
    cmd_hodge->add_option("--c2", c2, "scheme length")->required();

    auto* cmd_verify = app.add_subcommand("verify-paper", "run the acceptance checklist");
    cmd_verify->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        tpd::Config cfg = tpd::load_config(
            config_opt->count() ? std::optional<std::string>(config_path) : std::nullopt);
        const auto overlay = [&](CLI::Option* seed_opt, CLI::Option* trials_opt) {
            if (seed_opt->count() > 0) cfg.seed = seed;
            if (trials_opt->count() > 0) cfg.trials = trials;
            tpd::validate_config(cfg);
        };

        if (*cmd_analyze) {
            overlay(an_seed, an_trials);
            const tpd::SurfaceModel s = tpd::SurfaceModel::from_spec(surface);
            const tpd::DivisorClass d = s.parse_divisor(divisor);
            const tpd::AnalysisReport rep = tpd::analyze(s, d, cfg, require_unstable);
            print_json(tpd::report_to_json(rep), pretty);
            return ranks_agree(rep.trials) ? 0 : 3;
        }
        if (*cmd_dim) {
            overlay(dim_seed, dim_trials);
            const tpd::SurfaceModel s = tpd::SurfaceModel::from_spec(surface);
            const tpd::DivisorClass d = s.parse_divisor(divisor);
            tpd::FatPointSpec fat;
            fat.multiplicities = parse_mults(mults_text);
            fat.placement = dim_points->count() > 0
                                ? tpd::parse_placement(points_text)
                                : tpd::Placement::random_seeded(cfg.seed);
            const tpd::DimensionResult res =
                tpd::dim_fat_point_system(s, d, fat, cfg.trials, cfg.prime_bits);
            ordered_json j;
            j["surface"] = s.spec_string();
            j["divisor"] = s.format_divisor(d);
            j["mults"] = fat.multiplicities;
            j["h0"] = res.h0;
            j["rank"] = res.rank;
            j["dim"] = res.projective_dim;
            j["agreed"] = res.agreed;
            j["trials"] = trials_json(res.trials);
            print_json(j, pretty);
            return res.agreed ? 0 : 3;
        }
        if (*cmd_jet) {
            const tpd::TruncatedPolynomial f = tpd::parse_polynomial(poly, cfg.truncation);
            const tpd::JetClass jc = tpd::classify_germ_jet3(f);
            ordered_json j;
            j["poly"] = f.str();
            j["jet_class"] = tpd::to_string(jc);
            if (!f.is_zero() && f.order() == 3 && cfg.truncation >= 6) {
                const tpd::Colength cl =
                    tpd::colength(tpd::equimultiplicity_ideal(f));
                j["colength"] = cl.finite ? ordered_json(cl.value) : ordered_json(nullptr);
            } else {
                j["colength"] = nullptr;
            }
            print_json(j, pretty);
            return 0;
        }
        if (*cmd_equimult) {
            const tpd::TruncatedPolynomial f = tpd::parse_polynomial(poly, cfg.truncation);
            const tpd::IdealPresentation ideal = tpd::equimultiplicity_ideal(f);
            ordered_json j;
            j["poly"] = f.str();
            j["generators"] = ordered_json::array();
            for (const auto& g : ideal.generators) j["generators"].push_back(g.str());
            j["leading_ideal"] = ordered_json::array();
            for (const auto& m : tpd::leading_ideal(ideal)) {
                j["leading_ideal"].push_back(m.str());
            }
            j["hilbert_samuel"] = tpd::hilbert_samuel(ideal);
            j["colength"] = tpd::colength(ideal).value;
            j["normal_form"] = tpd::to_string(tpd::ci_normal_form(ideal));
            print_json(j, pretty);
            return 0;
        }
        if (*cmd_cases) {
            const std::vector<tpd::CaseRow> rows =
                tpd::enumerate_cases(length, hodge_flag, lk2);
            ordered_json j;
            j["length"] = length;
            j["hodge"] = hodge_flag;
            j["lk2"] = lk2;
            j["rows"] = ordered_json::array();
            for (const auto& row : rows) j["rows"].push_back(tpd::case_row_json(row));
            print_json(j, pretty);
            return 0;
        }
        if (*cmd_hodge) {
            const tpd::InstabilityProfile profile = tpd::feasible_pairs(lk2, c2);
            ordered_json j;
            j["lk2"] = profile.lk_sq;
            j["c2"] = profile.c2;
            j["pairs"] = ordered_json::array();
            for (const auto& [ab, b2] : profile.pairs) {
                j["pairs"].push_back(ordered_json::array({ab, b2}));
            }
            j["b2"] = profile.b2_set();
            print_json(j, pretty);
            return 0;
        }
        if (*cmd_verify) {
            tpd::validate_config(cfg);
            return print_checklist(tpd::run_acceptance(cfg));
        }
    } catch (const tpd::NotApplicable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
