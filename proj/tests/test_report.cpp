#include "doctest.h"

#include "tpd/config.hpp"
#include "tpd/errors.hpp"
#include "tpd/report.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

using namespace tpd;

namespace {

const char* const kEnvKeys[] = {"TPD_DEFAULT_TRIALS", "TPD_DEFAULT_SEED", "TPD_PRIME_BITS",
                                "TPD_TRUNCATION"};

// Clears the TPD_* environment for the test and restores it afterwards.
struct EnvGuard {
    EnvGuard() {
        for (const char* key : kEnvKeys) {
            if (const char* v = std::getenv(key)) saved.emplace_back(key, v);
            unsetenv(key);
        }
    }
    ~EnvGuard() {
        for (const char* key : kEnvKeys) unsetenv(key);
        for (const auto& [key, value] : saved) setenv(key.c_str(), value.c_str(), 1);
    }
    std::vector<std::pair<std::string, std::string>> saved;
};

std::string write_temp_config(const std::string& text) {
    const auto path =
        std::filesystem::temp_directory_path() / "tpd_config_under_test.cfg";
    std::ofstream out(path, std::ios::trunc);
    out << text;
    out.close();
    return path.string();
}

} // namespace

TEST_CASE("config defaults and precedence") {
    const EnvGuard guard;
    SUBCASE("defaults") {
        CHECK(load_config(std::nullopt) == Config{});
        CHECK(Config{}.trials == 3);
        CHECK(Config{}.seed == 1);
        CHECK(Config{}.prime_bits == 31);
        CHECK(Config{}.truncation == 6);
    }
    SUBCASE("file values") {
        const std::string path = write_temp_config("# header\n"
                                                   "default_trials = 5\n"
                                                   "default_seed=9\n"
                                                   "prime_bits = 29 # inline\n"
                                                   "\n"
                                                   "truncation = 8\n");
        const Config c = load_config(path);
        CHECK(c.trials == 5);
        CHECK(c.seed == 9);
        CHECK(c.prime_bits == 29);
        CHECK(c.truncation == 8);
    }
    SUBCASE("environment beats the file") {
        const std::string path = write_temp_config("default_trials = 5\ndefault_seed = 9\n");
        setenv("TPD_DEFAULT_TRIALS", "7", 1);
        const Config c = load_config(path);
        CHECK(c.trials == 7);
        CHECK(c.seed == 9);
    }
    SUBCASE("environment alone") {
        setenv("TPD_TRUNCATION", "10", 1);
        CHECK(load_config(std::nullopt).truncation == 10);
    }
    SUBCASE("empty environment values are ignored") {
        setenv("TPD_PRIME_BITS", "", 1);
        CHECK(load_config(std::nullopt).prime_bits == 31);
    }
}

TEST_CASE("config errors") {
    const EnvGuard guard;
    SUBCASE("bad file") {
        CHECK_THROWS_AS(load_config(write_temp_config("bogus = 3\n")), ParseError);
        CHECK_THROWS_AS(load_config(write_temp_config("TPD_PRIME_BITS = 20\n")), ParseError);
        CHECK_THROWS_AS(load_config(write_temp_config("just some words\n")), ParseError);
        CHECK_THROWS_AS(load_config(write_temp_config("default_trials = -1\n")), ParseError);
        CHECK_THROWS_AS(load_config(std::string("/nonexistent/tpd.cfg")), ParseError);
    }
    SUBCASE("bad environment") {
        setenv("TPD_PRIME_BITS", "abc", 1);
        CHECK_THROWS_AS(load_config(std::nullopt), ParseError);
        setenv("TPD_PRIME_BITS", "65", 1);
        CHECK_THROWS_AS(load_config(std::nullopt), ParseError);
    }
    SUBCASE("validation") {
        CHECK_NOTHROW(validate_config(Config{}));
        Config c;
        c.trials = 0;
        CHECK_THROWS_AS(validate_config(c), PreconditionFailed);
        c = Config{};
        c.prime_bits = 15;
        CHECK_THROWS_AS(validate_config(c), PreconditionFailed);
        c.prime_bits = 32;
        CHECK_THROWS_AS(validate_config(c), PreconditionFailed);
        c = Config{};
        c.truncation = 1;
        CHECK_THROWS_AS(validate_config(c), PreconditionFailed);
        c.truncation = 2;
        CHECK_NOTHROW(validate_config(c));
        // out-of-range values loaded from the environment still fail validation
        setenv("TPD_TRUNCATION", "-3", 1);
        CHECK_THROWS_AS(validate_config(load_config(std::nullopt)), PreconditionFailed);
    }
}

TEST_CASE("analysis of a defective hirzebruch system") {
    const EnvGuard guard;
    const SurfaceModel f1 = SurfaceModel::hirzebruch(1);
    const AnalysisReport rep = analyze(f1, f1.parse_divisor("C0+3F"), Config{});
    CHECK(rep.surface == "hirzebruch:1");
    CHECK(rep.divisor == "C0+3F");
    CHECK(rep.dim_L == 6);
    CHECK(rep.expdim == 0);
    CHECK(rep.actual_dim == 1);
    CHECK(rep.defect == 1);
    CHECK(rep.defective);
    CHECK(rep.lk2 == 27);
    CHECK(rep.bogomolov_applicable);
    CHECK(rep.feasible_b2 == std::vector<int>{0});
    CHECK(rep.double_fiber == true);
    CHECK(rep.trials.size() == 3);
    REQUIRE(rep.notes.size() == 2);
    CHECK(rep.notes[0] == "triple-point rank agreed across all trials");
    CHECK(rep.notes[1].find("3e+24") != std::string::npos);
}

TEST_CASE("analysis of a non-defective plane system") {
    const EnvGuard guard;
    const SurfaceModel p2 = SurfaceModel::projective_plane();
    const AnalysisReport rep = analyze(p2, p2.parse_divisor("4H"), Config{});
    CHECK(rep.dim_L == 14);
    CHECK(rep.expdim == 8);
    CHECK(rep.actual_dim == 8);
    CHECK(rep.defect == 0);
    CHECK(!rep.defective);
    CHECK(rep.lk2 == 49);
    CHECK(rep.feasible_b2 == std::vector<int>{0});
    CHECK(!rep.double_fiber.has_value());
}

TEST_CASE("analysis below the instability threshold") {
    const EnvGuard guard;
    const SurfaceModel p2 = SurfaceModel::projective_plane();
    const AnalysisReport rep = analyze(p2, p2.parse_divisor("H"), Config{});
    CHECK(rep.lk2 == 16);
    CHECK(!rep.bogomolov_applicable);
    CHECK(!rep.feasible_b2.has_value());
    bool noted = false;
    for (const auto& note : rep.notes) {
        noted = noted || note.find("instability screen does not apply") != std::string::npos;
    }
    CHECK(noted);
    CHECK_THROWS_AS(analyze(p2, p2.parse_divisor("H"), Config{}, true), NotApplicable);
}

TEST_CASE("analysis skips the fiber check without sections") {
    const EnvGuard guard;
    const SurfaceModel f1 = SurfaceModel::hirzebruch(1);
    const AnalysisReport rep = analyze(f1, f1.parse_divisor("3C0+F"), Config{});
    CHECK(rep.dim_L == 2);
    CHECK(!rep.double_fiber.has_value());
    bool noted = false;
    for (const auto& note : rep.notes) {
        noted = noted || note.find("double-fiber check skipped") != std::string::npos;
    }
    CHECK(noted);
}

TEST_CASE("analysis on a blowup uses monte-carlo ambient dimensions") {
    const EnvGuard guard;
    const SurfaceModel bl = SurfaceModel::blowup_plane(1);
    const AnalysisReport rep = analyze(bl, bl.parse_divisor("4H-2E1"), Config{});
    CHECK(rep.dim_L == 11);
    CHECK(rep.expdim == 5);
    CHECK(rep.actual_dim == 5);
    CHECK(rep.defect == 0);
    CHECK(rep.lk2 == 40);
    CHECK(rep.feasible_b2 == std::vector<int>{0});
    CHECK(rep.notes[0].find("Monte-Carlo") != std::string::npos);
}

TEST_CASE("reports round-trip through json") {
    const EnvGuard guard;
    const SurfaceModel f1 = SurfaceModel::hirzebruch(1);
    const SurfaceModel p2 = SurfaceModel::projective_plane();
    for (const AnalysisReport& rep : {analyze(f1, f1.parse_divisor("C0+3F"), Config{}),
                                      analyze(p2, p2.parse_divisor("H"), Config{})}) {
        CHECK(report_from_json(report_to_json(rep)) == rep);
    }

    const auto dump = report_to_json(analyze(p2, p2.parse_divisor("4H"), Config{})).dump();
    CHECK(dump.rfind("{\"surface\":\"p2\",\"divisor\":\"4H\",\"dim_L\":14,", 0) == 0);
    // identical inputs serialize byte-identically
    CHECK(dump == report_to_json(analyze(p2, p2.parse_divisor("4H"), Config{})).dump());

    nlohmann::json bad;
    bad["surface"] = "p2";
    CHECK_THROWS_AS(report_from_json(bad), ParseError);
}
