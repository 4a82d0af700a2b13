#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tpd/acceptance.hpp"
#include "tpd/caseanalysis.hpp"
#include "tpd/config.hpp"
#include "tpd/errors.hpp"
#include "tpd/lattice.hpp"
#include "tpd/localalg.hpp"
#include "tpd/report.hpp"
#include "tpd/sections.hpp"

#include "json.hpp"

namespace py = pybind11;

namespace {

using nlohmann::ordered_json;

tpd::SurfaceModel surf(const std::string& spec) { return tpd::SurfaceModel::from_spec(spec); }

tpd::IdealPresentation make_ideal(const std::vector<std::string>& gens, int truncation,
                                  bool y_over_x) {
    tpd::IdealPresentation ideal;
    ideal.truncation = truncation;
    ideal.order = {y_over_x ? tpd::TieBreak::YOverX : tpd::TieBreak::XOverY};
    for (const auto& g : gens) {
        ideal.generators.push_back(tpd::parse_polynomial(g, truncation));
    }
    return ideal;
}

ordered_json dimension_json(const tpd::SurfaceModel& s, const tpd::DivisorClass& d,
                            const tpd::DimensionResult& res,
                            const std::vector<unsigned>& mults) {
    ordered_json j;
    j["surface"] = s.spec_string();
    j["divisor"] = s.format_divisor(d);
    j["mults"] = mults;
    j["h0"] = res.h0;
    j["rank"] = res.rank;
    j["dim"] = res.projective_dim;
    j["agreed"] = res.agreed;
    j["trials"] = ordered_json::array();
    for (const auto& t : res.trials) {
        ordered_json tj;
        tj["prime"] = t.prime;
        tj["seed"] = t.seed;
        tj["rank"] = t.rank;
        tj["note"] = t.note;
        j["trials"].push_back(std::move(tj));
    }
    return j;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "fat-point linear systems on rational surfaces: dimensions, local "
              "algebra of triple points, and instability case analysis";

    py::register_exception<tpd::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<tpd::NotApplicable>(m, "NotApplicable", PyExc_RuntimeError);
    py::register_exception<tpd::TruncationTooLow>(m, "TruncationTooLow", PyExc_ValueError);

    m.def(
        "intersect",
        [](const std::string& s, const std::string& a, const std::string& b) {
            const tpd::SurfaceModel sm = surf(s);
            return tpd::to_int64(tpd::intersect(sm, sm.parse_divisor(a), sm.parse_divisor(b)));
        },
        py::arg("surface"), py::arg("d1"), py::arg("d2"));

    m.def(
        "canonical",
        [](const std::string& s) {
            const tpd::SurfaceModel sm = surf(s);
            return sm.format_divisor(sm.canonical());
        },
        py::arg("surface"));

    m.def(
        "genus",
        [](const std::string& s, const std::string& d) {
            const tpd::SurfaceModel sm = surf(s);
            const tpd::Rat g = tpd::arithmetic_genus(sm, sm.parse_divisor(d));
            return std::pair<long long, long long>(tpd::to_int64(numerator(g)),
                                                   tpd::to_int64(denominator(g)));
        },
        py::arg("surface"), py::arg("divisor"));

    m.def("curve_selfint_bound", &tpd::curve_selfint_bound, py::arg("deg_lk"),
          py::arg("genus"));

    m.def(
        "h0",
        [](const std::string& s, const std::string& d) {
            const tpd::SurfaceModel sm = surf(s);
            return tpd::h0(sm, sm.parse_divisor(d));
        },
        py::arg("surface"), py::arg("divisor"));

    m.def(
        "expected_dim",
        [](const std::string& s, const std::string& d, const std::vector<unsigned>& mults) {
            const tpd::SurfaceModel sm = surf(s);
            return tpd::expected_dim(sm, sm.parse_divisor(d), mults);
        },
        py::arg("surface"), py::arg("divisor"), py::arg("mults"));

    m.def(
        "dim_system_json",
        [](const std::string& s, const std::string& d, const std::vector<unsigned>& mults,
           const std::string& placement, unsigned trials, unsigned prime_bits) {
            const tpd::SurfaceModel sm = surf(s);
            const tpd::DivisorClass dc = sm.parse_divisor(d);
            const tpd::FatPointSpec fat{mults, tpd::parse_placement(placement)};
            const tpd::DimensionResult res =
                tpd::dim_fat_point_system(sm, dc, fat, trials, prime_bits);
            return dimension_json(sm, dc, res, mults).dump();
        },
        py::arg("surface"), py::arg("divisor"), py::arg("mults"),
        py::arg("placement") = "random:1", py::arg("trials") = 3,
        py::arg("prime_bits") = 31);

    m.def(
        "defect",
        [](const std::string& s, const std::string& d, const std::vector<unsigned>& mults,
           std::uint64_t seed, unsigned trials, unsigned prime_bits) {
            const tpd::SurfaceModel sm = surf(s);
            const tpd::FatPointSpec fat{mults, tpd::Placement::random_seeded(seed)};
            return tpd::defect(sm, sm.parse_divisor(d), fat, trials, prime_bits);
        },
        py::arg("surface"), py::arg("divisor"), py::arg("mults"), py::arg("seed") = 1,
        py::arg("trials") = 3, py::arg("prime_bits") = 31);

    m.def(
        "verify_double_fiber",
        [](const std::string& s, const std::string& d, std::uint64_t seed, unsigned trials,
           unsigned prime_bits) {
            const tpd::SurfaceModel sm = surf(s);
            return tpd::verify_double_fiber(sm, sm.parse_divisor(d), seed, trials,
                                            prime_bits);
        },
        py::arg("surface"), py::arg("divisor"), py::arg("seed") = 1, py::arg("trials") = 3,
        py::arg("prime_bits") = 31);

    m.def(
        "jet_class",
        [](const std::string& poly, int truncation) {
            return tpd::to_string(
                tpd::classify_germ_jet3(tpd::parse_polynomial(poly, truncation)));
        },
        py::arg("poly"), py::arg("truncation") = 6);

    m.def(
        "equimult_json",
        [](const std::string& poly, int truncation) {
            const tpd::TruncatedPolynomial f = tpd::parse_polynomial(poly, truncation);
            const tpd::IdealPresentation ideal = tpd::equimultiplicity_ideal(f);
            ordered_json j;
            j["poly"] = f.str();
            j["generators"] = ordered_json::array();
            for (const auto& g : ideal.generators) j["generators"].push_back(g.str());
            j["leading_ideal"] = ordered_json::array();
            for (const auto& mn : tpd::leading_ideal(ideal)) {
                j["leading_ideal"].push_back(mn.str());
            }
            j["hilbert_samuel"] = tpd::hilbert_samuel(ideal);
            j["colength"] = tpd::colength(ideal).value;
            j["normal_form"] = tpd::to_string(tpd::ci_normal_form(ideal));
            return j.dump();
        },
        py::arg("poly"), py::arg("truncation") = 6);

    m.def(
        "leading_ideal",
        [](const std::vector<std::string>& gens, int truncation, bool y_over_x) {
            std::vector<std::string> out;
            for (const auto& mn : tpd::leading_ideal(make_ideal(gens, truncation, y_over_x))) {
                out.push_back(mn.str());
            }
            return out;
        },
        py::arg("generators"), py::arg("truncation") = 6, py::arg("y_over_x") = false);

    m.def(
        "hilbert_samuel",
        [](const std::vector<std::string>& gens, int truncation, bool y_over_x) {
            return tpd::hilbert_samuel(make_ideal(gens, truncation, y_over_x));
        },
        py::arg("generators"), py::arg("truncation") = 6, py::arg("y_over_x") = false);

    m.def(
        "colength",
        [](const std::vector<std::string>& gens, int truncation) -> py::object {
            const tpd::Colength c = tpd::colength(make_ideal(gens, truncation, false));
            if (!c.finite) return py::none();
            return py::int_(c.value);
        },
        py::arg("generators"), py::arg("truncation") = 6);

    m.def(
        "ci_normal_form",
        [](const std::vector<std::string>& gens, int truncation) {
            return tpd::to_string(tpd::ci_normal_form(make_ideal(gens, truncation, false)));
        },
        py::arg("generators"), py::arg("truncation") = 6);

    m.def("bogomolov_unstable", &tpd::bogomolov_unstable, py::arg("lk_sq"), py::arg("c2"));

    m.def(
        "hodge_pairs",
        [](long lk_sq, long c2) { return tpd::feasible_pairs(lk_sq, c2).pairs; },
        py::arg("lk_sq"), py::arg("c2"));

    m.def(
        "hodge_b2",
        [](long lk_sq, long c2) { return tpd::feasible_pairs(lk_sq, c2).b2_set(); },
        py::arg("lk_sq"), py::arg("c2"));

    m.def(
        "cases_json",
        [](int length, bool hodge, long lk_sq) {
            ordered_json j;
            j["length"] = length;
            j["hodge"] = hodge;
            j["lk2"] = lk_sq;
            j["rows"] = ordered_json::array();
            for (const auto& row : tpd::enumerate_cases(length, hodge, lk_sq)) {
                j["rows"].push_back(tpd::case_row_json(row));
            }
            return j.dump();
        },
        py::arg("length"), py::arg("hodge") = false, py::arg("lk_sq") = 17);

    m.def(
        "analyze_json",
        [](const std::string& s, const std::string& d, std::uint64_t seed, unsigned trials,
           unsigned prime_bits, bool require_unstable) {
            const tpd::SurfaceModel sm = surf(s);
            tpd::Config cfg;
            cfg.seed = seed;
            cfg.trials = trials;
            cfg.prime_bits = prime_bits;
            const tpd::AnalysisReport rep =
                tpd::analyze(sm, sm.parse_divisor(d), cfg, require_unstable);
            return tpd::report_to_json(rep).dump();
        },
        py::arg("surface"), py::arg("divisor"), py::arg("seed") = 1, py::arg("trials") = 3,
        py::arg("prime_bits") = 31, py::arg("require_unstable") = false);
}
