// Checklist runner: one pass/fail line per criterion, exit code 0/3/4.
#include "tpd/acceptance.hpp"
#include "tpd/config.hpp"

#include <exception>
#include <iostream>
#include <optional>

int main() {
    try {
        const tpd::Config cfg = tpd::load_config(std::nullopt);
        const std::vector<tpd::CriterionResult> results = tpd::run_acceptance(cfg);
        for (const auto& r : results) {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name;
            if (!r.detail.empty()) std::cout << ": " << r.detail;
            if (!r.pass && r.mc_disagreement) std::cout << " (mc-disagreement)";
            std::cout << "\n";
        }
        return tpd::acceptance_exit_code(results);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
