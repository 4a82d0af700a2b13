#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace tpd {

// Runtime knobs shared by the CLI and the acceptance suite.  Precedence:
// command-line flags > TPD_* environment variables > config file > defaults.
struct Config {
    unsigned trials = 3;
    std::uint64_t seed = 1;
    unsigned prime_bits = 31; // primes drawn from (2^(bits-1), 2^bits)
    int truncation = 6;

    bool operator==(const Config&) const = default;
};

// File format: `key = value` lines, '#' comments.  Keys: default_trials,
// default_seed, prime_bits, truncation.  Environment: TPD_DEFAULT_TRIALS,
// TPD_DEFAULT_SEED, TPD_PRIME_BITS, TPD_TRUNCATION.
Config load_config(const std::optional<std::string>& file_path);

void validate_config(const Config& c);

} // namespace tpd
