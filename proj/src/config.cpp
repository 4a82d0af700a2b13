#include "tpd/config.hpp"

#include "tpd/errors.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <limits>

namespace tpd {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::uint64_t parse_u64(const std::string& value, const std::string& what) {
    if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(what + " must be an unsigned integer, got '" + value + "'");
    }
    errno = 0;
    const std::uint64_t v = std::strtoull(value.c_str(), nullptr, 10);
    if (errno != 0) throw ParseError(what + " is out of range: '" + value + "'");
    return v;
}

long parse_long(const std::string& value, const std::string& what) {
    std::string digits = value;
    bool neg = false;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
        neg = digits[0] == '-';
        digits.erase(0, 1);
    }
    const std::uint64_t mag = parse_u64(digits, what);
    if (mag > static_cast<std::uint64_t>(std::numeric_limits<long>::max())) {
        throw ParseError(what + " is out of range: '" + value + "'");
    }
    return neg ? -static_cast<long>(mag) : static_cast<long>(mag);
}

void apply(Config& c, const std::string& key, const std::string& value,
           const std::string& where) {
    if (key == "default_trials" || key == "TPD_DEFAULT_TRIALS") {
        const std::uint64_t v = parse_u64(value, where);
        if (v > std::numeric_limits<unsigned>::max()) {
            throw ParseError(where + " is out of range: '" + value + "'");
        }
        c.trials = static_cast<unsigned>(v);
    } else if (key == "default_seed" || key == "TPD_DEFAULT_SEED") {
        c.seed = parse_u64(value, where);
    } else if (key == "prime_bits" || key == "TPD_PRIME_BITS") {
        const std::uint64_t v = parse_u64(value, where);
        if (v > 64) throw ParseError(where + " is out of range: '" + value + "'");
        c.prime_bits = static_cast<unsigned>(v);
    } else if (key == "truncation" || key == "TPD_TRUNCATION") {
        const long v = parse_long(value, where);
        if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min()) {
            throw ParseError(where + " is out of range: '" + value + "'");
        }
        c.truncation = static_cast<int>(v);
    } else {
        throw ParseError("unknown config key '" + key + "'");
    }
}

} // namespace

Config load_config(const std::optional<std::string>& file_path) {
    Config c;
    if (file_path) {
        std::ifstream in(*file_path);
        if (!in) throw ParseError("cannot open config file '" + *file_path + "'");
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                throw ParseError("expected 'key = value' at " + *file_path + ":" +
                                 std::to_string(lineno));
            }
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.rfind("TPD_", 0) == 0) {
                throw ParseError("unknown config key '" + key + "'");
            }
            apply(c, key, value, key);
        }
    }
    for (const char* name :
         {"TPD_DEFAULT_TRIALS", "TPD_DEFAULT_SEED", "TPD_PRIME_BITS", "TPD_TRUNCATION"}) {
        if (const char* v = std::getenv(name); v != nullptr && *v != '\0') {
            apply(c, name, v, name);
        }
    }
    return c;
}

void validate_config(const Config& c) {
    if (c.trials < 1) throw PreconditionFailed("trials must be >= 1");
    if (c.prime_bits < 16 || c.prime_bits > 31) {
        throw PreconditionFailed("prime_bits must be in [16, 31]");
    }
    if (c.truncation < 2) throw PreconditionFailed("truncation must be >= 2");
}

} // namespace tpd
