#pragma once

#include <cstdint>
#include <random>

namespace tpd {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// mt19937_64 output is fixed by the standard; std::uniform_int_distribution is
// not, so bounded draws use rejection sampling to keep results reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % n;
    }

private:
    std::mt19937_64 eng_;
};

bool is_prime(std::uint64_t n);

// Random prime in the open interval (2^(bits-1), 2^bits), 16 <= bits <= 31.
std::uint64_t random_prime(Rng& rng, unsigned bits);

} // namespace tpd
