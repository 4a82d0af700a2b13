#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tpd {

// Arithmetic mod an odd prime p < 2^31; products fit in 64 bits.
struct PrimeField {
    std::uint64_t p;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
    std::uint64_t reduce_int(long long v) const;
};

// Rank by in-place Gaussian elimination; rows entries must be in [0, p).
std::size_t mod_rank(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols,
                     const PrimeField& f);

} // namespace tpd
