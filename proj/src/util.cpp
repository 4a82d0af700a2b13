#include "tpd/errors.hpp"
#include "tpd/modmat.hpp"
#include "tpd/numeric.hpp"
#include "tpd/ratmat.hpp"
#include "tpd/rng.hpp"

#include <limits>

namespace tpd {

long long to_int64(const Int& n) {
    if (n > std::numeric_limits<long long>::max() ||
        n < std::numeric_limits<long long>::min()) {
        throw UnsupportedInput("integer does not fit in 64 bits: " + n.str());
    }
    return static_cast<long long>(n);
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : kWitnesses) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while (!(d & 1)) {
        d >>= 1;
        ++s;
    }
    // The fixed witness set is deterministic for n < 3.3e24.
    for (std::uint64_t a : kWitnesses) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t random_prime(Rng& rng, unsigned bits) {
    if (bits < 16 || bits > 31) throw UnsupportedInput("prime_bits must be in [16, 31]");
    const std::uint64_t base = (1ULL << (bits - 1)) + 1; // smallest odd above 2^(bits-1)
    const std::uint64_t odd_count = 1ULL << (bits - 2);
    for (;;) {
        std::uint64_t c = base + 2 * rng.below(odd_count);
        if (is_prime(c)) return c;
    }
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t PrimeField::reduce_int(long long v) const {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<std::uint64_t>(m);
}

std::size_t mod_rank(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols,
                     const PrimeField& f) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const std::uint64_t inv = f.inv(rows[rank][col]);
        for (std::size_t j = col; j < cols; ++j) rows[rank][j] = f.mul(rows[rank][j], inv);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            const std::uint64_t factor = rows[i][col];
            if (factor == 0) continue;
            for (std::size_t j = col; j < cols; ++j) {
                rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[rank][j]));
            }
        }
        ++rank;
    }
    return rank;
}

void RowSpan::reduce(std::vector<Rat>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rat& c = v[pivots_[i]];
        if (c == 0) continue;
        const Rat factor = c; // rows are normalized to pivot 1
        const auto& row = rows_[i];
        for (std::size_t j = pivots_[i]; j < cols_; ++j) {
            if (row[j] != 0) v[j] -= factor * row[j];
        }
    }
}

bool RowSpan::insert(std::vector<Rat> v) {
    reduce(v);
    std::size_t lead = cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j] != 0) {
            lead = j;
            break;
        }
    }
    if (lead == cols_) return false;
    const Rat inv = Rat(1) / v[lead];
    for (std::size_t j = lead; j < cols_; ++j) v[j] *= inv;
    // Keep pivot columns strictly increasing so reduce() is a single pass.
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, lead);
    return true;
}

bool RowSpan::contains(std::vector<Rat> v) const {
    reduce(v);
    for (const Rat& c : v) {
        if (c != 0) return false;
    }
    return true;
}

std::size_t rational_rank(std::vector<std::vector<Rat>> rows, std::size_t cols) {
    RowSpan span(cols);
    for (auto& r : rows) span.insert(std::move(r));
    return span.rank();
}

} // namespace tpd
