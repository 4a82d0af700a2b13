#include "tpd/sections.hpp"

#include "tpd/errors.hpp"
#include "tpd/modmat.hpp"
#include "tpd/rng.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace tpd {

namespace {

long long coeff_i64(const DivisorClass& d, std::size_t i) { return to_int64(d[i]); }

void check_size(const SurfaceModel& s, const DivisorClass& d) {
    if (d.size() != s.basis_size()) {
        throw DimensionMismatch("divisor has " + std::to_string(d.size()) +
                                " coefficients, surface rank is " +
                                std::to_string(s.basis_size()));
    }
}

constexpr long kMaxSystemSize = 20000;
constexpr unsigned kMaxMultiplicity = 1000;

} // namespace

SectionBasis section_basis(const SurfaceModel& s, const DivisorClass& d) {
    check_size(s, d);
    SectionBasis basis;
    switch (s.kind()) {
        case SurfaceKind::ProjectivePlane: {
            const long long r = coeff_i64(d, 0);
            for (long long t = 0; t <= r; ++t) {
                for (long long j = t; j >= 0; --j) {
                    basis.monomials.push_back({static_cast<int>(j), static_cast<int>(t - j)});
                }
            }
            return basis;
        }
        case SurfaceKind::Hirzebruch: {
            const long long a = coeff_i64(d, 0);
            const long long b = coeff_i64(d, 1);
            const long long e = s.param();
            for (long long k = 0; k <= a; ++k) {
                for (long long j = 0; j <= b - k * e; ++j) {
                    basis.monomials.push_back({static_cast<int>(j), static_cast<int>(k)});
                }
            }
            return basis;
        }
        case SurfaceKind::BlowupPlane:
            break;
    }
    throw NotApplicable("blowup-p2 has no chart monomial basis; use dim_fat_point_system");
}

long h0(const SurfaceModel& s, const DivisorClass& d) {
    check_size(s, d);
    switch (s.kind()) {
        case SurfaceKind::ProjectivePlane: {
            const long long r = coeff_i64(d, 0);
            return r < 0 ? 0 : static_cast<long>((r + 1) * (r + 2) / 2);
        }
        case SurfaceKind::Hirzebruch: {
            const long long a = coeff_i64(d, 0);
            const long long b = coeff_i64(d, 1);
            const long long e = s.param();
            long total = 0;
            for (long long k = 0; k <= a; ++k) {
                const long long w = b - k * e + 1;
                if (w > 0) total += static_cast<long>(w);
            }
            return total;
        }
        case SurfaceKind::BlowupPlane:
            break;
    }
    throw NotApplicable("h0 on blowup-p2 is Monte-Carlo; use dim_fat_point_system");
}

namespace {

Rat parse_rat(const std::string& text, std::size_t& pos) {
    Int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign = -1;
        ++pos;
    }
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || pos - start > 40) {
        throw ParseError("bad rational at position " + std::to_string(start));
    }
    Int num(text.substr(start, pos - start));
    Int den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        const std::size_t dstart = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == dstart || pos - dstart > 40) {
            throw ParseError("bad denominator at position " + std::to_string(dstart));
        }
        den = Int(text.substr(dstart, pos - dstart));
        if (den == 0) throw ParseError("zero denominator in point coordinate");
    }
    return Rat(sign * num, den);
}

} // namespace

Placement parse_placement(const std::string& text) {
    std::string t;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    }
    if (t.empty()) throw ParseError("empty placement");
    if (t.rfind("random:", 0) == 0) {
        const std::string digits = t.substr(7);
        if (digits.empty() || digits.size() > 20 ||
            !std::all_of(digits.begin(), digits.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw ParseError("seed must be an unsigned integer");
        }
        errno = 0;
        const std::uint64_t seed = std::strtoull(digits.c_str(), nullptr, 10);
        if (errno != 0) throw ParseError("seed out of range");
        return Placement::random_seeded(seed);
    }
    std::vector<RationalPoint> pts;
    std::size_t pos = 0;
    while (pos < t.size()) {
        if (t[pos] != '(') throw ParseError("expected '(' at position " + std::to_string(pos));
        ++pos;
        const Rat x = parse_rat(t, pos);
        if (pos >= t.size() || t[pos] != ',') {
            throw ParseError("expected ',' at position " + std::to_string(pos));
        }
        ++pos;
        const Rat y = parse_rat(t, pos);
        if (pos >= t.size() || t[pos] != ')') {
            throw ParseError("expected ')' at position " + std::to_string(pos));
        }
        ++pos;
        pts.push_back({x, y});
        if (pos < t.size()) {
            if (t[pos] != ';') {
                throw ParseError("expected ';' at position " + std::to_string(pos));
            }
            ++pos;
            if (pos == t.size()) throw ParseError("trailing ';' in placement");
        }
    }
    return Placement::explicit_points(std::move(pts));
}

namespace {

struct ModPoint {
    std::uint64_t x;
    std::uint64_t y;
};

// n mod p with the representative in [0, p).
std::uint64_t int_mod(const Int& n, const PrimeField& f) {
    Int r = n % Int(f.p);
    if (r < 0) r += Int(f.p);
    return static_cast<std::uint64_t>(r);
}

// Fails (returns false) when the denominator vanishes mod p.
bool rat_mod(const Rat& v, const PrimeField& f, std::uint64_t& out) {
    const std::uint64_t den = int_mod(Int(boost::multiprecision::denominator(v)), f);
    if (den == 0) return false;
    const std::uint64_t num = int_mod(Int(boost::multiprecision::numerator(v)), f);
    out = f.mul(num, f.inv(den));
    return true;
}

std::uint64_t falling(std::uint64_t base, unsigned k, const PrimeField& f) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < k; ++i) out = f.mul(out, f.sub(base % f.p, i));
    return out;
}

// One matrix row per partial derivative of order < mult, evaluated at pt.
void append_point_rows(std::vector<std::vector<std::uint64_t>>& rows,
                       const std::vector<SectionMonomial>& basis, const ModPoint& pt,
                       unsigned mult, const PrimeField& f) {
    for (unsigned t = 0; t < mult; ++t) {
        for (unsigned a = 0; a <= t; ++a) {
            const unsigned dx = t - a, dy = a;
            std::vector<std::uint64_t> row(basis.size(), 0);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                const unsigned j = static_cast<unsigned>(basis[i].xdeg);
                const unsigned k = static_cast<unsigned>(basis[i].ydeg);
                if (j < dx || k < dy) continue;
                std::uint64_t v = f.mul(falling(j, dx, f), falling(k, dy, f));
                v = f.mul(v, f.pow(pt.x, j - dx));
                v = f.mul(v, f.pow(pt.y, k - dy));
                row[i] = v;
            }
            rows.push_back(std::move(row));
        }
    }
}

bool taken(const std::vector<ModPoint>& pts, const ModPoint& q) {
    return std::any_of(pts.begin(), pts.end(),
                       [&](const ModPoint& p) { return p.x == q.x && p.y == q.y; });
}

ModPoint draw_point(Rng& rng, const PrimeField& f, const std::vector<ModPoint>& existing) {
    for (;;) {
        const ModPoint q{1 + rng.below(f.p - 1), 1 + rng.below(f.p - 1)};
        if (!taken(existing, q)) return q;
    }
}

} // namespace

DimensionResult dim_fat_point_system(const SurfaceModel& s, const DivisorClass& d,
                                     const FatPointSpec& fat, unsigned trials,
                                     unsigned prime_bits) {
    check_size(s, d);
    if (trials == 0) throw PreconditionFailed("at least one trial is required");

    // On blowup-p2 the class rH - sum mu_i E_i is scored as the plane system of
    // degree r with extra points of multiplicity mu_i at random positions.
    std::vector<unsigned> exc_mults;
    SurfaceModel chart = s;
    DivisorClass chart_d = d;
    if (s.kind() == SurfaceKind::BlowupPlane) {
        for (std::size_t i = 1; i < d.size(); ++i) {
            const long long c = coeff_i64(d, i);
            exc_mults.push_back(c < 0 ? static_cast<unsigned>(-c) : 0u);
        }
        chart = SurfaceModel::projective_plane();
        chart_d = DivisorClass({d[0]});
    }

    const SectionBasis basis = section_basis(chart, chart_d);
    const long n_cols = static_cast<long>(basis.monomials.size());
    if (n_cols != h0(chart, chart_d)) {
        throw PreconditionFailed("section basis does not match its closed count");
    }
    if (n_cols > kMaxSystemSize) {
        throw UnsupportedInput("linear system too large for dense evaluation");
    }

    const auto& user_mults = fat.multiplicities;
    if (!fat.placement.random && fat.placement.points.size() != user_mults.size()) {
        throw DimensionMismatch("placement lists " +
                                std::to_string(fat.placement.points.size()) +
                                " points for " + std::to_string(user_mults.size()) +
                                " multiplicities");
    }
    long n_rows = 0;
    for (const auto& list : {exc_mults, user_mults}) {
        for (unsigned m : list) {
            if (m > kMaxMultiplicity) throw UnsupportedInput("multiplicity too large");
            n_rows += static_cast<long>(m) * (m + 1) / 2;
        }
    }
    if (n_rows > kMaxSystemSize) {
        throw UnsupportedInput("too many point conditions for dense evaluation");
    }

    std::string note;
    if (!fat.placement.random) {
        const auto& pts = fat.placement.points;
        for (std::size_t i = 0; i < pts.size() && note.empty(); ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                if (pts[i] == pts[j]) {
                    note = "placement has duplicate points";
                    break;
                }
            }
        }
    }

    DimensionResult result;
    result.h0 = n_cols;
    for (unsigned t = 0; t < trials; ++t) {
        const std::uint64_t tseed =
            splitmix64(fat.placement.seed ^ (0x9E3779B97F4A7C15ULL * (t + 1)));
        Rng rng(tseed);

        // The prime is redrawn while any explicit coordinate has a vanishing
        // denominator mod p or two distinct points collide mod p.
        PrimeField field{0};
        std::vector<ModPoint> user_pts;
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 64) {
                throw UnsupportedInput("no usable prime for the explicit placement");
            }
            field.p = random_prime(rng, prime_bits);
            if (fat.placement.random) break;
            user_pts.clear();
            bool ok = true;
            const auto& epts = fat.placement.points;
            for (std::size_t i = 0; i < epts.size(); ++i) {
                ModPoint q{0, 0};
                ok = rat_mod(epts[i].x, field, q.x) && rat_mod(epts[i].y, field, q.y);
                if (!ok) break;
                bool dup_exact = false;
                for (std::size_t j = 0; j < i; ++j) {
                    if (epts[j] == epts[i]) {
                        dup_exact = true;
                        break;
                    }
                }
                if (!dup_exact && taken(user_pts, q)) {
                    ok = false;
                    break;
                }
                user_pts.push_back(q);
            }
            if (ok) break;
        }

        std::vector<ModPoint> pts;
        std::vector<unsigned> mults;
        for (unsigned m : exc_mults) {
            pts.push_back(draw_point(rng, field, pts));
            mults.push_back(m);
        }
        if (fat.placement.random) {
            for (unsigned m : user_mults) {
                pts.push_back(draw_point(rng, field, pts));
                mults.push_back(m);
            }
        } else {
            for (std::size_t i = 0; i < user_pts.size(); ++i) {
                pts.push_back(user_pts[i]);
                mults.push_back(user_mults[i]);
            }
        }

        std::vector<std::vector<std::uint64_t>> rows;
        rows.reserve(static_cast<std::size_t>(n_rows));
        for (std::size_t i = 0; i < pts.size(); ++i) {
            append_point_rows(rows, basis.monomials, pts[i], mults[i], field);
        }
        const long rank = static_cast<long>(
            mod_rank(std::move(rows), static_cast<std::size_t>(n_cols), field));
        result.trials.push_back({field.p, tseed, rank, note});
    }

    std::sort(result.trials.begin(), result.trials.end(),
              [](const TrialRecord& a, const TrialRecord& b) {
                  return a.prime != b.prime ? a.prime < b.prime : a.seed < b.seed;
              });
    result.rank = 0;
    for (const auto& tr : result.trials) result.rank = std::max(result.rank, tr.rank);
    result.agreed = std::all_of(result.trials.begin(), result.trials.end(),
                                [&](const TrialRecord& tr) { return tr.rank == result.rank; });
    result.projective_dim = result.h0 - result.rank - 1;
    return result;
}

long expected_dim(const SurfaceModel& s, const DivisorClass& d,
                  const std::vector<unsigned>& mults) {
    check_size(s, d);
    long ambient;
    long conditions = 0;
    if (s.kind() == SurfaceKind::BlowupPlane) {
        const SurfaceModel plane = SurfaceModel::projective_plane();
        ambient = h0(plane, DivisorClass({d[0]}));
        for (std::size_t i = 1; i < d.size(); ++i) {
            const long long c = coeff_i64(d, i);
            if (c < 0) conditions += static_cast<long>(-c * (-c + 1) / 2);
        }
    } else {
        ambient = h0(s, d);
    }
    for (unsigned m : mults) {
        conditions += static_cast<long>(m) * (m + 1) / 2;
    }
    return std::max(-1L, ambient - 1 - conditions);
}

long defect(const SurfaceModel& s, const DivisorClass& d, const FatPointSpec& fat,
            unsigned trials, unsigned prime_bits) {
    const DimensionResult actual = dim_fat_point_system(s, d, fat, trials, prime_bits);
    const long expected = expected_dim(s, d, fat.multiplicities);
    return std::max(0L, actual.projective_dim - expected);
}

bool verify_double_fiber(const SurfaceModel& s, const DivisorClass& d, std::uint64_t seed,
                         unsigned trials, unsigned prime_bits) {
    if (s.kind() != SurfaceKind::Hirzebruch) {
        throw NotApplicable("the double-fiber check needs a hirzebruch model");
    }
    check_size(s, d);
    const long long a = coeff_i64(d, 0);
    const long long b = coeff_i64(d, 1);
    if (a < 0 || b < 2) {
        throw PreconditionFailed("need a >= 0 and b >= 2 so that D - 2F has sections");
    }
    const DivisorClass d_minus_2f({Int(a), Int(b - 2)});

    // Both runs share the trial seed, so trial t uses the same prime and the
    // same first random point in each system.
    const FatPointSpec triple{{3}, Placement::random_seeded(seed)};
    const FatPointSpec simple{{1}, Placement::random_seeded(seed)};
    const DimensionResult lhs = dim_fat_point_system(s, d, triple, trials, prime_bits);
    const DimensionResult rhs =
        dim_fat_point_system(s, d_minus_2f, simple, trials, prime_bits);
    return lhs.projective_dim == rhs.projective_dim;
}

} // namespace tpd
