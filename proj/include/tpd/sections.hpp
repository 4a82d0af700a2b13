#pragma once

#include "tpd/lattice.hpp"
#include "tpd/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tpd {

// Chart monomial x^xdeg * y^ydeg.  On a Hirzebruch surface, y tracks the
// C0-degree and x the fiber-base degree.
struct SectionMonomial {
    int xdeg = 0;
    int ydeg = 0;

    bool operator==(const SectionMonomial&) const = default;
};

struct SectionBasis {
    std::vector<SectionMonomial> monomials;
};

// Monomial basis of the sections of D in a dense affine chart:
//   p2, D = rH:              all monomials of total degree <= r
//   hirzebruch:e, D = aC0+bF: y^k x^j with 0 <= k <= a, 0 <= j <= b - k*e
// Empty when the class has no sections in range; blowup models are evaluated
// through dim_fat_point_system instead.
SectionBasis section_basis(const SurfaceModel& s, const DivisorClass& d);

// Count of the basis above, from the closed formulas.
long h0(const SurfaceModel& s, const DivisorClass& d);

struct RationalPoint {
    Rat x;
    Rat y;

    bool operator==(const RationalPoint&) const = default;
};

// Either uniformly random chart points derived from seed, or explicit points.
struct Placement {
    bool random = true;
    std::uint64_t seed = 0;
    std::vector<RationalPoint> points; // used when !random

    static Placement random_seeded(std::uint64_t seed) { return {true, seed, {}}; }
    static Placement explicit_points(std::vector<RationalPoint> pts) {
        return {false, 0, std::move(pts)};
    }

    bool operator==(const Placement&) const = default;
};

// Grammar: "random:<seed>" or "(x,y);(u,v);..." with exact rational entries.
Placement parse_placement(const std::string& text);

struct FatPointSpec {
    std::vector<unsigned> multiplicities;
    Placement placement;
};

struct TrialRecord {
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    long rank = 0;
    std::string note; // empty unless the input was degenerate

    bool operator==(const TrialRecord&) const = default;
};

struct DimensionResult {
    long projective_dim = -1; // h0 - rank - 1
    long h0 = 0;
    long rank = 0; // max over trials
    std::vector<TrialRecord> trials; // sorted by (prime, seed)
    bool agreed = true;

    bool operator==(const DimensionResult&) const = default;
};

// Projective dimension of the system D minus fat-point conditions: each point
// of multiplicity m kills the partial derivatives of order < m.  Ranks are
// exact mod a random prime in (2^(prime_bits-1), 2^prime_bits) per trial, at
// random (or the given) chart points.  On blowup-p2:n the system is evaluated
// as a plane system with the exceptional multiplicities at n random points.
DimensionResult dim_fat_point_system(const SurfaceModel& s, const DivisorClass& d,
                                     const FatPointSpec& fat, unsigned trials,
                                     unsigned prime_bits = 31);

// max(-1, (h0 - 1) - sum_i mult_i*(mult_i+1)/2)
long expected_dim(const SurfaceModel& s, const DivisorClass& d,
                  const std::vector<unsigned>& mults);

// max(0, actual - expected)
long defect(const SurfaceModel& s, const DivisorClass& d, const FatPointSpec& fat,
            unsigned trials, unsigned prime_bits = 31);

// True iff dim|D - 3p| = dim|(D - 2F) - p| at the same random point p, i.e. a
// triple point forces the fiber through it twice.  Hirzebruch only; requires
// D - 2F representable (a >= 0, b >= 2).
bool verify_double_fiber(const SurfaceModel& s, const DivisorClass& d,
                         std::uint64_t seed, unsigned trials = 3,
                         unsigned prime_bits = 31);

} // namespace tpd
