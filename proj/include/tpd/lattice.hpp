#pragma once

#include "tpd/errors.hpp"
#include "tpd/numeric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace tpd {

enum class SurfaceKind { ProjectivePlane, Hirzebruch, BlowupPlane };

// Coefficient vector of a divisor class in the basis of its surface model.
class DivisorClass {
public:
    DivisorClass() = default;
    explicit DivisorClass(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {}

    std::size_t size() const { return coeffs_.size(); }
    const Int& operator[](std::size_t i) const { return coeffs_[i]; }
    Int& operator[](std::size_t i) { return coeffs_[i]; }

    bool operator==(const DivisorClass&) const = default;

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator*(const Int& s) const;

private:
    std::vector<Int> coeffs_;
};

// Picard lattice of one of the implemented rational surfaces:
//   p2            basis H,          form (1)
//   hirzebruch:e  basis C0, F,      form ((-e,1),(1,0))
//   blowup-p2:n   basis H, E1..En,  form diag(1,-1,...,-1)
class SurfaceModel {
public:
    static SurfaceModel projective_plane();
    static SurfaceModel hirzebruch(unsigned e);
    static SurfaceModel blowup_plane(unsigned n, unsigned max_n = 16);

    // Grammar: p2 | hirzebruch:<e> | blowup-p2:<n>
    static SurfaceModel from_spec(const std::string& spec);

    SurfaceKind kind() const { return kind_; }
    unsigned param() const { return param_; }
    std::size_t basis_size() const { return labels_.size(); }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const std::vector<std::vector<Int>>& intersection_matrix() const { return matrix_; }
    const DivisorClass& canonical() const { return canonical_; }
    std::string spec_string() const;

    // Signed integer combination of basis labels, e.g. "3C0+8F", "-2H+E1+E2".
    // Whitespace-insensitive, case-sensitive. |coefficient| <= 10^6.
    DivisorClass parse_divisor(const std::string& text) const;
    std::string format_divisor(const DivisorClass& d) const;

private:
    SurfaceModel() = default;

    SurfaceKind kind_ = SurfaceKind::ProjectivePlane;
    unsigned param_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::vector<Int>> matrix_;
    DivisorClass canonical_;
};

// Intersection number D1.D2 on the surface lattice.
Int intersect(const SurfaceModel& s, const DivisorClass& d1, const DivisorClass& d2);

const DivisorClass& canonical_class(const SurfaceModel& s);

// (D^2 + D.K)/2 + 1 as an exact rational.
Rat arithmetic_genus(const SurfaceModel& s, const DivisorClass& d);

// Largest self-intersection R^2 an irreducible curve R can have given
// deg_lk = (L-K).R in {1,2,3} and its arithmetic genus.  A degree-1 or 2
// embedded curve is rational and a degree-3 one has genus 0 or 1; a genus-1
// curve needs embedding degree >= 3, which sharpens the bound L.R >= 1 to 3.
int curve_selfint_bound(int deg_lk, int genus);

} // namespace tpd
