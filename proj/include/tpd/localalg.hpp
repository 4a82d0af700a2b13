#pragma once

#include "tpd/errors.hpp"
#include "tpd/numeric.hpp"
#include "tpd/ratmat.hpp"

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace tpd {

struct Monomial {
    int dx = 0;
    int dy = 0;

    int degree() const { return dx + dy; }
    bool divides(const Monomial& o) const { return dx <= o.dx && dy <= o.dy; }
    Monomial lcm(const Monomial& o) const;
    Monomial quotient_by(const Monomial& o) const; // requires o.divides(*this)
    Monomial times(const Monomial& o) const { return {dx + o.dx, dy + o.dy}; }

    std::string str() const;

    bool operator==(const Monomial&) const = default;
    // Canonical storage order: total degree, then descending x-exponent.
    auto operator<=>(const Monomial& o) const {
        if (auto c = degree() <=> o.degree(); c != 0) return c;
        return dy <=> o.dy;
    }
};

enum class TieBreak { XOverY, YOverX };

// Local degree ordering: lower total degree is larger; ties are broken by the
// exponent of the preferred variable.
struct LocalOrder {
    TieBreak tie = TieBreak::XOverY;

    bool greater(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return tie == TieBreak::XOverY ? a.dx > b.dx : a.dy > b.dy;
    }
};

// Element of Q[[x,y]] known modulo (x,y)^N: every stored exponent pair has
// total degree < N, coefficients are exact rationals.
class TruncatedPolynomial {
public:
    explicit TruncatedPolynomial(int truncation);

    int truncation() const { return truncation_; }
    bool is_zero() const { return terms_.empty(); }
    // Minimal total degree of a nonzero term; truncation() for the zero element.
    int order() const;

    const std::map<Monomial, Rat>& terms() const { return terms_; }
    Rat coeff(const Monomial& m) const;
    void set(const Monomial& m, const Rat& c); // drops exponents of degree >= N

    TruncatedPolynomial operator+(const TruncatedPolynomial& o) const;
    TruncatedPolynomial operator-(const TruncatedPolynomial& o) const;
    TruncatedPolynomial scaled(const Rat& c) const;
    TruncatedPolynomial shifted(const Monomial& m) const; // multiply by x^m
    TruncatedPolynomial multiply(const TruncatedPolynomial& o) const;
    TruncatedPolynomial derivative_x() const;
    TruncatedPolynomial derivative_y() const;
    // x -> a*x + b*y, y -> c*x + d*y; requires ad - bc != 0.
    TruncatedPolynomial linear_substitution(const Rat& a, const Rat& b,
                                            const Rat& c, const Rat& d) const;

    bool operator==(const TruncatedPolynomial&) const = default;

    std::string str() const;

private:
    int truncation_;
    std::map<Monomial, Rat> terms_;
};

// Grammar: sums/differences of products of rational numbers (p or p/q) and
// powers of x and y, with parentheses; e.g. "x^2*y + 3*x^5 - y^4".
TruncatedPolynomial parse_polynomial(const std::string& text, int truncation);

// Terms of total degree <= k.  Requires 0 <= k < f.truncation().
TruncatedPolynomial jet(const TruncatedPolynomial& f, int k);

enum class JetClass {
    ThreeDistinctLines,
    DoublePlusSimple,
    TripleLine,
    LowerMultiplicity,
    Zero,
};

std::string to_string(JetClass c);

// Root-multiplicity pattern of a binary cubic c0*x^3 + c1*x^2y + c2*xy^2 + c3*y^3,
// read off the degree of gcd(f, f_x, f_y).  The zero cubic classifies as Zero.
JetClass classify_cubic_jet(const std::array<Rat, 4>& cubic);

// Degree-3 jet pattern of a germ: LowerMultiplicity when ord(f) < 3, Zero when
// ord(f) > 3, otherwise the cubic classification of its degree-3 part.
JetClass classify_germ_jet3(const TruncatedPolynomial& f);

struct IdealPresentation {
    std::vector<TruncatedPolynomial> generators;
    int truncation = 6;
    LocalOrder order{};
};

// For ord(f) = 3 and truncation >= 6: generators f_x, f_y, x^3, x^2y, xy^2, y^3.
IdealPresentation equimultiplicity_ideal(const TruncatedPolynomial& f);

struct Colength {
    bool finite = false;
    long value = 0; // meaningful only when finite

    bool operator==(const Colength&) const = default;
    std::string str() const;
};

// Row space of an ideal inside Q[x,y]/(x,y)^N; supports membership tests.
class IdealSpan {
public:
    explicit IdealSpan(const IdealPresentation& ideal);

    bool contains(const TruncatedPolynomial& f) const;
    // Finite iff every monomial of degree N-1 lies in the span.
    Colength colength() const;

private:
    std::vector<Rat> vectorize(const TruncatedPolynomial& f) const;

    int truncation_;
    std::vector<Monomial> basis_;
    std::map<Monomial, std::size_t> index_;
    RowSpan span_;
};

// dim_Q of R/(I + m^N); not finite when I does not contain m^(N-1).
Colength colength(const IdealPresentation& ideal);

// Doubles the truncation (up to max_truncation) while the colength is not
// finite, reparsing the generator sources each time.
Colength colength_auto(const std::vector<std::string>& generator_sources,
                       int truncation, int max_truncation = 12);

// Degree-truncated standard basis (Mora normal form, ecart-based reducer
// selection).  Requires finite colength at the working truncation.
std::vector<TruncatedPolynomial> standard_basis(const IdealPresentation& ideal);

// Minimal monomial generators of the leading ideal, canonically sorted.
std::vector<Monomial> leading_ideal(const IdealPresentation& ideal);

// Graded dimensions of R/L(I) by degree, trailing zeros trimmed.
std::vector<long> hilbert_samuel(const IdealPresentation& ideal);

enum class CiNormalForm {
    TypeX2Y2,               // analytically <x^2, y^2>
    TypeXY3,                // analytically <x, y^3>
    NotCompleteIntersection,
    OutOfScope,
};

std::string to_string(CiNormalForm c);

// Case split on the x>y leading ideal of an ideal containing (x,y)^3 with
// colength >= 3 (both checked).  A y>x pass first rejects presentations with a
// linear-in-y leading term, which the normal forms exclude:
//   <x^2,x*y^2,y^3>, <x^2,x*y,y^2>  -> NotCompleteIntersection
//   <x^2,x*y,y^3>,   <x^2,y^2>      -> TypeX2Y2
//   <x,y^3>                         -> TypeXY3
//   anything else                   -> OutOfScope
CiNormalForm ci_normal_form(const IdealPresentation& ideal);

} // namespace tpd
