#include "tpd/localalg.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

namespace tpd {

Monomial Monomial::lcm(const Monomial& o) const {
    return {std::max(dx, o.dx), std::max(dy, o.dy)};
}

Monomial Monomial::quotient_by(const Monomial& o) const {
    return {dx - o.dx, dy - o.dy};
}

std::string Monomial::str() const {
    std::string out;
    if (dx > 0) {
        out += "x";
        if (dx > 1) out += "^" + std::to_string(dx);
    }
    if (dy > 0) {
        if (!out.empty()) out += "*";
        out += "y";
        if (dy > 1) out += "^" + std::to_string(dy);
    }
    return out;
}

TruncatedPolynomial::TruncatedPolynomial(int truncation) : truncation_(truncation) {
    if (truncation < 1) throw PreconditionFailed("truncation must be >= 1");
}

int TruncatedPolynomial::order() const {
    if (terms_.empty()) return truncation_;
    int best = truncation_;
    for (const auto& [m, c] : terms_) best = std::min(best, m.degree());
    return best;
}

Rat TruncatedPolynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void TruncatedPolynomial::set(const Monomial& m, const Rat& c) {
    if (m.dx < 0 || m.dy < 0) throw PreconditionFailed("negative exponent");
    if (m.degree() >= truncation_) return;
    if (c == 0) {
        terms_.erase(m);
    } else {
        terms_[m] = c;
    }
}

TruncatedPolynomial TruncatedPolynomial::operator+(const TruncatedPolynomial& o) const {
    if (truncation_ != o.truncation_) throw PreconditionFailed("truncation mismatch");
    TruncatedPolynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.set(m, out.coeff(m) + c);
    return out;
}

TruncatedPolynomial TruncatedPolynomial::operator-(const TruncatedPolynomial& o) const {
    if (truncation_ != o.truncation_) throw PreconditionFailed("truncation mismatch");
    TruncatedPolynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.set(m, out.coeff(m) - c);
    return out;
}

TruncatedPolynomial TruncatedPolynomial::scaled(const Rat& c) const {
    TruncatedPolynomial out(truncation_);
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_[m] = v * c;
    return out;
}

TruncatedPolynomial TruncatedPolynomial::shifted(const Monomial& s) const {
    TruncatedPolynomial out(truncation_);
    for (const auto& [m, v] : terms_) out.set(m.times(s), v);
    return out;
}

TruncatedPolynomial TruncatedPolynomial::multiply(const TruncatedPolynomial& o) const {
    if (truncation_ != o.truncation_) throw PreconditionFailed("truncation mismatch");
    TruncatedPolynomial out(truncation_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            const Monomial m = m1.times(m2);
            if (m.degree() >= truncation_) continue;
            out.set(m, out.coeff(m) + c1 * c2);
        }
    }
    return out;
}

TruncatedPolynomial TruncatedPolynomial::derivative_x() const {
    TruncatedPolynomial out(truncation_);
    for (const auto& [m, c] : terms_) {
        if (m.dx == 0) continue;
        out.set({m.dx - 1, m.dy}, c * m.dx);
    }
    return out;
}

TruncatedPolynomial TruncatedPolynomial::derivative_y() const {
    TruncatedPolynomial out(truncation_);
    for (const auto& [m, c] : terms_) {
        if (m.dy == 0) continue;
        out.set({m.dx, m.dy - 1}, c * m.dy);
    }
    return out;
}

TruncatedPolynomial TruncatedPolynomial::linear_substitution(const Rat& a, const Rat& b,
                                                             const Rat& c, const Rat& d) const {
    if (a * d - b * c == 0) throw PreconditionFailed("substitution matrix is singular");
    TruncatedPolynomial lx(truncation_), ly(truncation_);
    lx.set({1, 0}, a);
    lx.set({0, 1}, b);
    ly.set({1, 0}, c);
    ly.set({0, 1}, d);

    int max_dx = 0, max_dy = 0;
    for (const auto& [m, v] : terms_) {
        max_dx = std::max(max_dx, m.dx);
        max_dy = std::max(max_dy, m.dy);
    }
    std::vector<TruncatedPolynomial> px, py;
    TruncatedPolynomial one(truncation_);
    one.set({0, 0}, 1);
    px.push_back(one);
    py.push_back(one);
    for (int i = 1; i <= max_dx; ++i) px.push_back(px.back().multiply(lx));
    for (int j = 1; j <= max_dy; ++j) py.push_back(py.back().multiply(ly));

    TruncatedPolynomial out(truncation_);
    for (const auto& [m, v] : terms_) {
        out = out + px[m.dx].multiply(py[m.dy]).scaled(v);
    }
    return out;
}

std::string TruncatedPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        const Rat mag = neg ? Rat(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const std::string ms = m.str();
        if (ms.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += ms;
        } else {
            out += to_string(mag) + "*" + ms;
        }
    }
    return out;
}

// --- polynomial parser ----------------------------------------------------

namespace {

class PolyParser {
public:
    PolyParser(const std::string& text, int truncation) : truncation_(truncation) {
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
        }
    }

    TruncatedPolynomial parse() {
        if (text_.empty()) throw ParseError("empty polynomial expression");
        TruncatedPolynomial out = expr();
        if (pos_ != text_.size()) {
            throw ParseError("unexpected character '" + std::string(1, text_[pos_]) +
                             "' at position " + std::to_string(pos_));
        }
        return out;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool starts_atom() const {
        const char c = peek();
        return c == 'x' || c == 'y' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }

    TruncatedPolynomial expr() {
        TruncatedPolynomial out(truncation_);
        bool first = true;
        while (true) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                break;
            }
            TruncatedPolynomial t = term();
            out = sign < 0 ? out - t : out + t;
            first = false;
        }
        return out;
    }

    TruncatedPolynomial term() {
        TruncatedPolynomial out = factor();
        while (true) {
            if (peek() == '*') {
                ++pos_;
                out = out.multiply(factor());
            } else if (starts_atom()) {
                out = out.multiply(factor());
            } else {
                break;
            }
        }
        return out;
    }

    TruncatedPolynomial factor() {
        TruncatedPolynomial base = atom();
        if (peek() == '^') {
            ++pos_;
            const unsigned long e = read_uint(1000);
            TruncatedPolynomial out(truncation_);
            out.set({0, 0}, 1);
            for (unsigned long i = 0; i < e; ++i) {
                out = out.multiply(base);
                if (out.is_zero()) break;
            }
            return out;
        }
        return base;
    }

    TruncatedPolynomial atom() {
        const char c = peek();
        TruncatedPolynomial out(truncation_);
        if (c == 'x') {
            ++pos_;
            out.set({1, 0}, 1);
            return out;
        }
        if (c == 'y') {
            ++pos_;
            out.set({0, 1}, 1);
            return out;
        }
        if (c == '(') {
            ++pos_;
            out = expr();
            if (peek() != ')') throw ParseError("missing ')' at position " + std::to_string(pos_));
            ++pos_;
            return out;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = read_int();
            Int den = 1;
            if (peek() == '/') {
                ++pos_;
                den = read_int();
                if (den == 0) throw ParseError("zero denominator in coefficient");
            }
            out.set({0, 0}, Rat(num, den));
            return out;
        }
        throw ParseError("expected x, y, a number or '(' at position " + std::to_string(pos_));
    }

    Int read_int() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError("expected a number at position " + std::to_string(pos_));
        }
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(text_[pos_++]);
        if (digits.size() > 40) throw ParseError("numeric literal too long");
        return Int(digits);
    }

    unsigned long read_uint(unsigned long bound) {
        const Int v = read_int();
        if (v > bound) throw ParseError("exponent exceeds " + std::to_string(bound));
        return static_cast<unsigned long>(v);
    }

    std::string text_;
    std::size_t pos_ = 0;
    int truncation_;
};

} // namespace

TruncatedPolynomial parse_polynomial(const std::string& text, int truncation) {
    return PolyParser(text, truncation).parse();
}

TruncatedPolynomial jet(const TruncatedPolynomial& f, int k) {
    if (k < 0 || k >= f.truncation()) {
        throw PreconditionFailed("jet degree must be in [0, truncation)");
    }
    TruncatedPolynomial out(f.truncation());
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() <= k) out.set(m, c);
    }
    return out;
}

// --- cubic jet classification ---------------------------------------------

std::string to_string(JetClass c) {
    switch (c) {
        case JetClass::ThreeDistinctLines: return "ThreeDistinctLines";
        case JetClass::DoublePlusSimple: return "DoublePlusSimple";
        case JetClass::TripleLine: return "TripleLine";
        case JetClass::LowerMultiplicity: return "LowerMultiplicity";
        case JetClass::Zero: return "Zero";
    }
    return "";
}

namespace {

// Univariate polynomials over Q as coefficient vectors, index = degree.
using UniPoly = std::vector<Rat>;

int uv_degree(const UniPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
        if (p[i] != 0) return i;
    }
    return -1;
}

UniPoly uv_rem(UniPoly a, const UniPoly& b) {
    const int db = uv_degree(b);
    for (int da = uv_degree(a); da >= db; da = uv_degree(a)) {
        const Rat q = a[da] / b[db];
        for (int i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
        a[da] = 0; // exact cancellation of the leading term
    }
    return a;
}

UniPoly uv_gcd(UniPoly a, UniPoly b) {
    while (uv_degree(b) >= 0) {
        UniPoly r = uv_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    const int d = uv_degree(a);
    if (d >= 0) {
        const Rat lead = a[d];
        for (auto& c : a) c /= lead;
    }
    return a;
}

// Homogeneous binary form of degree deg; c[i] is the coefficient of x^i y^(deg-i).
struct BForm {
    int deg;
    std::vector<Rat> c;

    bool zero() const {
        return std::all_of(c.begin(), c.end(), [](const Rat& v) { return v == 0; });
    }
};

// Multiplicity of the factor y, i.e. deg minus the top nonzero x-exponent.
int bf_y_valuation(const BForm& f) {
    for (int i = f.deg; i >= 0; --i) {
        if (f.c[i] != 0) return f.deg - i;
    }
    return f.deg + 1;
}

BForm bf_gcd(const BForm& f, const BForm& g) {
    if (f.zero()) return g;
    if (g.zero()) return f;
    const int vy = std::min(bf_y_valuation(f), bf_y_valuation(g));
    const UniPoly d = uv_gcd(f.c, g.c); // common roots [t:1] of the dehomogenizations
    const int dd = uv_degree(d);
    BForm out{dd + vy, std::vector<Rat>(dd + vy + 1, Rat(0))};
    for (int i = 0; i <= dd; ++i) out.c[i] = d[i];
    return out;
}

} // namespace

JetClass classify_cubic_jet(const std::array<Rat, 4>& cubic) {
    BForm f{3, {cubic[3], cubic[2], cubic[1], cubic[0]}};
    if (f.zero()) return JetClass::Zero;
    BForm fx{2, {f.c[1], f.c[2] * 2, f.c[3] * 3}};
    BForm fy{2, {f.c[0] * 3, f.c[1] * 2, f.c[2]}};
    const BForm g = bf_gcd(bf_gcd(f, fx), fy);
    const int d = g.zero() ? 0 : uv_degree(g.c) + bf_y_valuation(g);
    switch (d) {
        case 0: return JetClass::ThreeDistinctLines;
        case 1: return JetClass::DoublePlusSimple;
        case 2: return JetClass::TripleLine;
        default: break;
    }
    throw PreconditionFailed("cubic gcd degree out of range: " + std::to_string(d));
}

JetClass classify_germ_jet3(const TruncatedPolynomial& f) {
    if (f.truncation() < 4) {
        throw TruncationTooLow("truncation must be >= 4 to read the degree-3 jet");
    }
    const int ord = f.order();
    if (f.is_zero() || ord > 3) return JetClass::Zero;
    if (ord < 3) return JetClass::LowerMultiplicity;
    return classify_cubic_jet({f.coeff({3, 0}), f.coeff({2, 1}), f.coeff({1, 2}),
                               f.coeff({0, 3})});
}

// --- equimultiplicity ideal ------------------------------------------------

IdealPresentation equimultiplicity_ideal(const TruncatedPolynomial& f) {
    if (f.truncation() < 6) {
        throw PreconditionFailed("equimultiplicity ideal needs truncation >= 6");
    }
    if (f.is_zero() || f.order() != 3) {
        throw WrongMultiplicity("germ must have multiplicity exactly 3");
    }
    IdealPresentation ideal;
    ideal.truncation = f.truncation();
    ideal.generators.push_back(f.derivative_x());
    ideal.generators.push_back(f.derivative_y());
    for (const Monomial m : {Monomial{3, 0}, Monomial{2, 1}, Monomial{1, 2}, Monomial{0, 3}}) {
        TruncatedPolynomial p(f.truncation());
        p.set(m, 1);
        ideal.generators.push_back(p);
    }
    return ideal;
}

// --- colength by linear algebra --------------------------------------------

std::string Colength::str() const {
    return finite ? std::to_string(value) : "infinite-at-truncation";
}

IdealSpan::IdealSpan(const IdealPresentation& ideal)
    : truncation_(ideal.truncation), span_(0) {
    for (int d = 0; d < truncation_; ++d) {
        for (int dx = d; dx >= 0; --dx) basis_.push_back({dx, d - dx});
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
    span_ = RowSpan(basis_.size());
    for (const auto& g : ideal.generators) {
        if (g.is_zero()) continue;
        if (g.truncation() != truncation_) {
            throw PreconditionFailed("generator truncation differs from the ideal's");
        }
        const int max_shift = truncation_ - 1 - g.order();
        for (int d = 0; d <= max_shift; ++d) {
            for (int dx = d; dx >= 0; --dx) {
                const TruncatedPolynomial p = g.shifted({dx, d - dx});
                if (!p.is_zero()) span_.insert(vectorize(p));
            }
        }
    }
}

std::vector<Rat> IdealSpan::vectorize(const TruncatedPolynomial& f) const {
    std::vector<Rat> v(basis_.size(), Rat(0));
    for (const auto& [m, c] : f.terms()) v[index_.at(m)] = c;
    return v;
}

bool IdealSpan::contains(const TruncatedPolynomial& f) const {
    if (f.truncation() != truncation_) {
        throw PreconditionFailed("membership test needs matching truncations");
    }
    return span_.contains(vectorize(f));
}

Colength IdealSpan::colength() const {
    for (int dx = truncation_ - 1; dx >= 0; --dx) {
        std::vector<Rat> unit(basis_.size(), Rat(0));
        unit[index_.at({dx, truncation_ - 1 - dx})] = 1;
        if (!span_.contains(std::move(unit))) return {false, 0};
    }
    return {true, static_cast<long>(basis_.size() - span_.rank())};
}

Colength colength(const IdealPresentation& ideal) { return IdealSpan(ideal).colength(); }

Colength colength_auto(const std::vector<std::string>& generator_sources, int truncation,
                       int max_truncation) {
    int n = truncation;
    for (;;) {
        IdealPresentation ideal;
        ideal.truncation = n;
        for (const auto& src : generator_sources) {
            ideal.generators.push_back(parse_polynomial(src, n));
        }
        const Colength c = colength(ideal);
        if (c.finite || n >= max_truncation) return c;
        n = std::min(2 * n, max_truncation);
    }
}

// --- standard bases (Mora) -------------------------------------------------

namespace {

struct OrdTerm {
    Monomial m;
    Rat c;
};

// Nonzero terms sorted descending in the active local order, so the leading
// term is front() and total degrees never decrease along the vector.
struct OrdPoly {
    std::vector<OrdTerm> t;

    bool zero() const { return t.empty(); }
    const OrdTerm& lt() const { return t.front(); }
    int ecart() const { return t.back().m.degree() - t.front().m.degree(); }
};

OrdPoly to_ordpoly(const TruncatedPolynomial& p, const LocalOrder& ord) {
    OrdPoly f;
    for (const auto& [m, c] : p.terms()) f.t.push_back({m, c});
    std::sort(f.t.begin(), f.t.end(),
              [&](const OrdTerm& a, const OrdTerm& b) { return ord.greater(a.m, b.m); });
    return f;
}

TruncatedPolynomial to_truncated(const OrdPoly& f, int truncation) {
    TruncatedPolynomial out(truncation);
    for (const auto& t : f.t) out.set(t.m, t.c);
    return out;
}

// f + c * x^shift * g, truncated at degree N.
OrdPoly axpy(const OrdPoly& f, const Rat& c, const Monomial& shift, const OrdPoly& g,
             int n, const LocalOrder& ord) {
    OrdPoly out;
    out.t.reserve(f.t.size() + g.t.size());
    std::size_t i = 0, j = 0;
    auto g_term = [&](std::size_t k) -> OrdTerm {
        return {g.t[k].m.times(shift), c * g.t[k].c};
    };
    // Shifting every monomial by the same factor preserves the order, so both
    // sequences stay sorted; terms pushed past the truncation are dropped.
    while (j < g.t.size() && g_term(j).m.degree() >= n) ++j;
    while (i < f.t.size() || j < g.t.size()) {
        if (j >= g.t.size()) {
            out.t.push_back(f.t[i++]);
            continue;
        }
        const OrdTerm gt = g_term(j);
        if (i >= f.t.size()) {
            if (gt.m.degree() < n) out.t.push_back(gt);
            ++j;
            continue;
        }
        if (f.t[i].m == gt.m) {
            const Rat sum = f.t[i].c + gt.c;
            if (sum != 0) out.t.push_back({gt.m, sum});
            ++i;
            ++j;
        } else if (ord.greater(f.t[i].m, gt.m)) {
            out.t.push_back(f.t[i++]);
        } else {
            if (gt.m.degree() < n) out.t.push_back(gt);
            ++j;
        }
    }
    return out;
}

OrdPoly spoly(const OrdPoly& f, const OrdPoly& g, int n, const LocalOrder& ord) {
    const Monomial l = f.lt().m.lcm(g.lt().m);
    OrdPoly s;
    s = axpy(s, Rat(1) / f.lt().c, l.quotient_by(f.lt().m), f, n, ord);
    s = axpy(s, Rat(-1) / g.lt().c, l.quotient_by(g.lt().m), g, n, ord);
    return s;
}

// Mora weak normal form.  Reducers of smaller ecart are preferred; when the
// chosen reducer has larger ecart than h, the current h joins the reducer set.
// Each step strictly lowers the leading term, and there are finitely many
// monomials below the truncation, so the loop terminates.
OrdPoly normal_form(OrdPoly h, const std::vector<OrdPoly>& basis, int n,
                    const LocalOrder& ord) {
    std::deque<OrdPoly> added;
    std::vector<const OrdPoly*> reducers;
    reducers.reserve(basis.size());
    for (const auto& b : basis) reducers.push_back(&b);
    while (!h.zero()) {
        const OrdPoly* best = nullptr;
        for (const OrdPoly* g : reducers) {
            if (!g->lt().m.divides(h.lt().m)) continue;
            if (!best || g->ecart() < best->ecart()) best = g;
        }
        if (!best) break;
        if (best->ecart() > h.ecart()) {
            added.push_back(h);
            reducers.push_back(&added.back());
        }
        const Rat factor = h.lt().c / best->lt().c;
        h = axpy(h, -factor, h.lt().m.quotient_by(best->lt().m), *best, n, ord);
    }
    return h;
}

std::vector<OrdPoly> standard_basis_impl(const IdealPresentation& ideal) {
    const int n = ideal.truncation;
    std::vector<OrdPoly> basis;
    for (const auto& g : ideal.generators) {
        if (g.truncation() != n) {
            throw PreconditionFailed("generator truncation differs from the ideal's");
        }
        OrdPoly p = to_ordpoly(g, ideal.order);
        if (!p.zero()) basis.push_back(std::move(p));
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.push_back({i, j});
    }
    for (std::size_t next = 0; next < pairs.size(); ++next) {
        const auto [i, j] = pairs[next];
        OrdPoly h = normal_form(spoly(basis[i], basis[j], n, ideal.order), basis, n,
                                ideal.order);
        if (h.zero()) continue;
        for (std::size_t k = 0; k < basis.size(); ++k) pairs.push_back({k, basis.size()});
        basis.push_back(std::move(h));
    }
    return basis;
}

void require_finite_colength(const IdealPresentation& ideal) {
    if (!IdealSpan(ideal).colength().finite) {
        throw TruncationTooLow("colength is not finite at truncation " +
                               std::to_string(ideal.truncation) + "; raise it");
    }
}

} // namespace

std::vector<TruncatedPolynomial> standard_basis(const IdealPresentation& ideal) {
    require_finite_colength(ideal);
    std::vector<TruncatedPolynomial> out;
    for (const auto& p : standard_basis_impl(ideal)) {
        out.push_back(to_truncated(p, ideal.truncation));
    }
    return out;
}

std::vector<Monomial> leading_ideal(const IdealPresentation& ideal) {
    require_finite_colength(ideal);
    std::vector<Monomial> lead;
    for (const auto& p : standard_basis_impl(ideal)) lead.push_back(p.lt().m);
    std::sort(lead.begin(), lead.end());
    lead.erase(std::unique(lead.begin(), lead.end()), lead.end());
    std::vector<Monomial> minimal;
    for (const auto& m : lead) {
        bool redundant = false;
        for (const auto& g : minimal) {
            if (g.divides(m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(m);
    }
    return minimal;
}

std::vector<long> hilbert_samuel(const IdealPresentation& ideal) {
    const std::vector<Monomial> gens = leading_ideal(ideal);
    std::vector<long> dims;
    for (int d = 0;; ++d) {
        long count = 0;
        for (int dx = d; dx >= 0; --dx) {
            const Monomial m{dx, d - dx};
            const bool in_ideal = std::any_of(gens.begin(), gens.end(),
                                              [&](const Monomial& g) { return g.divides(m); });
            if (!in_ideal) ++count;
        }
        if (count == 0) break;
        dims.push_back(count);
    }
    return dims;
}

std::string to_string(CiNormalForm c) {
    switch (c) {
        case CiNormalForm::TypeX2Y2: return "TypeX2Y2";
        case CiNormalForm::TypeXY3: return "TypeXY3";
        case CiNormalForm::NotCompleteIntersection: return "NotCompleteIntersection";
        case CiNormalForm::OutOfScope: return "OutOfScope";
    }
    return "";
}

CiNormalForm ci_normal_form(const IdealPresentation& ideal) {
    if (ideal.truncation < 4) {
        throw TruncationTooLow("truncation must be >= 4 to test containment of (x,y)^3");
    }
    const IdealSpan span(ideal);
    for (const Monomial m : {Monomial{3, 0}, Monomial{2, 1}, Monomial{1, 2}, Monomial{0, 3}}) {
        TruncatedPolynomial p(ideal.truncation);
        p.set(m, 1);
        if (!span.contains(p)) {
            throw PreconditionFailed("ideal does not contain (x,y)^3 (missing " + m.str() +
                                     ")");
        }
    }
    const Colength cl = span.colength();
    if (cl.value < 3) {
        throw PreconditionFailed("colength must be >= 3, got " + cl.str());
    }

    IdealPresentation ytop = ideal;
    ytop.order = {TieBreak::YOverX};
    for (const Monomial& m : leading_ideal(ytop)) {
        if (m == Monomial{0, 1}) return CiNormalForm::OutOfScope;
    }

    IdealPresentation xtop = ideal;
    xtop.order = {TieBreak::XOverY};
    const std::vector<Monomial> lead = leading_ideal(xtop);

    using ML = std::vector<Monomial>;
    static const ML x2_xy2_y3{{2, 0}, {1, 2}, {0, 3}};
    static const ML x2_xy_y2{{2, 0}, {1, 1}, {0, 2}};
    static const ML x2_xy_y3{{2, 0}, {1, 1}, {0, 3}};
    static const ML x2_y2{{2, 0}, {0, 2}};
    static const ML x_y3{{1, 0}, {0, 3}};

    if (lead == x2_xy2_y3 || lead == x2_xy_y2) return CiNormalForm::NotCompleteIntersection;
    if (lead == x2_xy_y3 || lead == x2_y2) return CiNormalForm::TypeX2Y2;
    if (lead == x_y3) return CiNormalForm::TypeXY3;
    return CiNormalForm::OutOfScope;
}

} // namespace tpd
