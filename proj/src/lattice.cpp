#include "tpd/lattice.hpp"

#include <cctype>
#include <cstdlib>
#include <map>

namespace tpd {

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    if (size() != o.size()) throw DimensionMismatch("divisor basis sizes differ");
    std::vector<Int> c(coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
    return DivisorClass(std::move(c));
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    if (size() != o.size()) throw DimensionMismatch("divisor basis sizes differ");
    std::vector<Int> c(coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
    return DivisorClass(std::move(c));
}

DivisorClass DivisorClass::operator*(const Int& s) const {
    std::vector<Int> c(coeffs_);
    for (auto& v : c) v *= s;
    return DivisorClass(std::move(c));
}

SurfaceModel SurfaceModel::projective_plane() {
    SurfaceModel s;
    s.kind_ = SurfaceKind::ProjectivePlane;
    s.labels_ = {"H"};
    s.matrix_ = {{Int(1)}};
    s.canonical_ = DivisorClass({Int(-3)});
    return s;
}

SurfaceModel SurfaceModel::hirzebruch(unsigned e) {
    SurfaceModel s;
    s.kind_ = SurfaceKind::Hirzebruch;
    s.param_ = e;
    s.labels_ = {"C0", "F"};
    s.matrix_ = {{Int(-static_cast<long>(e)), Int(1)}, {Int(1), Int(0)}};
    s.canonical_ = DivisorClass({Int(-2), Int(-static_cast<long>(e) - 2)});
    return s;
}

SurfaceModel SurfaceModel::blowup_plane(unsigned n, unsigned max_n) {
    if (n < 1 || n > max_n) {
        throw UnsupportedInput("blowup-p2 supports between 1 and " + std::to_string(max_n) +
                               " points, got " + std::to_string(n));
    }
    SurfaceModel s;
    s.kind_ = SurfaceKind::BlowupPlane;
    s.param_ = n;
    s.labels_.push_back("H");
    for (unsigned i = 1; i <= n; ++i) s.labels_.push_back("E" + std::to_string(i));
    s.matrix_.assign(n + 1, std::vector<Int>(n + 1, Int(0)));
    s.matrix_[0][0] = 1;
    for (unsigned i = 1; i <= n; ++i) s.matrix_[i][i] = -1;
    std::vector<Int> k(n + 1, Int(1));
    k[0] = -3;
    s.canonical_ = DivisorClass(std::move(k));
    return s;
}

SurfaceModel SurfaceModel::from_spec(const std::string& spec) {
    if (spec == "p2") return projective_plane();
    auto parse_param = [&](const std::string& prefix) -> unsigned {
        const std::string num = spec.substr(prefix.size());
        if (num.empty()) throw ParseError("missing parameter in surface spec: " + spec);
        for (char c : num) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw ParseError("bad surface parameter: " + spec);
            }
        }
        if (num.size() > 6) throw ParseError("surface parameter too large: " + spec);
        return static_cast<unsigned>(std::stoul(num));
    };
    if (spec.rfind("hirzebruch:", 0) == 0) return hirzebruch(parse_param("hirzebruch:"));
    if (spec.rfind("blowup-p2:", 0) == 0) return blowup_plane(parse_param("blowup-p2:"));
    throw ParseError("unknown surface spec: " + spec +
                     " (expected p2 | hirzebruch:<e> | blowup-p2:<n>)");
}

std::string SurfaceModel::spec_string() const {
    switch (kind_) {
        case SurfaceKind::ProjectivePlane: return "p2";
        case SurfaceKind::Hirzebruch: return "hirzebruch:" + std::to_string(param_);
        case SurfaceKind::BlowupPlane: return "blowup-p2:" + std::to_string(param_);
    }
    return "";
}

namespace {
constexpr long kMaxCoefficient = 1000000;
} // namespace

DivisorClass SurfaceModel::parse_divisor(const std::string& text) const {
    std::string t;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    }
    if (t.empty()) throw ParseError("empty divisor expression");

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels_.size(); ++i) index[labels_[i]] = i;

    std::vector<Int> coeffs(labels_.size(), Int(0));
    std::size_t pos = 0;
    if (t == "0") return DivisorClass(std::move(coeffs));
    bool first = true;
    while (pos < t.size()) {
        long sign = 1;
        if (t[pos] == '+' || t[pos] == '-') {
            sign = t[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(pos) +
                             " in divisor: " + text);
        }
        first = false;
        long coeff = 1;
        if (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
            long v = 0;
            while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
                v = v * 10 + (t[pos] - '0');
                if (v > kMaxCoefficient) {
                    throw ParseError("divisor coefficient exceeds 10^6 in: " + text);
                }
                ++pos;
            }
            coeff = v;
        }
        if (pos >= t.size() || !std::isupper(static_cast<unsigned char>(t[pos]))) {
            throw ParseError("expected a basis label at position " + std::to_string(pos) +
                             " in divisor: " + text);
        }
        std::string label;
        label.push_back(t[pos++]);
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
            label.push_back(t[pos++]);
        }
        auto it = index.find(label);
        if (it == index.end()) {
            throw ParseError("unknown basis label '" + label + "' for surface " +
                             spec_string());
        }
        coeffs[it->second] += sign * coeff;
    }
    return DivisorClass(std::move(coeffs));
}

std::string SurfaceModel::format_divisor(const DivisorClass& d) const {
    if (d.size() != labels_.size()) throw DimensionMismatch("divisor basis sizes differ");
    std::string out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        const Int& c = d[i];
        if (c == 0) continue;
        if (c > 0 && !out.empty()) out += "+";
        if (c == -1) {
            out += "-";
        } else if (c != 1) {
            out += c.str();
        }
        out += labels_[i];
    }
    return out.empty() ? "0" : out;
}

Int intersect(const SurfaceModel& s, const DivisorClass& d1, const DivisorClass& d2) {
    const std::size_t n = s.basis_size();
    if (d1.size() != n || d2.size() != n) {
        throw DimensionMismatch("divisor does not match the " + std::to_string(n) +
                                "-dimensional basis of " + s.spec_string());
    }
    Int total = 0;
    const auto& m = s.intersection_matrix();
    for (std::size_t i = 0; i < n; ++i) {
        if (d1[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (m[i][j] == 0 || d2[j] == 0) continue;
            total += d1[i] * m[i][j] * d2[j];
        }
    }
    return total;
}

const DivisorClass& canonical_class(const SurfaceModel& s) { return s.canonical(); }

Rat arithmetic_genus(const SurfaceModel& s, const DivisorClass& d) {
    const Int d2 = intersect(s, d, d);
    const Int dk = intersect(s, d, s.canonical());
    return Rat(d2 + dk, 2) + 1;
}

int curve_selfint_bound(int deg_lk, int genus) {
    if (deg_lk < 1 || deg_lk > 3) {
        throw UnsupportedInput("curve_selfint_bound covers (L-K).R in {1,2,3}, got " +
                               std::to_string(deg_lk));
    }
    if (genus < 0 || genus > 1 || (deg_lk < 3 && genus != 0)) {
        throw UnsupportedInput("curve_selfint_bound covers (deg, genus) in "
                               "{(1,0),(2,0),(3,0),(3,1)}");
    }
    const int min_lr = genus == 1 ? 3 : 1;
    return deg_lk + 2 * (genus - 1) - min_lr;
}

} // namespace tpd
