#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tpd {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& n) { return n.str(); }

inline std::string to_string(const Rat& q) {
    Int num = numerator(q);
    Int den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// n must fit in a signed 64-bit integer; report serialization relies on this.
long long to_int64(const Int& n);

} // namespace tpd
