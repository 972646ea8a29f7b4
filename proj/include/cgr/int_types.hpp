#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace cgr {

// Every integer in the library is arbitrary precision; HNF intermediates
// overflow fixed width even on small inputs.
using Int = boost::multiprecision::cpp_int;
using Vec = std::vector<Int>;

/// Library-wide error type. Thrown on contract violations (mismatched rings,
/// division by zero, method inapplicable); validators report witnesses as
/// data instead of throwing.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Extended gcd: returns g = gcd(a,b) >= 0 and s,t with s*a + t*b = g.
struct Xgcd {
    Int g, s, t;
};

inline Xgcd xgcd(const Int& a, const Int& b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

/// Floor division (cpp_int's operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// gcd of all entries (0 for an all-zero vector).
inline Int content(const Vec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

inline bool is_zero(const Vec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline std::string to_string(const Int& x) { return x.str(); }

}  // namespace cgr
