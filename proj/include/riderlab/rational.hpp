#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace riderlab {

using Int = boost::multiprecision::cpp_int;

/** Exact rational number. boost keeps it canonical: gcd(num, den) = 1 and
 *  den >= 1, which is exactly the invariant the rest of the code relies on. */
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

/** Least common denominator of a list of rationals: the smallest positive
 *  integer N such that N*r is an integer for every r in the list. */
inline Int lcd(const std::vector<Rat>& rs) {
    Int out = 1;
    for (const Rat& r : rs) out = lcm_int(out, den(r));
    return out;
}

/** "n" for integers, "n/d" otherwise; exact round-trip with parse_rat. */
inline std::string rat_to_string(const Rat& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

/** Parses "n" or "n/d" (d > 0 after canonicalization). Throws std::runtime_error
 *  on malformed input. */
Rat parse_rat(const std::string& s);

} // namespace riderlab
