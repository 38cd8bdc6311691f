#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace stratumforge {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s);

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// floor(a/b) for exact integers
Int floor_div(const Int& a, const Int& b);
inline Int floor_rat(const Rat& r) { return floor_div(rat_num(r), rat_den(r)); }

} // namespace stratumforge
