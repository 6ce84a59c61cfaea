#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace fracrank {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using QVec = std::vector<Rat>;

// "p/q" (or plain "p") with q > 0 after normalization.
Rat parse_rat(const std::string& s);
std::string format_rat(const Rat& q);

// Exact conversion; every finite double is a dyadic rational.
Rat rat_from_double(double x);
double rat_to_double(const Rat& q);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Integer power with possibly negative exponent (base != 0 for e < 0).
Rat rat_pow(const Rat& base, long e);

// floor(a) as an exact integer.
Int rat_floor(const Rat& a);

// Smallest integer s >= 1 with s*s*q >= target. q > 0 required.
Int min_int_sqrt_scale(const Rat& q, const Rat& target);

Rat dot(const QVec& a, const QVec& b);
Rat norm2(const QVec& a);  // squared euclidean norm

}  // namespace fracrank
