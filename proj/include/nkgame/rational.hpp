#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace nkgame {

// Exact arithmetic for transition probabilities, drifts and small linear solves.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace nkgame
