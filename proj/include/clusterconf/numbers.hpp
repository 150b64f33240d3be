#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace clusterconf {

// Exact arithmetic everywhere: counts overflow 64-bit quickly (Bell(30) has 24
// digits) and Smith normal form must not truncate intermediate entries.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace clusterconf
