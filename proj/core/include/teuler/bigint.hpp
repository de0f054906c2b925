#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace teuler {

// Exact signed arbitrary-precision integer. Walk counts grow like (k*m)^m,
// so every count in the library uses this type.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace teuler
