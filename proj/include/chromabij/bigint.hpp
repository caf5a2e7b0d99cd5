#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace chromabij {

/// All counts and coefficients are exact; nothing in this library touches
/// floating point.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace chromabij
