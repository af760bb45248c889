#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace etgds {

/// Exact arbitrary-precision count.
using BigCount = boost::multiprecision::cpp_int;

/// Plain decimal digits, never scientific notation.
inline std::string to_decimal(const BigCount& value) { return value.str(); }

}  // namespace etgds
