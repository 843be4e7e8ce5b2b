#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gpi {

using Integer = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Integer& value) { return value.str(); }

}  // namespace gpi
