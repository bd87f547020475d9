#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

namespace modasc {

using Integer = boost::multiprecision::cpp_int;

Integer binomial(long n, long k);
Integer factorial(std::size_t n);
Integer power(const Integer& base, std::size_t exp);

inline std::string to_string(const Integer& v) { return v.str(); }

}  // namespace modasc
