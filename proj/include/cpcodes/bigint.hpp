#ifndef CPCODES_BIGINT_HPP
#define CPCODES_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace cpcodes {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

}  // namespace cpcodes

#endif
