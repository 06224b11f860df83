#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace drinact {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace drinact
