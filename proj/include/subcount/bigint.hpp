#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace subcount {

// Counts are exact arbitrary-precision integers end to end; pattern counts
// overflow 64 bits already on moderately dense inputs.
using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(std::uint64_t n, unsigned k);

}  // namespace subcount
