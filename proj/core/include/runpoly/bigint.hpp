#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace runpoly {

// Counts reach n! and log-concavity checks square them.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace runpoly
