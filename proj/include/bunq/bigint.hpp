#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bunq {

/// Exact arbitrary-precision integer used for all series coefficients and counts.
using Int = boost::multiprecision::cpp_int;

} // namespace bunq
