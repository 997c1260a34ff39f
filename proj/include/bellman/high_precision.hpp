#pragma once

#include <boost/multiprecision/float128.hpp>

namespace bellman {

/// Quad precision (113-bit mantissa, ~34 significant digits). Used by the
/// constant oracles and the scalar inequality evaluations only.
using HighPrec = boost::multiprecision::float128;

}  // namespace bellman
