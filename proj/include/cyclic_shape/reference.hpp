#pragma once

// The degree-9 reference input 7^6 13^6 19^8 and its trace-zero Gram matrix
// as printed, kept as literal data for golden comparisons.

#include "cyclic_shape/exact.hpp"
#include "cyclic_shape/matrix.hpp"

namespace cyclic_shape {

inline constexpr Degree kReferenceDegree = 9;

FactoredDiscriminant reference_discriminant();
IntMatrix reference_trace_zero_matrix();

}  // namespace cyclic_shape
