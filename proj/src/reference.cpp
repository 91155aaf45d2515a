#include "cyclic_shape/reference.hpp"

namespace cyclic_shape {

FactoredDiscriminant reference_discriminant() { return FactoredDiscriminant(1, {{7, 6}, {13, 6}, {19, 8}}); }

IntMatrix reference_trace_zero_matrix() {
    return IntMatrix{
        {2318, -1159, 570, -1140, 570, 570, -1140, 570},
        {-1159, 2318, -1159, 570, -1140, 570, 570, -1140},
        {570, -1159, 2318, -1159, 570, -1140, 570, 570},
        {-1140, 570, -1159, 2318, -1159, 570, -1140, 570},
        {570, -1140, 570, -1159, 2318, -1159, 570, -1140},
        {570, 570, -1140, 570, -1159, 2318, -1159, 570},
        {-1140, 570, 570, -1140, 570, -1159, 2318, -1159},
        {570, -1140, 570, 570, -1140, 570, -1159, 2318},
    };
}

}  // namespace cyclic_shape
