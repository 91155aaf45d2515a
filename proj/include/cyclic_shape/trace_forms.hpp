#pragma once

// Assembly of the trace-zero Gram matrix A(d), the full trace Gram matrix,
// the quadratic-form coefficients c_{ij}, and the discriminant / shape
// equivalence decisions built on them.

#include <map>
#include <utility>

#include "cyclic_shape/coefficients.hpp"
#include "cyclic_shape/matrix.hpp"
#include "cyclic_shape/ramification.hpp"

namespace cyclic_shape {

struct TraceZeroForm {
    RamificationProfile profile;
    CoefficientTable table;
    IntMatrix gram;  // dimension m - 1

    Degree degree() const { return profile.degree(); }
};

struct FullTraceForm {
    RamificationProfile profile;
    CoefficientTable table;
    IntMatrix gram;  // dimension m
};

/// (B_m^T A_d B_m) with the first row and column removed.
IntMatrix build_hat_A(Degree m, Degree d);

/// sum_{d | m, d != m} a_d * hat A_d.
IntMatrix assemble_trace_zero(Degree m, const CoefficientTable& table);
/// (sum_{d | m, d < m} a_d * (1_d (x) A'_{m/d})) with the first row and column
/// removed; an independent assembly of the same matrix.
IntMatrix assemble_kronecker_sum(Degree m, const CoefficientTable& table);
/// sum_{d | m} a_d A_d.
IntMatrix assemble_full_trace(Degree m, const CoefficientTable& table);

TraceZeroForm build_trace_zero(Degree m, const FactoredDiscriminant& disc, Mode mode = Mode::strict);
FullTraceForm build_full_trace(Degree m, const FactoredDiscriminant& disc, Mode mode = Mode::strict);

/// kappa_d(i, j): 2 if i = j (mod m/d), -1 if i = j +- 1 (mod m/d), else 0,
/// with 1-based indices of the trace-zero basis. For m/d = 2 both neighbours
/// coincide and contribute -2.
long kronecker_pattern(Degree m, Degree d, std::size_t i, std::size_t j);

/// c_{ii} = gram(i, i) and c_{ij} = 2 gram(i, j) for i < j, where gram(i, j)
/// is evaluated from the congruence pattern, not read from the matrix.
std::map<std::pair<std::size_t, std::size_t>, BigInt> quad_form_coeffs(Degree m, const FactoredDiscriminant& disc,
                                                                        Mode mode = Mode::strict);

/// Trace-zero classes of two strict discriminants of the same degree.
/// Equal discriminants must give entrywise equal matrices; different ones
/// must be separated by det = m * d. Either failure throws InvariantError.
bool same_trace_zero_class(Degree m, const FactoredDiscriminant& left, const FactoredDiscriminant& right);

/// Isometry up to positive rational scaling, for positive definite forms.
bool shape_equal(const IntMatrix& left, const IntMatrix& right);
bool shape_equal(const TraceZeroForm& left, const TraceZeroForm& right);

}  // namespace cyclic_shape
