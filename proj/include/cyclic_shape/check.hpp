#pragma once

// The invariant suite behind `check`: coefficient reconciliation, the
// Kronecker identity, agreement of the two trace-zero assemblies, the
// determinant law and a golden comparison.

#include <optional>
#include <string>
#include <vector>

#include "cyclic_shape/matrix.hpp"
#include "cyclic_shape/ramification.hpp"

namespace cyclic_shape {

struct InvariantResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs the five invariants in order and stops after the first failure.
/// The golden identity compares against `golden` when given, against the
/// printed reference matrix for the reference input, and otherwise against
/// the entrywise congruence-pattern evaluation.
std::vector<InvariantResult> run_invariant_suite(Degree m, const FactoredDiscriminant& disc,
                                                 const std::optional<IntMatrix>& golden = std::nullopt);

}  // namespace cyclic_shape
