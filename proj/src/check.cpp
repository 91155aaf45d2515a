#include "cyclic_shape/check.hpp"

#include "cyclic_shape/coefficients.hpp"
#include "cyclic_shape/reference.hpp"
#include "cyclic_shape/trace_forms.hpp"

namespace cyclic_shape {

namespace {

InvariantResult coefficient_reconciliation(const TraceZeroForm& form) {
    InvariantResult r{"coefficient reconciliation", true, ""};
    const CoefficientTable system = coeff_system(form.profile);
    for (const auto& [d, entry] : form.table.entries()) {
        if (entry.value != system.at(d)) {
            r.passed = false;
            r.detail = "a_" + std::to_string(d) + " = " + to_string(entry.value) + " but the system gives " +
                       to_string(system.at(d));
            return r;
        }
    }
    const BigInt top = gram_eigen_on_divisor_classes(form.table, form.degree());
    if (top != 1) {
        r.passed = false;
        r.detail = "sum d a_d = " + to_string(top) + ", expected 1";
        return r;
    }
    r.detail = std::to_string(form.table.entries().size()) + " coefficients match the system; sum d a_d = 1";
    return r;
}

InvariantResult kronecker_identity(Degree m) {
    InvariantResult r{"Kronecker identity", true, ""};
    const IntMatrix B = build_B(m);
    for (auto d : divisors(m)) {
        const IntMatrix lhs = congruence(B, build_A_d(m, d));
        const bool ok = (d == m) ? lhs.is_zero() : lhs == kronecker(d, build_extended_A(m / d));
        if (!ok) {
            r.passed = false;
            r.detail = "B^T A_" + std::to_string(d) + " B differs from the block pattern";
            return r;
        }
    }
    r.detail = "all " + std::to_string(divisors(m).size()) + " divisors";
    return r;
}

InvariantResult assembly_agreement(const TraceZeroForm& form) {
    InvariantResult r{"kronecker-sum assembly", true, "minor of the Kronecker sum equals the hat-A assembly"};
    if (!(assemble_kronecker_sum(form.degree(), form.table) == form.gram)) {
        r.passed = false;
        r.detail = "minor of the Kronecker sum differs from the hat-A assembly";
    }
    return r;
}

InvariantResult determinant_law(const TraceZeroForm& form) {
    InvariantResult r{"determinant law", true, ""};
    const Degree m = form.degree();
    const BigInt d = form.profile.discriminant().value();
    const BigInt det_zero = det_exact(form.gram);
    const BigInt det_full = det_exact(assemble_full_trace(m, form.table));
    const BigInt want = BigInt(static_cast<unsigned long>(m)) * d;
    if (det_zero != want) {
        r.passed = false;
        r.detail = "det A = " + to_string(det_zero) + ", expected m*d = " + to_string(want);
    } else if (det_full != d) {
        r.passed = false;
        r.detail = "det of the full trace form = " + to_string(det_full) + ", expected d = " + to_string(d);
    } else {
        r.detail = "det A = " + to_string(det_zero) + " = m*d; det full = d";
    }
    return r;
}

IntMatrix pattern_matrix(Degree m, const FactoredDiscriminant& disc) {
    IntMatrix M(m - 1);
    for (const auto& [ij, c] : quad_form_coeffs(m, disc)) {
        const auto [i, j] = ij;
        if (i == j) {
            M(i, i) = c;
        } else {
            M(i, j) = M(j, i) = c / 2;
        }
    }
    return M;
}

InvariantResult golden_identity(const TraceZeroForm& form, const std::optional<IntMatrix>& golden) {
    InvariantResult r{"golden identity", true, ""};
    const Degree m = form.degree();
    IntMatrix expected;
    std::string source;
    if (golden) {
        expected = *golden;
        source = "fixture";
    } else if (m == kReferenceDegree && form.profile.discriminant() == reference_discriminant()) {
        expected = reference_trace_zero_matrix();
        source = "printed reference";
    } else {
        expected = pattern_matrix(m, form.profile.discriminant());
        source = "congruence pattern";
    }
    if (expected.dim() != form.gram.dim()) {
        r.passed = false;
        r.detail = source + " has dimension " + std::to_string(expected.dim()) + ", expected " +
                   std::to_string(form.gram.dim());
        return r;
    }
    for (std::size_t i = 1; i <= expected.dim(); ++i) {
        for (std::size_t j = 1; j <= expected.dim(); ++j) {
            if (expected(i, j) != form.gram(i, j)) {
                r.passed = false;
                r.detail = source + " entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                           to_string(expected(i, j)) + ", built " + to_string(form.gram(i, j));
                return r;
            }
        }
    }
    r.detail = "matches " + source;
    return r;
}

}  // namespace

std::vector<InvariantResult> run_invariant_suite(Degree m, const FactoredDiscriminant& disc,
                                                 const std::optional<IntMatrix>& golden) {
    const TraceZeroForm form = build_trace_zero(m, disc, Mode::strict);
    std::vector<InvariantResult> out;
    auto push = [&](InvariantResult r) {
        out.push_back(std::move(r));
        return out.back().passed;
    };
    push(coefficient_reconciliation(form)) && push(kronecker_identity(m)) && push(assembly_agreement(form)) &&
        push(determinant_law(form)) && push(golden_identity(form, golden));
    return out;
}

}  // namespace cyclic_shape
