#include "cyclic_shape/trace_forms.hpp"

#include "cyclic_shape/errors.hpp"
#include "cyclic_shape/lattice.hpp"

namespace cyclic_shape {

IntMatrix build_hat_A(Degree m, Degree d) { return minor_11(congruence(build_B(m), build_A_d(m, d))); }

IntMatrix assemble_trace_zero(Degree m, const CoefficientTable& table) {
    IntMatrix gram(m - 1);
    for (auto d : divisors(m)) {
        if (d == m) continue;
        gram = gram + table.at(d) * build_hat_A(m, d);
    }
    return gram;
}

IntMatrix assemble_kronecker_sum(Degree m, const CoefficientTable& table) {
    IntMatrix sum(m);
    for (auto d : divisors(m)) {
        if (d == m) continue;
        sum = sum + table.at(d) * kronecker(d, build_extended_A(m / d));
    }
    return minor_11(sum);
}

IntMatrix assemble_full_trace(Degree m, const CoefficientTable& table) {
    IntMatrix gram(m);
    for (auto d : divisors(m)) gram = gram + table.at(d) * build_A_d(m, d);
    return gram;
}

TraceZeroForm build_trace_zero(Degree m, const FactoredDiscriminant& disc, Mode mode) {
    auto profile = validate_tame_cyclic(m, disc, mode);
    auto table = coeff_table(profile);
    auto gram = assemble_trace_zero(m, table);
    return {std::move(profile), std::move(table), std::move(gram)};
}

FullTraceForm build_full_trace(Degree m, const FactoredDiscriminant& disc, Mode mode) {
    auto profile = validate_tame_cyclic(m, disc, mode);
    auto table = coeff_table(profile);
    auto gram = assemble_full_trace(m, table);
    return {std::move(profile), std::move(table), std::move(gram)};
}

long kronecker_pattern(Degree m, Degree d, std::size_t i, std::size_t j) {
    if (d == 0 || m % d != 0 || d == m) {
        throw ValidationError("pattern defined for divisors d < m only (d = " + std::to_string(d) + ")");
    }
    const Degree n = m / d;
    const Degree diff = static_cast<Degree>((i >= j ? i - j : n - (j - i) % n) % n);
    long value = 0;
    if (diff == 0) value += 2;
    if (diff == 1 % n) value -= 1;
    if (diff == (n - 1) % n) value -= 1;
    return value;
}

std::map<std::pair<std::size_t, std::size_t>, BigInt> quad_form_coeffs(Degree m, const FactoredDiscriminant& disc,
                                                                        Mode mode) {
    const auto profile = validate_tame_cyclic(m, disc, mode);
    const auto table = coeff_table(profile);
    std::map<std::pair<std::size_t, std::size_t>, BigInt> out;
    for (std::size_t i = 1; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            BigInt g = 0;
            for (auto d : profile.divisor_list()) {
                if (d == m) continue;
                g += table.at(d) * kronecker_pattern(m, d, i, j);
            }
            out[{i, j}] = (i == j) ? g : BigInt(2 * g);
        }
    }
    return out;
}

bool same_trace_zero_class(Degree m, const FactoredDiscriminant& left, const FactoredDiscriminant& right) {
    const auto a = build_trace_zero(m, left, Mode::strict);
    const auto b = build_trace_zero(m, right, Mode::strict);
    if (left == right) {
        if (!(a.gram == b.gram)) throw InvariantError("equal discriminants produced different Gram matrices");
        return true;
    }
    const BigInt big_m(static_cast<unsigned long>(m));
    const BigInt det_a = det_exact(a.gram);
    const BigInt det_b = det_exact(b.gram);
    if (det_a != big_m * left.value() || det_b != big_m * right.value()) {
        throw InvariantError("determinant law det = m * d violated");
    }
    if (det_a == det_b) throw InvariantError("distinct discriminants not separated by the determinant");
    return false;
}

bool shape_equal(const IntMatrix& left, const IntMatrix& right) {
    if (left.dim() != right.dim()) return false;
    if (!is_positive_definite(left) || !is_positive_definite(right)) {
        throw ValidationError("shape comparison restricted to totally real (positive definite) forms");
    }
    const BigInt cl = left.content();
    const BigInt cr = right.content();
    IntMatrix pl(left.dim()), pr(right.dim());
    for (std::size_t i = 1; i <= left.dim(); ++i) {
        for (std::size_t j = 1; j <= left.dim(); ++j) {
            pl(i, j) = left(i, j) / cl;
            pr(i, j) = right(i, j) / cr;
        }
    }
    return isometric(pl, pr).verdict == Verdict::isometric;
}

bool shape_equal(const TraceZeroForm& left, const TraceZeroForm& right) { return shape_equal(left.gram, right.gram); }

}  // namespace cyclic_shape
