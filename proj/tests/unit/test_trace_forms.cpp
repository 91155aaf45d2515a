#include <doctest.h>

#include "cyclic_shape/errors.hpp"
#include "cyclic_shape/reference.hpp"
#include "cyclic_shape/trace_forms.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cyclic_shape;

TEST_CASE("reference matrix reproduced entry for entry") {
    const auto form = build_trace_zero(9, reference_discriminant());
    CHECK(form.gram == reference_trace_zero_matrix());
    for (std::size_t i = 1; i <= 8; ++i) CHECK(form.gram(i, i) == 2318);
    for (std::size_t i = 1; i < 8; ++i) CHECK(form.gram(i + 1, i) == -1159);
    CHECK(det_exact(form.gram) == 9 * reference_discriminant().value());
    CHECK(assemble_kronecker_sum(9, form.table) == form.gram);
}

TEST_CASE("reference matrix equals the field Gram in the aligned period basis") {
    const oracle::PeriodField field{{7, 13, 19}, {3, 3, 9}, {}, 9};
    const auto T = oracle::period_trace_gram(field);
    CHECK(minor_11(congruence(build_B(9), T)) == reference_trace_zero_matrix());
    CHECK(oracle::period_discriminant(field) == reference_discriminant());
}

TEST_CASE("prime degree gives rad(d) times A_{l-1}") {
    gen::Rng rng(101);
    for (Degree l : {3, 5, 7, 11, 13}) {
        for (int k = 0; k < 5; ++k) {
            const auto in = gen::random_strict_input(l, rng);
            CHECK(build_trace_zero(l, in.disc).gram == radical(in.disc) * build_root_A(l - 1));
        }
    }
}

TEST_CASE("small examples") {
    CHECK(build_trace_zero(3, FactoredDiscriminant(1, {{7, 2}})).gram == IntMatrix{{14, -7}, {-7, 14}});
    CHECK(build_trace_zero(2, FactoredDiscriminant(1, {{3, 1}, {7, 1}})).gram == IntMatrix{{42}});
    const auto quintic = build_full_trace(5, FactoredDiscriminant(1, {{11, 4}}));
    CHECK(quintic.gram == BigInt(11) * identity(5) - BigInt(2) * ones(5));
    CHECK(det_exact(quintic.gram) == 14641);
}

TEST_CASE("determinant law and assembly agreement on random strict inputs") {
    gen::Rng rng(4242);
    for (Degree m : {4, 6, 8, 9, 10, 12, 15, 16, 18, 20, 24}) {
        for (int k = 0; k < 3; ++k) {
            const auto in = gen::random_strict_input(m, rng);
            CAPTURE(m);
            CAPTURE(to_string(in.disc));
            const auto form = build_trace_zero(m, in.disc);
            CHECK(det_exact(form.gram) == BigInt(static_cast<unsigned long>(m)) * in.disc.value());
            CHECK(assemble_kronecker_sum(m, form.table) == form.gram);
            CHECK(det_exact(assemble_full_trace(m, form.table)) == in.disc.value());
            CHECK(form.gram.is_symmetric());
        }
    }
}

TEST_CASE("quadratic form coefficients follow the congruence pattern") {
    CHECK(kronecker_pattern(9, 1, 1, 1) == 2);
    CHECK(kronecker_pattern(9, 1, 1, 2) == -1);
    CHECK(kronecker_pattern(9, 1, 1, 8) == 0);
    CHECK(kronecker_pattern(9, 3, 1, 4) == 2);
    CHECK(kronecker_pattern(9, 3, 1, 3) == -1);
    CHECK(kronecker_pattern(4, 2, 1, 2) == -2);
    CHECK_THROWS_AS(kronecker_pattern(9, 9, 1, 1), ValidationError);

    gen::Rng rng(8);
    for (Degree m : {2, 6, 8, 9, 12}) {
        const auto in = gen::random_strict_input(m, rng);
        const auto gram = build_trace_zero(m, in.disc).gram;
        const auto c = quad_form_coeffs(m, in.disc);
        CHECK(c.size() == (m - 1) * m / 2);
        for (const auto& [ij, v] : c) {
            const auto [i, j] = ij;
            CHECK(v == (i == j ? gram(i, i) : BigInt(2 * gram(i, j))));
        }
    }
}

TEST_CASE("trace-zero classes separate discriminants") {
    const FactoredDiscriminant a(1, {{7, 2}}), b(1, {{13, 2}});
    CHECK(same_trace_zero_class(3, a, a));
    CHECK_FALSE(same_trace_zero_class(3, a, b));
    const auto ref = reference_discriminant();
    const FactoredDiscriminant other(1, {{7, 6}, {19, 6}, {37, 8}});
    CHECK_FALSE(same_trace_zero_class(9, ref, other));
}

TEST_CASE("shape") {
    const auto a = build_trace_zero(3, FactoredDiscriminant(1, {{7, 2}}));
    const auto b = build_trace_zero(3, FactoredDiscriminant(1, {{13, 2}}));
    CHECK(shape_equal(a, b));
    const auto p = build_trace_zero(5, FactoredDiscriminant(1, {{11, 4}}));
    const auto q = build_trace_zero(5, FactoredDiscriminant(1, {{11, 4}, {31, 4}}));
    CHECK(shape_equal(p, q));  // both rad(d) A_4
    const auto r = build_trace_zero(9, reference_discriminant());
    const auto s = build_trace_zero(9, FactoredDiscriminant(1, {{19, 8}}));
    CHECK_FALSE(shape_equal(r, s));
    CHECK(shape_equal(s.gram, build_root_A(8)));
    // Q(zeta_5) has an indefinite trace-zero form.
    const auto z5 = build_trace_zero(4, FactoredDiscriminant(1, {{5, 3}}));
    CHECK_THROWS_AS(shape_equal(z5, z5), ValidationError);
}
