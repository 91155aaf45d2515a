#include <doctest.h>

#include "cyclic_shape/coefficients.hpp"
#include "cyclic_shape/errors.hpp"
#include "cyclic_shape/trace_forms.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cyclic_shape;

namespace {

RamificationProfile reference_profile() {
    return validate_tame_cyclic(9, FactoredDiscriminant(1, {{7, 6}, {13, 6}, {19, 8}}), Mode::strict);
}

}  // namespace

TEST_CASE("epsilon vectors") {
    const auto p9 = enumerate_P(9);
    REQUIRE(p9.size() == 4);
    CHECK(p9[0].entries == std::vector<Degree>{1, 1});
    CHECK(p9[1].entries == std::vector<Degree>{3, 1});
    CHECK(p9[3].entries == std::vector<Degree>{3, 9});
    CHECK(p9[3].gcd() == 3);
    CHECK(p9[2].gcd() == 1);

    const auto parts = partition_by_lcm(9);
    CHECK(parts.at(1).size() == 1);
    CHECK(parts.at(3).size() == 1);
    CHECK(parts.at(9).size() == 2);
    CHECK(enumerate_P(12).size() == 32);
    std::size_t total = 0;
    for (const auto& [d, vs] : partition_by_lcm(12)) total += vs.size();
    CHECK(total == 32);
    CHECK_THROWS_AS(enumerate_P(1), ValidationError);
}

TEST_CASE("reference coefficients by every route") {
    const auto p = reference_profile();
    CHECK(coeff_a1(p) == 1729);
    CHECK(coeff_literal(p, 3) == -570);
    CHECK(coeff_literal(p, 9) == -2);
    CHECK(coeff_closed_form(p, 3) == -570);
    CHECK(coeff_closed_form(p, 9) == -2);
    const auto sys = coeff_system(p);
    CHECK(sys.at(1) == 1729);
    CHECK(sys.at(3) == -570);
    CHECK(sys.at(9) == -2);
    const auto table = coeff_table(p);
    CHECK(table.at(1) == 1729);
    CHECK(table.at(3) == -570);
    CHECK(table.at(9) == -2);
    CHECK(table.provenance(3) == Provenance::literal);
    CHECK(table.provenance(9) == Provenance::normalized);
    CHECK(table.diagnostics().empty());
    CHECK(gram_eigen_on_divisor_classes(table, 9) == 1);
    CHECK(gram_eigen_on_divisor_classes(table, 3) == 1729 - 3 * 570);
    CHECK(gram_eigen_on_divisor_classes(table, 1) == 1729);
}

TEST_CASE("quintic of conductor 11") {
    const auto p = validate_tame_cyclic(5, FactoredDiscriminant(1, {{11, 4}}), Mode::strict);
    const auto t = coeff_table(p);
    CHECK(t.at(1) == 11);
    CHECK(t.at(5) == -2);
}

TEST_CASE("class eigenvalue targets") {
    const auto p = reference_profile();
    CHECK(class_eigenvalue_target(p, 1) == 91 * 19);
    CHECK(class_eigenvalue_target(p, 3) == 19);
    CHECK(class_eigenvalue_target(p, 9) == 1);
    CHECK_THROWS_AS(class_eigenvalue_target(p, 2), ValidationError);
}

TEST_CASE("nested divisors: the gcd weight departs from the system") {
    // m = 8 with P_2, P_4, P_8 all nonempty: 17 (e=2), 5 (e=4), 41 (e=8).
    // The gcd-weighted sum carries an extra factor (w_2 - f_2) at d = 4.
    const FactoredDiscriminant d(1, {{5, 6}, {17, 4}, {41, 7}});
    const auto p = validate_tame_cyclic(8, d, Mode::strict);
    const BigInt w2 = 17, f2 = 8, f4 = 1, w8 = 41;
    CHECK(coeff_closed_form(p, 4) == -f4 * w8);
    CHECK(coeff_literal(p, 4) == -f4 * w8 * (w2 - f2));
    const auto table = coeff_table(p);
    CHECK(table.at(4) == coeff_system(p).at(4));
    CHECK(table.provenance(4) == Provenance::closed_form);
    CHECK_FALSE(table.diagnostics().empty());
}

TEST_CASE("closed form agrees with the system on every strict random input") {
    gen::Rng rng(20261014);
    for (Degree m : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 16, 18, 20, 21, 24, 30}) {
        for (int k = 0; k < 4; ++k) {
            const auto in = gen::random_strict_input(m, rng);
            CAPTURE(m);
            CAPTURE(to_string(in.disc));
            const auto p = validate_tame_cyclic(m, in.disc, Mode::strict);
            const auto sys = coeff_system(p);
            for (auto d : divisors(m)) {
                if (d == 1) continue;
                if (p.totally_real()) CHECK(coeff_closed_form(p, d) == sys.at(d));
            }
            const auto table = coeff_table(p);
            for (auto d : divisors(m)) CHECK(table.at(d) == sys.at(d));
            CHECK(gram_eigen_on_divisor_classes(table, m) == 1);
        }
    }
}

TEST_CASE("full trace form matches the Gaussian-period oracle") {
    // Small conductors so the period enumeration stays cheap; both real and
    // imaginary fields occur.
    gen::Rng rng(77);
    int imaginary = 0, real = 0;
    for (Degree m : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12}) {
        for (int k = 0; k < 5; ++k) {
            const auto in = gen::random_strict_input(m, rng, m <= 4 ? 120 : 80);
            std::uint64_t conductor = 1;
            for (auto q : in.field.primes) conductor *= q;
            if (conductor > 400000) continue;
            CAPTURE(m);
            CAPTURE(to_string(in.disc));
            const auto form = build_full_trace(m, in.disc);
            const auto periods = oracle::period_trace_gram(in.field);
            CHECK(form.gram == periods);
            CHECK(det_exact(periods) == in.disc.value());
            (form.profile.odd_character() ? imaginary : real) += 1;
        }
    }
    CHECK(imaginary > 0);
    CHECK(real > 0);
}

TEST_CASE("cyclotomic quartic Q(zeta_5)") {
    const auto p = validate_tame_cyclic(4, FactoredDiscriminant(1, {{5, 3}}), Mode::strict);
    const auto t = coeff_table(p);
    CHECK(t.at(1) == -5);
    CHECK(t.at(2) == 5);
    CHECK(t.at(4) == -1);
    CHECK(t.provenance(2) == Provenance::system);
    const oracle::PeriodField z5{{5}, {4}, {}, 4};
    CHECK(build_full_trace(4, p.discriminant()).gram == oracle::period_trace_gram(z5));
}

TEST_CASE("permissive tables keep the literal values") {
    const auto p = validate_tame_cyclic(3, FactoredDiscriminant(1, {{5, 2}, {11, 2}}), Mode::permissive);
    const auto t = coeff_table(p);
    CHECK(t.at(1) == 55);
    CHECK(t.at(3) == -18);
    CHECK(t.provenance(3) == Provenance::normalized);
    CHECK(t.literal_values().at(3) == -54);
    CHECK(1 * t.at(1) + 3 * t.at(3) == 1);
}
