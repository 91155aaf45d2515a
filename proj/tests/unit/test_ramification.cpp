#include <doctest.h>

#include <string>

#include "cyclic_shape/errors.hpp"
#include "cyclic_shape/ramification.hpp"

using namespace cyclic_shape;

namespace {

std::string rejection(Degree m, const FactoredDiscriminant& d, Mode mode = Mode::strict) {
    try {
        validate_tame_cyclic(m, d, mode);
    } catch (const ValidationError& e) {
        return e.what();
    }
    return "";
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("ramification index") {
    CHECK(ramification_index(9, 6) == 3);
    CHECK(ramification_index(9, 8) == 9);
    CHECK(ramification_index(9, 5) == Rational(9, 4));
    CHECK(ramification_index(5, 4) == 5);
    CHECK_THROWS_AS(ramification_index(9, 9), ValidationError);
}

TEST_CASE("reference profile") {
    const auto p = validate_tame_cyclic(9, FactoredDiscriminant(1, {{7, 6}, {13, 6}, {19, 8}}), Mode::strict);
    CHECK(p.degree() == 9);
    CHECK(p.assignment().at(7) == 3);
    CHECK(p.assignment().at(13) == 3);
    CHECK(p.assignment().at(19) == 9);
    CHECK(p.class_of(3).w == 91);
    CHECK(p.class_of(3).f == 30);
    CHECK(p.class_of(9).w == 19);
    CHECK(p.class_of(9).f == 2);
    CHECK(p.classes().size() == 2);
    CHECK(p.totally_real());
    CHECK(w_and_f(p, 3) == std::pair<BigInt, BigInt>(91, 30));
    CHECK_THROWS_AS(w_and_f(p, 1), ValidationError);
    CHECK_THROWS_AS(p.class_of(4), ValidationError);
}

TEST_CASE("empty classes carry w = 1, f = 0") {
    const auto p = validate_tame_cyclic(6, FactoredDiscriminant(-1, {{7, 5}}), Mode::strict);
    CHECK(p.class_of(2).w == 1);
    CHECK(p.class_of(2).f == 0);
    CHECK(p.class_of(3).w == 1);
    CHECK(p.class_of(6).w == 7);
    CHECK(p.class_of(6).f == 1);
}

TEST_CASE("rejections name the offending prime") {
    CHECK(contains(rejection(9, FactoredDiscriminant(1, {{3, 6}, {7, 6}})), "wild ramification at p=3"));
    CHECK(contains(rejection(9, FactoredDiscriminant(1, {{7, 5}})), "non-integral ramification index at p=7"));
    CHECK(contains(rejection(9, FactoredDiscriminant(1, {{7, 5}})), "9/4"));
    CHECK(contains(rejection(9, FactoredDiscriminant(1, {{19, 9}})), "ramification index undefined at p=19"));
    CHECK(contains(rejection(9, FactoredDiscriminant(1, {{19, 10}})), "valuation exceeds degree at p=19"));
    CHECK(contains(rejection(3, FactoredDiscriminant(1, {{5, 2}})), "prime not congruent to 1"));
    CHECK(contains(rejection(9, FactoredDiscriminant(1, {{7, 6}})), "lcm e_p = 3, m = 9"));
    CHECK(contains(rejection(3, FactoredDiscriminant(-1, {{7, 2}})), "sign inconsistent with odd degree"));
    CHECK(contains(rejection(1, FactoredDiscriminant(1, {{7, 2}})), "at least 2"));
}

TEST_CASE("permissive mode drops the arithmetic side conditions") {
    // 5 and 11 are 2 (mod 3), so neither ramifies in a cyclic cubic, but
    // w_3 = 55 = 1 (mod 3) and the data still parse.
    const auto p = validate_tame_cyclic(3, FactoredDiscriminant(1, {{5, 2}, {11, 2}}), Mode::permissive);
    CHECK(p.class_of(3).w == 55);
    CHECK(p.class_of(3).f == 18);
    CHECK(p.mode() == Mode::permissive);
    CHECK(contains(rejection(3, FactoredDiscriminant(1, {{5, 2}, {11, 2}})), "prime not congruent to 1"));
    // f_d integrality is kept.
    CHECK(contains(rejection(3, FactoredDiscriminant(1, {{5, 2}}), Mode::permissive), "non-integral f_d at d=3"));
    // Tameness is kept.
    CHECK(contains(rejection(9, FactoredDiscriminant(1, {{3, 6}}), Mode::permissive), "wild ramification"));
}

TEST_CASE("character parity from the ramification data") {
    // Q(zeta_5): e_5 = 4, (5 - 1) / 4 odd, totally imaginary, d = 5^3 > 0.
    const auto z5 = validate_tame_cyclic(4, FactoredDiscriminant(1, {{5, 3}}), Mode::strict);
    CHECK(z5.odd_character());
    // Q(zeta_7): m = 6, imaginary with three complex places, d = -7^5.
    const auto z7 = validate_tame_cyclic(6, FactoredDiscriminant(-1, {{7, 5}}), Mode::strict);
    CHECK(z7.odd_character());
    CHECK(contains(rejection(6, FactoredDiscriminant(1, {{7, 5}})), "sign inconsistent with ramification parity"));
    // Real quadratic Q(sqrt 13) and imaginary Q(sqrt -7).
    CHECK(validate_tame_cyclic(2, FactoredDiscriminant(1, {{13, 1}}), Mode::strict).totally_real());
    CHECK(validate_tame_cyclic(2, FactoredDiscriminant(-1, {{7, 1}}), Mode::strict).odd_character());
    CHECK(contains(rejection(2, FactoredDiscriminant(1, {{7, 1}})), "sign inconsistent"));
}

TEST_CASE("mode parsing") {
    CHECK(parse_mode("strict") == Mode::strict);
    CHECK(parse_mode("permissive") == Mode::permissive);
    CHECK_THROWS_AS(parse_mode("lenient"), ParseError);
    CHECK(std::string(to_string(Mode::permissive)) == "permissive");
}
