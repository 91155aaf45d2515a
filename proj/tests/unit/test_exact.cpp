#include <doctest.h>

#include <vector>

#include "cyclic_shape/errors.hpp"
#include "cyclic_shape/exact.hpp"

using namespace cyclic_shape;

namespace {

FactoredDiscriminant reference() { return FactoredDiscriminant(1, {{7, 6}, {13, 6}, {19, 8}}); }

}  // namespace

TEST_CASE("divisors") {
    CHECK(divisors(9) == std::vector<Degree>{1, 3, 9});
    CHECK(divisors(1) == std::vector<Degree>{1});
    CHECK(divisors(12) == std::vector<Degree>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(97) == std::vector<Degree>{1, 97});
    for (Degree m = 1; m <= 200; ++m) {
        const auto ds = divisors(m);
        std::vector<Degree> brute;
        for (Degree d = 1; d <= m; ++d)
            if (m % d == 0) brute.push_back(d);
        CHECK(ds == brute);
    }
}

TEST_CASE("valuation") {
    CHECK(valuation(7, reference().value()) == 6);
    CHECK(valuation(19, reference().value()) == 8);
    CHECK(valuation(2, 8) == 3);
    CHECK(valuation(3, 1) == 0);
    CHECK(valuation(5, -125) == 3);
    CHECK_THROWS_AS(valuation(3, 0), ValidationError);
}

TEST_CASE("radical") {
    CHECK(radical(reference()) == 1729);
    CHECK(radical(FactoredDiscriminant(-1, {{2, 2}, {3, 1}})) == -6);
    CHECK_THROWS_AS(FactoredDiscriminant(1, {}), ValidationError);
}

TEST_CASE("tuple lcm and gcd") {
    const std::vector<std::uint64_t> a{3, 1}, b{3, 9}, c{1, 9}, d{4, 6, 10};
    CHECK(lcm_tuple(a) == 3);
    CHECK(gcd_tuple(b) == 3);
    CHECK(gcd_tuple(c) == 1);
    CHECK(lcm_tuple(d) == 60);
    CHECK(gcd_tuple(d) == 2);
    CHECK_THROWS(lcm_tuple(std::span<const std::uint64_t>{}));
    CHECK_THROWS(gcd_tuple(std::span<const std::uint64_t>{}));
}

TEST_CASE("primality") {
    int count = 0;
    for (int n = 0; n < 1000; ++n) count += is_prime(n);
    CHECK(count == 168);
    CHECK(is_prime(BigInt("18446744073709551557")));   // largest prime below 2^64
    CHECK_FALSE(is_prime(BigInt("3215031751")));       // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(is_prime(BigInt("170141183460469231731687303715884105727")));  // 2^127 - 1
    CHECK_FALSE(is_prime(BigInt("170141183460469231731687303715884105729")));
}

TEST_CASE("factored discriminant validation") {
    const auto d = reference();
    CHECK(d.value() == BigInt("9644443241083841416681"));
    CHECK(d.exponent_of(13) == 6);
    CHECK(d.exponent_of(5) == 0);
    CHECK(to_string(d) == "7^6*13^6*19^8");
    CHECK_THROWS_AS(FactoredDiscriminant(2, {{7, 1}}), ValidationError);
    CHECK_THROWS_AS(FactoredDiscriminant(1, {{13, 1}, {7, 1}}), ValidationError);
    CHECK_THROWS_AS(FactoredDiscriminant(1, {{7, 1}, {7, 2}}), ValidationError);
    CHECK_THROWS_AS(FactoredDiscriminant(1, {{9, 1}}), ValidationError);
    CHECK_THROWS_AS(FactoredDiscriminant(1, {{7, 0}}), ValidationError);
}

TEST_CASE("big magnitudes stay exact") {
    const BigInt d = reference().value();
    CHECK(to_string(9 * d) == "86799989169754572750129");
    CHECK(parse_bigint("-123456789012345678901234567890") * 10 == BigInt("-1234567890123456789012345678900"));
    CHECK_THROWS_AS(parse_bigint("12a"), ParseError);
    CHECK_THROWS_AS(parse_bigint(""), ParseError);
}

TEST_CASE("factor_small") {
    CHECK(factor_small(-12) == FactoredDiscriminant(-1, {{2, 2}, {3, 1}}));
    CHECK(factor_small(49) == FactoredDiscriminant(1, {{7, 2}}));
    CHECK(factor_small(BigInt("999999999989")) == FactoredDiscriminant(1, {{BigInt("999999999989"), 1}}));
    CHECK(factor_small(7 * 7 * 13 * 13 * 19) == FactoredDiscriminant(1, {{7, 2}, {13, 2}, {19, 1}}));
    try {
        factor_small(reference().value());
        FAIL("expected refusal");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("factorization incomplete; supply factored form") != std::string::npos);
    }
    CHECK_THROWS_AS(factor_small(0), ValidationError);
    CHECK_THROWS_AS(factor_small(1), ValidationError);
}
