#pragma once

// Exact integer utilities: big integers, certified primes, factored
// discriminants, divisor lists and tuple gcd/lcm.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cyclic_shape {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Degrees and divisors of the degree are machine integers; everything
/// that can grow with the discriminant is a BigInt.
using Degree = std::uint64_t;

std::string to_string(const BigInt& x);
BigInt parse_bigint(const std::string& text);  // throws ParseError

/// Deterministic Miller-Rabin below 2^64, 40-round probabilistic above.
bool is_prime(const BigInt& n);

struct PrimePower {
    BigInt prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// sign * prod p^e with primes strictly increasing and certified, e >= 1.
/// The value 0 and the units +-1 are rejected at construction.
class FactoredDiscriminant {
public:
    FactoredDiscriminant(int sign, std::vector<PrimePower> factors);

    int sign() const noexcept { return sign_; }
    const std::vector<PrimePower>& factors() const noexcept { return factors_; }
    std::vector<BigInt> primes() const;
    BigInt value() const;
    /// Exponent of p in the factorization (0 when p does not divide).
    unsigned exponent_of(const BigInt& p) const;

    friend bool operator==(const FactoredDiscriminant&, const FactoredDiscriminant&) = default;

private:
    int sign_;
    std::vector<PrimePower> factors_;
};

std::string to_string(const FactoredDiscriminant& d);

/// All positive divisors of m in ascending order.
std::vector<Degree> divisors(Degree m);

/// Largest k with p^k | n. Throws ValidationError for n = 0.
unsigned valuation(const BigInt& p, const BigInt& n);

/// Squarefree integer with the sign and prime support of d.
BigInt radical(const FactoredDiscriminant& d);

std::uint64_t lcm_tuple(std::span<const std::uint64_t> v);
std::uint64_t gcd_tuple(std::span<const std::uint64_t> v);

inline constexpr std::uint64_t kDefaultTrialBound = 1'000'000'000'000ULL;

/// Complete factorization by trial division. Inputs with |n| above the bound
/// are refused ("factorization incomplete; supply factored form") rather than
/// partially factored.
FactoredDiscriminant factor_small(const BigInt& n, std::uint64_t bound = kDefaultTrialBound);

}  // namespace cyclic_shape
