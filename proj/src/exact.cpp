#include "cyclic_shape/exact.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cyclic_shape/errors.hpp"

namespace cyclic_shape {

std::string to_string(const BigInt& x) { return x.get_str(10); }

BigInt parse_bigint(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    const auto digits_begin = (!s.empty() && s.front() == '-') ? 1u : 0u;
    if (s.size() == digits_begin ||
        !std::all_of(s.begin() + digits_begin, s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("not a decimal integer: '" + text + "'");
    }
    return BigInt(s, 10);
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
    std::uint64_t r = 1;
    a %= n;
    while (e) {
        if (e & 1) r = mul_mod(r, a, n);
        a = mul_mod(a, a, n);
        e >>= 1;
    }
    return r;
}

// The first twelve primes as witnesses make Miller-Rabin exact below 3.3e24.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto p : kWitnesses) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : kWitnesses) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (mpz_fits_ulong_p(n.get_mpz_t()) && sizeof(unsigned long) >= 8) {
        return is_prime_u64(n.get_ui());
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

FactoredDiscriminant::FactoredDiscriminant(int sign, std::vector<PrimePower> factors)
    : sign_(sign), factors_(std::move(factors)) {
    if (sign_ != 1 && sign_ != -1) throw ValidationError("discriminant sign must be +1 or -1");
    if (factors_.empty()) throw ValidationError("discriminant must have at least one prime factor (|d| > 1)");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto& f = factors_[i];
        if (f.exponent == 0) throw ValidationError("exponent of " + to_string(f.prime) + " must be positive");
        if (i > 0 && !(factors_[i - 1].prime < f.prime)) {
            throw ValidationError("primes must be strictly increasing");
        }
        if (!is_prime(f.prime)) throw ValidationError(to_string(f.prime) + " is not prime");
    }
}

std::vector<BigInt> FactoredDiscriminant::primes() const {
    std::vector<BigInt> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) out.push_back(f.prime);
    return out;
}

BigInt FactoredDiscriminant::value() const {
    BigInt v = sign_;
    for (const auto& f : factors_) {
        BigInt pe;
        mpz_pow_ui(pe.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
        v *= pe;
    }
    return v;
}

unsigned FactoredDiscriminant::exponent_of(const BigInt& p) const {
    for (const auto& f : factors_) {
        if (f.prime == p) return f.exponent;
    }
    return 0;
}

std::string to_string(const FactoredDiscriminant& d) {
    std::ostringstream os;
    if (d.sign() < 0) os << '-';
    bool first = true;
    for (const auto& f : d.factors()) {
        if (!first) os << '*';
        first = false;
        os << to_string(f.prime);
        if (f.exponent != 1) os << '^' << f.exponent;
    }
    return os.str();
}

std::vector<Degree> divisors(Degree m) {
    std::vector<Degree> low, high;
    for (Degree k = 1; k * k <= m; ++k) {
        if (m % k == 0) {
            low.push_back(k);
            if (k != m / k) high.push_back(m / k);
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

unsigned valuation(const BigInt& p, const BigInt& n) {
    if (n == 0) throw ValidationError("valuation of 0 is undefined");
    if (p < 2) throw ValidationError("valuation base must be a prime");
    BigInt r = abs(n);
    unsigned k = 0;
    while (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
        ++k;
    }
    return k;
}

BigInt radical(const FactoredDiscriminant& d) {
    BigInt r = d.sign();
    for (const auto& f : d.factors()) r *= f.prime;
    return r;
}

std::uint64_t lcm_tuple(std::span<const std::uint64_t> v) {
    if (v.empty()) throw ValidationError("lcm of an empty tuple");
    std::uint64_t r = 1;
    for (auto x : v) r = std::lcm(r, x);
    return r;
}

std::uint64_t gcd_tuple(std::span<const std::uint64_t> v) {
    if (v.empty()) throw ValidationError("gcd of an empty tuple");
    std::uint64_t r = 0;
    for (auto x : v) r = std::gcd(r, x);
    return r;
}

FactoredDiscriminant factor_small(const BigInt& n, std::uint64_t bound) {
    if (n == 0) throw ValidationError("discriminant must be nonzero");
    BigInt r = abs(n);
    if (r > BigInt(static_cast<unsigned long>(bound))) {
        throw ValidationError("factorization incomplete; supply factored form (|n| = " + to_string(r) +
                              " exceeds trial-division bound " + std::to_string(bound) + ")");
    }
    std::uint64_t rest = r.get_ui();
    std::vector<PrimePower> factors;
    for (std::uint64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e) factors.push_back({BigInt(static_cast<unsigned long>(p)), e});
    }
    if (rest > 1) factors.push_back({BigInt(static_cast<unsigned long>(rest)), 1});
    return FactoredDiscriminant(n < 0 ? -1 : 1, std::move(factors));
}

}  // namespace cyclic_shape
