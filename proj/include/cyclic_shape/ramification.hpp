#pragma once

// Ramification data of a purported tame cyclic discriminant: the indices
// e_p = m / (m - v_p(d)), the prime sets P_d = {p : e_p = d}, and the derived
// w_d = prod_{p in P_d} p, f_d = (w_d - 1) / d.

#include <map>
#include <utility>
#include <vector>

#include "cyclic_shape/exact.hpp"

namespace cyclic_shape {

enum class Mode { strict, permissive };

const char* to_string(Mode mode);
Mode parse_mode(const std::string& text);  // throws ParseError

/// m / (m - vp) as an exact rational. Throws ValidationError when vp = m.
Rational ramification_index(Degree m, unsigned vp);

struct DivisorClass {
    Degree d = 0;
    std::vector<BigInt> primes;  // P_d, ascending
    BigInt w = 1;
    BigInt f = 0;
};

class RamificationProfile {
public:
    Degree degree() const noexcept { return m_; }
    const FactoredDiscriminant& discriminant() const noexcept { return disc_; }
    Mode mode() const noexcept { return mode_; }

    /// Divisors 1 = d_1 < ... < d_tau = m.
    const std::vector<Degree>& divisor_list() const noexcept { return divisors_; }
    /// Ramification index of every prime of the discriminant.
    const std::map<BigInt, Degree>& assignment() const noexcept { return assignment_; }
    /// One entry per divisor d > 1 of m, in ascending order of d.
    const std::vector<DivisorClass>& classes() const noexcept { return classes_; }
    const DivisorClass& class_of(Degree d) const;

    /// True when the cyclic character is odd, i.e. complex conjugation is
    /// nontrivial and the field is totally imaginary. In strict mode this is
    /// read off the ramification data; in permissive mode from sign(d).
    bool odd_character() const noexcept { return odd_character_; }
    bool totally_real() const noexcept { return !odd_character_; }

private:
    friend RamificationProfile validate_tame_cyclic(Degree, const FactoredDiscriminant&, Mode);
    RamificationProfile(Degree m, FactoredDiscriminant disc, Mode mode)
        : m_(m), disc_(std::move(disc)), mode_(mode) {}

    Degree m_;
    FactoredDiscriminant disc_;
    Mode mode_;
    std::vector<Degree> divisors_;
    std::map<BigInt, Degree> assignment_;
    std::vector<DivisorClass> classes_;
    bool odd_character_ = false;
};

/// Both modes: m >= 2, tameness (no ramified p | m), v_p < m, e_p integral,
/// f_d integral. Strict mode additionally: p = 1 (mod e_p), lcm of the e_p
/// equal to m, and sign(d) consistent with the character parity.
RamificationProfile validate_tame_cyclic(Degree m, const FactoredDiscriminant& disc, Mode mode);

/// (w_d, f_d) for a divisor d > 1 of m; (1, 0) when P_d is empty.
std::pair<BigInt, BigInt> w_and_f(const RamificationProfile& profile, Degree d);

}  // namespace cyclic_shape
