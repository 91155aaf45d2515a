#pragma once

// The coefficients a_d (d | m) of the normal-basis trace Gram matrix
// M = sum_d a_d A_d, computed along independent routes:
//
//   literal      the signed sum over epsilon-vectors with weight gcd(v)
//   closed_form  the same sum with weight prod(S) / lcm(S), S the set of
//                entries with eps = 1
//   system       the triangular solve of sum_{d | g} d a_d = lambda_g over
//                the divisor lattice, lambda_g the circulant eigenvalue on
//                the Fourier class gcd(k, m) = g
//
// The two weights agree on every vector that has at least one eps = 0 entry
// and pairwise coprime eps = 1 entries.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cyclic_shape/ramification.hpp"

namespace cyclic_shape {

/// (d_2^{eps_2}, ..., d_tau^{eps_tau}); bit i of mask is eps_{i+2}.
struct EpsilonVector {
    std::uint64_t mask = 0;
    std::vector<Degree> entries;  // entries[i] is 1 or d_{i+2}

    Degree lcm() const;
    Degree gcd() const;
    bool operator==(const EpsilonVector& o) const { return mask == o.mask; }
};

/// All 2^(tau(m)-1) vectors, ordered by mask. Throws for m < 2 or tau(m) > 31.
std::vector<EpsilonVector> enumerate_P(Degree m);

/// P(m) split by lcm; every divisor of m is a key (possibly with no vectors).
std::map<Degree, std::vector<EpsilonVector>> partition_by_lcm(Degree m);

/// sum_{v in P_d} gcd(v) prod_{eps_i = 0} w_{d_i} prod_{eps_j = 1} (-f_{d_j}), for d > 1.
BigInt coeff_literal(const RamificationProfile& profile, Degree d);

/// sum_{v in P_d} (prod S / lcm S) prod_{eps_i = 0} w_{d_i} prod_{eps_j = 1} (-f_{d_j}), for d > 1.
BigInt coeff_closed_form(const RamificationProfile& profile, Degree d);

/// chi(-1) * |rad(d)|, i.e. signed rad(d) except for imaginary fields with 4 | m.
BigInt coeff_a1(const RamificationProfile& profile);

enum class Provenance { literal, closed_form, system, normalized };
const char* to_string(Provenance p);

struct CoefficientEntry {
    BigInt value;
    Provenance provenance = Provenance::system;
};

class CoefficientTable {
public:
    explicit CoefficientTable(Degree m = 0) : m_(m) {}

    Degree degree() const noexcept { return m_; }
    const std::map<Degree, CoefficientEntry>& entries() const noexcept { return entries_; }
    bool contains(Degree d) const { return entries_.count(d) != 0; }
    const BigInt& at(Degree d) const;
    Provenance provenance(Degree d) const;

    /// Literal-formula values for d > 1, kept for reporting even where the
    /// emitted value comes from another route.
    const std::map<Degree, BigInt>& literal_values() const noexcept { return literal_; }
    /// Route disagreements and skipped cross-checks, in divisor order.
    const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

    void set(Degree d, BigInt value, Provenance p) { entries_[d] = {std::move(value), p}; }
    void set_literal(Degree d, BigInt value) { literal_[d] = std::move(value); }
    void note(std::string message) { diagnostics_.push_back(std::move(message)); }

private:
    Degree m_;
    std::map<Degree, CoefficientEntry> entries_;
    std::map<Degree, BigInt> literal_;
    std::vector<std::string> diagnostics_;
};

/// lambda_g: prod_{d' | m, d' > 1, d' does not divide g} w_{d'}, negated for odd g
/// when the character is odd.
BigInt class_eigenvalue_target(const RamificationProfile& profile, Degree g);

/// Solves the divisor-lattice system; all entries carry provenance `system`.
/// Throws InvariantError("profile inconsistent ...") on a non-integral solution.
CoefficientTable coeff_system(const RamificationProfile& profile);

/// The emitted table. Strict, totally real: a_1 = coeff_a1; 1 < d < m from
/// the literal formula where it matches the system, otherwise from the closed
/// form (diagnostic recorded); a_m from sum_d d a_d = 1. Any disagreement
/// between the closed form or the normalization and the system throws
/// InvariantError. Strict, imaginary: all entries from the system.
/// Permissive: literal values for 1 < d < m, a_m normalized when integral,
/// system disagreements recorded as diagnostics.
CoefficientTable coeff_table(const RamificationProfile& profile);

/// sum_{d | g} d a_d, the eigenvalue of sum_d a_d A_d on the class gcd(k, m) = g.
BigInt gram_eigen_on_divisor_classes(const CoefficientTable& table, Degree g);

}  // namespace cyclic_shape
