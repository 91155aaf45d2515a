#include "cyclic_shape/coefficients.hpp"

#include <numeric>

#include "cyclic_shape/errors.hpp"

namespace cyclic_shape {

Degree EpsilonVector::lcm() const { return lcm_tuple(entries); }
Degree EpsilonVector::gcd() const { return gcd_tuple(entries); }

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::literal: return "literal";
        case Provenance::closed_form: return "closed_form";
        case Provenance::system: return "system";
        case Provenance::normalized: return "normalized";
    }
    return "unknown";
}

const BigInt& CoefficientTable::at(Degree d) const {
    auto it = entries_.find(d);
    if (it == entries_.end()) throw ValidationError("no coefficient for d = " + std::to_string(d));
    return it->second.value;
}

Provenance CoefficientTable::provenance(Degree d) const {
    auto it = entries_.find(d);
    if (it == entries_.end()) throw ValidationError("no coefficient for d = " + std::to_string(d));
    return it->second.provenance;
}

std::vector<EpsilonVector> enumerate_P(Degree m) {
    if (m < 2) throw ValidationError("P(m) requires m >= 2");
    const auto divs = divisors(m);
    const std::size_t len = divs.size() - 1;
    if (len > 30) throw ValidationError("tau(m) too large to enumerate P(m)");
    std::vector<EpsilonVector> out;
    out.reserve(std::size_t{1} << len);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
        EpsilonVector v;
        v.mask = mask;
        v.entries.resize(len);
        for (std::size_t i = 0; i < len; ++i) v.entries[i] = (mask >> i & 1) ? divs[i + 1] : 1;
        out.push_back(std::move(v));
    }
    return out;
}

std::map<Degree, std::vector<EpsilonVector>> partition_by_lcm(Degree m) {
    std::map<Degree, std::vector<EpsilonVector>> out;
    for (auto d : divisors(m)) out[d];
    for (auto& v : enumerate_P(m)) {
        const Degree l = v.lcm();
        out[l].push_back(std::move(v));
    }
    return out;
}

namespace {

enum class Weight { gcd_of_vector, product_over_lcm };

// Sum over v in P_d. Entries d_i that do not divide d are forced to eps = 0,
// so only subsets of the divisors of d in (1, d] are walked; the forced part
// contributes a common factor prod w_{d_i} and literal 1s to the vector.
class EpsilonSum {
public:
    EpsilonSum(const RamificationProfile& profile, Degree d, Weight weight)
        : d_(d), weight_(weight) {
        if (d < 2 || profile.degree() % d != 0) {
            throw ValidationError("coefficient index d = " + std::to_string(d) + " must be a divisor > 1 of m = " +
                                  std::to_string(profile.degree()));
        }
        for (const auto& c : profile.classes()) {
            if (d % c.d == 0) {
                free_.push_back(&c);
            } else {
                forced_ *= c.w;
                has_forced_zero_ = true;
            }
        }
    }

    BigInt evaluate() {
        total_ = 0;
        walk(0, 1, 0, BigInt(1), BigInt(1), false);
        return forced_ * total_;
    }

private:
    // lcm/gcd of the eps = 1 entries; `product` carries the w / (-f) factors,
    // `chosen` the product of eps = 1 entries (only for product_over_lcm).
    void walk(std::size_t i, Degree lcm, Degree gcd, BigInt product, BigInt chosen, bool has_zero) {
        if (i == free_.size()) {
            if (lcm != d_) return;
            const bool any_one_entry = has_zero || has_forced_zero_;
            if (weight_ == Weight::gcd_of_vector) {
                const Degree g = any_one_entry ? 1 : gcd;
                total_ += product * static_cast<unsigned long>(g);
            } else {
                mpz_divexact_ui(chosen.get_mpz_t(), chosen.get_mpz_t(), lcm);
                total_ += product * chosen;
            }
            return;
        }
        const DivisorClass& c = *free_[i];
        walk(i + 1, lcm, gcd, product * c.w, chosen, true);
        BigInt next_chosen = chosen;
        if (weight_ == Weight::product_over_lcm) next_chosen *= static_cast<unsigned long>(c.d);
        walk(i + 1, std::lcm(lcm, c.d), std::gcd(gcd, c.d), product * (-c.f), std::move(next_chosen), has_zero);
    }

    Degree d_;
    Weight weight_;
    std::vector<const DivisorClass*> free_;
    BigInt forced_ = 1;
    bool has_forced_zero_ = false;
    BigInt total_;
};

BigInt ulong_big(Degree x) { return BigInt(static_cast<unsigned long>(x)); }

}  // namespace

BigInt coeff_literal(const RamificationProfile& profile, Degree d) {
    return EpsilonSum(profile, d, Weight::gcd_of_vector).evaluate();
}

BigInt coeff_closed_form(const RamificationProfile& profile, Degree d) {
    return EpsilonSum(profile, d, Weight::product_over_lcm).evaluate();
}

BigInt coeff_a1(const RamificationProfile& profile) {
    BigInt r = abs(radical(profile.discriminant()));
    return profile.odd_character() ? BigInt(-r) : r;
}

BigInt class_eigenvalue_target(const RamificationProfile& profile, Degree g) {
    if (profile.degree() % g != 0) {
        throw ValidationError("g = " + std::to_string(g) + " does not divide m = " + std::to_string(profile.degree()));
    }
    BigInt rhs = 1;
    for (const auto& c : profile.classes()) {
        if (g % c.d != 0) rhs *= c.w;
    }
    // Complex conjugation is sigma^{m/2}; chi^k takes the value (-1)^k on it.
    if (profile.odd_character() && g % 2 == 1) rhs = -rhs;
    return rhs;
}

CoefficientTable coeff_system(const RamificationProfile& profile) {
    CoefficientTable table(profile.degree());
    for (auto g : profile.divisor_list()) {
        BigInt acc = class_eigenvalue_target(profile, g);
        for (const auto& [d, entry] : table.entries()) {
            if (g % d == 0) acc -= ulong_big(d) * entry.value;
        }
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), g)) {
            throw InvariantError("profile inconsistent: non-integral system solution at d=" + std::to_string(g));
        }
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), g);
        table.set(g, std::move(acc), Provenance::system);
    }
    return table;
}

namespace {

// a_m from sum_{d | m} d a_d = 1; false when non-integral.
bool normalized_top(const CoefficientTable& table, Degree m, BigInt& out) {
    BigInt acc = 1;
    for (const auto& [d, entry] : table.entries()) {
        if (d != m) acc -= ulong_big(d) * entry.value;
    }
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), m)) return false;
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), m);
    out = std::move(acc);
    return true;
}

std::string disagreement(const char* route, Degree d, const BigInt& got, const BigInt& want) {
    return std::string(route) + " formula disagrees with system at d=" + std::to_string(d) + ": " + to_string(got) +
           " vs " + to_string(want);
}

CoefficientTable strict_table(const RamificationProfile& profile) {
    const Degree m = profile.degree();
    const CoefficientTable system = coeff_system(profile);
    CoefficientTable table(m);

    for (const auto& c : profile.classes()) table.set_literal(c.d, coeff_literal(profile, c.d));

    if (profile.odd_character()) {
        for (const auto& [d, entry] : system.entries()) table.set(d, entry.value, Provenance::system);
        table.note("imaginary field: coefficients from the sign-twisted system; literal and closed forms not applicable");
        return table;
    }

    const BigInt a1 = coeff_a1(profile);
    if (a1 != system.at(1)) throw InvariantError(disagreement("a_1", 1, a1, system.at(1)));
    table.set(1, a1, Provenance::literal);

    for (const auto& c : profile.classes()) {
        if (c.d == m) continue;
        const BigInt& want = system.at(c.d);
        const BigInt& literal = table.literal_values().at(c.d);
        if (literal == want) {
            table.set(c.d, literal, Provenance::literal);
            continue;
        }
        table.note(disagreement("literal", c.d, literal, want));
        BigInt closed = coeff_closed_form(profile, c.d);
        if (closed != want) throw InvariantError(disagreement("closed-form", c.d, closed, want));
        table.set(c.d, std::move(closed), Provenance::closed_form);
    }

    BigInt top;
    if (!normalized_top(table, m, top) || top != system.at(m)) {
        throw InvariantError("normalization sum_d d a_d = 1 disagrees with system at d=" + std::to_string(m));
    }
    const BigInt closed_top = coeff_closed_form(profile, m);
    if (closed_top != top) throw InvariantError(disagreement("closed-form", m, closed_top, top));
    if (table.literal_values().at(m) != top) {
        table.note("literal a_m = " + to_string(table.literal_values().at(m)) + " replaced by normalized " +
                   to_string(top));
    }
    table.set(m, std::move(top), Provenance::normalized);
    return table;
}

CoefficientTable permissive_table(const RamificationProfile& profile) {
    const Degree m = profile.degree();
    CoefficientTable table(m);
    table.set(1, coeff_a1(profile), Provenance::literal);
    for (const auto& c : profile.classes()) {
        BigInt literal = coeff_literal(profile, c.d);
        table.set_literal(c.d, literal);
        if (c.d != m) table.set(c.d, std::move(literal), Provenance::literal);
    }
    BigInt top;
    if (normalized_top(table, m, top)) {
        if (table.literal_values().at(m) != top) {
            table.note("literal a_m = " + to_string(table.literal_values().at(m)) + " replaced by normalized " +
                       to_string(top));
        }
        table.set(m, std::move(top), Provenance::normalized);
    } else {
        table.note("normalized a_m is not integral; using the literal value");
        table.set(m, table.literal_values().at(m), Provenance::literal);
    }

    try {
        const CoefficientTable system = coeff_system(profile);
        for (const auto& [d, entry] : table.entries()) {
            if (entry.value != system.at(d)) table.note(disagreement("permissive", d, entry.value, system.at(d)));
        }
    } catch (const InvariantError& e) {
        table.note(std::string("system oracle unavailable: ") + e.what());
    }
    return table;
}

}  // namespace

CoefficientTable coeff_table(const RamificationProfile& profile) {
    return profile.mode() == Mode::strict ? strict_table(profile) : permissive_table(profile);
}

BigInt gram_eigen_on_divisor_classes(const CoefficientTable& table, Degree g) {
    const Degree m = table.degree();
    if (g == 0 || m % g != 0) {
        throw ValidationError("g = " + std::to_string(g) + " does not divide m = " + std::to_string(m));
    }
    BigInt acc = 0;
    for (const auto& [d, entry] : table.entries()) {
        if (g % d == 0) acc += ulong_big(d) * entry.value;
    }
    return acc;
}

}  // namespace cyclic_shape
