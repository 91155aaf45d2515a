#include "cyclic_shape/ramification.hpp"

#include <numeric>
#include <string>

#include "cyclic_shape/errors.hpp"

namespace cyclic_shape {

const char* to_string(Mode mode) { return mode == Mode::strict ? "strict" : "permissive"; }

Mode parse_mode(const std::string& text) {
    if (text == "strict") return Mode::strict;
    if (text == "permissive") return Mode::permissive;
    throw ParseError("unknown mode '" + text + "' (expected strict|permissive)");
}

Rational ramification_index(Degree m, unsigned vp) {
    if (vp == m) throw ValidationError("ramification index undefined (v_p = m = " + std::to_string(m) + ")");
    Rational e(BigInt(static_cast<unsigned long>(m)),
               BigInt(static_cast<long>(m)) - BigInt(static_cast<unsigned long>(vp)));
    e.canonicalize();
    return e;
}

const DivisorClass& RamificationProfile::class_of(Degree d) const {
    for (const auto& c : classes_) {
        if (c.d == d) return c;
    }
    throw ValidationError("d = " + std::to_string(d) + " is not a divisor > 1 of m = " + std::to_string(m_));
}

RamificationProfile validate_tame_cyclic(Degree m, const FactoredDiscriminant& disc, Mode mode) {
    if (m < 2) throw ValidationError("degree m must be at least 2");
    RamificationProfile profile(m, disc, mode);
    profile.divisors_ = divisors(m);

    const BigInt big_m(static_cast<unsigned long>(m));
    for (const auto& [p, vp] : disc.factors()) {
        const std::string at = " at p=" + to_string(p);
        if (mpz_divisible_p(big_m.get_mpz_t(), p.get_mpz_t())) {
            throw ValidationError("wild ramification" + at + " (p divides m = " + std::to_string(m) + ")");
        }
        if (vp == m) {
            throw ValidationError("ramification index undefined" + at + " (v_p = m = " + std::to_string(m) + ")");
        }
        if (vp > m) {
            throw ValidationError("valuation exceeds degree" + at + " (v_p = " + std::to_string(vp) +
                                  " > m = " + std::to_string(m) + ")");
        }
        const Rational e = ramification_index(m, vp);
        if (e.get_den() != 1) {
            throw ValidationError("non-integral ramification index" + at + " (e_p = " + e.get_str() + ")");
        }
        const Degree ep = e.get_num().get_ui();
        if (mode == Mode::strict) {
            BigInt r = p % static_cast<unsigned long>(ep);
            if (r != 1) {
                throw ValidationError("prime not congruent to 1 mod its ramification index" + at +
                                      " (e_p = " + std::to_string(ep) + ")");
            }
        }
        profile.assignment_.emplace(p, ep);
    }

    for (std::size_t i = 1; i < profile.divisors_.size(); ++i) {
        DivisorClass c;
        c.d = profile.divisors_[i];
        for (const auto& [p, ep] : profile.assignment_) {
            if (ep == c.d) {
                c.primes.push_back(p);
                c.w *= p;
            }
        }
        BigInt numer = c.w - 1;
        if (!mpz_divisible_ui_p(numer.get_mpz_t(), c.d)) {
            throw ValidationError("non-integral f_d at d=" + std::to_string(c.d) + " (w_d = " + to_string(c.w) + ")");
        }
        c.f = numer / static_cast<unsigned long>(c.d);
        profile.classes_.push_back(std::move(c));
    }

    if (mode == Mode::strict) {
        Degree generated = 1;
        for (const auto& [p, ep] : profile.assignment_) generated = std::lcm(generated, ep);
        if (generated != m) {
            throw ValidationError("ramification indices do not generate the degree (lcm e_p = " +
                                  std::to_string(generated) + ", m = " + std::to_string(m) + ")");
        }
        // chi(-1) = prod over p with e_p even of (-1)^((p-1)/e_p).
        bool odd = false;
        for (const auto& [p, ep] : profile.assignment_) {
            if (ep % 2 != 0) continue;
            BigInt q = (p - 1) / static_cast<unsigned long>(ep);
            if (mpz_odd_p(q.get_mpz_t())) odd = !odd;
        }
        const int expected_sign = (odd && (m / 2) % 2 == 1) ? -1 : 1;
        if (disc.sign() != expected_sign) {
            if (m % 2 == 1) throw ValidationError("sign inconsistent with odd degree (d must be positive)");
            throw ValidationError(std::string("sign inconsistent with ramification parity (expected ") +
                                  (expected_sign > 0 ? "positive" : "negative") + " d for a " +
                                  (odd ? "totally imaginary" : "totally real") + " field)");
        }
        profile.odd_character_ = odd;
    } else {
        profile.odd_character_ = disc.sign() < 0;
    }
    return profile;
}

std::pair<BigInt, BigInt> w_and_f(const RamificationProfile& profile, Degree d) {
    if (d == 1) throw ValidationError("w_d and f_d are defined for divisors d > 1 only");
    const auto& c = profile.class_of(d);
    return {c.w, c.f};
}

}  // namespace cyclic_shape
