#pragma once

// Exact verification tools for small positive definite integral lattices
// given by Gram matrices: definiteness, short-vector enumeration, theta
// fingerprints, LLL reduction and isometry testing with witnesses.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclic_shape/matrix.hpp"

namespace cyclic_shape {

inline constexpr std::size_t kEnumerationDimCap = 16;
inline constexpr std::size_t kDefaultIsometryDimCap = 12;
inline constexpr std::size_t kDefaultVectorLimit = 2'000'000;

/// Isometry dimension cap: 12, or CYCLIC_SHAPE_MAX_DIM clamped to [1, 16].
std::size_t isometry_dimension_cap();

/// Exact LDL^T over the rationals; true iff every pivot is positive.
/// Throws ValidationError for non-symmetric input.
bool is_positive_definite(const IntMatrix& G);

struct ShortVector {
    std::vector<BigInt> coords;
    BigInt norm;  // v^T G v
};

/// One representative per +-pair of the vectors with 0 < v^T G v <= bound,
/// normalized so the last nonzero coordinate is positive, sorted by
/// (norm, coordinates). Throws for indefinite input, dim > 16, or more than
/// `limit` representatives.
std::vector<ShortVector> short_vectors(const IntMatrix& G, const BigInt& bound,
                                       std::size_t limit = kDefaultVectorLimit);

struct LatticeFingerprint {
    std::size_t dimension = 0;
    BigInt determinant;
    BigInt minimum;
    BigInt theta_bound;
    /// N(k) = #{v : v^T G v = k} for 0 <= k <= theta_bound, nonzero counts
    /// only; full vector counts, so N(0) = 1 and N(k) is even for k > 0.
    std::map<BigInt, std::uint64_t> theta;

    std::uint64_t count(const BigInt& k) const;
    friend bool operator==(const LatticeFingerprint&, const LatticeFingerprint&) = default;
};

LatticeFingerprint fingerprint(const IntMatrix& G, const BigInt& theta_bound);

struct Reduction {
    IntMatrix gram;   // basis^T G basis
    IntMatrix basis;  // unimodular, columns are the new basis vectors
};

/// LLL with delta = 3/4 in exact rational arithmetic.
Reduction lll_reduce(const IntMatrix& G);

enum class Verdict { isometric, not_isometric, inconclusive };
const char* to_string(Verdict v);

struct IsometryReport {
    Verdict verdict = Verdict::inconclusive;
    /// U with det U = +-1 and U^T G1 U = G2 (isometric only).
    std::optional<IntMatrix> witness;
    /// Separating invariant (not_isometric only): "dimension", "determinant",
    /// "minimum", "theta N(k)" or "exhaustive search".
    std::string invariant;
    std::string left_value;
    std::string right_value;
};

/// Complete backtracking search within the dimension cap. Throws
/// ValidationError for indefinite input or dim above the cap.
IsometryReport isometric(const IntMatrix& G1, const IntMatrix& G2);

}  // namespace cyclic_shape
