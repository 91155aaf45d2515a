#pragma once

// Dense exact-integer square matrices and the structured families used by the
// trace-form constructions. All public indices are 1-based.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "cyclic_shape/exact.hpp"

namespace cyclic_shape {

class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n);  // zero matrix
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);

    std::size_t dim() const noexcept { return n_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return data_[(i - 1) * n_ + (j - 1)]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[(i - 1) * n_ + (j - 1)]; }

    bool is_symmetric() const;
    bool is_zero() const;
    IntMatrix transpose() const;
    /// Entrywise gcd (0 for the zero matrix).
    BigInt content() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t n_ = 0;
    std::vector<BigInt> data_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const BigInt& s, const IntMatrix& a);

IntMatrix identity(std::size_t n);
/// 1_n, the all-ones matrix.
IntMatrix ones(std::size_t n);

/// (A_d)_{ij} = 1 if (m/d) | (i - j), else 0.
IntMatrix build_A_d(Degree m, Degree d);
/// 1 on the diagonal, -1 on the subdiagonal and at (1, n).
IntMatrix build_B(std::size_t n);
/// Root lattice Gram: tridiagonal 2 / -1, n >= 1.
IntMatrix build_root_A(std::size_t n);
/// Extended (circulant) 2 / -1 Gram, equal to B^T B, n >= 2.
IntMatrix build_extended_A(std::size_t n);

/// B^T M B.
IntMatrix congruence(const IntMatrix& B, const IntMatrix& M);
/// Delete the first row and column.
IntMatrix minor_11(const IntMatrix& M);
/// 1_d (x) X: a d x d grid of copies of X.
IntMatrix kronecker(std::size_t ones_dim, const IntMatrix& X);

/// Fraction-free (Bareiss) elimination with row pivoting.
BigInt det_exact(const IntMatrix& M);

/// Inverse of a unimodular matrix; throws ValidationError if det != +-1.
IntMatrix inverse_unimodular(const IntMatrix& U);

/// Right-aligned columns separated by one space, one row per line.
std::string render_grid(const IntMatrix& M);
std::ostream& operator<<(std::ostream& os, const IntMatrix& M);

}  // namespace cyclic_shape
