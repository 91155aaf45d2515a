#include "cyclic_shape/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "cyclic_shape/errors.hpp"

namespace cyclic_shape {

namespace {

void require_same_dim(const IntMatrix& a, const IntMatrix& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw ValidationError(std::string("dimension mismatch in ") + op + ": " + std::to_string(a.dim()) + " vs " +
                              std::to_string(b.dim()));
    }
}

}  // namespace

IntMatrix::IntMatrix(std::size_t n) : n_(n), data_(n * n) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) throw ValidationError("matrix rows must form a square");
        for (long x : row) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
    IntMatrix M(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw ValidationError("matrix rows must form a square");
        for (std::size_t j = 0; j < rows.size(); ++j) M(i + 1, j + 1) = rows[i][j];
    }
    return M;
}

bool IntMatrix::is_symmetric() const {
    for (std::size_t i = 1; i <= n_; ++i)
        for (std::size_t j = i + 1; j <= n_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix T(n_);
    for (std::size_t i = 1; i <= n_; ++i)
        for (std::size_t j = 1; j <= n_; ++j) T(j, i) = (*this)(i, j);
    return T;
}

BigInt IntMatrix::content() const {
    BigInt g = 0;
    for (const auto& x : data_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    require_same_dim(a, b, "sum");
    IntMatrix c(a.dim());
    for (std::size_t i = 1; i <= a.dim(); ++i)
        for (std::size_t j = 1; j <= a.dim(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    require_same_dim(a, b, "difference");
    IntMatrix c(a.dim());
    for (std::size_t i = 1; i <= a.dim(); ++i)
        for (std::size_t j = 1; j <= a.dim(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    require_same_dim(a, b, "product");
    const std::size_t n = a.dim();
    IntMatrix c(n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t k = 1; k <= n; ++k) {
            const BigInt& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 1; j <= n; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

IntMatrix operator*(const BigInt& s, const IntMatrix& a) {
    IntMatrix c(a.dim());
    for (std::size_t i = 1; i <= a.dim(); ++i)
        for (std::size_t j = 1; j <= a.dim(); ++j) c(i, j) = s * a(i, j);
    return c;
}

IntMatrix identity(std::size_t n) {
    IntMatrix I(n);
    for (std::size_t i = 1; i <= n; ++i) I(i, i) = 1;
    return I;
}

IntMatrix ones(std::size_t n) {
    IntMatrix J(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) J(i, j) = 1;
    return J;
}

IntMatrix build_A_d(Degree m, Degree d) {
    if (m == 0 || d == 0 || m % d != 0) {
        throw ValidationError("d = " + std::to_string(d) + " does not divide m = " + std::to_string(m));
    }
    const Degree step = m / d;
    IntMatrix A(m);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= m; ++j)
            if ((i > j ? i - j : j - i) % step == 0) A(i, j) = 1;
    return A;
}

IntMatrix build_B(std::size_t n) {
    if (n < 2) throw ValidationError("B_n requires n >= 2");
    IntMatrix B(n);
    for (std::size_t i = 1; i <= n; ++i) {
        B(i, i) = 1;
        if (i > 1) B(i, i - 1) = -1;
    }
    B(1, n) = -1;
    return B;
}

IntMatrix build_root_A(std::size_t n) {
    if (n < 1) throw ValidationError("root lattice A_n requires n >= 1");
    IntMatrix A(n);
    for (std::size_t i = 1; i <= n; ++i) {
        A(i, i) = 2;
        if (i > 1) A(i, i - 1) = A(i - 1, i) = -1;
    }
    return A;
}

IntMatrix build_extended_A(std::size_t n) {
    if (n < 2) throw ValidationError("extended lattice A'_n requires n >= 2");
    if (n == 2) return IntMatrix{{2, -2}, {-2, 2}};
    IntMatrix A = build_root_A(n);
    A(1, n) = A(n, 1) = -1;
    return A;
}

IntMatrix congruence(const IntMatrix& B, const IntMatrix& M) {
    require_same_dim(B, M, "congruence");
    const std::size_t n = B.dim();
    // Column supports of B; the structured B_m has two entries per column.
    std::vector<std::vector<std::size_t>> support(n + 1);
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t l = 1; l <= n; ++l)
            if (B(l, j) != 0) support[j].push_back(l);

    IntMatrix MB(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (auto l : support[j]) MB(i, j) += M(i, l) * B(l, j);

    IntMatrix R(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (auto k : support[i]) R(i, j) += B(k, i) * MB(k, j);
    return R;
}

IntMatrix minor_11(const IntMatrix& M) {
    if (M.dim() < 2) throw ValidationError("(1,1) minor requires dimension >= 2");
    IntMatrix R(M.dim() - 1);
    for (std::size_t i = 1; i <= R.dim(); ++i)
        for (std::size_t j = 1; j <= R.dim(); ++j) R(i, j) = M(i + 1, j + 1);
    return R;
}

IntMatrix kronecker(std::size_t ones_dim, const IntMatrix& X) {
    if (ones_dim < 1) throw ValidationError("Kronecker factor dimension must be >= 1");
    const std::size_t n = X.dim();
    IntMatrix K(ones_dim * n);
    for (std::size_t bi = 0; bi < ones_dim; ++bi)
        for (std::size_t bj = 0; bj < ones_dim; ++bj)
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = 1; j <= n; ++j) K(bi * n + i, bj * n + j) = X(i, j);
    return K;
}

BigInt det_exact(const IntMatrix& M) {
    const std::size_t n = M.dim();
    if (n == 0) return 1;
    std::vector<BigInt> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = M(i + 1, j + 1);
    auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };

    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                at(i, j) = std::move(t);
            }
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

IntMatrix inverse_unimodular(const IntMatrix& U) {
    const std::size_t n = U.dim();
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = U(i + 1, j + 1);
        aug[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && aug[piv][col] == 0) ++piv;
        if (piv == n) throw ValidationError("matrix is singular, not unimodular");
        std::swap(aug[piv], aug[col]);
        const Rational inv = 1 / aug[col][col];
        for (auto& x : aug[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            const Rational f = aug[r][col];
            for (std::size_t j = 0; j < 2 * n; ++j) aug[r][j] -= f * aug[col][j];
        }
    }
    IntMatrix inv(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = aug[i][n + j];
            if (x.get_den() != 1) throw ValidationError("matrix is not unimodular");
            inv(i + 1, j + 1) = x.get_num();
        }
    }
    return inv;
}

std::string render_grid(const IntMatrix& M) {
    const std::size_t n = M.dim();
    std::vector<std::size_t> width(n, 0);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) width[j - 1] = std::max(width[j - 1], to_string(M(i, j)).size());
    std::ostringstream os;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            const std::string s = to_string(M(i, j));
            if (j > 1) os << ' ';
            os << std::string(width[j - 1] - s.size(), ' ') << s;
        }
        os << '\n';
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& M) { return os << render_grid(M); }

}  // namespace cyclic_shape
