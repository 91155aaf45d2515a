#include "cyclic_shape/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "cyclic_shape/errors.hpp"

namespace cyclic_shape {

std::size_t isometry_dimension_cap() {
    if (const char* env = std::getenv("CYCLIC_SHAPE_MAX_DIM")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<std::size_t>(std::min<long>(v, static_cast<long>(kEnumerationDimCap)));
        }
    }
    return kDefaultIsometryDimCap;
}

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2, or nullopt when some
// pivot is not positive.
std::optional<RationalMatrix> quadratic_decomposition(const IntMatrix& G) {
    if (!G.is_symmetric()) throw ValidationError("Gram matrix must be symmetric");
    const std::size_t n = G.dim();
    RationalMatrix q(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q[i][j] = G(i + 1, j + 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (q[i][i] <= 0) return std::nullopt;
        for (std::size_t j = i + 1; j < n; ++j) {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
    return q;
}

void require_enumerable(const IntMatrix& G) {
    if (G.dim() == 0) throw ValidationError("empty Gram matrix");
    if (G.dim() > kEnumerationDimCap) {
        throw ValidationError("dimension " + std::to_string(G.dim()) + " exceeds enumeration cap " +
                              std::to_string(kEnumerationDimCap));
    }
}

class Enumerator {
public:
    Enumerator(const IntMatrix& G, RationalMatrix q, const BigInt& bound, std::size_t limit)
        : q_(std::move(q)), bound_(bound), limit_(limit), x_(G.dim()) {}

    std::vector<ShortVector> run() {
        if (bound_ > 0) level(x_.size() - 1, Rational(bound_), true);
        std::sort(out_.begin(), out_.end(), [](const ShortVector& a, const ShortVector& b) {
            if (a.norm != b.norm) return a.norm < b.norm;
            return a.coords < b.coords;
        });
        return std::move(out_);
    }

private:
    // Walks coordinate i given x_{i+1..n}; `zero_above` restricts x_i >= 0 so
    // that exactly one of v, -v is produced.
    void level(std::size_t i, const Rational& remaining, bool zero_above) {
        Rational shift = 0;  // sum_{j > i} q_ij x_j
        for (std::size_t j = i + 1; j < x_.size(); ++j) {
            if (x_[j] != 0) shift += q_[i][j] * x_[j];
        }
        // Integer x with q_ii (x + shift)^2 <= remaining, i.e. |b x - a| <= R
        // where a / b = -shift and R = isqrt(floor(remaining b^2 / q_ii)).
        const Rational center = -shift;
        const BigInt a = center.get_num();
        const BigInt b = center.get_den();
        const Rational radius_sq = remaining / q_[i][i];
        BigInt y = radius_sq.get_num() * b * b;
        mpz_fdiv_q(y.get_mpz_t(), y.get_mpz_t(), radius_sq.get_den().get_mpz_t());
        BigInt r;
        mpz_sqrt(r.get_mpz_t(), y.get_mpz_t());
        BigInt lo = a - r, hi = a + r;
        mpz_cdiv_q(lo.get_mpz_t(), lo.get_mpz_t(), b.get_mpz_t());
        mpz_fdiv_q(hi.get_mpz_t(), hi.get_mpz_t(), b.get_mpz_t());
        if (zero_above && lo < 0) lo = 0;

        for (BigInt xi = lo; xi <= hi; ++xi) {
            const Rational t = xi + shift;
            const Rational left = remaining - q_[i][i] * t * t;
            if (left < 0) continue;
            x_[i] = xi;
            const bool still_zero = zero_above && xi == 0;
            if (i == 0) {
                if (!still_zero) emit(left);
            } else {
                level(i - 1, left, still_zero);
            }
        }
        x_[i] = 0;
    }

    void emit(const Rational& left) {
        const Rational norm = Rational(bound_) - left;
        if (norm.get_den() != 1) throw InvariantError("non-integral norm in enumeration");
        if (out_.size() >= limit_) {
            throw ValidationError("short-vector enumeration exceeded limit of " + std::to_string(limit_) + " vectors");
        }
        out_.push_back({x_, norm.get_num()});
    }

    RationalMatrix q_;
    BigInt bound_;
    std::size_t limit_;
    std::vector<BigInt> x_;
    std::vector<ShortVector> out_;
};

}  // namespace

bool is_positive_definite(const IntMatrix& G) { return quadratic_decomposition(G).has_value(); }

std::vector<ShortVector> short_vectors(const IntMatrix& G, const BigInt& bound, std::size_t limit) {
    require_enumerable(G);
    auto q = quadratic_decomposition(G);
    if (!q) throw ValidationError("short-vector enumeration requires a positive definite Gram matrix");
    if (bound < 0) throw ValidationError("enumeration bound must be nonnegative");
    return Enumerator(G, std::move(*q), bound, limit).run();
}

std::uint64_t LatticeFingerprint::count(const BigInt& k) const {
    auto it = theta.find(k);
    return it == theta.end() ? 0 : it->second;
}

LatticeFingerprint fingerprint(const IntMatrix& G, const BigInt& theta_bound) {
    require_enumerable(G);
    if (!is_positive_definite(G)) throw ValidationError("fingerprint requires a positive definite Gram matrix");
    LatticeFingerprint fp;
    fp.dimension = G.dim();
    fp.determinant = det_exact(G);
    fp.theta_bound = theta_bound;

    const Reduction red = lll_reduce(G);
    BigInt min_diag = red.gram(1, 1);
    for (std::size_t i = 2; i <= red.gram.dim(); ++i) min_diag = std::min(min_diag, BigInt(red.gram(i, i)));
    const auto shortest = short_vectors(red.gram, min_diag);
    fp.minimum = shortest.front().norm;

    fp.theta[BigInt(0)] = 1;
    if (theta_bound > 0) {
        for (const auto& v : short_vectors(red.gram, theta_bound)) fp.theta[v.norm] += 2;
    }
    return fp;
}

Reduction lll_reduce(const IntMatrix& G0) {
    const std::size_t n = G0.dim();
    IntMatrix G = G0;
    IntMatrix U = identity(n);
    RationalMatrix mu(n, std::vector<Rational>(n));
    std::vector<Rational> B(n);

    auto g = [&](std::size_t i, std::size_t j) -> BigInt& { return G(i + 1, j + 1); };

    auto orthogonalize = [&] {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                Rational s = g(i, j);
                for (std::size_t l = 0; l < j; ++l) s -= mu[j][l] * mu[i][l] * B[l];
                mu[i][j] = s / B[j];
            }
            Rational s = g(i, i);
            for (std::size_t l = 0; l < i; ++l) s -= mu[i][l] * mu[i][l] * B[l];
            B[i] = s;
            if (B[i] <= 0) throw ValidationError("LLL reduction requires a positive definite Gram matrix");
        }
    };

    // b_k <- b_k - r b_j
    auto subtract = [&](std::size_t k, std::size_t j, const BigInt& r) {
        for (std::size_t i = 1; i <= n; ++i) U(i, k + 1) -= r * U(i, j + 1);
        for (std::size_t i = 0; i < n; ++i) g(k, i) -= r * g(j, i);
        for (std::size_t i = 0; i < n; ++i) {
            if (i != k) g(i, k) = g(k, i);
        }
        g(k, k) -= r * g(k, j);
    };

    auto swap_adjacent = [&](std::size_t k) {
        for (std::size_t i = 1; i <= n; ++i) std::swap(U(i, k + 1), U(i, k));
        for (std::size_t i = 0; i < n; ++i) std::swap(g(k, i), g(k - 1, i));
        for (std::size_t i = 0; i < n; ++i) std::swap(g(i, k), g(i, k - 1));
    };

    auto round_nearest = [](const Rational& q) {
        BigInt num = 2 * q.get_num() + q.get_den();
        BigInt den = 2 * q.get_den();
        BigInt r;
        mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return r;
    };

    if (n == 0) return {G, U};
    orthogonalize();
    const Rational delta(3, 4);
    std::size_t k = 1;
    while (k < n) {
        for (std::size_t jj = k; jj-- > 0;) {
            const BigInt r = round_nearest(mu[k][jj]);
            if (r == 0) continue;
            subtract(k, jj, r);
            for (std::size_t l = 0; l < jj; ++l) mu[k][l] -= r * mu[jj][l];
            mu[k][jj] -= r;
        }
        if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            ++k;
        } else {
            swap_adjacent(k);
            orthogonalize();
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
    return {G, U};
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::isometric: return "isometric";
        case Verdict::not_isometric: return "not_isometric";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

IsometryReport separated(std::string invariant, std::string left, std::string right) {
    IsometryReport r;
    r.verdict = Verdict::not_isometric;
    r.invariant = std::move(invariant);
    r.left_value = std::move(left);
    r.right_value = std::move(right);
    return r;
}

struct Candidate {
    std::vector<BigInt> coords;
    std::vector<BigInt> image;  // G2 * coords
};

BigInt dot(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Finds V with V^T target V = source, column by column: column i of V is a
// vector of `target` with norm source(i, i) and the prescribed inner
// products with the columns already placed.
class BasisImageSearch {
public:
    BasisImageSearch(const IntMatrix& source, const IntMatrix& target, const std::vector<ShortVector>& target_vectors)
        : source_(source), n_(source.dim()), candidates_(n_), chosen_(n_, nullptr) {
        for (std::size_t i = 0; i < n_; ++i) {
            for (const auto& sv : target_vectors) {
                if (sv.norm != source(i + 1, i + 1)) continue;
                for (int sign : {1, -1}) {
                    Candidate c;
                    c.coords = sv.coords;
                    if (sign < 0)
                        for (auto& x : c.coords) x = -x;
                    c.image.resize(n_);
                    for (std::size_t r = 0; r < n_; ++r)
                        for (std::size_t s = 0; s < n_; ++s) c.image[r] += target(r + 1, s + 1) * c.coords[s];
                    candidates_[i].push_back(std::move(c));
                }
            }
        }
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return candidates_[a].size() < candidates_[b].size(); });
    }

    std::optional<IntMatrix> run() {
        if (n_ == 0 || !place(0)) return std::nullopt;
        IntMatrix V(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t r = 0; r < n_; ++r) V(r + 1, i + 1) = chosen_[i]->coords[r];
        return V;
    }

private:
    bool place(std::size_t t) {
        if (t == n_) return true;
        const std::size_t idx = order_[t];
        const auto& cands = candidates_[idx];
        // v and -v alternate in the list; the first column needs only one sign.
        const std::size_t step = (t == 0) ? 2 : 1;
        for (std::size_t c = 0; c < cands.size(); c += step) {
            const Candidate& cand = cands[c];
            bool ok = true;
            for (std::size_t s = 0; s < t && ok; ++s) {
                const std::size_t other = order_[s];
                ok = dot(cand.coords, chosen_[other]->image) == source_(idx + 1, other + 1);
            }
            if (!ok) continue;
            chosen_[idx] = &cand;
            if (place(t + 1)) return true;
        }
        chosen_[idx] = nullptr;
        return false;
    }

    const IntMatrix& source_;
    std::size_t n_;
    std::vector<std::vector<Candidate>> candidates_;
    std::vector<const Candidate*> chosen_;
    std::vector<std::size_t> order_;
};

std::map<BigInt, std::uint64_t> norm_counts(const std::vector<ShortVector>& vs) {
    std::map<BigInt, std::uint64_t> counts;
    for (const auto& v : vs) counts[v.norm] += 2;
    return counts;
}

}  // namespace

IsometryReport isometric(const IntMatrix& G1, const IntMatrix& G2) {
    if (G1.dim() != G2.dim()) {
        return separated("dimension", std::to_string(G1.dim()), std::to_string(G2.dim()));
    }
    const std::size_t cap = isometry_dimension_cap();
    if (G1.dim() == 0 || G1.dim() > cap) {
        throw ValidationError("isometry testing limited to dimension " + std::to_string(cap) + " (got " +
                              std::to_string(G1.dim()) + ")");
    }
    if (!is_positive_definite(G1) || !is_positive_definite(G2)) {
        throw ValidationError("isometry testing requires positive definite Gram matrices");
    }
    const BigInt det1 = det_exact(G1), det2 = det_exact(G2);
    if (det1 != det2) return separated("determinant", to_string(det1), to_string(det2));

    const Reduction r1 = lll_reduce(G1);
    const Reduction r2 = lll_reduce(G2);
    BigInt bound = 0;
    for (std::size_t i = 1; i <= r1.gram.dim(); ++i) bound = std::max(bound, BigInt(r1.gram(i, i)));

    const auto sv1 = short_vectors(r1.gram, bound);
    const auto sv2 = short_vectors(r2.gram, bound);
    const auto n1 = norm_counts(sv1), n2 = norm_counts(sv2);
    if (n1 != n2) {
        const BigInt min1 = sv1.empty() ? BigInt(0) : sv1.front().norm;
        const BigInt min2 = sv2.empty() ? BigInt(0) : sv2.front().norm;
        if (min1 != min2) return separated("minimum", to_string(min1), to_string(min2));
        for (const auto& [k, c] : n1) {
            const auto it = n2.find(k);
            const std::uint64_t c2 = it == n2.end() ? 0 : it->second;
            if (c != c2) return separated("theta N(" + to_string(k) + ")", std::to_string(c), std::to_string(c2));
        }
        for (const auto& [k, c] : n2) {
            if (!n1.count(k)) return separated("theta N(" + to_string(k) + ")", "0", std::to_string(c));
        }
    }

    BasisImageSearch search(r1.gram, r2.gram, sv2);
    const auto V = search.run();
    if (!V) return separated("exhaustive search", "no basis image", "");

    // r1.gram = V^T r2.gram V, r_i.gram = U_i^T G_i U_i  =>  U = U_1 (U_2 V)^{-1}.
    IntMatrix U = r1.basis * inverse_unimodular(r2.basis * *V);
    if (!(congruence(U, G1) == G2)) throw InvariantError("isometry witness failed re-verification");
    const BigInt det_u = det_exact(U);
    if (det_u != 1 && det_u != -1) throw InvariantError("isometry witness is not unimodular");

    IsometryReport report;
    report.verdict = Verdict::isometric;
    report.witness = std::move(U);
    return report;
}

}  // namespace cyclic_shape
