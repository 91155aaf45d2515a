#pragma once

// Reference computations used only by the tests. Each one reaches its answer
// by a route that shares no code with the library path it checks.

#include <cstdint>
#include <map>
#include <vector>

#include "cyclic_shape/exact.hpp"
#include "cyclic_shape/matrix.hpp"

namespace oracle {

using cyclic_shape::BigInt;
using cyclic_shape::IntMatrix;

struct PeriodField {
    std::vector<std::uint64_t> primes;   // squarefree conductor N = prod primes
    std::vector<std::uint64_t> indices;  // ramification index e_p per prime, e_p | p - 1
    std::vector<std::uint64_t> units;    // character exponent unit u_p (mod e_p), default 1
    std::uint64_t degree = 0;
};

/// Trace Gram matrix Tr(eta_i eta_j) of the Gaussian periods of the field
/// cut out by x -> sum_p ind_p(x) (m / e_p) u_p (mod m), with the periods
/// ordered along a generator of the Galois group. Traces are exact via
/// Ramanujan sums c_N.
IntMatrix period_trace_gram(const PeriodField& field);

/// The discriminant sign * prod p^(m - m/e_p) of the same field, with the
/// sign read off the character parity at -1.
cyclic_shape::FactoredDiscriminant period_discriminant(const PeriodField& field);

/// Determinant by Gaussian elimination over Q.
BigInt det_rational(const IntMatrix& M);

/// Theta counts N(k), 0 <= k <= bound, by brute force over the box
/// |x_i| <= box.
std::map<BigInt, std::uint64_t> theta_box(const IntMatrix& G, long bound, long box);

/// det of the root lattice Gram matrix A_n from the tridiagonal recurrence
/// D_n = 2 D_{n-1} - D_{n-2}.
BigInt root_lattice_det(std::size_t n);

}  // namespace oracle
