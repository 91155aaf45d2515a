"""Generate trace-zero Gram fixtures for the four cyclic nonic fields of
conductor 1729 = 7 * 13 * 19 with ramification indices (3, 3, 9).

Each field is the fixed field of the kernel H of a character
phi: (Z/1729)^* -> Z/9; its Gaussian periods eta_j (sums of zeta^x over the
cosets of H) form a normal integral basis, since the conductor is squarefree.
Traces come from Ramanujan sums: Tr_K(zeta^c) = c_N(c) / |H| summed over a
coset, so all Gram entries are exact integers.

The minimal polynomial of -eta_0 is recomputed numerically and compared with
the expected defining polynomial before anything is written. The trace-zero
basis eta_0 - eta_j (j = 1..8) is then disguised by a seeded unimodular
change of basis, as an external CAS would return an unrelated basis.

Usage: python3 tools/make_period_fixtures.py [output_dir]
"""

import json
import math
import random
import sys
from pathlib import Path

import mpmath as mp

PRIMES = (7, 13, 19)
INDICES = {7: 3, 13: 3, 19: 9}
DEGREE = 9

# Coefficients, leading first, of the four defining polynomials.
EXPECTED = [
    [1, -1, -578, -1855, 87155, 310749, -4599958, -6198626, 102071235, -169800379],
    [1, -1, -578, -1855, 87155, 518229, -2594318, -22409730, -36985319, -7889903],
    [1, -1, -578, 1603, 88884, -430992, -3668027, 27283459, -40339579, -7447279],
    [1, -1, -578, 1603, 88884, -119772, -5379737, -3169418, 113584646, 256187183],
]


def primitive_root(p):
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in range(2, p) if (p - 1) % q == 0 and is_prime(q)):
            return g
    raise ValueError(p)


def is_prime(n):
    return n > 1 and all(n % k for k in range(2, math.isqrt(n) + 1))


def mobius(n):
    result = 1
    for p in range(2, n + 1):
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        if n == 1:
            break
    return result


def totient(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def cosets(units):
    n = math.prod(PRIMES)
    logs = {}
    for p in PRIMES:
        g, y, table = primitive_root(p), 1, {}
        for k in range(p - 1):
            table[y] = k
            y = y * g % p
        logs[p] = table

    def phi(x):
        return sum(logs[p][x % p] * (DEGREE // INDICES[p]) * units[p] for p in PRIMES) % DEGREE

    classes = [[] for _ in range(DEGREE)]
    for x in range(1, n):
        if math.gcd(x, n) == 1:
            classes[phi(x)].append(x)
    # Order the periods along the Galois action of a generator.
    gen = next(x for x in range(2, n) if math.gcd(x, n) == 1 and math.gcd(phi(x), DEGREE) == 1)
    step = phi(gen)
    return n, [classes[(j * step) % DEGREE] for j in range(DEGREE)]


def ramanujan(n, c, cache={}):
    g = math.gcd(c, n)
    if (n, g) not in cache:
        cache[(n, g)] = mobius(n // g) * totient(g)
    return cache[(n, g)]


def full_gram(n, classes):
    h = len(classes[0])
    row = []
    for j in range(DEGREE):
        total = sum(ramanujan(n, x + y) for x in classes[0] for y in classes[j])
        assert total % h == 0
        row.append(total // h)
    return [[row[(j - i) % DEGREE] for j in range(DEGREE)] for i in range(DEGREE)]


def minimal_polynomial(n, classes):
    mp.mp.dps = 60
    poly = [mp.mpf(1)]
    for c in classes:
        v = mp.fsum(mp.cos(2 * mp.pi * a / n) for a in c)
        nxt = [mp.mpf(0)] * (len(poly) + 1)
        for i, cf in enumerate(poly):
            nxt[i] += cf
            nxt[i + 1] += cf * v
        poly = nxt
    return [int(mp.nint(c)) for c in poly]


def trace_zero_gram(full):
    basis = [[1 if k == 0 else (-1 if k == j else 0) for k in range(DEGREE)] for j in range(1, DEGREE)]
    return congruence(basis, full)


def congruence(vectors, gram):
    def ip(u, v):
        return sum(u[i] * gram[i][j] * v[j] for i in range(len(u)) for j in range(len(v)))

    return [[ip(u, v) for v in vectors] for u in vectors]


def random_unimodular(dim, rng, steps=24):
    u = [[int(i == j) for j in range(dim)] for i in range(dim)]
    for _ in range(steps):
        i, j = rng.sample(range(dim), 2)
        k = rng.choice((-1, 1))
        for r in range(dim):
            u[r][i] += k * u[r][j]
    return u


def matrix_json(rows, **extra):
    out = {"dim": len(rows), "rows": [[str(x) for x in row] for row in rows]}
    out.update(extra)
    return out


def main():
    out_dir = Path(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures")
    out_dir.mkdir(parents=True, exist_ok=True)
    rng = random.Random(1729)
    seen = []
    for units in ({7: 1, 13: 1, 19: 1}, {7: 1, 13: 2, 19: 1}, {7: 2, 13: 1, 19: 1}, {7: 2, 13: 2, 19: 1}):
        n, classes = cosets(units)
        poly = minimal_polynomial(n, classes)
        if poly not in EXPECTED:
            raise SystemExit(f"unexpected polynomial for units {units}: {poly}")
        k = EXPECTED.index(poly) + 1
        seen.append(k)
        tz = trace_zero_gram(full_gram(n, classes))
        u = random_unimodular(DEGREE - 1, rng)
        cols = [[u[r][c] for r in range(DEGREE - 1)] for c in range(DEGREE - 1)]
        disguised = congruence(cols, tz)
        poly_text = " ".join(str(c) for c in poly)
        (out_dir / f"field9_{k}.json").write_text(
            json.dumps(matrix_json(disguised, polynomial=poly_text), indent=1) + "\n")
        if k == 1:
            # Field Gram in the normal-basis differences used by A(d).
            b = [[int(r == c) - int(r == (c + 1) % DEGREE) for r in range(DEGREE)] for c in range(DEGREE)]
            aligned = congruence(b, full_gram(n, classes))
            aligned = [row[1:] for row in aligned[1:]]
            (out_dir / "field9_aligned.json").write_text(json.dumps(matrix_json(aligned), indent=1) + "\n")
            tampered = [row[:] for row in aligned]
            tampered[2][5] += 1
            tampered[5][2] += 1
            (out_dir / "field9_tampered.json").write_text(json.dumps(matrix_json(tampered), indent=1) + "\n")
    if sorted(seen) != [1, 2, 3, 4]:
        raise SystemExit(f"fields do not cover all four polynomials: {seen}")


if __name__ == "__main__":
    main()
