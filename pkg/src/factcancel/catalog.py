"""Named input catalogs shared by the test-suite and the verify command.

Deterministic: every random construction takes an explicit seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .hyper import HyperParams
from .fuchs import FuchsianSystem
from .matfun import MatQ

F = Fraction

# 20 rationals with denominators <= 30
SCALAR_LAMBDAS = [
    F(1, 2),
    F(2, 3),
    F(-7, 10),
    F(5, 6),
    F(-11, 12),
    F(1, 3),
    F(3, 4),
    F(-1, 5),
    F(4, 7),
    F(-5, 8),
    F(2, 9),
    F(7, 11),
    F(-3, 13),
    F(9, 14),
    F(11, 15),
    F(-8, 17),
    F(5, 21),
    F(-13, 24),
    F(17, 28),
    F(-19, 30),
]

IDEMPOTENT_HALF = MatQ([[F(1, 2), F(1, 2)], [F(1, 2), F(1, 2)]])


def unimodular(n: int, rng: random.Random, steps: int = 12) -> MatQ:
    """Random integer matrix of determinant +-1: a product of elementary
    row operations on the identity."""
    rows = [[F(1) if i == j else F(0) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.choice([-2, -1, 1, 2])
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    return MatQ(rows)


def from_jordan_data(blocks, seed: int) -> MatQ:
    """Block-diagonal matrix with the given (eigenvalue, size) Jordan
    blocks, conjugated by a seeded random unimodular integer matrix."""
    n = sum(s for _, s in blocks)
    rows = [[F(0)] * n for _ in range(n)]
    at = 0
    for lam, size in blocks:
        J = MatQ.jordan_block(F(lam), size)
        for i in range(size):
            for j in range(size):
                rows[at + i][at + j] = J[i, j]
        at += size
    D = MatQ(rows)
    U = unimodular(n, random.Random(seed))
    return U @ D @ U.inverse()


def matrix_catalog() -> list[MatQ]:
    """Matrices with prescribed rational Jordan data (sizes 2..4,
    largest block <= 3), plus the rank-one idempotent-doubling example."""
    out = [
        IDEMPOTENT_HALF,
        MatQ.diagonal([F(1, 2), F(1, 3)]),
        from_jordan_data([(F(1, 2), 1), (F(1, 3), 1), (F(1, 6), 1)], seed=1),
        from_jordan_data([(F(1, 2), 2)], seed=2),
        from_jordan_data([(F(2, 3), 2), (F(-1, 4), 1)], seed=3),
        from_jordan_data([(F(1, 5), 3)], seed=4),
        from_jordan_data([(F(1, 2), 2), (F(1, 2), 1)], seed=5),
        from_jordan_data([(F(-3, 7), 1), (F(2, 7), 2)], seed=6),
        from_jordan_data([(F(1, 6), 2), (F(5, 6), 2)], seed=7),
        from_jordan_data([(F(3, 10), 3), (F(-1, 2), 1)], seed=8),
        from_jordan_data([(F(0), 1), (F(1), 1), (F(1, 2), 1), (F(1, 3), 1)], seed=9),
        MatQ.diagonal([F(2), F(-3), F(5)]),
    ]
    return out


def random_rational_matrix(n: int, rng: random.Random, den: int = 6) -> MatQ:
    return MatQ(
        [
            [F(rng.randint(-3, 3), rng.randint(1, den)) for _ in range(n)]
            for _ in range(n)
        ]
    )


def fuchsian_catalog(seed: int = 2024) -> list[FuchsianSystem]:
    """Two-pole systems, 2x2 and 3x3, commuting and non-commuting."""
    rng = random.Random(seed)
    out = []
    # commuting pairs: diagonal residues and polynomials in one matrix
    out.append(
        FuchsianSystem(
            m=2,
            gammas=(F(0), F(1)),
            residues=(MatQ.diagonal([F(1, 2), F(1, 3)]), MatQ.diagonal([F(1, 4), F(-1, 6)])),
        )
    )
    A = MatQ([[F(1, 2), F(1)], [F(0), F(1, 2)]])
    out.append(
        FuchsianSystem(
            m=2,
            gammas=(F(0), F(2)),
            residues=(A, A @ A),
        )
    )
    out.append(
        FuchsianSystem(
            m=3,
            gammas=(F(-1), F(1)),
            residues=(
                MatQ.diagonal([F(1, 2), F(1, 2), F(1, 5)]),
                MatQ.diagonal([F(1, 3), F(2, 3), F(1, 3)]),
            ),
        )
    )
    # non-commuting random systems
    for n in (2, 2, 2, 3, 3, 3, 2, 3):
        g1 = F(rng.randint(-2, 2))
        g2 = g1 + F(rng.randint(1, 3))
        out.append(
            FuchsianSystem(
                m=n,
                gammas=(g1, g2),
                residues=(
                    random_rational_matrix(n, rng),
                    random_rational_matrix(n, rng),
                ),
            )
        )
    return out


HYPER_M1 = HyperParams.of([F(1, 3)], [F(1, 2)])
HYPER_M2 = HyperParams.of([F(1, 3), F(1, 5)], [F(1, 2), F(1, 4)])
HYPER_M3 = HyperParams.of(
    [F(1, 3), F(1, 5), F(1, 7)], [F(1, 2), F(1, 4), F(1, 8)]
)
HYPER_GAMMA0 = HyperParams.of([F(1, 2), F(1, 4)], [F(1, 3), F(5, 12)])

# gamma = 0 instance on which the d_k-augmented target is NOT a multiple of
# the measured denominator (den of the a_j vector has primes outside b)
HYPER_GAMMA0_EXCESS = HyperParams.of([F(1, 3), F(5, 12)], [F(1, 2), F(1, 4)])

HYPER_CATALOG = [HYPER_M1, HYPER_M2, HYPER_M3]


def constcoef_catalog() -> list[MatQ]:
    """Rational-spectrum matrices (size <= 3) with squarefree minimal
    polynomial, i.e. diagonalizable."""
    return [
        IDEMPOTENT_HALF,
        MatQ.diagonal([F(1, 2), F(1, 3)]),
        MatQ.diagonal([F(2), F(-1), F(0)]),
        from_jordan_data([(F(1, 2), 1), (F(1, 3), 1), (F(1, 6), 1)], seed=11),
        from_jordan_data([(F(2, 3), 1), (F(-1, 4), 1)], seed=12),
        from_jordan_data([(F(1, 5), 1), (F(3, 5), 1), (F(1), 1)], seed=13),
        from_jordan_data([(F(-3, 7), 1), (F(2, 7), 1)], seed=14),
        from_jordan_data([(F(1, 6), 1), (F(5, 6), 1), (F(0), 1)], seed=15),
        from_jordan_data([(F(3, 10), 1), (F(-1, 2), 1)], seed=16),
    ]
