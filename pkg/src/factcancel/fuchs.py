"""Fuchsian systems y' = Q(z) y with Q(z) = sum A_i/(z - gamma_i).

Contains the cleared-denominator recurrence for the higher-derivative
matrices Q^[n], the bracket-sum assembly of the same matrices (the central
cross-validation oracle), the single-pole and commuting multi-pole operator
identities, and the per-k denominator certificate for the system.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm

import mpmath

from . import arith, falling
from .certificate import CancellationCertificate, make_certificate
from .errors import DimensionMismatch, IrrationalSpectrum, NotCommuting, SingularT
from .matfun import (
    MatQ,
    _compositions,
    _primitive_chain,
    bracket_table,
    char_poly,
    commuting_check,
    kernel_basis,
    rational_roots_monic,
    spectral,
)
from .poly import UniPoly, differentiate_scaled, integer_content_denominator

_ZERO = UniPoly.zero()


class PolyMat:
    """Rectangular matrix with UniPoly entries."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(e for e in row) for row in rows)

    @staticmethod
    def identity(n: int) -> "PolyMat":
        one = UniPoly.one()
        return PolyMat(
            [[one if i == j else _ZERO for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def from_matq(A: MatQ) -> "PolyMat":
        return PolyMat([[UniPoly.constant(e) for e in row] for row in A.rows])

    @staticmethod
    def scalar(p: UniPoly, n: int) -> "PolyMat":
        return PolyMat([[p if i == j else _ZERO for j in range(n)] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMat) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"PolyMat({[list(r) for r in self.rows]!r})"

    def __add__(self, other: "PolyMat") -> "PolyMat":
        return PolyMat(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other: "PolyMat") -> "PolyMat":
        return PolyMat(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ]
        )

    def __matmul__(self, other: "PolyMat") -> "PolyMat":
        if self.ncols != other.nrows:
            raise DimensionMismatch("incompatible shapes for product")
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = _ZERO
                for a, b in zip(row, col):
                    if not (a.is_zero() or b.is_zero()):
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return PolyMat(out)

    def scale_poly(self, p: UniPoly) -> "PolyMat":
        return PolyMat([[e * p for e in row] for row in self.rows])

    def scale(self, c) -> "PolyMat":
        c = Fraction(c) if not isinstance(c, Fraction) else c
        return PolyMat([[e.scale(c) for e in row] for row in self.rows])

    def derivative(self) -> "PolyMat":
        return PolyMat([[e.derivative() for e in row] for row in self.rows])

    def transpose(self) -> "PolyMat":
        return PolyMat(list(zip(*self.rows)))

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.rows for e in row)

    def coeff_denominator(self) -> int:
        out = 1
        for row in self.rows:
            for e in row:
                out = lcm(out, integer_content_denominator(e))
        return out


@dataclass(frozen=True)
class FuchsianSystem:
    """First-order system with simple poles at the (distinct) gammas.

    residues[i] is the matrix attached to 1/(z - gamma_i).  With
    augmented=True the matrices are the (m+1)x(m+1) zero-first-row form
    wrapping an m-unknown inhomogeneous system; otherwise they are m x m.
    """

    m: int
    gammas: tuple
    residues: tuple
    augmented: bool = False

    def __post_init__(self):
        gs = tuple(Fraction(g) if not isinstance(g, Fraction) else g for g in self.gammas)
        object.__setattr__(self, "gammas", gs)
        object.__setattr__(self, "residues", tuple(self.residues))
        if len(set(gs)) != len(gs):
            raise ValueError("poles must be pairwise distinct")
        if len(self.residues) != len(gs):
            raise DimensionMismatch("one residue matrix per pole required")
        want = self.m + 1 if self.augmented else self.m
        for A in self.residues:
            if A.size != want:
                raise DimensionMismatch(f"residues must be {want}x{want}")

    @property
    def size(self) -> int:
        return self.m + 1 if self.augmented else self.m

    @property
    def npoles(self) -> int:
        return len(self.gammas)

    def t_poly(self) -> UniPoly:
        """T(z) = prod (z - gamma_i), the denominator polynomial."""
        return UniPoly.from_roots(self.gammas)

    def to_json(self) -> str:
        return json.dumps(
            {
                "m": self.m,
                "gammas": [arith.format_rat(g) for g in self.gammas],
                "residues": [A.to_lists() for A in self.residues],
                "augmented": self.augmented,
            }
        )

    @staticmethod
    def from_json(s: str) -> "FuchsianSystem":
        d = json.loads(s)
        return FuchsianSystem(
            m=d["m"],
            gammas=tuple(arith.parse_rat(g) for g in d["gammas"]),
            residues=tuple(MatQ.from_lists(A) for A in d["residues"]),
            augmented=d.get("augmented", False),
        )


def q_matrix(system: FuchsianSystem):
    """Q(z) = sum A_i/(z - gamma_i) as a matrix of exact rational functions."""
    from .poly import RatFun

    n = system.size
    out = [[RatFun(UniPoly.zero()) for _ in range(n)] for _ in range(n)]
    for g, A in zip(system.gammas, system.residues):
        den = UniPoly((-g, 1))
        for i in range(n):
            for j in range(n):
                if A[i, j]:
                    out[i][j] = out[i][j] + RatFun(UniPoly.constant(A[i, j]), den)
    return out


def _tq_poly(system: FuchsianSystem) -> PolyMat:
    """T(z)Q(z) = sum A_i prod_{j != i}(z - gamma_j), entrywise polynomial."""
    n = system.size
    acc = PolyMat([[UniPoly.zero()] * n for _ in range(n)])
    for i, A in enumerate(system.residues):
        cof = UniPoly.from_roots(
            [g for j, g in enumerate(system.gammas) if j != i]
        )
        acc = acc + PolyMat.from_matq(A).scale_poly(cof)
    return acc


def qn_recurrence(system: FuchsianSystem, n: int) -> PolyMat:
    """T^n(z) Q^[n](z) by the cleared-denominator form of the recurrence
    Q^[n] = (Q^[n-1])' + Q^[n-1] Q; identity matrix at n = 0."""
    return qn_table(system, n)[n]


def qn_table(system: FuchsianSystem, n_max: int) -> list[PolyMat]:
    """[T^0 Q^[0], ..., T^{n_max} Q^[n_max]]."""
    T = system.t_poly()
    Tp = T.derivative()
    TQ = _tq_poly(system)
    out = [PolyMat.identity(system.size)]
    for n in range(1, n_max + 1):
        P = out[-1]
        nxt = P.derivative().scale_poly(T) - P.scale_poly(Tp.scale(n - 1)) + P @ TQ
        out.append(nxt)
    return out


def qn_via_brackets(system: FuchsianSystem, n: int) -> PolyMat:
    """T^n Q^[n] assembled from the bracket expansion of the derivatives:
    transpose of sum over |n| = n of <tA_1..tA_s>_n prod (z-gamma_i)^{n-n_i}."""
    s = system.npoles
    size = system.size
    tmats = [A.transpose() for A in system.residues]
    table = bracket_table(tmats, n)
    acc = PolyMat([[UniPoly.zero()] * size for _ in range(size)])
    for idx in _compositions(n, s):
        cof = UniPoly.one()
        for g, ni in zip(system.gammas, idx):
            cof = cof * UniPoly((-g, 1)) ** (n - ni)
        acc = acc + PolyMat.from_matq(table[idx]).scale_poly(cof)
    return acc.transpose()


# ---------------------------------------------------------------------------
# operator identities


def operator_identity_14(lam: Fraction, f: UniPoly, n: int) -> bool:
    """Single pole at 0: z^n (d/dz + lam/z)^n f equals
    sum_l C(n,l) <lam>_l z^{n-l} f^{(n-l)}, exactly."""
    # cleared form: G_j = z^j D^j f satisfies G_j = z G' - (j-1)G + lam G
    G = f
    for j in range(1, n + 1):
        G = G.derivative() * UniPoly.x() + G.scale(lam - (j - 1))
    rhs = UniPoly.zero()
    fall = Fraction(1)
    for l in range(n + 1):
        if l:
            fall *= lam - (l - 1)
        deriv = f
        for _ in range(n - l):
            deriv = deriv.derivative()
        rhs = rhs + (UniPoly.monomial(1, n - l) * deriv).scale(comb(n, l) * fall)
    return G == rhs


def operator_identity_16(lams, gammas, f: UniPoly, n: int) -> bool:
    """Commuting scalar multi-pole case: T^n D^n f / n! equals the multinomial
    sum of prod (z-gamma_i)^{n-n_i} Delta_{n_i}(lam_i) f^{(n_0)}/n_0!."""
    lams = [Fraction(l) if not isinstance(l, Fraction) else l for l in lams]
    gammas = [Fraction(g) if not isinstance(g, Fraction) else g for g in gammas]
    s = len(lams)
    if len(gammas) != s or len(set(gammas)) != s:
        raise ValueError("need matching, distinct poles")
    T = UniPoly.from_roots(gammas)
    Tp = T.derivative()
    tq = UniPoly.zero()
    for lam, g in zip(lams, gammas):
        tq = tq + UniPoly.from_roots([h for h in gammas if h != g]).scale(lam)
    # G_j = T^j D^j f / j!
    G = f
    for j in range(1, n + 1):
        G = (G.derivative() * T - G * Tp.scale(j - 1) + G * tq).scale(Fraction(1, j))
    rhs = UniPoly.zero()
    for idx in _compositions(n, s + 1):
        n0, rest = idx[0], idx[1:]
        term = differentiate_scaled(f, n0)
        coeff = Fraction(1)
        for lam, ni in zip(lams, rest):
            coeff *= falling.delta(lam, ni)
        if not coeff:
            continue
        for g, ni in zip(gammas, rest):
            term = term * UniPoly((-g, 1)) ** (n - ni)
        rhs = rhs + term.scale(coeff)
    return G == rhs


def operator_identity_24(
    system: FuchsianSystem, n: int, degree_cap: int = None
) -> bool:
    """Commuting-residue matrix identity: T^n D^n / n! with
    D = d/dz + sum tA_i/(z-gamma_i) equals the multinomial sum of
    prod (z-gamma_i)^{n-n_i} Delta_{n_1}(tA_1)...Delta_{n_s}(tA_s)
    (1/n_0!) d^{n_0}/dz^{n_0}, checked on the basis z^d E, d <= degree_cap."""
    if not commuting_check(list(system.residues)):
        raise NotCommuting("the residue matrices must pairwise commute")
    if degree_cap is None:
        degree_cap = 2 * n
    s = system.npoles
    size = system.size
    tmats = [A.transpose() for A in system.residues]
    T = system.t_poly()
    Tp = T.derivative()
    TtQ = _tq_poly(system).transpose()
    from .matfun import matrix_delta

    deltas = [
        [matrix_delta(M, ni) for ni in range(n + 1)] for M in tmats
    ]
    for d in range(degree_cap + 1):
        # lhs: G_j = T^j D^j (z^d E) / j!
        G = PolyMat.scalar(UniPoly.monomial(1, d), size)
        for j in range(1, n + 1):
            G = (
                G.derivative().scale_poly(T)
                - G.scale_poly(Tp.scale(j - 1))
                + TtQ @ G
            ).scale(Fraction(1, j))
        rhs = PolyMat([[UniPoly.zero()] * size for _ in range(size)])
        for idx in _compositions(n, s + 1):
            n0, rest = idx[0], idx[1:]
            if n0 > d:
                continue
            M = MatQ.identity(size)
            for i, ni in enumerate(rest):
                M = M @ deltas[i][ni]
            if M.is_zero():
                continue
            cof = UniPoly.monomial(comb(d, n0), d - n0)
            for g, ni in zip(system.gammas, rest):
                cof = cof * UniPoly((-g, 1)) ** (n - ni)
            rhs = rhs + PolyMat.from_matq(M).scale_poly(cof)
        if G != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# simultaneous diagonalization (sharp t1 t2 for commuting families)


def simultaneous_eigenbasis(mats: list[MatQ]) -> MatQ:
    """One invertible T with every T^{-1} A T diagonal; requires pairwise
    commuting, individually diagonalizable matrices with rational spectra."""
    if not mats:
        raise ValueError("need at least one matrix")
    size = mats[0].size
    spaces = [[tuple(Fraction(1) if i == j else Fraction(0) for i in range(size))
               for j in range(size)]]
    for A in mats:
        roots, rest = rational_roots_monic(char_poly(A))
        if rest.degree > 0:
            raise IrrationalSpectrum("non-rational eigenvalue")
        nxt = []
        for S in spaces:
            found = 0
            for lam in sorted(roots):
                # kernel of (A - lam E) restricted to span(S)
                N = A.shift(-lam)
                images = [
                    tuple(sum(row[i] * v[i] for i in range(size)) for row in N.rows)
                    for v in S
                ]
                B = MatQ(list(zip(*images)))  # size x len(S)
                sub = []
                for c in kernel_basis(B):
                    w = tuple(
                        sum(cj * v[i] for cj, v in zip(c, S)) for i in range(size)
                    )
                    sub.append(w)
                if sub:
                    nxt.append(sub)
                    found += len(sub)
            if found != len(S):
                raise SingularT("matrix is not diagonalizable")
        spaces = nxt
    columns = []
    for S in spaces:
        for v in S:
            columns.extend(_primitive_chain([v]))
    T = MatQ(list(zip(*columns)))
    T_inv = T.inverse()
    for A in mats:
        C = T_inv @ A @ T
        if any(C[i, j] != 0 for i in range(size) for j in range(size) if i != j):
            raise SingularT("simultaneous diagonalization failed")
    return T


# ---------------------------------------------------------------------------
# certificates


def certify_system(
    system: FuchsianSystem,
    k: int,
    degree_cap: int = None,
    digits: int = arith.DEFAULT_DIGITS,
) -> CancellationCertificate:
    """psi_k = exact lcm over n <= k of coefficient denominators of
    T^n Q^[n]/n!.  For pairwise commuting residues with rational spectra the
    certificate also carries the divisor bound
    t1 t2 (q b)^k d_k^{sum(r_i - 1)} prod_{p|b} p^{tau_p(k)}
    (q = product of pole denominators); otherwise it is measurement-only.
    degree_cap is accepted for interface symmetry; the measurement reads the
    recurrence matrices directly and needs no basis polynomials.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    T = system.t_poly()
    Tp = T.derivative()
    TQ = _tq_poly(system)
    psi = 1
    R = PolyMat.identity(system.size)
    for n in range(1, k + 1):
        R = (R.derivative().scale_poly(T) - R.scale_poly(Tp.scale(n - 1)) + R @ TQ).scale(
            Fraction(1, n)
        )
        psi = lcm(psi, R.coeff_denominator())

    bound = None
    const = None
    if commuting_check(list(system.residues)):
        try:
            datas = [spectral(A) for A in system.residues]
        except IrrationalSpectrum:
            datas = None
        if datas is not None:
            b = 1
            for data in datas:
                b = lcm(b, data.b)
            q = 1
            for g in system.gammas:
                q *= g.denominator
            r_max = max(data.r_max for data in datas)
            if all(data.r_max == 1 for data in datas):
                T_sim = simultaneous_eigenbasis(list(system.residues))
                t = T_sim.entry_denominator() * T_sim.inverse().entry_denominator()
                d_exp = 0
            else:
                t = 1
                for data in datas:
                    t *= data.t1 * data.t2
                d_exp = sum(data.r_max - 1 for data in datas)
            bound = (
                t
                * (q * b) ** k
                * arith.lcm_upto(k) ** d_exp
                * arith.prime_power_product(b, k)
            )
            with mpmath.workdps(digits):
                const = q * b * mpmath.e ** (arith.chi(b, digits) + (r_max - 1))
    return make_certificate(k, psi, bound, const, digits)
