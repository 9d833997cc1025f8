"""Generalized hypergeometric machinery.

The series F(alpha; beta+1 | z), its first-order system at the poles 0 and 1
(in augmented form), the adjoint system with its explicit eigen-structure,
the trinomial-lcm denominator certificate for the adjoint system, the
geometric-growth class constant Phi, Wronskian/trace checks, the four
irreducibility conditions, and the irrationality decision with its explicit
constants C0 and eta0.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd, lcm
from typing import Optional

import mpmath

from . import arith, falling
from .certificate import CancellationCertificate, make_certificate
from .errors import (
    ConditionsFailed,
    EpsilonOutOfRange,
    InvalidBeta,
    RepeatedBeta,
    XiZero,
)
from .fuchs import FuchsianSystem, certify_system
from .matfun import MatQ, bracket_table
from .poly import RatFun, SeriesQ, UniPoly, delta_series


def _fr(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class HyperParams:
    """Upper parameters alpha and (unshifted) lower parameters beta; the
    series uses beta_j + 1 downstairs, so beta_j must avoid {-1, -2, ...}."""

    m: int
    alpha: tuple
    beta: tuple

    def __post_init__(self):
        al = tuple(_fr(a) for a in self.alpha)
        be = tuple(_fr(b) for b in self.beta)
        object.__setattr__(self, "alpha", al)
        object.__setattr__(self, "beta", be)
        if len(al) != self.m or len(be) != self.m:
            raise ValueError("need m upper and m lower parameters")
        for b in be:
            if b.denominator == 1 and b <= -1:
                raise InvalidBeta(f"beta = {b} makes series denominators vanish")

    @staticmethod
    def of(alpha, beta) -> "HyperParams":
        alpha = list(alpha)
        return HyperParams(m=len(alpha), alpha=tuple(alpha), beta=tuple(beta))

    def gamma(self) -> Fraction:
        return sum(self.alpha, Fraction(0)) - sum(self.beta, Fraction(0))

    def betas_distinct(self) -> bool:
        return len(set(self.beta)) == self.m

    def to_json(self) -> str:
        return json.dumps(
            {
                "alpha": [arith.format_rat(a) for a in self.alpha],
                "beta": [arith.format_rat(b) for b in self.beta],
            }
        )

    @staticmethod
    def from_json(s: str) -> "HyperParams":
        d = json.loads(s)
        return HyperParams.of(
            [arith.parse_rat(a) for a in d["alpha"]],
            [arith.parse_rat(b) for b in d["beta"]],
        )


def series(params: HyperParams, N: int) -> SeriesQ:
    """Exact Taylor coefficients f_n, n <= N, of
    sum <-a_1>_n...<-a_m>_n / (<-b_1-1>_n...<-b_m-1>_n) z^n."""
    coeffs = [Fraction(1)]
    cur = Fraction(1)
    for n in range(1, N + 1):
        # ratio of consecutive terms: prod (-a_i-n+1)/(-b_i-n)
        for a in params.alpha:
            cur *= -a - (n - 1)
        for b in params.beta:
            cur /= -b - n
        coeffs.append(cur)
    return SeriesQ.from_list(coeffs, N)


def vieta(params: HyperParams) -> tuple[list[Fraction], list[Fraction]]:
    """Elementary symmetric values sigma_l(alpha), sigma_l(beta), l = 1..m,
    from the expansions of prod (z + alpha_i) and prod (z + beta_j)."""

    def sigmas(vals):
        p = UniPoly.one()
        for v in vals:
            p = p * UniPoly((v, 1))
        return [p[len(vals) - l] for l in range(1, len(vals) + 1)]

    return sigmas(params.alpha), sigmas(params.beta)


def build_system(params: HyperParams) -> FuchsianSystem:
    """The augmented (m+1)x(m+1) first-order system at the poles {0, 1}
    satisfied by (1, f, delta f, ..., delta^{m-1} f)."""
    m = params.m
    sa, sb = vieta(params)
    Z0 = [[Fraction(0)] * (m + 1) for _ in range(m + 1)]
    Z1 = [[Fraction(0)] * (m + 1) for _ in range(m + 1)]
    for l in range(1, m):
        Z0[l][l + 1] = Fraction(1)
    # last row: d/dz y_m picks up every y_l and the inhomogeneous term
    Z0[m][0] = sb[m - 1]
    Z1[m][0] = -sb[m - 1]
    for l in range(1, m + 1):
        # coefficient of y_l carries sigma_{m+1-l}
        Z0[m][l] = -sb[m - l]
        Z1[m][l] = sb[m - l] - sa[m - l]
    return FuchsianSystem(
        m=m,
        gammas=(Fraction(0), Fraction(1)),
        residues=(MatQ(Z0), MatQ(Z1)),
        augmented=True,
    )


def system_residual(params: HyperParams, N: int) -> bool:
    """True iff the augmented vector (1, f, delta f, ...) satisfies the
    system exactly through the z^{N-1} coefficient."""
    system = build_system(params)
    f = series(params, N)
    comps = [SeriesQ.from_list([1], N), f]
    for _ in range(params.m - 1):
        comps.append(delta_series(comps[-1]))
    # z(z-1) Y' == (T Q) Y as series through order N-1
    t_series = SeriesQ.from_list([0, -1, 1], N)  # z^2 - z
    from .fuchs import _tq_poly

    TQ = _tq_poly(system)
    for l in range(params.m + 1):
        dy = SeriesQ.from_list(
            [n * comps[l][n] for n in range(1, N + 1)], N - 1
        )
        lhs = t_series.truncate(N - 1) * dy
        rhs = SeriesQ.from_list([0], N - 1)
        for j in range(params.m + 1):
            p = TQ[l, j]
            if p.is_zero():
                continue
            pser = SeriesQ.from_list(list(p.coeffs), N - 1)
            rhs = rhs + pser * comps[j].truncate(N - 1)
        if not (lhs - rhs).is_zero():
            return False
    return True


@dataclass(frozen=True)
class SpectralForms:
    """Closed-form spectral data of the adjoint homogeneous system."""

    sigma_alpha: tuple
    sigma_beta: tuple
    gamma: Fraction
    A1: MatQ
    A2: MatQ
    T: MatQ
    T_inv: MatQ
    a: tuple
    B1: MatQ
    B2: MatQ


def adjoint_matrices(params: HyperParams) -> tuple[MatQ, MatQ]:
    """A1 (sign-flipped Frobenius block, spectrum beta) and the rank-one A2
    of the adjoint system y' = (A1/z + A2/(z-1)) y."""
    m = params.m
    sa, sb = vieta(params)
    A1 = [[Fraction(0)] * m for _ in range(m)]
    A2 = [[Fraction(0)] * m for _ in range(m)]
    for l in range(m):
        A1[l][m - 1] = sb[m - 1 - l]
        A2[l][m - 1] = sa[m - 1 - l] - sb[m - 1 - l]
        if l >= 1:
            A1[l][l - 1] = Fraction(-1)
    return MatQ(A1), MatQ(A2)


def adjoint_system(params: HyperParams) -> SpectralForms:
    """All closed forms from the eigen-decomposition of A1: eigenvector
    matrix T, its explicit inverse, the vector a, and B1, B2."""
    if not params.betas_distinct():
        raise RepeatedBeta("closed forms require pairwise distinct beta")
    m = params.m
    sa, sb = vieta(params)
    A1, A2 = adjoint_matrices(params)
    beta = params.beta
    # column j: sigma_{m-1-l}(beta with beta_j removed), top to bottom
    T = [[Fraction(0)] * m for _ in range(m)]
    for j in range(m):
        others = [beta[k] for k in range(m) if k != j]
        p = UniPoly.one()
        for v in others:
            p = p * UniPoly((v, 1))
        for l in range(m):
            T[l][j] = p[l]
    T = MatQ(T)
    T_inv = [[Fraction(0)] * m for _ in range(m)]
    for l in range(m):
        d = Fraction(1)
        for k in range(m):
            if k != l:
                d *= beta[l] - beta[k]
        for j in range(m):
            T_inv[l][j] = (-1) ** (m + j + 1) * beta[l] ** j / d
    T_inv = MatQ(T_inv)
    a = []
    for j in range(m):
        v = -(beta[j] - params.alpha[j])
        for k in range(m):
            if k != j:
                v *= (beta[j] - params.alpha[k]) / (beta[j] - beta[k])
        a.append(v)
    B1 = MatQ.diagonal(beta)
    B2 = MatQ([[aj for aj in a] for _ in range(m)])
    return SpectralForms(
        sigma_alpha=tuple(sa),
        sigma_beta=tuple(sb),
        gamma=params.gamma(),
        A1=A1,
        A2=A2,
        T=T,
        T_inv=T_inv,
        a=tuple(a),
        B1=B1,
        B2=B2,
    )


def adjoint_fuchsian(params: HyperParams) -> FuchsianSystem:
    A1, A2 = adjoint_matrices(params)
    return FuchsianSystem(
        m=params.m, gammas=(Fraction(0), Fraction(1)), residues=(A1, A2)
    )


def projector_relations(forms: SpectralForms, n2: int) -> bool:
    """B2^2 = gamma B2 and <B2>_{n2} = <gamma-1>_{n2-1} B2, exactly."""
    if n2 < 1:
        raise ValueError("n2 must be >= 1")
    from .matfun import matrix_falling

    g = forms.gamma
    if forms.B2 @ forms.B2 != forms.B2.scale(g):
        return False
    lhs = matrix_falling(forms.B2, n2)
    rhs = forms.B2.scale(falling.falling(g - 1, n2 - 1))
    return lhs == rhs


@dataclass(frozen=True)
class Lemma11Certificate:
    """Two-sided denominator certificate for the adjoint system.

    inner: measured lcm of denominators of gamma <B1,B2>_{n1,n2}/(n1+n2)!
    (without the gamma factor when gamma = 0, where the target gains d_k)
    against g_k a b^k prod p^{tau_p(k)}.  outer: the system-level psi_k of
    the adjoint system against t1 t2 times the inner target.
    """

    inner: CancellationCertificate
    outer: CancellationCertificate
    gamma_zero: bool
    a: int
    b: int
    t1: int
    t2: int


def certify_lemma11(
    params: HyperParams, k: int, digits: int = arith.DEFAULT_DIGITS
) -> Lemma11Certificate:
    if k < 1:
        raise ValueError("k must be >= 1")
    forms = adjoint_system(params)
    g = forms.gamma
    gamma_zero = g == 0
    a = arith.common_denominator(forms.a)
    b = arith.common_denominator((g,) + params.beta)
    table = bracket_table([forms.B1, forms.B2], k)
    psi_inner = 1
    for (n1, n2), M in table.items():
        n = n1 + n2
        scaled = M.scale(Fraction(1, factorial(n)))
        if not gamma_zero:
            scaled = scaled.scale(g)
        psi_inner = lcm(psi_inner, scaled.entry_denominator())
    target = arith.g_k(k) * a * b**k * arith.prime_power_product(b, k)
    if gamma_zero:
        target *= arith.lcm_upto(k)
    with mpmath.workdps(digits):
        const = b * mpmath.e ** (arith.chi(b, digits) + (3 if gamma_zero else 2))
    inner = make_certificate(k, psi_inner, target, const, digits)
    system = adjoint_fuchsian(params)
    measured = certify_system(system, k, digits=digits)
    t1 = forms.T.entry_denominator()
    t2 = forms.T_inv.entry_denominator()
    outer = make_certificate(k, measured.psi_k, t1 * t2 * target, const, digits)
    return Lemma11Certificate(
        inner=inner, outer=outer, gamma_zero=gamma_zero, a=a, b=b, t1=t1, t2=t2
    )


def partial_fraction_identity(n1: int, n2: int) -> bool:
    """1/(z^{n1+1}(1-z)^{n2+1}) as the two binomial partial-fraction sums,
    verified after clearing denominators."""
    z = UniPoly.x()
    one_minus = UniPoly((1, -1))
    rhs = UniPoly.zero()
    for j in range(n1 + 1):
        rhs = rhs + (z ** (n1 - j) * one_minus ** (n2 + 1)).scale(
            comb(n1 + n2 - j, n2)
        )
    for j in range(n2 + 1):
        rhs = rhs + (z ** (n1 + 1) * one_minus ** (n2 - j)).scale(
            comb(n1 + n2 - j, n1)
        )
    return rhs == UniPoly.one()


@dataclass(frozen=True)
class GClassEstimate:
    """Geometric-growth data of the series: common denominators of the
    coefficients f_0..f_k grow like Phi^k inside the unit disk."""

    radius: int
    Phi: object
    b: int
    q1: int
    q2: int
    b_js: tuple
    digits: int = arith.DEFAULT_DIGITS


def g_class_phi(
    params: HyperParams, digits: int = arith.DEFAULT_DIGITS
) -> GClassEstimate:
    q1 = 1
    for al in params.alpha:
        q1 *= al.denominator
    q2 = 1
    for be in params.beta:
        q2 *= be.denominator
    b = lcm(q1, q2)
    b_js = tuple(be.denominator for be in params.beta)
    with mpmath.workdps(digits):
        Phi = mpmath.e ** mpmath.fsum(arith.rho(bj, digits) for bj in b_js) * q1 / b
    return GClassEstimate(radius=1, Phi=Phi, b=b, q1=q1, q2=q2, b_js=b_js, digits=digits)


def phi_empirical_check(params: HyperParams, k: int) -> bool:
    """Measured lcm of series-coefficient denominators divides the exact
    per-k product q1^k times, for each beta_j, the product of the numerators
    of beta_j + n over n = 1..k (the denominator of 1/prod(beta_j + n))."""
    f = series(params, k)
    phi_k = arith.common_denominator(f.coeffs)
    target = 1
    for al in params.alpha:
        target *= al.denominator**k
    for be in params.beta:
        for n in range(1, k + 1):
            target *= abs((be + n).numerator)
    return target % phi_k == 0


@dataclass(frozen=True)
class WronskianReport:
    trace_ok: bool
    e0: Fraction
    e1: Fraction
    e0_alt: Fraction
    e1_alt: Fraction
    residual_zero: bool


def wronskian_checks(params: HyperParams) -> WronskianReport:
    """Trace of the homogeneous system equals (beta - z alpha)/(z(z-1)) with
    alpha = sigma_1(alpha), beta = sigma_1(beta); the exponent pair (e0, e1)
    with z^{e0}(1-z)^{e1} solving the first-order Wronskian equation is
    derived by coefficient matching; (e0_alt, e1_alt) records the commonly
    quoted pair, which flips the sign of the exponent at z = 1."""
    sa, sb = vieta(params)
    al, be = sa[0], sb[0]
    # homogeneous residues: companion at 0, last-row matrix at 1
    system = build_system(params)
    m = params.m
    A0 = MatQ([[system.residues[0][i, j] for j in range(1, m + 1)] for i in range(1, m + 1)])
    A1 = MatQ([[system.residues[1][i, j] for j in range(1, m + 1)] for i in range(1, m + 1)])
    trace = RatFun(UniPoly.constant(A0.trace()), UniPoly((0, 1))) + RatFun(
        UniPoly.constant(A1.trace()), UniPoly((-1, 1))
    )
    want = RatFun(UniPoly((be, -al)), UniPoly((0, -1, 1)))  # (beta - z alpha)/(z^2 - z)
    trace_ok = trace == want
    # delta log y + beta = z (delta log y + alpha) for y = z^e0 (1-z)^e1:
    # matching coefficients of (e0+beta)(1-z) - e1 z = z(e0+alpha)(1-z) - e1 z^2
    e0 = -be
    e1 = be - al
    lhs = UniPoly((e0 + be, -(e0 + be) - e1))
    rhs = UniPoly((0, e0 + al, -(e0 + al) - e1))
    return WronskianReport(
        trace_ok=trace_ok,
        e0=e0,
        e1=e1,
        e0_alt=-be,
        e1_alt=al - be,
        residual_zero=(lhs - rhs).is_zero(),
    )


# ---------------------------------------------------------------------------
# irreducibility conditions


def _frac(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def _is_full_coset(values, mm: int) -> Optional[Fraction]:
    """If the multiset of fractional parts is {w + i/mm mod 1 : i < mm},
    return w (the common fractional part of mm*value); else None."""
    fr = sorted(_frac(v) for v in values)
    if len(set(fr)) != mm:
        return None
    anchors = {_frac(v * mm) for v in values}
    if len(anchors) != 1:
        return None
    return min(fr)


def _equiv(xs, ys) -> bool:
    """The integer-shift permutation relation: equal multisets of
    fractional parts."""
    return sorted(_frac(x) for x in xs) == sorted(_frac(y) for y in ys)


def _belyi_pair_exists(split_side, coset_side, m: int) -> bool:
    """Does some (m1, m2) split of split_side into two arithmetic families
    u/m1-type and v/m2-type exist with coset_side matching the (u+v)/m
    family, for compatible u, v?"""
    if not _is_full_coset(coset_side, m):
        return False
    coset_fracs = {_frac(v) for v in coset_side}
    idx = range(m)
    for m1 in range(1, m):
        m2 = m - m1
        g = gcd(m1, m2)
        for subset in itertools.combinations(idx, m1):
            rest = [i for i in idx if i not in subset]
            w1 = _is_full_coset([split_side[i] for i in subset], m1)
            w2 = _is_full_coset([split_side[i] for i in rest], m2)
            if w1 is None or w2 is None:
                continue
            S = m1 * w1 + m2 * w2
            for t in range(m // g):
                if _frac(Fraction(S + g * t, m) * 1) in coset_fracs:
                    return True
    return False


@dataclass(frozen=True)
class ConditionsReport:
    linear: bool
    belyi: bool
    kummer: bool
    gamma_nonintegral: bool
    diagnostics: tuple

    def all_hold(self) -> bool:
        return self.linear and self.belyi and self.kummer and self.gamma_nonintegral

    def failed(self) -> list[int]:
        flags = [self.linear, self.belyi, self.kummer, self.gamma_nonintegral]
        return [i + 1 for i, ok in enumerate(flags) if not ok]


def check_conditions(params: HyperParams) -> ConditionsReport:
    """The four sufficient conditions for algebraic independence of the
    derivative family: no integral alpha-beta difference; no interlacing
    arithmetic-progression ("Belyi") parameter families; no common 1/m0
    shift symmetry; 2 gamma not an integer."""
    m = params.m
    diags = []
    linear = True
    for al in params.alpha:
        for be in params.beta:
            if (al - be).denominator == 1:
                linear = False
                diags.append(f"alpha - beta = {al - be} is integral")
    belyi = True
    if m >= 2:
        if _belyi_pair_exists(params.alpha, params.beta, m) or _belyi_pair_exists(
            params.beta, params.alpha, m
        ):
            belyi = False
            diags.append("arithmetic-progression family match found")
    kummer = True
    if m >= 2:
        for m0 in range(2, m + 1):
            if m % m0:
                continue
            shift = Fraction(1, m0)
            if _equiv(params.alpha, [a + shift for a in params.alpha]) and _equiv(
                params.beta, [b + shift for b in params.beta]
            ):
                kummer = False
                diags.append(f"common 1/{m0} shift symmetry")
    two_gamma = 2 * params.gamma()
    gamma_ok = two_gamma.denominator != 1
    if not gamma_ok:
        diags.append(f"2*gamma = {two_gamma} is integral")
    return ConditionsReport(
        linear=linear,
        belyi=belyi,
        kummer=kummer,
        gamma_nonintegral=gamma_ok,
        diagnostics=tuple(diags),
    )


# ---------------------------------------------------------------------------
# the irrationality decision


@dataclass(frozen=True)
class Theorem6Report:
    conditions: ConditionsReport
    b0: int
    H: Fraction
    Phi: object
    C0: object
    eta0: object
    xi: Fraction
    epsilon: Fraction
    irrational: bool
    decisive: bool
    measure_exponent: object
    digits: int

    def to_dict(self) -> dict:
        return {
            "conditions": {
                "linear": self.conditions.linear,
                "belyi": self.conditions.belyi,
                "kummer": self.conditions.kummer,
                "gamma_nonintegral": self.conditions.gamma_nonintegral,
            },
            "b0": self.b0,
            "H": arith.format_rat(self.H),
            "Phi": mpmath.nstr(self.Phi, self.digits),
            "C0": mpmath.nstr(self.C0, self.digits),
            "eta0": None if self.eta0 is None else mpmath.nstr(self.eta0, self.digits),
            "xi": arith.format_rat(self.xi),
            "epsilon": arith.format_rat(self.epsilon),
            "irrational": self.irrational,
            "decisive": self.decisive,
            "measure_exponent": None
            if self.measure_exponent is None
            else mpmath.nstr(self.measure_exponent, self.digits),
            "digits": self.digits,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _height(params: HyperParams) -> Fraction:
    """Max absolute coefficient of prod (z+alpha_i) and prod (z+beta_j),
    leading 1 included."""
    sa, sb = vieta(params)
    vals = [Fraction(1)] + [abs(v) for v in sa + sb]
    return max(vals)


def theorem6(
    params: HyperParams,
    xi: Fraction,
    epsilon: Fraction,
    eta=None,
    digits: int = arith.DEFAULT_DIGITS,
) -> Theorem6Report:
    """Evaluate the explicit irrationality criterion for f(xi).

    C0 = (8 b0 H e^{chi(b0)+3})^{eps(1-ln eps)}
         * Phi^{1+eps+(2-(m-1)eps)/(eps^m (m-1)!)},
    verdict: a2^{1-(m+2)eps} > C0 |a1|^{2-(m+1)eps} with xi = a1/a2 in
    lowest terms; evaluated in interval arithmetic so that irrational=True
    is only reported when the inequality provably holds at the working
    precision (decisive=False flags a straddling interval).
    """
    xi = _fr(xi)
    epsilon = _fr(epsilon)
    if xi == 0:
        raise XiZero("the evaluation point must be nonzero")
    m = params.m
    if not (0 < epsilon < Fraction(1, m + 2)):
        raise EpsilonOutOfRange(f"epsilon must lie in (0, 1/{m + 2})")
    if not params.betas_distinct():
        raise RepeatedBeta("theorem requires pairwise distinct beta")
    conditions = check_conditions(params)
    if not conditions.all_hold():
        raise ConditionsFailed(conditions.failed())
    a1, a2 = xi.numerator, xi.denominator
    b0 = arith.common_denominator((params.gamma(),) + params.beta)
    H = _height(params)
    est = g_class_phi(params, digits)
    with mpmath.workdps(digits):
        eps = mpmath.mpf(epsilon.numerator) / epsilon.denominator
        base = 8 * b0 * mpmath.mpf(H.numerator) / H.denominator * mpmath.e ** (
            arith.chi(b0, digits) + 3
        )
        expo = 1 + eps + (2 - (m - 1) * eps) / (eps**m * factorial(m - 1))
        C0 = base ** (eps * (1 - mpmath.log(eps))) * est.Phi**expo
        num = (1 + eps) * mpmath.log(a2) + mpmath.log(C0)
        den = (
            (1 - (m + 2) * eps) * mpmath.log(a2)
            - mpmath.log(C0)
            - (2 - (m + 1) * eps) * mpmath.log(abs(a1))
        )
        eta0 = num / den if den != 0 else None

    # outward-rounded decision
    old = mpmath.iv.dps
    try:
        mpmath.iv.dps = digits
        ivH = mpmath.iv.mpf(H.numerator) / H.denominator
        iv_chi = mpmath.iv.mpf(0)
        for p in arith.prime_factors(b0):
            iv_chi += mpmath.iv.log(p) / (p - 1)
        iv_rho = mpmath.iv.mpf(0)
        for bj in est.b_js:
            r = arith.rho_exact(bj)
            iv_rho += mpmath.iv.mpf(r.numerator) / r.denominator
        ivPhi = mpmath.iv.exp(iv_rho) * est.q1 / est.b
        iv_eps = mpmath.iv.mpf(epsilon.numerator) / epsilon.denominator
        iv_base = 8 * b0 * ivH * mpmath.iv.exp(iv_chi + 3)
        iv_expo = 1 + iv_eps + (2 - (m - 1) * iv_eps) / (
            iv_eps**m * factorial(m - 1)
        )
        ivC0 = mpmath.iv.exp(
            mpmath.iv.log(iv_base) * iv_eps * (1 - mpmath.iv.log(iv_eps))
        ) * mpmath.iv.exp(mpmath.iv.log(ivPhi) * iv_expo)
        lhs = mpmath.iv.exp(
            mpmath.iv.log(mpmath.iv.mpf(a2)) * (1 - (m + 2) * iv_eps)
        )
        rhs = ivC0 * mpmath.iv.exp(
            mpmath.iv.log(mpmath.iv.mpf(abs(a1))) * (2 - (m + 1) * iv_eps)
        )
        if lhs.a > rhs.b:
            irrational, decisive = True, True
        elif lhs.b < rhs.a:
            irrational, decisive = False, True
        else:
            irrational, decisive = False, False
    finally:
        mpmath.iv.dps = old
    measure = eta0 if irrational else None
    return Theorem6Report(
        conditions=conditions,
        b0=b0,
        H=H,
        Phi=est.Phi,
        C0=C0,
        eta0=eta0,
        xi=xi,
        epsilon=epsilon,
        irrational=irrational,
        decisive=decisive,
        measure_exponent=measure,
        digits=digits,
    )
