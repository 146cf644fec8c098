"""Exact L-polynomial reconstruction, extrapolation, and numeric root checks.

The L-polynomial of a genus-g curve over F_q is L(T) = prod (1 - a_i T) with
2g inverse roots a_i.  Its first g coefficients are determined by N_1..N_g
through the power sums t_j = q^j + 1 - N_j and the Newton identities; the
rest follow from the functional equation c_{2g-i} = q^{g-i} c_i.  Everything
except check_riemann_hypothesis is exact integer (or rational) arithmetic.

The root-modulus check works on the reciprocal polynomial P(U) =
U^{2g} L(1/U), whose roots are the inverse roots themselves.  P is first
reduced to its squarefree part by exact integer gcd deflation, so repeated
roots (supersingular products) cannot degrade the attainable accuracy; the
remaining simple roots come from the numpy companion-matrix solver and are
polished by Newton iteration until the relative residual is tiny.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    CountLengthMismatch,
    NonIntegerCoefficient,
    RootFindingFailure,
)

DEFAULT_RH_TOL = 1e-9
RESIDUAL_TOL = 1e-12


@dataclass(frozen=True)
class LPolynomial:
    """Coefficients c_0..c_{2g}, ascending, arbitrary-precision integers."""

    q: int
    g: int
    coefficients: tuple

    def __post_init__(self):
        if len(self.coefficients) != 2 * self.g + 1:
            raise ValueError(
                f"genus {self.g} needs {2 * self.g + 1} coefficients, "
                f"got {len(self.coefficients)}"
            )

    def __repr__(self):
        return f"LPolynomial(q={self.q}, g={self.g}, {list(self.coefficients)})"


@dataclass(frozen=True)
class RHReport:
    max_deviation: float
    passed: bool
    tol: float


def l_from_counts(q: int, g: int, counts) -> LPolynomial:
    """Reconstruct L from the first g point counts.

    Newton identities in exact rationals give c_1..c_g; the functional
    equation supplies c_{g+1}..c_{2g}.  Counts not realizable by any genus-g
    curve surface as a non-integer coefficient."""
    counts = tuple(counts)
    if len(counts) != g:
        raise CountLengthMismatch(f"genus {g} needs exactly {g} counts, got {len(counts)}")
    t = [q**j + 1 - counts[j - 1] for j in range(1, g + 1)]
    c = [Fraction(1)]
    for n in range(1, g + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            acc += t[k - 1] * c[n - k]
        c.append(-acc / n)
    coeffs = [Fraction(0)] * (2 * g + 1)
    for i in range(g + 1):
        coeffs[i] = c[i]
    for i in range(g):
        coeffs[2 * g - i] = q ** (g - i) * c[i]
    out = []
    for value in coeffs:
        if value.denominator != 1:
            raise NonIntegerCoefficient(
                f"counts {counts} force coefficient {value}; no genus-{g} curve fits"
            )
        out.append(int(value))
    return LPolynomial(q=q, g=g, coefficients=tuple(out))


def power_sums(L: LPolynomial, m: int) -> list:
    """t_1..t_m from the coefficients by the integer Newton recurrence."""
    c = L.coefficients
    deg = 2 * L.g
    t = []
    for n in range(1, m + 1):
        acc = n * c[n] if n <= deg else 0
        for i in range(1, min(n - 1, deg) + 1):
            acc += c[i] * t[n - i - 1]
        t.append(-acc)
    return t


def extrapolate(L: LPolynomial, j: int) -> int:
    """N_j implied by L; pure integer arithmetic."""
    if j < 1:
        raise ValueError(f"extension degree must be >= 1, got {j}")
    return L.q**j + 1 - power_sums(L, j)[-1]


def check_functional_equation(L: LPolynomial) -> bool:
    """Exact test of c_{2g-i} = q^{g-i} c_i for 0 <= i <= g."""
    c = L.coefficients
    g = L.g
    return all(c[2 * g - i] == L.q ** (g - i) * c[i] for i in range(g + 1))


def _int_poly_gcd(a: list, b: list) -> list:
    """Monic gcd of two integer polynomials (coefficients ascending); the
    result of deflating a monic polynomial is again integer monic."""
    fa = [Fraction(x) for x in a]
    fb = [Fraction(x) for x in b]

    def trim(f):
        while f and f[-1] == 0:
            f.pop()
        return f

    fa, fb = trim(fa), trim(fb)
    while fb:
        # fa mod fb
        rem = fa[:]
        lead = fb[-1]
        for k in range(len(rem) - len(fb), -1, -1):
            factor = rem[k + len(fb) - 1] / lead
            for i, coef in enumerate(fb):
                rem[k + i] -= factor * coef
        fa, fb = fb, trim(rem[: len(fb) - 1])
    if not fa:
        return []
    lead = fa[-1]
    monic = [x / lead for x in fa]
    assert all(x.denominator == 1 for x in monic)
    return [int(x) for x in monic]


def _exact_squarefree_part(coeffs: list) -> list:
    """coeffs ascending, monic: divide out gcd with the derivative so every
    root becomes simple, exactly."""
    deriv = [i * coeffs[i] for i in range(1, len(coeffs))]
    g = _int_poly_gcd(coeffs, deriv)
    if len(g) <= 1:
        return coeffs
    # exact polynomial division coeffs / g (both monic)
    rem = [Fraction(x) for x in coeffs]
    quot = [Fraction(0)] * (len(coeffs) - len(g) + 1)
    for k in range(len(quot) - 1, -1, -1):
        quot[k] = rem[k + len(g) - 1]
        for i, coef in enumerate(g):
            rem[k + i] -= quot[k] * coef
    assert all(x == 0 for x in rem[: len(g) - 1])
    assert all(x.denominator == 1 for x in quot)
    return [int(x) for x in quot]


def _polish_root(coeffs_desc: list, x: complex) -> complex:
    """A few Newton steps on the exact integer polynomial."""
    deriv_desc = [c * (len(coeffs_desc) - 1 - i) for i, c in enumerate(coeffs_desc[:-1])]
    for _ in range(60):
        val = complex(0)
        for c in coeffs_desc:
            val = val * x + c
        dval = complex(0)
        for c in deriv_desc:
            dval = dval * x + c
        if dval == 0:
            break
        step = val / dval
        x -= step
        if abs(step) <= 1e-16 * max(1.0, abs(x)):
            break
    return x


def _relative_residual(coeffs_desc: list, x: complex) -> float:
    val = complex(0)
    scale = 0.0
    powx = 1.0
    for c in reversed(coeffs_desc):
        scale += abs(c) * powx
        powx *= abs(x)
    for c in coeffs_desc:
        val = val * x + c
    return abs(val) / max(scale, 1.0)


def check_riemann_hypothesis(L: LPolynomial, tol: float = DEFAULT_RH_TOL) -> RHReport:
    """Locate the inverse roots numerically and test | |a| - sqrt(q) | <= tol.

    Roots are taken from the squarefree part of the reciprocal polynomial
    (repeated roots would otherwise cap the achievable precision), polished
    by Newton, and required to have relative residual <= 1e-12."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if L.g == 0:
        return RHReport(max_deviation=0.0, passed=True, tol=tol)
    # ascending coefficients of P(U) = U^{2g} L(1/U); monic since c_0 = 1
    recip_asc = list(reversed(L.coefficients))
    sf_asc = _exact_squarefree_part(recip_asc)
    coeffs_desc = list(reversed(sf_asc))
    roots = np.roots([float(c) for c in coeffs_desc])
    sqrt_q = float(np.sqrt(L.q))
    max_dev = 0.0
    for r in roots:
        x = _polish_root(coeffs_desc, complex(r))
        if _relative_residual(coeffs_desc, x) > RESIDUAL_TOL:
            raise RootFindingFailure(
                f"root {x} of {coeffs_desc} has residual above {RESIDUAL_TOL}"
            )
        max_dev = max(max_dev, abs(abs(x) - sqrt_q))
    return RHReport(max_deviation=max_dev, passed=max_dev <= tol, tol=tol)


def infer_genus(q: int, counts, tol: float = DEFAULT_RH_TOL):
    """Smallest genus g <= floor(m/2) whose L-polynomial built from N_1..N_g
    passes the root-modulus check and extrapolates the remaining counts
    exactly; None when no genus is consistent."""
    counts = tuple(counts)
    if not counts:
        raise CountLengthMismatch("need at least one count")
    for g in range(len(counts) // 2 + 1):
        try:
            L = l_from_counts(q, g, counts[:g])
        except NonIntegerCoefficient:
            continue
        try:
            if not check_riemann_hypothesis(L, tol).passed:
                continue
        except RootFindingFailure:
            continue
        if all(extrapolate(L, j) == counts[j - 1] for j in range(g + 1, len(counts) + 1)):
            return g
    return None
