"""Hilbert series, Hilbert function values, and multiplicity of face rings.

Everything is exact: numerators are integer polynomials over (1-z)^d and the
Hilbert polynomial is extracted in the binomial basis with Fractions.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import polynomials as poly
from .complexes import f_vector, h_from_f
from .errors import PreconditionError


@dataclass(frozen=True)
class HilbertSeries:
    numerator: tuple  # integer coefficients, no trailing zeros
    denominator_exponent: int

    def __post_init__(self):
        if self.numerator and self.numerator[-1] == 0:
            raise ValueError("numerator carries trailing zeros")
        if self.denominator_exponent < 0:
            raise ValueError("denominator exponent must be nonnegative")
        # minimality of the exponent: a reduced numerator cannot vanish at 1
        if self.numerator and self.denominator_exponent > 0 and poly.eval_at(self.numerator, 1) == 0:
            raise ValueError("numerator vanishes at 1; series not reduced")

    def numerator_at_one(self):
        return poly.eval_at(self.numerator, 1)

    def __str__(self):
        num = poly.format_poly(self.numerator)
        d = self.denominator_exponent
        if d == 0:
            return num
        return f"({num}) / (1-z)^{d}"


def series_from_complex(sc):
    """Hilbert series of the face ring: h-vector over (1-z)^(dim+1).

    The numerator-at-one value is the top face count, so the exponent is
    already minimal and no reduction step is needed.
    """
    if sc.void:
        raise PreconditionError("the void complex has no face ring")
    h = h_from_f(f_vector(sc))
    return HilbertSeries(tuple(poly.trim(h.entries)), sc.d)


def series_from_resolution(table, n=None):
    """Hilbert series recovered from a graded Betti table of a cyclic quotient.

    The alternating numerator sum over (1-z)^n is reduced by cancelling
    (1-z) factors until the numerator no longer vanishes at 1.
    """
    if n is None:
        n = table.n
    if table.entry(0, 0) != 1:
        raise PreconditionError("table must resolve a cyclic quotient (beta_{0,0} = 1)")
    num = []
    for (i, j), value in table.entries.items():
        num = poly.add(num, [0] * j + [(-1) ** i * value])
    num = poly.trim(num)
    d = n
    while d > 0 and num and poly.eval_at(num, 1) == 0:
        num = poly.divide_by_one_minus_x(num)
        d -= 1
    return HilbertSeries(tuple(num), d)


def multiplicity(sc):
    """Top face count f_{d-1}; agrees with the series numerator at z = 1."""
    if sc.void:
        raise PreconditionError("the void complex has no face ring")
    return f_vector(sc).entries[-1]


def series_coefficients(series, count):
    """First `count` coefficients of the power-series expansion."""
    num, d = series.numerator, series.denominator_exponent
    if d == 0:
        return [num[s] if s < len(num) else 0 for s in range(count)]
    out = []
    for s in range(count):
        acc = 0
        for j, c in enumerate(num):
            if j > s:
                break
            acc += c * comb(s - j + d - 1, d - 1)
        out.append(acc)
    return out


def _binomial_poly(x, r):
    # C(x, r) as an exact Fraction, valid for any integer x including negatives
    acc = Fraction(1)
    for t in range(r):
        acc *= Fraction(x - t)
    return acc / Fraction(_factorial(r))


def _factorial(r):
    out = 1
    for t in range(2, r + 1):
        out *= t
    return out


def hilbert_polynomial(series):
    """Binomial-basis coefficients (m_0, ..., m_{d-1}) of the Hilbert polynomial.

    The polynomial agrees with the series coefficients for all degrees past
    the numerator degree, and its leading coefficient m_0 equals the
    multiplicity. The empty tuple is returned for a zero-dimensional ring.
    """
    num, d = series.numerator, series.denominator_exponent
    if d == 0:
        return ()

    def value(s):
        return sum(Fraction(c) * _binomial_poly(s - j + d - 1, d - 1) for j, c in enumerate(num))

    # Newton forward differences at 0 give the coefficients in the C(s, r) basis
    vals = [value(s) for s in range(d)]
    diffs = list(vals)
    coeffs = []
    for _ in range(d):
        coeffs.append(diffs[0])
        diffs = [diffs[t + 1] - diffs[t] for t in range(len(diffs) - 1)]
    # coeffs[r] multiplies C(s, r); report leading first
    return tuple(reversed(coeffs))
