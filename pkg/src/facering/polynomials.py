"""Dense univariate polynomials with exact coefficients.

A polynomial is a list/tuple of coefficients indexed by exponent. All
arithmetic stays in Python ints (or Fractions where a caller passes them);
nothing here ever touches floating point.
"""

from math import comb


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def add(p, q):
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def scale(p, c):
    return trim([c * a for a in p])


def eval_at(p, x):
    acc = 0
    for c in reversed(list(p)):
        acc = acc * x + c
    return acc


def one_minus_x_power(k):
    """Coefficients of (1 - x)^k."""
    return [(-1) ** j * comb(k, j) for j in range(k + 1)]


def x_minus_one_power(k):
    """Coefficients of (x - 1)^k."""
    return [(-1) ** (k - j) * comb(k, j) for j in range(k + 1)]


def divide_by_one_minus_x(p):
    """Exact quotient q with p = (1 - x) * q; requires p(1) == 0."""
    p = trim(p)
    if not p:
        return []
    if eval_at(p, 1) != 0:
        raise ValueError("polynomial does not vanish at 1")
    q = [0] * (len(p) - 1)
    acc = 0
    for i in range(len(p) - 1):
        acc += p[i]
        q[i] = acc
    return trim(q)


def format_poly(p, var="z"):
    """Render like '1 + 2*z - z^2'; the zero polynomial renders as '0'."""
    p = trim(p)
    if not p:
        return "0"
    parts = []
    for e, c in enumerate(p):
        if c == 0:
            continue
        if e == 0:
            term = str(abs(c))
        else:
            x = var if e == 1 else f"{var}^{e}"
            term = x if abs(c) == 1 else f"{abs(c)}*{x}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)
