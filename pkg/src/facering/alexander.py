"""Alexander duality: W is a face of the dual exactly when its complement is
not a face of the original complex. The dual's facets are the complements of
the minimal non-faces, which keeps the construction polynomial in the number
of generators instead of scanning all 2^n subsets.
"""

from math import comb

from .complexes import FVector, SimplicialComplex, build_complex, f_vector, minimal_nonfaces
from .errors import PreconditionError


def alexander_dual(sc):
    """The combinatorial Alexander dual on the same ground set.

    Dual pairs worth remembering: full simplex <-> void complex, and
    {emptyset} <-> boundary of the full simplex. Applying the operation twice
    returns the original complex.
    """
    full = (1 << sc.n) - 1
    if sc.void:
        return SimplicialComplex(sc.n, (full,))
    return build_complex(sc.n, [full ^ w for w in minimal_nonfaces(sc)])


def dual_f_vector(f, n):
    """f-vector of the dual from the f-vector alone.

    An i-face of the dual is an (i+1)-subset whose complement, of dimension
    n-i-2, is a non-face; hence f*_i = C(n, i+1) - f_{n-i-2}. Trailing zero
    entries are trimmed so the length matches the dual's dimension; the
    all-zero vector signals a void dual (input was the full simplex).
    """
    entries = [comb(n, i + 1) - f.f(n - i - 2) for i in range(-1, n)]
    while len(entries) > 1 and entries[-1] == 0:
        entries.pop()
    if entries[0] == 0:
        return FVector((0,))
    return FVector(tuple(entries))


def k_star(f, n):
    """Smallest k whose (k-1)-face count falls short of C(n, k), or None.

    None exactly for the full simplex, which has every possible face. When
    defined, the dual's face ring has Krull dimension n - k_star.
    """
    if f.is_void:
        raise PreconditionError("k_star is not defined for the void complex")
    for k in range(1, n + 1):
        if comb(n, k) != f.f(k - 1):
            return k
    return None


def dual_dimension_check(sc):
    """Cross-check dim(dual) + 1 == n - k_star for a non-full-simplex input."""
    if sc.is_full_simplex:
        raise PreconditionError("the full simplex has no k_star")
    ks = k_star(f_vector(sc), sc.n)
    dual = alexander_dual(sc)
    return dual.d == sc.n - ks
