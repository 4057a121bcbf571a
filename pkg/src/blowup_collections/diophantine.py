"""The Diophantine system behind extending undecided classes on the cubic model.

Write ``f`` for the quadratic cofactor of ``chi`` on the twisted-cubic
blow-up (:func:`blowup_collections.geometry.cubic_chi_cofactor`) and ``g``
for the full ``chi`` numerator ``g(a, b) = (a + 2b + 1) * f(a, b)``.  A
normalized length-4 exceptional collection ``(O, O(D_1), O(D_2), O(D_3))``
whose members all have numerically trivial dual cohomology forces the
integer system

* ``f(-a_i, -b_i) = 0`` for each ``i``  (each dual lies on the conic), and
* ``g(a_i - a_j, b_i - b_j) = 0`` for each pair ``i > j``  (each difference
  has ``chi = 0``).

:func:`solve_claim_6_3` enumerates all solutions with every ``|a_i|,
|b_i|`` bounded by a window.  Within window 50 there are exactly four
ordered solutions, and each has all three duals ``-D_i`` inside the
*decided* vanishing cases -- none reaches the undecided conic regions,
which is how the non-extension claim for those regions follows.

The conic ``f = 0`` reduces by the substitution ``m = 2a - 2b + 5,
gamma = 2b - 1`` to the Pell-type equation ``m^2 - 6*gamma^2 = -5``, so its
integer points are sparse and spread exponentially; window 50 holds 16
points with ``f(-a, -b) = 0``.

EXAMPLES::

    >>> sols = solve_claim_6_3(50)
    >>> len(sols)
    4
    >>> sols[0]
    (0, 1, 2, 0, -3, 3)
"""

from __future__ import annotations

from .geometry import DivisorClass, cubic_chi_cofactor

__all__ = [
    "chi_numerator_cubic",
    "dual_conic_points",
    "solve_claim_6_3",
]


def chi_numerator_cubic(a: int, b: int) -> int:
    """``6 * chi(a, b)`` on the twisted-cubic model, as an integer form."""
    return (a + 2 * b + 1) * cubic_chi_cofactor(a, b)


def dual_conic_points(window: int) -> list[DivisorClass]:
    """All ``D`` with ``|a|, |b| <= window`` whose dual lies on the conic.

    These are the classes satisfying the first equation family
    ``f(-a, -b) = 0``; sorted lexicographically.
    """
    return [
        DivisorClass(a, b)
        for a in range(-window, window + 1)
        for b in range(-window, window + 1)
        if cubic_chi_cofactor(-a, -b) == 0
    ]


def solve_claim_6_3(window: int = 50) -> list[tuple[int, int, int, int, int, int]]:
    """All ordered solutions ``(a_1, b_1, a_2, b_2, a_3, b_3)`` in the window.

    INPUT:

    - ``window`` -- coordinate bound, at least 10.

    The solver first collects the conic points (first equation family),
    then assembles ordered triples, pruning on the pairwise ``chi``
    conditions.  Output is sorted lexicographically, hence deterministic.
    """
    if window < 10:
        raise ValueError("solution windows below 10 would clip known solutions")
    points = dual_conic_points(window)
    n = len(points)

    def chi_vanishes(earlier: DivisorClass, later: DivisorClass) -> bool:
        diff = earlier - later
        return chi_numerator_cubic(diff.a, diff.b) == 0

    # pair_ok[i][j]: points[i] may precede points[j] (chi of the backward
    # difference vanishes).
    pair_ok = [
        [chi_vanishes(points[i], points[j]) for j in range(n)] for i in range(n)
    ]

    solutions = []
    for i in range(n):
        for j in range(n):
            if not pair_ok[i][j]:
                continue
            for k in range(n):
                if pair_ok[i][k] and pair_ok[j][k]:
                    d1, d2, d3 = points[i], points[j], points[k]
                    solutions.append((d1.a, d1.b, d2.a, d2.b, d3.a, d3.b))
    solutions.sort()
    return solutions
