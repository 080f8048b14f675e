"""Closed forms and recurrences for cyclic Kautz digraph counts and diameters.

All counts are exact Python integers.  Each evaluator is gated to the
parameter range where its formula holds; outside that range use the
constructors in :mod:`ckgraph.families` and count directly.

Notation for the three-class system: for an even length l, the words
a1..al with distinct neighbours and a_i != a_(i+l/2) (i <= l/2) split
into class C (a_(l/2+1) = a_l) and class D (the rest); class B is D with
the middle pair forced equal, a_(l/2) = a_(l/2+1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .digraph import INFINITE, NONEXISTENT, Diameter
from .errors import DomainError, OutOfRangeError

DiameterFormulaResult = Diameter


@dataclass(frozen=True)
class CountTriple:
    B: int
    C: int
    D: int

    @property
    def total(self) -> int:
        return self.B + self.C + self.D

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.B, self.C, self.D)


def _half(numerator: int) -> int:
    if numerator % 2:
        raise ArithmeticError(f"expected an even numerator, got {numerator}")
    return numerator // 2


def ck_vertex_count(d: int, l: int) -> int:
    if d < 1 or l < 1:
        raise DomainError(f"need d >= 1 and l >= 1, got ({d}, {l})")
    return (-1) ** l * d + d**l


def ck_arc_count(d: int, l: int) -> int:
    if d < 1:
        raise DomainError(f"need d >= 1, got {d}")
    if l < 2:
        raise DomainError(f"arc count formula needs l >= 2, got {l}")
    if l == 2:
        return (d + 1) * d**2
    return (d + 1) * d**l - (2 * d - 1) * ((-1) ** (l - 1) * d + d ** (l - 1))


def ck_diameter_formula(d: int, l: int) -> Diameter:
    """Diameter of CK(d, l) from the full case table."""
    if d < 1 or l < 1:
        raise DomainError(f"need d >= 1 and l >= 1, got ({d}, {l})")
    if l == 1:
        return Diameter.finite(1)
    if d == 1:
        return Diameter.finite(1) if l % 2 == 0 else NONEXISTENT
    if l == 2:
        return Diameter.finite(2)
    if d == 2:
        return Diameter.finite(7) if l == 4 else INFINITE
    if l == 3:
        return Diameter.finite(5)
    if d == 3:
        return Diameter.finite(2 * l - 1)
    return Diameter.finite(2 * l - 2)


def _check_even(d: int, l_even: int, minimum: int) -> None:
    if d < 2:
        raise DomainError(f"the B/C/D system needs d >= 2, got {d}")
    if l_even % 2 or l_even < minimum:
        raise DomainError(f"length must be even and >= {minimum}, got {l_even}")


def bcd_base(d: int, l_even: int) -> CountTriple:
    """Hand-counted starting values for lengths 4 and 6."""
    if l_even == 4:
        return CountTriple((d + 1) * d**2, 0, (d + 1) * d * (d - 1) ** 2)
    if l_even == 6:
        return CountTriple(
            (d + 1) * d * (d - 1) ** 3,
            (d + 1) * d * (d**3 - 2 * d**2 + 3 * d - 1),
            (d + 1) * d * (d - 1) ** 2 * (d**2 - 2 * d + 3),
        )
    raise DomainError(f"base values exist for lengths 4 and 6, got {l_even}")


def bcd_closed_form(d: int, l_even: int) -> CountTriple:
    _check_even(d, l_even, 4)
    if l_even == 4:
        return bcd_base(d, 4)
    h = l_even // 2
    q = d**2 - d + 1
    # 0**0 == 1 covers the d = 2 convention for (d-2)**0
    m = (d - 2) ** (h - 1)
    sgn = (-1) ** (h - 1)
    B = _half(2 * d * q ** (h - 1) + sgn * d * (d - 1) * m - sgn * (d + 1) * d**h)
    C = _half(sgn * (d - 1) * d * m + 2 * d * q ** (h - 1) + sgn * d**h * (d + 1))
    D = (d - 1) * d * (q ** (h - 1) - sgn * m)
    return CountTriple(B, C, D)


def bcd_step(d: int, prev: CountTriple) -> CountTriple:
    """One step l-2 -> l of the linear B/C/D system."""
    B = (d - 1) * prev.D + d * prev.C
    C = (d - 1) * prev.D + d * prev.B
    D = (d**2 - 3 * d + 3) * prev.D + (d - 1) ** 2 * (prev.C + prev.B)
    return CountTriple(B, C, D)


def bcd_recurrence(d: int, l_even: int) -> CountTriple:
    """Iterate bcd_step from the length-6 base; length 4 returns its own base."""
    _check_even(d, l_even, 4)
    if l_even == 4:
        return bcd_base(d, 4)
    x = bcd_base(d, 6)
    for _ in range(6, l_even, 2):
        x = bcd_step(d, x)
    return x


def _check_e(d: int, r: int, j: int) -> None:
    if d < 2 or r < 2 or j < 0:
        raise DomainError(f"need d >= 2, r >= 2, j >= 0, got ({d}, {r}, {j})")


def e_initial(d: int, r: int) -> tuple[int, int]:
    """(E_0, E_1) from the class counts at length 2r."""
    _check_e(d, r, 0)
    x = bcd_closed_form(d, 2 * r)
    return x.C + x.D, d * x.B + (d - 1) * (x.C + x.D)


def e_closed_form(d: int, r: int, j: int) -> int:
    """E_j, the number of words a1..a(2r+j) with distinct neighbours and
    a_i != a_(i+r+j) for i <= r."""
    _check_e(d, r, j)
    x = bcd_closed_form(d, 2 * r)
    geometric, rem = divmod(1 - (-d) ** (j + 1), d + 1)
    assert rem == 0
    return (-1) ** j * x.total * geometric - x.B * (-1) ** j


def e_recurrence(d: int, r: int, j: int) -> int:
    _check_e(d, r, j)
    e0, e1 = e_initial(d, r)
    if j == 0:
        return e0
    for _ in range(j - 1):
        e0, e1 = e1, (d - 1) * e1 + d * e0
    return e1


def ck_iterated_vertex_count(d: int, l: int, t: int) -> int:
    """|V(L^t(CK(d, l)))| for l >= 3 and 0 <= t <= l - 2."""
    if d < 1 or l < 3:
        raise DomainError(f"need d >= 1 and l >= 3, got ({d}, {l})")
    if not 0 <= t <= l - 2:
        raise OutOfRangeError(
            f"closed form holds for 0 <= t <= l-2 = {l - 2}, got t={t}; count by construction instead"
        )
    q = d**2 - d + 1
    return _half(
        2 * q**t * d ** (l - t)
        + (-1) ** (l + 1) * (d - 2) ** t * (d - 1) * d
        + (-1) ** l * d ** (t + 1) * (d + 1)
    )


def ck4_initial(d: int) -> tuple[int, int]:
    return d**4 + d, d * (d + 1) * (d**3 - 2 * d**2 + 3 * d - 1)


def ck4_count_radical(d: int, t: int) -> float:
    """Floating-point evaluation of the two-root closed form (consistency check only)."""
    s = math.sqrt(d**2 - 2 * d + 5)
    k = (d**3 - 2 * d**2 + 4 * d - 1) / s
    alpha = 0.5 * d * (d + 1) * (d**2 - d + 1 + k)
    beta = 0.5 * d * (d + 1) * (d**2 - d + 1 - k)
    return alpha * ((d - 1 + s) / 2) ** t + beta * ((d - 1 - s) / 2) ** t


def ck4_count_closed_form(d: int, t: int, check: bool = False) -> int:
    """N_t = |V(L^t(CK(d, 4)))| for every t >= 0.

    Computed exactly from N_t = (d-1) N_(t-1) + N_(t-2).  With ``check``
    the radical form is evaluated too and must agree to 1e-9 relative.
    """
    if d < 1 or t < 0:
        raise DomainError(f"need d >= 1 and t >= 0, got ({d}, {t})")
    a, b = ck4_initial(d)
    for _ in range(t):
        a, b = b, (d - 1) * b + a
    if check:
        approx = ck4_count_radical(d, t)
        if not math.isclose(approx, a, rel_tol=1e-9):
            raise ArithmeticError(f"radical form gives {approx}, recurrence gives {a}")
    return a
