"""Exact arithmetic for the dual-Hesse line arrangement and curve invariants.

Numbers live in Q(mu) where mu is a primitive sixth root of unity, i.e.
mu^2 = mu - 1.  Projective points and lines carry three homogeneous
coordinates over that field; incidence is an exact dot product.  The
invariant formulas produce exact big integers for any m >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm


@dataclass(frozen=True)
class CycloNum:
    """a + b*mu with rational a, b and mu^2 = mu - 1 (mu = e^{i pi/3})."""

    a: Fraction
    b: Fraction

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __add__(self, other: "CycloNum") -> "CycloNum":
        other = _coerce(other)
        return CycloNum(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: "CycloNum") -> "CycloNum":
        other = _coerce(other)
        return CycloNum(self.a - other.a, self.b - other.b)

    def __rsub__(self, other) -> "CycloNum":
        return _coerce(other) - self

    def __neg__(self) -> "CycloNum":
        return CycloNum(-self.a, -self.b)

    def __mul__(self, other: "CycloNum") -> "CycloNum":
        other = _coerce(other)
        # (a1 + b1 mu)(a2 + b2 mu) with mu^2 = mu - 1
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return CycloNum(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2 + b1 * b2)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        # conjugate is (a + b) - b*mu; norm is a^2 + ab + b^2
        n = self.a * self.a + self.a * self.b + self.b * self.b
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return CycloNum((self.a + self.b) / n, -self.b / n)

    def __truediv__(self, other: "CycloNum") -> "CycloNum":
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other) -> "CycloNum":
        return _coerce(other) * self.inverse()

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self) -> str:
        if self.b == 0:
            return _frac_str(self.a)
        if self.a == 0:
            return _mu_term(self.b)
        sign = "+" if self.b > 0 else "-"
        return f"{_frac_str(self.a)}{sign}{_mu_term(abs(self.b)).lstrip('+')}"


def _coerce(x) -> CycloNum:
    if isinstance(x, CycloNum):
        return x
    return CycloNum(x)


MU = CycloNum(0, 1)
ONE = CycloNum(1)
ZERO = CycloNum(0)


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _mu_term(b: Fraction) -> str:
    if b == 1:
        return "mu"
    if b == -1:
        return "-mu"
    return f"{_frac_str(b)}*mu"


def _canonical_triple(coords) -> tuple:
    """Canonical representative of a projective triple over Q(mu).

    Divide by the first nonzero coordinate (unique field representative),
    then clear denominators and divide by integer content so the entries
    lie in Z[mu] with positive leading coordinate.
    """
    coords = tuple(_coerce(c) for c in coords)
    pivot = next((c for c in coords if not c.is_zero()), None)
    if pivot is None:
        raise ValueError("projective triple must be nonzero")
    inv = pivot.inverse()
    coords = tuple(c * inv for c in coords)
    denoms = [f.denominator for c in coords for f in (c.a, c.b)]
    scale = lcm(*denoms)
    nums = [f.numerator * scale // f.denominator for c in coords for f in (c.a, c.b)]
    content = 0
    for n in nums:
        content = gcd(content, n)
    if content > 1:
        nums = [n // content for n in nums]
    it = iter(nums)
    return tuple(CycloNum(a, b) for a, b in zip(it, it))


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple

    def __init__(self, x, y, z):
        object.__setattr__(self, "coords", _canonical_triple((x, y, z)))

    def __str__(self) -> str:
        return ":".join(str(c) for c in self.coords)


@dataclass(frozen=True)
class ProjLine:
    coeffs: tuple

    def __init__(self, x, y, z):
        object.__setattr__(self, "coeffs", _canonical_triple((x, y, z)))

    def __str__(self) -> str:
        return ":".join(str(c) for c in self.coeffs)


def incident(line: ProjLine, point: ProjPoint) -> bool:
    """Exact incidence: the dot product of coefficients and coordinates is 0."""
    acc = ZERO
    for c, x in zip(line.coeffs, point.coords):
        acc = acc + c * x
    return acc.is_zero()


def meet(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    """Intersection point of two non-proportional lines (cross product)."""
    a = l1.coeffs
    b = l2.coeffs
    x = a[1] * b[2] - a[2] * b[1]
    y = a[2] * b[0] - a[0] * b[2]
    z = a[0] * b[1] - a[1] * b[0]
    if x.is_zero() and y.is_zero() and z.is_zero():
        raise ValueError("lines are proportional")
    return ProjPoint(x, y, z)


def hesse_dual_lines() -> list:
    """The nine lines dual to the inflection points of the Fermat cubic.

    Coefficients are in Z[mu]; mu^2 is reduced to mu - 1 where it occurs.
    """
    m2 = MU * MU  # mu - 1
    return [
        ProjLine(ONE, ZERO, -ONE),
        ProjLine(ONE, ZERO, -m2),
        ProjLine(ONE, ZERO, MU),
        ProjLine(ZERO, ONE, -m2),
        ProjLine(ZERO, ONE, -ONE),
        ProjLine(ZERO, ONE, MU),
        ProjLine(ONE, MU, ZERO),
        ProjLine(ONE, -m2, ZERO),
        ProjLine(ONE, -ONE, ZERO),
    ]


def intersection_lattice(lines) -> list:
    """All intersection points with multiplicities, canonically ordered.

    Every unordered pair of lines is assigned to exactly one point; the
    multiplicity of a point is the number of input lines through it.
    Raises ValueError when two input lines are proportional.
    """
    lines = list(lines)
    seen = set()
    for l in lines:
        if l.coeffs in seen:
            raise ValueError("proportional input lines")
        seen.add(l.coeffs)
    through: dict = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            p = meet(lines[i], lines[j])
            through.setdefault(p, set()).update((i, j))
    total = sum(len(s) * (len(s) - 1) // 2 for s in through.values())
    n = len(lines)
    if total != n * (n - 1) // 2:
        raise AssertionError("pair coverage mismatch in intersection lattice")
    out = [(p, len(s)) for p, s in through.items()]
    out.sort(key=lambda pm: _sort_key(pm[0]))
    return out


def _sort_key(p: ProjPoint):
    return tuple((c.a, c.b) for c in p.coords)


# ---------------------------------------------------------------------------
# branch-curve invariants


@dataclass(frozen=True)
class CurveInvariants:
    m: int
    deg_f: int
    d: int
    g: int
    kappa: int
    n1: int
    delta: int
    in_standard_range: bool  # False when m < 5: computed but flagged


@dataclass(frozen=True)
class ConsistencyReport:
    exponent_identity: bool  # n1 + 2*delta + 3*kappa == d(d-1)
    delta_ok: bool
    n1_ok: bool
    genus_ok: bool

    @property
    def ok(self) -> bool:
        return self.exponent_identity and self.delta_ok and self.n1_ok and self.genus_ok


def branch_curve_invariants(m: int) -> CurveInvariants:
    """Exact invariants of the m-th branch curve.

    deg_f = 333 m^2, d = 333 m (3m+1), g = 333 (3m+2)(3m+1)/2 + 1,
    kappa = 111 (36 m^2 + 27 m + 5); the companion counts follow from
    Riemann-Hurwitz (n1 = 2d + 2g - 2 - kappa) and the degree-genus
    formula (delta = (d-1)(d-2)/2 - g - kappa).  Values for m < 5 are
    computed exactly but flagged as out of the standard range.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    deg_f = 333 * m * m
    d = 333 * m * (3 * m + 1)
    g = 333 * (3 * m + 2) * (3 * m + 1) // 2 + 1
    kappa = 111 * (36 * m * m + 27 * m + 5)
    n1, delta = derived_counts(d, g, kappa)
    return CurveInvariants(m, deg_f, d, g, kappa, n1, delta, m >= 5)


def derived_counts(d: int, g: int, kappa: int) -> tuple:
    """(n1, delta) for a degree-d genus-g curve with kappa cusps."""
    n1 = 2 * d + 2 * g - 2 - kappa
    delta = (d - 1) * (d - 2) // 2 - g - kappa
    return n1, delta


def check_consistency(inv: CurveInvariants) -> ConsistencyReport:
    return ConsistencyReport(
        exponent_identity=inv.n1 + 2 * inv.delta + 3 * inv.kappa == inv.d * (inv.d - 1),
        delta_ok=inv.delta >= 0,
        n1_ok=inv.n1 >= 0,
        genus_ok=inv.g >= 0,
    )


# ---------------------------------------------------------------------------
# report formats


def format_arrangement(lattice) -> str:
    """One line per point: "x:y:z mult=k" in canonical coordinates."""
    return "\n".join(f"{p} mult={k}" for p, k in lattice) + "\n"


def format_invariants(inv: CurveInvariants) -> str:
    """Tab-separated "m deg_f d g kappa n1 delta" as exact decimal integers."""
    fields = (inv.m, inv.deg_f, inv.d, inv.g, inv.kappa, inv.n1, inv.delta)
    return "\t".join(str(x) for x in fields) + "\n"
