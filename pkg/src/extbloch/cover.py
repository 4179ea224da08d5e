"""Points of the universal abelian cover of C minus {0,1} and five-term tuples.

A point of the cover is a cut-plane point together with two branch
integers.  We store the halved indices p, q; the conventional labels are
the even integers (2p, 2q), produced only for display.  The two branch
logarithms

    l = Log z + 2 pi i p        m = -Log(1-z) + 2 pi i q

are single-valued holomorphic functions of the cover point: crossing the
left cut rewrites (x - 0i; p, q) as (x + 0i; p - 1, q), crossing the right
cut rewrites (x - 0i; p, q) as (x + 0i; p, q - 1), and both rewritings
leave l and m unchanged.  Canonical form never stores a below-side tag.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .dilog import (
    TWO_PI_I,
    CutPoint,
    Side,
    as_cut_point,
    log_one_minus,
    principal_log,
)


@dataclass(frozen=True)
class FlattenedNumber:
    """A cover point (z; 2p, 2q) in canonical (above-side) form."""

    base: CutPoint
    p: int = 0
    q: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.base, CutPoint):
            raise TypeError("base must be a CutPoint")
        if self.base.side is Side.BELOW:
            raise ValueError(
                "below-side points are not stored; build via canonicalize()"
            )
        if not isinstance(self.p, int) or not isinstance(self.q, int):
            raise TypeError("branch indices p, q must be integers")

    @property
    def z(self) -> complex:
        return self.base.z

    @property
    def label(self) -> tuple[int, int]:
        """The even display indices (2p, 2q)."""
        return (2 * self.p, 2 * self.q)

    def __str__(self) -> str:
        side = "" if self.base.side is Side.INTERIOR else "+0i"
        return f"[{self.z}{side}; {2 * self.p}, {2 * self.q}]"


def canonicalize(
    z: complex | CutPoint,
    side: Side | str = Side.INTERIOR,
    p: int = 0,
    q: int = 0,
) -> FlattenedNumber:
    """Build the canonical representative of a cover point.

    Below-side input is rewritten to the identified above-side point:
    p decreases by one on the left cut, q decreases by one on the right.
    """
    point = z if isinstance(z, CutPoint) else CutPoint(complex(z), Side.coerce(side))
    if point.side is Side.BELOW:
        if point.z.real < 0.0:
            p -= 1
        else:
            q -= 1
        point = CutPoint(point.z, Side.ABOVE)
    return FlattenedNumber(point, p, q)


def flattened(z: complex | CutPoint, p: int = 0, q: int = 0) -> FlattenedNumber:
    """Convenience constructor; bare reals on a cut become x + 0i."""
    return canonicalize(as_cut_point(z), p=p, q=q)


def log_param_l(f: FlattenedNumber) -> complex:
    """The branch logarithm Log z + 2 pi i p."""
    return principal_log(f.base) + TWO_PI_I * f.p


def log_param_m(f: FlattenedNumber) -> complex:
    """The branch logarithm -Log(1-z) + 2 pi i q."""
    return -log_one_minus(f.base) + TWO_PI_I * f.q


# ---------------------------------------------------------------------------
# five-term tuples
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FlattenedFT:
    """A five-tuple of cover points in the flattened five-term family."""

    entries: tuple[FlattenedNumber, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != 5:
            raise ValueError("a five-term tuple has exactly five entries")
        object.__setattr__(self, "entries", tuple(self.entries))

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, k: int) -> FlattenedNumber:
        return self.entries[k]


def ft_projections(x: complex, y: complex) -> tuple[complex, ...]:
    """The five cross-ratio coordinates generated by the pair (x, y)."""
    return (x, y, y / x, (1 - 1 / x) / (1 - 1 / y), (1 - x) / (1 - y))


def make_flattened_ft(
    x: complex,
    y: complex,
    p0: int = 0,
    p1: int = 0,
    q0: int = 0,
    q1: int = 0,
    q2: int = 0,
) -> FlattenedFT:
    """Construct a flattened five-term tuple over the all-upper-half chart.

    Requires every one of the five coordinates to have positive imaginary
    part (equivalently: Im y > 0 and x interior to the triangle 0, 1, y).
    Outside that chart some indices would need +-1 adjustments, which this
    constructor deliberately does not attempt; validate externally built
    tuples with :func:`is_flattened_ft` instead.
    """
    x = complex(x)
    y = complex(y)
    if x == 0 or y == 0 or x == 1 or y == 1 or x == y:
        raise ValueError("x, y must be distinct and avoid 0 and 1")
    coords = ft_projections(x, y)
    if not all(c.imag > 0.0 for c in coords):
        raise ValueError(
            "not in the all-upper-half five-term chart; this constructor "
            "does not apply the +-1 index adjustments other charts need"
        )
    indices = (
        (p0, q0),
        (p1, q1),
        (p1 - p0, q2),
        (p1 - p0 + q1 - q0, q2 - q1),
        (q1 - q0, q2 - q1 - p0),
    )
    entries = tuple(
        FlattenedNumber(CutPoint(c), pk, qk) for c, (pk, qk) in zip(coords, indices)
    )
    return FlattenedFT(entries)


def is_flattened_ft(
    t: FlattenedFT | Sequence[FlattenedNumber],
    tol: float = 1e-9,
) -> bool:
    """Membership test for the flattened five-term family.

    Checks the projected cross-ratio equations together with the five
    linear identities among the branch logarithms

        l2 = l1 - l0            m3 = m2 - m1
        l3 = l1 - l0 + m1 - m0  m4 = m2 - m1 - l0
        l4 = m1 - m0

    which hold on the all-upper-half chart and extend to the whole
    connected family by analytic continuation of both sides.
    """
    entries: Iterable[FlattenedNumber] = t.entries if isinstance(t, FlattenedFT) else t
    entries = tuple(entries)
    if len(entries) != 5 or not all(isinstance(e, FlattenedNumber) for e in entries):
        return False
    z = [e.z for e in entries]
    if abs(z[0] - z[1]) <= tol:
        return False
    try:
        expected = ft_projections(z[0], z[1])
    except ZeroDivisionError:
        return False
    if any(abs(z[k] - expected[k]) > tol for k in (2, 3, 4)):
        return False
    l = [log_param_l(e) for e in entries]
    m = [log_param_m(e) for e in entries]
    residuals = (
        l[2] - (l[1] - l[0]),
        l[3] - (l[1] - l[0] + m[1] - m[0]),
        l[4] - (m[1] - m[0]),
        m[3] - (m[2] - m[1]),
        m[4] - (m[2] - m[1] - l[0]),
    )
    return all(abs(r) <= tol for r in residuals)


# ---------------------------------------------------------------------------
# textual serialization: "z_re z_im side p q"
# ---------------------------------------------------------------------------

def serialize_flattened(f: FlattenedNumber) -> str:
    return f"{f.z.real!r} {f.z.imag!r} {f.base.side.value} {f.p} {f.q}"


def parse_flattened(text: str) -> FlattenedNumber:
    parts = text.split()
    if len(parts) != 5:
        raise ValueError(
            f"expected 'z_re z_im side p q', got {len(parts)} fields: {text!r}"
        )
    re_s, im_s, side_s, p_s, q_s = parts
    if side_s not in ("i", "a"):
        raise ValueError(f"side must be 'i' or 'a', got {side_s!r}")
    z = complex(float(re_s), float(im_s))
    return FlattenedNumber(CutPoint(z, Side.coerce(side_s)), int(p_s), int(q_s))
