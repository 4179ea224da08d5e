"""The lifted Rogers dilogarithm and arithmetic in C mod 4 pi^2 Z.

The branch-corrected Rogers function on a cover point (z; 2p, 2q) is

    L(z; 2p, 2q) = Li2(z) + (Log z + 2 pi i p)(Log(1-z) + 2 pi i q)/2 - pi^2/6.

As a function on the cut-plane charts it jumps by integer multiples of
4 pi^2 across the right cut, so its reduction mod 4 pi^2 descends to a
holomorphic function on the cover.  The lattice 4 pi^2 Z is real, so only
the real part ever gets reduced; the imaginary part (which carries
hyperbolic volume) is exact and never touched.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .cover import FlattenedNumber
from .dilog import PI, PI_SQ, TWO_PI_I, CutPoint, Side, li2, log_one_minus, principal_log

FOUR_PI_SQ = 4.0 * PI_SQ
TWO_PI_SQ = 2.0 * PI_SQ


def reduce_into(x: float, period: float) -> float:
    """Reduce x into the half-open window (-period/2, period/2]."""
    r = math.remainder(x, period)
    if r <= -0.5 * period:
        r += period
    return r


@dataclass(frozen=True)
class CmodZ2:
    """An element of C / 4 pi^2 Z in canonical form, Re in (-2 pi^2, 2 pi^2]."""

    value: complex

    def __post_init__(self) -> None:
        v = complex(self.value)
        object.__setattr__(self, "value", complex(reduce_into(v.real, FOUR_PI_SQ), v.imag))

    def __add__(self, other: "CmodZ2") -> "CmodZ2":
        return CmodZ2(self.value + other.value)

    def __sub__(self, other: "CmodZ2") -> "CmodZ2":
        return CmodZ2(self.value - other.value)

    def __neg__(self) -> "CmodZ2":
        return CmodZ2(-self.value)

    def __rmul__(self, k: int) -> "CmodZ2":
        if not isinstance(k, int):
            return NotImplemented
        return CmodZ2(k * self.value)

    def distance_to(self, other: "CmodZ2 | complex") -> float:
        """Modular distance: wrap-around at the window boundary is free."""
        w = other.value if isinstance(other, CmodZ2) else complex(other)
        d = self.value - w
        return math.hypot(reduce_into(d.real, FOUR_PI_SQ), d.imag)

    def magnitude(self) -> float:
        """Modular distance to zero."""
        return self.distance_to(0j)

    def equals(self, other: "CmodZ2 | complex", tol: float = 1e-9) -> bool:
        return self.distance_to(other) <= tol

    def serialize(self) -> str:
        return f"{self.value.real!r} {self.value.imag!r}"


def reduce_mod_transfer(v: CmodZ2) -> complex:
    """The image in C / 2 pi^2 Z, real part reduced into (-pi^2, pi^2].

    This is the coarser normalization used when the transfer relation is
    imposed; the order-two torsion class dies under it.
    """
    return complex(reduce_into(v.value.real, TWO_PI_SQ), v.value.imag)


def l_bar_at(z: complex, side: Side | str, p: int, q: int) -> complex:
    """Branch-corrected Rogers value on an explicit chart, below side allowed.

    This is the unreduced function of (z, side, p, q); it is what jumps by
    4 pi^2 p across the right cut.  Prefer :func:`rogers_l_bar` for
    canonical cover points.
    """
    point = CutPoint(complex(z), Side.coerce(side))
    a = principal_log(point) + TWO_PI_I * p
    b = log_one_minus(point) + TWO_PI_I * q
    return li2(point) + 0.5 * a * b - PI_SQ / 6.0


def rogers_l_bar(f: FlattenedNumber) -> complex:
    """Unreduced branch-corrected Rogers value of a canonical cover point."""
    a = principal_log(f.base) + TWO_PI_I * f.p
    b = log_one_minus(f.base) + TWO_PI_I * f.q
    return li2(f.base) + 0.5 * a * b - PI_SQ / 6.0


def rogers_l_hat(f: FlattenedNumber) -> CmodZ2:
    """The lifted Rogers dilogarithm, valued in C mod 4 pi^2 Z."""
    return CmodZ2(rogers_l_bar(f))


# ---------------------------------------------------------------------------
# branch-tracked continuation along paths in C minus {0, 1}
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ContinuationResult:
    """Outcome of continuing the Rogers function along a closed polyline."""

    change: float            # total change of the continued value
    p: int                   # final left-cut winding chart
    q: int                   # final right-cut winding chart
    sheet: int               # accumulated 4 pi^2 multiples
    max_step_change: float   # largest |V_{k+1} - V_k| seen (continuity check)


def continue_rogers(path: Sequence[complex], p: int = 0, q: int = 0) -> ContinuationResult:
    """Continue the Rogers function continuously along a polyline.

    Vertices must avoid the cuts; each segment may cross the real axis at
    most once.  Crossing the left cut re-charts p (no value jump); crossing
    the right cut re-charts q and books a 4 pi^2 p sheet shift so the
    tracked value stays continuous.  The per-step change is recorded so a
    missed crossing (a genuine discontinuity) is detectable numerically.
    """
    pts = [complex(w) for w in path]
    if len(pts) < 2:
        raise ValueError("need at least two path vertices")
    for w in pts:
        if w.imag == 0.0:
            raise ValueError(f"path vertex {w} lies on the real axis")

    sheet = 0

    def tracked(w: complex, pp: int, qq: int, sh: int) -> complex:
        return l_bar_at(w, Side.INTERIOR, pp, qq) + FOUR_PI_SQ * sh

    start = tracked(pts[0], p, q, sheet)
    prev_val = start
    max_step = 0.0
    for w0, w1 in zip(pts, pts[1:]):
        if (w0.imag > 0.0) != (w1.imag > 0.0):
            t = w0.imag / (w0.imag - w1.imag)
            x_cross = w0.real + t * (w1.real - w0.real)
            downward = w0.imag > 0.0
            if x_cross < 0.0:
                p += 1 if downward else -1
            elif x_cross > 1.0:
                sheet += p if downward else -p
                q += 1 if downward else -1
        val = tracked(w1, p, q, sheet)
        max_step = max(max_step, abs(val - prev_val))
        prev_val = val
    return ContinuationResult(
        change=(prev_val - start).real if abs((prev_val - start).imag) < 1e-9
        else float("nan"),
        p=p,
        q=q,
        sheet=sheet,
        max_step_change=max_step,
    )


def _circle(center: complex, radius: float, start_angle: float, steps: int, ccw: bool):
    sign = 1.0 if ccw else -1.0
    return [
        center + radius * complex(math.cos(start_angle + sign * 2 * PI * k / steps),
                                  math.sin(start_angle + sign * 2 * PI * k / steps))
        for k in range(1, steps + 1)
    ]


def commutator_monodromy(steps: int = 97) -> ContinuationResult:
    """Continue the Rogers function along the commutator of the two cut loops.

    The loop runs, based near 1/2: counterclockwise around 1, then around 0,
    then both reversed.  The continued value returns to the same cover chart
    but a different sheet; the change is exactly one lattice period 4 pi^2.
    An odd step count keeps all vertices off the real axis.
    """
    if steps % 2 == 0:
        steps += 1
    base = 0.5
    loop1_ccw = _circle(1.0, 0.5, PI, steps, ccw=True)
    loop0_ccw = _circle(0.0, 0.5, 0.0, steps, ccw=True)
    loop1_cw = _circle(1.0, 0.5, PI, steps, ccw=False)
    loop0_cw = _circle(0.0, 0.5, 0.0, steps, ccw=False)
    nudge = complex(base, 1e-9)  # base vertex kept off the axis
    path = [nudge]
    for loop in (loop1_ccw, loop0_ccw, loop1_cw, loop0_cw):
        path.extend(w if w.imag != 0.0 else w + 1e-12j for w in loop[:-1])
        path.append(nudge)
    return continue_rogers(path)
