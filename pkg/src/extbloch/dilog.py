"""Principal-branch dilogarithm and logarithms on the doubly cut plane.

The working domain is the complex plane cut along (-inf, 0] and [1, inf).
Points on the open cuts are kept as two-sided boundary limits x + 0i and
x - 0i, tagged by a :class:`Side`.  All branch conventions follow the
principal argument in (-pi, pi]: approaching the negative real axis from
above gives Arg = +pi, from below Arg = -pi.

Evaluation strategy for the dilogarithm:

* main region: the Bernoulli-accelerated series in ``w = -Log(1-z)``,
  which converges geometrically for |w| < 2 pi and, with ``w`` computed
  side-aware, produces the correct one-sided boundary values for free;
* near z = 1: Euler reflection plus a short power series;
* far from 1: the inversion identity with an explicit side-flipped
  logarithm of ``-z``.

A process-wide precision switch reroutes the transcendental primitives
through mpmath at >= 50 significant digits; results are rounded back to
machine complex on return.
"""

from __future__ import annotations

import cmath
import enum
import math
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

PI = math.pi
TWO_PI_I = complex(0.0, 2.0 * PI)
PI_SQ = PI * PI


class Side(enum.Enum):
    """Which boundary limit a point on a cut represents."""

    INTERIOR = "i"
    ABOVE = "a"
    BELOW = "b"

    @classmethod
    def coerce(cls, value: "Side | str") -> "Side":
        if isinstance(value, Side):
            return value
        token = str(value).strip().lower()
        aliases = {
            "i": cls.INTERIOR, "interior": cls.INTERIOR,
            "a": cls.ABOVE, "above": cls.ABOVE,
            "b": cls.BELOW, "below": cls.BELOW,
        }
        try:
            return aliases[token]
        except KeyError:
            raise ValueError(f"unknown side tag {value!r}") from None


def on_cut(z: complex) -> bool:
    """True when z lies on one of the two open cuts (-inf,0) or (1,inf)."""
    return z.imag == 0.0 and (z.real < 0.0 or z.real > 1.0)


def _normalize(z: complex) -> complex:
    # Drop negative-zero imaginary parts so that Arg stays in (-pi, pi].
    if z.imag == 0.0:
        return complex(z.real, 0.0)
    return z


@dataclass(frozen=True)
class CutPoint:
    """A point of the closed cut plane: z together with a boundary side tag.

    Interior points must lie off both cuts; boundary points must sit exactly
    on an open cut.  The values 0 and 1 are excluded outright.
    """

    z: complex
    side: Side = Side.INTERIOR

    def __post_init__(self) -> None:
        z = _normalize(complex(self.z))
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "side", Side.coerce(self.side))
        if z == 0 or z == 1:
            raise ValueError("0 and 1 are excluded from the cut plane")
        if self.side is Side.INTERIOR:
            if on_cut(z):
                raise ValueError(
                    f"{z} lies on a cut; an interior point needs a side tag"
                )
        else:
            if not on_cut(z):
                raise ValueError(
                    f"side tag {self.side.value!r} given but {z} is not on a cut"
                )

    @property
    def is_boundary(self) -> bool:
        return self.side is not Side.INTERIOR


def as_cut_point(value: complex | CutPoint) -> CutPoint:
    """Coerce a bare complex number to a CutPoint.

    Real values on a cut are identified with their upper limit x + 0i,
    matching the convention used throughout for products and squares that
    land on a cut.
    """
    if isinstance(value, CutPoint):
        return value
    z = _normalize(complex(value))
    if on_cut(z):
        return CutPoint(z, Side.ABOVE)
    return CutPoint(z)


def arg_cut(p: CutPoint) -> float:
    """Extended principal argument: +pi / -pi on the two sides of (-inf,0)."""
    if p.side is Side.INTERIOR:
        return cmath.phase(p.z)
    if p.z.real < 0.0:
        return PI if p.side is Side.ABOVE else -PI
    return 0.0


# ---------------------------------------------------------------------------
# precision switch
# ---------------------------------------------------------------------------

_PRECISION_DPS: int | None = None


def set_precision(mode: str = "double", dps: int = 50) -> None:
    """Select the evaluation backend: "double" (default) or "high".

    In high mode the primitives run through mpmath with at least ``dps``
    significant digits internally; returned values are machine complex.
    """
    global _PRECISION_DPS
    if mode == "double":
        _PRECISION_DPS = None
    elif mode == "high":
        if dps < 50:
            raise ValueError("high-precision mode requires dps >= 50")
        _PRECISION_DPS = dps
    else:
        raise ValueError(f"unknown precision mode {mode!r}")


def get_precision() -> tuple[str, int | None]:
    return ("double", None) if _PRECISION_DPS is None else ("high", _PRECISION_DPS)


@contextmanager
def precision(mode: str, dps: int = 50) -> Iterator[None]:
    global _PRECISION_DPS
    saved = _PRECISION_DPS
    set_precision(mode, dps)
    try:
        yield
    finally:
        _PRECISION_DPS = saved


# ---------------------------------------------------------------------------
# logarithms
# ---------------------------------------------------------------------------

def principal_log(p: CutPoint | complex) -> complex:
    """Log z with Im in (-pi, pi], extended to the cut boundary by side."""
    p = as_cut_point(p)
    if _PRECISION_DPS is not None:
        return _mp_principal_log(p)
    return complex(math.log(abs(p.z)), arg_cut(p))


def log_one_minus(p: CutPoint | complex) -> complex:
    """Log(1-z) on the closed cut plane.

    For z = x +- 0i with x > 1 the value 1-z sits on the negative axis
    approached from the opposite side, so Im = -pi above and +pi below.
    """
    p = as_cut_point(p)
    if _PRECISION_DPS is not None:
        return _mp_log_one_minus(p)
    z = p.z
    if p.side is Side.INTERIOR:
        return cmath.log(_normalize(1.0 - z))
    if z.real > 1.0:
        im = -PI if p.side is Side.ABOVE else PI
        return complex(math.log(z.real - 1.0), im)
    return complex(math.log(1.0 - z.real), 0.0)


def _log_neg(p: CutPoint) -> complex:
    # Log(-z); the side flips because negation swaps the half-planes.
    z = p.z
    if p.side is Side.INTERIOR:
        return cmath.log(_normalize(-z))
    if z.real > 1.0:
        im = -PI if p.side is Side.ABOVE else PI
        return complex(math.log(z.real), im)
    return complex(math.log(-z.real), 0.0)


# ---------------------------------------------------------------------------
# dilogarithm, double-precision path
# ---------------------------------------------------------------------------

def _bernoulli_fractions(n: int) -> list[Fraction]:
    values = [Fraction(0)] * (n + 1)
    values[0] = Fraction(1)
    for m in range(1, n + 1):
        acc = Fraction(0)
        for k in range(m):
            acc += math.comb(m + 1, k) * values[k]
        values[m] = -acc / (m + 1)
    return values


# c_n = B_n / (n+1)!, so that Li2(z) = sum c_n w^(n+1) with w = -Log(1-z).
_N_COEFF = 80
_W_COEFF = tuple(
    float(b / math.factorial(n + 1))
    for n, b in enumerate(_bernoulli_fractions(_N_COEFF))
)


def _li2_from_w(w: complex) -> complex:
    # Bernoulli-accelerated series; requires |w| < 2 pi.
    total = 0.0 + 0.0j
    comp = 0.0 + 0.0j  # Kahan compensation
    power = w
    for c in _W_COEFF:
        if c != 0.0:
            term = c * power - comp
            new_total = total + term
            comp = (new_total - total) - term
            total = new_total
            if abs(term) < 1e-20 * abs(total) + 5e-324:
                break
        power *= w
    return total


def _li2_small(u: complex) -> complex:
    # Plain power series, adequate for |u| <= 0.2.
    total = 0.0 + 0.0j
    comp = 0.0 + 0.0j
    power = 1.0 + 0.0j
    for k in range(1, 60):
        power *= u
        term = power / (k * k) - comp
        new_total = total + term
        comp = (new_total - total) - term
        total = new_total
        if abs(term) < 1e-20 * abs(total) + 5e-324:
            break
    return total


def _flip(side: Side) -> Side:
    if side is Side.ABOVE:
        return Side.BELOW
    if side is Side.BELOW:
        return Side.ABOVE
    return Side.INTERIOR


def _li2_double(p: CutPoint) -> complex:
    z = p.z
    dist_one = abs(1.0 - z)
    if dist_one <= 0.1:
        # Euler reflection; 1-z is small so the plain series finishes it.
        return (
            PI_SQ / 6.0
            - principal_log(p) * log_one_minus(p)
            - _li2_small(1.0 - z)
        )
    if dist_one >= 10.0:
        # Inversion; 1/z lands well inside the main region.
        inv = _normalize(1.0 / z)
        inv_side = _flip(p.side) if on_cut(inv) else Side.INTERIOR
        ln_neg = _log_neg(p)
        return -_li2_double(CutPoint(inv, inv_side)) - PI_SQ / 6.0 - 0.5 * ln_neg * ln_neg
    return _li2_from_w(-log_one_minus(p))


def li2(p: CutPoint | complex) -> complex:
    """Principal branch of the dilogarithm on the closed cut plane.

    Bare complex input is accepted; values exactly on a cut are read as
    the upper limit x + 0i.  The points 0 and 1 (excluded from CutPoint)
    evaluate to their classical limits 0 and pi^2/6.
    """
    if not isinstance(p, CutPoint):
        z = _normalize(complex(p))
        if z == 0:
            return 0.0 + 0.0j
        if z == 1:
            return complex(PI_SQ / 6.0, 0.0)
        p = as_cut_point(z)
    if _PRECISION_DPS is not None:
        return _mp_li2(p)
    return _li2_double(p)


# ---------------------------------------------------------------------------
# mpmath path (high-precision mode)
# ---------------------------------------------------------------------------

_MP_COEFF_CACHE: dict[int, list] = {}


def _mp_coeffs(dps: int):
    import mpmath as mp

    cached = _MP_COEFF_CACHE.get(dps)
    if cached is not None:
        return cached
    with mp.workdps(dps + 10):
        n_terms = max(40, int(dps * 2.6) + 20)
        coeffs = [mp.bernoulli(n) / mp.factorial(n + 1) for n in range(n_terms)]
    _MP_COEFF_CACHE[dps] = coeffs
    return coeffs


def _mp_log_pieces(p: CutPoint, dps: int):
    import mpmath as mp

    z = mp.mpc(p.z.real, p.z.imag)
    if p.side is Side.INTERIOR:
        log_z = mp.log(z)
        log_1mz = mp.log(1 - z)
        log_negz = mp.log(-z)
    elif p.z.real > 1.0:
        x = mp.mpf(p.z.real)
        sgn = 1 if p.side is Side.ABOVE else -1
        log_z = mp.log(x)
        log_1mz = mp.mpc(mp.log(x - 1), -sgn * mp.pi)
        log_negz = mp.mpc(mp.log(x), -sgn * mp.pi)
    else:
        x = mp.mpf(p.z.real)
        sgn = 1 if p.side is Side.ABOVE else -1
        log_z = mp.mpc(mp.log(-x), sgn * mp.pi)
        log_1mz = mp.log(1 - x)
        log_negz = mp.log(-x)
    return z, log_z, log_1mz, log_negz


def _mp_principal_log(p: CutPoint) -> complex:
    import mpmath as mp

    dps = _PRECISION_DPS or 50
    with mp.workdps(dps):
        _, log_z, _, _ = _mp_log_pieces(p, dps)
        return complex(log_z)


def _mp_log_one_minus(p: CutPoint) -> complex:
    import mpmath as mp

    dps = _PRECISION_DPS or 50
    with mp.workdps(dps):
        _, _, log_1mz, _ = _mp_log_pieces(p, dps)
        return complex(log_1mz)


def _mp_li2(p: CutPoint) -> complex:
    import mpmath as mp

    dps = _PRECISION_DPS or 50
    coeffs = _mp_coeffs(dps)
    with mp.workdps(dps):
        value = _mp_li2_inner(p, coeffs)
        return complex(value)


def _mp_li2_inner(p: CutPoint, coeffs):
    import mpmath as mp

    z, log_z, log_1mz, log_negz = _mp_log_pieces(p, _PRECISION_DPS or 50)
    dist_one = abs(1 - z)
    if dist_one <= mp.mpf("0.1"):
        small = mp.mpc(0)
        power = mp.mpc(1)
        u = 1 - z
        for k in range(1, 400):
            power *= u
            term = power / (k * k)
            small += term
            if abs(term) < mp.eps * abs(small):
                break
        return mp.pi**2 / 6 - log_z * log_1mz - small
    if dist_one >= 10:
        inv = complex(1 / z)
        inv_side = _flip(p.side) if on_cut(_normalize(inv)) else Side.INTERIOR
        inner = _mp_li2_inner(CutPoint(_normalize(inv), inv_side), coeffs)
        return -inner - mp.pi**2 / 6 - log_negz**2 / 2
    w = -log_1mz
    total = mp.mpc(0)
    power = w
    for c in coeffs:
        if c != 0:
            term = c * power
            total += term
            if abs(term) < mp.eps * abs(total):
                break
        power *= w
    return total
