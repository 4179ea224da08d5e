"""Formal sums of cover points and the relation generators among them.

Every relation constructor returns the formal sum LHS - RHS of the stated
identity; applying the lifted Rogers evaluation to the result must give
zero mod 4 pi^2 (within floating tolerance).  Equality checks here are
always images under that evaluation: no normal-form decision procedure
for the quotient group itself is attempted.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .cover import (
    FlattenedFT,
    FlattenedNumber,
    canonicalize,
    flattened,
    is_flattened_ft,
)
from .dilog import (
    PI,
    TWO_PI_I,
    CutPoint,
    Side,
    arg_cut,
    as_cut_point,
    principal_log,
)
from .rogers import CmodZ2, rogers_l_bar


def _sort_key(f: FlattenedNumber):
    return (f.z.real, f.z.imag, f.base.side.value, f.p, f.q)


@dataclass(frozen=True)
class FormalSum:
    """An integer linear combination of canonical cover points.

    Terms are merged, zero coefficients pruned, and the term order is
    canonical, so equal sums compare equal structurally.
    """

    terms: tuple[tuple[int, FlattenedNumber], ...] = ()

    def __post_init__(self) -> None:
        merged: dict[FlattenedNumber, int] = {}
        for coeff, gen in self.terms:
            if not isinstance(gen, FlattenedNumber):
                raise TypeError("generators must be FlattenedNumber values")
            merged[gen] = merged.get(gen, 0) + int(coeff)
        cleaned = tuple(
            (c, g)
            for g, c in sorted(merged.items(), key=lambda kv: _sort_key(kv[0]))
            if c != 0
        )
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def of(cls, *pairs: tuple[int, FlattenedNumber]) -> "FormalSum":
        return cls(tuple(pairs))

    @classmethod
    def single(cls, gen: FlattenedNumber, coeff: int = 1) -> "FormalSum":
        return cls(((coeff, gen),))

    def __add__(self, other: "FormalSum") -> "FormalSum":
        return FormalSum(self.terms + other.terms)

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def __neg__(self) -> "FormalSum":
        return FormalSum(tuple((-c, g) for c, g in self.terms))

    def __rmul__(self, k: int) -> "FormalSum":
        if not isinstance(k, int):
            return NotImplemented
        return FormalSum(tuple((k * c, g) for c, g in self.terms))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def is_empty(self) -> bool:
        return not self.terms

    def serialize(self) -> str:
        from .cover import serialize_flattened

        return "\n".join(f"{c} {serialize_flattened(g)}" for c, g in self.terms)

    @classmethod
    def parse(cls, text: str) -> "FormalSum":
        from .cover import parse_flattened

        pairs = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            coeff_s, rest = line.split(None, 1)
            pairs.append((int(coeff_s), parse_flattened(rest)))
        return cls(tuple(pairs))


def eval_lhat(s: FormalSum) -> CmodZ2:
    """Sum of coefficient times lifted-Rogers value, reduced mod 4 pi^2.

    The unreduced contributions are accumulated with compensated
    summation in canonical term order, then reduced once.
    """
    total = 0.0 + 0.0j
    comp = 0.0 + 0.0j
    for coeff, gen in s.terms:
        term = coeff * rogers_l_bar(gen) - comp
        new_total = total + term
        comp = (new_total - total) - term
        total = new_total
    return CmodZ2(total)


# ---------------------------------------------------------------------------
# relation generators
# ---------------------------------------------------------------------------

def five_term_element(t: FlattenedFT | Sequence[FlattenedNumber], tol: float = 1e-9) -> FormalSum:
    """The alternating five-term sum [z0] - [z1] + [z2] - [z3] + [z4]."""
    entries = tuple(t.entries if isinstance(t, FlattenedFT) else t)
    if not is_flattened_ft(entries, tol):
        raise ValueError("tuple is not a flattened five-term instance")
    return FormalSum(tuple(((-1) ** k, entries[k]) for k in range(5)))


def curly(z: complex | CutPoint, p: int) -> FormalSum:
    """The q-independent difference {z; 2p} = [z; 2p, 2] - [z; 2p, 0]."""
    point = as_cut_point(z)
    return FormalSum.of(
        (1, canonicalize(point, p=p, q=1)),
        (-1, canonicalize(point, p=p, q=0)),
    )


def _product_shift(arg_sum: float) -> int:
    if arg_sum <= -PI:
        return -1
    if arg_sum > PI:
        return 1
    return 0


def curly_product_relation(
    z: complex | CutPoint,
    p: int,
    w: complex | CutPoint,
    r: int,
) -> FormalSum:
    """{z;2p} + {w;2r} - {zw + 0i; 2(p + r + e)}, the multiplicative relation.

    The index shift e is -1, 0 or +1 according to whether Arg z + Arg w
    falls at or below -pi, in (-pi, pi], or above pi.  Products landing on
    a cut are read as the upper limit.
    """
    zp = as_cut_point(z)
    wp = as_cut_point(w)
    product = zp.z * wp.z
    if product == 0:
        raise ValueError("product underflowed to zero")
    if abs(product - 1.0) <= 1e-12:
        raise ValueError("zw = 1 is excluded (the product leaves the domain)")
    eps = _product_shift(arg_cut(zp) + arg_cut(wp))
    return curly(zp, p) + curly(wp, r) - curly(as_cut_point(product), p + r + eps)


def cycle_relation(
    x: complex | CutPoint,
    y: complex | CutPoint,
    p0: int = 0,
    p1: int = 0,
    q0: int = 0,
    q1: int = 0,
    q2: int = 0,
) -> FormalSum:
    """The cycle relation obtained by cancelling two five-term instances.

    LHS - RHS of

        [x;2p0,2q0-2] - [x;2p0,2q0] - [y;2p1,2q1-2] + [y;2p1,2q1]
            = [y/x; 2(p1-p0+d), 2q2] - [y/x; 2(p1-p0+d), 2q2-2]

    where d is -1 / 0 / +1 as Arg y - Arg x is <= -pi / in (-pi, pi] /
    > pi.  The right-hand orientation is the one forced by subtracting
    five-term instances that share their last two entries.
    """
    xp = as_cut_point(x)
    yp = as_cut_point(y)
    quotient = yp.z / xp.z
    if abs(quotient - 1.0) <= 1e-12 or quotient == 0:
        raise ValueError("x = y (or y/x degenerate) is excluded")
    delta = _product_shift(arg_cut(yp) - arg_cut(xp))
    r = p1 - p0 + delta
    lhs = FormalSum.of(
        (1, canonicalize(xp, p=p0, q=q0 - 1)),
        (-1, canonicalize(xp, p=p0, q=q0)),
        (-1, canonicalize(yp, p=p1, q=q1 - 1)),
        (1, canonicalize(yp, p=p1, q=q1)),
    )
    qp = as_cut_point(quotient)
    rhs = FormalSum.of(
        (1, canonicalize(qp, p=r, q=q2)),
        (-1, canonicalize(qp, p=r, q=q2 - 1)),
    )
    return lhs - rhs


def index_relations(
    z: complex | CutPoint,
    p: int,
    q: int,
    p2: int,
    q2: int,
    kind: str,
) -> FormalSum:
    """The three index-shift relations; ``kind`` is "Q", "P" or "PQ".

    Q:  [z;2p,2(q-1)] - [z;2p,2q]   independent of q (compare at q, q2);
    P:  [z;2(p-1),2q] - [z;2p,2q]   independent of p (compare at p, p2);
    PQ: [z;2(p+1),2(q-1)] - [z;2p,2q] compared at (p2, q2) with the
        diagonal constraint p + q = p2 + q2.
    """
    point = as_cut_point(z)
    kind = kind.upper()
    if kind == "Q":
        lhs = FormalSum.of(
            (1, canonicalize(point, p=p, q=q - 1)),
            (-1, canonicalize(point, p=p, q=q)),
        )
        rhs = FormalSum.of(
            (1, canonicalize(point, p=p, q=q2 - 1)),
            (-1, canonicalize(point, p=p, q=q2)),
        )
    elif kind == "P":
        lhs = FormalSum.of(
            (1, canonicalize(point, p=p - 1, q=q)),
            (-1, canonicalize(point, p=p, q=q)),
        )
        rhs = FormalSum.of(
            (1, canonicalize(point, p=p2 - 1, q=q)),
            (-1, canonicalize(point, p=p2, q=q)),
        )
    elif kind == "PQ":
        if p + q != p2 + q2:
            raise ValueError("the diagonal relation needs p + q = p2 + q2")
        lhs = FormalSum.of(
            (1, canonicalize(point, p=p + 1, q=q - 1)),
            (-1, canonicalize(point, p=p, q=q)),
        )
        rhs = FormalSum.of(
            (1, canonicalize(point, p=p2 + 1, q=q2 - 1)),
            (-1, canonicalize(point, p=p2, q=q2)),
        )
    else:
        raise ValueError(f"unknown index relation kind {kind!r}")
    return lhs - rhs


def _one_minus(point: CutPoint) -> tuple[complex, Side]:
    # 1 - (x +- 0i) = (1 - x) -+ 0i: the side flips on the boundary.
    if point.side is Side.INTERIOR:
        return 1.0 - point.z, Side.INTERIOR
    flipped = Side.BELOW if point.side is Side.ABOVE else Side.ABOVE
    return complex(1.0 - point.z.real, 0.0), flipped


def mirror_relation(z: complex | CutPoint, p: int = 0, q: int = 0) -> FormalSum:
    """[z;2p,2q] + [1-z;-2q,-2p] - 2 [1/2;0,0]."""
    point = as_cut_point(z)
    mz, mside = _one_minus(point)
    half = flattened(0.5 + 0.0j)
    return (
        FormalSum.single(canonicalize(point, p=p, q=q))
        + FormalSum.single(canonicalize(mz, mside, p=-q, q=-p))
        - 2 * FormalSum.single(half)
    )


def kappa_hat(z: complex | CutPoint = 0.5 + 0.0j, p: int = 1) -> FormalSum:
    """The order-two torsion element {z; 2p} - {z; 2(p-1)}.

    Independent of the representative z and p; the default is the fixed
    choice z = 1/2, p = 1.  Its lifted-Rogers value is -2 pi^2, which is
    why it survives only until the transfer relation is imposed.
    """
    point = as_cut_point(z)
    return curly(point, p) - curly(point, p - 1)


def _phase(z: complex) -> float:
    # Principal argument in (-pi, pi]; negative-zero imaginary parts are
    # normalized away first so the negative real axis maps to +pi.
    if z.imag == 0.0:
        z = complex(z.real, 0.0)
    return cmath.phase(z)


def chi_hat(z: complex) -> FormalSum:
    """The multiplicative branch-correction homomorphism into formal sums.

    chi(1) = 0, chi(-1) is the order-two element, and otherwise
    chi(z) = {z^2 + 0i; 0} or {z^2 + 0i; 2} according to whether Arg z
    lies in (-pi/2, pi/2] or not.  Composing with the lifted Rogers
    evaluation gives 2 pi i Log z mod 4 pi^2.
    """
    z = complex(z)
    if z == 0:
        raise ValueError("chi is defined on nonzero numbers only")
    if z == 1:
        return FormalSum()
    if z == -1:
        return kappa_hat()
    square = z * z
    if square == 0:
        raise ValueError("z^2 underflowed to zero")
    ph = _phase(z)
    p = 0 if (-PI / 2 < ph <= PI / 2) else 1
    return curly(as_cut_point(square), p)


def check_chi_homomorphism(z: complex, w: complex) -> CmodZ2:
    """Residual of chi(z) + chi(w) - chi(zw) under the lifted evaluation."""
    return eval_lhat(chi_hat(z) + chi_hat(w) - chi_hat(z * w))


def splitting(s: FormalSum) -> complex:
    """exp of the lifted evaluation divided by 2 pi i.

    Well defined on classes mod 4 pi^2 since exp(4 pi^2 / 2 pi i) = 1;
    composing with chi recovers the identity on nonzero numbers.
    """
    return cmath.exp(eval_lhat(s).value / TWO_PI_I)


def root4(z: complex) -> complex:
    """The standard fourth root: the unique w with w^4 = z, Arg w in (-pi/4, pi/4]."""
    z = complex(z)
    if z == 0:
        raise ValueError("fourth root of zero is excluded")
    return cmath.exp(complex(math.log(abs(z)), _phase(z)) / 4.0)


_I_POWER = (1 + 0j, 1j, -1 + 0j, -1j)


def symmetry_relation(z: complex, p: int, q: int, which: int) -> FormalSum:
    """The five reordering relations for Im z > 0, as LHS - RHS sums.

    Each relates [z;2p,2q] to the cover point over one of the other five
    cross-ratio orderings, with a chi correction term built from a fourth
    root.  Contract: the lifted evaluation of the result is zero.
    """
    z = complex(z)
    if not z.imag > 0.0:
        raise ValueError("these relations require Im z > 0")
    if which == 1:
        main = flattened(1.0 / z, -p, p + q)
        corr = chi_hat(_I_POWER[p % 4] * root4(z))
        return FormalSum.single(main) + FormalSum.single(flattened(z, p, q)) - corr
    if which == 2:
        main = flattened(1.0 - 1.0 / z, -p - q, p)
        corr = chi_hat(cmath.exp(-1j * PI * (1 - 6 * p) / 12.0) * root4(z))
        return FormalSum.single(main) - FormalSum.single(flattened(z, p, q)) + corr
    if which == 3:
        main = flattened(-z / (1.0 - z), p + q, -q)
        corr = chi_hat(cmath.exp(-1j * PI * (1 + 6 * q) / 12.0) * root4(z - 1.0))
        return FormalSum.single(main) + FormalSum.single(flattened(z, p, q)) - corr
    if which == 4:
        main = flattened(1.0 / (1.0 - z), q, -p - q)
        corr = chi_hat(cmath.exp(-1j * PI * (2 + 6 * q) / 12.0) * root4(z - 1.0))
        return FormalSum.single(main) - FormalSum.single(flattened(z, p, q)) + corr
    if which == 5:
        main = flattened(1.0 - z, -q, -p)
        corr = chi_hat(cmath.exp(1j * PI / 12.0))
        return FormalSum.single(main) + FormalSum.single(flattened(z, p, q)) - corr
    raise ValueError("which must be 1..5")
