"""Wedge images of formal sums and a necessary-condition vanishing check.

The wedge of the two branch logarithms is the obstruction map whose kernel
(modulo five-term images) is the group of interest.  The exterior square
of C over Z has torsion no floating-point computation can see, so the
check below is deliberately one-sided: a failed pairing certifies the
element is nonzero, while a pass is only a necessary condition and is
flagged as such in the result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cover import log_param_l, log_param_m
from .dilog import PI
from .prebloch import FormalSum

_TAU = complex(0.0, 2.0 * PI)  # 2 pi i, the lattice step used in merging


def _lex_leq(a: complex, b: complex) -> bool:
    return (a.real, a.imag) <= (b.real, b.imag)


@dataclass(frozen=True)
class WedgeExpr:
    """Formal integer combination of wedge pairs of complex numbers.

    Normal form: no a ^ a terms, each pair ordered lexicographically with
    antisymmetry absorbed into the coefficient, like terms merged.
    """

    terms: tuple[tuple[int, complex, complex], ...] = ()

    def __post_init__(self) -> None:
        merged: dict[tuple[complex, complex], int] = {}
        for coeff, a, b in self.terms:
            coeff = int(coeff)
            a = complex(a)
            b = complex(b)
            if a == b:
                continue
            if not _lex_leq(a, b):
                a, b = b, a
                coeff = -coeff
            merged[(a, b)] = merged.get((a, b), 0) + coeff
        cleaned = tuple(
            (c, a, b)
            for (a, b), c in sorted(
                merged.items(), key=lambda kv: (kv[0][0].real, kv[0][0].imag, kv[0][1].real, kv[0][1].imag)
            )
            if c != 0
        )
        object.__setattr__(self, "terms", cleaned)

    def __add__(self, other: "WedgeExpr") -> "WedgeExpr":
        return WedgeExpr(self.terms + other.terms)

    def __neg__(self) -> "WedgeExpr":
        return WedgeExpr(tuple((-c, a, b) for c, a, b in self.terms))

    def __len__(self) -> int:
        return len(self.terms)

    def is_empty(self) -> bool:
        return not self.terms

    def pairing(self) -> float:
        """The real antisymmetric pairing sum c (Re a Im b - Im a Re b)."""
        total = 0.0
        comp = 0.0
        for c, a, b in self.terms:
            term = c * (a.real * b.imag - a.imag * b.real) - comp
            new_total = total + term
            comp = (new_total - total) - term
            total = new_total
        return total

    def serialize(self) -> str:
        return "\n".join(
            f"{c} {a.real!r} {a.imag!r} {b.real!r} {b.imag!r}" for c, a, b in self.terms
        )


def nu_hat(s: FormalSum) -> WedgeExpr:
    """Wedge of the branch logarithms, summed over a formal sum."""
    return WedgeExpr(
        tuple((coeff, log_param_l(gen), log_param_m(gen)) for coeff, gen in s.terms)
    )


@dataclass(frozen=True)
class NecessaryZeroCheck:
    """Outcome of the vanishing heuristic.

    ``certainty`` is "zero" (exact cancellation emptied the expression),
    "nonzero" (the pairing certifies a nonzero element), or
    "necessary-only" (every computable obstruction vanished; the element
    may still be nonzero torsion invisible to floating point).
    """

    passed: bool
    certainty: str
    pairing: float
    merged_pairing: float

    def __bool__(self) -> bool:
        return self.passed


def _merge_by_lattice(terms, tol: float):
    # Group a-values that differ by small integer multiples of 2 pi i,
    # splitting off the integer part onto an explicit 2 pi i column.
    # Detection stays tight even when the caller's tolerance is loose:
    # a sloppy residual budget is no license to misread lattice shifts.
    detect = min(tol, 1e-8)
    reps: list[complex] = []
    bucket: dict[int, complex] = {}
    tau_bucket = 0.0 + 0.0j
    for c, a, b in terms:
        match = None
        for idx, r in enumerate(reps):
            d = (a - r) / _TAU
            k = round(d.real)
            if abs(k) <= 64 and abs(d - k) <= detect:
                match = (idx, k)
                break
        if match is None:
            reps.append(a)
            bucket[len(reps) - 1] = c * b
        else:
            idx, k = match
            bucket[idx] = bucket.get(idx, 0j) + c * b
            tau_bucket += c * k * b
    merged = [(r, bucket[i]) for i, r in enumerate(reps) if i in bucket]
    if tau_bucket != 0:
        merged.append((_TAU, tau_bucket))
    return merged


def wedge_necessary_zero(w: WedgeExpr, tol: float = 1e-9) -> NecessaryZeroCheck:
    """Test whether a wedge expression can be zero.

    False certifies the element is nonzero (the antisymmetric pairing, a
    well-defined functional on the wedge, does not vanish).  True is a
    necessary-condition pass only, unless exact cancellation emptied the
    expression outright.
    """
    if w.is_empty():
        return NecessaryZeroCheck(True, "zero", 0.0, 0.0)
    pairing = w.pairing()
    merged = _merge_by_lattice(w.terms, tol)
    merged_pairing = 0.0
    for a, b in merged:
        merged_pairing += a.real * b.imag - a.imag * b.real
    passed = abs(pairing) <= tol and abs(merged_pairing) <= tol
    certainty = "necessary-only" if passed else "nonzero"
    return NecessaryZeroCheck(passed, certainty, pairing, merged_pairing)
