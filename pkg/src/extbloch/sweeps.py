"""Seeded randomized verification sweeps over the relation generators.

Every runner draws its inputs from a seeded generator, evaluates the
relation element under the lifted Rogers evaluation, and records the
modular distance to zero.  Sampling is deterministic given (seed, config),
and reports are rendered without timestamps so identical configurations
produce byte-identical output.  The stratified samplers guarantee that
the argument-case splits of the product and cycle relations are each
exercised at least a third of the time.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable

from .cover import make_flattened_ft
from .dilog import PI, TWO_PI_I, CutPoint, Side, principal_log
from .prebloch import (
    FormalSum,
    chi_hat,
    curly_product_relation,
    cycle_relation,
    eval_lhat,
    five_term_element,
    index_relations,
    kappa_hat,
    mirror_relation,
    splitting,
    symmetry_relation,
)
from .rogers import TWO_PI_SQ

RELATIONS = (
    "five-term",
    "cycle",
    "mirror",
    "homo",
    "index-q",
    "index-p",
    "index-pq",
    "chi-hom",
    "symmetry-1",
    "symmetry-2",
    "symmetry-3",
    "symmetry-4",
    "symmetry-5",
    "kappa",
    "splitting",
)


@dataclass(frozen=True)
class SweepConfig:
    relation: str
    samples: int = 500
    seed: int = 0
    tol: float = 1e-9
    index_bound: int = 5

    def __post_init__(self) -> None:
        if self.relation not in RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.index_bound < 0:
            raise ValueError("index-bound must be >= 0")


@dataclass
class SweepResult:
    config: SweepConfig
    max_residual: float = 0.0
    case_counts: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.config.tol and not self.failures

    def render_text(self) -> str:
        c = self.config
        lines = [
            f"relation: {c.relation}",
            f"samples: {c.samples}",
            f"seed: {c.seed}",
            f"tol: {c.tol!r}",
            f"index-bound: {c.index_bound}",
        ]
        cases = " ".join(f"{k}={v}" for k, v in sorted(self.case_counts.items()))
        lines.append(f"cases: {cases}")
        lines.append(f"max-residual: {self.max_residual!r}")
        lines.append(f"status: {'PASS' if self.passed else 'FAIL'}")
        for f in self.failures:
            lines.append(f)
        return "\n".join(lines)

    def to_dict(self) -> dict:
        c = self.config
        return {
            "relation": c.relation,
            "samples": c.samples,
            "seed": c.seed,
            "tol": c.tol,
            "index_bound": c.index_bound,
            "cases": dict(sorted(self.case_counts.items())),
            "max_residual": self.max_residual,
            "passed": self.passed,
            "failures": list(self.failures),
        }


# ---------------------------------------------------------------------------
# samplers
# ---------------------------------------------------------------------------

def sample_ft_plus(rng: random.Random) -> tuple[complex, complex]:
    """A pair (x, y) in the all-upper-half five-term chart.

    y is drawn from a box with Im y in (0.1, 3); x is uniform over the
    triangle 0, 1, y with barycentric margin 0.05 from the edges, keeping
    the tuple clear of the chart boundary.
    """
    y = complex(rng.uniform(-2.0, 3.0), rng.uniform(0.1, 3.0))
    while True:
        s, t = sorted((rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)))
        bary = (s, t - s, 1.0 - t)
        if min(bary) >= 0.05:
            break
    x = bary[1] * 1.0 + bary[2] * y
    return x, y


def sample_interior(rng: random.Random) -> CutPoint:
    while True:
        z = complex(rng.uniform(-3.0, 4.0), rng.uniform(-3.0, 3.0))
        if abs(z.imag) < 0.02:
            continue
        if abs(z) < 0.05 or abs(z - 1.0) < 0.05:
            continue
        return CutPoint(z)


def sample_boundary(rng: random.Random) -> CutPoint:
    if rng.random() < 0.5:
        x = rng.uniform(-5.0, -0.1)
    else:
        x = rng.uniform(1.1, 6.0)
    side = Side.ABOVE if rng.random() < 0.5 else Side.BELOW
    return CutPoint(complex(x, 0.0), side)


def sample_cut_point(rng: random.Random, boundary_frac: float = 0.15) -> CutPoint:
    if rng.random() < boundary_frac:
        return sample_boundary(rng)
    return sample_interior(rng)


def _from_polar(rng: random.Random, arg_lo: float, arg_hi: float) -> CutPoint:
    r = math.exp(rng.uniform(math.log(0.25), math.log(4.0)))
    a = rng.uniform(arg_lo, arg_hi)
    z = complex(r * math.cos(a), r * math.sin(a))
    if z.imag == 0.0:
        z = complex(z.real, 1e-12)
    return CutPoint(z)


def _homo_case_pair(rng: random.Random, case: int) -> tuple[CutPoint, CutPoint]:
    """z, w with Arg z + Arg w in the window of the requested index shift."""
    boundary = rng.random() < 0.125
    if case == 0:
        if boundary:
            x = rng.uniform(1.1, 6.0)
            z = CutPoint(complex(x, 0.0), Side.ABOVE if rng.random() < 0.5 else Side.BELOW)
            w = _from_polar(rng, -0.45 * PI, 0.45 * PI)
            return z, w
        return _from_polar(rng, -0.45 * PI, 0.45 * PI), _from_polar(rng, -0.45 * PI, 0.45 * PI)
    if case == 1:
        if boundary:
            z = CutPoint(complex(rng.uniform(-5.0, -0.1), 0.0), Side.ABOVE)  # Arg = pi
            w = _from_polar(rng, 0.1, 0.9 * PI)
            return z, w
        z = _from_polar(rng, 0.55 * PI, 0.95 * PI)
        a_low = PI - math.atan2(z.z.imag, z.z.real) + 0.02
        w = _from_polar(rng, a_low, 0.95 * PI)
        return z, w
    if boundary:
        z = CutPoint(complex(rng.uniform(-5.0, -0.1), 0.0), Side.BELOW)  # Arg = -pi
        w = _from_polar(rng, -0.9 * PI, -0.1)
        return z, w
    z = _from_polar(rng, -0.95 * PI, -0.55 * PI)
    a_high = -PI - math.atan2(z.z.imag, z.z.real) - 0.02
    w = _from_polar(rng, -0.95 * PI, a_high)
    return z, w


def _cycle_case_pair(rng: random.Random, case: int) -> tuple[CutPoint, CutPoint]:
    """x, y with Arg y - Arg x in the window of the requested index shift."""
    if case == 0:
        return _from_polar(rng, -0.45 * PI, 0.45 * PI), _from_polar(rng, -0.45 * PI, 0.45 * PI)
    if case == 1:
        y = _from_polar(rng, 0.55 * PI, 0.95 * PI)
        a_high = math.atan2(y.z.imag, y.z.real) - PI - 0.02
        x = _from_polar(rng, -0.95 * PI, a_high)
        return x, y
    x = _from_polar(rng, 0.55 * PI, 0.95 * PI)
    a_high = math.atan2(x.z.imag, x.z.real) - PI - 0.02
    y = _from_polar(rng, -0.95 * PI, a_high)
    return x, y


def _rand_nonzero(rng: random.Random) -> complex:
    r = math.exp(rng.uniform(math.log(0.2), math.log(5.0)))
    a = rng.uniform(-PI, PI)
    return complex(r * math.cos(a), r * math.sin(a))


def _indices(rng: random.Random, bound: int, n: int) -> list[int]:
    return [rng.randint(-bound, bound) for _ in range(n)]


# ---------------------------------------------------------------------------
# per-relation runners: return (residual, case label, echo text)
# ---------------------------------------------------------------------------

def _echo_sum(tag: str, s: FormalSum) -> str:
    body = s.serialize().replace("\n", " | ")
    return f"{tag} element: {body}"


def _run_five_term(rng, k, cfg):
    x, y = sample_ft_plus(rng)
    p0, p1, q0, q1, q2 = _indices(rng, cfg.index_bound, 5)
    elem = five_term_element(make_flattened_ft(x, y, p0, p1, q0, q1, q2))
    return eval_lhat(elem).magnitude(), "all", _echo_sum("five-term", elem)


def _run_cycle(rng, k, cfg):
    case = (-1, 0, 1)[k % 3]
    while True:
        x, y = _cycle_case_pair(rng, case)
        if abs(y.z / x.z - 1.0) > 1e-6:
            break
    p0, p1, q0, q1, q2 = _indices(rng, cfg.index_bound, 5)
    elem = cycle_relation(x, y, p0, p1, q0, q1, q2)
    return eval_lhat(elem).magnitude(), f"shift{case:+d}", _echo_sum("cycle", elem)


def _run_homo(rng, k, cfg):
    case = (-1, 0, 1)[k % 3]
    while True:
        z, w = _homo_case_pair(rng, case)
        if abs(z.z * w.z - 1.0) > 1e-6:
            break
    p, r = _indices(rng, cfg.index_bound, 2)
    elem = curly_product_relation(z, p, w, r)
    return eval_lhat(elem).magnitude(), f"shift{case:+d}", _echo_sum("homo", elem)


def _run_mirror(rng, k, cfg):
    z = sample_cut_point(rng)
    p, q = _indices(rng, cfg.index_bound, 2)
    elem = mirror_relation(z, p, q)
    return eval_lhat(elem).magnitude(), "all", _echo_sum("mirror", elem)


def _run_index(kind: str):
    def run(rng, k, cfg):
        z = sample_cut_point(rng)
        p, q, p2 = _indices(rng, cfg.index_bound, 3)
        if kind == "PQ":
            q2 = p + q - p2
        else:
            q2 = rng.randint(-cfg.index_bound, cfg.index_bound)
        elem = index_relations(z, p, q, p2, q2, kind)
        return eval_lhat(elem).magnitude(), "all", _echo_sum(f"index-{kind.lower()}", elem)

    return run


def _run_chi_hom(rng, k, cfg):
    if k % 5 == 0:
        kind = (k // 5) % 4
        if kind == 0:
            z, w = 1.0 + 0.0j, _rand_nonzero(rng)
            case = "unit"
        elif kind == 1:
            z, w = -1.0 + 0.0j, _rand_nonzero(rng)
            case = "minus-one"
        elif kind == 2:
            z, w = 1j, 1j
            case = "minus-one"
        else:
            z = _rand_nonzero(rng)
            t = rng.uniform(1.2, 4.0) * (1 if rng.random() < 0.5 else -1)
            w = t / z  # zw real, its square lands on (1, inf)
            case = "boundary-product"
    else:
        z, w = _rand_nonzero(rng), _rand_nonzero(rng)
        case = "generic"
    residual = eval_lhat(chi_hat(z) + chi_hat(w) - chi_hat(z * w)).magnitude()
    echo = f"chi-hom inputs: z={z!r} w={w!r}"
    return residual, case, echo


def _run_symmetry(which: int):
    def run(rng, k, cfg):
        z = complex(rng.uniform(-3.0, 4.0), rng.uniform(0.05, 3.0))
        p, q = _indices(rng, cfg.index_bound, 2)
        elem = symmetry_relation(z, p, q, which)
        return eval_lhat(elem).magnitude(), "all", _echo_sum(f"symmetry-{which}", elem)

    return run


def _run_kappa(rng, k, cfg):
    z = sample_interior(rng)
    p = rng.randint(-cfg.index_bound, cfg.index_bound)
    elem = kappa_hat(z, p)
    r1 = eval_lhat(elem).distance_to(complex(-TWO_PI_SQ, 0.0))
    r2 = eval_lhat(2 * elem).magnitude()
    echo = f"kappa inputs: z={z.z!r} p={p}"
    return max(r1, r2), "all", echo


def _run_splitting(rng, k, cfg):
    z = _rand_nonzero(rng)
    chi = chi_hat(z)
    value = eval_lhat(chi)
    target = TWO_PI_I * principal_log(z)
    r1 = value.distance_to(target)
    r2 = abs(splitting(chi) - z) / abs(z)
    echo = f"splitting input: z={z!r}"
    return max(r1, r2), "all", echo


_RUNNERS: dict[str, Callable] = {
    "five-term": _run_five_term,
    "cycle": _run_cycle,
    "homo": _run_homo,
    "mirror": _run_mirror,
    "index-q": _run_index("Q"),
    "index-p": _run_index("P"),
    "index-pq": _run_index("PQ"),
    "chi-hom": _run_chi_hom,
    "symmetry-1": _run_symmetry(1),
    "symmetry-2": _run_symmetry(2),
    "symmetry-3": _run_symmetry(3),
    "symmetry-4": _run_symmetry(4),
    "symmetry-5": _run_symmetry(5),
    "kappa": _run_kappa,
    "splitting": _run_splitting,
}


def run_sweep(config: SweepConfig) -> SweepResult:
    rng = random.Random(config.seed)
    result = SweepResult(config)
    runner = _RUNNERS[config.relation]
    for k in range(config.samples):
        residual, case, echo = runner(rng, k, config)
        result.case_counts[case] = result.case_counts.get(case, 0) + 1
        result.max_residual = max(result.max_residual, residual)
        if residual > config.tol:
            result.failures.append(
                f"FAIL sample={k} residual={residual!r} {echo}"
            )
    return result
