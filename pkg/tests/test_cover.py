import cmath
import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from extbloch.cover import (
    FlattenedFT,
    FlattenedNumber,
    canonicalize,
    flattened,
    ft_projections,
    is_flattened_ft,
    log_param_l,
    log_param_m,
    make_flattened_ft,
    parse_flattened,
    serialize_flattened,
)
from extbloch.dilog import TWO_PI_I, CutPoint, Side, principal_log, log_one_minus

PI = math.pi


def sample_ftplus_pair(rng):
    while True:
        y = complex(rng.uniform(-2, 3), rng.uniform(0.1, 3.0))
        s, t = sorted((rng.uniform(0, 1), rng.uniform(0, 1)))
        bary = (s, t - s, 1 - t)
        if min(bary) < 0.05:
            continue
        return bary[1] + bary[2] * y, y


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------

def test_canonicalize_left_cut_example():
    f = canonicalize(-2 + 0j, Side.BELOW, p=3, q=0)
    assert f.base.side is Side.ABOVE
    assert (f.p, f.q) == (2, 0)


def test_canonicalize_right_cut_example():
    f = canonicalize(2 + 0j, "below", p=0, q=5)
    assert f.base.side is Side.ABOVE
    assert (f.p, f.q) == (0, 4)


def test_canonicalize_interior_unchanged():
    f = canonicalize(0.5 + 0.5j, Side.INTERIOR, p=1, q=1)
    assert f == FlattenedNumber(CutPoint(0.5 + 0.5j), 1, 1)


def test_canonicalize_rejects_bad_points():
    with pytest.raises(ValueError):
        canonicalize(1 + 0j)
    with pytest.raises(ValueError):
        canonicalize(0.5 + 0j, Side.ABOVE)


def test_flattened_number_never_stores_below():
    with pytest.raises(ValueError):
        FlattenedNumber(CutPoint(-2 + 0j, Side.BELOW), 0, 0)


@given(
    st.sampled_from([-5.0, -2.0, -0.5, 1.5, 2.0, 7.0]),
    st.sampled_from([Side.ABOVE, Side.BELOW]),
    st.integers(-10, 10),
    st.integers(-10, 10),
)
def test_canonicalize_idempotent(x, side, p, q):
    f = canonicalize(complex(x, 0.0), side, p, q)
    again = canonicalize(f.base, p=f.p, q=f.q)
    assert f == again


@given(
    st.sampled_from([-5.0, -2.0, -0.5, 1.5, 2.0, 7.0]),
    st.integers(-6, 6),
    st.integers(-6, 6),
)
def test_log_params_invariant_under_rewriting(x, p, q):
    """The branch logarithms take the same value on both identified charts."""
    below = CutPoint(complex(x, 0.0), Side.BELOW)
    raw_l = principal_log(below) + TWO_PI_I * p
    raw_m = -log_one_minus(below) + TWO_PI_I * q
    f = canonicalize(below, p=p, q=q)
    assert abs(log_param_l(f) - raw_l) <= 1e-12 * max(1, abs(raw_l))
    assert abs(log_param_m(f) - raw_m) <= 1e-12 * max(1, abs(raw_m))


def test_log_param_examples():
    assert log_param_l(flattened(0.5)) == pytest.approx(-math.log(2))
    assert log_param_l(flattened(0.5, 1, 0)) == pytest.approx(-math.log(2) + TWO_PI_I)
    assert log_param_l(canonicalize(-2 + 0j, Side.ABOVE)) == pytest.approx(
        math.log(2) + 1j * PI
    )
    assert log_param_m(flattened(0.5)) == pytest.approx(math.log(2))
    assert log_param_m(flattened(0.5, 0, 2)) == pytest.approx(math.log(2) + 4j * PI)
    assert log_param_m(canonicalize(2 + 0j, Side.ABOVE)) == pytest.approx(1j * PI)


def test_label_shows_even_integers():
    assert flattened(0.5, 2, -3).label == (4, -6)


# ---------------------------------------------------------------------------
# the all-upper-half chart identities (frozen pre-build oracle)
# ---------------------------------------------------------------------------

def test_upper_chart_log_identities_exact():
    """The five identities the membership test relies on hold with plain
    principal logarithms whenever all five coordinates are in the upper
    half plane."""
    rng = random.Random(23)
    for _ in range(500):
        x, y = sample_ftplus_pair(rng)
        z = ft_projections(x, y)
        assert all(c.imag > 0 for c in z)
        a = [cmath.log(c) for c in z]
        b = [cmath.log(1 - c) for c in z]
        l, m = a, [-t for t in b]
        residuals = (
            l[2] - (l[1] - l[0]),
            l[3] - (l[1] - l[0] + m[1] - m[0]),
            l[4] - (m[1] - m[0]),
            m[3] - (m[2] - m[1]),
            m[4] - (m[2] - m[1] - l[0]),
        )
        assert max(abs(r) for r in residuals) <= 1e-12


# ---------------------------------------------------------------------------
# five-term tuples
# ---------------------------------------------------------------------------

def test_make_flattened_ft_zero_indices():
    t = make_flattened_ft(0.3 + 0.2j, 1j)
    assert [(e.p, e.q) for e in t] == [(0, 0)] * 5


def test_make_flattened_ft_index_pattern():
    t = make_flattened_ft(0.3 + 0.2j, 1j, p0=1)
    assert [(e.p, e.q) for e in t] == [(1, 0), (0, 0), (-1, 0), (-1, 0), (0, -1)]


def test_make_flattened_ft_general_indices():
    t = make_flattened_ft(0.3 + 0.2j, 1j, p0=2, p1=-1, q0=3, q1=0, q2=-2)
    assert [(e.p, e.q) for e in t] == [
        (2, 3),
        (-1, 0),
        (-3, -2),
        (-6, -2),
        (-3, -4),
    ]


def test_make_flattened_ft_rejects_real_inputs():
    with pytest.raises(ValueError):
        make_flattened_ft(0.5, 0.6)


def test_make_flattened_ft_rejects_wrong_chart():
    # lower-half y projects out of the all-upper-half chart
    with pytest.raises(ValueError):
        make_flattened_ft(0.3 - 0.2j, -1j)


def test_is_flattened_ft_accepts_constructed_tuples():
    rng = random.Random(5)
    for _ in range(100):
        x, y = sample_ftplus_pair(rng)
        idx = [rng.randint(-5, 5) for _ in range(5)]
        t = make_flattened_ft(x, y, *idx)
        assert is_flattened_ft(t, tol=1e-9)


def test_is_flattened_ft_rejects_tampered_index():
    t = make_flattened_ft(0.3 + 0.2j, 1j, 1, 2, 0, -1, 3)
    entries = list(t.entries)
    bad = entries[2]
    entries[2] = FlattenedNumber(bad.base, bad.p, bad.q + 1)
    assert not is_flattened_ft(entries)


def test_is_flattened_ft_rejects_unrelated_points():
    entries = [flattened(complex(0.2 * k + 0.1, 0.3 + 0.1 * k)) for k in range(5)]
    assert not is_flattened_ft(entries)


def test_flattened_ft_requires_five_entries():
    with pytest.raises(ValueError):
        FlattenedFT(tuple([flattened(0.5 + 0.5j)] * 4))


def solve_chart_indices(x, y, p0=0, q0=0, p1=0, q1=0, q2=0):
    """Build a five-term tuple over an arbitrary chart by solving the branch
    identities for the dependent indices.  The solved values must land on
    integers; how far they sit from one is itself a consistency check."""
    from extbloch.dilog import as_cut_point

    coords = [as_cut_point(c) for c in ft_projections(x, y)]
    head = [
        canonicalize(coords[0], p=p0, q=q0),
        canonicalize(coords[1], p=p1, q=q1),
    ]
    l0, m0 = log_param_l(head[0]), log_param_m(head[0])
    l1, m1 = log_param_l(head[1]), log_param_m(head[1])

    def solve(base, target_l, target_m):
        raw_p = (target_l - principal_log(base)) / TWO_PI_I
        raw_q = (target_m + log_one_minus(base)) / TWO_PI_I
        for raw in (raw_p, raw_q):
            assert abs(raw - round(raw.real)) < 1e-9
        return canonicalize(base, p=round(raw_p.real), q=round(raw_q.real))

    two = canonicalize(coords[2], p=round(((l1 - l0) - principal_log(coords[2])).imag / (2 * PI)), q=q2)
    m2 = log_param_m(two)
    entries = head + [
        two,
        solve(coords[3], l1 - l0 + m1 - m0, m2 - m1),
        solve(coords[4], m1 - m0, m2 - m1 - l0),
    ]
    return entries


def test_membership_beyond_upper_chart():
    """Identity-solved tuples over arbitrary charts (lower half plane,
    boundary entries included) pass the membership test; upsetting one
    index breaks it."""
    rng = random.Random(47)
    built = 0
    while built < 60:
        x = complex(rng.uniform(-3, 4), rng.uniform(-3, 3))
        y = complex(rng.uniform(-3, 4), rng.uniform(-3, 3))
        if min(abs(x), abs(y), abs(x - 1), abs(y - 1), abs(x - y)) < 0.1:
            continue
        if abs(y / x - 1) < 0.1 or abs(x.imag) < 0.05 or abs(y.imag) < 0.05:
            continue
        idx = [rng.randint(-4, 4) for _ in range(5)]
        entries = solve_chart_indices(x, y, *idx)
        assert is_flattened_ft(entries, tol=1e-9)
        bad = list(entries)
        bad[3] = FlattenedNumber(bad[3].base, bad[3].p + 1, bad[3].q)
        assert not is_flattened_ft(bad, tol=1e-9)
        built += 1


def test_membership_with_boundary_entry():
    # x on the left cut: the first entry is a genuine boundary point
    entries = solve_chart_indices(-2.0 + 0j, 0.5 + 1.5j, p0=1, q1=-2)
    assert entries[0].base.side is Side.ABOVE
    assert is_flattened_ft(entries, tol=1e-9)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def test_serialize_round_trip():
    for f in (
        flattened(0.25 + 0.75j, 3, -2),
        canonicalize(-1.5 + 0j, Side.ABOVE, -1, 4),
    ):
        assert parse_flattened(serialize_flattened(f)) == f


def test_parse_rejects_malformed():
    with pytest.raises(ValueError):
        parse_flattened("0.5 0 i 0")
    with pytest.raises(ValueError):
        parse_flattened("0.5 0 b 0 0")
    with pytest.raises(ValueError):
        parse_flattened("1 0 i 0 0")
