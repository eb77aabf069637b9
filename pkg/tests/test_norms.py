import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stdlattice import NormKind, NormValue, enumeration_radius_in_l2, measure, norm_le

vectors = st.lists(st.integers(-50, 50), min_size=1, max_size=6)
kinds = st.sampled_from([NormKind.L1, NormKind.L2, NormKind.LINF])


def test_measure_examples():
    assert measure((1, 1, 1, 1, 1), NormKind.L2).value == 5
    assert measure((0, 0, 0), NormKind.L1).value == 0
    assert measure((0, 0, 0), NormKind.L2).value == 0
    assert measure((0, 0, 0), NormKind.LINF).value == 0
    assert measure((1, 1, 1), NormKind.L1).value == 3
    assert measure((-2, 3), NormKind.LINF).value == 3


def test_norm_le():
    assert norm_le(NormValue(NormKind.L2, 4), NormValue(NormKind.L2, 5))
    assert norm_le(NormValue(NormKind.L1, 2), NormValue(NormKind.L1, 2))
    assert not norm_le(NormValue(NormKind.L2, 5), NormValue(NormKind.L2, 4))


def test_norm_le_kind_mismatch():
    with pytest.raises(ValueError):
        norm_le(NormValue(NormKind.L1, 1), NormValue(NormKind.L2, 1))


def test_norm_value_rejects_negative():
    with pytest.raises(ValueError):
        NormValue(NormKind.L1, -1)


def test_zero_iff_zero_vector():
    assert measure((0, 0), NormKind.L1).value == 0
    for kind in NormKind:
        assert measure((0, 3, 0), kind).value > 0


@given(vectors, st.integers(-9, 9), kinds)
@settings(max_examples=150, deadline=None)
def test_homogeneity(v, k, kind):
    scaled = [k * x for x in v]
    base = measure(v, kind).value
    got = measure(scaled, kind).value
    if kind is NormKind.L2:
        assert got == k * k * base
    else:
        assert got == abs(k) * base


@given(vectors, st.data(), kinds)
@settings(max_examples=150, deadline=None)
def test_triangle_inequality(u, data, kind):
    v = data.draw(st.lists(st.integers(-50, 50), min_size=len(u), max_size=len(u)))
    s = [a + b for a, b in zip(u, v)]
    mu, mv, ms = (measure(x, kind).value for x in (u, v, s))
    if kind is NormKind.L2:
        # ||u+v|| <= ||u|| + ||v|| in squared form:
        # ms <= mu + mv + 2 sqrt(mu mv), checked by cross-multiplication.
        rem = ms - mu - mv
        assert rem <= 0 or rem * rem <= 4 * mu * mv
    else:
        assert ms <= mu + mv


def test_enumeration_radius_examples():
    assert enumeration_radius_in_l2(NormValue(NormKind.L1, 2), 3).value == 4
    assert enumeration_radius_in_l2(NormValue(NormKind.LINF, 2), 3).value == 12
    assert enumeration_radius_in_l2(NormValue(NormKind.L2, 9), 3).value == 9
    assert enumeration_radius_in_l2(NormValue(NormKind.L1, 2), 3).kind is NormKind.L2


@pytest.mark.parametrize("kind", list(NormKind))
def test_enumeration_radius_soundness(kind):
    bound = NormValue(kind, 3 if kind is not NormKind.L2 else 9)
    for dim in (1, 2, 3):
        r2 = enumeration_radius_in_l2(bound, dim).value
        for v in itertools.product(range(-4, 5), repeat=dim):
            if measure(v, kind).value <= bound.value:
                assert measure(v, NormKind.L2).value <= r2
