"""Group construction, axioms, conjugacy classes, and JSON round-trips."""

from __future__ import annotations

import json

import numpy as np
import pytest

from bentgroups import (
    CapabilityError,
    Group,
    conjugacy_classes,
    element_order,
    group_from_json,
    group_from_label,
    group_to_json,
    inverse,
    make_abelian,
    make_cyclic,
    make_named,
    multiply,
)

ALL_LABELS = ["Z1", "Z2", "Z6", "Z12", "Z2xZ3", "Z4xZ2", "S3", "Q8", "V4", "D4"]


@pytest.mark.parametrize("label", ALL_LABELS)
def test_group_axioms(label):
    g = group_from_label(label)
    n = g.order
    cayley = g.cayley
    e = g.identity
    assert np.array_equal(cayley[e, :], np.arange(n))
    assert np.array_equal(cayley[:, e], np.arange(n))
    for x in range(n):
        assert cayley[x, g.inverses[x]] == e
        assert cayley[g.inverses[x], x] == e
    if n <= 12:
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    assert cayley[cayley[a, b], c] == cayley[a, cayley[b, c]]


@pytest.mark.parametrize(
    "label,expected_sizes",
    [
        ("S3", (1, 3, 2)),
        ("Q8", (1, 1, 2, 2, 2)),
        ("D4", (1, 2, 1, 2, 2)),
        ("V4", (1, 1, 1, 1)),
        ("Z6", (1,) * 6),
    ],
)
def test_class_sizes(label, expected_sizes):
    g = group_from_label(label)
    assert g.class_sizes == expected_sizes
    assert sum(g.class_sizes) == g.order
    assert g.class_of[g.identity] == 0
    assert g.class_sizes[0] == 1


def test_classes_are_conjugation_orbits():
    g = make_named("S3")
    for x in range(g.order):
        for t in range(g.order):
            conj = multiply(g, multiply(g, t, x), inverse(g, t))
            assert g.class_of[conj] == g.class_of[x]


def test_conjugacy_classes_listing():
    g = make_named("Q8")
    classes = conjugacy_classes(g)
    assert [len(c) for c in classes] == [1, 1, 2, 2, 2]
    assert classes[0] == [g.identity]
    assert sorted(x for c in classes for x in c) == list(range(8))


def test_element_orders_q8():
    g = make_named("Q8")
    orders = sorted(element_order(g, x) for x in range(8))
    assert orders == [1, 2, 4, 4, 4, 4, 4, 4]


def test_element_orders_s3():
    g = make_named("S3")
    orders = sorted(element_order(g, x) for x in range(6))
    assert orders == [1, 2, 2, 2, 3, 3]


def test_cyclic_is_shift_table():
    g = make_cyclic(5)
    i, j = np.indices((5, 5))
    assert np.array_equal(g.cayley, (i + j) % 5)
    assert g.abelian_factors == (5,)


def test_abelian_product_crt_isomorphic_to_z6():
    """Z2 x Z3 has the same multiplication as Z6 after CRT relabeling."""
    prod = make_abelian((2, 3))
    z6 = make_cyclic(6)
    # element (a, b) of Z2 x Z3 (row-major index 3a + b) corresponds to the
    # unique residue r mod 6 with r = a mod 2, r = b mod 3
    to_z6 = np.empty(6, dtype=int)
    for a in range(2):
        for b in range(3):
            r = next(r for r in range(6) if r % 2 == a and r % 3 == b)
            to_z6[3 * a + b] = r
    for x in range(6):
        for y in range(6):
            assert to_z6[prod.cayley[x, y]] == z6.cayley[to_z6[x], to_z6[y]] % 6


def test_v4_is_z2_squared():
    v4 = make_named("V4")
    sq = make_abelian((2, 2))
    assert np.array_equal(v4.cayley, sq.cayley)
    assert v4.name == "V4"
    assert v4.exponent == 2


def test_exponent():
    assert make_cyclic(12).exponent == 12
    assert make_named("S3").exponent == 6
    assert make_named("Q8").exponent == 4


def test_group_json_round_trip():
    for label in ("Z6", "S3", "Q8"):
        g = group_from_label(label)
        obj = group_to_json(g)
        back = group_from_json(obj)
        assert back.name == g.name
        assert np.array_equal(back.cayley, g.cayley)
        assert back.class_sizes == g.class_sizes
        # classes must be recomputed on load, not read from the payload
        assert "class_of" not in obj


def test_group_json_round_trip_via_text():
    g = make_named("D4")
    back = group_from_json(json.loads(json.dumps(group_to_json(g))))
    assert np.array_equal(back.cayley, g.cayley)


def test_group_from_json_rejects_bad_table():
    obj = group_to_json(make_cyclic(3))
    obj["cayley"][0][0] = 2  # breaks the identity row
    with pytest.raises(ValueError):
        group_from_json(obj)


def test_label_errors():
    with pytest.raises(ValueError):
        group_from_label("Z0")
    with pytest.raises(ValueError):
        group_from_label("A5")
    with pytest.raises(ValueError):
        group_from_label("")


def test_order_cap():
    with pytest.raises(CapabilityError):
        make_cyclic(513)


def test_multiply_inverse_helpers():
    g = make_cyclic(7)
    assert multiply(g, 3, 5) == 1
    assert inverse(g, 2) == 5
    assert element_order(g, 1) == 7


def test_groups_are_immutable():
    g = make_cyclic(4)
    assert isinstance(g, Group)
    with pytest.raises(ValueError):
        g.cayley[0, 0] = 1
