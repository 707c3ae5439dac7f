"""Character tables: frozen values, orthogonality, inversion, rendering."""

from __future__ import annotations

import cmath
import math
from dataclasses import replace

import numpy as np
import pytest

from bentgroups import (
    CapabilityError,
    character_table,
    group_from_json,
    group_from_label,
    group_to_json,
    inner_product,
    make_abelian,
    make_cyclic,
    make_named,
    table_to_csv,
    table_to_json,
    verify_orthogonality,
)

W3 = cmath.exp(2j * math.pi / 3)

Z3_TABLE = np.array(
    [
        [1, 1, 1],
        [1, W3, W3**2],
        [1, W3**2, W3],
    ]
)

Z4_TABLE = np.array(
    [
        [1, 1, 1, 1],
        [1, 1j, -1, -1j],
        [1, -1, 1, -1],
        [1, -1j, -1, 1j],
    ]
)

S3_TABLE = np.array(
    [
        [1, 1, 1],
        [1, -1, 1],
        [2, 0, -1],
    ]
)

Q8_TABLE = np.array(
    [
        [1, 1, 1, 1, 1],
        [1, 1, 1, -1, -1],
        [1, 1, -1, -1, 1],
        [1, 1, -1, 1, -1],
        [2, -2, 0, 0, 0],
    ]
)

D4_TABLE = np.array(
    [
        [1, 1, 1, 1, 1],
        [1, 1, 1, -1, -1],
        [1, -1, 1, 1, -1],
        [1, -1, 1, -1, 1],
        [2, 0, -2, 0, 0],
    ]
)


def test_z3_values(z3_table):
    np.testing.assert_allclose(z3_table.class_values, Z3_TABLE, atol=1e-12)


def test_z4_values(z4_table):
    np.testing.assert_allclose(z4_table.class_values, Z4_TABLE, atol=1e-12)
    # fourth powers of i come out exactly on the axes
    assert z4_table.phi[1, 1] == 1j
    assert z4_table.phi[2, 1] == -1


@pytest.mark.parametrize("n", range(1, 13))
def test_cyclic_power_rule(n):
    """chi_i(g^k) = omega^{(i-1) k} with omega = exp(2 pi i / n)."""
    table = character_table(make_cyclic(n))
    for i in range(n):
        for k in range(n):
            expected = cmath.exp(2j * math.pi * ((i * k) % n) / n)
            assert abs(table.phi[k, i] - expected) < 1e-12


def test_s3_values(s3_table):
    np.testing.assert_allclose(s3_table.class_values, S3_TABLE, atol=1e-10)
    assert s3_table.degrees == (1, 1, 2)


def test_q8_values(q8_table):
    np.testing.assert_allclose(q8_table.class_values, Q8_TABLE, atol=1e-10)
    assert q8_table.degrees == (1, 1, 1, 1, 2)


def test_d4_values(d4_table):
    np.testing.assert_allclose(d4_table.class_values, D4_TABLE, atol=1e-10)
    assert d4_table.degrees == (1, 1, 1, 1, 2)


def test_q8_d4_same_table_different_groups(q8_table, d4_table):
    """The two order-8 nonabelian groups have distinct tables here only in
    class structure; degree patterns coincide."""
    assert q8_table.degrees == d4_table.degrees
    assert q8_table.group.class_sizes != d4_table.group.class_sizes


def test_trivial_character_first():
    for label in ("Z5", "Z2xZ4", "S3", "Q8", "V4", "D4"):
        table = character_table(group_from_label(label))
        np.testing.assert_allclose(table.phi[:, 0], 1.0, atol=0)
        assert table.degrees[0] == 1


def test_n_irreps_equals_n_classes():
    for label in ("Z6", "S3", "Q8", "D4", "V4", "Z2xZ3"):
        table = character_table(group_from_label(label))
        assert table.n_irreps == table.group.n_classes


def test_degree_squares_sum_to_order():
    for label in ("S3", "Q8", "D4", "Z6", "V4"):
        table = character_table(group_from_label(label))
        assert sum(d * d for d in table.degrees) == table.group.order


@pytest.mark.parametrize("label", ["Z2", "Z7", "Z12", "Z3xZ5", "V4", "S3", "Q8", "D4"])
def test_orthogonality(label):
    table = character_table(group_from_label(label))
    report = verify_orthogonality(table, tol=1e-10)
    assert report.passed, (report.max_row_deviation, report.max_column_deviation)


def test_orthogonality_detects_corruption(z4_table):
    phi = z4_table.phi.copy()
    phi[1, 1] *= 1.001
    corrupted = replace(z4_table, phi=phi)
    report = verify_orthogonality(corrupted, tol=1e-10)
    assert not report.passed
    assert report.max_row_deviation > 1e-4


def test_abelian_phi_inverse():
    for label in ("Z2", "Z9", "Z4xZ4", "V4"):
        table = character_table(group_from_label(label))
        n = table.group.order
        prod = np.conj(table.phi.T) @ table.phi / n
        np.testing.assert_allclose(prod, np.eye(n), atol=1e-10)


def test_inner_product_of_characters(s3_table):
    for i in range(3):
        for j in range(3):
            ip = inner_product(s3_table, s3_table.phi[:, i], s3_table.phi[:, j])
            assert abs(ip - (1.0 if i == j else 0.0)) < 1e-12


def test_class_sum_route_matches_analytic_route():
    """An abelian group loaded without factor structure goes through the
    class-sum eigenvalue path and must produce the same character set."""
    obj = group_to_json(make_abelian((2, 2)))
    obj["name"] = "anon4"
    anon = group_from_json(obj)
    assert anon.abelian_factors is None
    table = character_table(anon)
    reference = character_table(make_named("V4"))
    got = sorted(tuple(np.round(row, 9)) for row in table.class_values)
    want = sorted(tuple(np.round(row, 9)) for row in reference.class_values)
    assert np.allclose(np.array(got, dtype=complex), np.array(want, dtype=complex), atol=1e-9)


def test_unknown_nonabelian_is_rejected():
    obj = group_to_json(make_named("S3"))
    obj["name"] = "anon6"
    anon = group_from_json(obj)
    with pytest.raises(CapabilityError):
        character_table(anon)


def test_root_order_is_group_exponent():
    assert character_table(make_cyclic(6)).root_order == 6
    assert character_table(make_named("Q8")).root_order == 4
    assert character_table(make_named("V4")).root_order == 2


def test_table_json_layout(z3_table):
    obj = table_to_json(z3_table)
    assert obj["group"] == "Z3"
    assert obj["order"] == 3
    assert len(obj["characters"]) == 3
    chi2 = obj["characters"][1]
    assert chi2["name"] == "chi_2"
    assert chi2["degree"] == 1
    re, im = chi2["values"][1]
    assert abs(complex(re, im) - W3) < 1e-12


def test_table_csv_rendering(z3_table, s3_table):
    csv_z3 = table_to_csv(z3_table)
    assert "e^{2πi·1/3}" in csv_z3
    assert csv_z3.splitlines()[0].startswith("character,")
    csv_s3 = table_to_csv(s3_table)
    lines = csv_s3.splitlines()
    assert len(lines) == 4  # header + three characters
    assert lines[1].split(",")[0] == "chi_1"
    assert "-1" in csv_s3


def test_z1_table():
    table = character_table(make_cyclic(1))
    assert table.n_irreps == 1
    assert complex(table.phi[0, 0]) == 1.0
