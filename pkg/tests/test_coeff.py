import json
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from conesigma.coeff import (
    QQ, ZZ, AlgebraSpec, IntegersModP, alg_mul, alg_validate, algebra_spec_from_dict,
    algebra_spec_to_dict, as_algebra, cyclic_group_algebra, dual_numbers, load_algebra_spec,
    matrix_algebra_spec, ring_from_text,
)
from conesigma.errors import DimensionMismatch, PreconditionError

F5 = IntegersModP(5)


def test_dual_numbers_x_squared_vanishes():
    D = dual_numbers()
    x = D.basis(1)
    assert alg_mul(x, x, D) == D.zero


def test_mod5_product():
    assert F5.mul(3, 4) == 2


def test_matrix_units_multiply():
    M2 = matrix_algebra_spec(2, QQ)
    e = {lbl: M2.basis(i) for i, lbl in enumerate(M2.labels)}
    assert alg_mul(e["E01"], e["E10"], M2) == e["E00"]
    assert alg_mul(e["E10"], e["E10"], M2) == M2.zero


def test_alg_mul_dimension_mismatch():
    D = dual_numbers()
    with pytest.raises(DimensionMismatch):
        alg_mul((1, 0, 0), (1, 0), D)


@pytest.mark.parametrize("spec", [dual_numbers(), matrix_algebra_spec(2, QQ)], ids=["dual", "M2"])
def test_validate_passes(spec):
    assert alg_validate(spec).ok


def _first_failure_brute_force(table, unit):
    """Independent oracle: plain nested lists, integers only."""
    n = len(table)

    def mul(a, b):
        out = [0] * n
        for i, j in product(range(n), repeat=2):
            for l in range(n):
                out[l] += a[i] * b[j] * table[i][j][l]
        return out

    e = [[int(i == k) for k in range(n)] for i in range(n)]
    for i, j, l in product(range(n), repeat=3):
        if mul(mul(e[i], e[j]), e[l]) != mul(e[i], mul(e[j], e[l])):
            return ("associativity", (i, j, l))
    for i in range(n):
        if mul(unit, e[i]) != e[i]:
            return ("left unit", (i,))
        if mul(e[i], unit) != e[i]:
            return ("right unit", (i,))
    return None


def test_validate_reports_failing_triple():
    # e0 e0 = e1, e0 e1 = e0, e1 * anything = 0, unit claimed e0
    table = [[[0, 1], [1, 0]], [[0, 0], [0, 0]]]
    expected = _first_failure_brute_force(table, [1, 0])
    assert expected == ("associativity", (0, 0, 0))
    report = alg_validate(AlgebraSpec(QQ, ("e0", "e1"), table, [1, 0]))
    assert not report.ok
    assert (report.failure, report.witness) == expected


def test_matrix_algebra_spec_shapes():
    M1 = matrix_algebra_spec(1, QQ)
    assert M1.dim == 1 and M1.unit == (1,)
    M2 = matrix_algebra_spec(2, QQ)
    assert M2.dim == 4
    assert M2.unit == M2.add(M2.basis(0), M2.basis(3))
    M2D = matrix_algebra_spec(2, dual_numbers())
    assert M2D.dim == 8 and alg_validate(M2D).ok
    with pytest.raises(PreconditionError):
        matrix_algebra_spec(0, QQ)


def test_rings():
    assert ring_from_text("Zp:7") == IntegersModP(7)
    assert QQ.parse("3/6") == Fraction(1, 2)
    assert F5.parse("1/2") == 3
    with pytest.raises(PreconditionError):
        IntegersModP(6)
    with pytest.raises(ValueError):
        ZZ.parse("1/2")
    with pytest.raises(ValueError):
        ring_from_text("R")


SHIPPED = [
    dual_numbers(), matrix_algebra_spec(2, QQ), matrix_algebra_spec(2, dual_numbers()),
    cyclic_group_algebra(3), as_algebra(F5), matrix_algebra_spec(2, IntegersModP(7)),
]
coords = st.integers(-4, 4)


@pytest.mark.parametrize("spec", SHIPPED, ids=lambda s: f"dim{s.dim}-{s.base}")
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_associative_and_unital_on_random_triples(spec, data):
    elem = st.lists(coords, min_size=spec.dim, max_size=spec.dim).map(spec.convert)
    a, b, c = data.draw(elem), data.draw(elem), data.draw(elem)
    assert spec.mul(spec.mul(a, b), c) == spec.mul(a, spec.mul(b, c))
    assert spec.mul(spec.one, a) == a == spec.mul(a, spec.one)


@pytest.mark.parametrize("n", [1, 2, 3])
@settings(max_examples=20, deadline=None)
@given(data=st.data())
def test_matrix_unit_idempotent_and_central(n, data):
    M = matrix_algebra_spec(n, dual_numbers())
    u = M.unit
    assert M.mul(u, u) == u
    a = data.draw(st.lists(coords, min_size=M.dim, max_size=M.dim).map(M.convert))
    assert M.mul(u, a) == M.mul(a, u)


def test_file_format_roundtrip(tmp_path):
    doc = {
        "field": "Q", "basis": ["1", "x"], "unit": ["1", "0"],
        "table": [[["1", "0"], ["0", "1"]], [["0", "1"], ["0", "0"]]],
    }
    path = tmp_path / "dual.json"
    path.write_text(json.dumps(doc))
    spec = load_algebra_spec(path)
    assert spec == dual_numbers()
    assert algebra_spec_from_dict(algebra_spec_to_dict(spec)) == spec


def test_file_format_rationals_and_missing_fields():
    doc = {"field": "Zp:5", "basis": ["1"], "unit": ["1/2"], "table": [[["2"]]]}
    spec = algebra_spec_from_dict(doc)
    assert spec.unit == (3,)
    with pytest.raises(ValueError):
        algebra_spec_from_dict({"field": "Q"})
