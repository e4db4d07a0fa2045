from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from harrison.algebras import (
    StructureAlgebra,
    SymmetricModule,
    basis_vector,
    builtin,
    multiply,
    validate,
    validate_module,
)

F = Fraction
ALGEBRAS = [builtin("dual_numbers"), builtin("truncated_poly", 3), builtin("truncated_poly", 4), builtin("cross", 2), builtin("cross", 3)]


def test_validate_examples():
    assert validate(builtin("dual_numbers")).ok
    idem = StructureAlgebra.from_products(["1", "x"], "1", {("x", "x"): {"x": 1}})
    assert validate(idem).ok
    z2 = StructureAlgebra.from_products(["1", "x"], "1", {("x", "x"): {"1": 1}})
    assert validate(z2).ok


def test_validate_reports_each_law():
    noncomm = StructureAlgebra.from_products(["1", "x", "y"], "1", {("x", "y"): {"x": 1}})
    report = validate(noncomm)
    assert not report.ok and "commutativity" in report.laws
    assert any(v.indices[:2] == (1, 2) for v in report.violations if v.law == "commutativity")

    # x*x = y, x*y = x: (x*x)*y = 0 but x*(x*y) = y
    nonassoc = StructureAlgebra.from_products(
        ["1", "x", "y"], "1", {("x", "x"): {"y": 1}, ("x", "y"): {"x": 1}}, symmetric=True
    )
    report = validate(nonassoc)
    assert "associativity" in report.laws and "commutativity" not in report.laws

    d = 2
    c = [[[F(0)] * d for _ in range(d)] for _ in range(d)]
    c[1][1][1] = F(1)
    no_unit = StructureAlgebra(d, ("1", "x"), c, 0)
    assert "unit" in validate(no_unit).laws


def test_multiply_examples():
    dn = builtin("dual_numbers")
    v = [F(3), F(-2)]
    assert multiply(dn, dn.unit, v) == v
    assert multiply(dn, basis_vector(2, 1), basis_vector(2, 1)) == [0, 0]
    t3 = builtin("truncated_poly", 3)
    x, x2 = basis_vector(3, 1), basis_vector(3, 2)
    assert multiply(t3, x, x2) == [0, 0, 0]
    assert multiply(t3, x, x) == x2
    with pytest.raises(ValueError):
        multiply(dn, [1], v)


def test_builtin_examples():
    dn = builtin("dual_numbers")
    assert dn.dim == 2
    assert builtin("truncated_poly", 3).dim == 3
    c2 = builtin("cross", 2)
    assert c2.dim == 3 and c2.basis_names == ("1", "x", "y")
    x, y = basis_vector(3, 1), basis_vector(3, 2)
    for u, v in ((x, x), (y, y), (x, y)):
        assert multiply(c2, u, v) == [0, 0, 0]
    assert builtin("cross", 3).dim == 5


def test_builtin_errors():
    with pytest.raises(ValueError):
        builtin("polynomials", 3)
    with pytest.raises(ValueError):
        builtin("cross", 1)
    with pytest.raises(ValueError):
        builtin("truncated_poly")


@pytest.mark.parametrize("a", ALGEBRAS, ids=lambda a: f"dim{a.dim}_{a.basis_names[-1]}")
def test_builtins_are_valid(a):
    assert validate(a).ok
    assert validate_module(a, a.regular_module()).ok


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(ALGEBRAS), st.data())
def test_multiplication_laws_on_random_vectors(a, data):
    vec = st.lists(st.fractions(-5, 5, max_denominator=4), min_size=a.dim, max_size=a.dim)
    u, v, w = data.draw(vec), data.draw(vec), data.draw(vec)
    assert multiply(a, u, v) == multiply(a, v, u)
    assert multiply(a, multiply(a, u, v), w) == multiply(a, u, multiply(a, v, w))
    assert multiply(a, a.unit, u) == u


def test_module_validation_catches_bad_action():
    a = builtin("dual_numbers")
    good = a.regular_module()
    assert validate_module(a, good).ok
    bad = SymmetricModule(2, (((1, 0), (0, 1)), ((1, 0), (0, 1))), "bad")
    assert not validate_module(a, bad).ok


def test_structure_shape_checked():
    with pytest.raises(ValueError):
        StructureAlgebra(2, ("1", "x"), [[[0, 0]]], 0)
    with pytest.raises(ValueError):
        StructureAlgebra(2, ("1", "1"), [[[F(0)] * 2] * 2] * 2, 0)


def test_index_and_unknown_name():
    a = builtin("cross", 2)
    assert [a.index(n) for n in a.basis_names] == [0, 1, 2]
    with pytest.raises(KeyError):
        a.index("z")


def test_left_matrix_matches_multiply():
    a = builtin("truncated_poly", 4)
    for i, j in product(range(a.dim), repeat=2):
        col = [a.left_matrix(i)[k][j] for k in range(a.dim)]
        assert col == multiply(a, basis_vector(a.dim, i), basis_vector(a.dim, j))
