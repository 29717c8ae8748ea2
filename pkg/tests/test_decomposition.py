import math

import numpy as np
import pytest
import sympy

from chainspectra.decomposition import (
    char_poly,
    decompose,
    nullity,
    numeric_spectrum,
    path_eigenvalues,
    split,
    transform_check,
    verify_factorization,
)
from chainspectra.errors import DimensionMismatch, FactorizationMismatch
from chainspectra.graph import block_partition, build_chain, laplacian, path_graph
from chainspectra.matrix import IntMatrix, det
from chainspectra.verification import tampered_chain

LA_1 = IntMatrix(
    [[1, -1, 0, 0, 0], [-1, 2, -1, 0, 0], [0, -1, 2, -1, 0], [0, 0, -1, 2, -1], [0, 0, 0, -1, 1]]
)
LS_1 = IntMatrix(
    [[3, -1, 0, 0, 0], [-1, 2, -1, 0, 0], [0, -1, 2, -1, 0], [0, 0, -1, 4, -1], [0, 0, 0, -1, 3]]
)


def test_split_l1():
    la, ls = split(*block_partition(build_chain(1)))
    assert la == LA_1
    assert ls == LS_1
    assert la.diagonal() == (1, 2, 2, 2, 1)
    assert ls.diagonal() == (3, 2, 2, 4, 3)


def test_split_shape_errors():
    with pytest.raises(DimensionMismatch):
        split(IntMatrix.zeros(2), IntMatrix.zeros(3))
    with pytest.raises(DimensionMismatch):
        split(IntMatrix([[0, 1], [0, 0]]), IntMatrix.zeros(2))


@pytest.mark.parametrize("n", range(1, 7))
def test_split_sum(n):
    l11, l12 = block_partition(build_chain(n))
    la, ls = split(l11, l12)
    assert la + ls == l11.scale(2)
    assert la == laplacian(path_graph(4 * n + 1))


def test_char_poly_small():
    assert char_poly(IntMatrix([[3]])).coefficients == (1, -3)


def test_char_poly_l1_blocks():
    pa = char_poly(LA_1)
    assert pa.coeff(0) == 0
    assert abs(pa.coeff(1)) == 5
    ps = char_poly(LS_1)
    # independent determinant: sympy on the displayed matrix
    assert sympy.Matrix(LS_1.to_lists()).det() == 62
    assert ps.coeff(0) == -62
    assert ps(0) == -62


@pytest.mark.parametrize("n", range(1, 5))
def test_factorization(n):
    rep = verify_factorization(build_chain(n))
    assert rep["status"] == "PASS"
    assert set(rep) == {"check", "n", "status", "detail"}


def test_factorization_detects_perturbation():
    with pytest.raises(FactorizationMismatch) as info:
        verify_factorization(tampered_chain(1))
    assert info.value.index >= 1


@pytest.mark.parametrize("n", [1, 3])
def test_transform(n):
    assert transform_check(build_chain(n))["status"] == "PASS"


def test_transform_fails_when_not_symmetric():
    assert transform_check(tampered_chain(2))["status"] == "FAIL"


@pytest.mark.parametrize("n", range(1, 7))
def test_laplacian_constant_term_and_path_product(n):
    g = build_chain(n)
    la, ls = decompose(g)
    assert char_poly(laplacian(g)).coeff(0) == 0
    assert char_poly(la).coeff(0) == 0
    assert abs(char_poly(la).coeff(1)) == 4 * n + 1
    assert char_poly(ls).coeff(0) == (-1) ** (4 * n + 1) * det(ls)


def test_path_eigenvalues_small():
    assert path_eigenvalues(1).eigenvalues == (0.0,)
    assert path_eigenvalues(2).eigenvalues == pytest.approx((0.0, 2.0), abs=1e-15)


def test_path_eigenvalues_match_LA():
    la, _ = decompose(build_chain(1))
    num = numeric_spectrum(la).eigenvalues
    assert np.allclose(path_eigenvalues(5).eigenvalues, num, atol=1e-10, rtol=0)


def test_numeric_spectrum_basics():
    assert numeric_spectrum(IntMatrix([[3]])).eigenvalues == (3.0,)
    spec = numeric_spectrum(laplacian(build_chain(1)))
    assert abs(spec.eigenvalues[0]) < 1e-10
    assert spec.eigenvalues[1] > 1e-3
    assert nullity(laplacian(build_chain(1))) == 1
    prod = math.prod(numeric_spectrum(LS_1).eigenvalues)
    assert prod == pytest.approx(62, rel=1e-8)


@pytest.mark.parametrize("n", range(1, 7))
def test_spectrum_is_union(n):
    g = build_chain(n)
    la, ls = decompose(g)
    whole = numeric_spectrum(laplacian(g)).eigenvalues
    parts = sorted(numeric_spectrum(la).eigenvalues + numeric_spectrum(ls).eigenvalues)
    assert np.allclose(whole, parts, atol=1e-8, rtol=0)
    assert min(numeric_spectrum(ls).eigenvalues) > 0
