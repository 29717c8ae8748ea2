import pytest
import sympy

from chainspectra.decomposition import decompose
from chainspectra.errors import RecurrenceMismatch
from chainspectra.graph import build_chain
from chainspectra.sequences import (
    C_SEED,
    E_SEED,
    MinorSequence,
    c_by_recurrence,
    c_closed,
    check_second_layer,
    closed_value,
    e_by_recurrence,
    e_closed,
    principal_minor,
)


def ls_matrix(n):
    return decompose(build_chain(n))[1]


def sympy_corner(m, k, side):
    rows = m.to_lists()
    if side == "trailing":
        rows = [r[-k:] for r in rows[-k:]]
    else:
        rows = [r[:k] for r in rows[:k]]
    return int(sympy.Matrix(rows).det())


def test_listed_values():
    c = c_by_recurrence(2)
    e = e_by_recurrence(2)
    assert c.values == C_SEED
    assert e.values == E_SEED
    assert c[4] == 23 and c[8] == 689
    assert e[6] == 329 and e[8] == 809


def test_third_period():
    # frozen from independent sympy determinants of L_S(3) corners
    assert c_by_recurrence(3)[12] == 20647 == 30 * 689 - 23
    assert e_by_recurrence(3)[12] == 24243 == 30 * 809 - 27
    ls = ls_matrix(3)
    assert sympy_corner(ls, 12, "leading") == 20647
    assert sympy_corner(ls, 12, "trailing") == 24243


def test_branch_multipliers_differ():
    # c uses (4,2,2,4) and e uses (4,4,2,2); the determinant confirms both
    ls = ls_matrix(3)
    for k in range(5, 13):
        assert principal_minor(ls, k, "leading") == c_by_recurrence(3)[k]
        assert principal_minor(ls, k, "trailing") == e_by_recurrence(3)[k]


def test_closed_forms_spot():
    assert c_closed(0, 1) == 3
    assert c_closed(1, 1) == 85
    assert c_closed(1, 4) == 689
    assert e_closed(0, 2) == 11
    assert e_closed(0, 4) == 27
    assert e_closed(1, 4) == 809


def test_closed_bad_branch():
    with pytest.raises(ValueError):
        c_closed(0, 5)
    with pytest.raises(ValueError):
        e_closed(-1, 1)


def test_principal_minor_spot():
    assert principal_minor(ls_matrix(1), 1, "leading") == 3
    assert principal_minor(ls_matrix(1), 2, "trailing") == 11
    assert principal_minor(ls_matrix(2), 8, "leading") == 689
    with pytest.raises(ValueError):
        principal_minor(ls_matrix(1), 6, "leading")


@pytest.mark.parametrize("n", range(1, 9))
def test_three_routes_agree(n):
    ls = ls_matrix(n)
    c = c_by_recurrence(n)
    e = e_by_recurrence(n)
    for k in range(1, 4 * n + 1):
        assert c[k] == closed_value("leading", k) == principal_minor(ls, k, "leading")
        assert e[k] == closed_value("trailing", k) == principal_minor(ls, k, "trailing")


@pytest.mark.parametrize("n", [1, 2, 4])
def test_corner_minors_vs_sympy(n):
    ls = ls_matrix(n)
    for k in range(1, 4 * n + 1):
        for side in ("leading", "trailing"):
            assert principal_minor(ls, k, side) == sympy_corner(ls, k, side)


@pytest.mark.parametrize("n", range(1, 51))
def test_second_layer(n):
    c = c_by_recurrence(n)
    e = e_by_recurrence(n)
    assert check_second_layer(c) == max(0, 4 * n - 8)
    check_second_layer(e)
    for k in range(1, 4 * n + 1):
        if k + 4 <= 4 * n:
            assert c[k + 4] > c[k] and e[k + 4] > e[k]


def test_second_layer_detects_corruption():
    vals = list(c_by_recurrence(3).values)
    vals[10] += 1
    with pytest.raises(RecurrenceMismatch):
        check_second_layer(MinorSequence("leading", tuple(vals)))


@pytest.mark.parametrize("n", range(1, 6))
def test_trailing_is_leading_of_reversed(n):
    ls = ls_matrix(n)
    rev = ls.reversed()
    for k in range(1, 4 * n + 1):
        assert principal_minor(ls, k, "trailing") == principal_minor(rev, k, "leading")


@pytest.mark.parametrize("n", range(1, 11))
def test_closed_forms_beyond_window(n):
    # the closed forms keep matching the recurrence for large i
    c = c_by_recurrence(n)
    e = e_by_recurrence(n)
    for k in range(1, 4 * n + 1):
        assert closed_value("leading", k) == c[k]
        assert closed_value("trailing", k) == e[k]
