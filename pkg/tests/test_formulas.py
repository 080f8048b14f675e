import math

import pytest
from hypothesis import given, strategies as st

import oracles
from ckgraph import INFINITE, NONEXISTENT, Diameter, cyclic_kautz, diameter, iterated_line_digraph
from ckgraph import formulas as F
from ckgraph.errors import DomainError, OutOfRangeError


@pytest.mark.parametrize("d,l,n", [(2, 4, 18), (1, 3, 0), (3, 5, 240)])
def test_vertex_count_examples(d, l, n):
    assert F.ck_vertex_count(d, l) == n


@pytest.mark.parametrize("d,l,n", [(2, 4, 30), (2, 3, 6), (2, 2, 12)])
def test_arc_count_examples(d, l, n):
    assert F.ck_arc_count(d, l) == n


def test_arc_count_domain():
    with pytest.raises(DomainError):
        F.ck_arc_count(2, 1)


@pytest.mark.parametrize("d", range(1, 6))
@pytest.mark.parametrize("l", range(2, 8))
def test_counts_match_construction(d, l):
    g = cyclic_kautz(d, l)
    assert F.ck_vertex_count(d, l) == g.order
    assert F.ck_arc_count(d, l) == g.size


def test_length_one_vertex_formula_value():
    # the closed form gives 0 at l = 1 while CK(d, 1) has d+1 vertices
    for d in range(1, 6):
        assert F.ck_vertex_count(d, 1) == 0
        assert cyclic_kautz(d, 1).order == d + 1


@pytest.mark.parametrize(
    "d,l,expected",
    [
        (2, 4, Diameter.finite(7)),
        (3, 5, Diameter.finite(9)),
        (4, 4, Diameter.finite(6)),
        (1, 3, NONEXISTENT),
        (1, 4, Diameter.finite(1)),
        (2, 3, INFINITE),
        (2, 6, INFINITE),
        (5, 1, Diameter.finite(1)),
        (6, 2, Diameter.finite(2)),
        (3, 3, Diameter.finite(5)),
        (3, 4, Diameter.finite(7)),
    ],
)
def test_diameter_formula_table(d, l, expected):
    assert F.ck_diameter_formula(d, l) == expected


def test_ck34_measured_diameter():
    # construction gives 6 where the case table says 2l-1 = 7; the extremal pair is 0101 -> 0212
    g = cyclic_kautz(3, 4)
    assert diameter(g) == Diameter.finite(6)
    assert oracles.diameter(oracles.ck_graph(3, 4)) == 6
    assert oracles.bfs(oracles.ck_graph(3, 4), (0, 1, 0, 1))[(0, 2, 1, 2)] == 6


# -- B/C/D system ---------------------------------------------------------


def test_bcd_examples():
    assert F.bcd_closed_form(2, 6).as_tuple() == (6, 30, 18)
    assert F.bcd_closed_form(2, 4).as_tuple() == (12, 0, 6)
    assert F.bcd_recurrence(2, 6).as_tuple() == (6, 30, 18)
    assert F.bcd_recurrence(2, 8) == F.bcd_closed_form(2, 8)


def test_bcd_against_enumeration():
    # frozen from the class enumerator in oracles.py
    assert F.bcd_closed_form(3, 8).as_tuple() == (1188, 864, 2064)
    assert F.bcd_recurrence(3, 8).as_tuple() == (1188, 864, 2064)
    assert F.bcd_recurrence(4, 10).as_tuple() == (111780, 116900, 342540)
    assert oracles.class_counts(3, 8) == (1188, 864, 2064)


def test_bcd_base_values_match_closed_form():
    for d in range(2, 7):
        assert F.bcd_base(d, 6) == F.bcd_closed_form(d, 6)
        assert F.bcd_step(d, F.bcd_base(d, 4)) == F.bcd_base(d, 6)


@pytest.mark.parametrize("d", range(2, 6))
def test_bcd_closed_equals_recurrence(d):
    for l in range(4, 17, 2):
        x = F.bcd_closed_form(d, l)
        assert x == F.bcd_recurrence(d, l)
        assert min(x.as_tuple()) >= 0


@pytest.mark.parametrize("d,l", [(1, 6), (2, 5), (2, 2)])
def test_bcd_domain(d, l):
    with pytest.raises(DomainError):
        F.bcd_closed_form(d, l)


# -- E_j ------------------------------------------------------------------


def test_e_examples():
    assert F.e_closed_form(2, 2, 0) == 6 == F.ck_arc_count(2, 3)
    assert F.e_closed_form(2, 2, 1) == 30 == F.ck_arc_count(2, 4)
    assert F.e_closed_form(3, 3, 2) == 4020 == oracles.e_count(3, 3, 2)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
@pytest.mark.parametrize("r", [2, 3, 4])
def test_e_recursion_and_telescoping(d, r):
    total = F.bcd_closed_form(d, 2 * r).total
    e = [F.e_closed_form(d, r, j) for j in range(13)]
    assert e == [F.e_recurrence(d, r, j) for j in range(13)]
    for j in range(2, 13):
        assert e[j] == (d - 1) * e[j - 1] + d * e[j - 2]
    for j in range(1, 13):
        assert e[j] + e[j - 1] == d**j * total


@pytest.mark.parametrize("d,r,j", [(2, 2, 3), (2, 3, 2), (3, 2, 2), (3, 3, 1), (4, 2, 1)])
def test_e_against_enumeration(d, r, j):
    assert F.e_closed_form(d, r, j) == oracles.e_count(d, r, j)


# -- iterated line digraphs -----------------------------------------------


@pytest.mark.parametrize("d,l,t,n", [(2, 4, 1, 30), (2, 4, 2, 48), (2, 4, 0, 18)])
def test_iterated_count_examples(d, l, t, n):
    assert F.ck_iterated_vertex_count(d, l, t) == n


def test_iterated_count_range():
    with pytest.raises(OutOfRangeError):
        F.ck_iterated_vertex_count(2, 4, 3)
    with pytest.raises(DomainError):
        F.ck_iterated_vertex_count(2, 2, 0)


@pytest.mark.parametrize("d", [2, 3, 4])
@pytest.mark.parametrize("l", [3, 4, 5, 6])
def test_iterated_count_against_word_oracle(d, l):
    for t in range(l - 1):
        assert F.ck_iterated_vertex_count(d, l, t) == oracles.count_s(d, l, t)


def test_ck4_examples():
    assert F.ck4_count_closed_form(2, 3) == 78
    assert F.ck4_count_closed_form(2, 0) == 18
    assert F.ck4_count_closed_form(3, 2) == iterated_line_digraph(cyclic_kautz(3, 4), 2).order
    assert F.ck4_count_closed_form(3, 2) == F.ck_iterated_vertex_count(3, 4, 2) == 492


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_ck4_recurrence_and_radical(d):
    n = [F.ck4_count_closed_form(d, t, check=True) for t in range(15)]
    assert n[:2] == list(F.ck4_initial(d))
    for t in range(2, 15):
        assert n[t] == (d - 1) * n[t - 1] + n[t - 2]
        assert math.isclose(F.ck4_count_radical(d, t), n[t], rel_tol=1e-9)
    for t in range(3):
        assert n[t] == F.ck_iterated_vertex_count(d, 4, t)


def _closed_walks(n, l):
    """trace((J - I)^l) on n vertices by integer matrix powers."""
    a = [[int(i != j) for j in range(n)] for i in range(n)]
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(l):
        m = [[sum(m[i][k] * a[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return sum(m[i][i] for i in range(n))


@given(st.integers(1, 6), st.integers(2, 12))
def test_vertex_count_is_closed_walk_count(d, l):
    assert F.ck_vertex_count(d, l) == _closed_walks(d + 1, l)
