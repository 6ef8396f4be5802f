from fractions import Fraction

import pytest

import arimat

X = [[1, 0, 0, -4, 0, 3, 0], [0, 2, 0, 1, 2, 0, -2], [0, 0, 3, 0, 1, -1, -1]]
X_PRIME = [[1, 0, 0, 4, 0, 3, 0], [0, 2, 0, 1, 2, 0, 2], [0, 0, 3, 0, 1, 1, 1]]
SIX_CYCLE = [[1, 0, 0, 1, 0, 1], [0, 1, 0, 1, 1, 0], [0, 0, 1, 0, 1, -1]]


def x_ab(a, b):
    return [[1, a], [0, b]]


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def apply(t, d, x):
    tx = matmul(t, x)
    return [[v * d[j] for j, v in enumerate(row)] for row in tx]


def test_normal_forms():
    h, t = arimat.hnf([[1, 7], [0, 5]])
    assert h == [[1, 2], [0, 5]]
    assert matmul(t, [[1, 7], [0, 5]]) == h
    diag, u, w = arimat.snf([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert diag == [2, 6, 12]
    assert arimat.det([[-4, 0, 3], [1, 2, 0], [0, 1, -1]]) == 11
    assert arimat.solve_diophantine([[2, 4]], [3]) is None


def test_big_integers_round_trip():
    big = 10**40 + 7
    assert arimat.det([[big]]) == big
    assert arimat.multiplicity([[big, 2 * big]], [0, 1]) == big


def test_matroid_table():
    table = arimat.full_table(x_ab(1, 5))
    assert table[-1] == ([0, 1], 2, 5)
    assert arimat.same_arithmetic_matroid(x_ab(1, 5), x_ab(2, 5))
    assert arimat.multiplicative_bases(x_ab(1, 5)) == []
    assert [0, 1, 2] in arimat.bases(SIX_CYCLE)
    assert [3, 4, 5] not in arimat.bases(SIX_CYCLE)


def test_canonical_form_and_witness():
    c = arimat.canonical_form(X)
    assert c["matrix"] == X_PRIME
    assert c["basis"] == [0, 1, 2]
    assert len(c["forest"]) == 6
    assert apply(c["T"], c["D"], X) == X_PRIME
    assert arimat.canonical_form(X_PRIME)["matrix"] == X_PRIME


def test_equivalence():
    t, d = arimat.equivalent(X, X_PRIME)
    assert apply(t, d, X) == X_PRIME
    assert arimat.equivalent(x_ab(1, 5), x_ab(2, 5)) is None
    assert arimat.equivalent(x_ab(1, 5), x_ab(4, 5)) is not None
    report = arimat.equivalent_bruteforce(x_ab(1, 5), x_ab(2, 5))
    assert report["same_matroid"] and not report["equivalent"]


def test_counting():
    assert len(arimat.enumerate_basic_reps(X, [0, 1, 2])) == 64
    assert arimat.stratum_size(SIX_CYCLE) == 32
    assert arimat.verify_uniqueness(SIX_CYCLE, 20, 3) == (20, 20)


def test_layers():
    poset = arimat.layer_poset(x_ab(1, 5))
    assert len(poset["layers"]) == 8
    assert len(poset["maximal"]) == 5
    assert arimat.layers_of_flat([[2]], [0]) == [[Fraction(0)], [Fraction(1, 2)]]
    assert arimat.geometric_weak_multiplicativity(X) == [0, 1, 2]
    assert arimat.geometric_weak_multiplicativity(x_ab(2, 5)) is None


def test_graph_helpers():
    a = [[-4, 0, 3, 0], [1, 2, 0, -2], [0, 1, -1, -1]]
    assert arimat.kappa(a) == 1
    assert arimat.coordinatizing_path(a) == [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (2, 3)]


def test_errors():
    with pytest.raises(arimat.ArimatError, match="NotWeaklyMultiplicative"):
        arimat.canonical_form(x_ab(2, 5))
    with pytest.raises(arimat.ArimatError, match="ParseError"):
        arimat.parse_matrix("2 2\n1 2\n")
    with pytest.raises(ValueError):
        arimat.multiplicity(X, [9])
    with pytest.raises(TypeError):
        arimat.det([[1.5]])


def test_text_format():
    assert arimat.parse_matrix(arimat.format_matrix(X)) == X
