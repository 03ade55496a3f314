import random

import pytest

from k3pf import smith


def _check_snf(a):
    u, d, v = smith.smith_normal_form(a)
    rows, cols = len(a), len(a[0])
    assert smith.mat_mul(smith.mat_mul(u, a), v) == d
    assert abs(smith.det(u)) == 1
    assert abs(smith.det(v)) == 1
    diag = [d[i][i] for i in range(min(rows, cols))]
    for i in range(rows):
        for j in range(cols):
            if i != j:
                assert d[i][j] == 0
    assert all(x >= 0 for x in diag)
    nz = [x for x in diag if x]
    for a_, b_ in zip(nz, nz[1:]):
        assert b_ % a_ == 0
    # zeros trail
    assert diag == nz + [0] * (len(diag) - len(nz))
    return diag


def test_known_forms():
    assert _check_snf([[2, 0], [0, 3]]) == [1, 6]
    assert _check_snf([[1, 0], [0, 1]]) == [1, 1]
    assert _check_snf([[0, 0], [0, 0]]) == [0, 0]
    assert _check_snf([[4, 0], [0, 6]]) == [2, 12]
    assert _check_snf([[2, 4, 4]]) == [2]


def test_skew_octahedron_pairing_matrix():
    rays = [(1, 0, 0), (1, 2, 0), (1, 0, 2), (-1, 0, 0), (-1, -2, 0),
            (-1, 0, -2)]
    diag = _check_snf([list(r) for r in rays])
    assert diag == [1, 2, 2]


def test_random_matrices():
    rng = random.Random(55)
    for _ in range(80):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        a = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        _check_snf(a)


def test_invert_unimodular():
    rng = random.Random(7)
    count = 0
    while count < 20:
        m = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        if abs(smith.det(m)) != 1:
            continue
        count += 1
        inv = smith.invert_unimodular(m)
        assert smith.mat_mul(m, inv) == smith.identity(3)
    with pytest.raises(ValueError):
        smith.invert_unimodular([[2, 0], [0, 1]])


def test_rank_and_det():
    assert smith.int_rank([[1, 2], [2, 4]]) == 1
    assert smith.int_rank([[1, 0, 0], [0, 0, 1]]) == 2
    assert smith.det([[2, 1], [1, 1]]) == 1
    assert smith.det([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == 0
