from fractions import Fraction

from smodquiver.linalg import (SpanSolver, mat_mul, nullspace, qmat, rank, rref,
                               solve)


def test_rref_and_rank():
    m = qmat([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    red, pivots = rref(m)
    assert pivots == [0, 1]
    assert rank(m) == 2


def test_nullspace():
    m = qmat([[1, 2, 3], [2, 4, 6]])
    ns = nullspace(m)
    assert len(ns) == 2
    for v in ns:
        assert all(x == 0 for x in (sum(c * x for c, x in zip(row, v))
                                    for row in m))


def test_solve():
    m = qmat([[2, 0], [0, 3]])
    assert solve(m, [Fraction(4), Fraction(9)]) == [Fraction(2), Fraction(3)]
    assert solve(qmat([[1, 1], [1, 1]]), [Fraction(1), Fraction(2)]) is None


def test_span_solver_coords():
    s = SpanSolver(3)
    assert s.add([1, 0, 1])
    assert s.add([0, 1, 1])
    assert not s.add([1, 1, 2])
    c = s.coords([2, 3, 5])
    assert c == [Fraction(2), Fraction(3)]
    assert s.coords([0, 0, 1]) is None


def test_mat_mul():
    a = qmat([[1, 2], [3, 4]])
    b = qmat([[0, 1], [1, 0]])
    assert mat_mul(a, b) == qmat([[2, 1], [4, 3]])
