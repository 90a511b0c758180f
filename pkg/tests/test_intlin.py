import random

from qell.intlin import (invariant_factors, lattice_rank, smith_normal_form,
                         solve_integer)


def _matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B)))
             for j in range(len(B[0]))] for i in range(len(A))]


def test_smith_normal_form_properties():
    rng = random.Random(13)
    for _ in range(60):
        m = rng.randrange(1, 5)
        n = rng.randrange(1, 5)
        A = [[rng.randrange(-6, 7) for _ in range(n)] for _ in range(m)]
        S, U, V = smith_normal_form(A)
        assert _matmul(_matmul(U, A), V) == S
        # diagonal, nonnegative, divisibility chain
        for i in range(m):
            for j in range(n):
                if i != j:
                    assert S[i][j] == 0
        diag = [S[i][i] for i in range(min(m, n))]
        assert all(d >= 0 for d in diag)
        for a, b in zip(diag, diag[1:]):
            if a and b:
                assert b % a == 0
            if a == 0:
                assert b == 0


def test_known_invariant_factors():
    assert invariant_factors([[2, 0], [0, 3]]) == [1, 6]
    assert invariant_factors([[2, 4], [4, 8]]) == [2]
    assert invariant_factors([[0, 0], [0, 0]]) == []
    assert lattice_rank([[1, 2, 3], [2, 4, 6]]) == 1


def test_solve_integer():
    A = [[2, 1], [0, 3]]
    assert solve_integer(A, [5, 3]) == [2, 1]
    assert solve_integer([[2]], [3]) is None
    assert solve_integer([[2, 3]], [1]) is not None
    assert solve_integer([[], []], [0, 0]) == []
    assert solve_integer([[], []], [1, 0]) is None


def test_solve_integer_randomized():
    rng = random.Random(19)
    for _ in range(60):
        m = rng.randrange(1, 4)
        n = rng.randrange(1, 4)
        A = [[rng.randrange(-5, 6) for _ in range(n)] for _ in range(m)]
        x = [rng.randrange(-4, 5) for _ in range(n)]
        b = [sum(A[i][j] * x[j] for j in range(n)) for i in range(m)]
        sol = solve_integer(A, b)
        assert sol is not None
        assert [sum(A[i][j] * sol[j] for j in range(n))
                for i in range(m)] == b
