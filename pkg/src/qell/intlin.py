"""Small exact integer linear algebra: Smith normal form and lattice solving."""


def smith_normal_form(A):
    """Smith normal form with transforms: returns (S, U, V) with U*A*V = S.

    A is a list of rows of integers; U and V are unimodular.  The diagonal of
    S holds the invariant factors (nonnegative, each dividing the next).
    """
    m = len(A)
    n = len(A[0]) if m else 0
    S = [list(r) for r in A]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_op(i, j, k):  # row_i -= k * row_j
        S[i] = [a - k * b for a, b in zip(S[i], S[j])]
        U[i] = [a - k * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, k):  # col_i -= k * col_j
        for r in range(m):
            S[r][i] -= k * S[r][j]
        for r in range(n):
            V[r][i] -= k * V[r][j]

    def row_swap(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for r in range(m):
            S[r][i], S[r][j] = S[r][j], S[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    def row_neg(i):
        S[i] = [-a for a in S[i]]
        U[i] = [-a for a in U[i]]

    s = 0
    while s < min(m, n):
        # find a nonzero pivot of least absolute value in the trailing block
        piv = None
        best = None
        for i in range(s, m):
            for j in range(s, n):
                v = abs(S[i][j])
                if v and (best is None or v < best):
                    best = v
                    piv = (i, j)
        if piv is None:
            break
        row_swap(s, piv[0])
        col_swap(s, piv[1])
        if S[s][s] < 0:
            row_neg(s)
        dirty = False
        for i in range(s + 1, m):
            if S[i][s]:
                k = S[i][s] // S[s][s]
                row_op(i, s, k)
                if S[i][s]:
                    dirty = True
        for j in range(s + 1, n):
            if S[s][j]:
                k = S[s][j] // S[s][s]
                col_op(j, s, k)
                if S[s][j]:
                    dirty = True
        if dirty:
            continue
        # divisibility: pivot must divide everything below-right
        bad = None
        for i in range(s + 1, m):
            for j in range(s + 1, n):
                if S[i][j] % S[s][s]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            row_op(s, bad, -1)
            continue
        s += 1
    return S, U, V


def invariant_factors(A):
    if not A or not A[0]:
        return []
    S, _, _ = smith_normal_form(A)
    out = []
    for i in range(min(len(S), len(S[0]))):
        if S[i][i]:
            out.append(S[i][i])
    return out


def solve_integer(A, b):
    """An integer solution x of A x = b (columns of A as a list of rows), or None."""
    m = len(A)
    n = len(A[0]) if m else 0
    if n == 0:
        return [] if all(v == 0 for v in b) else None
    S, U, V = smith_normal_form(A)
    c = [sum(U[i][j] * b[j] for j in range(m)) for i in range(m)]
    y = [0] * n
    for i in range(min(m, n)):
        if S[i][i]:
            if c[i] % S[i][i]:
                return None
            y[i] = c[i] // S[i][i]
        elif c[i]:
            return None
    for i in range(min(m, n), m):
        if c[i]:
            return None
    x = [sum(V[i][j] * y[j] for j in range(n)) for i in range(n)]
    # paranoid check
    for i in range(m):
        if sum(A[i][j] * x[j] for j in range(n)) != b[i]:
            raise AssertionError("integer solve verification failed")
    return x


def lattice_rank(A):
    return len(invariant_factors(A))
