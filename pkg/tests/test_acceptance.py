"""Acceptance suite: each test prints a single PASS/FAIL line with timing.

All checks are exact; the asserted time budgets are generous outer bounds.
"""

import random
import time
from fractions import Fraction

from qell.chars import character_table
from qell.cyclo import CycloNum
from qell.lambda_ring import (LambdaElem, canonical_basis,
                              cyclic_presentation, lambda_context)
from qell.laurent import LaurentPoly
from qell.perm import (Permutation, ProductGroup, cyclic_group,
                       symmetric_group, trivial_group, young_subgroup)
from qell.power import (adams_bar, axiom_composition, axiom_external,
                        axiom_identity, axiom_sum, power_component,
                        power_total)
from qell.qell import (QEllElem, change_of_group, kunneth, qell_point,
                       restrict_to_subgroup, transfer)
from qell.tate import quotient_and_match
from qell.wreath import WreathElement, WreathGroup, wreath_irreducibles


def _report(name, t0, budget):
    elapsed = time.monotonic() - t0
    print("ACCEPTANCE %s: PASS (%.2fs, budget %ds)" % (name, elapsed, budget))
    assert elapsed < budget


def test_criterion_1_component_tables():
    t0 = time.monotonic()
    # the three components over Sigma_3: ranks and grade multisets
    S3 = symmetric_group(3)
    data = {}
    for g in S3.conjugacy().reps:
        basis = canonical_basis(S3, g)
        data[g.cycle_type()] = (len(basis), sorted(c for _, c in basis))
    assert data[(1, 1, 1)] == (3, [0, 0, 0])
    assert data[(3,)] == (3, [0, Fraction(1, 3), Fraction(2, 3)])
    assert data[(2, 1)] == (2, [0, Fraction(1, 2)])
    # monogenic relations x^N = q^k for all cyclic components, N <= 8
    for N in range(2, 9):
        CN = cyclic_group(N)
        gen = Permutation.from_cycles([tuple(range(1, N + 1))], N)
        for k in range(N):
            g = gen ** k
            ctx = lambda_context(CN, g)
            M, kk, xi = cyclic_presentation(CN, g, generator=gen)
            assert (M, kk) == (N, k)
            x = LambdaElem.basis(ctx, xi)
            lhs = x ** N
            rhs = LambdaElem.unit(ctx).scale(LaurentPoly.q(k))
            assert lhs == rhs
            # and again through character evaluation
            t = Fraction(1, 7)
            assert lhs.evaluate(gen, t) == rhs.evaluate(gen, t)
    _report("1 (component tables, x^N = q^k)", t0, 1)


def test_criterion_2_wreath_irreducibles():
    t0 = time.monotonic()
    cases = [(trivial_group(1), 2), (trivial_group(1), 3),
             (cyclic_group(2), 2), (cyclic_group(2), 3),
             (cyclic_group(3), 2), (cyclic_group(3), 3),
             (symmetric_group(3), 2), (symmetric_group(3), 3)]
    for base, n in cases:
        W, items = wreath_irreducibles(base, n)
        assert W.group.order <= 1296
        tab = character_table(W.group)
        built = sorted(tuple(v.sort_key() for v in chi.values)
                       for _, chi in items)
        brute = sorted(tuple(v.sort_key() for v in chi.values)
                       for chi in tab.irreducibles)
        assert built == brute
    _report("2 (wreath irreducibles = brute tables)", t0, 30)


def test_criterion_3_power_of_q():
    t0 = time.monotonic()
    T = trivial_group(1)
    V = QEllElem.unit(T).scale(LaurentPoly.q())

    def graded_coeffs(comp):
        return sorted((comp.ctx.grades[i], poly)
                      for i, poly in comp.coeffs.items())

    # n = 2: q^2 on the identity, the half line on the transposition
    P2 = power_total(T, V, 2)
    conj2 = P2.group.conjugacy()
    for ci, rep in enumerate(conj2.reps):
        got = graded_coeffs(P2.comps[ci])
        if rep.is_identity():
            assert got == [(0, LaurentPoly.q(2))]
        else:
            assert got == [(Fraction(1, 2), LaurentPoly.one())]
    # n = 3: cube, transposition x fixed point, three-cycle
    P3 = power_total(T, V, 3)
    conj3 = P3.group.conjugacy()
    for ci, rep in enumerate(conj3.reps):
        got = graded_coeffs(P3.comps[ci])
        ct = rep.cycle_type()
        if ct == (1, 1, 1):
            assert got == [(0, LaurentPoly.q(3))]
        elif ct == (2, 1):
            # (x)_2 box x: the half line times q
            assert got == [(Fraction(1, 2), LaurentPoly.q())]
        else:
            assert got == [(Fraction(1, 3), LaurentPoly.one())]
    # n = 4
    P4 = power_total(T, V, 4)
    conj4 = P4.group.conjugacy()
    for ci, rep in enumerate(conj4.reps):
        got = graded_coeffs(P4.comps[ci])
        ct = rep.cycle_type()
        if ct == (1, 1, 1, 1):
            assert got == [(0, LaurentPoly.q(4))]
        elif ct == (2, 1, 1):
            assert got == [(Fraction(1, 2), LaurentPoly.q(2))]
        elif ct == (2, 2):
            # (x)_2 box (x)_2 on the centralizer of the (2,2) class
            assert all(c > 0 for _, poly in got
                       for c in poly.coeffs.values())
            assert {g for g, _ in got} <= {0, Fraction(1, 2)}
        elif ct == (3, 1):
            assert got == [(Fraction(1, 3), LaurentPoly.q())]
        else:
            assert got == [(Fraction(1, 4), LaurentPoly.one())]
        for _, poly in got:
            assert all(c > 0 for c in poly.coeffs.values())
    _report("3 (powers of q, n <= 4)", t0, 10)


def test_criterion_4_axioms():
    t0 = time.monotonic()
    corpus = []
    for G in [trivial_group(1), cyclic_group(2), cyclic_group(3),
              cyclic_group(4),
              ProductGroup(cyclic_group(2), cyclic_group(2)).group]:
        R = qell_point(G)
        V = R.basis_element(len(R.contexts) - 1, 0) + R.q()
        corpus.append((G, V))
    # (i) P_1 = Id, P_0 = 1
    for G, V in corpus:
        assert axiom_identity(G, V)
    # (ii) restriction of P_(n+m) = P_n x P_m, n + m <= 4
    sum_plan = {1: [(2, 2)], 2: [(1, 2), (2, 2)], 3: [(1, 2)],
                4: [(1, 2)]}
    for G, V in corpus:
        for n, m in sum_plan[G.order]:
            assert axiom_sum(G, V, n, m)
    # (iii) composition for m = n = 2, |G| <= 2
    for G, V in corpus[:2]:
        assert axiom_composition(G, V, 2, 2)
    # (iv) external products on groups of order <= 4
    prod = ProductGroup(cyclic_group(2), cyclic_group(2))
    RG, RH = qell_point(prod.left), qell_point(prod.right)
    assert axiom_external(prod, RG.basis_element(1, 0),
                          RH.unit() + RH.q(), 2)
    _report("4 (power operation axioms)", t0, 120)


def test_criterion_5_classification():
    t0 = time.monotonic()
    expected = {2: 3, 3: 4, 4: 7, 5: 6}
    t_small = time.monotonic()
    for N in (2, 3, 4):
        rep = quotient_and_match(N)
        assert rep["match"] and rep["total_surviving_rank"] == expected[N]
    assert time.monotonic() - t_small < 60
    t5 = time.monotonic()
    rep = quotient_and_match(5)
    assert rep["match"] and rep["total_surviving_rank"] == expected[5]
    assert time.monotonic() - t5 < 600
    _report("5 (classification N = 2..5)", t0, 660)


def test_criterion_6_randomized_properties():
    t0 = time.monotonic()
    rng = random.Random(20260825)
    groups = [cyclic_group(2), cyclic_group(3), symmetric_group(3)]
    for G in groups:
        checks = 0
        tab = character_table(G)
        conj = G.conjugacy()
        # orthogonality on random pairs of irreducibles
        for _ in range(20):
            i = rng.randrange(len(tab.irreducibles))
            j = rng.randrange(len(tab.irreducibles))
            want = CycloNum.one() if i == j else CycloNum.zero()
            assert tab.irreducibles[i].inner(tab.irreducibles[j]) == want
            checks += 1
        # plain Frobenius reciprocity against a random cyclic subgroup
        from qell.chars import induce, restrict
        h = G.random_element(rng)
        H = G.subgroup([h ** k for k in range(h.order())])
        tabH = character_table(H)
        for _ in range(20):
            f = tabH.irreducibles[rng.randrange(len(tabH.irreducibles))]
            chi = tab.irreducibles[rng.randrange(len(tab.irreducibles))]
            assert induce(G, H, f).inner(chi) == \
                f.inner(restrict(G, H, chi))
            checks += 1
        # lambda-level reciprocity via the transfer projection formula
        R = qell_point(G)
        RH = qell_point(H)
        for _ in range(20):
            a = RH.random_element(rng)
            b = R.random_element(rng)
            assert transfer(G, H, a * restrict_to_subgroup(G, H, b)) == \
                transfer(G, H, a) * b
            checks += 1
        # Kunneth with a C2 factor: rank identity plus random products
        prod = ProductGroup(G, cyclic_group(2))
        RP = qell_point(prod.group)
        R2 = qell_point(prod.right)
        assert sum(RP.ranks()) == sum(R.ranks()) * sum(R2.ranks())
        for _ in range(20):
            a1, a2 = R.random_element(rng), R.random_element(rng)
            b1, b2 = R2.random_element(rng), R2.random_element(rng)
            assert kunneth(prod, a1 * a2, b1 * b2) == \
                kunneth(prod, a1, b1) * kunneth(prod, a2, b2)
            checks += 1
        # change-of-group round trips over G x C2 >= G
        big = prod.group
        sub = big.subgroup([prod.embed_left(g) for g in G.elements])
        ring, to_H, from_H = change_of_group(big, sub)
        RS = qell_point(sub)
        for _ in range(15):
            b = RS.random_element(rng)
            assert to_H(from_H(b)) == b
            checks += 1
        # the collapsed total power operation is multiplicative
        for _ in range(5):
            a = R.random_element(rng, max_exp=1, max_coeff=2)
            b = R.random_element(rng, max_exp=1, max_coeff=2)
            assert adams_bar(G, a * b, 2) == \
                adams_bar(G, a, 2) * adams_bar(G, b, 2)
            checks += 1
        assert checks >= 100
    _report("6 (randomized structural properties)", t0, 120)
