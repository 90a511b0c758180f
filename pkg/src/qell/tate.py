"""Mechanical verification of the symmetric-group classification.

For each conjugacy class of Sigma_N, the transfer ideal from all proper
two-block Young subgroups is computed on the canonical basis.  Classes of
mixed cycle type die: every basis element is itself a transfer generator.
Classes of pure type e^d (N = d * e) survive with a free quotient of rank e,
spanned by powers of the distinguished monomial q' (the N-th power of q on
that component), with q'^e = q^d.  The isomorphism onto
Z[q^(+-1)][q'] / (q'^e - q^d) is constructed by per-grade integer
elimination and certified multiplicative.
"""

from fractions import Fraction
from math import gcd

from .cyclo import CycloNum, root_of_unity
from .errors import WrongCycleType
from .intlin import invariant_factors, solve_integer
from .lambda_ring import LambdaElem, lambda_context
from .laurent import LaurentPoly
from .perm import Permutation, symmetric_group, trivial_group, young_subgroup
from .qell import QEllElem, qell_point, transfer


def pure_cycle_rep(N, e):
    """The canonical permutation of type e^(N/e) on consecutive blocks."""
    if N % e:
        raise WrongCycleType("e must divide N")
    cycles = []
    for off in range(0, N, e):
        if e > 1:
            cycles.append(tuple(range(off + 1, off + e + 1)))
    return Permutation.from_cycles(cycles, N)


def q_prime(N, sigma, cap=None):
    """The distinguished monomial: the N-th power of q on the class of sigma.

    sigma must have pure cycle type e^d.  The result is a LambdaElem over
    (Sigma_N, sigma); it is asserted to be a single basis element times a
    power of q, and to satisfy q'^e = q^d.
    """
    from .power import power_component
    ct = sigma.cycle_type()
    if len(set(ct)) != 1:
        raise WrongCycleType("sigma must be a product of equal-length cycles")
    e = ct[0]
    d = len(ct)
    assert d * e == N
    T = trivial_group(1)
    W_shim = _trivial_wreath(N, cap)
    V = QEllElem.unit(T).scale(LaurentPoly.q())
    qp = power_component(T, V, _as_wreath_element(sigma), W_shim)
    # sanity: a monomial with q'^e = q^d
    assert len(qp.coeffs) == 1, "q' is not a monomial"
    ((idx, poly),) = qp.coeffs.items()
    assert len(poly.coeffs) == 1 and list(poly.coeffs.values()) == [1], \
        "q' coefficient is not a plain power of q"
    ctx = qp.ctx
    lhs = qp ** e
    rhs = LambdaElem.unit(ctx).scale(LaurentPoly.q(d))
    assert lhs == rhs, "q'^e = q^d failed"
    return qp


def _trivial_wreath(N, cap=None):
    from .wreath import WreathGroup
    return WreathGroup(trivial_group(1), N, cap=cap)


def _as_wreath_element(sigma):
    from .wreath import WreathElement
    ident = Permutation.identity(1)
    return WreathElement(tuple([ident] * sigma.degree), sigma)


def transfer_ideal(N, cap=None):
    """Transfer-ideal generators per class of Sigma_N.

    Returns (SN, gens) where gens[class_index] is a list of LambdaElems over
    the context of the canonical class representative, each the image of a
    canonical basis element of a proper two-block Young subgroup.
    """
    SN = symmetric_group(N, cap=cap)
    conj = SN.conjugacy()
    gens = [[] for _ in range(len(conj))]
    splits = sorted({tuple(sorted((j, N - j))) for j in range(1, N)})
    for parts in splits:
        H = young_subgroup(list(parts))
        RH = qell_point(H)
        for hi in range(len(H.conjugacy())):
            for bi in range(RH.contexts[hi].rank):
                img = transfer(SN, H, RH.basis_element(hi, bi))
                for ci, comp in img.comps.items():
                    if not comp.is_zero():
                        gens[ci].append(comp)
    # transfers of basis elements are supported on a single class
    return SN, gens


def _integer_vector(elem, rank):
    """A generator as a plain integer vector over the basis; asserts shape."""
    vec = [0] * rank
    for i, poly in elem.coeffs.items():
        assert set(poly.coeffs) <= {0}, "transfer generator carries q powers"
        vec[i] = poly.coeffs.get(0, 0)
    return vec


_tate_cache = {}


def tate_structure(N, cap=None):
    """Full classification data for Sigma_N; cached.

    The report lists, per class: the case (I or II), rank, number of
    generators, and for Case II the (d, e) pairing, the surviving rank, the
    map phi expressing every basis element in powers of q' modulo the ideal,
    and the certificates that were checked.
    """
    if N in _tate_cache:
        return _tate_cache[N]
    SN, gens = transfer_ideal(N, cap=cap)
    conj = SN.conjugacy()
    classes = []
    total_surviving = 0
    for ci, sigma in enumerate(conj.reps):
        ctx = lambda_context(SN, sigma)
        glist = gens[ci]
        ct = sigma.cycle_type()
        entry = {"rep": sigma, "cycle_type": ct, "rank": ctx.rank,
                 "num_generators": len(glist)}
        if len(set(ct)) != 1:
            entry["case"] = "I"
            # every basis element must literally appear as a generator
            for i in range(ctx.rank):
                b = LambdaElem.basis(ctx, i)
                assert any(g == b for g in glist), \
                    "mixed-type basis element not hit by a transfer"
            entry["surviving_rank"] = 0
            classes.append(entry)
            continue
        e = ct[0]
        d = len(ct)
        entry["case"] = "II"
        entry["d"] = d
        entry["e"] = e
        qp = q_prime(N, sigma, cap=cap)
        assert qp.ctx is ctx
        # powers of q': each must be a monomial q^(m_a) * basis element
        power_data = []
        acc = LambdaElem.unit(ctx)
        for a in range(e):
            ((idx, poly),) = acc.coeffs.items()
            exps = list(poly.coeffs.items())
            assert len(exps) == 1 and exps[0][1] == 1
            power_data.append((idx, exps[0][0]))
            acc = acc * qp
        # grade-by-grade integer elimination
        grade_groups = {}
        for i, c in enumerate(ctx.grades):
            grade_groups.setdefault(c, []).append(i)
        gen_vectors = [_integer_vector(g, ctx.rank) for g in glist]
        phi = {}
        surviving = 0
        grade_report = []
        for c, idxs in sorted(grade_groups.items()):
            pos = {i: k for k, i in enumerate(idxs)}
            sub_gens = []
            for vec in gen_vectors:
                support = [i for i, v in enumerate(vec) if v]
                if not support:
                    continue
                gsupport = {ctx.grades[i] for i in support}
                assert len(gsupport) == 1, "generator mixes grades"
                if gsupport == {c}:
                    sub_gens.append([vec[i] for i in idxs])
            qp_here = [(a, idx, mexp) for a, (idx, mexp) in
                       enumerate(power_data) if ctx.grades[idx] == c]
            expected = sum(1 for a in range(e)
                           if Fraction(a * d, e) - (a * d) // e == c)
            assert len(qp_here) == expected
            # quotient by the ideal restricted to this grade must be free of
            # rank len(qp_here)
            if sub_gens:
                rows = [[sg[k] for sg in sub_gens] for k in range(len(idxs))]
                invs = invariant_factors(rows)
                assert all(v == 1 for v in invs), "torsion in the quotient"
                rank_gens = len(invs)
            else:
                rows = [[] for _ in range(len(idxs))]
                rank_gens = 0
            assert rank_gens == len(idxs) - len(qp_here), \
                "surviving rank mismatch at grade %s" % c
            surviving += len(qp_here)
            # express each basis element: b = sum z_a qp^a + ideal
            cols = []  # columns: one per q'-power here, then the generators
            for a, idx, mexp in qp_here:
                col = [0] * len(idxs)
                col[pos[idx]] = 1
                cols.append(col)
            for sg in sub_gens:
                cols.append(list(sg))
            A = [[col[k] for col in cols] for k in range(len(idxs))]
            for i in idxs:
                b = [0] * len(idxs)
                b[pos[i]] = 1
                x = solve_integer(A, b)
                assert x is not None, "basis element not reachable"
                image = [LaurentPoly.zero() for _ in range(e)]
                for slot, (a, idx, mexp) in enumerate(qp_here):
                    z = x[slot]
                    if z:
                        image[a] = image[a] + LaurentPoly({-mexp: z})
                phi[i] = image
            grade_report.append({"grade": str(c), "rank": len(idxs),
                                 "survivors": len(qp_here)})
        assert surviving == e
        entry["surviving_rank"] = surviving
        entry["grades"] = grade_report
        entry["phi"] = phi
        total_surviving += surviving
        # certificates
        _verify_phi(ctx, phi, glist, d, e, power_data)
        alpha = root_of_unity(Fraction(1, e))
        det = CycloNum.one()
        for jj in range(e):
            for kk in range(jj + 1, e):
                det = det * (alpha ** kk - alpha ** jj)
        assert not det.is_zero(), "Vandermonde certificate vanished"
        entry["vandermonde"] = repr(det)
        classes.append(entry)
    sigma_divisor_sum = sum(e for e in range(1, N + 1) if N % e == 0)
    assert total_surviving == sigma_divisor_sum, \
        "total surviving rank does not match the divisor sum"
    result = {"N": N, "classes": classes,
              "total_surviving_rank": total_surviving,
              "divisor_sum": sigma_divisor_sum}
    _tate_cache[N] = result
    return result


def _phi_apply(phi, elem, d, e):
    """Extend phi Z[q^(+-1)]-linearly to a full element; reduce q'^e = q^d."""
    out = [LaurentPoly.zero() for _ in range(e)]
    for i, poly in elem.coeffs.items():
        for r in range(e):
            f = phi[i][r]
            if not f.is_zero():
                out[r] = out[r] + poly * f
    return out


def _qprime_mul(x, y, d, e):
    out = [LaurentPoly.zero() for _ in range(e)]
    for r in range(e):
        if x[r].is_zero():
            continue
        for s in range(e):
            if y[s].is_zero():
                continue
            idx = r + s
            term = x[r] * y[s]
            if idx >= e:
                idx -= e
                term = term.shift(d)
            out[idx] = out[idx] + term
    return out


def _verify_phi(ctx, phi, gens, d, e, power_data):
    # phi kills every ideal generator
    for g in gens:
        img = _phi_apply(phi, g, d, e)
        assert all(f.is_zero() for f in img), "phi does not kill a generator"
    # phi fixes the powers of q'
    for a, (idx, mexp) in enumerate(power_data):
        elem_img = phi[idx]
        want = [LaurentPoly.zero() for _ in range(e)]
        want[a] = LaurentPoly({-mexp: 1})
        assert elem_img == want, "phi does not fix q'^%d" % a
    # multiplicativity on all basis pairs
    for i in range(ctx.rank):
        for j in range(i, ctx.rank):
            prod = LambdaElem.basis(ctx, i) * LambdaElem.basis(ctx, j)
            lhs = _phi_apply(phi, prod, d, e)
            rhs = _qprime_mul(phi[i], phi[j], d, e)
            assert lhs == rhs, "phi not multiplicative at (%d, %d)" % (i, j)


def quotient_and_match(N, cap=None):
    """Public report of the classification check for Sigma_N."""
    ts = tate_structure(N, cap=cap)
    classes = []
    for entry in ts["classes"]:
        item = {"rep": repr(entry["rep"]),
                "cycle_type": list(entry["cycle_type"]),
                "case": entry["case"],
                "rank": entry["rank"],
                "num_generators": entry["num_generators"],
                "surviving_rank": entry["surviving_rank"]}
        if entry["case"] == "II":
            item["d"] = entry["d"]
            item["e"] = entry["e"]
            item["target"] = "Z[q^+-1][q']/(q'^%d - q^%d)" % (
                entry["e"], entry["d"])
            item["vandermonde"] = entry["vandermonde"]
        classes.append(item)
    return {"N": ts["N"], "classes": classes,
            "total_surviving_rank": ts["total_surviving_rank"],
            "divisor_sum": ts["divisor_sum"],
            "match": ts["total_surviving_rank"] == ts["divisor_sum"]}
