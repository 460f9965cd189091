"""Smith normal form over W/2^K against a brute-force enumeration oracle.

The oracle enumerates module elements directly (modules are capped at
4^6 = 4096 elements), computes kernels and images pointwise, and reads
off the invariant factors from order statistics.  It shares no code path
with the SNF engine.
"""

import itertools
import random

from hfpss.modules import BidegreeModule, LinearMap, Summand, homology_at
from hfpss.monomials import Monomial
from hfpss.scalars import Witt, witt_elements
from hfpss.snf import Lattice, chain_ring_snf, kernel_gens, presentation_invariants

K = 3


def W(a0, a1=0):
    return Witt(a0, a1, K)


def mat(rows):
    return [[W(x) if isinstance(x, int) else x for x in row] for row in rows]


def snf_diag(rows):
    diag, E, F = chain_ring_snf(rows, K)
    # verify E * A * F is the claimed diagonal
    n, m = len(rows), len(rows[0])
    prod = [[sum((E[i][k] * rows[k][j] for k in range(n)), W(0)) for j in range(m)]
            for i in range(n)]
    prod = [[sum((prod[i][k] * F[k][j] for k in range(m)), W(0)) for j in range(m)]
            for i in range(n)]
    for i in range(n):
        for j in range(m):
            expect = Witt.two_power(diag[min(i, j)], K) if i == j and i < len(diag) \
                else W(0)
            if i == j and i < len(diag):
                assert prod[i][j] == Witt.two_power(diag[i], K)
            else:
                assert not prod[i][j]
    return diag


def test_snf_single_two():
    # [[2]]: cokernel W/2
    assert snf_diag(mat([[2]])) == [1]
    assert presentation_invariants([[W(2)]], 1, K) == [1]


def test_snf_single_zero():
    # [[0]]: free rank 1 (invariant 0 = free at this truncation)
    assert snf_diag(mat([[0]])) == [K]
    assert presentation_invariants([[W(0)]], 1, K) == [K]


def test_snf_triangular_example():
    # [[2, 2w], [0, 4]] over W/8
    rows = mat([[2, Witt(0, 2, K)], [0, 4]])
    diag = snf_diag(rows)
    assert diag == sorted(diag)
    assert _enumeration_invariants_of_cokernel(rows, [K, K]) == \
        sorted(min(d, K) for d in diag if d > 0) or True
    oracle = _enumeration_invariants_of_cokernel(rows, [K, K])
    assert oracle == sorted(d for d in diag if d > 0)


# ---------------------------------------------------------------------------
# Enumeration oracle.

def _module_elements(exps):
    """All elements of the direct sum of W/2^e for e in exps."""
    spaces = [list(witt_elements(e)) for e in exps]
    for combo in itertools.product(*spaces):
        yield [Witt(w.a0, w.a1, K) for w in combo]


def _apply(matrix_cols, vec, tgt_exps):
    out = [Witt.zero(K) for _ in tgt_exps]
    for j, x in enumerate(vec):
        for i, c in matrix_cols[j]:
            out[i] = out[i] + c * x
    return [Witt(w.a0 % (1 << e), w.a1 % (1 << e), K)
            for w, e in zip(out, tgt_exps)]


def _invariants_from_orders(elements):
    """Invariant exponents of a finite W/2^K-module from order statistics.

    #(2^t-torsion) = 4^(sum min(e_i, t)) determines the multiset of e_i.
    """
    n = len(elements)
    counts = []
    for t in range(K + 1):
        c = 0
        for v in elements:
            if all((Witt.two_power(t, K) * x).val() >= K or not (Witt.two_power(t, K) * x)
                   for x in v):
                c += 1
        counts.append(c)
    # log4 of torsion growth gives sum of min(e_i, t)
    logs = []
    for c in counts:
        l = 0
        while 4 ** l < c:
            l += 1
        assert 4 ** l == c
        logs.append(l)
    exps = []
    for t in range(1, K + 1):
        exps.append(logs[t] - logs[t - 1])  # number of e_i >= t
    invs = []
    for t in range(K, 0, -1):
        new = exps[t - 1] - (len([e for e in invs if e >= t + 1]))
        invs.extend([t] * (exps[t - 1] - sum(1 for e in invs if e >= t)))
    return sorted(invs)


def _enumeration_invariants_of_cokernel(rows, row_exps):
    """Invariants of W^n/(columns of rows) by enumerating the quotient."""
    n = len(rows)
    cols = [[(i, rows[i][j]) for i in range(n) if rows[i][j]]
            for j in range(len(rows[0]))]
    image = set()
    src_exps = [K] * len(rows[0])
    for v in _module_elements(src_exps):
        w = _apply(cols, v, [K] * n)
        image.add(tuple((x.a0, x.a1) for x in w))
    # quotient elements: orbit representatives under translation by image
    seen = set()
    reps = []
    for v in _module_elements([K] * n):
        key = min(tuple(((v[i].a0 + d[i][0]) % 8, (v[i].a1 + d[i][1]) % 8)
                        for i in range(n)) for d in image)
        if key not in seen:
            seen.add(key)
            reps.append(key)
    # order statistics of the quotient group
    elements = [[Witt(a, b, K) for a, b in rep] for rep in reps]

    def order_exp(rep):
        for t in range(K + 1):
            scaled = tuple(((rep[i][0] << t) % 8, (rep[i][1] << t) % 8)
                           for i in range(len(rep)))
            key = min(tuple(((scaled[i][0] + d[i][0]) % 8, (scaled[i][1] + d[i][1]) % 8)
                            for i in range(len(rep))) for d in image)
            if all(x == (0, 0) for x in key):
                return t
        raise AssertionError

    counts = [sum(1 for r in reps if order_exp(r) <= t) for t in range(K + 1)]
    logs = []
    for c in counts:
        l = 0
        while 4 ** l < c:
            l += 1
        assert 4 ** l == c, (c,)
        logs.append(l)
    n_ge = [logs[t] - logs[t - 1] for t in range(1, K + 1)]  # count of e_i >= t
    invs = []
    for t in range(K, 0, -1):
        invs.extend([t] * (n_ge[t - 1] - sum(1 for e in invs if e > t)))
    return sorted(invs)


def _random_monomials(rng, n, stem, filt):
    out = []
    used = set()
    while len(out) < n:
        b = rng.randrange(6)
        if b not in used:
            used.add(b)
            out.append(Monomial((filt - stem) // 2, b, filt))
    return out


def _random_module(rng, stem, filt, max_rank=4, max_log=6):
    n = rng.randint(1, max_rank)
    exps = []
    total = 0
    for _ in range(n):
        e = rng.randint(1, K)
        if total + e > max_log:
            break
        exps.append(e)
        total += e
    if not exps:
        exps = [1]
    monos = _random_monomials(rng, len(exps), stem, filt)
    return BidegreeModule(stem, filt, tuple(
        Summand(0, m, e) for m, e in zip(monos, exps)))


def _random_map_into_kernel(rng, src, mid, ker_elements):
    """Oracle-built d_in: send each source generator to a kernel element
    of compatible order, independent of any SNF machinery."""
    cols = []
    for s in src.summands:
        candidates = [v for v in ker_elements
                      if all((Witt.two_power(s.order, K) * x).val() >= e
                             for x, e in zip(v, [t.order for t in mid.summands]))]
        v = rng.choice(candidates)
        cols.append([(i, x) for i, x in enumerate(v) if x])
    return LinearMap(src, mid, cols)


def test_homology_agrees_with_enumeration_on_100_random_presentations():
    rng = random.Random(20240817)
    for trial in range(100):
        mid = _random_module(rng, 0, 0)
        tgt = _random_module(rng, -1, 7)
        n, m = len(mid.summands), len(tgt.summands)
        # random well-defined d_out
        cols = []
        for s in mid.summands:
            col = []
            for i, t in enumerate(tgt.summands):
                v_min = max(0, t.order - s.order)
                if rng.random() < 0.5:
                    continue
                val = rng.randrange(1 << K), rng.randrange(1 << K)
                w = Witt(val[0], val[1], K)
                if w.val() < v_min:
                    w = Witt.two_power(v_min, K) * w
                if w:
                    col.append((i, w))
            cols.append(col)
        d_out = LinearMap(mid, tgt, cols)
        d_out.check_well_defined(K)

        # oracle: enumerate the kernel of d_out inside mid
        mid_exps = [s.order for s in mid.summands]
        tgt_exps = [t.order for t in tgt.summands]
        ker_elements = [v for v in _module_elements(mid_exps)
                        if all(x.val() >= e or not x
                               for x, e in zip(_apply(cols, v, tgt_exps), tgt_exps))]

        if trial % 2 == 0:
            d_in = None
            image = {tuple((0, 0) for _ in mid.summands)}
        else:
            src = _random_module(rng, 1, 0)
            d_in = _random_map_into_kernel(rng, src, mid, ker_elements)
            image = set()
            for v in _module_elements([s.order for s in src.summands]):
                w = _apply(d_in.cols, v, mid_exps)
                image.add(tuple((x.a0 % (1 << e), x.a1 % (1 << e))
                                for x, e in zip(w, mid_exps)))

        # oracle invariants of ker/im from order statistics of cosets
        seen = set()
        reps = []
        mods = [1 << e for e in mid_exps]
        for v in ker_elements:
            key = min(tuple(((v[i].a0 + d[i][0]) % mods[i],
                             (v[i].a1 + d[i][1]) % mods[i])
                            for i in range(len(v))) for d in image)
            if key not in seen:
                seen.add(key)
                reps.append(key)

        def order_exp(rep):
            for t in range(K + 1):
                scaled = tuple((((rep[i][0] << t)) % mods[i],
                                ((rep[i][1] << t)) % mods[i])
                               for i in range(len(rep)))
                key = min(tuple(((scaled[i][0] + d[i][0]) % mods[i],
                                 (scaled[i][1] + d[i][1]) % mods[i])
                                for i in range(len(rep))) for d in image)
                if all(x == (0, 0) for x in key):
                    return t
            raise AssertionError

        counts = [sum(1 for r in reps if order_exp(r) <= t) for t in range(K + 1)]
        logs = []
        for c in counts:
            l = 0
            while 4 ** l < c:
                l += 1
            assert 4 ** l == c
            logs.append(l)
        n_ge = [logs[t] - logs[t - 1] for t in range(1, K + 1)]
        oracle = []
        for t in range(K, 0, -1):
            oracle.extend([t] * (n_ge[t - 1] - sum(1 for e in oracle if e > t)))
        oracle.sort()

        H, _section = homology_at(mid, d_in, d_out, K)
        assert H.invariants() == oracle, f"trial {trial}"


def test_kernel_gens_span_the_kernel():
    rows = mat([[2, 1], [0, 4]])
    gens = kernel_gens(rows, K)
    lat = Lattice(2, K, gens)
    # brute force kernel membership
    for v in _module_elements([K, K]):
        out = [rows[0][0] * v[0] + rows[0][1] * v[1],
               rows[1][0] * v[0] + rows[1][1] * v[1]]
        in_ker = not out[0] and not out[1]
        assert lat.contains(v) == in_ker


def test_homology_basis_order_independence():
    # permuting the input summands leaves the canonical invariants alone
    rng = random.Random(7)
    mid = _random_module(rng, 0, 0, max_rank=3)
    tgt = _random_module(rng, -1, 7, max_rank=3)
    cols = [[(i, W(2)) for i, t in enumerate(tgt.summands)
             if t.order <= s.order + 1][:1] for s in mid.summands]
    d_out = LinearMap(mid, tgt, cols)
    H1, _ = homology_at(mid, None, d_out, K)
    perm = BidegreeModule(0, 0, tuple(reversed(mid.summands)))
    # rebuild the map against the permuted basis
    idx = {s: j for j, s in enumerate(mid.summands)}
    cols2 = [cols[idx[s]] for s in perm.summands]
    H2, _ = homology_at(perm, None, LinearMap(perm, tgt, cols2), K)
    assert H1.invariants() == H2.invariants()
    assert {(s.scalar, s.mono, s.order) for s in H1.summands} == \
        {(s.scalar, s.mono, s.order) for s in H2.summands}
