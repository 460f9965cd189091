"""Smith normal form and lattice arithmetic over the chain ring W/2^K.

Every element of the Galois ring factors as 2^v * unit, so Gaussian
elimination with minimal-valuation pivoting always succeeds and yields a
diagonal matrix diag(2^{s_1}, 2^{s_2}, ...) with s_1 <= s_2 <= ...  The
transforms are accumulated directly, never inverted:

    E * A * F = S,   E and F invertible over W/2^K.

A "lattice" here is a subgroup of (W/2^K)^n spanned by a finite list of
vectors; membership tests reduce to valuation checks against the SNF of
the generator matrix.
"""

from __future__ import annotations

from .scalars import Witt


Vector = list[Witt]
Matrix = list[list[Witt]]


def zeros(n: int, m: int, K: int) -> Matrix:
    z = Witt.zero(K)
    return [[z] * m for _ in range(n)]


def identity(n: int, K: int) -> Matrix:
    I = zeros(n, n, K)
    one = Witt.one(K)
    for i in range(n):
        I[i][i] = one
    return I


def mat_vec(A: Matrix, v: Vector, K: int) -> Vector:
    out = []
    for row in A:
        acc = Witt.zero(K)
        for a, x in zip(row, v):
            if a and x:
                acc = acc + a * x
        out.append(acc)
    return out


def chain_ring_snf(A: Matrix, K: int) -> tuple[list[int], Matrix, Matrix]:
    """Diagonalize A over W/2^K.

    Returns (diag, E, F) where diag lists the valuations s_t of the
    diagonal 2-power entries (length min(rows, cols), padded with K for
    zero pivots) and E, F satisfy E*A*F = diag(2^{s_t}).
    """
    n_rows = len(A)
    n_cols = len(A[0]) if n_rows else 0
    S = [row[:] for row in A]
    E = identity(n_rows, K)
    F = identity(n_cols, K)
    r = min(n_rows, n_cols)
    diag = [K] * r

    for k in range(r):
        # Minimal-valuation pivot among the remaining block.
        best, bv = None, K
        for i in range(k, n_rows):
            for j in range(k, n_cols):
                v = S[i][j].val()
                if v < bv:
                    best, bv = (i, j), v
                    if v == 0:
                        break
            if bv == 0:
                break
        if best is None:
            break  # the rest of the block is zero; diag stays K
        i0, j0 = best
        if i0 != k:
            S[k], S[i0] = S[i0], S[k]
            E[k], E[i0] = E[i0], E[k]
        if j0 != k:
            for row in S:
                row[k], row[j0] = row[j0], row[k]
            for row in F:
                row[k], row[j0] = row[j0], row[k]

        # Normalize the pivot to exactly 2^bv.
        u_inv = S[k][k].unit_part().inv()
        S[k] = [u_inv * x for x in S[k]]
        E[k] = [u_inv * x for x in E[k]]

        # Clear the pivot column with row operations.
        for i in range(k + 1, n_rows):
            x = S[i][k]
            if not x:
                continue
            q = x.shift_down(bv)  # exact: bv is minimal in the block
            S[i] = [a - q * b for a, b in zip(S[i], S[k])]
            E[i] = [a - q * b for a, b in zip(E[i], E[k])]
        # Clear the pivot row with column operations.
        for j in range(k + 1, n_cols):
            x = S[k][j]
            if not x:
                continue
            q = x.shift_down(bv)
            for row in S:
                row[j] = row[j] - q * row[k]
            for row in F:
                row[j] = row[j] - q * row[k]
        diag[k] = bv

    return diag, E, F


def kernel_gens(A: Matrix, K: int) -> list[Vector]:
    """Generators of {x : A x = 0} as a subgroup of (W/2^K)^n."""
    n_rows = len(A)
    n_cols = len(A[0]) if n_rows else 0
    if n_cols == 0:
        return []
    if n_rows == 0:
        return [col for col in _columns(identity(n_cols, K))]
    diag, _E, F = chain_ring_snf(A, K)
    gens = []
    for t in range(n_cols):
        s = diag[t] if t < len(diag) else K
        if s == 0:
            continue
        col = [F[i][t] for i in range(n_cols)]
        if s < K:
            scale = Witt.two_power(K - s, K)
            col = [scale * x for x in col]
        gens.append(col)
    return gens


def _columns(A: Matrix) -> list[Vector]:
    if not A:
        return []
    return [[A[i][j] for i in range(len(A))] for j in range(len(A[0]))]


class Lattice:
    """Subgroup of (W/2^K)^n spanned by a list of vectors."""

    def __init__(self, n: int, K: int, gens: list[Vector]):
        self.n = n
        self.K = K
        self.gens = [g[:] for g in gens]
        if gens:
            A = [[g[i] for g in gens] for i in range(n)]
            diag, E, _F = chain_ring_snf(A, K)
            self._E = E
            self._diag = [diag[t] if t < len(diag) else K for t in range(n)]
        else:
            self._E = identity(n, K)
            self._diag = [K] * n

    def contains(self, v: Vector) -> bool:
        w = mat_vec(self._E, v, self.K)
        return all(x.val() >= s for x, s in zip(w, self._diag))

    def extended(self, v: Vector) -> "Lattice":
        return Lattice(self.n, self.K, self.gens + [v])


def presentation_invariants(rel_vectors: list[Vector], n: int, K: int) -> list[int]:
    """Invariant exponents of (W/2^K)^n / <rel_vectors>.

    Returns the sorted multiset of exponents e with one cyclic summand
    W/2^e per entry; e = K entries are indistinguishable from free
    summands at this truncation.  Zero summands are dropped.
    """
    return [e for e, _v in presentation_decomposition(rel_vectors, n, K)]


def presentation_decomposition(rel_vectors: list[Vector], n: int,
                               K: int) -> list[tuple[int, Vector]]:
    """Invariant exponents with cyclic generator vectors.

    For (W/2^K)^n / <rel_vectors> returns pairs (e, v) sorted by e, one
    per nonzero cyclic summand W/2^e with generator the class of v.
    """
    if n == 0:
        return []
    one = Witt.one(K)
    if not rel_vectors:
        return [(K, [one if i == t else Witt.zero(K) for i in range(n)])
                for t in range(n)]
    A = [[g[i] for g in rel_vectors] for i in range(n)]
    # Run SNF while tracking the inverse row transform: with E*A*F = S the
    # coordinate change y = E*z turns the relation lattice into the span
    # of 2^{s_t} e_t, so the t-th summand is generated by E^{-1} e_t.
    m = len(rel_vectors)
    S = [row[:] for row in A]
    E_inv = identity(n, K)
    r = min(n, m)
    diag = [K] * r
    for k in range(r):
        best, bv = None, K
        for i in range(k, n):
            for j in range(k, m):
                v = S[i][j].val()
                if v < bv:
                    best, bv = (i, j), v
                    if v == 0:
                        break
            if bv == 0:
                break
        if best is None:
            break
        i0, j0 = best
        if i0 != k:
            S[k], S[i0] = S[i0], S[k]
            for row in E_inv:
                row[k], row[i0] = row[i0], row[k]
        if j0 != k:
            for row in S:
                row[k], row[j0] = row[j0], row[k]
        u = S[k][k].unit_part()
        u_inv = u.inv()
        S[k] = [u_inv * x for x in S[k]]
        for row in E_inv:
            row[k] = row[k] * u
        for i in range(k + 1, n):
            x = S[i][k]
            if not x:
                continue
            q = x.shift_down(bv)
            S[i] = [a - q * b for a, b in zip(S[i], S[k])]
            for row in E_inv:
                row[k] = row[k] + q * row[i]
        for j in range(k + 1, m):
            x = S[k][j]
            if not x:
                continue
            q = x.shift_down(bv)
            for row in S:
                row[j] = row[j] - q * row[k]
        diag[k] = bv
    out = []
    for t in range(n):
        e = diag[t] if t < len(diag) else K
        if e > 0:
            out.append((e, [E_inv[i][t] for i in range(n)]))
    out.sort(key=lambda p: p[0])
    return out
