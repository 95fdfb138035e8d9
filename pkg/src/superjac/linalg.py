"""Dense linear algebra over a finite field object.

Matrices are lists of rows.  Vectors are rows too; subspaces of F^n are kept
as the nonzero rows of their reduced row echelon form, which is canonical.
"""

from __future__ import annotations


def zeros(F, m: int, n: int) -> list[list]:
    return [[F.zero] * n for _ in range(m)]


def identity(F, n: int) -> list[list]:
    out = zeros(F, n, n)
    for i in range(n):
        out[i][i] = F.one
    return out


def transpose(M: list[list]) -> list[list]:
    return [list(col) for col in zip(*M)] if M else []


def mat_mul(F, A: list[list], B: list[list]) -> list[list]:
    if not A:
        return []
    n = len(B[0]) if B else 0
    z = F.zero
    fadd, fmul = F.add, F.mul
    out = []
    for row in A:
        acc = [z] * n
        for k, a in enumerate(row):
            if a != z:
                for j, b in enumerate(B[k]):
                    if b != z:
                        acc[j] = fadd(acc[j], fmul(a, b))
        out.append(acc)
    return out


def mat_vec(F, A: list[list], v: list) -> list:
    z = F.zero
    out = []
    for row in A:
        acc = z
        for a, b in zip(row, v):
            if a != z and b != z:
                acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return out


def vec_mat(F, v: list, A: list[list]) -> list:
    return mat_vec(F, transpose(A), v)


def mat_add(F, A: list[list], B: list[list]) -> list[list]:
    return [[F.add(a, b) for a, b in zip(r, s)] for r, s in zip(A, B)]


def mat_sub(F, A: list[list], B: list[list]) -> list[list]:
    return [[F.sub(a, b) for a, b in zip(r, s)] for r, s in zip(A, B)]


def mat_scale(F, A: list[list], c) -> list[list]:
    return [[F.mul(a, c) for a in r] for r in A]


def mat_pow(F, A: list[list], e: int) -> list[list]:
    out = identity(F, len(A))
    while e:
        if e & 1:
            out = mat_mul(F, out, A)
        e >>= 1
        if e:
            A = mat_mul(F, A, A)
    return out


def poly_at_matrix(F, coeffs: list, A: list[list]) -> list[list]:
    """Horner evaluation of sum coeffs[i] A^i."""
    n = len(A)
    out = zeros(F, n, n)
    for c in reversed(coeffs):
        out = mat_mul(F, out, A)
        if c != F.zero:
            for i in range(n):
                out[i][i] = F.add(out[i][i], c)
    return out


def is_zero_matrix(F, A: list[list]) -> bool:
    return all(a == F.zero for row in A for a in row)


def rref(F, M: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form (zero rows dropped) and pivot columns; pivots are
    chosen as the first nonzero entry scanning rows in order, so the result is
    deterministic."""
    A = [list(r) for r in M]
    if not A:
        return [], []
    n = len(A[0])
    z = F.zero
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(A)) if A[i][c] != z), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = F.inv(A[r][c])
        A[r] = [F.mul(x, inv) for x in A[r]]
        prow = A[r]
        for i in range(len(A)):
            if i != r and A[i][c] != z:
                f = A[i][c]
                A[i] = [F.sub(x, F.mul(f, y)) if y != z else x for x, y in zip(A[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rank(F, M: list[list]) -> int:
    return len(rref(F, M)[1])


def kernel(F, M: list[list], ncols: int | None = None) -> list[list]:
    """Basis of {v : M v = 0}, one vector per free column, in column order."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    R, pivots = rref(F, M) if M else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [F.zero] * ncols
        v[fc] = F.one
        for row, pc in zip(R, pivots):
            if row[fc] != F.zero:
                v[pc] = F.neg(row[fc])
        basis.append(v)
    return basis


def left_kernel(F, M: list[list]) -> list[list]:
    """Basis of {v : v M = 0}."""
    return kernel(F, transpose(M), len(M))


def span(F, vectors: list[list], n: int | None = None) -> list[list]:
    """Canonical basis (RREF rows) of the span."""
    vs = [list(v) for v in vectors]
    if not vs:
        return []
    return rref(F, vs)[0]


def subspace_sum(F, U: list[list], V: list[list]) -> list[list]:
    return span(F, U + V)


def subspace_intersection(F, U: list[list], V: list[list], n: int) -> list[list]:
    if not U or not V:
        return []
    # x U = y V  <=>  (x, -y) in left kernel of [U; V]
    K = left_kernel(F, U + V) if (U + V) else []
    vecs = []
    for w in K:
        x = w[: len(U)]
        vecs.append(vec_mat(F, x, U))
    return span(F, vecs)


def same_subspace(F, U: list[list], V: list[list]) -> bool:
    return span(F, U) == span(F, V)


def contains(F, U: list[list], v: list) -> bool:
    return rank(F, U + [list(v)]) == rank(F, U)


def solve_row(F, B: list[list], v: list) -> list | None:
    """Coordinates x with x B = v for linearly independent rows B, or None."""
    K = left_kernel(F, B + [list(v)])
    for w in K:
        if w[-1] != F.zero:
            c = F.neg(F.inv(w[-1]))
            return [F.mul(c, a) for a in w[:-1]]
    return None


def inverse(F, A: list[list]) -> list[list]:
    n = len(A)
    aug = [list(r) + e for r, e in zip(A, identity(F, n))]
    R, piv = rref(F, aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in R]


def char_poly(F, A: list[list]) -> list:
    """det(T*I - A) via reduction to upper Hessenberg form; coefficients low to high."""
    n = len(A)
    H = [list(r) for r in A]
    z = F.zero
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if H[i][m - 1] != z), None)
        if piv is None:
            continue
        if piv != m:
            H[m], H[piv] = H[piv], H[m]
            for row in H:
                row[m], row[piv] = row[piv], row[m]
        inv = F.inv(H[m][m - 1])
        for i in range(m + 1, n):
            if H[i][m - 1] != z:
                u = F.mul(H[i][m - 1], inv)
                H[i] = [F.sub(x, F.mul(u, y)) for x, y in zip(H[i], H[m])]
                for row in H:
                    row[m] = F.add(row[m], F.mul(u, row[i]))
    # characteristic polynomials of leading principal blocks
    from . import fieldpoly as fp

    polys = [[F.one]]
    for k in range(1, n + 1):
        pk = fp.mul(F, [F.neg(H[k - 1][k - 1]), F.one], polys[k - 1])
        t = F.one
        for i in range(1, k):
            t = F.mul(t, H[k - i][k - i - 1])
            term = fp.scale(F, polys[k - i - 1], F.mul(t, H[k - i - 1][k - 1]))
            pk = fp.sub(F, pk, term)
        polys.append(pk)
    return polys[n]
