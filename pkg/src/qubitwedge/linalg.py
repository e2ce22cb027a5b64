"""Exact sparse linear algebra and univariate polynomials over the scalar field.

Vectors are dicts ``{index: scalar}`` and sparse matrices are row maps
``{row: {col: scalar}}``.  Polynomials are lists of coefficients, lowest degree
first, with no trailing zeros (the zero polynomial is ``[]``).
"""
from __future__ import annotations

from .scalars import ONE, ZERO


class InconsistentState(ArithmeticError):
    """An internal exact identity failed; indicates a bug, not bad input."""


# -- sparse vectors and matrices --------------------------------------------------

def rows_from_entries(entries: dict) -> dict:
    rows: dict = {}
    for (r, c), v in entries.items():
        rows.setdefault(r, {})[c] = v
    return rows


def matvec(rows: dict, v: dict) -> dict:
    out = {}
    for r, row in rows.items():
        acc = None
        for c, a in row.items():
            b = v.get(c)
            if b is not None:
                acc = a * b if acc is None else acc + a * b
        if acc:
            out[r] = acc
    return out


def axpy(a, x: dict, y: dict) -> dict:
    """a*x + y as a new dict."""
    out = dict(y)
    for k, v in x.items():
        w = out.get(k)
        w = a * v if w is None else w + a * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def scale(a, x: dict) -> dict:
    return {k: a * v for k, v in x.items()} if a else {}


def connected_components(rows: dict, n: int) -> list:
    """Index sets of the undirected connected components of the sparsity graph."""
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for r, row in rows.items():
        for c in row:
            ra, rb = find(r), find(c)
            if ra != rb:
                parent[ra] = rb
    groups: dict = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda g: g[0])


def restrict(rows: dict, idx) -> list:
    """Dense square block of a sparse matrix on the index list ``idx``."""
    pos = {j: k for k, j in enumerate(idx)}
    out = [[ZERO] * len(idx) for _ in idx]
    for i, r in enumerate(idx):
        for c, v in rows.get(r, {}).items():
            k = pos.get(c)
            if k is None:
                if v:
                    raise InconsistentState("block is not invariant")
                continue
            out[i][k] = v
    return out


def dense_mul(a: list, b: list) -> list:
    m, p = len(b), len(b[0]) if b else 0
    bt = [[b[k][j] for k in range(m)] for j in range(p)]
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        new = []
        for col in bt:
            acc = ZERO
            for k, x in nz:
                y = col[k]
                if y:
                    acc = acc + x * y
            new.append(acc)
        out.append(new)
    return out


def dense_rank(m: list) -> int:
    """Rank by Gaussian elimination over the field."""
    rows = [list(r) for r in m if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rk = 0
    for col in range(ncols):
        piv = next((i for i in range(rk, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        p = rows[rk]
        inv = ONE / p[col]
        for i in range(rk + 1, len(rows)):
            f = rows[i][col]
            if f:
                f = f * inv
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], p)]
        rk += 1
        if rk == len(rows):
            break
    return rk


def is_zero_matrix(m: list) -> bool:
    return not any(x for row in m for x in row)


def hessenberg_charpoly(m: list) -> list:
    """Characteristic polynomial det(xI - m) via reduction to upper Hessenberg form."""
    n = len(m)
    h = [list(r) for r in m]
    for k in range(n - 2):
        piv = next((i for i in range(k + 1, n) if h[i][k]), None)
        if piv is None:
            continue
        if piv != k + 1:
            h[piv], h[k + 1] = h[k + 1], h[piv]
            for row in h:
                row[piv], row[k + 1] = row[k + 1], row[piv]
        inv = ONE / h[k + 1][k]
        for i in range(k + 2, n):
            f = h[i][k]
            if not f:
                continue
            f = f * inv
            h[i] = [x - f * y if y else x for x, y in zip(h[i], h[k + 1])]
            for row in h:
                if row[i]:
                    row[k + 1] = row[k + 1] + f * row[i]
    # recurrence on leading principal minors
    polys = [[ONE]]
    for k in range(n):
        p = poly_sub(poly_mul([-h[k][k], ONE], polys[k]), [])
        prod = ONE
        for i in range(k - 1, -1, -1):
            prod = prod * h[i + 1][i]
            if not prod:
                break
            c = h[i][k]
            if c:
                p = poly_sub(p, poly_scale(prod * c, polys[i]))
        polys.append(p)
    return polys[n]


# -- polynomials ------------------------------------------------------------------

def trim(p: list) -> list:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def poly_add(p: list, q: list) -> list:
    if len(p) < len(q):
        p, q = q, p
    return trim([a + q[i] if i < len(q) else a for i, a in enumerate(p)])


def poly_neg(p: list) -> list:
    return [-a for a in p]


def poly_sub(p: list, q: list) -> list:
    return poly_add(p, poly_neg(q))


def poly_scale(c, p: list) -> list:
    return trim([c * a for a in p]) if c else []


def poly_mul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] = out[i + j] + a * b
    return trim(out)


def poly_divmod(p: list, q: list) -> tuple:
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = trim(p)
    if len(r) < len(q):
        return [], r
    inv = ONE / q[-1]
    quo = [ZERO] * (len(r) - len(q) + 1)
    while len(r) >= len(q):
        c = r[-1] * inv
        shift = len(r) - len(q)
        quo[shift] = c
        r = r[:-1]
        for i in range(len(q) - 1):
            if q[i]:
                r[shift + i] = r[shift + i] - c * q[i]
        r = trim(r)
    return trim(quo), r


def poly_mod(p: list, q: list) -> list:
    return poly_divmod(p, q)[1]


def monic(p: list) -> list:
    p = trim(p)
    if not p:
        return p
    inv = ONE / p[-1]
    return [a * inv for a in p[:-1]] + [ONE]


def poly_gcd(p: list, q: list) -> list:
    p, q = trim(p), trim(q)
    while q:
        p, q = q, poly_mod(p, q)
    return monic(p)


def poly_deriv(p: list) -> list:
    return trim([a * k for k, a in enumerate(p)][1:])


def squarefree_part(p: list) -> list:
    return monic(poly_divmod(p, poly_gcd(p, poly_deriv(p)))[0])


def poly_inv_mod(a: list, m: list) -> list:
    """b with a*b = 1 mod m; raises if a is not a unit."""
    r0, r1 = trim(m), poly_mod(a, m)
    s0, s1 = [], [ONE]
    while r1:
        quo, rem = poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, poly_sub(s0, poly_mul(quo, s1))
    if len(r0) != 1:
        raise InconsistentState("polynomial is not invertible modulo the modulus")
    return poly_mod(poly_scale(ONE / r0[0], s0), m)


def poly_compose_mod(g: list, s: list, m: list) -> list:
    """g(s) mod m by Horner."""
    acc: list = []
    for c in reversed(g):
        acc = poly_mod(poly_add(poly_mul(acc, s), [c] if c else []), m)
    return acc


def semisimple_polynomial(mu: list) -> list:
    """q with q(M) the semisimple part of any M annihilated by ``mu``.

    Newton iteration s <- s - g(s)/g'(s) modulo ``mu`` on the squarefree part g.
    """
    g = squarefree_part(mu)
    dg = poly_deriv(g)
    s = poly_mod([ZERO, ONE], mu)
    for _ in range(len(mu) + 1):
        gs = poly_compose_mod(g, s, mu)
        if not gs:
            return s
        step = poly_mod(poly_mul(gs, poly_inv_mod(poly_compose_mod(dg, s, mu), mu)), mu)
        s = poly_sub(s, step)
    raise InconsistentState("Newton lift did not terminate")


def krylov_minpoly(rows: dict, v: dict) -> list:
    """Monic minimal polynomial of ``v`` under the sparse matrix ``rows``."""
    basis = []          # (pivot index, vector, combo over Krylov vectors)
    w = dict(v)
    k = 0
    while True:
        combo = {k: ONE}
        vec = dict(w)
        for piv, bvec, bcombo in basis:
            c = vec.get(piv)
            if c:
                vec = axpy(-c, bvec, vec)
                combo = axpy(-c, bcombo, combo)
        if not vec:
            return [combo.get(j, ZERO) for j in range(k + 1)]
        piv = min(vec)
        inv = ONE / vec[piv]
        basis.append((piv, scale(inv, vec), scale(inv, combo)))
        w = matvec(rows, w)
        k += 1


def poly_apply(rows: dict, q: list, v: dict) -> dict:
    """q(M) v by Horner with sparse mat-vecs."""
    acc: dict = {}
    for c in reversed(q):
        acc = matvec(rows, acc) if acc else {}
        if c:
            acc = axpy(c, v, acc)
    return acc
