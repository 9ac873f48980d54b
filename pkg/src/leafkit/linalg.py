"""Exact dense linear algebra over QQ or GF(p)."""

from __future__ import annotations


def rref(rows, ncols, dom):
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    p = dom.characteristic
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = dom.inv(m[r][c])
        row = [dom.normalize(v * inv) for v in m[r]]
        m[r] = row
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                mi = m[i]
                if p:
                    m[i] = [(a - f * b) % p for a, b in zip(mi, row)]
                else:
                    m[i] = [a - f * b for a, b in zip(mi, row)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows, ncols, dom):
    """Basis of {v : rows . v = 0}, one vector per free column, in column order."""
    red, pivots = rref(rows, ncols, dom)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [dom.zero] * ncols
        v[f] = dom.one
        for row, pc in zip(red, pivots):
            if row[f]:
                v[pc] = dom.normalize(-row[f])
        basis.append(v)
    return basis


def row_space(rows, ncols, dom):
    """RREF basis of the span of ``rows``."""
    return rref(rows, ncols, dom)[0]


def mat_vec(mat, vec, dom):
    return [dom.normalize(sum((a * b for a, b in zip(row, vec)), dom.zero)) for row in mat]
