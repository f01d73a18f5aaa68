"""Integer lattice normal forms used by quotient-group constructions.

Relation matrices here are presented row-wise: a group is Z^k modulo the
row span of its relation matrix.  ``row_echelon_lattice`` compresses a tall
sparse relation list to a square triangular basis, and ``diagonalize``
finishes the job with tracked column operations so cosets can be mapped to
and from canonical coordinates.
"""

from __future__ import annotations


class LatticeError(Exception):
    pass


def row_echelon_lattice(rows: list[list[int]], width: int) -> list[list[int]]:
    """Reduce relation rows to a square upper-triangular lattice basis.

    Returns a ``width x width`` matrix whose row span equals the span of the
    input rows.  Raises ``LatticeError`` if the lattice does not have full
    rank (the quotient group would be infinite).
    """
    basis: list[list[int] | None] = [None] * width

    def insert(vec: list[int]) -> None:
        while True:
            lead = next((j for j, v in enumerate(vec) if v != 0), None)
            if lead is None:
                return
            if vec[lead] < 0:
                vec = [-v for v in vec]
                continue
            cur = basis[lead]
            if cur is None:
                basis[lead] = vec
                return
            if cur[lead] <= vec[lead]:
                q = vec[lead] // cur[lead]
                vec = [v - q * c for v, c in zip(vec, cur)]
            else:
                basis[lead] = vec
                vec, cur = cur, vec
                q = vec[lead] // cur[lead]
                vec = [v - q * c for v, c in zip(vec, cur)]

    for row in rows:
        if len(row) != width:
            raise LatticeError(f"relation row has length {len(row)}, expected {width}")
        insert(list(row))

    out = []
    for j in range(width):
        row = basis[j]
        if row is None:
            raise LatticeError(f"lattice is rank-deficient at column {j}")
        out.append(row)
    return out


def diagonalize(mat: list[list[int]]) -> tuple[list[int], list[list[int]], list[list[int]]]:
    """Diagonalize a square integer matrix by row and column operations.

    Returns ``(diag, P, P_inv)`` where column operations are accumulated in
    ``P`` (and inverted in ``P_inv``) so that ``Z^k / rowspan(mat)`` is
    isomorphic to the direct sum of ``Z_diag[i]`` via ``x -> (x @ P) mod diag``
    with coset representatives recovered by ``y -> y @ P_inv``.

    Row operations do not change the row span, so they are not tracked.
    """
    k = len(mat)
    m = [list(r) for r in mat]
    p = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    p_inv = [[1 if i == j else 0 for j in range(k)] for i in range(k)]

    def swap_cols(a: int, b: int) -> None:
        for row in m:
            row[a], row[b] = row[b], row[a]
        for row in p:
            row[a], row[b] = row[b], row[a]
        p_inv[a], p_inv[b] = p_inv[b], p_inv[a]

    def add_col(dst: int, src: int, q: int) -> None:
        # column dst += q * column src; inverse is row src -= q * row dst
        for row in m:
            row[dst] += q * row[src]
        for row in p:
            row[dst] += q * row[src]
        p_inv[src] = [a - q * b for a, b in zip(p_inv[src], p_inv[dst])]

    for t in range(k):
        while True:
            pivot = None
            best = None
            for i in range(t, k):
                for j in range(t, k):
                    v = abs(m[i][j])
                    if v != 0 and (best is None or v < best):
                        best = v
                        pivot = (i, j)
            if pivot is None:
                raise LatticeError("matrix is singular; quotient group is infinite")
            pi, pj = pivot
            if pi != t:
                m[pi], m[t] = m[t], m[pi]
            if pj != t:
                swap_cols(pj, t)
            if m[t][t] < 0:
                m[t] = [-v for v in m[t]]
            dirty = False
            for i in range(t + 1, k):
                if m[i][t] != 0:
                    q = m[i][t] // m[t][t]
                    m[i] = [a - q * b for a, b in zip(m[i], m[t])]
                    if m[i][t] != 0:
                        dirty = True
            for j in range(t + 1, k):
                if m[t][j] != 0:
                    q = m[t][j] // m[t][t]
                    add_col(j, t, -q)
                    if m[t][j] != 0:
                        dirty = True
            if not dirty and all(m[i][t] == 0 for i in range(t + 1, k)) and all(
                m[t][j] == 0 for j in range(t + 1, k)
            ):
                break

    return [m[i][i] for i in range(k)], p, p_inv


def quotient_coordinates(
    relation_rows: list[list[int]], width: int
) -> tuple[list[int], list[list[int]], list[list[int]]]:
    """Canonical coordinates for ``Z^width`` modulo the span of the rows.

    Returns ``(moduli, P, P_inv)``: the class of an integer vector ``x`` has
    canonical coordinates ``(x @ P) mod moduli`` and a coset representative
    of coordinates ``y`` is ``y @ P_inv``.
    """
    basis = row_echelon_lattice(relation_rows, width)
    return diagonalize(basis)


def apply_row_vector(x: list[int], mat: list[list[int]]) -> list[int]:
    """Row vector times matrix, ``x @ mat``."""
    k = len(mat[0])
    out = [0] * k
    for xi, row in zip(x, mat):
        if xi:
            for j in range(k):
                out[j] += xi * row[j]
    return out
