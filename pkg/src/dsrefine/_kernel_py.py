"""Pure-Python row reduction over F_p.

Reference implementation of the kernels in ``_kernel.pyx``; the two must
agree bit for bit.
"""


def rref_mod_p(rows, ncols, p):
    """Reduced row-echelon form of ``rows`` over F_p.

    Entries must already lie in ``[0, p)``.  Returns ``(basis, pivots)``
    with zero rows dropped, every pivot equal to 1 and pivot columns
    cleared above and below.
    """
    mat = [list(r) for r in rows]
    m = len(mat)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = r
        while piv < m and mat[piv][c] == 0:
            piv += 1
        if piv == m:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        row = mat[r]
        inv = pow(row[c], -1, p)
        if inv != 1:
            row = [(x * inv) % p for x in row]
            mat[r] = row
        for i in range(m):
            if i != r:
                f = mat[i][c]
                if f:
                    mat[i] = [(x - f * y) % p for x, y in zip(mat[i], row)]
        pivots.append(c)
        r += 1
    return mat[:r], pivots


def matmul_mod_p(a, b, p):
    """Product of two matrices given as lists of rows, reduced mod p."""
    cols = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) % p for col in cols] for row in a]
