"""Independent reference implementations used to cross-check the package.

Everything here is deliberately written from first principles (plain
Gaussian elimination over Fraction, greedy Weyl-word descent, exhaustive
product loops) rather than by calling into parapic internals, so a bug
in the package cannot hide in its own oracle.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd


def rational_rank(rows) -> int:
    """Rank of a rational matrix by row reduction."""
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = m[row][col]
        m[row] = [x / inv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
        if row == len(m):
            break
    return rank


def left_null_space(rows):
    """Basis of {x : x A = 0} for an integer matrix, as Fraction rows."""
    n = len(rows)
    ncols = len(rows[0])
    # left null space of A = null space of A^T
    at = [[Fraction(rows[r][c]) for r in range(n)] for c in range(ncols)]
    pivots = []
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, len(at)) if at[r][col] != 0), None)
        if piv is None:
            continue
        at[row], at[piv] = at[piv], at[row]
        inv = at[row][col]
        at[row] = [x / inv for x in at[row]]
        for r in range(len(at)):
            if r != row and at[r][col] != 0:
                f = at[r][col]
                at[r] = [a - f * b for a, b in zip(at[r], at[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -at[r][fc]
        basis.append(v)
    return basis


def primitive_positive_left_null(rows):
    """The unique primitive positive integer left null covector.

    Raises AssertionError unless the left null space is exactly
    one-dimensional with a strictly sign-definite generator.
    """
    basis = left_null_space(rows)
    assert len(basis) == 1, f"left null space has dimension {len(basis)}"
    v = basis[0]
    denlcm = 1
    for x in v:
        denlcm = denlcm * x.denominator // gcd(denlcm, x.denominator)
    ints = [int(x * denlcm) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    if all(x < 0 for x in ints):
        ints = [-x for x in ints]
    assert all(x > 0 for x in ints), f"null covector not positive: {ints}"
    return tuple(ints)


def weyl_longest_involution(cartan) -> dict[int, int]:
    """The diagram involution induced by minus the longest Weyl element.

    Input is a *finite* Cartan matrix (rows/cols indexed 0..l-1).  The
    longest element is found by greedy descent from rho in the
    fundamental-weight coordinates: while some coordinate is positive,
    apply that simple reflection.  The recorded word is then applied to
    each simple root; -w0(alpha_i) is again simple and the induced index
    map is returned.
    """
    l = len(cartan)
    lam = [1] * l
    word = []
    guard = 0
    while True:
        i = next((k for k in range(l) if lam[k] > 0), None)
        if i is None:
            break
        c = lam[i]
        lam = [lam[k] - c * cartan[k][i] for k in range(l)]
        word.append(i)
        guard += 1
        assert guard <= 4 * l * l + 16, "descent did not terminate"
    cols = [[cartan[k][j] for k in range(l)] for j in range(l)]
    out = {}
    for i in range(l):
        x = list(cols[i])
        for j in word:
            c = x[j]
            x = [x[k] - c * cartan[k][j] for k in range(l)]
        neg = [-v for v in x]
        matches = [j for j in range(l) if cols[j] == neg]
        assert len(matches) == 1, f"-w0(alpha_{i}) is not a simple root"
        out[i] = matches[0]
    return out


def a_series_reversal_involution(l: int) -> dict[int, int]:
    """Sanity anchor: conjugation by the order-reversing permutation.

    In the symmetric group on l+1 letters the longest element is the
    full reversal; conjugating the adjacent transposition s_i by it
    gives s_{l+1-i}.  Computed here with explicit permutation
    arithmetic, 0-based output over 0..l-1.
    """
    n = l + 1

    def comp(p, q):
        return tuple(p[q[i]] for i in range(n))

    gens = []
    for i in range(l):
        t = list(range(n))
        t[i], t[i + 1] = t[i + 1], t[i]
        gens.append(tuple(t))
    w0 = tuple(range(n - 1, -1, -1))
    out = {}
    for i, g in enumerate(gens):
        c = comp(comp(w0, g), w0)  # w0 is an involution
        out[i] = gens.index(c)
    return out


def brute_identity_tuples(elements, class_reps, connected_only: bool = False):
    """Exhaustive product check over conjugacy-class pools.

    ``elements`` is the full list of group elements as 1-based image
    tuples; ``class_reps`` one representative per slot.  Returns the
    list of tuples whose ordered product (later entries applied first)
    is the identity, optionally keeping only tuples whose entries
    multiplicatively generate the whole element set.
    """
    elements = tuple(elements)
    deg = len(elements[0])
    ident = tuple(range(1, deg + 1))

    def comp(p, q):
        return tuple(p[q[i] - 1] for i in range(deg))

    def inv(p):
        out = [0] * deg
        for i, v in enumerate(p):
            out[v - 1] = i + 1
        return tuple(out)

    def cls(rep):
        return sorted({comp(comp(g, rep), inv(g)) for g in elements})

    def closure(seed):
        gen = set(seed) | {ident}
        changed = True
        while changed:
            changed = False
            for a in list(gen):
                for b in list(gen):
                    c = comp(a, b)
                    if c not in gen:
                        gen.add(c)
                        changed = True
        return gen

    pools = [cls(r) for r in class_reps]
    hits = []
    for cand in itertools.product(*pools):
        acc = ident
        for p in cand:
            acc = comp(acc, p)
        if acc != ident:
            continue
        if connected_only and len(closure(cand)) != len(elements):
            continue
        hits.append(cand)
    return hits


def charge_difference_kernel_rank(d) -> int:
    """Rank of ker(charge-difference map) on the direct-sum lattice.

    Basis vectors are (point, facet vertex) pairs; row i is the
    functional charge(point i) - charge(point i+1).  The kernel lattice
    rank equals the rational kernel dimension.
    """
    cols = []
    for idx, p in enumerate(d.points):
        labels = p.affine_type.dual_labels
        for v in sorted(p.facet):
            cols.append((idx, labels[v]))
    n = len(d.points)
    rows = []
    for i in range(n - 1):
        row = []
        for idx, lab in cols:
            if idx == i:
                row.append(lab)
            elif idx == i + 1:
                row.append(-lab)
            else:
                row.append(0)
        rows.append(row)
    if not rows:
        return len(cols)
    return len(cols) - rational_rank(rows)
