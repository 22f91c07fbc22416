"""Exact linear algebra over the rationals and prime fields, plus integer
normal forms.

Matrices are plain row-major lists of lists.  Rational entries are
:class:`fractions.Fraction` (ints are accepted anywhere a rational is).
Nothing here ever touches floating point.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from sympy import isprime

from . import kernels

__all__ = [
    "Rat",
    "SmithForm",
    "to_rat",
    "rat_matrix",
    "shape",
    "transpose",
    "matmul",
    "identity",
    "integerize_rows",
    "rat_rank",
    "rref",
    "rat_kernel",
    "nullspace",
    "is_prime",
    "field_rank",
    "int_rank",
    "smith_form",
    "hermite_form",
    "integer_kernel",
    "in_integer_row_lattice",
]

Rat = Fraction


def to_rat(x):
    """Coerce to a Fraction; strings such as ``"-3/4"`` are parsed."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def rat_matrix(rows):
    return [[to_rat(x) for x in row] for row in rows]


def shape(M):
    if not M:
        return 0, 0
    return len(M), len(M[0])


def transpose(M, ncols=None):
    """Transpose; ``ncols`` gives the width of an empty ``M``."""
    if not M:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*M)]


def matmul(A, B):
    if not A:
        return []
    if not B:
        return [[] for _ in A]
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def integerize_rows(M):
    """Scale every row by the lcm of its denominators; rank is unchanged."""
    out = []
    for row in M:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def int_rank(M):
    """Rank over Q of an integer matrix (Bareiss)."""
    return kernels.bareiss_rank(M)


def rat_rank(M):
    """Rank over Q of a rational matrix."""
    if not M or not M[0]:
        return 0
    return kernels.bareiss_rank(integerize_rows(M))


def rref(M):
    """Reduced row echelon form over Q: returns ``(R, pivot_columns)``."""
    R = [[to_rat(x) for x in row] for row in M]
    nrows, ncols = shape(R)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        pv = R[r][c]
        R[r] = [x / pv for x in R[r]]
        for i in range(nrows):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return R, pivots


def nullspace(M, ncols=None):
    """Basis of the right kernel of ``M`` as a list of vectors."""
    n = shape(M)[1] if M else (ncols or 0)
    if not M:
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    R, pivots = rref(M)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row_idx, pc in enumerate(pivots):
            v[pc] = -R[row_idx][f]
        basis.append(v)
    return basis


def rat_kernel(M, ncols=None):
    """Kernel basis as the columns of an ``n x k`` matrix."""
    basis = nullspace(M, ncols)
    n = shape(M)[1] if M else (ncols or 0)
    return [[v[i] for v in basis] for i in range(n)]


def is_prime(p):
    return isinstance(p, int) and not isinstance(p, bool) and bool(isprime(p))


def field_rank(M, p):
    """Rank over GF(p).  Entries may be integers or rationals with
    denominators prime to ``p``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not M or not M[0]:
        return 0
    rows = []
    for row in M:
        out = []
        for x in row:
            if isinstance(x, Fraction):
                if x.denominator % p == 0:
                    raise ValueError(f"denominator of {x} vanishes mod {p}")
                out.append(x.numerator * pow(x.denominator, -1, p) % p)
            else:
                out.append(int(x) % p)
        rows.append(out)
    if p >= 2**31:
        from . import _pykernels
        return _pykernels.rank_mod_p(rows, p)
    return kernels.rank_mod_p(rows, p)


@dataclass(frozen=True)
class SmithForm:
    """``left * M * right`` is diagonal with the nonzero entries ``diag``."""

    diag: tuple
    left: tuple
    right: tuple

    @property
    def rank(self):
        return len(self.diag)

    def torsion(self):
        return tuple(d for d in self.diag if d > 1)


def _swap_rows(A, i, j):
    A[i], A[j] = A[j], A[i]


def _swap_cols(A, i, j):
    for row in A:
        row[i], row[j] = row[j], row[i]


def smith_form(M):
    """Smith normal form of an integer matrix with unimodular transforms."""
    A = [[int(x) for x in row] for row in M]
    m, n = shape(A)
    L = identity(m)
    R = identity(n)
    t = 0
    while t < min(m, n):
        # smallest nonzero entry in the trailing block becomes the pivot
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        _swap_rows(A, t, i)
        _swap_rows(L, t, i)
        _swap_cols(A, t, j)
        _swap_cols(R, t, j)
        done = False
        while not done:
            done = True
            pv = A[t][t]
            for i in range(t + 1, m):
                q = A[i][t] // pv
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                    L[i] = [a - q * b for a, b in zip(L[i], L[t])]
            for j in range(t + 1, n):
                q = A[t][j] // pv
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                    for row in R:
                        row[j] -= q * row[t]
            # leftover remainders: move the smallest one into the pivot slot
            cand = None
            for i in range(t + 1, m):
                if A[i][t] and (cand is None or abs(A[i][t]) < abs(cand[2])):
                    cand = ("r", i, A[i][t])
            for j in range(t + 1, n):
                if A[t][j] and (cand is None or abs(A[t][j]) < abs(cand[2])):
                    cand = ("c", j, A[t][j])
            if cand is not None:
                done = False
                if cand[0] == "r":
                    _swap_rows(A, t, cand[1])
                    _swap_rows(L, t, cand[1])
                else:
                    _swap_cols(A, t, cand[1])
                    _swap_cols(R, t, cand[1])
                continue
            # pivot must divide the whole trailing block
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % pv:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is not None:
                A[t] = [a + b for a, b in zip(A[t], A[bad])]
                L[t] = [a + b for a, b in zip(L[t], L[bad])]
                done = False
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            L[t] = [-a for a in L[t]]
        t += 1
    diag = tuple(A[i][i] for i in range(t))
    return SmithForm(diag, tuple(map(tuple, L)), tuple(map(tuple, R)))


def hermite_form(M):
    """Row-style Hermite normal form: returns ``(H, U)`` with ``U M = H``.

    Pivots are positive with the entries above each pivot in ``[0, pivot)``;
    zero rows sit at the bottom.
    """
    H = [[int(x) for x in row] for row in M]
    m, n = shape(H)
    U = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(H[i][c]))
            _swap_rows(H, r, piv)
            _swap_rows(U, r, piv)
            pv = H[r][c]
            clean = True
            for i in range(r + 1, m):
                q = H[i][c] // pv
                if q:
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
                if H[i][c]:
                    clean = False
            if clean:
                break
        if not H[r][c]:
            continue
        if H[r][c] < 0:
            H[r] = [-a for a in H[r]]
            U[r] = [-a for a in U[r]]
        pv = H[r][c]
        for i in range(r):
            q = H[i][c] // pv
            if q:
                H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                U[i] = [a - q * b for a, b in zip(U[i], U[r])]
        r += 1
    return H, U


def integer_kernel(M, ncols=None):
    """A Z-basis of ``{z in Z^n : M z = 0}`` for a rational matrix ``M``."""
    n = shape(M)[1] if M else (ncols or 0)
    rows = integerize_rows(M) if M else []
    if not rows:
        return identity(n)
    # U * M^T = H; rows of U that land on zero rows of H span the kernel
    H, U = hermite_form(transpose(rows))
    return [U[i] for i in range(n) if not any(H[i])]


def in_integer_row_lattice(v, H):
    """Whether the rational vector ``v`` is an integer combination of the
    rows of ``H``, which must be in Hermite form."""
    rem = [to_rat(x) for x in v]
    for row in H:
        c = next((j for j, x in enumerate(row) if x), None)
        if c is None:
            break
        q = rem[c] / row[c]
        if q.denominator != 1:
            return False
        if q:
            rem = [a - q * b for a, b in zip(rem, row)]
    return not any(rem)
