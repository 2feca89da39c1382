"""Exact linear algebra over a prime field GF(p) or the rationals.

Matrices are tuples of row tuples holding field scalars (``int`` residues for
GF(p), :class:`fractions.Fraction` for Q).  Everything here is exact: Gaussian
elimination never rounds, and subspaces are identified by their reduced row
echelon basis so that equality of subspaces is equality of keys.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

Matrix = tuple  # tuple[tuple[scalar, ...], ...]


class Field:
    """Scalar field; subclasses fix the representation of elements."""

    name: str
    order: Optional[int]  # None for an infinite field
    zero = 0
    one = 1

    def norm(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, x) -> str:
        return str(x)

    def scalars(self) -> Iterable:
        raise TypeError(f"field {self.name} is not finite")


class PrimeField(Field):
    def __init__(self, p: int):
        self.p = p
        self.order = p
        self.name = f"z{p}"

    def norm(self, x):
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x):
        return pow(x, -1, self.p)

    def parse(self, text: str):
        return int(text) % self.p

    def scalars(self):
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("z", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class RationalField(Field):
    order = None
    name = "q"

    def norm(self, x):
        return Fraction(x)

    def inv(self, x):
        return 1 / Fraction(x)

    def parse(self, text: str):
        return Fraction(text)

    def format(self, x) -> str:
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("q")

    def __repr__(self):
        return "RationalField()"


QQ = RationalField()


# --- matrices ----------------------------------------------------------------

def identity(F: Field, k: int) -> Matrix:
    return tuple(tuple(F.one if i == j else F.zero for j in range(k)) for i in range(k))


def zeros(F: Field, rows: int, cols: int) -> Matrix:
    return tuple((F.zero,) * cols for _ in range(rows))


def transpose(A: Matrix) -> Matrix:
    return tuple(zip(*A)) if A else A


def matmul(F: Field, A: Matrix, B: Matrix) -> Matrix:
    Bt = transpose(B)
    return tuple(
        tuple(F.norm(sum(x * y for x, y in zip(row, col))) for col in Bt) for row in A
    )


def matadd(F: Field, A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(F.norm(x + y) for x, y in zip(r, s)) for r, s in zip(A, B))


def matsub(F: Field, A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(F.norm(x - y) for x, y in zip(r, s)) for r, s in zip(A, B))


# --- elimination -------------------------------------------------------------

def rref(F: Field, rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form.  Returns ``(nonzero_rows, pivot_columns)``."""
    M = [[F.norm(x) for x in r] for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        s = F.inv(M[r][c])
        M[r] = [F.norm(x * s) for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [F.norm(x - f * y) for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(F: Field, rows: Sequence[Sequence]) -> int:
    return len(rref(F, rows)[1])


def nullspace(F: Field, A: Sequence[Sequence], ncols: int) -> list[tuple]:
    """Basis of ``{v : A v = 0}``."""
    R, pivots = rref(F, A)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [F.zero] * ncols
        v[f] = F.one
        for row, pc in zip(R, pivots):
            v[pc] = F.norm(-row[f])
        basis.append(tuple(v))
    return basis


def solve(F: Field, A: Sequence[Sequence], b: Sequence) -> Optional[tuple]:
    """One solution of ``A x = b`` (free variables set to zero), or ``None``."""
    if not A:
        return ()
    n = len(A[0])
    aug = [list(row) + [rhs] for row, rhs in zip(A, b)]
    R, pivots = rref(F, aug)
    if pivots and pivots[-1] == n:
        return None
    x = [F.zero] * n
    for row, pc in zip(R, pivots):
        x[pc] = row[n]
    return tuple(x)


def inverse(F: Field, A: Matrix) -> Optional[Matrix]:
    k = len(A)
    aug = [list(row) + list(e) for row, e in zip(A, identity(F, k))]
    R, pivots = rref(F, aug)
    if pivots[:k] != list(range(k)):
        return None
    return tuple(tuple(row[k:]) for row in R)


# --- subspaces ---------------------------------------------------------------

def span_key(F: Field, vectors: Iterable[Sequence], dim: int) -> tuple:
    """Canonical key of the span of ``vectors`` inside ``F^dim``."""
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        return ()
    R, _ = rref(F, vecs)
    return tuple(tuple(r) for r in R)


def span_contains(F: Field, big: tuple, small: tuple) -> bool:
    if not small:
        return True
    return rank(F, list(big) + list(small)) == len(big)


def span_sum_dim(F: Field, u: tuple, v: tuple) -> int:
    if not u and not v:
        return 0
    return rank(F, list(u) + list(v))


def vector_in_span(F: Field, key: tuple, v: Sequence) -> bool:
    if all(x == 0 for x in v):
        return True
    return span_contains(F, key, (tuple(v),))


# --- matrix equations --------------------------------------------------------

def solve_matrix_equations(F: Field, k: int, equations) -> Optional[Matrix]:
    """Solve a linear system in one unknown ``k x k`` matrix ``X``.

    ``equations`` is a list of ``(terms, C)`` where ``terms`` is a list of
    ``(A, B)`` pairs and each equation reads ``sum(A @ X @ B) == C``.  ``None``
    for ``A`` or ``B`` stands for the identity.  Returns one solution or
    ``None`` when the system is inconsistent.
    """
    I = identity(F, k)
    rows = []
    rhs = []
    for terms, C in equations:
        terms = [(I if A is None else A, I if B is None else B) for A, B in terms]
        for i in range(k):
            for j in range(k):
                coeff = [F.zero] * (k * k)
                for A, B in terms:
                    for s in range(k):
                        a = A[i][s]
                        if a == 0:
                            continue
                        for t in range(k):
                            if B[t][j] != 0:
                                coeff[s * k + t] += a * B[t][j]
                rows.append([F.norm(c) for c in coeff])
                rhs.append(C[i][j])
    x = solve(F, rows, rhs)
    if x is None:
        return None
    return tuple(tuple(x[i * k:(i + 1) * k]) for i in range(k))


def rank_factorization(F: Field, A: Matrix) -> tuple[Matrix, Matrix]:
    """``A = C @ G`` with ``C`` of full column rank and ``G`` of full row rank."""
    R, pivots = rref(F, A)
    C = tuple(tuple(row[c] for c in pivots) for row in A)
    G = tuple(tuple(r) for r in R)
    return C, G
