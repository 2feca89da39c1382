"""Concrete unital rings and their exact elements.

Three ring families are supported, addressed by a small spec grammar that the
command line shares:

``zmod:<n>``
    integers modulo ``n`` (``n >= 2``) with the identity involution.
``mat:<k>:z<p>``
    ``k x k`` matrices over GF(p), ``p`` prime, with transpose as involution.
``mat:<k>:q``
    ``k x k`` matrices over the rationals, with transpose as involution.

Elements are immutable and carry a canonical payload (residue in ``[0, n)`` or
a row-major tuple of normalized scalars), so equality and hashing are
structural.
"""

from __future__ import annotations

import re
from functools import lru_cache
from math import gcd
from typing import Iterator, Optional

from . import linalg
from .errors import NotEnumerableError, RingSpecError

ENUMERATION_CAP = 100_000

_SPEC_RE = re.compile(r"^(?:zmod:(\d+)|mat:(\d+):(?:z(\d+)|(q)))$")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Element:
    """A value of a specific ring.  Supports ``+ - *``, ``**`` and mixing with ints."""

    __slots__ = ("ring", "payload", "_hash")

    def __init__(self, ring: "Ring", payload):
        self.ring = ring
        self.payload = payload
        self._hash = hash((ring.spec, payload))

    def _lift(self, other) -> "Element":
        if isinstance(other, Element):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ValueError(f"mixed rings {self.ring.spec} and {other.ring.spec}")
            return other
        if isinstance(other, int):
            return self.ring(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return Element(self.ring, self.ring._add(self.payload, other.payload))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return Element(self.ring, self.ring._sub(self.payload, other.payload))

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return Element(self.ring, self.ring._mul(self.payload, other.payload))

    def __rmul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other * self

    def __neg__(self):
        return Element(self.ring, self.ring._neg(self.payload))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in a ring")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def star(self) -> "Element":
        """Image under the ring involution."""
        return Element(self.ring, self.ring._star(self.payload))

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.payload == other.payload and self.ring == other.ring

    def __hash__(self):
        return self._hash

    def __str__(self):
        return self.ring.format(self)

    def __repr__(self):
        return f"<{self.ring.spec} {self.ring.format(self)}>"

    @property
    def is_zero(self) -> bool:
        return self == self.ring.zero


class Ring:
    """A unital ring.  Concrete subclasses implement the payload-level kernels."""

    spec: str
    cardinality: Optional[int]
    commutative: bool
    has_involution = True

    def __init__(self, cap: int = ENUMERATION_CAP):
        self.cap = cap
        self.enumerable = self.cardinality is not None and self.cardinality <= cap
        self.zero = Element(self, self._canon(0))
        self.one = Element(self, self._canon(1))

    # payload kernels
    def _canon(self, value):
        raise NotImplementedError

    def _add(self, x, y):
        raise NotImplementedError

    def _sub(self, x, y):
        raise NotImplementedError

    def _mul(self, x, y):
        raise NotImplementedError

    def _neg(self, x):
        raise NotImplementedError

    def _star(self, x):
        raise NotImplementedError

    def __call__(self, value) -> Element:
        if isinstance(value, Element):
            if value.ring != self:
                raise ValueError(f"element of {value.ring.spec} given to {self.spec}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return Element(self, self._canon(value))

    def __eq__(self, other):
        return isinstance(other, Ring) and other.spec == self.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"<ring {self.spec}>"

    def parse(self, text: str) -> Element:
        raise NotImplementedError

    def format(self, x: Element) -> str:
        raise NotImplementedError

    def require_enumerable(self) -> None:
        if not self.enumerable:
            if self.cardinality is None:
                raise NotEnumerableError(f"{self.spec} is infinite")
            raise NotEnumerableError(
                f"{self.spec} has {self.cardinality} elements, above the cap {self.cap}"
            )

    def elements(self) -> Iterator[Element]:
        """Every element exactly once, in index order."""
        self.require_enumerable()
        for i in range(self.cardinality):
            yield self.element_at(i)

    def element_at(self, i: int) -> Element:
        raise NotImplementedError

    def index_of(self, x: Element) -> int:
        raise NotImplementedError


class ModularRing(Ring):
    commutative = True

    def __init__(self, n: int, cap: int = ENUMERATION_CAP):
        if n < 2:
            raise RingSpecError(f"modulus must be at least 2, got {n}")
        self.n = n
        self.spec = f"zmod:{n}"
        self.cardinality = n
        super().__init__(cap)

    def _canon(self, value):
        return int(value) % self.n

    def _add(self, x, y):
        return (x + y) % self.n

    def _sub(self, x, y):
        return (x - y) % self.n

    def _mul(self, x, y):
        return x * y % self.n

    def _neg(self, x):
        return -x % self.n

    def _star(self, x):
        return x

    def parse(self, text: str) -> Element:
        text = text.strip()
        if not re.fullmatch(r"[+-]?\d+", text):
            raise RingSpecError(f"bad element literal {text!r} for {self.spec}")
        return Element(self, int(text) % self.n)

    def format(self, x: Element) -> str:
        return str(x.payload)

    def element_at(self, i: int) -> Element:
        return Element(self, i)

    def index_of(self, x: Element) -> int:
        return x.payload

    def solve_linear(self, c: int, r: int) -> Optional[int]:
        """Some ``x`` with ``c*x == r (mod n)``, or ``None``."""
        n = self.n
        c %= n
        r %= n
        g = gcd(c, n)
        if r % g:
            return None
        m = n // g
        if m == 1:
            return 0
        return (r // g) * pow(c // g, -1, m) % m


class MatrixRing(Ring):
    def __init__(self, k: int, field: linalg.Field, cap: int = ENUMERATION_CAP):
        if k < 1:
            raise RingSpecError(f"matrix size must be at least 1, got {k}")
        self.k = k
        self.field = field
        self.spec = f"mat:{k}:{field.name}"
        self.cardinality = None if field.order is None else field.order ** (k * k)
        self.commutative = k == 1
        super().__init__(cap)

    def _canon(self, value):
        F, k = self.field, self.k
        if isinstance(value, int):
            return tuple(
                tuple(F.norm(value) if i == j else F.zero for j in range(k)) for i in range(k)
            )
        rows = tuple(tuple(F.norm(x) for x in row) for row in value)
        if len(rows) != k or any(len(r) != k for r in rows):
            raise RingSpecError(f"expected a {k}x{k} matrix for {self.spec}")
        return rows

    def _add(self, x, y):
        return linalg.matadd(self.field, x, y)

    def _sub(self, x, y):
        return linalg.matsub(self.field, x, y)

    def _mul(self, x, y):
        return linalg.matmul(self.field, x, y)

    def _neg(self, x):
        F = self.field
        return tuple(tuple(F.norm(-v) for v in r) for r in x)

    def _star(self, x):
        return linalg.transpose(x)

    def parse(self, text: str) -> Element:
        s = re.sub(r"\s+", "", text)
        m = re.fullmatch(r"\[(\[[^\[\]]*\](?:,\[[^\[\]]*\])*)\]", s)
        if not m:
            raise RingSpecError(f"bad matrix literal {text!r}")
        rows = re.findall(r"\[([^\[\]]*)\]", m.group(1))
        try:
            entries = [[self.field.parse(t) for t in r.split(",")] for r in rows]
        except (ValueError, ZeroDivisionError) as exc:
            raise RingSpecError(f"bad scalar in {text!r}: {exc}") from None
        return Element(self, self._canon(entries))

    def format(self, x: Element) -> str:
        F = self.field
        return "[" + ",".join("[" + ",".join(F.format(v) for v in r) + "]" for r in x.payload) + "]"

    def element_at(self, i: int) -> Element:
        p, k = self.field.order, self.k
        digits = []
        for _ in range(k * k):
            i, r = divmod(i, p)
            digits.append(r)
        digits.reverse()
        return Element(self, tuple(tuple(digits[r * k:(r + 1) * k]) for r in range(k)))

    def index_of(self, x: Element) -> int:
        p = self.field.order
        i = 0
        for row in x.payload:
            for v in row:
                i = i * p + v
        return i

    def matrix(self, x: Element) -> linalg.Matrix:
        return x.payload


@lru_cache(maxsize=None)
def make_ring(spec: str, cap: int = ENUMERATION_CAP) -> Ring:
    """Build a ring from its spec string (``zmod:6``, ``mat:2:z2``, ``mat:2:q``)."""
    m = _SPEC_RE.match(spec.strip())
    if not m:
        raise RingSpecError(f"malformed ring spec {spec!r}")
    n, k, p, q = m.groups()
    if n is not None:
        return ModularRing(int(n), cap)
    k = int(k)
    if q:
        return MatrixRing(k, linalg.QQ, cap)
    p = int(p)
    if not _is_prime(p):
        raise RingSpecError(f"matrix scalars need a prime modulus, got {p}")
    return MatrixRing(k, linalg.PrimeField(p), cap)
