"""Finite unital rings as explicit operation tables, with exact element-level predicates.

Elements of a ring of size n are the indices 0..n-1.  The additive and
multiplicative structure is carried entirely by two n x n tables; labels are
display strings and never participate in computation.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence

from .errors import InvalidRingError

__all__ = [
    "Law",
    "AxiomViolation",
    "ElementSet",
    "FiniteRing",
    "verify_axioms",
    "power",
    "is_nilpotent",
    "nilradical",
    "is_reduced",
    "is_unit",
    "units",
    "regular_central",
    "central_idempotents",
    "split_by_central_idempotent",
    "is_commutative",
    "is_semicommutative_ring",
]


class Law(Enum):
    """Ring axioms in the order the verifier scans them."""

    ADD_COMM = "ADD_COMM"
    ADD_ASSOC = "ADD_ASSOC"
    ADD_IDENTITY = "ADD_IDENTITY"
    ADD_INVERSE = "ADD_INVERSE"
    MUL_ASSOC = "MUL_ASSOC"
    MUL_IDENTITY = "MUL_IDENTITY"
    DISTRIB_L = "DISTRIB_L"
    DISTRIB_R = "DISTRIB_R"
    RANGE = "RANGE"


@dataclass(frozen=True)
class AxiomViolation:
    """First failing law found by the exhaustive scan, with its witness indices.

    The witness holds up to three element indices, in the scan's loop order.
    RANGE violations carry the offending table position instead.
    """

    law: Law
    witness: tuple[int, ...]


def _scan_tables(add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]]) -> Optional[AxiomViolation]:
    """Exhaustive O(n^3) axiom scan; returns the first violation in canonical order."""
    n = len(add)
    # Structural well-formedness first: nothing else can be evaluated without it.
    for table in (add, mul):
        if len(table) != n:
            return AxiomViolation(Law.RANGE, ())
        for i, row in enumerate(table):
            if len(row) != n:
                return AxiomViolation(Law.RANGE, (i,))
            for j, v in enumerate(row):
                if not isinstance(v, int) or not (0 <= v < n):
                    return AxiomViolation(Law.RANGE, (i, j))
    if n < 2:
        return AxiomViolation(Law.RANGE, ())

    rng = range(n)
    for a in rng:
        for b in rng:
            if add[a][b] != add[b][a]:
                return AxiomViolation(Law.ADD_COMM, (a, b))
    for a in rng:
        for b in rng:
            ab = add[a][b]
            row_a = add[a]
            for c in rng:
                if add[ab][c] != row_a[add[b][c]]:
                    return AxiomViolation(Law.ADD_ASSOC, (a, b, c))
    zero = _find_add_identity(add)
    if zero is None:
        return AxiomViolation(Law.ADD_IDENTITY, ())
    for a in rng:
        if zero not in add[a]:
            return AxiomViolation(Law.ADD_INVERSE, (a,))
    for a in rng:
        row_a = mul[a]
        for b in rng:
            ab = mul[a][b]
            row_b = mul[b]
            for c in rng:
                if mul[ab][c] != row_a[row_b[c]]:
                    return AxiomViolation(Law.MUL_ASSOC, (a, b, c))
    one = _find_mul_identity(mul)
    if one is None or one == zero:
        return AxiomViolation(Law.MUL_IDENTITY, ())
    for a in rng:
        row_a = mul[a]
        for b in rng:
            for c in rng:
                if row_a[add[b][c]] != add[row_a[b]][row_a[c]]:
                    return AxiomViolation(Law.DISTRIB_L, (a, b, c))
    for a in rng:
        for b in rng:
            ab = add[a][b]
            for c in rng:
                if mul[ab][c] != add[mul[a][c]][mul[b][c]]:
                    return AxiomViolation(Law.DISTRIB_R, (a, b, c))
    return None


def _find_add_identity(add: Sequence[Sequence[int]]) -> Optional[int]:
    n = len(add)
    for z in range(n):
        if all(add[z][x] == x for x in range(n)):
            return z
    return None


def _find_mul_identity(mul: Sequence[Sequence[int]]) -> Optional[int]:
    n = len(mul)
    for e in range(n):
        if all(mul[e][x] == x and mul[x][e] == x for x in range(n)):
            return e
    return None


def verify_axioms(add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]]) -> Optional[AxiomViolation]:
    """Check candidate tables against every ring axiom; None means the tables pass.

    The scan is deterministic: laws in the order of the Law enum, witnesses
    lexicographically smallest within each law.
    """
    return _scan_tables(add, mul)


@dataclass(eq=False)
class FiniteRing:
    """A finite unital ring; immutable after construction.

    Do not mutate the tables.  Equality is object identity; structural
    comparison goes through digest().
    """

    size: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int
    one: int
    labels: Optional[tuple[str, ...]] = None
    provenance: str = "table"
    structure: Optional[tuple] = None
    neg: tuple[int, ...] = field(init=False, repr=False)
    _digest: Optional[str] = field(default=None, init=False, repr=False)

    def __post_init__(self) -> None:
        zero = self.zero
        self.neg = tuple(self.add[x].index(zero) for x in range(self.size))

    @classmethod
    def from_tables(
        cls,
        add: Sequence[Sequence[int]],
        mul: Sequence[Sequence[int]],
        *,
        labels: Optional[Sequence[str]] = None,
        provenance: str = "table",
        structure: Optional[tuple] = None,
    ) -> "FiniteRing":
        """Validate tables exhaustively and build the ring; raises InvalidRingError."""
        violation = verify_axioms(add, mul)
        if violation is not None:
            raise InvalidRingError(violation)
        add_t = tuple(tuple(row) for row in add)
        mul_t = tuple(tuple(row) for row in mul)
        zero = _find_add_identity(add_t)
        one = _find_mul_identity(mul_t)
        assert zero is not None and one is not None
        return cls(
            size=len(add_t),
            add=add_t,
            mul=mul_t,
            zero=zero,
            one=one,
            labels=tuple(labels) if labels is not None else None,
            provenance=provenance,
            structure=structure,
        )

    def label(self, x: int) -> str:
        if self.labels is not None:
            return self.labels[x]
        return str(x)

    def digest(self) -> str:
        """Structural fingerprint of (size, tables, zero, one); stable across runs."""
        if self._digest is None:
            h = hashlib.sha256()
            h.update(self.size.to_bytes(4, "big"))
            h.update(self.zero.to_bytes(4, "big"))
            h.update(self.one.to_bytes(4, "big"))
            for row in self.add:
                h.update(bytes(row) if self.size <= 256 else repr(row).encode())
            for row in self.mul:
                h.update(bytes(row) if self.size <= 256 else repr(row).encode())
            self._digest = h.hexdigest()
        return self._digest

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    def __repr__(self) -> str:
        return f"FiniteRing({self.provenance}, size={self.size})"


@dataclass(frozen=True)
class ElementSet:
    """A subset of a ring's elements, kept as a strictly increasing index tuple."""

    host: FiniteRing
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        prev = -1
        for x in self.members:
            if not (prev < x < self.host.size):
                raise ValueError(f"member list must be strictly increasing and in range, got {self.members}")
            prev = x

    def __contains__(self, x: int) -> bool:
        return x in set(self.members)

    def __len__(self) -> int:
        return len(self.members)


def power(R: FiniteRing, a: int, k: int) -> int:
    """a**k in R for k >= 0, with a**0 = one."""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    result = R.one
    base = a
    mul = R.mul
    while k:
        if k & 1:
            result = mul[result][base]
        base = mul[base][base]
        k >>= 1
    return result


def is_nilpotent(R: FiniteRing, a: int) -> tuple[bool, Optional[int]]:
    """Whether a is nilpotent, and the least k >= 1 with a**k = 0 when it is.

    Power iteration with cycle detection: in a ring of size n the sequence of
    powers repeats within n steps, so the loop always terminates.
    """
    mul = R.mul
    zero = R.zero
    p = a
    seen = set()
    k = 1
    while True:
        if p == zero:
            return True, k
        if p in seen:
            return False, None
        seen.add(p)
        p = mul[p][a]
        k += 1


def nilradical(R: FiniteRing) -> ElementSet:
    """The set of nilpotent elements.  A set, not an ideal: closure is not assumed."""
    members = tuple(x for x in range(R.size) if is_nilpotent(R, x)[0])
    return ElementSet(R, members)


def is_reduced(R: FiniteRing) -> tuple[bool, Optional[int]]:
    """Whether R has no nonzero nilpotents; returns the least witness with x*x = 0.

    Scanning squares suffices for the verdict: if x**k = 0 with k minimal >= 2,
    then x**(k-1) is a nonzero element whose square is zero.
    """
    mul = R.mul
    zero = R.zero
    for x in range(R.size):
        if x != zero and mul[x][x] == zero:
            return False, x
    return True, None


def is_unit(R: FiniteRing, a: int) -> bool:
    """Whether a has a two-sided multiplicative inverse."""
    one = R.one
    mul = R.mul
    for b in range(R.size):
        if mul[a][b] == one and mul[b][a] == one:
            return True
    return False


def units(R: FiniteRing) -> ElementSet:
    return ElementSet(R, tuple(x for x in range(R.size) if is_unit(R, x)))


def regular_central(R: FiniteRing) -> ElementSet:
    """Central elements that are neither left nor right zero divisors.

    In a finite ring both translation maps of a regular element are bijections,
    so every regular element is in fact a unit; units() makes that checkable.
    """
    n = R.size
    mul = R.mul
    members = []
    for e in range(n):
        row = mul[e]
        if any(row[x] != mul[x][e] for x in range(n)):
            continue
        if len(set(row)) != n:
            continue
        if len({mul[x][e] for x in range(n)}) != n:
            continue
        members.append(e)
    return ElementSet(R, tuple(members))


def central_idempotents(R: FiniteRing) -> tuple[int, ...]:
    """Nontrivial central idempotents of R, ascending; empty when R is
    directly indecomposable."""
    mul = R.mul
    n = R.size
    out = []
    for e in range(n):
        if e == R.zero or e == R.one or mul[e][e] != e:
            continue
        row = mul[e]
        if all(row[x] == mul[x][e] for x in range(n)):
            out.append(e)
    return tuple(out)


def split_by_central_idempotent(R: FiniteRing, e: int) -> tuple[FiniteRing, FiniteRing]:
    """Split R as e*R x (1-e)*R for a nontrivial central idempotent e.

    Each piece is closed under both operations, with e (resp. 1-e) as its
    identity, and the map x -> (e*x, (1-e)*x) is a ring isomorphism onto the
    product, so polynomial identities can be checked factor by factor.
    """
    mul = R.mul
    n = R.size
    if mul[e][e] != e or e in (R.zero, R.one) or any(mul[e][x] != mul[x][e] for x in range(n)):
        raise ValueError(f"element {e} is not a nontrivial central idempotent")
    comp = R.sub(R.one, e)

    def piece(idem: int) -> FiniteRing:
        members = sorted({mul[idem][x] for x in range(n)})
        pos = {x: i for i, x in enumerate(members)}
        add_t = tuple(tuple(pos[R.add[x][y]] for y in members) for x in members)
        mul_t = tuple(tuple(pos[mul[x][y]] for y in members) for x in members)
        return FiniteRing(
            size=len(members),
            add=add_t,
            mul=mul_t,
            zero=pos[R.zero],
            one=pos[idem],
            labels=tuple(R.label(x) for x in members),
            provenance=f"factor({R.provenance})",
            structure=("factor", R, tuple(members)),
        )

    return piece(e), piece(comp)


def is_commutative(R: FiniteRing) -> bool:
    mul = R.mul
    n = R.size
    return all(mul[a][b] == mul[b][a] for a in range(n) for b in range(n))


def is_semicommutative_ring(R: FiniteRing) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """Whether a*b = 0 forces a*r*b = 0 for every r; witness (a, r, b) otherwise.

    The witness is selected by scanning (a, b) pairs lexicographically and then
    r, so it is the lexicographically smallest (a, b, r) that violates the law.
    Commutative rings satisfy it outright (a*r*b = r*a*b = 0), so the triple
    scan only runs on noncommutative tables.
    """
    if is_commutative(R):
        return True, None
    n = R.size
    mul = R.mul
    zero = R.zero
    for a in range(n):
        row_a = mul[a]
        for b in range(n):
            if row_a[b] != zero:
                continue
            for r in range(n):
                if mul[row_a[r]][b] != zero:
                    return False, (a, r, b)
    return True, None
