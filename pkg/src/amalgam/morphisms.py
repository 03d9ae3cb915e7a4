"""Two-sided ideals, unital ring homomorphisms, and their enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import NotAnIdealError, SearchBudgetError
from .rings import ElementSet, FiniteRing, is_nilpotent

__all__ = [
    "Ideal",
    "RingHom",
    "HomViolation",
    "SemicommutativeIdealReport",
    "generated_ideal",
    "enumerate_ideals",
    "verify_hom",
    "identity_hom",
    "enumerate_homs",
    "preimage_ideal",
    "is_radical_ideal",
    "is_semicommutative_ideal",
]


def _ideal_defect(R: FiniteRing, members: Sequence[int]) -> Optional[str]:
    """Why the member set is not a two-sided ideal, or None if it is one."""
    mem = set(members)
    if R.zero not in mem:
        return "missing zero"
    add = R.add
    mul = R.mul
    for x in members:
        if R.neg[x] not in mem:
            return f"not closed under negation at {x}"
        for y in members:
            if add[x][y] not in mem:
                return f"not closed under addition at ({x}, {y})"
    for r in range(R.size):
        row = mul[r]
        for x in members:
            if row[x] not in mem:
                return f"not absorbing on the left at ({r}, {x})"
            if mul[x][r] not in mem:
                return f"not absorbing on the right at ({x}, {r})"
    return None


@dataclass(frozen=True)
class Ideal:
    """A verified two-sided ideal; construction re-checks closure and absorption."""

    host: FiniteRing
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        defect = _ideal_defect(self.host, self.members)
        if defect is not None:
            raise NotAnIdealError(f"{list(self.members)} in {self.host.provenance}: {defect}")
        if tuple(sorted(self.members)) != self.members:
            raise NotAnIdealError("ideal members must be sorted ascending")

    @property
    def proper(self) -> bool:
        return len(self.members) < self.host.size

    def as_set(self) -> ElementSet:
        return ElementSet(self.host, self.members)

    def __contains__(self, x: int) -> bool:
        return x in set(self.members)

    def __len__(self) -> int:
        return len(self.members)


def generated_ideal(R: FiniteRing, gens: Iterable[int]) -> Ideal:
    """Smallest two-sided ideal containing the generators.

    Fixpoint closure under addition, negation, and one-sided multiples; with an
    identity present this reaches every finite sum of r*x*s sandwiches.
    """
    add = R.add
    mul = R.mul
    current = {R.zero}
    current.update(gens)
    while True:
        new = set()
        elems = list(current)
        for x in elems:
            if R.neg[x] not in current:
                new.add(R.neg[x])
            for y in elems:
                if add[x][y] not in current:
                    new.add(add[x][y])
            for r in range(R.size):
                if mul[r][x] not in current:
                    new.add(mul[r][x])
                if mul[x][r] not in current:
                    new.add(mul[x][r])
        if not new:
            break
        current.update(new)
    return Ideal(R, tuple(sorted(current)))


def enumerate_ideals(R: FiniteRing, *, size_cap: int = 64) -> list[Ideal]:
    """All two-sided ideals, ordered by size then lexicographically by members.

    Grows the ideal lattice from the zero ideal by adjoining one new generator
    at a time, memoizing closures; complete because every ideal is reached by
    adding its members in some order.  No efficiency claim beyond |R| <= 16.
    """
    if R.size > size_cap:
        raise SearchBudgetError(f"ideal enumeration capped at size {size_cap}, ring has {R.size}")
    zero_ideal = generated_ideal(R, ())
    seen = {zero_ideal.members: zero_ideal}
    frontier = [zero_ideal.members]
    closure_memo: dict[tuple[tuple[int, ...], int], tuple[int, ...]] = {}
    while frontier:
        base = frontier.pop()
        base_set = set(base)
        for x in range(R.size):
            if x in base_set:
                continue
            key = (base, x)
            members = closure_memo.get(key)
            if members is None:
                members = generated_ideal(R, base + (x,)).members
                closure_memo[key] = members
            if members not in seen:
                seen[members] = Ideal(R, members)
                frontier.append(members)
    return sorted(seen.values(), key=lambda ideal: (len(ideal.members), ideal.members))


@dataclass(frozen=True)
class HomViolation:
    """First law a candidate map breaks: 'unital', 'add', or 'mul', with witness."""

    law: str
    witness: tuple[int, ...]


@dataclass(frozen=True)
class RingHom:
    """A verified unital ring homomorphism, stored as an image table."""

    domain: FiniteRing
    codomain: FiniteRing
    map: tuple[int, ...]

    def __post_init__(self) -> None:
        violation = _hom_defect(self.domain, self.codomain, self.map)
        if violation is not None:
            raise ValueError(f"not a homomorphism: {violation}")

    @property
    def injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def image(self) -> ElementSet:
        return ElementSet(self.codomain, tuple(sorted(set(self.map))))

    def __call__(self, x: int) -> int:
        return self.map[x]


def _hom_defect(A: FiniteRing, B: FiniteRing, m: Sequence[int]) -> Optional[HomViolation]:
    if len(m) != A.size or any(not (0 <= v < B.size) for v in m):
        return HomViolation("range", ())
    if m[A.one] != B.one:
        return HomViolation("unital", (A.one,))
    for x in range(A.size):
        for y in range(A.size):
            if m[A.add[x][y]] != B.add[m[x]][m[y]]:
                return HomViolation("add", (x, y))
            if m[A.mul[x][y]] != B.mul[m[x]][m[y]]:
                return HomViolation("mul", (x, y))
    return None


def verify_hom(A: FiniteRing, B: FiniteRing, m: Sequence[int]):
    """RingHom when the map preserves 1, +, and *; otherwise the first HomViolation."""
    violation = _hom_defect(A, B, tuple(m))
    if violation is not None:
        return violation
    return RingHom(A, B, tuple(m))


def identity_hom(R: FiniteRing) -> RingHom:
    return RingHom(R, R, tuple(range(R.size)))


def _ring_closure(R: FiniteRing, seed: Iterable[int]) -> set[int]:
    current = set(seed)
    add = R.add
    mul = R.mul
    while True:
        new = set()
        elems = list(current)
        for x in elems:
            if R.neg[x] not in current:
                new.add(R.neg[x])
            for y in elems:
                if add[x][y] not in current:
                    new.add(add[x][y])
                if mul[x][y] not in current:
                    new.add(mul[x][y])
        if not new:
            return current
        current.update(new)


def ring_generators(R: FiniteRing) -> tuple[int, ...]:
    """Greedy generating sequence beyond {0, 1}: repeatedly adjoin the smallest
    element outside the current ring closure."""
    gens: list[int] = []
    known = _ring_closure(R, (R.zero, R.one))
    while len(known) < R.size:
        x = min(i for i in range(R.size) if i not in known)
        gens.append(x)
        known = _ring_closure(R, tuple(known) + (x,))
    return tuple(gens)


def _propagate(A: FiniteRing, B: FiniteRing, amap: dict[int, int]) -> Optional[dict[int, int]]:
    """Close a partial map under + and * on its domain; None on conflict."""
    addA, mulA = A.add, A.mul
    addB, mulB = B.add, B.mul
    current = dict(amap)
    changed = True
    while changed:
        changed = False
        items = list(current.items())
        for x, fx in items:
            nx = A.neg[x]
            fnx = B.neg[fx]
            if current.get(nx, fnx) != fnx:
                return None
            if nx not in current:
                current[nx] = fnx
                changed = True
            for y, fy in items:
                s, fs = addA[x][y], addB[fx][fy]
                if current.get(s, fs) != fs:
                    return None
                if s not in current:
                    current[s] = fs
                    changed = True
                p, fp = mulA[x][y], mulB[fx][fy]
                if current.get(p, fp) != fp:
                    return None
                if p not in current:
                    current[p] = fp
                    changed = True
    return current


def enumerate_homs(A: FiniteRing, B: FiniteRing, *, size_cap: int = 64) -> list[RingHom]:
    """All unital homomorphisms A -> B, sorted by image table.

    Backtracks over images of a generating set; the image of 1 is forced and
    constraint propagation through additive and multiplicative words prunes
    inconsistent branches early.
    """
    if A.size > size_cap or B.size > size_cap:
        raise SearchBudgetError(f"hom enumeration capped at size {size_cap}")
    gens = ring_generators(A)
    seed = _propagate(A, B, {A.zero: B.zero, A.one: B.one})
    results: list[RingHom] = []
    if seed is None:
        return results

    def descend(level: int, amap: dict[int, int]) -> None:
        if level == len(gens):
            if len(amap) == A.size:
                full = tuple(amap[x] for x in range(A.size))
                if _hom_defect(A, B, full) is None:
                    results.append(RingHom(A, B, full))
            return
        g = gens[level]
        if g in amap:
            descend(level + 1, amap)
            return
        for img in range(B.size):
            trial = dict(amap)
            trial[g] = img
            closed = _propagate(A, B, trial)
            if closed is not None:
                descend(level + 1, closed)

    descend(0, seed)
    results.sort(key=lambda h: h.map)
    return results


def preimage_ideal(f: RingHom, J: Ideal) -> Ideal:
    """f^{-1}(J) as a verified ideal of the domain."""
    if J.host is not f.codomain:
        raise ValueError("ideal must live in the codomain of the homomorphism")
    members = tuple(x for x in range(f.domain.size) if f.map[x] in set(J.members))
    return Ideal(f.domain, members)


def is_radical_ideal(R: FiniteRing, J: Ideal) -> bool:
    """Whether x*x in J forces x in J; equivalent to the quotient being reduced."""
    mem = set(J.members)
    mul = R.mul
    return all(x in mem for x in range(R.size) if mul[x][x] in mem)


@dataclass(frozen=True)
class SemicommutativeIdealReport:
    """Zero-product behaviour of a (generally non-unital) ideal.

    holds: the middle factor ranges over J itself (x*y = 0 with x, y in J
    forces x*r*y = 0 for every r in J).  holds_host_middle quantifies the
    middle factor over the whole host ring instead; both are reported so the
    two readings stay comparable.  nil_j_closed records whether the nilpotent
    part of J is closed under addition and under multiplication by J on both
    sides, the structural fact a semicommutative J is expected to deliver.
    """

    ideal: Ideal
    holds: bool
    witness: Optional[tuple[int, int, int]]
    holds_host_middle: bool
    witness_host_middle: Optional[tuple[int, int, int]]
    nil_j: tuple[int, ...]
    nil_j_closed: bool


def _middle_scan(R: FiniteRing, members: Sequence[int], middles: Sequence[int]):
    mul = R.mul
    zero = R.zero
    for x in members:
        row = mul[x]
        for y in members:
            if row[y] != zero:
                continue
            for r in middles:
                if mul[row[r]][y] != zero:
                    return False, (x, r, y)
    return True, None


def is_semicommutative_ideal(R: FiniteRing, J: Ideal) -> SemicommutativeIdealReport:
    """Check the semicommutativity law inside J, with the host-middle variant alongside."""
    members = J.members
    holds, witness = _middle_scan(R, members, members)
    holds_host, witness_host = _middle_scan(R, members, range(R.size))
    nil_j = tuple(x for x in members if is_nilpotent(R, x)[0])
    nil_set = set(nil_j)
    closed = True
    add = R.add
    mul = R.mul
    for u in nil_j:
        for v in nil_j:
            if add[u][v] not in nil_set:
                closed = False
        for r in members:
            if mul[r][u] not in nil_set or mul[u][r] not in nil_set:
                closed = False
    return SemicommutativeIdealReport(
        ideal=J,
        holds=holds,
        witness=witness,
        holds_host_middle=holds_host,
        witness_host_middle=witness_host,
        nil_j=nil_j,
        nil_j_closed=closed,
    )
