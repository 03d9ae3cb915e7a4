"""Armendariz-style property checks, a pruned annihilating-pair engine, and a
naive enumeration oracle to hold it to account.

All polynomial properties are degree-bounded: a HOLDS verdict means "no
counterexample among pairs with both degrees at most d", a REFUTED verdict is
exact and carries a re-validated witness.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Optional, Union

from .errors import InternalInvariantError, SearchBudgetError
from .poly import Polynomial, poly_mul, product_coeffs_in_set
from .rings import (
    ElementSet,
    FiniteRing,
    central_idempotents,
    is_reduced,
    is_semicommutative_ring,
    nilradical,
    split_by_central_idempotent,
)

__all__ = [
    "PropertyKind",
    "Verdict",
    "PolyWitness",
    "ElementWitness",
    "TripleWitness",
    "PropertyReport",
    "PropertyProfile",
    "AuditFinding",
    "annihilating_pairs",
    "naive_annihilating_pairs",
    "naive_poly_check",
    "check_reduced",
    "check_semicommutative",
    "check_armendariz",
    "check_nil_armendariz",
    "check_weak_armendariz",
    "property_profile",
    "get_report",
    "clear_caches",
]


class PropertyKind(Enum):
    REDUCED = "reduced"
    SEMICOMMUTATIVE = "semicommutative"
    ARMENDARIZ = "armendariz"
    NIL_ARMENDARIZ = "nil-armendariz"
    WEAK_ARMENDARIZ = "weak-armendariz"


class Verdict(Enum):
    HOLDS_EXACT = "HOLDS_EXACT"
    HOLDS_UP_TO_BOUND = "HOLDS_UP_TO_BOUND"
    REFUTED = "REFUTED"


POLY_KINDS = (PropertyKind.ARMENDARIZ, PropertyKind.NIL_ARMENDARIZ, PropertyKind.WEAK_ARMENDARIZ)


@dataclass(frozen=True)
class PolyWitness:
    """A refuting pair: every coefficient of f*g lies in the constraint set,
    yet coefficient i of f times coefficient j of g escapes the target set."""

    f_coeffs: tuple[int, ...]
    g_coeffs: tuple[int, ...]
    i: int
    j: int
    product: int


@dataclass(frozen=True)
class ElementWitness:
    element: int


@dataclass(frozen=True)
class TripleWitness:
    a: int
    r: int
    b: int


Witness = Union[PolyWitness, ElementWitness, TripleWitness, None]


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of one property check.

    pairs_examined counts the candidate coefficient choices the search walked
    through; the pruned walk discards provably harmless pairs wholesale, so
    this measures effort, not the number of annihilating pairs that exist.
    Both it and elapsed depend on the engine route (quotient shortcut,
    partitioning) and are excluded from reports that must be byte-identical
    across worker configurations.
    """

    kind: PropertyKind
    ring: FiniteRing
    degree_bound: Optional[int]
    verdict: Verdict
    witness: Witness
    pairs_examined: int
    elapsed: float

    @property
    def holds(self) -> bool:
        return self.verdict is not Verdict.REFUTED


# --------------------------------------------------------------------------
# engine tables

class _Tables:
    """Flattened per-ring arrays plus derived lookup tables for the search."""

    def __init__(self, R: FiniteRing):
        self.R = R
        self.n = R.size
        self.add = [list(row) for row in R.add]
        self.mul = [list(row) for row in R.mul]
        self.neg = list(R.neg)
        self.zero = R.zero
        self._cand: dict[frozenset, list[list[tuple[int, ...]]]] = {}
        self._bad: dict[frozenset, list[int]] = {}

    def cand_table(self, allowed: frozenset) -> list[list[tuple[int, ...]]]:
        """cand[a][p] lists b ascending with p + a*b in the allowed set."""
        table = self._cand.get(allowed)
        if table is None:
            n = self.n
            add, mul, neg = self.add, self.mul, self.neg
            buckets: list[list[list[int]]] = [[[] for _ in range(n)] for _ in range(n)]
            targets = sorted(allowed)
            for a in range(n):
                row = mul[a]
                bucket_a = buckets[a]
                for b in range(n):
                    q = neg[row[b]]
                    for s in targets:
                        bucket_a[add[s][q]].append(b)
            table = [[tuple(b) for b in bucket_a] for bucket_a in buckets]
            self._cand[allowed] = table
        return table

    def bad_masks(self, allowed: frozenset) -> list[int]:
        """Per a, a bitmask of the b with a*b outside the allowed set."""
        masks = self._bad.get(allowed)
        if masks is None:
            masks = []
            for a in range(self.n):
                row = self.mul[a]
                m = 0
                for b in range(self.n):
                    if row[b] not in allowed:
                        m |= 1 << b
                masks.append(m)
            self._bad[allowed] = masks
        return masks


_TABLES_CACHE: dict[str, _Tables] = {}
_NIL_CACHE: dict[str, frozenset] = {}
_NIL_QUOTIENT_CACHE: dict[str, Optional[tuple[FiniteRing, tuple[int, ...]]]] = {}
_FACTOR_CACHE: dict[str, tuple[FiniteRing, ...]] = {}
_REPORT_CACHE: dict[tuple[str, PropertyKind, Optional[int]], PropertyReport] = {}


def clear_caches() -> None:
    _TABLES_CACHE.clear()
    _NIL_CACHE.clear()
    _NIL_QUOTIENT_CACHE.clear()
    _FACTOR_CACHE.clear()
    _REPORT_CACHE.clear()


def _tables(R: FiniteRing) -> _Tables:
    key = R.digest()
    tabs = _TABLES_CACHE.get(key)
    if tabs is None:
        tabs = _Tables(R)
        _TABLES_CACHE[key] = tabs
    return tabs


def _nil_key(R: FiniteRing) -> frozenset:
    key = R.digest()
    cached = _NIL_CACHE.get(key)
    if cached is None:
        cached = frozenset(nilradical(R).members)
        _NIL_CACHE[key] = cached
    return cached


def _nil_quotient(R: FiniteRing) -> Optional[tuple[FiniteRing, tuple[int, ...]]]:
    """R modulo its nilradical when that set is a two-sided ideal, else None."""
    key = R.digest()
    if key not in _NIL_QUOTIENT_CACHE:
        from .constructions import quotient_ring
        from .morphisms import Ideal, _ideal_defect

        members = tuple(sorted(_nil_key(R)))
        if _ideal_defect(R, members) is None:
            _NIL_QUOTIENT_CACHE[key] = quotient_ring(R, Ideal(R, members))
        else:
            _NIL_QUOTIENT_CACHE[key] = None
    return _NIL_QUOTIENT_CACHE[key]


def _indecomposable_factors(R: FiniteRing) -> tuple[FiniteRing, ...]:
    """Split R along central idempotents until no factor splits further.

    Always splits at the smallest nontrivial central idempotent, so the factor
    list is canonical for a given table.
    """
    key = R.digest()
    factors = _FACTOR_CACHE.get(key)
    if factors is None:
        idems = central_idempotents(R)
        if not idems:
            factors = (R,)
        else:
            left, right = split_by_central_idempotent(R, idems[0])
            factors = _indecomposable_factors(left) + _indecomposable_factors(right)
        _FACTOR_CACHE[key] = factors
    return factors


def _memberset_key(R: FiniteRing, members: Union[ElementSet, Iterable[int]]) -> frozenset:
    if isinstance(members, ElementSet):
        if members.host is not R:
            raise ValueError("member set belongs to a different ring")
        return frozenset(members.members)
    return frozenset(members)


# --------------------------------------------------------------------------
# pruned search

def _first_bad_product(
    mul: list[list[int]], sv: frozenset, fc: tuple[int, ...], gc: tuple[int, ...]
) -> tuple:
    for i, a in enumerate(fc):
        row = mul[a]
        for j, b in enumerate(gc):
            p = row[b]
            if p not in sv:
                return (fc, gc, i, j, p)
    raise InternalInvariantError(f"violating leaf without a bad product: f={fc} g={gc}")


def _scan_block_generic(
    tabs: _Tables,
    d: int,
    sc: frozenset,
    sv: frozenset,
    a0_values: Iterable[int],
    node_budget: Optional[int],
) -> tuple[Optional[tuple], int]:
    """Reference scan for any degree bound (the d=1 and d=2 hot paths are
    unrolled separately but must traverse in exactly this order).

    f runs in lexicographic coefficient order over the block, g is built by
    backtracking: choosing g's k-th coefficient closes the k-th convolution
    constraint, so infeasible prefixes are cut immediately.  At the final
    coefficient, candidates that cannot complete a violation are skipped, so
    the walk only ever lands on leaves that refute the property.  Returns the
    first such leaf as (f, g, i, j, product) plus the count of candidate nodes
    visited.
    """
    n = tabs.n
    cand = tabs.cand_table(sc)
    bad = tabs.bad_masks(sv)
    add, mul = tabs.add, tabs.mul
    zero = tabs.zero
    f = [0] * (d + 1)
    g = [0] * (d + 1)
    pend = [zero] * (2 * d + 1)
    state = {"nodes": 0, "fbad": 0}

    def descend(k: int, flag: int) -> bool:
        fbad = state["fbad"]
        last = k == d
        level = cand[f[0]][pend[k]]
        state["nodes"] += len(level)
        if node_budget is not None and state["nodes"] > node_budget:
            raise SearchBudgetError(f"annihilating-pair search exceeded {node_budget} nodes")
        for b in level:
            nf = flag | ((fbad >> b) & 1)
            if last and not nf:
                continue
            g[k] = b
            if d:
                saved = pend[k + 1 : k + d + 1]
                for m in range(k + 1, k + d + 1):
                    pend[m] = add[pend[m]][mul[f[m - k]][b]]
            if last:
                ok = True
                for m in range(d + 1, 2 * d + 1):
                    if pend[m] not in sc:
                        ok = False
                        break
                if ok:
                    if d:
                        pend[k + 1 : k + d + 1] = saved
                    return True
            elif descend(k + 1, nf):
                if d:
                    pend[k + 1 : k + d + 1] = saved
                return True
            if d:
                pend[k + 1 : k + d + 1] = saved
        return False

    rng = range(n)
    for a0 in a0_values:
        fb0 = bad[a0]
        for rest in itertools.product(rng, repeat=d):
            fb = fb0
            for a in rest:
                fb |= bad[a]
            if fb == 0:
                continue
            f[0] = a0
            f[1:] = rest
            state["fbad"] = fb
            if descend(0, 0):
                return _first_bad_product(mul, sv, tuple(f), tuple(g)), state["nodes"]
    return None, state["nodes"]


def _scan_block_d1(
    tabs: _Tables,
    sc: frozenset,
    sv: frozenset,
    a0_values: Iterable[int],
    node_budget: Optional[int],
) -> tuple[Optional[tuple], int]:
    """_scan_block_generic unrolled for degree bound 1."""
    n = tabs.n
    cand = tabs.cand_table(sc)
    bad = tabs.bad_masks(sv)
    add, mul = tabs.add, tabs.mul
    zero = tabs.zero
    nodes = 0
    rng = range(n)
    for a0 in a0_values:
        fb0 = bad[a0]
        cand0 = cand[a0]
        level0 = cand0[zero]
        for a1 in rng:
            fbad = fb0 | bad[a1]
            if fbad == 0:
                continue
            mul1 = mul[a1]
            nodes += len(level0)
            if node_budget is not None and nodes > node_budget:
                raise SearchBudgetError(f"annihilating-pair search exceeded {node_budget} nodes")
            for b0 in level0:
                flag0 = (fbad >> b0) & 1
                level1 = cand0[mul1[b0]]
                nodes += len(level1)
                for b1 in level1:
                    if not flag0 and not ((fbad >> b1) & 1):
                        continue
                    if mul1[b1] not in sc:
                        continue
                    return _first_bad_product(mul, sv, (a0, a1), (b0, b1)), nodes
    return None, nodes


def _scan_block_d2(
    tabs: _Tables,
    sc: frozenset,
    sv: frozenset,
    a0_values: Iterable[int],
    node_budget: Optional[int],
) -> tuple[Optional[tuple], int]:
    """_scan_block_generic unrolled for degree bound 2."""
    n = tabs.n
    cand = tabs.cand_table(sc)
    bad = tabs.bad_masks(sv)
    add, mul = tabs.add, tabs.mul
    zero = tabs.zero
    nodes = 0
    rng = range(n)
    for a0 in a0_values:
        fb0 = bad[a0]
        cand0 = cand[a0]
        level0 = cand0[zero]
        for a1 in rng:
            fb01 = fb0 | bad[a1]
            mul1 = mul[a1]
            for a2 in rng:
                fbad = fb01 | bad[a2]
                if fbad == 0:
                    continue
                mul2 = mul[a2]
                nodes += len(level0)
                if node_budget is not None and nodes > node_budget:
                    raise SearchBudgetError(f"annihilating-pair search exceeded {node_budget} nodes")
                for b0 in level0:
                    flag0 = (fbad >> b0) & 1
                    p1 = mul1[b0]
                    p2 = mul2[b0]
                    level1 = cand0[p1]
                    nodes += len(level1)
                    for b1 in level1:
                        flag1 = flag0 | ((fbad >> b1) & 1)
                        q2 = add[p2][mul1[b1]]
                        p3 = mul2[b1]
                        level2 = cand0[q2]
                        nodes += len(level2)
                        for b2 in level2:
                            if not flag1 and not ((fbad >> b2) & 1):
                                continue
                            if add[p3][mul1[b2]] not in sc or mul2[b2] not in sc:
                                continue
                            return (
                                _first_bad_product(mul, sv, (a0, a1, a2), (b0, b1, b2)),
                                nodes,
                            )
    return None, nodes


def _scan_block(
    tabs: _Tables,
    d: int,
    sc: frozenset,
    sv: frozenset,
    a0_values: Iterable[int],
    node_budget: Optional[int],
) -> tuple[Optional[tuple], int]:
    if d == 1:
        return _scan_block_d1(tabs, sc, sv, a0_values, node_budget)
    if d == 2:
        return _scan_block_d2(tabs, sc, sv, a0_values, node_budget)
    return _scan_block_generic(tabs, d, sc, sv, a0_values, node_budget)


def _search_violation(
    R: FiniteRing,
    d: int,
    sc: frozenset,
    sv: frozenset,
    partitions: int,
    node_budget: Optional[int],
) -> tuple[Optional[tuple], int]:
    """Partition the leading-coefficient axis, scan each block, and merge.

    Blocks partition the lexicographic order of f by its first coefficient, so
    the minimum of the per-block first hits is the global lexicographic
    minimum; verdict and witness are independent of the partition count.
    """
    tabs = _tables(R)
    n = tabs.n
    parts = max(1, min(partitions, n))
    bounds = [round(w * n / parts) for w in range(parts + 1)]
    best: Optional[tuple] = None
    nodes_total = 0
    for w in range(parts):
        block = range(bounds[w], bounds[w + 1])
        if not block:
            continue
        wit, nodes = _scan_block(tabs, d, sc, sv, block, node_budget)
        nodes_total += nodes
        if wit is not None and (best is None or wit < best):
            best = wit
    return best, nodes_total


# --------------------------------------------------------------------------
# pair streams

def annihilating_pairs(
    R: FiniteRing, d: int, members: Union[ElementSet, Iterable[int]]
) -> Iterator[tuple[Polynomial, Polynomial]]:
    """Stream every pair (f, g) of degree bound d with all coefficients of f*g
    inside the member set, in lexicographic (f coefficients, g coefficients)
    order.  Backtracking prunes g prefixes as convolution constraints close.
    """
    if d < 0:
        raise ValueError("degree bound must be non-negative")
    tabs = _tables(R)
    sc = _memberset_key(R, members)
    cand = tabs.cand_table(sc)
    add, mul = tabs.add, tabs.mul
    zero = tabs.zero
    n = tabs.n
    width = d + 1
    g = [0] * width
    pend = [zero] * (2 * d + 1)

    def emit(fc: tuple[int, ...], k: int) -> Iterator[tuple[int, ...]]:
        last = k == d
        for b in cand[fc[0]][pend[k]]:
            g[k] = b
            if d:
                saved = pend[k + 1 : k + d + 1]
                for m in range(k + 1, k + d + 1):
                    pend[m] = add[pend[m]][mul[fc[m - k]][b]]
            if last:
                if all(pend[m] in sc for m in range(d + 1, 2 * d + 1)):
                    yield tuple(g)
            else:
                yield from emit(fc, k + 1)
            if d:
                pend[k + 1 : k + d + 1] = saved

    for fc in itertools.product(range(n), repeat=width):
        for gc in emit(fc, 0):
            yield Polynomial(R, fc), Polynomial(R, gc)


def naive_annihilating_pairs(
    R: FiniteRing, d: int, members: Union[ElementSet, Iterable[int]]
) -> Iterator[tuple[Polynomial, Polynomial]]:
    """Reference double enumeration: test every pair of coefficient tuples."""
    allowed = _memberset_key(R, members)
    n = R.size
    for fc in itertools.product(range(n), repeat=d + 1):
        f = Polynomial(R, fc)
        for gc in itertools.product(range(n), repeat=d + 1):
            g = Polynomial(R, gc)
            if product_coeffs_in_set(f, g, allowed):
                yield f, g


def _kind_sets(R: FiniteRing, kind: PropertyKind) -> tuple[frozenset, frozenset]:
    zero_key = frozenset((R.zero,))
    if kind is PropertyKind.ARMENDARIZ:
        return zero_key, zero_key
    if kind is PropertyKind.NIL_ARMENDARIZ:
        nil = _nil_key(R)
        return nil, nil
    if kind is PropertyKind.WEAK_ARMENDARIZ:
        return zero_key, _nil_key(R)
    raise ValueError(f"not a polynomial property: {kind}")


def naive_poly_check(R: FiniteRing, kind: PropertyKind, d: int) -> tuple[Verdict, Optional[PolyWitness], int]:
    """Oracle checker by brute double enumeration; returns (verdict, witness, pairs)."""
    sc, sv = _kind_sets(R, kind)
    pairs = 0
    for f, g in naive_annihilating_pairs(R, d, sc):
        pairs += 1
        for i, a in enumerate(f.coeffs):
            row = R.mul[a]
            for j, b in enumerate(g.coeffs):
                if row[b] not in sv:
                    return Verdict.REFUTED, PolyWitness(f.coeffs, g.coeffs, i, j, row[b]), pairs
    return Verdict.HOLDS_UP_TO_BOUND, None, pairs


# --------------------------------------------------------------------------
# checkers

def _revalidate_poly_witness(R: FiniteRing, kind: PropertyKind, wit: PolyWitness) -> None:
    sc, sv = _kind_sets(R, kind)
    f = Polynomial(R, wit.f_coeffs)
    g = Polynomial(R, wit.g_coeffs)
    if not product_coeffs_in_set(f, g, sc):
        raise InternalInvariantError(f"witness pair does not satisfy the product constraint: {wit}")
    p = R.mul[wit.f_coeffs[wit.i]][wit.g_coeffs[wit.j]]
    if p != wit.product or p in sv:
        raise InternalInvariantError(f"witness product does not refute the property: {wit}")


def _poly_property_check(
    R: FiniteRing,
    kind: PropertyKind,
    d: int,
    partitions: int,
    node_budget: Optional[int],
) -> PropertyReport:
    if d < 0:
        raise ValueError("degree bound must be non-negative")
    start = time.perf_counter()
    sc, sv = _kind_sets(R, kind)
    examined = 0
    if kind in (PropertyKind.NIL_ARMENDARIZ, PropertyKind.WEAK_ARMENDARIZ):
        # When the nilpotents form an ideal, work modulo them: f*g lands in
        # nil[x] exactly when the projected product vanishes, and a product of
        # coefficients is nilpotent exactly when its projection is zero.  For
        # the nil property this is an equivalence; for the weak property a
        # clean quotient still forces a clean lift because the zero-product
        # hypothesis projects forward.  A refuted quotient falls through to
        # the direct search so witnesses stay exact and lexicographically
        # minimal in R itself.
        quotient = _nil_quotient(R)
        if quotient is not None:
            qrep = get_report(quotient[0], PropertyKind.ARMENDARIZ, d, node_budget=node_budget)
            examined += qrep.pairs_examined
            if qrep.verdict is not Verdict.REFUTED:
                return PropertyReport(
                    kind, R, d, Verdict.HOLDS_UP_TO_BOUND, None, examined, time.perf_counter() - start
                )
    factors = _indecomposable_factors(R)
    if len(factors) > 1:
        # All three properties split across a direct product at any fixed
        # bound: a violating pair in a factor lifts by padding the other
        # coordinates with zero, and a violating pair in the product projects
        # onto the factor where the offending product survives.  A clean
        # verdict on every factor therefore settles the ring; a dirty factor
        # falls through to the direct search so the recorded witness is the
        # lexicographically smallest one in R's own indexing.
        clean = True
        for piece in factors:
            prep = get_report(piece, kind, d, node_budget=node_budget)
            examined += prep.pairs_examined
            if prep.verdict is Verdict.REFUTED:
                clean = False
                break
        if clean:
            return PropertyReport(
                kind, R, d, Verdict.HOLDS_UP_TO_BOUND, None, examined, time.perf_counter() - start
            )
    wit, pairs = _search_violation(R, d, sc, sv, partitions, node_budget)
    examined += pairs
    if wit is None:
        return PropertyReport(kind, R, d, Verdict.HOLDS_UP_TO_BOUND, None, examined, time.perf_counter() - start)
    fc, gc, i, j, product = wit
    witness = PolyWitness(fc, gc, i, j, product)
    _revalidate_poly_witness(R, kind, witness)
    return PropertyReport(kind, R, d, Verdict.REFUTED, witness, examined, time.perf_counter() - start)


def check_armendariz(
    R: FiniteRing, d: int = 2, *, partitions: int = 1, node_budget: Optional[int] = None
) -> PropertyReport:
    """Does f*g = 0 force every product of coefficients to vanish, for degrees <= d?"""
    return _poly_property_check(R, PropertyKind.ARMENDARIZ, d, partitions, node_budget)


def check_nil_armendariz(
    R: FiniteRing, d: int = 2, *, partitions: int = 1, node_budget: Optional[int] = None
) -> PropertyReport:
    """Does f*g having nilpotent coefficients force nilpotent coefficient products?"""
    return _poly_property_check(R, PropertyKind.NIL_ARMENDARIZ, d, partitions, node_budget)


def check_weak_armendariz(
    R: FiniteRing, d: int = 2, *, partitions: int = 1, node_budget: Optional[int] = None
) -> PropertyReport:
    """Does f*g = 0 force every product of coefficients to be nilpotent?"""
    return _poly_property_check(R, PropertyKind.WEAK_ARMENDARIZ, d, partitions, node_budget)


def check_reduced(R: FiniteRing) -> PropertyReport:
    start = time.perf_counter()
    ok, witness = is_reduced(R)
    return PropertyReport(
        PropertyKind.REDUCED,
        R,
        None,
        Verdict.HOLDS_EXACT if ok else Verdict.REFUTED,
        None if ok else ElementWitness(witness),
        0,
        time.perf_counter() - start,
    )


def check_semicommutative(R: FiniteRing) -> PropertyReport:
    start = time.perf_counter()
    ok, witness = is_semicommutative_ring(R)
    return PropertyReport(
        PropertyKind.SEMICOMMUTATIVE,
        R,
        None,
        Verdict.HOLDS_EXACT if ok else Verdict.REFUTED,
        None if ok else TripleWitness(*witness),
        0,
        time.perf_counter() - start,
    )


# --------------------------------------------------------------------------
# profiles and cached access

def get_report(R: FiniteRing, kind: PropertyKind, d: Optional[int] = None, *, node_budget: Optional[int] = None) -> PropertyReport:
    """Cached property check; polynomial kinds require a degree bound."""
    if kind in POLY_KINDS:
        if d is None:
            raise ValueError("polynomial properties need a degree bound")
        key = (R.digest(), kind, d)
    else:
        key = (R.digest(), kind, None)
    report = _REPORT_CACHE.get(key)
    if report is None:
        if kind is PropertyKind.REDUCED:
            report = check_reduced(R)
        elif kind is PropertyKind.SEMICOMMUTATIVE:
            report = check_semicommutative(R)
        else:
            report = _poly_property_check(R, kind, d, 1, node_budget)
        _REPORT_CACHE[key] = report
    return report


@dataclass(frozen=True)
class AuditFinding:
    """A broken or suspicious edge in the property implication chain."""

    code: str
    fatal: bool
    detail: str


@dataclass(frozen=True)
class PropertyProfile:
    """All five property reports for one ring at one degree bound."""

    ring: FiniteRing
    degree_bound: int
    reduced: PropertyReport
    semicommutative: PropertyReport
    armendariz: PropertyReport
    nil_armendariz: PropertyReport
    weak_armendariz: PropertyReport

    def reports(self) -> tuple[PropertyReport, ...]:
        return (self.reduced, self.semicommutative, self.armendariz, self.nil_armendariz, self.weak_armendariz)

    def verdicts(self) -> dict[str, str]:
        return {rep.kind.value: rep.verdict.value for rep in self.reports()}

    def audit(self) -> list[AuditFinding]:
        """Check the implication chain on this profile.

        reduced => armendariz and nil-armendariz => weak-armendariz must hold
        at every bound (both are degree-local facts), so breaking either is
        fatal.  armendariz holding while nil-armendariz is refuted is possible
        in principle at a fixed bound but surprising; it is flagged non-fatal
        as a prompt to escalate the bound.
        """
        findings = []
        if self.reduced.holds and not self.armendariz.holds:
            findings.append(
                AuditFinding(
                    "reduced-implies-armendariz",
                    True,
                    f"{self.ring.provenance}: reduced ring refutes armendariz at d={self.degree_bound}",
                )
            )
        if self.nil_armendariz.holds and not self.weak_armendariz.holds:
            findings.append(
                AuditFinding(
                    "nil-implies-weak",
                    True,
                    f"{self.ring.provenance}: nil-armendariz holds but weak-armendariz refuted at d={self.degree_bound}",
                )
            )
        if self.armendariz.holds and not self.nil_armendariz.holds:
            findings.append(
                AuditFinding(
                    "armendariz-without-nil",
                    False,
                    f"{self.ring.provenance}: armendariz holds while nil-armendariz is refuted at d={self.degree_bound}",
                )
            )
        return findings


def property_profile(R: FiniteRing, d: int = 2, *, node_budget: Optional[int] = None) -> PropertyProfile:
    """Run every checker on R at degree bound d, using the report cache."""
    return PropertyProfile(
        ring=R,
        degree_bound=d,
        reduced=get_report(R, PropertyKind.REDUCED),
        semicommutative=get_report(R, PropertyKind.SEMICOMMUTATIVE),
        armendariz=get_report(R, PropertyKind.ARMENDARIZ, d, node_budget=node_budget),
        nil_armendariz=get_report(R, PropertyKind.NIL_ARMENDARIZ, d, node_budget=node_budget),
        weak_armendariz=get_report(R, PropertyKind.WEAK_ARMENDARIZ, d, node_budget=node_budget),
    )
