"""Clause registry, scenario corpus, and the cross-checking harness.

A scenario is one quadruple (base ring A, target ring B, homomorphism f,
proper ideal J of B) together with the derived amalgam and the subring
f(A) + J.  A clause pairs a hypothesis predicate with a conclusion predicate
over a scenario at a degree bound.  The harness enumerates all scenarios a
ring catalog affords, evaluates every clause on every scenario, escalates any
failed conclusion to the next degree bound before calling it hard, and
aggregates per-clause tallies into a deterministic report.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

from .constructions import amalgamation, direct_product, f_plus_j, matrix_ring, poly_quotient, upper_triangular, zmod
from .errors import SearchBudgetError
from .morphisms import (
    Ideal,
    RingHom,
    enumerate_homs,
    enumerate_ideals,
    is_radical_ideal,
    is_semicommutative_ideal,
    preimage_ideal,
)
from .properties import PropertyKind, _nil_key, get_report
from .rings import FiniteRing, regular_central

__all__ = [
    "Scenario",
    "TheoremClause",
    "OutcomeStatus",
    "ClauseOutcome",
    "ClauseSummary",
    "HarnessReport",
    "CorpusConfig",
    "clause_registry",
    "build_corpus",
    "build_scenarios",
    "evaluate_clause",
    "evaluate_scenario",
    "run_harness",
]

ARM = PropertyKind.ARMENDARIZ
NIL = PropertyKind.NIL_ARMENDARIZ
WEAK = PropertyKind.WEAK_ARMENDARIZ

_REGCENTRAL_CACHE: dict[str, frozenset] = {}
_SEMI_IDEAL_CACHE: dict[tuple[str, tuple[int, ...]], bool] = {}


def _regular_central_set(R: FiniteRing) -> frozenset:
    key = R.digest()
    cached = _REGCENTRAL_CACHE.get(key)
    if cached is None:
        cached = frozenset(regular_central(R).members)
        _REGCENTRAL_CACHE[key] = cached
    return cached


def _semicommutative_ideal_holds(R: FiniteRing, J: Ideal) -> bool:
    key = (R.digest(), J.members)
    cached = _SEMI_IDEAL_CACHE.get(key)
    if cached is None:
        cached = is_semicommutative_ideal(R, J).holds
        _SEMI_IDEAL_CACHE[key] = cached
    return cached


class Scenario:
    """One harness instance, with memoized structural predicates.

    Property verdicts go through the module-level report cache keyed by ring
    digest, so repeated base or subring checks across scenarios are free.
    """

    __slots__ = ("base_name", "target_name", "hom", "ideal", "am", "faj", "key", "node_budget", "_memo")

    def __init__(self, base_name: str, target_name: str, hom: RingHom, ideal: Ideal):
        self.base_name = base_name
        self.target_name = target_name
        self.hom = hom
        self.ideal = ideal
        self.am = amalgamation(hom, ideal)
        self.faj = f_plus_j(hom, ideal)
        fpart = ",".join(map(str, hom.map))
        jpart = ",".join(map(str, ideal.members))
        self.key = f"{base_name}->{target_name}|f=[{fpart}]|J=[{jpart}]"
        self.node_budget: Optional[int] = None
        self._memo: dict = {}

    @property
    def base(self) -> FiniteRing:
        return self.hom.domain

    @property
    def target(self) -> FiniteRing:
        return self.hom.codomain

    def _get(self, name: str, fn: Callable[[], bool]) -> bool:
        if name not in self._memo:
            self._memo[name] = fn()
        return self._memo[name]

    # property verdicts -----------------------------------------------------

    def base_holds(self, kind: PropertyKind, d: int) -> bool:
        return get_report(self.base, kind, d, node_budget=self.node_budget).holds

    def am_holds(self, kind: PropertyKind, d: int) -> bool:
        return get_report(self.am.ring, kind, d, node_budget=self.node_budget).holds

    def faj_holds(self, kind: PropertyKind, d: int) -> bool:
        return get_report(self.faj.ring, kind, d, node_budget=self.node_budget).holds

    def base_reduced(self) -> bool:
        return get_report(self.base, PropertyKind.REDUCED).holds

    def target_reduced(self) -> bool:
        return get_report(self.target, PropertyKind.REDUCED).holds

    def am_reduced(self) -> bool:
        return get_report(self.am.ring, PropertyKind.REDUCED).holds

    # structural predicates ---------------------------------------------------

    def nil_target_meets_ideal_only_at_zero(self) -> bool:
        return self._get(
            "nil_cap_ideal",
            lambda: _nil_key(self.target) & frozenset(self.ideal.members) == {self.target.zero},
        )

    def ideal_radical(self) -> bool:
        return self._get("ideal_radical", lambda: is_radical_ideal(self.target, self.ideal))

    def ideal_inside_nil_target(self) -> bool:
        return self._get(
            "ideal_in_nil",
            lambda: frozenset(self.ideal.members) <= _nil_key(self.target),
        )

    def preimage(self) -> Ideal:
        if "preimage" not in self._memo:
            self._memo["preimage"] = preimage_ideal(self.hom, self.ideal)
        return self._memo["preimage"]

    def preimage_meets_nil_base_only_at_zero(self) -> bool:
        return self._get(
            "preim_cap_nil",
            lambda: frozenset(self.preimage().members) & _nil_key(self.base) == {self.base.zero},
        )

    def preimage_inside_nil_base(self) -> bool:
        return self._get(
            "preim_in_nil",
            lambda: frozenset(self.preimage().members) <= _nil_key(self.base),
        )

    def hom_injective(self) -> bool:
        return self.hom.injective

    def image_meets_ideal_only_at_zero(self) -> bool:
        return self._get(
            "image_cap_ideal",
            lambda: frozenset(self.hom.map) & frozenset(self.ideal.members) == {self.target.zero},
        )

    def ideal_contains_regular_central(self) -> bool:
        return self._get(
            "ideal_regcentral",
            lambda: bool(_regular_central_set(self.target) & frozenset(self.ideal.members)),
        )

    def ideal_semicommutative(self) -> bool:
        return self._get(
            "ideal_semicomm",
            lambda: _semicommutative_ideal_holds(self.target, self.ideal),
        )

    def preimage_semicommutative(self) -> bool:
        return self._get(
            "preim_semicomm",
            lambda: _semicommutative_ideal_holds(self.base, self.preimage()),
        )


@dataclass(frozen=True)
class TheoremClause:
    """One registered implication or equivalence over a scenario."""

    clause_id: str
    summary: str
    shape: str
    hypothesis: Callable[[Scenario, int], bool]
    conclusion: Callable[[Scenario, int], bool]
    vacuity_note: str = ""
    degree_sensitive: bool = True


_REGULAR_CENTRAL_NOTE = (
    "the hypothesis asks for a regular central element of the target inside a "
    "proper ideal; over finite tables a regular element has injective, hence "
    "surjective, translation maps, making it a unit, and a proper ideal that "
    "contains a unit would be the whole ring, so no finite scenario can satisfy "
    "this hypothesis"
)


def _shared_triple(kind: PropertyKind, prefix: str, word: str) -> list[TheoremClause]:
    """The three clauses every polynomial property carries: amalgam pushes down
    to the base, base plus subring push up to the amalgam, and a regular
    central element in the ideal upgrades the pair to an equivalence."""
    return [
        TheoremClause(
            f"{prefix}-1",
            f"a {word} amalgam forces a {word} base ring",
            "implication",
            lambda s, d, k=kind: s.am_holds(k, d),
            lambda s, d, k=kind: s.base_holds(k, d),
        ),
        TheoremClause(
            f"{prefix}-2",
            f"a {word} base and a {word} image-plus-ideal subring force a {word} amalgam",
            "implication",
            lambda s, d, k=kind: s.base_holds(k, d) and s.faj_holds(k, d),
            lambda s, d, k=kind: s.am_holds(k, d),
        ),
        TheoremClause(
            f"{prefix}-3",
            f"with a regular central element in the ideal, the amalgam is {word} "
            f"exactly when the base and the image-plus-ideal subring both are",
            "equivalence",
            lambda s, d: s.ideal_contains_regular_central(),
            lambda s, d, k=kind: s.am_holds(k, d) == (s.base_holds(k, d) and s.faj_holds(k, d)),
            vacuity_note=_REGULAR_CENTRAL_NOTE,
        ),
    ]


def clause_registry() -> tuple[TheoremClause, ...]:
    """All checkable clauses, in canonical report order."""
    clauses: list[TheoremClause] = [
        TheoremClause(
            "P2.1",
            "the amalgam is reduced exactly when the base is reduced and the "
            "ideal meets the target's nilpotents only at zero",
            "equivalence",
            lambda s, d: True,
            lambda s, d: s.am_reduced() == (s.base_reduced() and s.nil_target_meets_ideal_only_at_zero()),
            degree_sensitive=False,
        ),
        TheoremClause(
            "P2.1a",
            "a reduced base and a reduced target force a reduced amalgam",
            "implication",
            lambda s, d: s.base_reduced() and s.target_reduced(),
            lambda s, d: s.am_reduced(),
            degree_sensitive=False,
        ),
        TheoremClause(
            "P2.1b",
            "over a radical ideal, a reduced amalgam forces both the base and the target reduced",
            "implication",
            lambda s, d: s.ideal_radical() and s.am_reduced(),
            lambda s, d: s.base_reduced() and s.target_reduced(),
            degree_sensitive=False,
        ),
    ]
    clauses += _shared_triple(ARM, "T2.2", "armendariz")
    clauses += [
        TheoremClause(
            "T2.2-4",
            "when the ideal meets the target's nilpotents only at zero, the "
            "amalgam is armendariz exactly when the base is",
            "equivalence",
            lambda s, d: s.nil_target_meets_ideal_only_at_zero(),
            lambda s, d: s.am_holds(ARM, d) == s.base_holds(ARM, d),
        ),
        TheoremClause(
            "T2.2-5",
            "when the ideal's preimage meets the base's nilpotents only at zero, "
            "an armendariz image-plus-ideal subring forces an armendariz amalgam",
            "implication",
            lambda s, d: s.preimage_meets_nil_base_only_at_zero() and s.faj_holds(ARM, d),
            lambda s, d: s.am_holds(ARM, d),
        ),
    ]
    clauses += _shared_triple(NIL, "T3.1", "nil-armendariz")
    clauses += [
        TheoremClause(
            "T3.1-4",
            "when the ideal consists of nilpotents of the target, the amalgam "
            "is nil-armendariz exactly when the base is",
            "equivalence",
            lambda s, d: s.ideal_inside_nil_target(),
            lambda s, d: s.am_holds(NIL, d) == s.base_holds(NIL, d),
        ),
        TheoremClause(
            "T3.1-5",
            "when the ideal's preimage consists of nilpotents of the base, the "
            "amalgam is nil-armendariz exactly when the image-plus-ideal subring is",
            "equivalence",
            lambda s, d: s.preimage_inside_nil_base(),
            lambda s, d: s.am_holds(NIL, d) == s.faj_holds(NIL, d),
        ),
        TheoremClause(
            "T3.1-6i",
            "for an injective map whose image meets the ideal only at zero, the "
            "amalgam is nil-armendariz exactly when the image-plus-ideal subring is",
            "equivalence",
            lambda s, d: s.hom_injective() and s.image_meets_ideal_only_at_zero(),
            lambda s, d: s.am_holds(NIL, d) == s.faj_holds(NIL, d),
        ),
        TheoremClause(
            "T3.1-6ii",
            "for an injective map with the ideal inside the target's nilpotents, "
            "the amalgam is nil-armendariz exactly when the image-plus-ideal subring is",
            "equivalence",
            lambda s, d: s.hom_injective() and s.ideal_inside_nil_target(),
            lambda s, d: s.am_holds(NIL, d) == s.faj_holds(NIL, d),
        ),
    ]
    clauses += _shared_triple(WEAK, "T4.1", "weak-armendariz")
    clauses += [
        TheoremClause(
            "T4.1-4",
            "when the ideal consists of nilpotents of the target, the base is "
            "weak-armendariz exactly when the amalgam is",
            "equivalence",
            lambda s, d: s.ideal_inside_nil_target(),
            lambda s, d: s.base_holds(WEAK, d) == s.am_holds(WEAK, d),
        ),
        TheoremClause(
            "T4.1-5",
            "when the ideal's preimage consists of nilpotents of the base, a "
            "weak-armendariz image-plus-ideal subring forces a weak-armendariz amalgam",
            "implication",
            lambda s, d: s.preimage_inside_nil_base() and s.faj_holds(WEAK, d),
            lambda s, d: s.am_holds(WEAK, d),
        ),
        TheoremClause(
            "T4.1-6i",
            "for an injective map whose image meets the ideal only at zero, the "
            "amalgam is weak-armendariz exactly when the image-plus-ideal subring is",
            "equivalence",
            lambda s, d: s.hom_injective() and s.image_meets_ideal_only_at_zero(),
            lambda s, d: s.am_holds(WEAK, d) == s.faj_holds(WEAK, d),
        ),
        TheoremClause(
            "T4.1-6ii",
            "for an injective map with the ideal inside the target's nilpotents, "
            "a weak-armendariz image-plus-ideal subring forces a weak-armendariz amalgam",
            "implication",
            lambda s, d: s.hom_injective() and s.ideal_inside_nil_target() and s.faj_holds(WEAK, d),
            lambda s, d: s.am_holds(WEAK, d),
        ),
        TheoremClause(
            "T4.1-7",
            "a semicommutative ideal and a weak-armendariz base force a weak-armendariz amalgam",
            "implication",
            lambda s, d: s.ideal_semicommutative() and s.base_holds(WEAK, d),
            lambda s, d: s.am_holds(WEAK, d),
        ),
        TheoremClause(
            "T4.1-8",
            "a semicommutative ideal preimage and a weak-armendariz "
            "image-plus-ideal subring force a weak-armendariz amalgam",
            "implication",
            lambda s, d: s.preimage_semicommutative() and s.faj_holds(WEAK, d),
            lambda s, d: s.am_holds(WEAK, d),
        ),
    ]
    return tuple(clauses)


class OutcomeStatus(Enum):
    HYPOTHESIS_FAILED = "HYPOTHESIS_FAILED"
    PASSED = "PASSED"
    VIOLATION_CANDIDATE = "VIOLATION_CANDIDATE"
    HARD_VIOLATION = "HARD_VIOLATION"
    SKIPPED_BUDGET = "SKIPPED_BUDGET"


@dataclass(frozen=True)
class ClauseOutcome:
    clause_id: str
    scenario_key: str
    status: OutcomeStatus
    detail: str = ""


def evaluate_clause(clause: TheoremClause, scenario: Scenario, degree: int) -> ClauseOutcome:
    """Evaluate one clause on one scenario at one degree bound.

    A failed conclusion is re-examined at the next degree bound before being
    declared hard: bound-qualified verdicts can flip when the bound rises, so
    only a failure that survives escalation counts as a refutation.  Clauses
    about exact element-level properties skip the escalation, since nothing in
    them depends on the bound.
    """
    cid = clause.clause_id
    key = scenario.key
    try:
        if not clause.hypothesis(scenario, degree):
            return ClauseOutcome(cid, key, OutcomeStatus.HYPOTHESIS_FAILED)
        if clause.conclusion(scenario, degree):
            return ClauseOutcome(cid, key, OutcomeStatus.PASSED)
    except SearchBudgetError as exc:
        return ClauseOutcome(cid, key, OutcomeStatus.SKIPPED_BUDGET, str(exc))
    if not clause.degree_sensitive:
        return ClauseOutcome(
            cid, key, OutcomeStatus.HARD_VIOLATION, "conclusion fails and does not depend on the degree bound"
        )
    try:
        hyp_up = clause.hypothesis(scenario, degree + 1)
        concl_up = clause.conclusion(scenario, degree + 1) if hyp_up else True
    except SearchBudgetError as exc:
        return ClauseOutcome(
            cid,
            key,
            OutcomeStatus.VIOLATION_CANDIDATE,
            f"fails at degree bound {degree}; escalation hit the search budget: {exc}",
        )
    if hyp_up and not concl_up:
        return ClauseOutcome(
            cid,
            key,
            OutcomeStatus.HARD_VIOLATION,
            f"conclusion fails at degree bounds {degree} and {degree + 1}",
        )
    return ClauseOutcome(
        cid,
        key,
        OutcomeStatus.VIOLATION_CANDIDATE,
        f"fails at degree bound {degree} but is not sustained at {degree + 1}",
    )


def evaluate_scenario(
    scenario: Scenario,
    registry: tuple[TheoremClause, ...],
    degree: int,
    node_budget: Optional[int] = None,
) -> list[ClauseOutcome]:
    scenario.node_budget = node_budget
    return [evaluate_clause(clause, scenario, degree) for clause in registry]


# --------------------------------------------------------------------------
# corpus

@dataclass(frozen=True)
class CorpusConfig:
    """Knobs for the ring catalog and scenario enumeration."""

    zmod_min: int = 2
    zmod_max: int = 8
    include_matrix_atoms: bool = True
    include_truncated_atoms: bool = True
    max_product_size: int = 16
    max_amalgam_size: int = 64


def build_corpus(config: CorpusConfig = CorpusConfig()) -> list[tuple[str, FiniteRing]]:
    """Named atoms plus all unordered products of two atoms under the size cap."""
    atoms: list[tuple[str, FiniteRing]] = []
    for n in range(config.zmod_min, config.zmod_max + 1):
        atoms.append((f"zmod({n})", zmod(n)))
    if config.include_matrix_atoms:
        atoms.append(("upper(zmod(2),2)", upper_triangular(zmod(2), 2)))
        atoms.append(("matrix(zmod(2),2)", matrix_ring(zmod(2), 2)))
    if config.include_truncated_atoms:
        atoms.append(("polyquot(zmod(2),2)", poly_quotient(zmod(2), 2)))
        atoms.append(("polyquot(zmod(2),3)", poly_quotient(zmod(2), 3)))
        atoms.append(("polyquot(zmod(3),2)", poly_quotient(zmod(3), 2)))
    rings = list(atoms)
    for i, (name_i, ring_i) in enumerate(atoms):
        for name_j, ring_j in atoms[i:]:
            if ring_i.size * ring_j.size <= config.max_product_size:
                rings.append((f"product({name_i},{name_j})", direct_product(ring_i, ring_j)))
    return rings


def build_scenarios(config: CorpusConfig = CorpusConfig()) -> tuple[list[tuple[str, FiniteRing]], list[Scenario]]:
    """Every (A, B, f, J) the corpus affords within the amalgam size cap.

    Scenario order is canonical: corpus order for A and B, homomorphisms
    sorted by image table, ideals sorted by size then membership.
    """
    corpus = build_corpus(config)
    ideal_cache: dict[str, list[Ideal]] = {}
    scenarios: list[Scenario] = []
    for base_name, A in corpus:
        if A.size * 1 > config.max_amalgam_size:
            continue
        for target_name, B in corpus:
            bkey = B.digest()
            if bkey not in ideal_cache:
                ideal_cache[bkey] = [J for J in enumerate_ideals(B) if J.proper]
            usable = [J for J in ideal_cache[bkey] if A.size * len(J.members) <= config.max_amalgam_size]
            if not usable:
                continue
            for hom in enumerate_homs(A, B):
                for J in usable:
                    scenarios.append(Scenario(base_name, target_name, hom, J))
    return corpus, scenarios


# --------------------------------------------------------------------------
# harness

@dataclass
class ClauseSummary:
    clause_id: str
    summary: str
    shape: str
    tested: int = 0
    hypothesis_failed: int = 0
    passed: int = 0
    violation_candidates: list[tuple[str, str]] = field(default_factory=list)
    hard_violations: list[tuple[str, str]] = field(default_factory=list)
    skipped_budget: list[tuple[str, str]] = field(default_factory=list)
    vacuous_corpus_wide: bool = False
    note: str = ""

    @property
    def hypothesis_satisfied(self) -> int:
        return self.tested - self.hypothesis_failed


@dataclass
class HarnessReport:
    """Aggregated clause tallies over one corpus run.

    elapsed and workers describe the run, not the result; to_json_dict leaves
    them out so reports from different worker counts compare byte-identically.
    """

    degree: int
    config: CorpusConfig
    ring_names: list[str]
    scenario_count: int
    summaries: list[ClauseSummary]
    outcomes: list[list[ClauseOutcome]]
    elapsed: float
    workers: int

    @property
    def hard_violation_count(self) -> int:
        return sum(len(s.hard_violations) for s in self.summaries)

    @property
    def candidate_count(self) -> int:
        return sum(len(s.violation_candidates) for s in self.summaries)

    @property
    def skipped_count(self) -> int:
        return sum(len(s.skipped_budget) for s in self.summaries)

    def vacuous_clause_ids(self) -> list[str]:
        return [s.clause_id for s in self.summaries if s.vacuous_corpus_wide]

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "corpus": {
                "rings": list(self.ring_names),
                "scenario_count": self.scenario_count,
                "max_product_size": self.config.max_product_size,
                "max_amalgam_size": self.config.max_amalgam_size,
            },
            "clauses": {
                s.clause_id: {
                    "summary": s.summary,
                    "shape": s.shape,
                    "tested": s.tested,
                    "hypothesis_satisfied": s.hypothesis_satisfied,
                    "passed": s.passed,
                    "violation_candidates": [list(v) for v in s.violation_candidates],
                    "hard_violations": [list(v) for v in s.hard_violations],
                    "skipped_budget": [list(v) for v in s.skipped_budget],
                    "vacuous_corpus_wide": s.vacuous_corpus_wide,
                    "note": s.note,
                }
                for s in self.summaries
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


_WORKER_CTX: Optional[tuple[list[Scenario], tuple[TheoremClause, ...], int, Optional[int]]] = None


def _worker_init(config: CorpusConfig, degree: int, node_budget: Optional[int]) -> None:
    global _WORKER_CTX
    _, scenarios = build_scenarios(config)
    _WORKER_CTX = (scenarios, clause_registry(), degree, node_budget)


def _worker_eval(index: int) -> list[ClauseOutcome]:
    assert _WORKER_CTX is not None
    scenarios, registry, degree, node_budget = _WORKER_CTX
    return evaluate_scenario(scenarios[index], registry, degree, node_budget)


def run_harness(
    config: Optional[CorpusConfig] = None,
    *,
    degree: int = 2,
    workers: int = 1,
    node_budget: Optional[int] = None,
) -> HarnessReport:
    """Evaluate every clause on every scenario and aggregate the tallies.

    With workers > 1 the scenarios are distributed over processes; results
    are merged in scenario order, so the report is identical for any worker
    count.
    """
    if degree < 0:
        raise ValueError("degree bound must be non-negative")
    if workers < 1:
        raise ValueError("worker count must be at least 1")
    config = config or CorpusConfig()
    start = time.perf_counter()
    registry = clause_registry()
    corpus, scenarios = build_scenarios(config)
    if workers == 1:
        outcomes = [evaluate_scenario(s, registry, degree, node_budget) for s in scenarios]
    else:
        with ProcessPoolExecutor(
            max_workers=workers, initializer=_worker_init, initargs=(config, degree, node_budget)
        ) as pool:
            chunk = max(1, len(scenarios) // (workers * 4))
            outcomes = list(pool.map(_worker_eval, range(len(scenarios)), chunksize=chunk))

    summaries = {c.clause_id: ClauseSummary(c.clause_id, c.summary, c.shape) for c in registry}
    for outcome_list in outcomes:
        for o in outcome_list:
            s = summaries[o.clause_id]
            s.tested += 1
            if o.status is OutcomeStatus.HYPOTHESIS_FAILED:
                s.hypothesis_failed += 1
            elif o.status is OutcomeStatus.PASSED:
                s.passed += 1
            elif o.status is OutcomeStatus.VIOLATION_CANDIDATE:
                s.violation_candidates.append((o.scenario_key, o.detail))
            elif o.status is OutcomeStatus.HARD_VIOLATION:
                s.hard_violations.append((o.scenario_key, o.detail))
            else:
                s.skipped_budget.append((o.scenario_key, o.detail))
    for clause in registry:
        s = summaries[clause.clause_id]
        if s.tested > 0 and s.hypothesis_failed == s.tested:
            s.vacuous_corpus_wide = True
            s.note = clause.vacuity_note or "hypothesis never satisfied on this corpus"

    return HarnessReport(
        degree=degree,
        config=config,
        ring_names=[name for name, _ in corpus],
        scenario_count=len(scenarios),
        summaries=[summaries[c.clause_id] for c in registry],
        outcomes=outcomes,
        elapsed=time.perf_counter() - start,
        workers=workers,
    )
