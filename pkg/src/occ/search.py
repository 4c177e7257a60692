"""Exact Occ(m,n,r) by backtracking, or a certified interval when the search does not fit."""
import logging
from dataclasses import dataclass
from itertools import combinations, product
from typing import Any, Dict, List, Optional, Tuple

from src.config.search_configs import SEARCH_CONFIGS
from src.exceptions import VerificationError
from src.occ.bounds import BoundWitness, OccInstance, theorem_upper_bound
from src.occ.constructions import best_construction, family_of_words
from src.poset import FunctionFamily
from src.utils.family_loader import family_to_document

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OccCertificate:
    instance: OccInstance
    lower: int
    upper: int
    exact: Optional[int]
    witness_family: FunctionFamily
    witness_x: BoundWitness
    method: str
    construction: str
    nodes: int = 0
    search_exhausted: bool = False

    def to_document(self) -> Dict[str, Any]:
        document: Dict[str, Any] = {
            "m": self.instance.m,
            "n": self.instance.n,
            "r": self.instance.r,
            "lower": self.lower,
            "upper": self.upper,
            "method": self.method,
            "construction": self.construction,
            "witness_family": family_to_document(self.witness_family),
            "witness_x": self.witness_x.to_document(),
            "search_exhausted": self.search_exhausted,
        }
        if self.exact is not None:
            document["exact"] = self.exact
        return document


class _SearchExhausted(Exception):
    pass


class _UpperBoundReached(Exception):
    pass


class HereditarySearch:
    """
    Include-first backtracking over the n^m functions in lexicographic order.

    For every r-subset of positions the search keeps a count of chosen members
    per restriction. A member has radius <= r exactly when one of its
    restrictions is unique among the chosen members, so validity after an
    insertion is a lookup per member and r-subset.
    """

    def __init__(self, inst: OccInstance, incumbent: int, target: int, budget: int):
        self.inst = inst
        self.target = target
        self.budget = budget
        self.universe: List[Tuple[int, ...]] = list(product(range(inst.n), repeat=inst.m))
        subsets = list(combinations(range(inst.m), inst.r))
        self.keys = [
            [sum(f[p] * inst.n ** k for k, p in enumerate(s)) for s in subsets] for f in self.universe
        ]
        self.counts: List[Dict[int, int]] = [{} for _ in subsets]
        self.chosen: List[int] = []
        self.best_size = incumbent
        self.best: Optional[Tuple[int, ...]] = None
        self.nodes = 0

    def _add(self, u: int) -> None:
        for j, key in enumerate(self.keys[u]):
            self.counts[j][key] = self.counts[j].get(key, 0) + 1
        self.chosen.append(u)

    def _remove(self, u: int) -> None:
        for j, key in enumerate(self.keys[u]):
            self.counts[j][key] -= 1
        self.chosen.pop()

    def _valid(self) -> bool:
        return all(
            any(self.counts[j][key] == 1 for j, key in enumerate(self.keys[w])) for w in self.chosen
        )

    def _visit(self, i: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _SearchExhausted
        if len(self.chosen) > self.best_size:
            self.best_size = len(self.chosen)
            self.best = tuple(self.chosen)
            if self.best_size >= self.target:
                raise _UpperBoundReached
        if i == len(self.universe) or len(self.chosen) + len(self.universe) - i <= self.best_size:
            return
        self._add(i)
        if self._valid():
            self._visit(i + 1)
        self._remove(i)
        self._visit(i + 1)

    def run(self) -> bool:
        """True when the search finished (or met the upper bound) within budget."""
        try:
            self._visit(0)
        except _UpperBoundReached:
            logger.info(f"Search for {self.inst} met the upper bound {self.target}")
        except _SearchExhausted:
            logger.warning(f"Search for {self.inst} stopped after {self.budget} nodes")
            return False
        return True

    def best_family(self) -> Optional[FunctionFamily]:
        if self.best is None:
            return None
        return family_of_words([self.universe[u] for u in self.best], self.inst.n)


def exact_occ(inst: OccInstance, budget: Optional[int] = None, force_search: bool = False) -> OccCertificate:
    """
    Occ(m,n,r) exactly when possible, otherwise the interval [construction, bound].

    The search runs when the 2^(n^m) subfamilies fit the budget. Otherwise, or
    when it stops early, the certificate is exact only if the best construction
    meets the upper bound. `force_search` runs the search even when the
    construction already meets the bound, as an independent check.
    """
    budget = SEARCH_CONFIGS["poset"]["budget"] if budget is None else budget
    bound = theorem_upper_bound(inst)
    construction, family = best_construction(inst)
    lower, witness, method, nodes = len(family), family, "interval", 0
    exhausted = False
    exact: Optional[int] = None

    universe = inst.n ** inst.m
    if (lower < bound.p or force_search) and universe < budget.bit_length():
        search = HereditarySearch(inst, lower, bound.p, budget)
        finished = search.run()
        exhausted = not finished
        nodes = search.nodes
        found = search.best_family()
        if found is not None:
            lower, witness, construction = len(found), found, "search"
        if finished:
            exact, method = lower, "search"
            if exact > bound.p:
                raise VerificationError(f"Search found {exact} functions for {inst}, above the bound {bound.p}")
    if exact is None and lower == bound.p:
        exact, method = lower, "bounds"

    logger.info(f"Occ{(inst.m, inst.n, inst.r)}: [{lower}, {bound.p}], exact={exact} via {method}")
    return OccCertificate(inst, lower, bound.p, exact, witness, bound, method, construction, nodes, exhausted)
