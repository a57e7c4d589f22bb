"""Exhaustive enumeration of reflection factorizations and their Hurwitz
orbits, with braid-word certificates.

Deduplication keys on the packed per-element encoding (a tuple of machine
words per factorization), so orbit sets stay compact.  All searches carry
explicit budgets and fail loudly with partial-result flags rather than
truncating silently.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .groups import GroupError, GroupParams, WreathElement, element_key, inverse, multiply
from .hurwitz import BraidWord, Factorization, apply_braid, apply_move, multiset_key
from .lifting import _length_table
from .reflections import coxeter_element, enumerate_reflections

DEFAULT_ENUM_BUDGET = 10**8
DEFAULT_ORBIT_BUDGET = 10**7


class BudgetExceededError(Exception):
    """A search budget was exhausted; the result would be incomplete."""


class NotConnectedError(Exception):
    """Two factorizations proven to lie in different Hurwitz orbits."""


def enumerate_factorizations(params: GroupParams, target: WreathElement, m: int,
                             budget: int = DEFAULT_ENUM_BUDGET) -> list[Factorization]:
    """All length-m reflection tuples with the given product, in the
    lexicographic order of their packed encodings.

    Depth-first with pruning by the reflection length of the residual
    quotient (BFS distance table over the whole group).
    """
    if params.is_generic:
        raise GroupError("enumeration needs a finite group")
    if m < 0:
        raise GroupError("length must be nonnegative")
    table = _length_table(params)
    refs = sorted(enumerate_reflections(params), key=lambda r: element_key(r.element))
    inverses = [inverse(r.element) for r in refs]
    out: list[Factorization] = []
    visits = 0

    def descend(residual: WreathElement, remaining: int, prefix: list):
        nonlocal visits
        visits += 1
        if visits > budget:
            raise BudgetExceededError(f"enumeration budget {budget} exhausted")
        if remaining == 0:
            if residual.is_identity():
                out.append(Factorization(tuple(prefix), params))
            return
        if table[element_key(residual)] > remaining:
            return
        for r, rinv in zip(refs, inverses):
            prefix.append(r)
            descend(multiply(rinv, residual), remaining - 1, prefix)
            prefix.pop()

    # prefix product p, residual q with p*q = target: picking factor r
    # updates q <- r^-1 * q.
    descend(target, m, [])
    return out


@dataclass
class OrbitResult:
    """A full Hurwitz orbit with parent pointers for certificates."""

    start: Factorization
    members: dict  # key -> Factorization
    parents: dict  # key -> (parent key, letter); start maps to None

    def word_to(self, key) -> BraidWord:
        word: BraidWord = []
        cur = key
        while self.parents[cur] is not None:
            cur, letter = self.parents[cur]
            word.append(letter)
        word.reverse()
        return word

    def __len__(self) -> int:
        return len(self.members)


def orbit_bfs(start: Factorization, budget: int = DEFAULT_ORBIT_BUDGET,
              threads: int = 1, stop_key=None) -> OrbitResult:
    """Closure of a factorization under all Hurwitz moves and their
    inverses.  Deterministic regardless of thread count: the frontier is
    expanded in order and deduplicated sequentially.  If ``stop_key`` is
    reached the search stops early (used for certificate queries)."""
    m = len(start)
    moves = [(i, s) for i in range(1, m) for s in (1, -1)]

    def expand(f: Factorization):
        return [(apply_move(f, i, s), s * i) for i, s in moves]

    start_key = start.key()
    members = {start_key: start}
    parents = {start_key: None}
    frontier = [start]
    while frontier:
        if threads > 1 and len(frontier) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                expansions = list(pool.map(expand, frontier))
        else:
            expansions = [expand(f) for f in frontier]
        new = []
        for f, expansion in zip(frontier, expansions):
            fkey = f.key()
            for g, letter in expansion:
                gkey = g.key()
                if gkey in members:
                    continue
                if len(members) >= budget:
                    raise BudgetExceededError(f"orbit budget {budget} exhausted")
                members[gkey] = g
                parents[gkey] = (fkey, letter)
                new.append(g)
                if stop_key is not None and gkey == stop_key:
                    return OrbitResult(start, members, parents)
        frontier = new
    return OrbitResult(start, members, parents)


def same_orbit(f: Factorization, g: Factorization,
               budget: int = DEFAULT_ORBIT_BUDGET) -> BraidWord:
    """A braid word taking f to g, or NotConnectedError backed by an
    exhausted closed orbit.  Budget exhaustion raises BudgetExceededError
    (indeterminate, distinct from not-connected)."""
    if f.params != g.params or len(f) != len(g):
        raise GroupError("factorizations must share group and length")
    if f.product() != g.product():
        raise GroupError("factorizations must share their product")
    gkey = g.key()
    if f.key() == gkey:
        return []
    result = orbit_bfs(f, budget=budget, stop_key=gkey)
    if gkey in result.members:
        word = result.word_to(gkey)
        if apply_braid(f, word).key() != gkey:
            raise AssertionError("certificate replay failed")
        return word
    raise NotConnectedError("factorizations lie in different Hurwitz orbits")


@dataclass
class OrbitReport:
    """Orbit-versus-invariant partition report for one (group, length)."""

    group: GroupParams
    target: WreathElement
    length: int
    factorization_count: int
    orbit_count: int
    class_multiset_count: int
    match: bool
    orbit_sizes: list[int] = field(default_factory=list)
    orbit_multisets: list[tuple] = field(default_factory=list)
    complete: bool = True

    def to_json(self) -> dict:
        return {
            "v": 1,
            "group": str(self.group),
            "target": {"perm": list(self.target.perm),
                       "weights": list(self.target.weights)},
            "length": self.length,
            "factorization_count": self.factorization_count,
            "orbit_count": self.orbit_count,
            "class_multiset_count": self.class_multiset_count,
            "match": self.match,
            "orbit_sizes": self.orbit_sizes,
            "orbit_multisets": [[list(entry) for entry in ms]
                                for ms in self.orbit_multisets],
            "complete": self.complete,
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def verify_main_theorem(params: GroupParams, m: int,
                        enum_budget: int = DEFAULT_ENUM_BUDGET,
                        orbit_budget: int = DEFAULT_ORBIT_BUDGET,
                        threads: int = 1) -> OrbitReport:
    """Partition all length-m factorizations of the standard Coxeter element
    into Hurwitz orbits and compare with the class-multiset partition.

    match is True iff the two partitions coincide (both directions: every
    orbit sits inside one multiset block -- a cheap assert that holds
    unconditionally -- and every multiset block is a single orbit).
    """
    target = coxeter_element(params)
    facts = enumerate_factorizations(params, target, m, budget=enum_budget)

    blocks: dict[tuple, list[Factorization]] = {}
    for f in facts:
        blocks.setdefault(multiset_key(f), []).append(f)

    orbit_sizes: list[int] = []
    orbit_multisets: list[tuple] = []
    seen: set = set()
    match = True
    for mkey in sorted(blocks):
        block = blocks[mkey]
        block_keys = {f.key() for f in block}
        block_orbits = 0
        for f in block:
            if f.key() in seen:
                continue
            orbit = orbit_bfs(f, budget=orbit_budget, threads=threads)
            for gkey in orbit.members:
                # Soundness direction: an orbit never leaves its block.
                if gkey not in block_keys:
                    raise AssertionError("Hurwitz orbit escaped its invariant block")
                seen.add(gkey)
            orbit_sizes.append(len(orbit))
            orbit_multisets.append(mkey)
            block_orbits += 1
        if block_orbits != 1:
            match = False
    if sum(orbit_sizes) != len(facts):
        raise AssertionError("orbits do not partition the factorization set")
    return OrbitReport(
        group=params,
        target=target,
        length=m,
        factorization_count=len(facts),
        orbit_count=len(orbit_sizes),
        class_multiset_count=len(blocks),
        match=match,
        orbit_sizes=orbit_sizes,
        orbit_multisets=orbit_multisets,
    )
