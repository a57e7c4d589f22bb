"""Lifting reflection factorizations of the standard Coxeter element from
G(d,1,n) or G(d,d,n) to the generic cover, factor by factor over the
mod-d projection.

The construction first lifts all factors canonically except one chosen pivot,
adjusts the pivot so the product lands close to the cover's standard Coxeter
element (total weight 1 for G(d,1,n); weight -1 at coordinate n for
G(d,d,n)), and then conjugates the whole tuple by a diagonal correction
delta whose projection is the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .groups import (
    GroupError,
    GroupParams,
    WreathElement,
    conjugate,
    element_key,
    identity,
    inverse,
    multiply,
    product,
    project,
)
from .hurwitz import Factorization
from .reflections import (
    DIAGONAL,
    TRANSPOSITION,
    Reflection,
    classify,
    coxeter_element,
    diagonal_reflection,
    enumerate_reflections,
    transposition_reflection,
)


class LiftError(Exception):
    """Input is not a reflection factorization of the standard Coxeter element."""


@dataclass(frozen=True)
class LiftResult:
    factorization: Factorization  # in the generic cover
    delta: WreathElement  # diagonal correction; projects to the identity


def canonical_lift(t: Reflection, cover: GroupParams) -> Reflection:
    """Lift with twist/weight taken in the stored residue range {0,...,d-1}."""
    if t.kind == TRANSPOSITION:
        return transposition_reflection(cover, t.i, t.j, t.k)
    return diagonal_reflection(cover, t.i, t.k)


def lift_with_delta(f: Factorization,
                    choose: Callable[[int, Reflection], Reflection] | None = None,
                    ) -> LiftResult:
    """Lift a factorization of the standard Coxeter element to the cover.

    ``choose(index, factor)`` may supply an arbitrary lift (any cover
    reflection projecting onto the factor) for the non-pivot positions; the
    diagonal correction absorbs the choice.
    """
    params = f.params
    if params.is_generic:
        raise LiftError("input must live in a finite group")
    d = params.d
    c = coxeter_element(params)
    if f.product() != c:
        raise LiftError("product is not the standard Coxeter element")
    cover = params.generic_cover()
    n = params.n

    # Pivot selection.  G(d,1,n): the first diagonal factor (one always
    # exists, since a product of transposition-like reflections has weight
    # 0 while c does not... more precisely lies in G(d,d,n)).  G(d,d,n):
    # the first factor whose underlying permutation is (a n); all other
    # reflections fix the basis vector e_n, which c does not.
    pivot = None
    for idx, t in enumerate(f.factors):
        if params.diagonal_part_trivial:
            if t.kind == TRANSPOSITION and t.j == n:
                pivot = idx
                break
        else:
            if t.kind == DIAGONAL:
                pivot = idx
                break
    if pivot is None:
        raise AssertionError("no admissible pivot; input cannot be a "
                             "factorization of the standard Coxeter element")

    lifts: list[Reflection] = []
    for idx, t in enumerate(f.factors):
        if choose is not None and idx != pivot:
            lifted = choose(idx, t)
            if lifted.params != cover or project(lifted.element, d) != t.element:
                raise LiftError(f"chosen lift at index {idx} does not project back")
        else:
            lifted = canonical_lift(t, cover)
        lifts.append(lifted)

    def with_pivot_shift(s: int) -> list[Reflection]:
        t = f.factors[pivot]
        if t.kind == TRANSPOSITION:
            shifted = transposition_reflection(cover, t.i, t.j, t.k + d * s)
        else:
            shifted = diagonal_reflection(cover, t.i, t.k + d * s)
        out = list(lifts)
        out[pivot] = shifted
        return out

    def prod_of(factors: list[Reflection]) -> WreathElement:
        return product((t.element for t in factors), cover)

    # Solve for the pivot shift: the relevant weight statistic is affine in
    # the shift s with slope +-d, so two evaluations determine it.
    if params.diagonal_part_trivial:
        stat = lambda x: x.weights[n - 1]
        target = -1
    else:
        stat = lambda x: sum(x.weights)
        target = 1
    v0 = stat(prod_of(with_pivot_shift(0)))
    v1 = stat(prod_of(with_pivot_shift(1)))
    slope = v1 - v0
    if slope == 0 or (target - v0) % slope:
        raise AssertionError("pivot shift equation has no integer solution")
    lifts = with_pivot_shift((target - v0) // slope)

    c_tilde = coxeter_element(cover)
    c_prime = prod_of(lifts)
    if c_prime.perm != c_tilde.perm:
        raise AssertionError("lifted product has the wrong underlying permutation")

    # Diagonal correction: a' = a + d*b componentwise, delta built from the
    # partial sums of b conjugates the primed product back to c~.
    b = []
    for ai, ai_prime in zip(c_tilde.weights, c_prime.weights):
        diff = ai_prime - ai
        if diff % d:
            raise AssertionError("lifted product does not project to c")
        b.append(diff // d)
    if sum(b) != 0:
        raise AssertionError("weight defect does not sum to zero")
    if params.diagonal_part_trivial and b[n - 1] != 0:
        raise AssertionError("coordinate-n defect must vanish for G(d,d,n)")
    partial = [0] * n
    for i in range(1, n):
        partial[i] = partial[i - 1] + b[i - 1]
    # delta need not have weight 0, so it lives in the ambient G(inf,1,n);
    # conjugation by it preserves weight and maps the cover to itself.
    ambient = GroupParams(None, 1, n)
    delta = WreathElement.create(tuple(range(1, n + 1)),
                                 tuple(d * p for p in partial), ambient)

    corrected = []
    for t in lifts:
        moved = conjugate(WreathElement(t.element.perm, t.element.weights, ambient), delta)
        r = classify(WreathElement(moved.perm, moved.weights, cover))
        if r is None:
            raise AssertionError("delta-conjugation left the reflection set")
        corrected.append(r)
    lifted_f = Factorization(tuple(corrected), cover)
    if lifted_f.product() != c_tilde:
        raise AssertionError("corrected lift does not multiply to c~")
    return LiftResult(lifted_f, delta)


def lift_factorization(f: Factorization,
                       choose: Callable[[int, Reflection], Reflection] | None = None,
                       ) -> Factorization:
    """Convenience wrapper returning just the lifted factorization."""
    return lift_with_delta(f, choose).factorization


# -- reflection length ---------------------------------------------------

class LengthCapError(Exception):
    """Search-depth cap exceeded: reflection length unknown >= cap."""

    def __init__(self, cap: int):
        super().__init__(f"reflection length unknown, >= {cap}")
        self.cap = cap


_length_tables: dict[GroupParams, dict] = {}


def _length_table(params: GroupParams) -> dict:
    """BFS distances from the identity in the reflection Cayley graph."""
    table = _length_tables.get(params)
    if table is not None:
        return table
    if params.order > 10**6:
        raise GroupError(f"group order {params.order} exceeds the length-table cap")
    gens = [t.element for t in enumerate_reflections(params)]
    start = identity(params)
    table = {element_key(start): 0}
    frontier = [start]
    dist = 0
    while frontier:
        dist += 1
        new = []
        for x in frontier:
            for g in gens:
                y = multiply(x, g)
                key = element_key(y)
                if key not in table:
                    table[key] = dist
                    new.append(y)
        frontier = new
    _length_tables[params] = table
    return table


def _cycle_count(perm: tuple[int, ...]) -> int:
    n = len(perm)
    seen = [False] * n
    cycles = 0
    for start in range(1, n + 1):
        if seen[start - 1]:
            continue
        cycles += 1
        k = start
        while not seen[k - 1]:
            seen[k - 1] = True
            k = perm[k - 1]
    return cycles


def reflection_length(g: WreathElement, depth_cap: int = 8) -> int:
    """Least m with g a product of m reflections (0 for the identity).

    Finite groups use a cached BFS table over the whole group.  Generic-cover
    elements use iterative-deepening search over reflections with bounded
    twists; if no factorization is found within ``depth_cap`` factors, a
    LengthCapError is raised ("unknown >= cap").
    """
    if not g.params.is_generic:
        return _length_table(g.params)[element_key(g)]

    n = g.params.n
    full_cover = g.params.e == 1

    def candidates(x: WreathElement):
        window = max((abs(a) for a in x.weights), default=0) + 1
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for k in range(-window, window + 1):
                    yield transposition_reflection(g.params, i, j, k)
        if full_cover:
            for i in range(1, n + 1):
                w = x.weights[i - 1]
                if w != 0:
                    yield diagonal_reflection(g.params, i, w)

    def search(x: WreathElement, remaining: int) -> bool:
        if x.is_identity():
            return True
        if remaining == 0:
            return False
        # At least n - #cycles transpositions are needed to fix the
        # permutation; nonzero weights on fixed points each need a factor.
        if n - _cycle_count(x.perm) > remaining:
            return False
        for r in candidates(x):
            if search(multiply(x, inverse(r.element)), remaining - 1):
                return True
        return False

    for depth in range(depth_cap + 1):
        if search(g, depth):
            return depth
    raise LengthCapError(depth_cap)
