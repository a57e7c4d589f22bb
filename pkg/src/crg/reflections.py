"""Reflections of G(d,1,n), G(d,d,n) and their generic covers: enumeration,
classification, conjugacy-class labels, Coxeter elements and Coxeter numbers.

A reflection is one of two shapes:

* transposition-like [(i j); k]: underlying permutation (i j), weights -k at
  coordinate i and +k at coordinate j (it fixes the hyperplane x_i = w^k x_j);
* diagonal [eps; k e_i] with k != 0: identity permutation, a single nonzero
  weight (it fixes the hyperplane x_i = 0).  Diagonals exist only when e = 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .groups import (
    INF,
    GroupError,
    GroupParams,
    WreathElement,
    conjugate,
    element_key,
)

TRANSPOSITION = "transposition"
DIAGONAL = "diagonal"


@dataclass(frozen=True)
class Reflection:
    """A classified reflection together with its raw group element."""

    kind: str  # TRANSPOSITION or DIAGONAL
    i: int  # smaller moved coordinate (transposition) or support (diagonal)
    j: int | None  # larger moved coordinate; None for diagonals
    k: int  # twist (transposition) or weight (diagonal)
    element: WreathElement

    @property
    def params(self) -> GroupParams:
        return self.element.params


@dataclass(frozen=True, order=True)
class ClassLabel:
    """Conjugacy-class label of a reflection.

    tag is one of:
      "T"     -- the single transposition-like class;
      "D"     -- diagonal class, value = weight residue in {1,...,d-1};
      "T_par" -- dihedral parity class (G(d,d,2) with d even, and the
                 infinite dihedral G(inf,inf,2)), value = twist parity;
      "W"     -- generic-cover diagonal class, value = exact integer weight.
    """

    tag: str
    value: int | None = None

    def __str__(self) -> str:
        if self.tag == "T_par":
            return "T_even" if self.value == 0 else "T_odd"
        if self.value is None:
            return self.tag
        return f"{self.tag}{self.value}"


def transposition_reflection(params: GroupParams, i: int, j: int, k: int) -> Reflection:
    """The reflection [(i j); k] (weights -k at i, +k at j)."""
    if not (1 <= i < j <= params.n):
        raise GroupError(f"need 1 <= i < j <= n, got ({i}, {j})")
    n = params.n
    perm = list(range(1, n + 1))
    perm[i - 1], perm[j - 1] = j, i
    weights = [0] * n
    weights[i - 1], weights[j - 1] = -k, k
    element = WreathElement.create(perm, weights, params)
    if not params.is_generic:
        k %= params.d
    return Reflection(TRANSPOSITION, i, j, k, element)


def diagonal_reflection(params: GroupParams, i: int, k: int) -> Reflection:
    """The reflection [eps; k e_i], k != 0 (mod d in a finite group)."""
    if params.diagonal_part_trivial:
        raise GroupError(f"no diagonal reflections in {params}")
    if not (1 <= i <= params.n):
        raise GroupError(f"coordinate {i} out of range")
    if not params.is_generic:
        k %= params.d
    if k == 0:
        raise GroupError("diagonal reflection needs nonzero weight")
    weights = [0] * params.n
    weights[i - 1] = k
    element = WreathElement.create(tuple(range(1, params.n + 1)), weights, params)
    return Reflection(DIAGONAL, i, None, k, element)


def classify(x: WreathElement) -> Reflection | None:
    """The Reflection view of x, or None if x is not a reflection."""
    n = x.params.n
    moved = [k for k in range(1, n + 1) if x.perm[k - 1] != k]
    if not moved:
        support = [k for k in range(1, n + 1) if x.weights[k - 1] != 0]
        if len(support) != 1:
            return None
        i = support[0]
        return Reflection(DIAGONAL, i, None, x.weights[i - 1], x)
    if len(moved) != 2:
        return None
    i, j = moved
    if x.perm[i - 1] != j or x.perm[j - 1] != i:
        return None
    d = x.params.d
    for k in range(1, n + 1):
        if k not in (i, j) and x.weights[k - 1] != 0:
            return None
    ki, kj = x.weights[i - 1], x.weights[j - 1]
    if x.params.is_generic:
        if ki + kj != 0:
            return None
        k = kj
    else:
        if (ki + kj) % d != 0:
            return None
        k = kj
    return Reflection(TRANSPOSITION, i, j, k, x)


def enumerate_reflections(params: GroupParams) -> list[Reflection]:
    """All reflections of a finite G(d,1,n) or G(d,d,n), duplicate-free."""
    if params.is_generic:
        raise GroupError("generic covers have infinitely many reflections; "
                         "use the reflection constructors instead")
    out = []
    n, d = params.n, params.d
    for i, j in itertools.combinations(range(1, n + 1), 2):
        for k in range(d):
            out.append(transposition_reflection(params, i, j, k))
    if not params.diagonal_part_trivial:
        for i in range(1, n + 1):
            for w in range(1, d):
                out.append(diagonal_reflection(params, i, w))
    return out


def class_label(r: Reflection, params: GroupParams) -> ClassLabel:
    """Closed-form conjugacy-class label (validated against the brute oracle).

    G(d,1,n): one class T of transposition-like reflections, and d-1 diagonal
    classes D_w by weight residue.  G(d,d,n): a single class for n >= 3; for
    n = 2 (the dihedral group of order 2d) one class when d is odd and two,
    split by twist parity, when d is even.  In the covers, diagonal classes
    are indexed by the exact integer weight and the transposition-like
    reflections form one class, except in the infinite dihedral
    G(inf,inf,2) where twist parity splits them in two.
    """
    if r.element.params != params:
        raise GroupError("reflection does not live in the given group")
    if r.kind == DIAGONAL:
        if params.is_generic:
            return ClassLabel("W", r.k)
        return ClassLabel("D", r.k % params.d)
    if params.is_generic:
        if params.e is INF and params.n == 2:
            return ClassLabel("T_par", r.k % 2)
        return ClassLabel("T")
    if params.diagonal_part_trivial and params.n == 2 and params.d % 2 == 0:
        return ClassLabel("T_par", r.k % 2)
    return ClassLabel("T")


def conjugacy_class_brute(r: Reflection, params: GroupParams,
                          size_cap: int = 10**6) -> set[WreathElement]:
    """Closure of {r} under conjugation by all reflections (oracle)."""
    if params.is_generic:
        raise GroupError("brute-force conjugacy needs a finite group")
    if params.order > size_cap:
        raise GroupError(f"group order {params.order} exceeds cap {size_cap}")
    gens = [s.element for s in enumerate_reflections(params)]
    seen = {element_key(r.element): r.element}
    frontier = [r.element]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = conjugate(x, g)
                key = element_key(y)
                if key not in seen:
                    seen[key] = y
                    new.append(y)
        frontier = new
    return set(seen.values())


def coxeter_element(params: GroupParams) -> WreathElement:
    """The standard Coxeter element.

    G(d,1,n) and G(inf,1,n): [(1 2 ... n); (0,...,0,1)].
    G(d,d,n) and G(inf,inf,n): [(1 2 ... n-1)(n); (0,...,0,1,-1)].
    """
    n = params.n
    if params.diagonal_part_trivial and params.d != 1:
        perm = tuple(list(range(2, n)) + [1, n])  # (1 2 ... n-1)(n) as k -> k+1
        weights = [0] * n
        weights[n - 2], weights[n - 1] = 1, -1
    else:
        perm = tuple(list(range(2, n + 1)) + [1])  # (1 2 ... n) as k -> k+1
        weights = [0] * (n - 1) + [1]
    return WreathElement.create(perm, weights, params)


@dataclass(frozen=True)
class CoxeterNumberData:
    reflection_count: int
    hyperplane_count: int
    h: int


def coxeter_number(params: GroupParams) -> CoxeterNumberData:
    """h = (|T| + |A|)/rank, with hyperplanes counted combinatorially.

    The hyperplane of [(i j); k] is keyed (i, j, k mod d) and that of a
    diagonal reflection by its coordinate.  For d = 1 (the symmetric group,
    admitted as a degenerate sanity backend) the representation on C^n is
    reducible and the effective rank is n - 1.
    """
    if params.is_generic:
        raise GroupError("Coxeter number requires a finite group")
    hyperplanes = set()
    refs = enumerate_reflections(params)
    for r in refs:
        if r.kind == TRANSPOSITION:
            hyperplanes.add((r.i, r.j, r.k % params.d))
        else:
            hyperplanes.add((r.i,))
    rank = params.n - 1 if params.d == 1 else params.n
    total = len(refs) + len(hyperplanes)
    if total % rank:
        raise GroupError(f"|T| + |A| = {total} not divisible by rank {rank}")
    return CoxeterNumberData(len(refs), len(hyperplanes), total // rank)


def affine_generators(params: GroupParams) -> list[Reflection]:
    """Simple generators s_1..s_{n-1}, s_0 of the affine symmetric group
    G(inf,inf,n): s_i = [(i i+1); 0] and s_0 = [(1 n); 1], listed with s_0
    last (index n)."""
    if not (params.is_generic and params.e is INF):
        raise GroupError("affine generators live in G(inf,inf,n)")
    gens = [transposition_reflection(params, i, i + 1, 0) for i in range(1, params.n)]
    gens.append(transposition_reflection(params, 1, params.n, 1))
    return gens
