"""The braid group action on reflection factorizations.

A braid word is a list of nonzero signed integers: letter +i applies the
move sigma_i, replacing positions (i, i+1) of the tuple by
(t_{i+1}, t_{i+1}^-1 t_i t_{i+1}); letter -i applies its inverse,
(t_i t_{i+1} t_i^-1, t_i).  Letters are 1-indexed.  Words act left to right.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

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
)
from .reflections import Reflection, class_label, classify

BraidWord = list[int]


class HurwitzError(Exception):
    """Invalid move, braid letter, or interval."""


@dataclass(frozen=True)
class Factorization:
    """An ordered tuple of reflections with a fixed product."""

    factors: tuple[Reflection, ...]
    params: GroupParams

    def __post_init__(self):
        for t in self.factors:
            if t.params != self.params:
                raise GroupError("factor parameters differ from the tuple's")

    def __len__(self) -> int:
        return len(self.factors)

    def product(self) -> WreathElement:
        return product((t.element for t in self.factors), self.params)

    def elements(self) -> tuple[WreathElement, ...]:
        return tuple(t.element for t in self.factors)

    def key(self):
        return tuple(element_key(t.element) for t in self.factors)


def factorization(factors, params: GroupParams) -> Factorization:
    return Factorization(tuple(factors), params)


def apply_move(f: Factorization, i: int, sign: int = 1) -> Factorization:
    """One Hurwitz move at position i (1-indexed); sign -1 for the inverse."""
    m = len(f)
    if not 1 <= i <= m - 1:
        raise HurwitzError(f"move index {i} out of range for length {m}")
    if sign not in (1, -1):
        raise HurwitzError(f"sign must be +-1, got {sign}")
    a, b = f.factors[i - 1], f.factors[i]
    if sign == 1:
        new_pair = (b.element, conjugate(a.element, b.element))
    else:
        new_pair = (multiply(multiply(a.element, b.element), inverse(a.element)), a.element)
    classified = tuple(classify(x) for x in new_pair)
    # T is closed under conjugation, so a non-reflection here is a hard bug.
    if any(t is None for t in classified):
        raise AssertionError("Hurwitz move produced a non-reflection")
    factors = f.factors[: i - 1] + classified + f.factors[i + 1 :]
    return Factorization(factors, f.params)


def apply_braid(f: Factorization, word: BraidWord) -> Factorization:
    for letter in word:
        if letter == 0:
            raise HurwitzError("braid letters are nonzero signed integers")
        f = apply_move(f, abs(letter), 1 if letter > 0 else -1)
    return f


def inverse_word(word: BraidWord) -> BraidWord:
    return [-letter for letter in reversed(word)]


def invariant_multiset(f: Factorization) -> Counter:
    """Multiset of conjugacy-class labels of the factors (orbit invariant)."""
    return Counter(class_label(t, f.params) for t in f.factors)


def multiset_key(f: Factorization) -> tuple:
    """Hashable form of invariant_multiset, for grouping."""
    return tuple(sorted((label.tag, label.value if label.value is not None else 0, count)
                        for label, count in invariant_multiset(f).items()))


# -- moves on tuples of general group elements ---------------------------
#
# Cabled factorizations have entries that need not be reflections, so the
# action is also provided on raw element tuples.

def apply_move_elements(xs: tuple[WreathElement, ...], i: int, sign: int = 1):
    m = len(xs)
    if not 1 <= i <= m - 1:
        raise HurwitzError(f"move index {i} out of range for length {m}")
    a, b = xs[i - 1], xs[i]
    if sign == 1:
        pair = (b, conjugate(a, b))
    else:
        pair = (multiply(multiply(a, b), inverse(a)), a)
    return xs[: i - 1] + pair + xs[i + 1 :]


def apply_braid_elements(xs: tuple[WreathElement, ...], word: BraidWord):
    for letter in word:
        if letter == 0:
            raise HurwitzError("braid letters are nonzero signed integers")
        xs = apply_move_elements(xs, abs(letter), 1 if letter > 0 else -1)
    return xs


# -- cabling -------------------------------------------------------------

@dataclass(frozen=True)
class Interval:
    """A 1-indexed closed interval [a, b] of tuple positions."""

    a: int
    b: int

    def __post_init__(self):
        if not 1 <= self.a <= self.b:
            raise HurwitzError(f"bad interval [{self.a}, {self.b}]")


def cable(f: Factorization, interval: Interval) -> tuple[WreathElement, ...]:
    """Merge the factors in the interval into a single (general) entry."""
    m = len(f)
    if interval.b > m:
        raise HurwitzError(f"interval [{interval.a}, {interval.b}] exceeds length {m}")
    xs = f.elements()
    block = product(xs[interval.a - 1 : interval.b], f.params)
    return xs[: interval.a - 1] + (block,) + xs[interval.b :]


def cable_elements(xs: tuple[WreathElement, ...], interval: Interval, params: GroupParams):
    if interval.b > len(xs):
        raise HurwitzError(f"interval [{interval.a}, {interval.b}] exceeds length {len(xs)}")
    block = product(xs[interval.a - 1 : interval.b], params)
    return xs[: interval.a - 1] + (block,) + xs[interval.b :]


def lift_braid_through_cable(word: BraidWord, interval: Interval, m: int):
    """Expand a braid word on a cabled tuple into one on the full tuple.

    Returns (full word, final interval): the cabled block moves under the
    action, so the interval is tracked as data.  With words applied left to
    right, a move adjacent to the block on the left expands to the ascending
    run [a-1, ..., b-1] (block shifts to [a-1, b-1]) and a move adjacent on
    the right to the descending run [b, ..., a] (block shifts to [a+1, b+1]);
    inverse moves expand to the letterwise inverses of those runs.  Moves
    away from the block pass through, with indices right of it shifted by
    the block width.
    """
    a, b = interval.a, interval.b
    if b > m:
        raise HurwitzError("interval exceeds tuple length")
    width = b - a
    full: BraidWord = []
    for letter in word:
        p, sign = abs(letter), 1 if letter > 0 else -1
        cabled_len = m - width
        if not 1 <= p <= cabled_len - 1:
            raise HurwitzError(f"letter {letter} invalid for cabled length {cabled_len}")
        if p < a - 1:
            full.append(sign * p)
        elif p > a:
            full.append(sign * (p + width))
        elif p == a - 1:
            if sign == 1:
                full.extend(range(a - 1, b))  # [a-1, ..., b-1]
            else:
                full.extend(-q for q in range(a - 1, b))
            a, b = a - 1, b - 1
        else:  # p == a
            if sign == 1:
                full.extend(range(b, a - 1, -1))  # [b, ..., a]
            else:
                full.extend(-q for q in range(b, a - 1, -1))
            a, b = a + 1, b + 1
    return full, Interval(a, b)


# -- general tuple invariants --------------------------------------------

def tuple_invariants_general(factors: tuple[Reflection, ...], params: GroupParams,
                             size_cap: int = 10**5):
    """The three Hurwitz invariants of an arbitrary reflection tuple:
    the product, the order of the generated subgroup H, and the multiset of
    H-conjugation orbits of the factors.

    Restricted to finite groups: in a generic cover H can be infinite.
    Orbits are returned as frozensets of element keys, with multiplicity.
    """
    if params.is_generic:
        raise GroupError("general tuple invariants need a finite group")
    prod = product((t.element for t in factors), params)

    gens = [t.element for t in factors]
    subgroup = {element_key(identity(params)): identity(params)}
    frontier = [identity(params)]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = multiply(x, g)
                key = element_key(y)
                if key not in subgroup:
                    if len(subgroup) >= size_cap:
                        raise GroupError(f"generated subgroup exceeds cap {size_cap}")
                    subgroup[key] = y
                    new.append(y)
        frontier = new

    members = list(subgroup.values())
    orbits = Counter()
    for t in factors:
        orbit = frozenset(element_key(conjugate(t.element, h)) for h in members)
        orbits[orbit] += 1
    return prod, len(subgroup), orbits
