"""Exact arithmetic in the wreath products behind G(d,1,n), G(d,d,n) and
their generic covers G(inf,1,n), G(inf,inf,n).

Elements are stored combinatorially as pairs [w; a] of a permutation (one-line
notation, 1-indexed) and a weight vector.  In a finite group the weights are
residues in {0,...,d-1}; in a generic cover they are plain integers.  No root
of unity is ever stored: the weight a_k is the exponent of the root of unity
appearing in the k-th column of the corresponding monomial matrix.

Composition convention: (wu)(k) = w(u(k)), so that

    [w; a] * [u; b] = [wu; u(a) + b],   u(a) = (a_{u(1)}, ..., a_{u(n)}),

matches multiplication of monomial matrices acting on column vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce


class GroupError(Exception):
    """Invalid group parameters or an element outside its group."""


class ParameterMismatchError(GroupError):
    """Binary operation on elements of different groups."""


class InfiniteOrderError(GroupError):
    """Order requested for an infinite-order element of a generic cover."""


# d (or e) equal to None marks the generic cover: weight arithmetic over the
# integers.  Using a sentinel rather than d = 0 makes mod-0 arithmetic
# unrepresentable.
INF = None


@dataclass(frozen=True)
class GroupParams:
    """The triple (d, e, n) with e in {1, d}, where d = None marks a cover."""

    d: int | None
    e: int | None
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise GroupError(f"rank n must be >= 2, got {self.n}")
        if self.d is INF:
            if self.e not in (1, INF):
                raise GroupError("cover parameter e must be 1 or inf")
        else:
            if not isinstance(self.d, int) or self.d < 1:
                raise GroupError(f"d must be a positive integer or inf, got {self.d!r}")
            if self.e not in (1, self.d):
                raise GroupError(f"e must be 1 or d={self.d}, got {self.e!r}")

    @property
    def is_generic(self) -> bool:
        return self.d is INF

    @property
    def diagonal_part_trivial(self) -> bool:
        """True for G(d,d,n) / G(inf,inf,n): total weight constrained to 0."""
        if self.is_generic:
            return self.e is INF
        return self.e == self.d

    @property
    def order(self) -> int:
        """Group order d^n * n! (resp. d^(n-1) * n!); covers are infinite."""
        if self.is_generic:
            raise GroupError("generic cover is infinite")
        power = self.n - 1 if self.diagonal_part_trivial else self.n
        return self.d**power * math.factorial(self.n)

    def generic_cover(self) -> "GroupParams":
        if self.is_generic:
            return self
        return GroupParams(INF, 1 if self.e == 1 else INF, self.n)

    @classmethod
    def parse(cls, text: str) -> "GroupParams":
        """Parse a "d,e,n" string, with "inf" for the cover marker."""
        parts = text.strip().split(",")
        if len(parts) != 3:
            raise GroupError(f"group string must have three fields: {text!r}")

        def field(s: str) -> int | None:
            s = s.strip()
            if s == "inf":
                return INF
            try:
                return int(s)
            except ValueError:
                raise GroupError(f"bad group parameter {s!r}") from None

        d, e, n = field(parts[0]), field(parts[1]), parts[2].strip()
        try:
            n = int(n)
        except ValueError:
            raise GroupError(f"bad rank {n!r}") from None
        return cls(d, e, n)

    def __str__(self) -> str:
        fmt = lambda v: "inf" if v is INF else str(v)
        return f"{fmt(self.d)},{fmt(self.e)},{self.n}"


def _check_perm(images: tuple[int, ...], n: int) -> None:
    if len(images) != n or sorted(images) != list(range(1, n + 1)):
        raise GroupError(f"not a permutation of 1..{n}: {images}")


def compose_perms(w: tuple[int, ...], u: tuple[int, ...]) -> tuple[int, ...]:
    """(wu)(k) = w(u(k))."""
    return tuple(w[u[k] - 1] for k in range(len(w)))


def invert_perm(w: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(w)
    for k, img in enumerate(w, start=1):
        inv[img - 1] = k
    return tuple(inv)


def perm_order(w: tuple[int, ...]) -> int:
    order = 1
    seen = [False] * len(w)
    for start in range(1, len(w) + 1):
        if seen[start - 1]:
            continue
        length, k = 0, start
        while not seen[k - 1]:
            seen[k - 1] = True
            k = w[k - 1]
            length += 1
        order = order * length // math.gcd(order, length)
    return order


@dataclass(frozen=True)
class WreathElement:
    """A group element [w; a]: permutation w plus weight vector a."""

    perm: tuple[int, ...]
    weights: tuple[int, ...]
    params: GroupParams

    def __post_init__(self):
        n = self.params.n
        _check_perm(self.perm, n)
        if len(self.weights) != n:
            raise GroupError(f"weight vector must have length {n}")
        if not self.params.is_generic:
            d = self.params.d
            if any(not (0 <= a < d) for a in self.weights):
                raise GroupError(f"weights must lie in 0..{d - 1}: {self.weights}")
        if self.params.diagonal_part_trivial:
            total = sum(self.weights)
            if (total if self.params.is_generic else total % self.params.d) != 0:
                raise GroupError(f"total weight must vanish in {self.params}: {self.weights}")

    @classmethod
    def create(cls, perm, weights, params: GroupParams) -> "WreathElement":
        """Build an element, reducing weights mod d in a finite group."""
        weights = tuple(weights)
        if not params.is_generic:
            weights = tuple(a % params.d for a in weights)
        return cls(tuple(perm), weights, params)

    def is_identity(self) -> bool:
        return all(self.perm[k] == k + 1 for k in range(self.params.n)) and not any(self.weights)


def identity(params: GroupParams) -> WreathElement:
    n = params.n
    return WreathElement(tuple(range(1, n + 1)), (0,) * n, params)


def _same_params(x: WreathElement, y: WreathElement) -> None:
    if x.params != y.params:
        raise ParameterMismatchError(f"incompatible groups {x.params} and {y.params}")


def multiply(x: WreathElement, y: WreathElement) -> WreathElement:
    """[w; a] * [u; b] = [wu; u(a) + b]."""
    _same_params(x, y)
    u = y.perm
    weights = tuple(x.weights[u[k] - 1] + y.weights[k] for k in range(len(u)))
    return WreathElement.create(compose_perms(x.perm, u), weights, x.params)


def inverse(x: WreathElement) -> WreathElement:
    winv = invert_perm(x.perm)
    # [w; a]^-1 = [w^-1; -w^-1(a)] since the product must be [eps; 0].
    weights = tuple(-x.weights[winv[k] - 1] for k in range(len(winv)))
    return WreathElement.create(winv, weights, x.params)


def conjugate(x: WreathElement, by: WreathElement) -> WreathElement:
    """by^-1 * x * by."""
    _same_params(x, by)
    return multiply(multiply(inverse(by), x), by)


def product(elements, params: GroupParams) -> WreathElement:
    return reduce(multiply, elements, identity(params))


def total_weight(x: WreathElement) -> int:
    total = sum(x.weights)
    return total if x.params.is_generic else total % x.params.d


def project(x: WreathElement, d: int) -> WreathElement:
    """Reduce a cover element's weights mod d (d = 1 gives the permutation)."""
    if not x.params.is_generic:
        raise GroupError("project applies to generic-cover elements only")
    if d < 1:
        raise GroupError(f"modulus must be positive, got {d}")
    e = 1 if (x.params.e == 1 or d == 1) else d
    target = GroupParams(d, e, x.params.n)
    return WreathElement.create(x.perm, x.weights, target)


def power(x: WreathElement, k: int) -> WreathElement:
    if k < 0:
        return power(inverse(x), -k)
    result = identity(x.params)
    base = x
    while k:
        if k & 1:
            result = multiply(result, base)
        base, k = multiply(base, base), k >> 1
    return result


def element_order(x: WreathElement) -> int:
    """Least k >= 1 with x^k = identity; raises InfiniteOrderError in a cover."""
    ell = perm_order(x.perm)
    y = power(x, ell)  # y = [eps; s]
    if x.params.is_generic:
        if any(y.weights):
            raise InfiniteOrderError("element has infinite order")
        return ell
    d = x.params.d
    diag_order = 1
    for s in y.weights:
        o = d // math.gcd(d, s) if s else 1
        diag_order = diag_order * o // math.gcd(diag_order, o)
    return ell * diag_order


# -- packed encoding -----------------------------------------------------
#
# For n <= 8 and d <= 16 an element packs into a single machine word:
# 3 bits per permutation entry followed by 4 bits per weight entry.  Used as
# the deduplication key of the orbit search; falls back to a byte string for
# parameters outside the packing range.

_PACK_N = 8
_PACK_D = 16


def packable(params: GroupParams) -> bool:
    return not params.is_generic and params.n <= _PACK_N and params.d <= _PACK_D


def pack(x: WreathElement) -> int:
    word = 0
    for img in x.perm:
        word = (word << 3) | (img - 1)
    for a in x.weights:
        word = (word << 4) | a
    return word


def unpack(word: int, params: GroupParams) -> WreathElement:
    n = params.n
    weights = []
    for _ in range(n):
        weights.append(word & 0xF)
        word >>= 4
    perm = []
    for _ in range(n):
        perm.append((word & 0x7) + 1)
        word >>= 3
    return WreathElement(tuple(reversed(perm)), tuple(reversed(weights)), params)


def element_key(x: WreathElement):
    """Compact hashable key, packed when the parameters allow it."""
    if packable(x.params):
        return pack(x)
    return (x.perm, x.weights)


def all_elements(params: GroupParams):
    """Iterate over a finite group (small groups only; used by oracles)."""
    import itertools

    if params.is_generic:
        raise GroupError("cannot enumerate a generic cover")
    n, d = params.n, params.d
    for perm in itertools.permutations(range(1, n + 1)):
        if params.diagonal_part_trivial:
            for partial in itertools.product(range(d), repeat=n - 1):
                last = (-sum(partial)) % d
                yield WreathElement(perm, partial + (last,), params)
        else:
            for weights in itertools.product(range(d), repeat=n):
                yield WreathElement(perm, weights, params)
