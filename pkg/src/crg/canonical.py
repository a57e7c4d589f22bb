"""Canonical representatives of Hurwitz orbits of factorizations of the
standard Coxeter element in G(inf,1,n), with full braid-word certificates.

The reduction pipeline:

1. front all diagonal factors;
2. push every diagonal's support to the first coordinate (via a two-move
   exchange with a transposition-like factor touching coordinates 1 and j);
3. normalize the transposition-like suffix so its projection to the
   symmetric group is ((1 2), ..., (1 2), (1 2), (2 3), ..., (n-1 n));
4. reduce the [(1 2); *] block to equal adjacent pairs followed by
   [(1 2); 0] (infinite-dihedral pair reduction);
5. zero the pair twists by cycling them around the cabled diagonal block;
6. sort the diagonal weights.

Steps 2 and 3 rely on existence statements about transposition
factorizations of a long cycle; they are realized here as bounded
breadth-first searches in the projected symmetric-group tuple, which keeps
every step certificate-producing.  Budgets fail loudly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import GroupParams, WreathElement, product
from .hurwitz import (
    BraidWord,
    Factorization,
    Interval,
    apply_braid,
    apply_braid_elements,
    apply_move,
    cable,
    lift_braid_through_cable,
)
from .reflections import (
    DIAGONAL,
    TRANSPOSITION,
    Reflection,
    classify,
    coxeter_element,
)


class CanonicalizationError(Exception):
    """Input outside the supported shape (wrong product, non-reflection)."""


class SearchBudgetError(CanonicalizationError):
    """A bounded-search stage ran out of budget; never a wrong answer."""


DEFAULT_SEARCH_BUDGET = 10**6


@dataclass(frozen=True)
class CanonicalForm:
    """The unique orbit representative: sorted first-coordinate diagonal
    weights, a count of zero-twist [(1 2); 0] pairs, and the rank."""

    diag_weights: tuple[int, ...]
    pair_count: int
    n: int

    def projected_key(self, d: int) -> tuple:
        """Mod-d identity of the form: residue multiset of the diagonal
        weights plus the pair count.  Two inputs have equal projected keys
        iff their mod-d canonical tuples coincide; the integer weights
        themselves depend on the chosen lift."""
        return (tuple(sorted(w % d for w in self.diag_weights)), self.pair_count, self.n)

    def realize(self) -> Factorization:
        """The representative tuple in G(inf,1,n)."""
        from .reflections import diagonal_reflection, transposition_reflection

        params = GroupParams(None, 1, self.n)
        factors = [diagonal_reflection(params, 1, w) for w in self.diag_weights]
        for _ in range(2 * self.pair_count):
            factors.append(transposition_reflection(params, 1, 2, 0))
        for i in range(1, self.n):
            factors.append(transposition_reflection(params, i, i + 1, 0))
        return Factorization(tuple(factors), params)


def canonical_projection(cf: CanonicalForm, d: int) -> Factorization:
    """The mod-d image of the realized canonical tuple, in G(d,1,n)."""
    from .groups import project
    from .hurwitz import Factorization as F

    realized = cf.realize()
    projected = tuple(classify(project(x, d)) for x in realized.elements())
    if any(t is None for t in projected):
        raise CanonicalizationError("canonical tuple does not project to reflections")
    return F(projected, GroupParams(d, 1, cf.n))


def _diagonal_count(f: Factorization) -> int:
    k = 0
    for t in f.factors:
        if t.kind == DIAGONAL:
            k += 1
        else:
            break
    return k


def front_diagonals(f: Factorization) -> tuple[Factorization, BraidWord]:
    """Move all diagonal factors before all transposition-like factors."""
    word: BraidWord = []
    changed = True
    while changed:
        changed = False
        for i in range(1, len(f)):
            if f.factors[i - 1].kind == TRANSPOSITION and f.factors[i].kind == DIAGONAL:
                f = apply_move(f, i, 1)
                word.append(i)
                changed = True
    return f, word


# -- bounded search in the projected symmetric-group tuple ----------------

def _conj_pair(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    """Conjugate the transposition a by the transposition b in S_n."""
    def img(x: int) -> int:
        if x == b[0]:
            return b[1]
        if x == b[1]:
            return b[0]
        return x

    i, j = img(a[0]), img(a[1])
    return (i, j) if i < j else (j, i)


def _projected_move(state, p: int, sign: int):
    a, b = state[p - 1], state[p]
    if sign == 1:
        pair = (b, _conj_pair(a, b))
    else:
        pair = (_conj_pair(b, a), a)
    return state[: p - 1] + pair + state[p + 1 :]


def _projected_search(start, goal, budget: int) -> BraidWord:
    """BFS over projected transposition tuples; returns a braid word (in
    block-local letters) reaching the first state satisfying ``goal``."""
    if goal(start):
        return []
    parents = {start: None}
    frontier = [start]
    while frontier:
        new = []
        for state in frontier:
            for p in range(1, len(state)):
                for sign in (1, -1):
                    nxt = _projected_move(state, p, sign)
                    if nxt in parents:
                        continue
                    parents[nxt] = (state, sign * p)
                    if len(parents) > budget:
                        raise SearchBudgetError("projected-tuple search budget exhausted")
                    if goal(nxt):
                        word: BraidWord = []
                        cur = nxt
                        while parents[cur] is not None:
                            cur, letter = parents[cur]
                            word.append(letter)
                        word.reverse()
                        return word
                    new.append(nxt)
        frontier = new
    raise CanonicalizationError("projected-tuple goal unreachable (invalid input)")


def _projection_state(f: Factorization, start: int):
    """Transposition pairs of the projected factors at positions > start."""
    state = []
    for t in f.factors[start:]:
        if t.kind != TRANSPOSITION:
            raise CanonicalizationError("non-transposition factor in suffix")
        state.append((t.i, t.j))
    return tuple(state)


def push_diagonal_to_first_coordinate(f: Factorization, slot: int,
                                      budget: int = DEFAULT_SEARCH_BUDGET,
                                      ) -> tuple[Factorization, BraidWord]:
    """Rewrite the diagonal at ``slot`` to have its weight at coordinate 1.

    Requires a fronted factorization.  The diagonal is first commuted to the
    last diagonal slot k; the transposition suffix is then rearranged (by
    bounded search in the projection) so its first factor touches
    coordinates 1 and j, and a two-move exchange transfers the diagonal's
    support from j to 1.  The weight value is preserved.
    """
    k = _diagonal_count(f)
    if not 1 <= slot <= k or f.factors[slot - 1].kind != DIAGONAL:
        raise CanonicalizationError(f"slot {slot} is not a diagonal position")
    word: BraidWord = []
    j = f.factors[slot - 1].i
    if j == 1:
        return f, word
    # Commute the diagonal to slot k (exact swaps: diagonals commute).
    for p in range(slot, k):
        f = apply_move(f, p, 1)
        word.append(p)
    if k == len(f):
        raise CanonicalizationError("no transposition-like factor available")
    # Arrange a transposition touching {1, j} as the first suffix factor.
    target = (1, j)
    sub = _projected_search(_projection_state(f, k),
                            lambda s: s[0] == target, budget)
    shifted = [letter + k if letter > 0 else letter - k for letter in sub]
    f = apply_braid(f, shifted)
    word.extend(shifted)
    # Two moves at the boundary swap the diagonal's support from j to 1.
    f = apply_braid(f, [k, k])
    word.extend([k, k])
    moved = f.factors[k - 1]
    if moved.kind != DIAGONAL or moved.i != 1:
        raise AssertionError("support transfer failed")
    return f, word


# -- infinite-dihedral pair reduction ------------------------------------

def _is_r_block(factors) -> bool:
    return all(t.kind == TRANSPOSITION and (t.i, t.j) == (1, 2) for t in factors)


def pair_reduce_dihedral(f: Factorization) -> tuple[Factorization, BraidWord]:
    """Bring a tuple of [(1 2); *] reflections with product [(1 2); 0] into
    the shape (r_b1, r_b1, r_b2, r_b2, ..., [(1 2); 0]).

    Works on the twist sequence: a move at position p replaces (c_p, c_{p+1})
    by (c_{p+1}, 2c_{p+1} - c_p) (conjugation rule r_a^{r_b} = r_{2b-a}), so
    the differences u = c_{p+1} - c_p, v = c_{p+2} - c_{p+1} of a
    three-factor window transform by Euclidean steps u -> u +- v,
    v -> v +- u.  Each window is driven to u = 0, pairing positions
    (p, p+1); the alternating-sum invariant then forces the final twist to 0.
    """
    m = len(f)
    if m % 2 == 0:
        raise CanonicalizationError("pair reduction needs odd length")
    if not _is_r_block(f.factors):
        raise CanonicalizationError("all factors must be [(1 2); *] reflections")
    twists = [t.k for t in f.factors]
    if sum(c * (1 if i % 2 == 0 else -1) for i, c in enumerate(twists)) != 0:
        raise CanonicalizationError("product is not [(1 2); 0]")

    word: BraidWord = []

    def move(p: int, sign: int):
        a, b = twists[p - 1], twists[p]
        if sign == 1:
            twists[p - 1], twists[p] = b, 2 * b - a
        else:
            twists[p - 1], twists[p] = 2 * a - b, a
        word.append(sign * p)

    for p in range(1, m - 1, 2):
        # Euclidean reduction of (u, v) to u = 0 using the window (p, p+1, p+2).
        while True:
            u = twists[p] - twists[p - 1]
            v = twists[p + 1] - twists[p]
            if u == 0:
                break
            if v == 0:
                move(p, -1)  # v <- v + u
                continue
            q = round(u / v)
            if q == 0:
                # |u| < |v| and u != 0: shrink v toward u.
                q2 = round(v / u)
                for _ in range(abs(q2)):
                    move(p, 1 if q2 > 0 else -1)  # v <- v -+ u
            else:
                for _ in range(abs(q)):
                    move(p + 1, -1 if q > 0 else 1)  # u <- u -+ v
    if twists[-1] != 0:
        raise AssertionError("final twist nonzero after pair reduction")
    return apply_braid(f, word), word


# -- zeroing the paired twists -------------------------------------------

def zero_pairs(entries: tuple[WreathElement, ...], params: GroupParams,
               n_pairs: int | None = None,
               ) -> tuple[tuple[WreathElement, ...], BraidWord]:
    """On a cabled tuple (diagonal block, r_b, r_b, r_b', r_b', ...), make
    every pair a zero-twist pair.

    The first entry must be the cabled diagonal block with value
    [eps; (1, 0, ..., 0)].  Each decrement cycle [1, 2, 2, 1] carries a pair
    around the block, lowering its twist by one; increment cycles are the
    inverse word.  A zeroed pair (whose product is the identity) is then
    slid to the end of the pair section so the next pair becomes adjacent
    to the block.  Returns the new tuple and the certificate word on the
    cabled tuple.
    """
    n = params.n
    block = entries[0]
    expected = (1,) + (0,) * (n - 1)
    if block.perm != tuple(range(1, n + 1)) or block.weights != expected:
        raise CanonicalizationError("cabled block product must be [eps; (1,0,...,0)]")

    def twist_at(pos: int) -> int:
        r = classify(entries[pos])
        if r is None or r.kind != TRANSPOSITION or (r.i, r.j) != (1, 2):
            raise CanonicalizationError(f"entry {pos + 1} is not a [(1 2); *] reflection")
        return r.k

    if n_pairs is None:
        n_pairs = 0
        pos = 1
        while pos + 1 < len(entries) and entries[pos] == entries[pos + 1] \
                and classify(entries[pos]) is not None:
            n_pairs += 1
            pos += 2

    word: BraidWord = []

    def run(subword: BraidWord):
        nonlocal entries
        entries = apply_braid_elements(entries, subword)
        word.extend(subword)

    for j in range(n_pairs):
        b = twist_at(1)
        if twist_at(2) != b:
            raise CanonicalizationError("pair adjacent to the block is unequal")
        while b > 0:
            run([1, 2, 2, 1])
            b -= 1
        while b < 0:
            run([-1, -2, -2, -1])
            b += 1
        # Slide the zeroed pair right past the remaining unprocessed pairs.
        for s in range(n_pairs - j - 1):
            p = 2 + 2 * s
            run([p + 1, p, p + 2, p + 1])
    return entries, word


# -- end-to-end canonicalization ----------------------------------------

def canonicalize_d1n(f: Factorization, d: int,
                     budget: int = DEFAULT_SEARCH_BUDGET,
                     ) -> tuple[CanonicalForm, BraidWord]:
    """Reduce a reflection factorization of the standard Coxeter element of
    G(inf,1,n) to the canonical representative of its Hurwitz orbit,
    returning the full braid-word certificate (replay-verified before
    returning).  ``d`` fixes the residue ordering of the diagonal weights.
    """
    params = f.params
    if not (params.is_generic and params.e == 1):
        raise CanonicalizationError("input must live in G(inf,1,n)")
    if d < 1:
        raise CanonicalizationError(f"modulus must be positive, got {d}")
    c_tilde = coxeter_element(params)
    if f.product() != c_tilde:
        raise CanonicalizationError("product is not the standard Coxeter element")
    start = f
    n, m = params.n, len(f)
    word: BraidWord = []

    f, w = front_diagonals(f)
    word.extend(w)
    k = _diagonal_count(f)
    if k == 0:
        raise AssertionError("a factorization of c~ must contain diagonals")

    # Push every diagonal's support to coordinate 1.
    while True:
        bad = next((s for s in range(1, k + 1) if f.factors[s - 1].i != 1), None)
        if bad is None:
            break
        f, w = push_diagonal_to_first_coordinate(f, bad, budget)
        word.extend(w)

    diag_block = product((t.element for t in f.factors[:k]), params)
    if diag_block.weights != (1,) + (0,) * (n - 1):
        raise AssertionError("diagonal block product must be [eps; (1,0,...,0)]")

    # Normalize the projected transposition suffix to the staircase shape.
    target = ((1, 2),) * (m - k - (n - 1)) + tuple((i, i + 1) for i in range(1, n))
    if (m - k - (n - 1)) % 2:
        raise AssertionError("transposition surplus must be even")
    sub = _projected_search(_projection_state(f, k), lambda s: s == target, budget)
    shifted = [letter + k if letter > 0 else letter - k for letter in sub]
    f = apply_braid(f, shifted)
    word.extend(shifted)

    for t in f.factors[m - n + 2 :]:
        if t.k != 0:
            raise AssertionError("staircase twists past (1 2) must vanish")

    # Infinite-dihedral pair reduction of the [(1 2); *] block.
    block = Factorization(f.factors[k : m - n + 2], params)
    reduced, w = pair_reduce_dihedral(block)
    shifted = [letter + k if letter > 0 else letter - k for letter in w]
    f = apply_braid(f, shifted)
    word.extend(shifted)

    # Zero the paired twists around the cabled diagonal block.
    q = (m - k - (n - 1)) // 2
    interval = Interval(1, k)
    cabled = cable(f, interval)
    cabled, cabled_word = zero_pairs(cabled, params, n_pairs=q)
    full, final_interval = lift_braid_through_cable(cabled_word, interval, m)
    if (final_interval.a, final_interval.b) != (1, k):
        raise AssertionError("diagonal block drifted during pair zeroing")
    f = apply_braid(f, full)
    word.extend(full)

    # Sort the diagonal weights: residue mod d ascending, then weight.
    def key(t: Reflection):
        return ((t.k % d if d > 1 else 0), t.k)

    changed = True
    while changed:
        changed = False
        for p in range(1, k):
            if key(f.factors[p]) < key(f.factors[p - 1]):
                f = apply_move(f, p, 1)  # commuting diagonals: exact swap
                word.append(p)
                changed = True

    diag_weights = tuple(t.k for t in f.factors[:k])
    if sum(diag_weights) != 1:
        raise AssertionError("diagonal weights must sum to 1")
    cf = CanonicalForm(diag_weights, q, n)
    if apply_braid(start, word).factors != cf.realize().factors:
        raise AssertionError("certificate replay mismatch")
    return cf, word
