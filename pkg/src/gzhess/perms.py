"""Permutations in one-line notation and Hessenberg functions.

Permutations are stored as tuples of the values ``w(1), ..., w(n)`` (1-based,
each of ``1..n`` exactly once).  The composition convention throughout the
package is

    (u * v)(i) = u(v(i)),

i.e. ``v`` acts first.  Every formula downstream (conjugation by the longest
element, length-additive factor pairs, words of simple reflections) is stated
and tested under this single convention.

A Hessenberg function is a weakly increasing ``h: [n] -> [n]`` with
``h(i) >= i``; it is stored as the tuple of its values.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _iter_permutations
from typing import Iterator


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``{1, ..., n}`` in one-line notation.

    >>> w = Permutation((3, 2, 1, 4))
    >>> w(1), w.n, w.length()
    (3, 4, 3)
    """

    word: tuple[int, ...]

    def __post_init__(self):
        n = len(self.word)
        if n == 0 or sorted(self.word) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.word}")

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        """Image of ``i`` (1-based)."""
        return self.word[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.word):
            inv[v - 1] = i + 1
        return Permutation(tuple(inv))

    def length(self) -> int:
        """Number of inversions ``|{(i, j) : i < j, w(i) > w(j)}|``."""
        w = self.word
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.word)

    @classmethod
    def from_string(cls, s: str) -> "Permutation":
        """Parse comma-separated one-line notation, e.g. ``"3,2,1,4"``."""
        return cls(tuple(int(tok) for tok in s.split(",")))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest_element(n: int) -> Permutation:
    """The order-reversing permutation ``[n, n-1, ..., 1]``."""
    return Permutation(tuple(range(n, 0, -1)))


def simple_reflection(n: int, k: int) -> Permutation:
    """The adjacent transposition ``s_k`` swapping ``k`` and ``k+1``."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"simple reflection index {k} out of range for n={n}")
    word = list(range(1, n + 1))
    word[k - 1], word[k] = word[k], word[k - 1]
    return Permutation(tuple(word))


def transposition(n: int, a: int, b: int) -> Permutation:
    """The transposition swapping ``a`` and ``b``."""
    if not (1 <= a <= n and 1 <= b <= n and a != b):
        raise ValueError(f"bad transposition ({a}, {b}) for n={n}")
    word = list(range(1, n + 1))
    word[a - 1], word[b - 1] = word[b - 1], word[a - 1]
    return Permutation(tuple(word))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """Group product ``u * v`` with ``(u * v)(i) = u(v(i))``."""
    if u.n != v.n:
        raise ValueError(f"size mismatch: {u.n} vs {v.n}")
    return Permutation(tuple(u.word[v.word[i] - 1] for i in range(u.n)))


def length(w: Permutation) -> int:
    return w.length()


def product_of_word(n: int, word: tuple[int, ...] | list[int]) -> tuple[Permutation, bool]:
    """Left-to-right product of simple reflections; also reports reducedness.

    ``product_of_word(3, (2, 1, 2))`` multiplies ``s_2 * s_1 * s_2``.  The
    product is reduced iff its length equals the number of letters.
    """
    w = identity(n)
    for k in word:
        w = compose(w, simple_reflection(n, k))
    return w, w.length() == len(word)


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """One reduced word ``(i_1, ..., i_k)`` with ``w = s_{i_1} * ... * s_{i_k}``.

    Peels descents off the right: while ``w != id`` pick ``i`` with
    ``w(i) > w(i+1)`` and pass to ``w * s_i``.
    """
    word = list(w.word)
    letters: list[int] = []
    while True:
        for i in range(len(word) - 1):
            if word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                letters.append(i + 1)
                break
        else:
            break
    return tuple(reversed(letters))


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """Bruhat order test via the sorted-prefix (dominance) criterion.

    ``u <= v`` iff for every ``k`` the sorted prefix ``{u(1..k)}`` is
    entrywise ``<=`` the sorted prefix ``{v(1..k)}``.
    """
    if u.n != v.n:
        raise ValueError(f"size mismatch: {u.n} vs {v.n}")
    for k in range(1, u.n):
        for a, b in zip(sorted(u.word[:k]), sorted(v.word[:k])):
            if a > b:
                return False
    return True


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of one-line notation."""
    for word in _iter_permutations(range(1, n + 1)):
        yield Permutation(word)


@dataclass(frozen=True)
class HessenbergFunction:
    """A weakly increasing ``h: [n] -> [n]`` with ``h(i) >= i``.

    >>> h = HessenbergFunction((2, 3, 3))
    >>> h.dimension()
    2
    """

    values: tuple[int, ...]

    def __post_init__(self):
        n = len(self.values)
        if n == 0:
            raise ValueError("empty Hessenberg function")
        for i, v in enumerate(self.values, start=1):
            if not i <= v <= n:
                raise ValueError(f"h({i})={v} violates i <= h(i) <= n={n}")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise ValueError(f"not weakly increasing: {self.values}")

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def dimension(self) -> int:
        """Complex dimension of the associated variety: sum of h(j) - j."""
        return sum(v - j for j, v in enumerate(self.values, start=1))

    def uncolored_boxes(self) -> list[tuple[int, int]]:
        """Boxes (i, j) with i > h(j), column by column; drive the
        derivative-operator product (one factor d_j - d_i per box)."""
        n = self.n
        return [(i, j) for j in range(1, n) for i in range(self.values[j - 1] + 1, n + 1)]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)

    @classmethod
    def from_string(cls, s: str) -> "HessenbergFunction":
        return cls(tuple(int(tok) for tok in s.split(",")))


def toric_hessenberg_function(n: int) -> HessenbergFunction:
    """The minimal function (2, 3, ..., n, n) whose variety is the
    permutohedral (toric) one."""
    return HessenbergFunction(tuple(min(i + 1, n) for i in range(1, n + 1)))


def all_hessenberg_functions(n: int) -> Iterator[HessenbergFunction]:
    """All Hessenberg functions on [n] (Catalan-many), lexicographic order."""

    def rec(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        i = len(prefix)
        if i == n:
            yield tuple(prefix)
            return
        lo = max(i + 1, prefix[-1]) if prefix else 1
        for v in range(lo, n + 1):
            yield from rec(prefix + [v])

    for values in rec([]):
        yield HessenbergFunction(values)


@lru_cache(maxsize=None)
def hessenberg_permutation(h: HessenbergFunction) -> Permutation:
    """The permutation that indexes the class decomposition of ``h``.

    Built greedily: position ``i`` receives the ``(n - h(i) + 1)``-th smallest
    of the values not yet used.  Its length is the codimension of the variety.
    """
    n = h.n
    remaining = list(range(1, n + 1))  # kept sorted; pop keeps it sorted
    word = []
    for i in range(1, n + 1):
        # (n - h(i) + 1)-th smallest unused value; h(i) >= i keeps it in range
        word.append(remaining.pop(n - h(i)))
    return Permutation(tuple(word))
