"""
Braid words, strand permutations and the Artin representation.

A braid word in B_n is a tuple of signed integers, ``i`` for sigma_i and
``-i`` for its inverse.  Words are read left to right, which is stacking
from top to bottom.  The Artin endomorphism of a word ``u v`` acts as ``u``
first: ``artin_endo(u v) = artin_endo(v) o artin_endo(u)``.  With this
order the relator of a band ``beta^-1 sigma_k beta`` is
``Artin(beta)(x_k) = Artin(beta)(x_{k+1})``.

Equality of braids is decided with the Artin representation, which is
faithful.  There is no normal form here.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .free_group import (
    FreeGroupEndo,
    FreeWord,
    apply_endo,
    is_identity_endo,
)


class BraidWord:
    """A word in the Artin generators of B_n.

    >>> b = BraidWord(4, [2, 1, 3, 2])
    >>> b.inverse()
    BraidWord(4, '-2 -3 -1 -2')
    """

    __slots__ = ("degree", "letters")

    def __init__(self, degree: int, letters: Iterable[int] = ()):
        if degree < 1:
            raise ValueError("degree must be at least 1")
        letters = tuple(int(a) for a in letters)
        for a in letters:
            if a == 0 or abs(a) > degree - 1:
                raise ValueError(f"generator {a} out of range for B_{degree}")
        self.degree = degree
        self.letters = letters

    @classmethod
    def parse(cls, degree: int, text: str) -> "BraidWord":
        return cls(degree, (int(t) for t in text.split()))

    @classmethod
    def generator(cls, degree: int, i: int, exponent: int = 1) -> "BraidWord":
        return cls(degree, [i * exponent])

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return BraidWord(self.degree, self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        base = self.letters if k >= 0 else self.inverse().letters
        return BraidWord(self.degree, base * abs(k))

    def inverse(self) -> "BraidWord":
        return BraidWord(self.degree, [-a for a in reversed(self.letters)])

    def free_reduced(self) -> "BraidWord":
        """Cancel adjacent ``sigma_i sigma_i^-1`` pairs.  Same braid, shorter word."""
        stack: list[int] = []
        for a in self.letters:
            if stack and stack[-1] == -a:
                stack.pop()
            else:
                stack.append(a)
        return BraidWord(self.degree, stack)

    def __eq__(self, other) -> bool:
        # word equality; use braids_equal for equality in B_n
        if not isinstance(other, BraidWord):
            return NotImplemented
        return self.degree == other.degree and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((self.degree, self.letters))

    def __str__(self) -> str:
        return " ".join(str(a) for a in self.letters)

    def __repr__(self) -> str:
        return f"BraidWord({self.degree}, '{self}')"

    def pretty(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(f"s{a}" if a > 0 else f"s{-a}^-1" for a in self.letters)


class Permutation:
    """Bijection of {1..n}; ``images[j - 1]`` is the image of j.

    ``p * q`` means p first, then q.
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        im = list(range(1, n + 1))
        im[i - 1], im[j - 1] = j, i
        return cls(im)

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        im = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                im[a - 1] = b
        return cls(im)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation([other.images[i - 1] for i in self.images])

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for j, i in enumerate(self.images, start=1):
            inv[i - 1] = j
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for j, i in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            k = self.images[start - 1]
            while k != start:
                cyc.append(k)
                seen.add(k)
                k = self.images[k - 1]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return f"Permutation.identity({self.degree})"
        return "Permutation(" + "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) + ")"


@lru_cache(maxsize=None)
def generator_endo(degree: int, letter: int) -> FreeGroupEndo:
    """Artin endomorphism of a single letter ``sigma_i^{+-1}`` in B_degree."""
    i = abs(letter)
    images = [FreeWord._raw((j,)) for j in range(1, degree + 1)]
    if letter > 0:
        # x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
        images[i - 1] = FreeWord([i, i + 1, -i])
        images[i] = FreeWord([i])
    else:
        # x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
        images[i - 1] = FreeWord([i + 1])
        images[i] = FreeWord([-(i + 1), i, i + 1])
    return FreeGroupEndo(degree, images)


def artin_endo(b: BraidWord) -> FreeGroupEndo:
    e = FreeGroupEndo.identity(b.degree)
    if b.degree == 1:
        return e
    images = e.images
    for a in b.letters:
        g = generator_endo(b.degree, a)
        # Artin(u s) = Artin(s) o Artin(u)
        images = tuple(apply_endo(g, w) for w in images)
    return FreeGroupEndo(b.degree, images)


def braid_permutation(b: BraidWord) -> Permutation:
    """Strand permutation: strand starting at j ends at position ``images[j-1]``."""
    pos = list(range(1, b.degree + 1))
    # where[p] = strand currently at position p
    where = list(range(1, b.degree + 1))
    for a in b.letters:
        i = abs(a)
        s, t = where[i - 1], where[i]
        where[i - 1], where[i] = t, s
        pos[s - 1], pos[t - 1] = i + 1, i
    return Permutation(pos)


def is_trivial(b: BraidWord) -> bool:
    b = b.free_reduced()
    if not b.letters:
        return True
    if not braid_permutation(b).is_identity():
        return False
    return is_identity_endo(artin_endo(b))


def braids_equal(a: BraidWord, b: BraidWord) -> bool:
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    return is_trivial(a * b.inverse())


HILDEN_KINDS = ("sigma_odd", "tau", "upsilon")


def hilden_generator(m: int, kind: str, j: int) -> BraidWord:
    """Generators of Hilden's subgroup K_{2m} of B_{2m}.

    ``sigma_odd`` gives sigma_{2j-1} (1 <= j <= m); ``tau`` gives
    sigma_{2j} sigma_{2j-1} sigma_{2j+1} sigma_{2j} and ``upsilon`` gives
    sigma_{2j} sigma_{2j-1} sigma_{2j+1}^-1 sigma_{2j}^-1 (1 <= j <= m-1).
    """
    n = 2 * m
    if kind == "sigma_odd":
        if not 1 <= j <= m:
            raise ValueError(f"j={j} out of range 1..{m}")
        return BraidWord(n, [2 * j - 1])
    if kind not in HILDEN_KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if not 1 <= j <= m - 1:
        raise ValueError(f"j={j} out of range 1..{m - 1}")
    if kind == "tau":
        return BraidWord(n, [2 * j, 2 * j - 1, 2 * j + 1, 2 * j])
    return BraidWord(n, [2 * j, 2 * j - 1, -(2 * j + 1), -(2 * j)])


def preserves_pairing(p: Permutation) -> bool:
    """True iff p maps every pair {2i-1, 2i} onto some pair {2j-1, 2j}.

    A necessary condition for a braid to lie in Hilden's subgroup.
    """
    n = p.degree
    if n % 2:
        raise ValueError("pairing needs even degree")
    for i in range(1, n, 2):
        a, b = sorted((p(i), p(i + 1)))
        if a % 2 == 0 or b != a + 1:
            return False
    return True
