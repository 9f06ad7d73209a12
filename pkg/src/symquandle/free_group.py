"""
Reduced words in finitely generated free groups, and endomorphisms of them.

A word is stored as a tuple of nonzero signed integers: ``3`` is the letter
x3 and ``-3`` is x3^-1.  Generators are numbered from 1.  Words are freely
reduced on construction, so two words are equal as group elements exactly
when their letter tuples are equal.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def _reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for a in letters:
        if a == 0:
            raise ValueError("generator indices must be positive")
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


class FreeWord:
    """A freely reduced word in the free group on x1, x2, ...

    Build one from signed integers, or from ``(index, exponent)`` pairs with
    :meth:`from_pairs`:

    >>> FreeWord([1, 2, -2])
    FreeWord('1')
    >>> FreeWord([1, -1, 1]) * FreeWord([2])
    FreeWord('1 2')
    """

    __slots__ = ("_w", "_hash")

    def __init__(self, letters: Iterable[int] = ()):
        self._w = _reduce_letters(letters)
        self._hash = hash(self._w)

    @classmethod
    def _raw(cls, reduced: tuple[int, ...]) -> "FreeWord":
        # caller guarantees `reduced` is already freely reduced
        obj = cls.__new__(cls)
        obj._w = reduced
        obj._hash = hash(reduced)
        return obj

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "FreeWord":
        out = []
        for index, exponent in pairs:
            if index < 1 or exponent not in (1, -1):
                raise ValueError(f"bad letter ({index}, {exponent})")
            out.append(index * exponent)
        return cls(out)

    @classmethod
    def parse(cls, text: str) -> "FreeWord":
        """Parse the whitespace separated signed integer encoding, e.g. ``"1 -2 3"``."""
        return cls(int(tok) for tok in text.split())

    @classmethod
    def generator(cls, index: int, exponent: int = 1) -> "FreeWord":
        return cls.from_pairs([(index, exponent)])

    @property
    def letters(self) -> tuple[int, ...]:
        return self._w

    def pairs(self) -> list[tuple[int, int]]:
        return [(abs(a), 1 if a > 0 else -1) for a in self._w]

    def max_index(self) -> int:
        return max((abs(a) for a in self._w), default=0)

    def __len__(self) -> int:
        return len(self._w)

    def __iter__(self):
        return iter(self._w)

    def __bool__(self) -> bool:
        return bool(self._w)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self._w == other._w

    def __lt__(self, other: "FreeWord") -> bool:
        return (len(self._w), self._w) < (len(other._w), other._w)

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return multiply(self, other)

    def __invert__(self) -> "FreeWord":
        return invert(self)

    def __pow__(self, k: int) -> "FreeWord":
        base = self if k >= 0 else invert(self)
        out = FreeWord()
        for _ in range(abs(k)):
            out = multiply(out, base)
        return out

    def __str__(self) -> str:
        return " ".join(str(a) for a in self._w)

    def __repr__(self) -> str:
        return f"FreeWord('{self}')"

    def pretty(self, names: Sequence[str] | None = None) -> str:
        """Human readable form such as ``x1 x2^-1``; ``1`` for the identity."""
        if not self._w:
            return "1"
        parts = []
        for a in self._w:
            name = names[abs(a) - 1] if names else f"x{abs(a)}"
            parts.append(name if a > 0 else f"{name}^-1")
        return " ".join(parts)


EMPTY = FreeWord()


def reduce(raw: Iterable[int]) -> FreeWord:
    """Freely reduce a sequence of signed letters."""
    return FreeWord(raw)


def multiply(a: FreeWord, b: FreeWord) -> FreeWord:
    x, y = a._w, b._w
    # cancellation only happens at the junction
    i = 0
    n = min(len(x), len(y))
    while i < n and x[len(x) - 1 - i] == -y[i]:
        i += 1
    return FreeWord._raw(x[: len(x) - i] + y[i:])


def invert(w: FreeWord) -> FreeWord:
    return FreeWord._raw(tuple(-a for a in reversed(w._w)))


def conjugate(w: FreeWord, z: FreeWord) -> FreeWord:
    """Return z^-1 w z."""
    return multiply(multiply(invert(z), w), z)


class FreeGroupEndo:
    """Endomorphism of the free group of a given rank, by generator images.

    ``images[i - 1]`` is the image of x_i.
    """

    __slots__ = ("rank", "images", "_inv_images")

    def __init__(self, rank: int, images: Sequence[FreeWord]):
        if rank < 1:
            raise ValueError("rank must be positive")
        images = tuple(images)
        if len(images) != rank:
            raise ValueError(f"expected {rank} images, got {len(images)}")
        for w in images:
            if w.max_index() > rank:
                raise ValueError(f"image {w!r} uses a generator beyond rank {rank}")
        self.rank = rank
        self.images = images
        self._inv_images = tuple(invert(w) for w in images)

    @classmethod
    def identity(cls, rank: int) -> "FreeGroupEndo":
        return cls(rank, [FreeWord._raw((i,)) for i in range(1, rank + 1)])

    def __call__(self, w: FreeWord) -> FreeWord:
        return apply_endo(self, w)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeGroupEndo):
            return NotImplemented
        return self.rank == other.rank and self.images == other.images

    def __hash__(self) -> int:
        return hash((self.rank, self.images))

    def __repr__(self) -> str:
        body = ", ".join(f"x{i + 1} -> {w.pretty()}" for i, w in enumerate(self.images))
        return f"FreeGroupEndo({body})"


def apply_endo(e: FreeGroupEndo, w: FreeWord) -> FreeWord:
    out: list[int] = []
    for a in w._w:
        i = abs(a)
        if i > e.rank:
            raise IndexError(f"letter x{i} outside rank {e.rank}")
        img = e.images[i - 1]._w if a > 0 else e._inv_images[i - 1]._w
        for b in img:
            if out and out[-1] == -b:
                out.pop()
            else:
                out.append(b)
    return FreeWord._raw(tuple(out))


def compose_endo(e1: FreeGroupEndo, e2: FreeGroupEndo) -> FreeGroupEndo:
    """Composite e1 o e2: apply e2 first, then e1."""
    if e1.rank != e2.rank:
        raise ValueError(f"rank mismatch: {e1.rank} vs {e2.rank}")
    return FreeGroupEndo(e1.rank, [apply_endo(e1, w) for w in e2.images])


def is_identity_endo(e: FreeGroupEndo) -> bool:
    return all(w._w == (i,) for i, w in enumerate(e.images, start=1))
