"""
Braid systems of braided surfaces and combinatorial invariants of their
plat closures.

A braid system of degree n is a list of bands ``(beta, k, eps)``, each
standing for the braid ``beta^-1 sigma_k^eps beta``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .braid import (
    BraidWord,
    braid_permutation,
    braids_equal,
    is_trivial,
    preserves_pairing,
)


class NonGenuineError(ValueError):
    """Raised when an operation needs a trivial boundary braid."""


@dataclass(frozen=True)
class BraidSystemEntry:
    conjugator: BraidWord
    band: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if not 1 <= self.band <= self.conjugator.degree - 1:
            raise ValueError(
                f"band {self.band} outside 1..{self.conjugator.degree - 1}")

    @property
    def degree(self) -> int:
        return self.conjugator.degree

    def braid(self) -> BraidWord:
        return entry_braid(self)

    def to_dict(self) -> dict:
        return {"conjugator": list(self.conjugator.letters), "band": self.band, "sign": self.sign}


@dataclass(frozen=True)
class BraidSystem:
    degree: int
    entries: tuple[BraidSystemEntry, ...] = ()

    def __init__(self, degree: int, entries: Iterable[BraidSystemEntry] = ()):
        entries = tuple(entries)
        for e in entries:
            if e.degree != degree:
                raise ValueError(f"entry of degree {e.degree} in a system of degree {degree}")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_triples(cls, degree: int, triples: Iterable[tuple[Sequence[int], int, int]]):
        """Build from ``(conjugator letters, band, sign)`` triples."""
        return cls(degree, [BraidSystemEntry(BraidWord(degree, c), k, s) for c, k, s in triples])

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __add__(self, other: "BraidSystem") -> "BraidSystem":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return BraidSystem(self.degree, self.entries + other.entries)

    @property
    def m(self) -> int:
        if self.degree % 2:
            raise ValueError("degree must be even")
        return self.degree // 2

    def signs(self) -> list[int]:
        return [e.sign for e in self.entries]

    def to_dict(self) -> dict:
        return {"degree": self.degree, "entries": [e.to_dict() for e in self.entries]}

    @classmethod
    def from_dict(cls, data: dict) -> "BraidSystem":
        n = int(data["degree"])
        entries = []
        for raw in data.get("entries", []):
            entries.append(BraidSystemEntry(
                BraidWord(n, raw.get("conjugator", [])), int(raw["band"]), int(raw.get("sign", 1))))
        return cls(n, entries)

    def pretty(self) -> str:
        lines = [f"degree {self.degree}, {len(self.entries)} entries"]
        for j, e in enumerate(self.entries, start=1):
            s = "+" if e.sign > 0 else "-"
            lines.append(f"  {j}: beta = {e.conjugator.pretty()}, band {e.band}, sign {s}")
        return "\n".join(lines)


def load_braid_system(path: str | Path) -> BraidSystem:
    with open(path) as fh:
        return BraidSystem.from_dict(json.load(fh))


def save_braid_system(bs: BraidSystem, path: str | Path) -> None:
    with open(path, "w") as fh:
        json.dump(bs.to_dict(), fh)


def entry_braid(e: BraidSystemEntry) -> BraidWord:
    beta = e.conjugator
    return BraidWord(beta.degree, beta.inverse().letters + (e.sign * e.band,) + beta.letters)


def boundary_braid(bs: BraidSystem) -> BraidWord:
    letters: list[int] = []
    for e in bs.entries:
        letters.extend(entry_braid(e).letters)
    return BraidWord(bs.degree, letters)


def is_genuine(bs: BraidSystem) -> bool:
    """True when the boundary braid is trivial, i.e. the system is a 2-dimensional braid."""
    return is_trivial(boundary_braid(bs))


def adequacy_necessary(bs: BraidSystem) -> bool:
    """Boundary permutation keeps the wicket pairs {2i-1, 2i} together.

    This is only a necessary condition for adequacy.
    """
    if bs.degree % 2:
        raise ValueError("degree must be even")
    return preserves_pairing(braid_permutation(boundary_braid(bs)))


def slide(bs: BraidSystem, j: int, forward: bool = True) -> BraidSystem:
    """Slide move at position j (1-based), or its inverse when ``forward`` is False.

    Forward replaces ``(g_j, g_{j+1})`` by ``(g_j g_{j+1} g_j^-1, g_j)``;
    backward replaces it by ``(g_{j+1}, g_{j+1}^-1 g_j g_{j+1})``.  New
    conjugators are freely reduced words.
    """
    r = len(bs.entries)
    if not 1 <= j <= r - 1:
        raise IndexError(f"slide position {j} outside 1..{r - 1}")
    entries = list(bs.entries)
    e1, e2 = entries[j - 1], entries[j]
    if forward:
        beta = (e2.conjugator * entry_braid(e1).inverse()).free_reduced()
        entries[j - 1] = BraidSystemEntry(beta, e2.band, e2.sign)
        entries[j] = e1
    else:
        beta = (e1.conjugator * entry_braid(e2)).free_reduced()
        entries[j - 1] = e2
        entries[j] = BraidSystemEntry(beta, e1.band, e1.sign)
    return BraidSystem(bs.degree, entries)


def apply_slides(bs: BraidSystem, moves: Iterable[int]) -> BraidSystem:
    """Apply signed moves in order: ``+j`` slides forward at j, ``-j`` backward."""
    for mv in moves:
        if mv == 0:
            raise IndexError("move 0 is not a slide position")
        bs = slide(bs, abs(mv), forward=mv > 0)
    return bs


def systems_braidwise_equal(a: BraidSystem, b: BraidSystem) -> bool:
    """Entry by entry equality of the braids ``beta^-1 sigma_k^eps beta``."""
    if a.degree != b.degree or len(a) != len(b):
        return False
    return all(braids_equal(entry_braid(x), entry_braid(y)) for x, y in zip(a, b))


def _family_conjugator(m: int, p: int) -> BraidWord:
    return BraidWord(2 * m, [2 * i for i in range(1, m)] * p)


def family_bmp(m: int, p: int) -> BraidSystem:
    """The 2-knot family: bands ``sigma_{2i-1}^{+-1}`` conjugated by
    ``beta = (sigma_2 sigma_4 ... sigma_{2m-2})^p``, for i = 1..m-1."""
    if m < 2:
        raise ValueError("m must be at least 2")
    if p < 1:
        raise ValueError("p must be at least 1")
    beta = _family_conjugator(m, p)
    entries = []
    for i in range(1, m):
        entries.append(BraidSystemEntry(beta, 2 * i - 1, 1))
        entries.append(BraidSystemEntry(beta, 2 * i - 1, -1))
    return BraidSystem(2 * m, entries)


def family_bmpg(m: int, p: int, g: int) -> BraidSystem:
    """``family_bmp(m, p)`` followed by g copies of ``beta^-1 sigma_1 beta`` and
    g copies of ``beta^-1 sigma_1^-1 beta``; its plat closure has genus g."""
    if g < 0:
        raise ValueError("g must be non-negative")
    base = family_bmp(m, p)
    beta = _family_conjugator(m, p)
    extra = [BraidSystemEntry(beta, 1, 1)] * g + [BraidSystemEntry(beta, 1, -1)] * g
    return BraidSystem(base.degree, base.entries + tuple(extra))


def euler_characteristic(bs: BraidSystem) -> int:
    # m disks from each wicket family, one saddle per branch point
    if bs.degree % 2:
        raise ValueError("degree must be even")
    return bs.degree - len(bs.entries)


def component_count(bs: BraidSystem) -> int:
    """Number of components of the plat closure of a 2-dimensional braid.

    Orbits of the points 1..2m under the transpositions of the bands together
    with the wicket pairs (2i-1, 2i).
    """
    if bs.degree % 2:
        raise ValueError("degree must be even")
    if not is_genuine(bs):
        raise NonGenuineError("component count is only defined here for genuine systems")
    n = bs.degree
    parent = list(range(n + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for i in range(1, n, 2):
        union(i, i + 1)
    for e in bs.entries:
        cyc = braid_permutation(entry_braid(e)).cycles()
        (a, b), = cyc
        union(a, b)
    return len({find(a) for a in range(1, n + 1)})


def genus_if_orientable(bs: BraidSystem) -> int | None:
    """Genus of a connected orientable closure, or None when not applicable.

    Orientability is not checked.
    """
    if component_count(bs) != 1:
        return None
    chi = euler_characteristic(bs)
    if chi > 2 or chi % 2:
        return None
    return (2 - chi) // 2


def plat_lower_bound(coloring_count: int, quandle_order: int) -> int:
    """Smallest integer m with ``quandle_order ** m >= coloring_count``."""
    if coloring_count < 1:
        raise ValueError("coloring count must be positive")
    if quandle_order < 2:
        raise ValueError("quandle order must be at least 2")
    m, power = 0, 1
    while power < coloring_count:
        power *= quandle_order
        m += 1
    return m
