"""
Symmetric quandle presentations built from braid systems.

A relator is a pair of canonical free symmetric quandle elements that are
declared equal.  Only generator elimination is implemented among the
Tietze moves; consequences of relators are never enumerated.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .braid import BraidWord
from .braided_surface import BraidSystem
from .free_group import FreeGroupEndo, FreeWord, apply_endo, invert, multiply
from .symmetric_quandle import FsqElement, braid_fsq_images, fsq_rho

Relator = tuple[FsqElement, FsqElement]


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class SymQuandlePresentation:
    num_generators: int
    relators: tuple[Relator, ...] = ()
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(tuple(r) for r in self.relators))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.num_generators:
                raise ValueError("one label per generator required")
        for lhs, rhs in self.relators:
            for x in (lhs, rhs):
                if x.max_index() > self.num_generators:
                    raise ValueError(f"{x!r} uses a generator beyond {self.num_generators}")

    def names(self) -> list[str]:
        if self.labels is not None:
            return list(self.labels)
        return [f"x{i}" for i in range(1, self.num_generators + 1)]

    def deduplicated(self) -> "SymQuandlePresentation":
        """Drop trivial relators and repeats (relators are unordered pairs)."""
        seen = set()
        out = []
        for lhs, rhs in self.relators:
            if lhs == rhs:
                continue
            key = frozenset((lhs, rhs))
            if key in seen:
                continue
            seen.add(key)
            out.append((lhs, rhs))
        return SymQuandlePresentation(self.num_generators, tuple(out), self.labels)

    def to_text(self) -> str:
        names = self.names()
        lines = ["generators: " + " ".join(names)]
        for lhs, rhs in self.relators:
            lines.append(f"{lhs.pretty(names)} = {rhs.pretty(names)}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        def enc(x: FsqElement):
            return [x.sign, x.base, list(x.conjugator.letters)]

        return {
            "num_generators": self.num_generators,
            "labels": self.names(),
            "relators": [[enc(a), enc(b)] for a, b in self.relators],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SymQuandlePresentation":
        def dec(v):
            return FsqElement(int(v[0]), int(v[1]), v[2])

        rels = tuple((dec(a), dec(b)) for a, b in data.get("relators", []))
        return cls(int(data["num_generators"]), rels, data.get("labels"))


@lru_cache(maxsize=512)
def _images(beta: BraidWord) -> tuple[FsqElement, ...]:
    return tuple(braid_fsq_images(beta))


def branch_relator(beta: BraidWord, band: int) -> Relator:
    imgs = _images(beta)
    return imgs[band - 1], imgs[band]


def braided_surface_presentation(bs: BraidSystem) -> SymQuandlePresentation:
    """One relator ``Artin(beta)(x_k) = Artin(beta)(x_{k+1})`` per band.

    The sign of the band plays no role.
    """
    rels = []
    for e in bs.entries:
        if not 1 <= e.band <= bs.degree - 1:
            raise PresentationError(f"band {e.band} outside 1..{bs.degree - 1}")
        rels.append(branch_relator(e.conjugator, e.band))
    return SymQuandlePresentation(bs.degree, tuple(rels))


def wicket_relators(m: int) -> list[Relator]:
    return [(FsqElement(1, 2 * j - 1), FsqElement(-1, 2 * j)) for j in range(1, m + 1)]


def plat_presentation(bs: BraidSystem) -> SymQuandlePresentation:
    """Presentation of the plat closure: band relators plus ``x_{2j-1} = rho(x_{2j})``."""
    if bs.degree % 2:
        raise PresentationError("degree must be even")
    base = braided_surface_presentation(bs)
    return SymQuandlePresentation(
        bs.degree, base.relators + tuple(wicket_relators(bs.degree // 2)))


def _is_bare(x: FsqElement, g: int) -> bool:
    return x.base == g and not x.conjugator


def _mentions(x: FsqElement, g: int) -> bool:
    return x.base == g or any(abs(a) == g for a in x.conjugator.letters)


def _relabel(x: FsqElement, g: int) -> FsqElement:
    def shift(i):
        return i - 1 if i > g else i

    conj = FreeWord._raw(tuple(shift(abs(a)) * (1 if a > 0 else -1) for a in x.conjugator.letters))
    return FsqElement(x.sign, shift(x.base), conj)


def eliminate_generator(p: SymQuandlePresentation, g: int, r: int) -> SymQuandlePresentation:
    """Remove generator g (1-based) using relator number r (0-based).

    Relator r must read ``rho^s(x_g) = D`` with D free of x_g.  Every other
    occurrence of x_g is replaced by ``rho^s(D)``, in bases and in
    conjugators, and the generators above g are renumbered down by one.
    """
    n = p.num_generators
    if not 1 <= g <= n:
        raise PresentationError(f"generator {g} outside 1..{n}")
    if not 0 <= r < len(p.relators):
        raise PresentationError(f"no relator number {r}")
    lhs, rhs = p.relators[r]
    if _is_bare(lhs, g) and not _mentions(rhs, g):
        bare, defn = lhs, rhs
    elif _is_bare(rhs, g) and not _mentions(lhs, g):
        bare, defn = rhs, lhs
    else:
        raise PresentationError(f"relator {r} does not define x{g} in terms of other generators")
    value = defn if bare.sign > 0 else fsq_rho(defn)

    images = [FreeWord._raw((i,)) for i in range(1, n + 1)]
    images[g - 1] = value.group_element()
    sub = FreeGroupEndo(n, images)

    def substitute(x: FsqElement) -> FsqElement:
        conj = apply_endo(sub, x.conjugator)
        if x.base == g:
            return FsqElement(x.sign * value.sign, value.base, multiply(value.conjugator, conj))
        return FsqElement(x.sign, x.base, conj)

    rels = []
    for i, (a, b) in enumerate(p.relators):
        if i == r:
            continue
        rels.append((_relabel(substitute(a), g), _relabel(substitute(b), g)))
    labels = tuple(name for i, name in enumerate(p.names(), start=1) if i != g)
    return SymQuandlePresentation(n - 1, tuple(rels), labels).deduplicated()


def find_relator(p: SymQuandlePresentation, lhs: FsqElement, rhs: FsqElement) -> int:
    for i, (a, b) in enumerate(p.relators):
        if (a, b) == (lhs, rhs) or (b, a) == (lhs, rhs):
            return i
    raise PresentationError(f"no relator {lhs.pretty()} = {rhs.pretty()}")


def eliminate_wicket_generators(p: SymQuandlePresentation) -> SymQuandlePresentation:
    """Eliminate x_{2j-1} through ``x_{2j-1} = rho(x_{2j})`` for every j.

    Expects the numbering of a plat presentation; the result has m
    generators, labelled with their original names.
    """
    if p.num_generators % 2:
        raise PresentationError("expected an even number of generators")
    m = p.num_generators // 2
    if p.labels is None:
        p = SymQuandlePresentation(p.num_generators, p.relators, tuple(p.names()))
    # from the top down, so lower indices stay put
    for j in range(m, 0, -1):
        g = 2 * j - 1
        r = find_relator(p, FsqElement(1, g), FsqElement(-1, g + 1))
        p = eliminate_generator(p, g, r)
    return p


def group_relators(p: SymQuandlePresentation) -> list[FreeWord]:
    """Relators of the associated group: ``w^-1 g_a^s w (z^-1 g_b^t z)^-1``."""
    out = []
    for lhs, rhs in p.relators:
        word = multiply(lhs.group_element(), invert(rhs.group_element()))
        if word:
            out.append(word)
    return out


def _group_word_text(w: FreeWord) -> str:
    parts = []
    for a in w.letters:
        parts.append(f"g{a}" if a > 0 else f"g{-a}^-1")
    return "*".join(parts)


def to_group_presentation(p: SymQuandlePresentation) -> str:
    gens = ",".join(f"g{i}" for i in range(1, p.num_generators + 1))
    rels = ", ".join(_group_word_text(w) for w in group_relators(p))
    return f"< {gens} | {rels} >"
