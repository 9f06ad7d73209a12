"""
Free symmetric quandles and finite symmetric quandles.

An element of the free symmetric quandle on x1..xn is a triple
``(sign, base, conjugator)`` standing for ``x_base^{conjugator}`` with the
good involution applied when ``sign == -1``.  Operating by ``(t, b, z)``
right-multiplies the conjugator by the group element ``z^-1 x_b^t z``.
Idempotence forces ``(s, a, w) ~ (s, a, x_a w)``, so the canonical
representative has no leading letter equal to the base generator.

Finite symmetric quandles are numpy tables: ``op[x, y]`` is ``x^y``,
``rho[x]`` the good involution, ``inv_op[x, y]`` is ``x^{y^-1}``.  Elements
are 0-based integers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .braid import BraidWord, generator_endo
from .free_group import FreeWord, apply_endo, invert, multiply

MAX_INVOLUTION_SEARCH = 12


class FsqElement:
    __slots__ = ("sign", "base", "conjugator", "_key")

    def __init__(self, sign: int, base: int, conjugator: FreeWord | Iterable[int] = ()):
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        if base < 1:
            raise ValueError("base generator index must be positive")
        if not isinstance(conjugator, FreeWord):
            conjugator = FreeWord(conjugator)
        w = conjugator.letters
        k = 0
        while k < len(w) and abs(w[k]) == base:
            k += 1
        if k:
            conjugator = FreeWord._raw(w[k:])
        self.sign = sign
        self.base = base
        self.conjugator = conjugator
        self._key = (sign, base, conjugator.letters)

    @classmethod
    def generator(cls, index: int) -> "FsqElement":
        return cls(1, index)

    def max_index(self) -> int:
        return max(self.base, self.conjugator.max_index())

    def group_element(self) -> FreeWord:
        """The conjugate ``w^-1 x_a^s w`` in the associated free group."""
        w = self.conjugator
        return multiply(multiply(invert(w), FreeWord._raw((self.sign * self.base,))), w)

    def __xor__(self, other: "FsqElement") -> "FsqElement":
        return fsq_op(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FsqElement):
            return NotImplemented
        return self._key == other._key

    def __lt__(self, other: "FsqElement") -> bool:
        return (self.base, self.sign == -1, self.conjugator) < (
            other.base, other.sign == -1, other.conjugator)

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        s = "+" if self.sign > 0 else "-"
        return f"FsqElement({s}, {self.base}, '{self.conjugator}')"

    def pretty(self, names: Sequence[str] | None = None) -> str:
        s = "+" if self.sign > 0 else "-"
        name = names[self.base - 1] if names else f"x{self.base}"
        conj = "" if not self.conjugator else self.conjugator.pretty(names)
        return f"{s}{name} ^ [{conj}]"


def fsq_make(sign: int, base: int, conjugator: FreeWord | Iterable[int] = ()) -> FsqElement:
    return FsqElement(sign, base, conjugator)


def fsq_op(x: FsqElement, y: FsqElement) -> FsqElement:
    """``x^y``: conjugator becomes ``w z^-1 b^t z`` for ``y = (t, b, z)``."""
    return FsqElement(x.sign, x.base, multiply(x.conjugator, y.group_element()))


def fsq_op_inverse(x: FsqElement, y: FsqElement) -> FsqElement:
    """``x^{y^-1}``, which equals ``x^{rho(y)}``."""
    return FsqElement(x.sign, x.base, multiply(x.conjugator, invert(y.group_element())))


def fsq_rho(x: FsqElement) -> FsqElement:
    return FsqElement(-x.sign, x.base, x.conjugator)


@lru_cache(maxsize=None)
def _letter_images(degree: int, letter: int) -> tuple[FsqElement, ...]:
    i = abs(letter)
    images = [FsqElement(1, j) for j in range(1, degree + 1)]
    if letter > 0:
        images[i - 1] = FsqElement(1, i + 1, [-i])
        images[i] = FsqElement(1, i)
    else:
        images[i - 1] = FsqElement(1, i + 1)
        images[i] = FsqElement(1, i, [i + 1])
    return tuple(images)


def apply_letter(x: FsqElement, degree: int, letter: int) -> FsqElement:
    """Image of x under the Artin automorphism of one braid letter."""
    img = _letter_images(degree, letter)[x.base - 1]
    conj = apply_endo(generator_endo(degree, letter), x.conjugator)
    return FsqElement(x.sign * img.sign, img.base, multiply(img.conjugator, conj))


def braid_fsq_images(b: BraidWord) -> list[FsqElement]:
    """Images of x_1..x_n under the Artin automorphism of b.

    Letters are applied left to right, so the first letter of the word acts
    first.
    """
    images = [FsqElement(1, j) for j in range(1, b.degree + 1)]
    for a in b.letters:
        images = [apply_letter(x, b.degree, a) for x in images]
    return images


def apply_braid(x: FsqElement, b: BraidWord) -> FsqElement:
    for a in b.letters:
        x = apply_letter(x, b.degree, a)
    return x


# -- finite symmetric quandles ----------------------------------------------


class InvalidQuandleError(ValueError):
    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__(report.summary())


@dataclass
class Violation:
    axiom: str
    witness: tuple[int, ...]
    detail: str

    def __str__(self) -> str:
        return f"{self.axiom} fails at {self.witness}: {self.detail}"


@dataclass
class ValidationReport:
    size: int
    status: dict[str, str] = field(default_factory=dict)
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and all(v == "pass" for v in self.status.values())

    def passed(self, axiom: str) -> bool:
        return self.status.get(axiom) == "pass"

    def _fail(self, axiom: str, witness, detail: str) -> None:
        self.status[axiom] = "fail"
        self.violations.append(Violation(axiom, tuple(int(v) for v in witness), detail))

    def summary(self) -> str:
        lines = [f"{axiom}: {state}" for axiom, state in self.status.items()]
        lines += [str(v) for v in self.violations]
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "ok": self.ok,
            "status": dict(self.status),
            "violations": [
                {"axiom": v.axiom, "witness": list(v.witness), "detail": v.detail}
                for v in self.violations
            ],
        }


QUANDLE_AXIOMS = ("range", "Q1", "Q2", "Q3")
SYMMETRIC_AXIOMS = ("involution", "SQ1", "SQ2")


def _as_table(op) -> np.ndarray:
    rows = [list(r) for r in op]
    n = len(rows)
    if n == 0:
        raise ValueError("empty operation table")
    if any(len(r) != n for r in rows):
        raise ValueError("operation table must be square")
    return np.array(rows, dtype=np.int64)


def _first(mask: np.ndarray):
    idx = np.argwhere(mask)
    return None if len(idx) == 0 else tuple(idx[0])


def _inverse_columns(op: np.ndarray) -> np.ndarray:
    n = len(op)
    inv = np.empty_like(op)
    cols = np.arange(n)
    for y in range(n):
        inv[op[:, y], y] = cols
    return inv


def validate(op, rho=None) -> ValidationReport:
    """Check the quandle axioms, and the good involution axioms when rho is given.

    Every failing axiom is reported with a witness tuple.  Axioms that cannot
    be checked because an earlier one failed are marked ``skipped``.
    """
    op = _as_table(op)
    n = len(op)
    rep = ValidationReport(size=n)

    bad = _first((op < 0) | (op >= n))
    if bad is not None:
        rep._fail("range", bad, f"op[{bad[0]}][{bad[1]}] = {op[bad]} outside 0..{n - 1}")
        for ax in QUANDLE_AXIOMS[1:] + (SYMMETRIC_AXIOMS if rho is not None else ()):
            rep.status[ax] = "skipped"
        return rep
    rep.status["range"] = "pass"

    diag = op[np.arange(n), np.arange(n)]
    bad = _first(diag != np.arange(n))
    if bad is None:
        rep.status["Q1"] = "pass"
    else:
        x = bad[0]
        rep._fail("Q1", (x,), f"x^x = {diag[x]} for x = {x}")

    q2 = True
    for y in range(n):
        col = op[:, y]
        if len(np.unique(col)) != n:
            values, counts = np.unique(col, return_counts=True)
            v = values[counts > 1][0]
            x1, x2 = np.flatnonzero(col == v)[:2]
            rep._fail("Q2", (y, x1, x2), f"column {y} sends {x1} and {x2} to {v}")
            q2 = False
            break
    if q2:
        rep.status["Q2"] = "pass"

    # (x^y)^z == (x^z)^(y^z)
    lhs = op[op[:, :, None], np.arange(n)[None, None, :]]
    rhs = op[op[:, None, :], op[None, :, :]]
    bad = _first(lhs != rhs)
    if bad is None:
        rep.status["Q3"] = "pass"
    else:
        rep._fail("Q3", bad, f"(x^y)^z = {lhs[bad]} but (x^z)^(y^z) = {rhs[bad]}")

    if rho is None:
        return rep

    rho = np.array(list(rho), dtype=np.int64)
    if rho.shape != (n,):
        raise ValueError(f"rho must have length {n}")
    bad = _first((rho < 0) | (rho >= n))
    if bad is not None:
        rep._fail("involution", bad, f"rho[{bad[0]}] = {rho[bad]} outside 0..{n - 1}")
        rep.status["SQ1"] = rep.status["SQ2"] = "skipped"
        return rep
    bad = _first(rho[rho] != np.arange(n))
    if bad is None:
        rep.status["involution"] = "pass"
    else:
        x = bad[0]
        rep._fail("involution", (x,), f"rho(rho({x})) = {rho[rho[x]]}")

    # rho(x^y) == rho(x)^y
    sq1l = rho[op]
    sq1r = op[rho, :]
    bad = _first(sq1l != sq1r)
    if bad is None:
        rep.status["SQ1"] = "pass"
    else:
        rep._fail("SQ1", bad, f"rho(x^y) = {sq1l[bad]} but rho(x)^y = {sq1r[bad]}")

    if not q2:
        rep.status["SQ2"] = "skipped"
        return rep
    inv = _inverse_columns(op)
    sq2l = op[:, rho]
    bad = _first(sq2l != inv)
    if bad is None:
        rep.status["SQ2"] = "pass"
    else:
        rep._fail("SQ2", bad, f"x^rho(y) = {sq2l[bad]} but x^(y^-1) = {inv[bad]}")
    return rep


class FiniteSymQuandle:
    """A finite quandle together with a good involution, validated on construction.

    >>> R3 = dihedral(3)
    >>> int(R3.op[0, 1]), R3.size
    (2, 3)
    """

    def __init__(self, op, rho=None, name: str | None = None):
        op = _as_table(op)
        if rho is None:
            rho = np.arange(len(op))
        report = validate(op, rho)
        if not report.ok:
            raise InvalidQuandleError(report)
        self.op = op
        self.rho = np.array(list(rho), dtype=np.int64)
        self.inv_op = _inverse_columns(op)
        self.name = name
        for arr in (self.op, self.rho, self.inv_op):
            arr.setflags(write=False)

    @property
    def size(self) -> int:
        return len(self.op)

    def __len__(self) -> int:
        return len(self.op)

    def rho_fixed_points(self) -> list[int]:
        return [int(x) for x in np.flatnonzero(self.rho == np.arange(self.size))]

    def to_dict(self) -> dict:
        return {"size": self.size, "op": self.op.tolist(), "rho": self.rho.tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> "FiniteSymQuandle":
        op = data["op"]
        if "size" in data and data["size"] != len(op):
            raise ValueError(f"size {data['size']} disagrees with table of {len(op)} rows")
        return cls(op, data.get("rho"), name=data.get("name"))

    def __repr__(self) -> str:
        label = self.name or "FiniteSymQuandle"
        return f"<{label} of order {self.size}>"


def load_quandle(path: str | Path) -> FiniteSymQuandle:
    with open(path) as fh:
        return FiniteSymQuandle.from_dict(json.load(fh))


def save_quandle(q: FiniteSymQuandle, path: str | Path) -> None:
    with open(path, "w") as fh:
        json.dump(q.to_dict(), fh)


def dihedral(p: int) -> FiniteSymQuandle:
    """Dihedral quandle R_p, ``a^b = 2b - a mod p``, with the identity involution."""
    if p < 1:
        raise ValueError("order must be at least 1")
    a = np.arange(p)
    op = (2 * a[None, :] - a[:, None]) % p
    return FiniteSymQuandle(op, a, name=f"R_{p}")


def trivial_quandle(n: int, rho: Sequence[int] | None = None) -> FiniteSymQuandle:
    """``x^y = x`` on n points.  Any involution is good."""
    op = np.tile(np.arange(n)[:, None], (1, n))
    return FiniteSymQuandle(op, rho, name=f"T_{n}")


def alexander_table(n: int, t: int) -> np.ndarray:
    """Alexander quandle table over Z_n: ``x^y = t x + (1 - t) y``."""
    a = np.arange(n)
    return (t * a[:, None] + (1 - t) * a[None, :]) % n


def is_kei(q: FiniteSymQuandle) -> bool:
    op = q.op if isinstance(q, FiniteSymQuandle) else _as_table(q)
    n = len(op)
    return bool(np.all(op[op, np.arange(n)[None, :]] == np.arange(n)[:, None]))


def _involutions(candidates: list[list[int]]):
    n = len(candidates)
    rho = [-1] * n

    def rec(i):
        while i < n and rho[i] >= 0:
            i += 1
        if i == n:
            yield tuple(rho)
            return
        for j in candidates[i]:
            if j < i or rho[j] >= 0:
                continue
            if j != i and i not in candidates[j]:
                continue
            rho[i] = j
            rho[j] = i
            yield from rec(i + 1)
            rho[i] = rho[j] = -1

    yield from rec(0)


def good_involutions(op) -> list[tuple[int, ...]]:
    """All good involutions of a quandle table, by exhaustive search.

    The search runs over involutions of the underlying set, pruned by SQ2
    column by column; SQ1 is checked on every survivor.
    """
    if isinstance(op, FiniteSymQuandle):
        op = op.op
    op = _as_table(op)
    n = len(op)
    if n > MAX_INVOLUTION_SEARCH:
        raise ValueError(f"involution search limited to order {MAX_INVOLUTION_SEARCH}")
    rep = validate(op)
    if not rep.ok:
        raise InvalidQuandleError(rep)
    inv = _inverse_columns(op)
    # SQ2: column rho(y) of op must equal column y of inv_op
    candidates = [[z for z in range(n) if np.array_equal(op[:, z], inv[:, y])] for y in range(n)]
    out = []
    for rho in _involutions(candidates):
        r = np.array(rho)
        if np.array_equal(r[op], op[r, :]):
            out.append(rho)
    return out


def evaluate(x: FsqElement, assignment, q: FiniteSymQuandle):
    """Value of x under the homomorphism sending x_i to ``assignment[i-1]``.

    ``assignment`` may be a 2-d array with one assignment per row, in which
    case an array of values is returned.
    """
    A = np.asarray(assignment)
    if x.max_index() > A.shape[-1]:
        raise IndexError(f"element uses x{x.max_index()} but only {A.shape[-1]} values given")
    op, rho = q.op, q.rho
    v = A[..., x.base - 1]
    if x.sign < 0:
        v = rho[v]
    for a in x.conjugator.letters:
        y = A[..., abs(a) - 1]
        v = op[v, y] if a > 0 else op[v, rho[y]]
    if np.ndim(v) == 0:
        return int(v)
    return v
