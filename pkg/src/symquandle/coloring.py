"""
Counting symmetric quandle colorings of presented symmetric quandles.

A coloring is an assignment of target elements to the generators under
which every relator evaluates to equal values on both sides.  Relators of
the form ``rho^s(x_g) = rho^t(x_h)`` (bare generators on both sides, as the
wicket relators of a plat presentation) tie generators together; the search
runs only over one representative per tied class, so a plat presentation on
2m generators costs at most ``(#X)^m`` assignments.

Assignments are evaluated in numpy blocks.  Work is partitioned by the value
of the first free generator, which is what ``workers > 1`` parallelises.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .braided_surface import BraidSystem
from .presentation import SymQuandlePresentation, plat_presentation
from .symmetric_quandle import FiniteSymQuandle, evaluate

DEFAULT_CEILING = 10**9
BLOCK = 1 << 15


class ColoringCeilingError(RuntimeError):
    """The search space exceeds the configured ceiling."""

    def __init__(self, size: int, ceiling: int):
        self.size = size
        self.ceiling = ceiling
        super().__init__(f"search space of {size} assignments exceeds ceiling {ceiling}")


@dataclass(frozen=True)
class Coloring:
    values: tuple[int, ...]


class _Plan:
    """Free generators and how every other generator is derived from them."""

    def __init__(self, p: SymQuandlePresentation, eliminate: bool):
        n = p.num_generators
        parent = list(range(n + 1))
        parity = [0] * (n + 1)  # value(g) = rho^parity(g) (value(parent(g)))

        def find(a):
            par = 0
            path = []
            while parent[a] != a:
                path.append(a)
                par ^= parity[a]
                a = parent[a]
            # path compression
            acc = par
            for b in path:
                nxt_par = acc ^ parity[b]
                parent[b], parity[b] = a, acc
                acc = nxt_par
            return a, par

        if eliminate:
            for lhs, rhs in p.relators:
                if lhs.conjugator or rhs.conjugator:
                    continue
                (ra, pa), (rb, pb) = find(lhs.base), find(rhs.base)
                if ra == rb:
                    continue
                # rho^{s}(x_a) = rho^{t}(x_b); smaller root becomes the parent
                rel = pa ^ pb ^ (lhs.sign != rhs.sign)
                lo, hi = min(ra, rb), max(ra, rb)
                parent[hi] = lo
                parity[hi] = int(rel)

        self.n = n
        self.roots = []
        self.source = []
        self.flip = []
        for g in range(1, n + 1):
            r, par = find(g)
            if r == g:
                self.roots.append(g)
            self.source.append(r)
            self.flip.append(par)
        self.relators = p.relators

    def search_size(self, q: int) -> int:
        return q ** len(self.roots)

    def assignments(self, X: FiniteSymQuandle, start: int, stop: int) -> np.ndarray:
        """Full assignment rows for root indices in ``[start, stop)`` of the product order."""
        q = X.size
        k = len(self.roots)
        idx = np.arange(start, stop, dtype=np.int64)
        root_vals = np.empty((len(idx), k), dtype=np.int64)
        for c in range(k - 1, -1, -1):
            idx, root_vals[:, c] = np.divmod(idx, q)
        col = {g: c for c, g in enumerate(self.roots)}
        A = np.empty((len(root_vals), self.n), dtype=np.int64)
        for g in range(1, self.n + 1):
            v = root_vals[:, col[self.source[g - 1]]]
            A[:, g - 1] = X.rho[v] if self.flip[g - 1] else v
        return A

    def check(self, A: np.ndarray, X: FiniteSymQuandle) -> np.ndarray:
        ok = np.ones(len(A), dtype=bool)
        for lhs, rhs in self.relators:
            if not ok.any():
                break
            live = np.flatnonzero(ok)
            sub = A[live]
            ok[live] = evaluate(lhs, sub, X) == evaluate(rhs, sub, X)
        return ok


def _blocks(plan: _Plan, q: int):
    """Blocks of the product order, grouped by the value of the first root."""
    total = plan.search_size(q)
    if not plan.roots:
        return [[(0, 1)]]
    per = total // q
    parts = []
    for v in range(q):
        lo, hi = v * per, (v + 1) * per
        parts.append([(s, min(s + BLOCK, hi)) for s in range(lo, hi, BLOCK)])
    return parts


def _prepare(p: SymQuandlePresentation, X: FiniteSymQuandle, ceiling: int, eliminate: bool):
    plan = _Plan(p, eliminate)
    size = plan.search_size(X.size)
    if size > ceiling:
        raise ColoringCeilingError(size, ceiling)
    return plan


def count_colorings(
    p: SymQuandlePresentation,
    X: FiniteSymQuandle,
    ceiling: int = DEFAULT_CEILING,
    eliminate: bool = True,
    workers: int = 1,
) -> int:
    """Exact number of colorings of p by X.

    With ``eliminate=False`` every generator is searched independently.
    """
    plan = _prepare(p, X, ceiling, eliminate)

    def run(part):
        return sum(int(plan.check(plan.assignments(X, a, b), X).sum()) for a, b in part)

    parts = _blocks(plan, X.size)
    if workers > 1 and len(parts) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return sum(pool.map(run, parts))
    return sum(run(part) for part in parts)


def enumerate_colorings(
    p: SymQuandlePresentation,
    X: FiniteSymQuandle,
    limit: int | None = None,
    ceiling: int = DEFAULT_CEILING,
) -> list[Coloring]:
    """Colorings in lexicographic order of their value tuples, at most ``limit`` of them."""
    if limit is not None and limit <= 0:
        return []
    plan = _prepare(p, X, ceiling, True)
    out: list[Coloring] = []
    # roots are the smallest index of each tied class, so the product order
    # over roots is the lexicographic order of full tuples
    for part in _blocks(plan, X.size):
        for a, b in part:
            A = plan.assignments(X, a, b)
            for row in A[plan.check(A, X)]:
                out.append(Coloring(tuple(int(v) for v in row)))
                if limit is not None and len(out) >= limit:
                    return out
    return out


def is_coloring(p: SymQuandlePresentation, X: FiniteSymQuandle, values) -> bool:
    A = np.asarray([values], dtype=np.int64)
    return all(
        evaluate(lhs, A, X)[0] == evaluate(rhs, A, X)[0] for lhs, rhs in p.relators)


def coloring_count_for_system(
    bs: BraidSystem, X: FiniteSymQuandle, ceiling: int = DEFAULT_CEILING, workers: int = 1
) -> int:
    """Coloring number of the plat closure of bs."""
    return count_colorings(plat_presentation(bs), X, ceiling=ceiling, workers=workers)
