import itertools
import random

import pytest

from symquandle.braided_surface import BraidSystem, apply_slides, family_bmp, family_bmpg
from symquandle.coloring import (
    Coloring,
    ColoringCeilingError,
    coloring_count_for_system,
    count_colorings,
    enumerate_colorings,
    is_coloring,
)
from symquandle.presentation import SymQuandlePresentation, plat_presentation
from symquandle.symmetric_quandle import FiniteSymQuandle, FsqElement, dihedral, trivial_quandle

from generators import random_genuine_system, random_moves
from oracles import plat_colorings_by_action, symmetric_quandle_pool


def triples(bs):
    return [(e.conjugator.letters, e.band, e.sign) for e in bs]


def test_count_examples():
    pres = plat_presentation(family_bmp(2, 3))
    assert count_colorings(pres, dihedral(3)) == 9
    assert count_colorings(pres, dihedral(5)) == 5
    assert count_colorings(SymQuandlePresentation(1), dihedral(5)) == 5


def test_count_for_system_examples():
    assert coloring_count_for_system(family_bmp(2, 5), dihedral(5)) == 25
    assert coloring_count_for_system(family_bmp(3, 3), dihedral(5)) == 5
    for q in range(1, 8):
        assert coloring_count_for_system(BraidSystem(2), dihedral(q)) == q


def test_enumerate_b23_in_r5_is_constant():
    cols = enumerate_colorings(plat_presentation(family_bmp(2, 3)), dihedral(5))
    assert cols == [Coloring((v, v, v, v)) for v in range(5)]


def test_enumerate_limit_and_empty():
    pres = plat_presentation(family_bmp(2, 3))
    assert enumerate_colorings(pres, dihedral(5), limit=0) == []
    assert len(enumerate_colorings(pres, dihedral(3), limit=4)) == 4
    assert enumerate_colorings(SymQuandlePresentation(0), dihedral(3)) == [Coloring(())]
    assert count_colorings(SymQuandlePresentation(0), dihedral(3)) == 1


def test_enumerate_lexicographic_and_complete():
    pres = plat_presentation(family_bmp(2, 3))
    X = dihedral(3)
    cols = [c.values for c in enumerate_colorings(pres, X)]
    brute = [v for v in itertools.product(range(3), repeat=4) if is_coloring(pres, X, v)]
    assert cols == brute


def test_counts_match_action_oracle_on_families():
    for m, p, q in [(2, 3, 3), (2, 3, 5), (2, 5, 5), (3, 3, 3), (2, 2, 4), (3, 1, 3)]:
        bs = family_bmp(m, p)
        X = dihedral(q)
        assert coloring_count_for_system(bs, X) == plat_colorings_by_action(
            X.op.tolist(), X.rho.tolist(), bs.degree, triples(bs))


def test_counts_match_action_oracle_on_random_systems():
    rng = random.Random(51)
    pool = symmetric_quandle_pool(max_dihedral=5, max_trivial=3)
    for _ in range(40):
        bs = random_genuine_system(rng, degrees=(2, 4), scramble=2)
        op, rho = rng.choice(pool)
        X = FiniteSymQuandle(op, rho)
        assert coloring_count_for_system(bs, X) == plat_colorings_by_action(op, rho, bs.degree, triples(bs))


def test_non_genuine_system_counts_match_oracle():
    # the presentation does not need a trivial boundary braid
    bs = BraidSystem.from_triples(4, [((2,), 1, 1), ((), 3, -1)])
    X = dihedral(3)
    assert coloring_count_for_system(bs, X) == plat_colorings_by_action(
        X.op.tolist(), X.rho.tolist(), 4, triples(bs))


def test_elimination_soundness():
    rng = random.Random(52)
    for _ in range(20):
        pres = plat_presentation(random_genuine_system(rng, degrees=(4,)))
        for q in (3, 4, 5):
            X = dihedral(q)
            assert count_colorings(pres, X) == count_colorings(pres, X, eliminate=False)


def test_tied_generators_with_conflicting_parity():
    # x1 = x2 and x1 = rho(x2): only rho-fixed values survive
    pres = SymQuandlePresentation(2, ((FsqElement(1, 1), FsqElement(1, 2)), (FsqElement(1, 1), FsqElement(-1, 2))))
    X = trivial_quandle(3, [1, 0, 2])
    assert count_colorings(pres, X) == 1
    assert count_colorings(pres, X, eliminate=False) == 1


def test_constant_coloring_at_rho_fixed_points():
    rng = random.Random(53)
    for op, rho in symmetric_quandle_pool(max_dihedral=5, max_trivial=4):
        X = FiniteSymQuandle(op, rho)
        fixed = X.rho_fixed_points()
        bs = random_genuine_system(rng, degrees=(4,))
        pres = plat_presentation(bs)
        for v in fixed:
            assert is_coloring(pres, X, [v] * bs.degree)
        if fixed:
            assert count_colorings(pres, X) >= 1


def test_ceiling_refusal():
    pres = SymQuandlePresentation(4)
    with pytest.raises(ColoringCeilingError):
        count_colorings(pres, dihedral(5), ceiling=600)
    assert count_colorings(pres, dihedral(5), ceiling=625) == 625


def test_workers_give_same_count():
    pres = plat_presentation(family_bmp(3, 5))
    X = dihedral(5)
    assert count_colorings(pres, X, workers=4) == count_colorings(pres, X) == 125


def test_genus_does_not_change_counts():
    for m in (2, 3):
        for p in (3, 5):
            for q in (3, 5):
                X = dihedral(q)
                base = coloring_count_for_system(family_bmp(m, p), X)
                for g in (1, 2):
                    assert coloring_count_for_system(family_bmpg(m, p, g), X) == base


def test_slides_do_not_change_counts():
    rng = random.Random(54)
    for _ in range(20):
        bs = random_genuine_system(rng, degrees=(4, 6))
        moved = apply_slides(bs, random_moves(rng, len(bs), 3)) if len(bs) > 1 else bs
        for q in (3, 5):
            X = dihedral(q)
            assert coloring_count_for_system(bs, X) == coloring_count_for_system(moved, X)


def test_generator_elimination_matches_brute_force():
    bad = []
    for m, p, q in itertools.product((2, 3), (3, 5, 7), (3, 5)):
        if m == 3 and q == 5:
            continue
        bs = family_bmp(m, p)
        X = dihedral(q)
        pres = plat_presentation(bs)
        a = count_colorings(pres, X)
        b = count_colorings(pres, X, eliminate=False)
        c = plat_colorings_by_action(X.op.tolist(), X.rho.tolist(), bs.degree,
                                     [(e.conjugator.letters, e.band, e.sign) for e in bs])
        if not a == b == c:
            bad.append((m, p, q, a, b, c))
    assert not bad, bad
