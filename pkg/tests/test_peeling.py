from __future__ import annotations

import pytest

from conftest import flower, isolated_hexagon
from fullerene_bip.errors import NegativeRunLength, NotNormal, PreconditionP6
from fullerene_bip.patches import (
    BoundaryDescription,
    boundary_stats,
    describe_boundary,
    is_normal,
    patch_from_faces,
)
from fullerene_bip.peeling import (
    check_peeling_volume,
    peel,
    rewrite_description,
    uninterrupted_peeling,
    vertices_outside,
)
from fullerene_bip.sampling import ball_patches


def D(text: str) -> BoundaryDescription:
    return BoundaryDescription.parse(text)


def test_peel_flower_to_hexagon(lf2):
    h = isolated_hexagon(lf2)
    P = flower(lf2, h)
    inner, report = peel(P)
    assert inner.faces == {h}
    assert inner.length == 6 == 18 + 0 - 12 - 0
    assert report.outer.s == report.inner.s == 6
    assert report.outer.t == report.inner.t == 0
    assert report.removed_faces == 6


def test_peel_rejects_non_normal(lf2):
    h = isolated_hexagon(lf2)
    P = patch_from_faces(lf2, {h})
    with pytest.raises(NotNormal):
        peel(P)


def test_flower_sequence(lf2):
    P = flower(lf2, isolated_hexagon(lf2))
    seq = uninterrupted_peeling(P)
    assert seq.k == 2 and seq.lengths == (18, 6)
    assert vertices_outside(seq) == 18
    assert check_peeling_volume(P, seq)


def test_single_cycle_sequence_passes_vacuously(lf2):
    P = patch_from_faces(lf2, {isolated_hexagon(lf2)})
    seq = uninterrupted_peeling(P)
    assert seq.k == 1 and vertices_outside(seq) == 0
    assert check_peeling_volume(P, seq)


def test_volume_needs_p_not_six():
    from fullerene_bip.generators import nanotube

    F = nanotube(8)
    # one end of the tube: a disc holding all six cap pentagons
    ball = next(P for P in ball_patches(F, centers="face") if P.p == 6)
    with pytest.raises(PreconditionP6):
        check_peeling_volume(ball, uninterrupted_peeling(ball))


@pytest.mark.parametrize(
    "before, after",
    [
        ("B2B2B2B2B2B2", "BBBBBB"),
        ("B5B7B9", "B3B5B7"),  # every run loses one per neighbouring B
        ("A1A1A1", "A3A3A3"),  # and gains one per neighbouring A
    ],
)
def test_rewrite_examples(before, after):
    assert rewrite_description(D(before)) == D(after)


def test_rewrite_paired_bs():
    # A 4 B 0 B 6: the paired Bs lower both runs by three, the A raises them by one
    assert rewrite_description(D("A4BB6")) == D("A2BB4")


def test_rewrite_mixed_letters_cancel():
    assert rewrite_description(D("A3B3A3B3")) == D("A3B3A3B3")


def test_rewrite_without_letters_is_identity():
    assert rewrite_description([7]) == D("7")


def test_negative_run():
    with pytest.raises(NegativeRunLength):
        rewrite_description(D("B1B1B1"))


def test_rewrite_agrees_with_geometry(lf3):
    checked = 0
    for P in ball_patches(lf3, max_radius=4, centers="face"):
        if not is_normal(P):
            continue
        inner, _ = peel(P, check_normal=False)
        assert rewrite_description(describe_boundary(P)) == describe_boundary(inner)
        before, after = boundary_stats(P), boundary_stats(inner)
        assert after.length == before.length + 2 * before.p - 12 - 2 * before.s2
        checked += 1
    assert checked >= 50


def test_deep_peeling(lf3):
    best = max(
        (uninterrupted_peeling(P) for P in ball_patches(lf3, centers="face") if P.p != 6 and is_normal(P)),
        key=lambda s: s.k,
    )
    assert best.k >= 3
    lengths = best.lengths
    # the length formula makes consecutive differences shrink by at most 12
    assert all(a > b for a, b in zip(lengths, lengths[1:]))
    assert check_peeling_volume(best.patches[0], best)
