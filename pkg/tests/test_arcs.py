"""Arcs in the punctured disk and their half-twists."""

import pytest

from braidforge.arcs import (ABOVE, BELOW, PunctureConfig, arc_from_crossings,
                             frame_arc, mirror, mirror_braid, notation,
                             parse_arc, simple_arc, transport)
from braidforge.braid import artin_gen, delta


@pytest.fixture
def cfg():
    return PunctureConfig.standard(6)


def test_adjacent_arc_is_artin_generator(cfg):
    for k in range(1, 6):
        assert frame_arc(cfg, str(k), str(k + 1)).realized == artin_gen(6, k)
        assert simple_arc(cfg, str(k), str(k + 1)).realized == artin_gen(6, k)


def test_arc_is_a_half_twist(cfg):
    arc = simple_arc(cfg, "1", "4", side=BELOW)
    b = arc.realized
    assert b.degree == 1
    perm = b.permutation()
    moved = [i for i, p in enumerate(perm) if p != i]
    assert moved == [0, 3] and perm[0] == 3 and perm[3] == 0


def test_sides_differ_but_agree_on_adjacent(cfg):
    below = simple_arc(cfg, "2", "5", side=BELOW).realized
    above = simple_arc(cfg, "2", "5", side=ABOVE).realized
    assert below != above
    assert below.degree == above.degree == 1


def test_crossing_list_matches_simple_arc(cfg):
    crossings = [("2", BELOW), ("3", BELOW)]
    assert (arc_from_crossings(cfg, "1", "4", crossings).realized
            == simple_arc(cfg, "1", "4", side=BELOW).realized)
    crossings = [("2", ABOVE), ("3", ABOVE)]
    assert (arc_from_crossings(cfg, "1", "4", crossings).realized
            == simple_arc(cfg, "1", "4", side=ABOVE).realized)


def test_flipped_matches_mixed_crossings(cfg):
    flipped = simple_arc(cfg, "1", "4", side=BELOW, flipped=("3",))
    mixed = arc_from_crossings(cfg, "1", "4", [("2", BELOW), ("3", ABOVE)])
    assert flipped.realized == mixed.realized


def test_mirror_swaps_sides(cfg):
    below = simple_arc(cfg, "1", "4", side=BELOW)
    above = simple_arc(cfg, "1", "4", side=ABOVE)
    assert mirror(below).realized == above.realized
    assert mirror(mirror(below)).realized == below.realized


def test_mirror_braid_is_an_involution(cfg):
    b = simple_arc(cfg, "2", "5").realized
    assert mirror_braid(mirror_braid(b)) == b


def test_transport_moves_endpoints(cfg):
    arc = simple_arc(cfg, "1", "2")
    d = delta(6)
    moved = transport(arc, d)
    assert set(moved.endpoints) == {"5", "6"}
    assert moved.realized == arc.realized.conjugate(d)


def test_notation_round_trip(cfg):
    for text in ("z[1,2]", "zu[1,4]", "zbar[2,5]"):
        arc = parse_arc(cfg, text)
        assert parse_arc(cfg, notation(arc)).realized == arc.realized


def test_doubled_labels_config():
    cfg = PunctureConfig.reals(["1", "1'", "2", "2'"])
    assert cfg.n == 4
    assert cfg.position("1'") == 1
    assert cfg.label_at(2) == "2"
