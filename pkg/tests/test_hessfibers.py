"""Tests for ideal enumeration, fiber pavings, and quintuple classification."""

from itertools import chain, combinations

import pytest

from hesspave.errors import ComputationError, InvalidIdealError, UnsupportedZeroSetError
from hesspave.hessfibers import (
    Ideal,
    classify_quintuples,
    classify_zero_set,
    enumerate_ideals,
    fiber_paving,
    ideal_by_slug,
    ideal_slugs,
    membership_expansion,
    render_zero_set,
)
from hesspave.orbitctx import orbit_context
from hesspave.poly import Poly
from hesspave.rootcore import root_system
from hesspave.weylgrp import weyl_group

IDEAL_COUNTS = {"G2": 8, "F4": 105, "E6": 833}

G2_IDEAL_SLUGS = (
    "I_emptyset",
    "I_2beta_3alpha",
    "I_beta_3alpha",
    "I_beta_2alpha",
    "I_beta_alpha",
    "I_beta",
    "I_alpha",
    "I_alphabeta",
)

# betti tuples for every G2 orbit/ideal pairing, () marking an empty fiber
EXPECTED_BETTI = {
    "zero": {slug: (1, 2, 2, 2, 2, 2, 1) for slug in G2_IDEAL_SLUGS},
    "A1": {
        "I_emptyset": (),
        "I_2beta_3alpha": (1, 1),
        "I_beta_3alpha": (1, 2, 1),
        "I_beta_2alpha": (1, 2, 1),
        "I_beta_alpha": (1, 2, 1),
        "I_beta": (1, 2, 2, 1),
        "I_alpha": (1, 2, 1),
        "I_alphabeta": (1, 2, 2, 1),
    },
    "A1t": {
        "I_emptyset": (),
        "I_2beta_3alpha": (),
        "I_beta_3alpha": (),
        "I_beta_2alpha": (1, 1),
        "I_beta_alpha": (2, 2),
        "I_beta": (1, 2, 1),
        "I_alpha": (2, 3, 1),
        "I_alphabeta": (1, 3, 2),
    },
    "G2a1": {
        "I_emptyset": (),
        "I_2beta_3alpha": (),
        "I_beta_3alpha": (),
        "I_beta_2alpha": (),
        "I_beta_alpha": (3,),
        "I_beta": (1, 1),
        "I_alpha": (3, 3),
        "I_alphabeta": (1, 4),
    },
    "G2": {
        "I_emptyset": (),
        "I_2beta_3alpha": (),
        "I_beta_3alpha": (),
        "I_beta_2alpha": (),
        "I_beta_alpha": (),
        "I_beta": (),
        "I_alpha": (),
        "I_alphabeta": (1,),
    },
}


def powerset(items):
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def test_ideal_counts_per_type():
    for label, count in sorted(IDEAL_COUNTS.items()):
        assert len(enumerate_ideals(label)) == count


def test_rank_two_ideals_match_brute_force_upper_sets():
    rs = root_system("G2")
    closed = set()
    for subset in powerset(rs.positive_roots):
        members = set(subset)
        if all(
            rs.add(r, a) not in set(rs.positive_roots) or rs.add(r, a) in members
            for r in members
            for a in rs.simple_roots
            if rs.is_root(rs.add(r, a))
        ):
            closed.add(frozenset(members))
    assert {frozenset(I.roots) for I in enumerate_ideals("G2")} == closed
    assert len(closed) == 8


def test_rank_two_ideal_slugs_and_sizes():
    ideals = enumerate_ideals("G2")
    assert ideal_slugs("G2") == G2_IDEAL_SLUGS
    assert [len(I.roots) for I in ideals] == [0, 1, 2, 3, 4, 5, 5, 6]
    lookup = {I.slug: I for I in ideals}
    rs = root_system("G2")
    assert [rs.root_name(r) for r in lookup["I_beta"].minimal_roots] == ["beta"]
    assert [rs.root_name(r) for r in lookup["I_alphabeta"].minimal_roots] == [
        "beta", "alpha",
    ]


def test_ideal_roots_are_upper_closed_in_every_type():
    for label in ("G2", "F4"):
        rs = root_system(label)
        positives = set(rs.positive_roots)
        for I in enumerate_ideals(label):
            members = set(I.roots)
            for r in members:
                for a in rs.simple_roots:
                    up = rs.add(r, a)
                    if up in positives:
                        assert up in members, (I.slug, r, a)


def test_proper_maximal_subideal_lattice_rank_two():
    lookup = {I.slug: I for I in enumerate_ideals("G2")}
    covers = {
        slug: tuple(J.slug for J in I.proper_maximal_subideals())
        for slug, I in lookup.items()
    }
    assert covers == {
        "I_emptyset": (),
        "I_2beta_3alpha": ("I_emptyset",),
        "I_beta_3alpha": ("I_2beta_3alpha",),
        "I_beta_2alpha": ("I_beta_3alpha",),
        "I_beta_alpha": ("I_beta_2alpha",),
        "I_beta": ("I_beta_alpha",),
        "I_alpha": ("I_beta_alpha",),
        "I_alphabeta": ("I_alpha", "I_beta"),
    }


def test_ideal_validation_and_lookup_errors():
    rs = root_system("G2")
    with pytest.raises(InvalidIdealError):
        Ideal(rs, ((0, 1),))  # beta alone is not upper closed
    with pytest.raises(InvalidIdealError):
        ideal_by_slug("G2", "I_nope")
    assert ideal_by_slug("G2", "I_beta").slug == "I_beta"


def test_ideal_to_dict():
    data = ideal_by_slug("G2", "I_beta").to_dict()
    assert data == {
        "slug": "I_beta",
        "size": 5,
        "roots": ["beta", "beta+alpha", "beta+2alpha", "beta+3alpha", "2beta+3alpha"],
        "minimal_roots": ["beta"],
    }


@pytest.mark.parametrize("orbit", sorted(EXPECTED_BETTI))
def test_fiber_betti_numbers(orbit):
    for slug, betti in EXPECTED_BETTI[orbit].items():
        fp = fiber_paving(orbit, slug)
        assert fp.betti() == betti, (orbit, slug)
        assert fp.is_empty == (betti == ())
        assert fp.components() == (betti[0] if betti else 0)
        assert fp.dimension() == len(betti) - 1
        assert sum(betti) == len(fp.cells)


def test_zero_orbit_fiber_is_the_full_flag_paving():
    W = weyl_group("G2")
    hist = W.length_histogram()
    for slug in G2_IDEAL_SLUGS:
        fp = fiber_paving("zero", slug)
        assert fp.betti() == tuple(hist[i] for i in range(7))
        assert sorted(c.v_name for c in fp.cells) == sorted(
            W.word_name(w) for w in W.elements()
        )


def test_two_component_fiber_cells():
    fp = fiber_paving("A1t", "I_alpha")
    assert [(c.v_name, c.cell, c.dim) for c in fp.cells] == [
        ("e", "e", 0), ("e", "s", 1), ("s", "e", 0),
        ("s", "s", 1), ("st", "e", 1), ("st", "s", 2),
    ]
    assert fp.components() == 2


def test_point_fiber_cells():
    fp = fiber_paving("G2a1", "I_beta_alpha")
    assert [(c.v_name, c.cell, c.dim) for c in fp.cells] == [
        ("e", "e", 0), ("e", "s[1]", 0), ("e", "s[2]", 0),
    ]
    assert fp.dimension() == 0 and fp.components() == 3


def test_dominant_orbit_full_ideal_fiber_cells():
    fp = fiber_paving("G2a1", "I_alphabeta")
    assert [(c.v_name, c.cell, c.dim) for c in fp.cells] == [
        ("e", "e", 0), ("e", "s", 1), ("t", "e", 1),
        ("t", "s[1]", 1), ("t", "s[2]", 1),
    ]
    fp_top = fiber_paving("G2", "I_alphabeta")
    assert [(c.v_name, c.cell, c.dim) for c in fp_top.cells] == [("e", "e", 0)]


def test_fiber_paving_to_dict():
    data = fiber_paving("A1", "I_2beta_3alpha").to_dict()
    assert data == {
        "orbit": "A1",
        "ideal": "I_2beta_3alpha",
        "cells": [
            {"v": "e", "cell": "e", "dim": 0},
            {"v": "e", "cell": "s", "dim": 1},
        ],
        "betti": [1, 1],
        "components": 1,
    }


def test_fiber_paving_rejects_higher_rank_levi():
    with pytest.raises(ComputationError):
        fiber_paving("F4a2", enumerate_ideals("F4")[3])


# -- zero set classification ----------------------------------------------------------


def v(i):
    return Poly.var(3, i)


def c(k):
    return Poly.const(3, k)


def test_zero_set_constant_and_trivial_cases():
    assert classify_zero_set([c(5)], (0, 1, 2)).kind == "empty"
    entire = classify_zero_set([Poly.zero(3)], (0, 1, 2))
    assert (entire.kind, entire.dim, entire.euler) == ("entire", 3, 1)
    assert render_zero_set(entire) == "entire"


def test_zero_set_linear_elimination():
    zs = classify_zero_set([v(0) - c(1)], (0, 1, 2))
    assert (zs.kind, zs.dim, zs.euler) == ("affine", 2, 1)
    assert render_zero_set(zs) == "C^2"
    zs2 = classify_zero_set([v(0) - c(1), v(1) + c(2)], (0, 1, 2))
    assert (zs2.kind, zs2.dim) == ("affine", 1)
    assert render_zero_set(zs2) == "C"
    zs3 = classify_zero_set([v(0), v(1), v(2)], (0, 1, 2))
    assert (zs3.kind, zs3.dim) == ("affine", 0)
    assert render_zero_set(zs3) == "1 point"


def test_zero_set_points_and_lines():
    pts = classify_zero_set([v(0) * v(0) - c(1)], (0,))
    assert (pts.kind, pts.count, pts.euler) == ("points", 2, 2)
    assert render_zero_set(pts) == "2 points"
    lines = classify_zero_set([v(0) * v(0) - c(1)], (0, 1))
    assert (lines.kind, lines.dim, lines.count, lines.euler) == ("lines", 1, 2, 2)
    assert render_zero_set(lines) == "C+C"


def test_zero_set_punctured_line_and_quadric():
    hyp = classify_zero_set([v(0) * v(1) - c(1)], (0, 1))
    assert (hyp.kind, hyp.dim, hyp.euler) == ("punctured_line", 1, 0)
    assert render_zero_set(hyp) == "Cx"
    quad = classify_zero_set(
        [v(0) * v(1) + v(0) * v(2) - v(1) * v(2) - c(1)], (0, 1, 2)
    )
    assert (quad.kind, quad.dim, quad.euler) == ("quadric", 2, None)
    assert render_zero_set(quad) == "smooth quadric"


def test_zero_set_outside_inventory_is_rejected():
    with pytest.raises(UnsupportedZeroSetError):
        classify_zero_set([v(0) * v(1) * v(2) - c(1)], (0, 1, 2))


# -- quintuple classification ---------------------------------------------------------

F4_QUINTUPLES = (
    ("a4",), 1, 1, "P1",
    (
        ("CC", (("a4", "-1"),), "empty"),
        ("CI", (("a4", "0"),), "entire"),
        ("IC", (("a4", "-1"),), "empty"),
        ("II", (("a4", "0"),), "entire"),
    ),
), (
    ("a2",), 1, 2, "P1",
    (
        ("CC", (("a2", "-1+2*z1*z3-z3^2"),), "punctured_line"),
        ("CI", (("a2", "-1"),), "empty"),
        ("IC", (("a2", "-2*z3"),), "affine"),
        ("II", (("a2", "0"),), "entire"),
    ),
)

E6_QUINTUPLES = (
    ("a5",), 1, 1, "P1 x P1",
    (
        ("CCC", (("a5", "-1"),), "empty"),
        ("CCI", (("a5", "-1"),), "empty"),
        ("CIC", (("a5", "0"),), "entire"),
        ("ICC", (("a5", "-1"),), "empty"),
        ("CII", (("a5", "0"),), "entire"),
        ("ICI", (("a5", "-1"),), "empty"),
        ("IIC", (("a5", "0"),), "entire"),
        ("III", (("a5", "0"),), "entire"),
    ),
), (
    ("a3",), 1, 2, "rational surface",
    (
        ("CCC", (("a3", "-1+z1*z2+z1*z3-z2*z3"),), "quadric"),
        ("CCI", (("a3", "-z1+z2"),), "affine"),
        ("CIC", (("a3", "-z1+z3"),), "affine"),
        ("ICC", (("a3", "-z2-z3"),), "affine"),
        ("CII", (("a3", "-1"),), "empty"),
        ("ICI", (("a3", "1"),), "empty"),
        ("IIC", (("a3", "1"),), "empty"),
        ("III", (("a3", "0"),), "entire"),
    ),
), (
    ("a1",), 1, 1, "P1 x P1",
    (
        ("CCC", (("a1", "1"),), "empty"),
        ("CCI", (("a1", "1"),), "empty"),
        ("CIC", (("a1", "1"),), "empty"),
        ("ICC", (("a1", "0"),), "entire"),
        ("CII", (("a1", "1"),), "empty"),
        ("ICI", (("a1", "0"),), "entire"),
        ("IIC", (("a1", "0"),), "entire"),
        ("III", (("a1", "0"),), "entire"),
    ),
), (
    ("a5", "a3"), 2, 3, "P1",
    (
        ("CCC", (("a5", "-1"), ("a3", "-1+z1*z2+z1*z3-z2*z3")), "empty"),
        ("CCI", (("a5", "-1"), ("a3", "-z1+z2")), "empty"),
        ("CIC", (("a5", "0"), ("a3", "-z1+z3")), "affine"),
        ("ICC", (("a5", "-1"), ("a3", "-z2-z3")), "empty"),
        ("CII", (("a5", "0"), ("a3", "-1")), "empty"),
        ("ICI", (("a5", "-1"), ("a3", "1")), "empty"),
        ("IIC", (("a5", "0"), ("a3", "1")), "empty"),
        ("III", (("a5", "0"), ("a3", "0")), "entire"),
    ),
), (
    ("a5", "a1"), 2, 4, "P1",
    (
        ("CCC", (("a5", "-1"), ("a1", "1")), "empty"),
        ("CCI", (("a5", "-1"), ("a1", "1")), "empty"),
        ("CIC", (("a5", "0"), ("a1", "1")), "empty"),
        ("ICC", (("a5", "-1"), ("a1", "0")), "empty"),
        ("CII", (("a5", "0"), ("a1", "1")), "empty"),
        ("ICI", (("a5", "-1"), ("a1", "0")), "empty"),
        ("IIC", (("a5", "0"), ("a1", "0")), "entire"),
        ("III", (("a5", "0"), ("a1", "0")), "entire"),
    ),
), (
    ("a5", "a4+a5"), 2, 5, "empty",
    (
        ("CCC", (("a5", "-1"), ("a4+a5", "0")), "empty"),
        ("CCI", (("a5", "-1"), ("a4+a5", "0")), "empty"),
        ("CIC", (("a5", "0"), ("a4+a5", "1")), "empty"),
        ("ICC", (("a5", "-1"), ("a4+a5", "0")), "empty"),
        ("CII", (("a5", "0"), ("a4+a5", "1")), "empty"),
        ("ICI", (("a5", "-1"), ("a4+a5", "0")), "empty"),
        ("IIC", (("a5", "0"), ("a4+a5", "1")), "empty"),
        ("III", (("a5", "0"), ("a4+a5", "1")), "empty"),
    ),
), (
    ("a3", "a1"), 2, 3, "P1",
    (
        ("CCC", (("a3", "-1+z1*z2+z1*z3-z2*z3"), ("a1", "1")), "empty"),
        ("CCI", (("a3", "-z1+z2"), ("a1", "1")), "empty"),
        ("CIC", (("a3", "-z1+z3"), ("a1", "1")), "empty"),
        ("ICC", (("a3", "-z2-z3"), ("a1", "0")), "affine"),
        ("CII", (("a3", "-1"), ("a1", "1")), "empty"),
        ("ICI", (("a3", "1"), ("a1", "0")), "empty"),
        ("IIC", (("a3", "1"), ("a1", "0")), "empty"),
        ("III", (("a3", "0"), ("a1", "0")), "entire"),
    ),
), (
    ("a3", "a3+a6"), 2, 6, "P1 + P1",
    (
        ("CCC", (("a3", "-1+z1*z2+z1*z3-z2*z3"), ("a3+a6", "z1-z2")), "lines"),
        ("CCI", (("a3", "-z1+z2"), ("a3+a6", "-1+z1*z2")), "points"),
        ("CIC", (("a3", "-z1+z3"), ("a3+a6", "1")), "empty"),
        ("ICC", (("a3", "-z2-z3"), ("a3+a6", "-1")), "empty"),
        ("CII", (("a3", "-1"), ("a3+a6", "-z1")), "empty"),
        ("ICI", (("a3", "1"), ("a3+a6", "-z2")), "empty"),
        ("IIC", (("a3", "1"), ("a3+a6", "0")), "empty"),
        ("III", (("a3", "0"), ("a3+a6", "1")), "empty"),
    ),
), (
    ("a3", "a3+a4"), 2, 6, "P1 + P1",
    (
        ("CCC", (("a3", "-1+z1*z2+z1*z3-z2*z3"), ("a3+a4", "z1-z3")), "lines"),
        ("CCI", (("a3", "-z1+z2"), ("a3+a4", "1")), "empty"),
        ("CIC", (("a3", "-z1+z3"), ("a3+a4", "-1+z1*z3")), "points"),
        ("ICC", (("a3", "-z2-z3"), ("a3+a4", "-1")), "empty"),
        ("CII", (("a3", "-1"), ("a3+a4", "-z1")), "empty"),
        ("ICI", (("a3", "1"), ("a3+a4", "0")), "empty"),
        ("IIC", (("a3", "1"), ("a3+a4", "-z3")), "empty"),
        ("III", (("a3", "0"), ("a3+a4", "1")), "empty"),
    ),
), (
    ("a3", "a2+a3"), 2, 6, "P1 + P1",
    (
        ("CCC", (("a3", "-1+z1*z2+z1*z3-z2*z3"), ("a2+a3", "-z2-z3")), "lines"),
        ("CCI", (("a3", "-z1+z2"), ("a2+a3", "1")), "empty"),
        ("CIC", (("a3", "-z1+z3"), ("a2+a3", "1")), "empty"),
        ("ICC", (("a3", "-z2-z3"), ("a2+a3", "1+z2*z3")), "points"),
        ("CII", (("a3", "-1"), ("a2+a3", "0")), "empty"),
        ("ICI", (("a3", "1"), ("a2+a3", "-z2")), "empty"),
        ("IIC", (("a3", "1"), ("a2+a3", "-z3")), "empty"),
        ("III", (("a3", "0"), ("a2+a3", "1")), "empty"),
    ),
), (
    ("a1", "a1+a2"), 2, 5, "empty",
    (
        ("CCC", (("a1", "1"), ("a1+a2", "0")), "empty"),
        ("CCI", (("a1", "1"), ("a1+a2", "0")), "empty"),
        ("CIC", (("a1", "1"), ("a1+a2", "0")), "empty"),
        ("ICC", (("a1", "0"), ("a1+a2", "1")), "empty"),
        ("CII", (("a1", "1"), ("a1+a2", "0")), "empty"),
        ("ICI", (("a1", "0"), ("a1+a2", "1")), "empty"),
        ("IIC", (("a1", "0"), ("a1+a2", "1")), "empty"),
        ("III", (("a1", "0"), ("a1+a2", "1")), "empty"),
    ),
)


@pytest.mark.parametrize(
    "slug,expected", [("F4a2", F4_QUINTUPLES), ("E6a3", E6_QUINTUPLES)]
)
def test_quintuple_classification_is_frozen(slug, expected):
    quintuples = classify_quintuples(slug)
    assert len(quintuples) == len(expected)
    for q, (names, codim, group, conclusion, cells) in zip(quintuples, expected):
        assert q.removed_names == names
        assert q.codim == codim
        assert q.group == group
        assert q.conclusion == conclusion
        observed = tuple(
            (cell.pattern, cell.constraints, cell.zero_set.kind) for cell in q.cells
        )
        assert observed == cells, (slug, names)


def test_quintuple_group_count_and_membership():
    f4 = classify_quintuples("F4a2")
    assert sorted({q.group for q in f4}) == [1, 2]
    e6 = classify_quintuples("E6a3")
    assert sorted({q.group for q in e6}) == [1, 2, 3, 4, 5, 6]
    by_group = {}
    for q in e6:
        by_group.setdefault(q.group, []).append(q.removed_names)
    assert by_group == {
        1: [("a5",), ("a1",)],
        2: [("a3",)],
        3: [("a5", "a3"), ("a3", "a1")],
        4: [("a5", "a1")],
        5: [("a5", "a4+a5"), ("a1", "a1+a2")],
        6: [("a3", "a3+a6"), ("a3", "a3+a4"), ("a3", "a2+a3")],
    }
    # Members of one group share identical zero-set signatures level by level.
    def signature(q):
        return tuple(
            sorted(
                (len(cell.present), cell.zero_set.kind, cell.zero_set.dim,
                 cell.zero_set.count)
                for cell in q.cells
            )
        )

    for group_members in by_group.values():
        sigs = {signature(q) for q in e6 if q.removed_names in group_members}
        assert len(sigs) == 1
    sigs_by_group = {q.group: signature(q) for q in e6}
    assert len(set(sigs_by_group.values())) == 6


def test_quintuple_to_dict():
    q = classify_quintuples("F4a2")[0]
    data = q.to_dict()
    assert data["removed"] == ["a4"]
    assert data["codim"] == 1
    assert data["conclusion"] == "P1"
    assert data["cells"][0]["pattern"] == "CC"
    assert data["cells"][0]["locus"] == "empty"
    assert data["cells"][0]["constraints"] == {"a4": "-1"}
    assert data["cells"][1] == {
        "pattern": "CI",
        "constraints": {"a4": "0"},
        "locus": "entire",
        "dim": 1,
        "euler": 1,
    }


# -- membership expansion -------------------------------------------------------------

# per present-factor tuple: root name -> set of monomial exponent vectors
EXPANSION_SUPPORTS = {
    (0, 1, 2): {
        "a5": {(0, 0, 0)},
        "a3": {(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)},
        "a1": {(0, 0, 0)},
        "a3+a6": {(0, 1, 0), (1, 0, 0)},
        "a3+a4": {(0, 0, 1), (1, 0, 0)},
        "a2+a3": {(0, 0, 1), (0, 1, 0)},
        "a3+a4+a6": {(0, 0, 0)},
        "a2+a3+a6": {(0, 0, 0)},
        "a2+a3+a4": {(0, 0, 0)},
    },
    (0, 1): {
        "a5": {(0, 0, 0)},
        "a3": {(0, 1, 0), (1, 0, 0)},
        "a1": {(0, 0, 0)},
        "a3+a6": {(0, 0, 0), (1, 1, 0)},
        "a3+a4": {(0, 0, 0)},
        "a2+a3": {(0, 0, 0)},
        "a3+a4+a6": {(1, 0, 0)},
        "a2+a3+a6": {(0, 1, 0)},
        "a2+a3+a4+a6": {(0, 0, 0)},
    },
    (0, 2): {
        "a3": {(0, 0, 1), (1, 0, 0)},
        "a1": {(0, 0, 0)},
        "a4+a5": {(0, 0, 0)},
        "a3+a6": {(0, 0, 0)},
        "a3+a4": {(0, 0, 0), (1, 0, 1)},
        "a2+a3": {(0, 0, 0)},
        "a3+a4+a6": {(1, 0, 0)},
        "a2+a3+a4": {(0, 0, 1)},
        "a2+a3+a4+a6": {(0, 0, 0)},
    },
    (1, 2): {
        "a5": {(0, 0, 0)},
        "a3": {(0, 0, 1), (0, 1, 0)},
        "a3+a6": {(0, 0, 0)},
        "a3+a4": {(0, 0, 0)},
        "a2+a3": {(0, 0, 0), (0, 1, 1)},
        "a1+a2": {(0, 0, 0)},
        "a2+a3+a6": {(0, 1, 0)},
        "a2+a3+a4": {(0, 0, 1)},
        "a2+a3+a4+a6": {(0, 0, 0)},
    },
    (0,): {
        "a3": {(0, 0, 0)},
        "a1": {(0, 0, 0)},
        "a4+a5": {(0, 0, 0)},
        "a3+a6": {(1, 0, 0)},
        "a3+a4": {(1, 0, 0)},
        "a3+a4+a6": {(0, 0, 0)},
        "a2+a3+a6": {(0, 0, 0)},
        "a2+a3+a4": {(0, 0, 0)},
    },
    (1,): {
        "a5": {(0, 0, 0)},
        "a3": {(0, 0, 0)},
        "a3+a6": {(0, 1, 0)},
        "a2+a3": {(0, 1, 0)},
        "a1+a2": {(0, 0, 0)},
        "a3+a4+a6": {(0, 0, 0)},
        "a2+a3+a6": {(0, 0, 0)},
        "a2+a3+a4": {(0, 0, 0)},
    },
    (2,): {
        "a3": {(0, 0, 0)},
        "a4+a5": {(0, 0, 0)},
        "a3+a4": {(0, 0, 1)},
        "a2+a3": {(0, 0, 1)},
        "a1+a2": {(0, 0, 0)},
        "a3+a4+a6": {(0, 0, 0)},
        "a2+a3+a6": {(0, 0, 0)},
        "a2+a3+a4": {(0, 0, 0)},
    },
    (): {
        "a4+a5": {(0, 0, 0)},
        "a3+a6": {(0, 0, 0)},
        "a3+a4": {(0, 0, 0)},
        "a2+a3": {(0, 0, 0)},
        "a1+a2": {(0, 0, 0)},
        "a2+a3+a4+a6": {(0, 0, 0)},
    },
}


@pytest.mark.parametrize("present", sorted(EXPANSION_SUPPORTS, reverse=True))
def test_membership_expansion_supports(present):
    oc = orbit_context("E6a3")
    rs = oc.rs
    expansion = membership_expansion(oc, present)
    observed = {
        rs.root_name(root): set(poly.terms.keys())
        for root, poly in expansion.items()
    }
    assert observed == EXPANSION_SUPPORTS[present]


def test_membership_expansion_without_flows_is_the_nilpotent():
    oc = orbit_context("E6a3")
    expansion = membership_expansion(oc, ())
    assert {root for root in expansion} == set(oc.generators)
    assert all(poly.is_constant() for poly in expansion.values())


def test_expansion_quadratic_monomials_use_only_active_variables():
    oc = orbit_context("E6a3")
    for present in ((0, 1), (0, 2), (1, 2)):
        expansion = membership_expansion(oc, present)
        for poly in expansion.values():
            assert set(poly.variables_used()) <= set(present)
