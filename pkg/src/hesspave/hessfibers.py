"""Ideal fibers of nilpotent elements and their affine pavings.

An ideal here is an upper-closed set of positive roots; it spans a
B-stable subspace of the nilradical.  The fiber of a nilpotent N over
an ideal I is the locus of Borels g B whose pullback Ad(g^{-1}) N lands
in that subspace.  For the rank-two contexts the fiber decomposes over
minimal coset representatives v into affine bundles on small Levi
fibers, which a rank-at-most-one flag machine pieces together exactly.
For the two larger contexts the module classifies the Levi-orbit
quintuples: for each stable corank-small subspace of the weight-two
layer it expands the membership condition cell by cell over the product
of lines, classifies the resulting polynomial zero sets, and draws the
topological conclusion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import ComputationError, InvalidIdealError, UnsupportedZeroSetError
from .orbitctx import OrbitContext, orbit_context
from .poly import Poly, distinct_root_count, univariate_gcd
from .rootcore import Root, RootSystem, root_system
from .weylgrp import weyl_group

__all__ = [
    "Ideal",
    "enumerate_ideals",
    "ideal_by_slug",
    "ideal_slugs",
    "FiberCell",
    "FiberPaving",
    "fiber_paving",
    "ZeroSet",
    "classify_zero_set",
    "render_zero_set",
    "membership_expansion",
    "CellAnalysis",
    "Quintuple",
    "classify_quintuples",
]


# -- ideals --------------------------------------------------------------------------


class Ideal:
    """An upper-closed set of positive roots."""

    def __init__(self, rs: RootSystem, roots: tuple[Root, ...]):
        self.rs = rs
        order = {r: k for k, r in enumerate(rs.positive_roots)}
        self.roots: tuple[Root, ...] = tuple(sorted(set(roots), key=order.__getitem__))
        self._members = frozenset(self.roots)
        for r in self.roots:
            for i in range(rs.rank):
                above = rs.add(r, rs.simple_roots[i])
                if rs.is_root(above) and above not in self._members:
                    raise InvalidIdealError(
                        f"{rs.root_name(above)} is missing above {rs.root_name(r)}"
                    )
        self.minimal_roots: tuple[Root, ...] = tuple(
            r
            for r in self.roots
            if not any(
                rs.is_root(rs.sub(r, s)) and rs.sub(r, s) in self._members
                for s in (rs.simple_roots[i] for i in range(rs.rank))
            )
        )
        self.slug = self._make_slug()

    def _make_slug(self) -> str:
        if not self.roots:
            return "I_emptyset"
        parts = sorted(self.rs.root_name(r) for r in self.minimal_roots)
        return "I_" + "".join(p.replace("+", "_") for p in parts)

    def __contains__(self, root: Root) -> bool:
        return root in self._members

    def __len__(self) -> int:
        return len(self.roots)

    def __eq__(self, other) -> bool:
        return isinstance(other, Ideal) and self.rs is other.rs and self.roots == other.roots

    def __hash__(self) -> int:
        return hash((self.rs.cartan_type, self.roots))

    def __repr__(self) -> str:
        return f"Ideal({self.slug})"

    def proper_maximal_subideals(self) -> tuple["Ideal", ...]:
        """Subideals obtained by deleting one minimal root."""
        return tuple(
            Ideal(self.rs, tuple(r for r in self.roots if r != m))
            for m in self.minimal_roots
        )

    def to_dict(self) -> dict:
        return {
            "slug": self.slug,
            "size": len(self.roots),
            "roots": [self.rs.root_name(r) for r in self.roots],
            "minimal_roots": [self.rs.root_name(r) for r in self.minimal_roots],
        }


@lru_cache(maxsize=None)
def enumerate_ideals(cartan_type: str) -> tuple[Ideal, ...]:
    """All upper-closed subsets, sorted by (size, canonical root order)."""
    rs = root_system(cartan_type)
    order = {r: k for k, r in enumerate(rs.positive_roots)}
    descending = sorted(rs.positive_roots, key=lambda r: -order[r])
    partials: list[frozenset[Root]] = [frozenset()]
    for r in descending:
        above = [
            rs.add(r, rs.simple_roots[i])
            for i in range(rs.rank)
            if rs.is_root(rs.add(r, rs.simple_roots[i]))
        ]
        fresh = []
        for s in partials:
            fresh.append(s)
            if all(a in s for a in above):
                fresh.append(s | {r})
        partials = fresh
    ideals = [Ideal(rs, tuple(s)) for s in partials]
    ideals.sort(key=lambda i: (len(i.roots), tuple(order[r] for r in i.roots)))
    return tuple(ideals)


def ideal_slugs(cartan_type: str) -> tuple[str, ...]:
    return tuple(i.slug for i in enumerate_ideals(cartan_type))


def ideal_by_slug(cartan_type: str, slug: str) -> Ideal:
    for ideal in enumerate_ideals(cartan_type):
        if ideal.slug == slug:
            return ideal
    raise InvalidIdealError(
        f"unknown ideal {slug!r} for type {cartan_type}; known: "
        + ", ".join(ideal_slugs(cartan_type))
    )


# -- zero set classification -----------------------------------------------------------


@dataclass(frozen=True)
class ZeroSet:
    """Classified zero locus of a polynomial system inside an affine cell."""

    kind: str  # empty | entire | affine | points | lines | punctured_line | quadric
    dim: int
    euler: int | None
    count: int = 0

    @property
    def is_empty(self) -> bool:
        return self.kind == "empty"


def render_zero_set(zs: ZeroSet) -> str:
    if zs.kind == "empty":
        return "empty"
    if zs.kind == "entire":
        return "entire"
    if zs.kind == "affine":
        if zs.dim == 0:
            return "1 point"
        return "C" if zs.dim == 1 else f"C^{zs.dim}"
    if zs.kind == "points":
        return "1 point" if zs.count == 1 else f"{zs.count} points"
    if zs.kind == "lines":
        return "+".join(["C"] * zs.count)
    if zs.kind == "punctured_line":
        return "Cx" if zs.count == 1 else f"C minus {zs.count} points"
    if zs.kind == "quadric":
        return "smooth quadric"
    raise ValueError(f"unknown zero set kind {zs.kind}")


def _univariate_coeff_gcd(polys: list[Poly], var: int) -> list[Fraction]:
    acc: list[Fraction] = []
    for p in polys:
        coeffs = p.univariate_coeffs(var)
        acc = univariate_gcd(acc, coeffs) if acc else coeffs
    return acc


def classify_zero_set(constraints: list[Poly], active_vars: tuple[int, ...]) -> ZeroSet:
    """Classify the common zero locus inside the affine cell on the active variables."""
    polys = [p for p in constraints if not p.is_zero()]
    for p in polys:
        if not set(p.variables_used()) <= set(active_vars):
            raise ComputationError("constraint uses a variable outside the cell")
    free = set(active_vars)
    eliminated = 0
    while True:
        if any(p.is_constant() for p in polys):
            return ZeroSet("empty", 0, 0)
        if not polys:
            dim = len(free)
            if eliminated == 0:
                return ZeroSet("entire", dim, 1)
            return ZeroSet("affine", dim, 1)
        substitution = None
        for p in polys:
            for i in sorted(free):
                if p.degree_in(i) != 1:
                    continue
                lead = p.coeff_in_var(i, 1)
                if not lead.is_constant():
                    continue
                rest = p.coeff_in_var(i, 0)
                replacement = rest * (Fraction(-1) / lead.constant_value())
                substitution = (p, i, replacement)
                break
            if substitution:
                break
        if substitution is None:
            break
        victim, i, replacement = substitution
        polys = [q.substitute(i, replacement) for q in polys if q is not victim]
        polys = [q for q in polys if not q.is_zero()]
        free.discard(i)
        eliminated += 1
    used = sorted(set().union(*(p.variables_used() for p in polys)))
    if len(used) == 1:
        var = used[0]
        g = _univariate_coeff_gcd(polys, var)
        if len(g) <= 1:
            if len(g) == 1:
                return ZeroSet("empty", 0, 0)
            raise ComputationError("zero gcd for a nonzero system")
        k = distinct_root_count(g)
        spare = free - {var}
        if k == 0:
            return ZeroSet("empty", 0, 0)
        if not spare:
            return ZeroSet("points", 0, k, k)
        if len(spare) == 1:
            return ZeroSet("lines", 1, k, k)
        raise UnsupportedZeroSetError(
            f"points times a {len(spare)}-dimensional factor is outside the inventory"
        )
    if len(polys) == 1 and len(used) == 2:
        p = polys[0]
        if free != set(used):
            raise UnsupportedZeroSetError("two-variable locus with extra free variables")
        for main, other in ((used[0], used[1]), (used[1], used[0])):
            if p.degree_in(other) != 1:
                continue
            lead = p.coeff_in_var(other, 1)
            rest = p.coeff_in_var(other, 0)
            common = univariate_gcd(lead.univariate_coeffs(main), rest.univariate_coeffs(main))
            if len(common) > 1:
                raise UnsupportedZeroSetError(
                    "leading and constant coefficients share a root"
                )
            punctures = distinct_root_count(lead.univariate_coeffs(main))
            return ZeroSet("punctured_line", 1, 1 - punctures, punctures)
        raise UnsupportedZeroSetError("two-variable locus of higher bidegree")
    if len(polys) == 1 and len(used) == 3:
        p = polys[0]
        if free == set(used) and p.total_degree() == 2:
            pairs = {}
            constant = Fraction(0)
            ok = True
            for expo, coeff in p.terms.items():
                support = tuple(k for k, e in enumerate(expo) if e)
                if not support:
                    constant = coeff
                elif len(support) == 2 and all(expo[k] == 1 for k in support):
                    pairs[support] = coeff
                else:
                    ok = False
            if ok and constant and len(pairs) == 3:
                product = Fraction(1)
                for coeff in pairs.values():
                    product *= coeff
                if product:
                    return ZeroSet("quadric", 2, None)
                raise UnsupportedZeroSetError("singular quadric")
    rendered = "; ".join(p.format() for p in polys)
    raise UnsupportedZeroSetError(f"system outside the inventory: {rendered}")


# -- rank-two fibers (cells over coset representatives) -----------------------------------


@dataclass(frozen=True)
class FiberCell:
    v_name: str
    cell: str
    dim: int


@dataclass(frozen=True)
class FiberPaving:
    orbit_slug: str
    ideal_slug: str
    cells: tuple[FiberCell, ...]

    @property
    def is_empty(self) -> bool:
        return not self.cells

    def betti(self) -> tuple[int, ...]:
        if not self.cells:
            return ()
        top = max(c.dim for c in self.cells)
        counts = [0] * (top + 1)
        for c in self.cells:
            counts[c.dim] += 1
        return tuple(counts)

    def components(self) -> int:
        return sum(1 for c in self.cells if c.dim == 0)

    def dimension(self) -> int:
        if not self.cells:
            return -1
        return max(c.dim for c in self.cells)

    def to_dict(self) -> dict:
        return {
            "orbit": self.orbit_slug,
            "ideal": self.ideal_slug,
            "cells": [
                {"v": c.v_name, "cell": c.cell, "dim": c.dim} for c in self.cells
            ],
            "betti": list(self.betti()),
            "components": self.components() if self.cells else 0,
        }


def _levi_fiber_cells(orbit: OrbitContext, cap: frozenset[Root]) -> list[tuple[str, int]]:
    """Cells of the small-flag fiber cut out by the allowed weight-two roots."""
    cb = orbit.cb
    rs = orbit.rs
    cells: list[tuple[str, int]] = []
    if all(g in cap for g in orbit.generators):
        cells.append(("e", 0))
    if not orbit.levi_simples:
        return cells
    if len(orbit.levi_simples) > 1:
        raise ComputationError(
            f"orbit {orbit.slug}: fiber pavings cover Levi rank at most one"
        )
    i0 = orbit.levi_simples[0]
    z = Poly.var(1, 0)
    y = {("e", g): Poly.const(1, 1) for g in orbit.generators}
    y = cb.flow_apply(rs.simple_roots[i0], -z, y)
    y = cb.simple_lift_inverse_apply_poly(i0, y)
    constraints = []
    for (kind, gamma), poly in y.items():
        if kind != "e" or gamma not in orbit.g2_roots:
            raise ComputationError("flow left the weight-two layer")
        if gamma not in cap:
            constraints.append(poly)
    zs = classify_zero_set(constraints, (0,))
    if zs.kind in ("entire", "affine") and zs.dim == 1:
        cells.append(("s", 1))
    elif zs.kind == "points":
        cells.extend((f"s[{j + 1}]", 0) for j in range(zs.count))
    elif not zs.is_empty:
        raise ComputationError(f"unexpected big-cell locus of kind {zs.kind}")
    return cells


def fiber_paving(orbit: OrbitContext | str, ideal: Ideal | str) -> FiberPaving:
    """Affine paving of the fiber of the orbit's nilpotent over the ideal."""
    if isinstance(orbit, str):
        orbit = orbit_context(orbit)
    if isinstance(ideal, str):
        ideal = ideal_by_slug(orbit.cartan_type, ideal)
    if ideal.rs is not orbit.rs:
        raise InvalidIdealError("ideal and orbit live in different root systems")
    W = weyl_group(orbit.cartan_type)
    cells: list[FiberCell] = []
    if not orbit.generators:
        for w in W.elements():
            cells.append(FiberCell(W.word_name(w), "e", W.length(w)))
        return FiberPaving(orbit.slug, ideal.slug, tuple(cells))
    for v in W.min_coset_reps(orbit.levi_simples):
        vinv = W.inverse(v)
        g2_cap = frozenset(
            g for g in orbit.g2_roots if W.act_on_root(vinv, g) in ideal
        )
        local = _levi_fiber_cells(orbit, g2_cap)
        if not local:
            continue
        up_cap = sum(
            1 for g in orbit.u_p_ge2 if W.act_on_root(vinv, g) in ideal
        )
        shift = (
            len(W.inversions(v))
            - (len(orbit.u_p_ge2) - up_cap)
            + (len(orbit.g2_roots) - len(g2_cap))
        )
        if shift < 0:
            raise ComputationError(
                f"negative affine-bundle rank at v={W.word_name(v)}"
            )
        v_name = W.word_name(v)
        for label, dim in local:
            cells.append(FiberCell(v_name, label, dim + shift))
    return FiberPaving(orbit.slug, ideal.slug, tuple(cells))


# -- quintuple classification for the larger contexts --------------------------------------


@dataclass(frozen=True)
class CellAnalysis:
    pattern: str
    present: tuple[int, ...]
    constraints: tuple[tuple[str, str], ...]  # (root name, rendered polynomial)
    zero_set: ZeroSet

    def to_dict(self) -> dict:
        return {
            "pattern": self.pattern,
            "constraints": {name: poly for name, poly in self.constraints},
            "locus": render_zero_set(self.zero_set),
            "dim": None if self.zero_set.is_empty else self.zero_set.dim,
            "euler": self.zero_set.euler,
        }


@dataclass(frozen=True)
class Quintuple:
    orbit_slug: str
    removed: tuple[Root, ...]
    removed_names: tuple[str, ...]
    cells: tuple[CellAnalysis, ...]
    conclusion: str
    group: int

    @property
    def codim(self) -> int:
        return len(self.removed)

    def to_dict(self) -> dict:
        return {
            "orbit": self.orbit_slug,
            "removed": list(self.removed_names),
            "codim": self.codim,
            "group": self.group,
            "cells": [c.to_dict() for c in self.cells],
            "conclusion": self.conclusion,
        }


def membership_expansion(
    orbit: OrbitContext, present: tuple[int, ...]
) -> dict[Root, Poly]:
    """Pullback of N along the cell indexed by the present Levi factors.

    Factor positions map to one variable each; omitted factors keep the
    coset at its torus-fixed point, so their variables do not occur.
    """
    cb = orbit.cb
    rs = orbit.rs
    nvars = len(orbit.levi_simples)
    y = {("e", g): Poly.const(nvars, 1) for g in orbit.generators}
    for pos, i in enumerate(orbit.levi_simples):
        if pos not in present:
            continue
        z = Poly.var(nvars, pos)
        y = cb.flow_apply(rs.simple_roots[i], -z, y)
        y = cb.simple_lift_inverse_apply_poly(i, y)
    out: dict[Root, Poly] = {}
    for (kind, gamma), poly in y.items():
        if kind != "e" or gamma not in orbit.g2_roots:
            raise ComputationError("membership expansion left the weight-two layer")
        out[gamma] = poly
    return out


_MAX_CODIM = {"F4a2": 1, "E6a3": 2}


def _cell_patterns(nfactors: int) -> list[tuple[str, tuple[int, ...]]]:
    patterns = []
    for mask in range(2**nfactors):
        present = tuple(k for k in range(nfactors) if not mask & (1 << k))
        pattern = "".join("I" if mask & (1 << k) else "C" for k in range(nfactors))
        patterns.append((pattern, present))
    patterns.sort(key=lambda item: (nfactors - len(item[1]), item[0]))
    return patterns


def _conclude(cells: tuple[CellAnalysis, ...], nfactors: int) -> str:
    live = [c for c in cells if not c.zero_set.is_empty]
    if not live:
        return "empty"
    if all(c.zero_set.kind == "entire" for c in live):
        frees = {c.present for c in live}
        top = max(live, key=lambda c: len(c.present)).present
        expected = set()
        for size in range(len(top) + 1):
            expected.update(combinations(top, size))
        if frees == expected:
            if not top:
                return "1 point"
            return " x ".join(["P1"] * len(top))
    top_dim = max(c.zero_set.dim for c in live)
    if top_dim == 2:
        if any(c.zero_set.kind == "quadric" for c in live):
            return "rational surface"
        raise ComputationError("two-dimensional locus without a quadric top cell")
    if top_dim == 1:
        euler = sum(c.zero_set.euler for c in live)
        if euler % 2 or euler <= 0:
            raise ComputationError(f"curve with unexpected Euler number {euler}")
        copies = euler // 2
        return " + ".join(["P1"] * copies)
    total = sum(c.zero_set.count or 1 for c in live)
    return "1 point" if total == 1 else f"{total} points"


def _group_signature(record_cells: tuple[CellAnalysis, ...]) -> tuple:
    by_level: dict[int, list[tuple]] = {}
    for c in record_cells:
        level = len(c.present)
        zs = c.zero_set
        by_level.setdefault(level, []).append((zs.kind, zs.dim, zs.count))
    return tuple(
        (level, tuple(sorted(entries))) for level, entries in sorted(by_level.items())
    )


@lru_cache(maxsize=None)
def classify_quintuples(orbit_slug: str) -> tuple[Quintuple, ...]:
    """Classify the fibers over all stable subspaces of small corank."""
    orbit = orbit_context(orbit_slug)
    if orbit_slug not in _MAX_CODIM:
        raise ComputationError(
            f"quintuple classification covers {', '.join(_MAX_CODIM)}; "
            f"use fiber pavings for {orbit_slug}"
        )
    rs = orbit.rs
    nfactors = len(orbit.levi_simples)
    patterns = _cell_patterns(nfactors)
    expansions = {
        present: membership_expansion(orbit, present) for _, present in patterns
    }
    records: list[tuple[tuple[Root, ...], tuple[CellAnalysis, ...], str]] = []
    for removed in orbit.down_closed_layer_subsets(_MAX_CODIM[orbit_slug]):
        removed_set = frozenset(removed)
        cells = []
        for pattern, present in patterns:
            expansion = expansions[present]
            constraints = [
                (rs.root_name(g), expansion.get(g, Poly.zero(nfactors)))
                for g in removed
            ]
            zs = classify_zero_set([p for _, p in constraints], present)
            rendered = tuple(
                (name, p.format(orbit.cell_var_names)) for name, p in constraints
            )
            cells.append(CellAnalysis(pattern, present, rendered, zs))
        cells = tuple(cells)
        records.append((removed, cells, _conclude(cells, nfactors)))
    signatures: list[tuple] = []
    group_of: list[int] = []
    for removed, cells, _ in records:
        sig = _group_signature(cells)
        if sig not in signatures:
            signatures.append(sig)
        group_of.append(signatures.index(sig) + 1)
    out = []
    for (removed, cells, conclusion), group in zip(records, group_of):
        out.append(
            Quintuple(
                orbit_slug,
                removed,
                tuple(rs.root_name(g) for g in removed),
                cells,
                conclusion,
                group,
            )
        )
    return tuple(out)
