"""Contexts for the nilpotent orbits the library analyzes.

Each context packages a named nilpotent element N given by a tuple of
root-vector generators, the semisimple element H of a verified sl2
triple through N, the induced integer grading of the Lie algebra, the
weighted diagram, the parabolic data (Levi roots, the weight-two layer,
the depth-two part of the nilradical), and the closed subsystem the
generators span.  Everything except the generator lists and component
group names is computed from the Chevalley basis at construction time
and cross-checked, so a bad registry entry fails loudly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .chevalley import ChevalleyBasis, LieElement, Sl2Triple, chevalley_basis, regular_nilpotent_sl2
from .errors import ComputationError, UnknownOrbitError
from .rootcore import Root, RootSystem

__all__ = ["OrbitContext", "orbit_context", "orbit_slugs", "orbits_for_type"]

# slug -> (cartan type, generator roots in the order N is printed, component group)
_REGISTRY: dict[str, tuple[str, tuple[Root, ...], str | None]] = {
    "zero": ("G2", (), "1"),
    "A1": ("G2", ((3, 2),), "1"),
    "A1t": ("G2", ((2, 1),), "1"),
    "G2a1": ("G2", ((1, 1), (3, 1)), "S3"),
    "G2": ("G2", ((1, 0), (0, 1)), "1"),
    "F4a2": ("F4", ((1, 1, 2, 0), (1, 1, 0, 0), (0, 0, 1, 1), (0, 1, 1, 0)), None),
    "E6a3": (
        "E6",
        (
            (0, 1, 1, 0, 0, 0),
            (0, 0, 0, 1, 1, 0),
            (0, 0, 1, 0, 0, 1),
            (1, 1, 0, 0, 0, 0),
            (0, 0, 1, 1, 0, 0),
            (0, 1, 1, 1, 0, 1),
        ),
        None,
    ),
}

# cell machine variable names, keyed by slug (F4a2 names follow the simple index)
_CELL_VARS: dict[str, tuple[str, ...]] = {
    "F4a2": ("z1", "z3"),
    "E6a3": ("z1", "z2", "z3"),
}


class OrbitContext:
    """One nilpotent orbit with its grading and parabolic data."""

    def __init__(self, slug: str):
        try:
            cartan_type, generators, component_group = _REGISTRY[slug]
        except KeyError as exc:
            raise UnknownOrbitError(
                f"unknown orbit {slug!r}; known: {', '.join(sorted(_REGISTRY))}"
            ) from exc
        self.slug = slug
        self.cartan_type = cartan_type
        self.generators: tuple[Root, ...] = generators
        self.component_group = component_group
        self.cb: ChevalleyBasis = chevalley_basis(cartan_type)
        self.rs: RootSystem = self.cb.rs
        rs = self.rs
        if generators:
            self.triple: Sl2Triple | None = regular_nilpotent_sl2(self.cb, generators)
            h = self.triple.h
        else:
            self.triple = None
            h = {}
        self._h: LieElement = h
        self.diagram: tuple[int, ...] = tuple(
            self._weight_of_root(r) for r in rs.simple_roots
        )
        if any(w not in (0, 1, 2) for w in self.diagram):
            raise ComputationError(f"orbit {slug}: diagram weights {self.diagram} out of range")
        self.diagram_display: tuple[int, ...] = tuple(
            self.diagram[i] for i in rs.diagram_order
        )
        self.levi_simples: tuple[int, ...] = tuple(
            i for i, w in enumerate(self.diagram) if w == 0
        )
        weights = {r: self.weight(r) for r in rs.positive_roots}
        self.levi_positive: tuple[Root, ...] = tuple(
            r for r in rs.positive_roots if weights[r] == 0
        )
        self.g2_roots: tuple[Root, ...] = tuple(
            r for r in rs.positive_roots if weights[r] == 2
        )
        self.u_p_ge2: tuple[Root, ...] = tuple(
            r for r in rs.positive_roots if weights[r] >= 2
        )
        ones = sum(1 for r in rs.positive_roots if weights[r] == 1)
        dim_g = rs.rank + 2 * len(rs.positive_roots)
        dim_g0 = rs.rank + 2 * len(self.levi_positive)
        self.orbit_dim: int = dim_g - dim_g0 - ones
        for g in generators:
            if weights[g] != 2:
                raise ComputationError(f"orbit {slug}: generator {g} not in the weight-2 layer")
        if generators:
            system = rs.closed_subsystem(generators)
            self.pseudo_levi_type: str | None = rs.subsystem_type(system)
        else:
            self.pseudo_levi_type = None
        self.cell_var_names: tuple[str, ...] = _CELL_VARS.get(
            slug, tuple(f"z{i + 1}" for i in range(len(self.levi_simples)))
        )

    # -- grading ----------------------------------------------------------------

    def _weight_of_root(self, root: Root) -> int:
        """Eigenvalue of ad(H) on the root vector, computed by one bracket."""
        if not self._h:
            return 0
        image = self.cb.bracket(self._h, self.cb.e(root))
        if not image:
            return 0
        value = image[("e", root)]
        if value.denominator != 1:
            raise ComputationError(f"non-integral weight on {root}")
        return int(value)

    def weight(self, root: Root) -> int:
        """Grading weight of any root, linear in the simple-root weights."""
        return sum(c * w for c, w in zip(root, self.diagram))

    # -- elements ---------------------------------------------------------------

    def nilpotent(self) -> LieElement:
        """N as a Lie algebra element (sum of generator root vectors)."""
        return {("e", g): Fraction(1) for g in self.generators}

    def semisimple(self) -> LieElement:
        return dict(self._h)

    # -- weight-two layer poset ---------------------------------------------------

    def layer_lower_covers(self, root: Root) -> tuple[Root, ...]:
        """Roots directly below inside the weight-2 layer (subtract a Levi simple)."""
        rs = self.rs
        layer = set(self.g2_roots)
        out = []
        for j in self.levi_simples:
            below = rs.sub(root, rs.simple_roots[j])
            if below in layer:
                out.append(below)
        return tuple(out)

    def layer_minimal_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.g2_roots if not self.layer_lower_covers(r))

    def down_closed_layer_subsets(self, max_size: int) -> tuple[tuple[Root, ...], ...]:
        """Down-closed subsets of the weight-2 layer with 1..max_size elements."""
        from itertools import combinations

        order = {r: k for k, r in enumerate(self.g2_roots)}
        out = []
        for size in range(1, max_size + 1):
            for combo in combinations(self.g2_roots, size):
                chosen = set(combo)
                if all(
                    below in chosen
                    for r in combo
                    for below in self.layer_lower_covers(r)
                ):
                    out.append(tuple(sorted(chosen, key=order.__getitem__)))
        return tuple(out)

    # -- serialization -----------------------------------------------------------

    def to_dict(self) -> dict:
        rs = self.rs
        data = {
            "slug": self.slug,
            "cartan_type": self.cartan_type,
            "dimension": self.orbit_dim,
            "weighted_diagram": list(self.diagram_display),
            "generators": [rs.root_name(g) for g in self.generators],
            "pseudo_levi": self.pseudo_levi_type,
            "component_group": self.component_group,
            "levi_simples": [rs.simple_names[i] for i in self.levi_simples],
            "weight_two_roots": [rs.root_name(r) for r in self.g2_roots],
            "nilradical_depth_two": [rs.root_name(r) for r in self.u_p_ge2],
        }
        return data


@lru_cache(maxsize=None)
def orbit_context(slug: str) -> OrbitContext:
    return OrbitContext(slug)


def orbit_slugs() -> tuple[str, ...]:
    return tuple(_REGISTRY)


def orbits_for_type(cartan_type: str) -> tuple[str, ...]:
    return tuple(slug for slug, entry in _REGISTRY.items() if entry[0] == cartan_type)
