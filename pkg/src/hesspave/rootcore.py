"""Root systems with exact integer coordinates in the simple-root basis.

Roots are tuples of integers.  The Cartan matrix convention is
``A[i][j] = <alpha_j, alpha_i^vee>``, so the simple reflection s_i sends a
coordinate vector c to ``c - (A @ c)_i e_i``.  Pairings, root strings, and
lengths are all derived from the symmetrized bilinear form, never from
floating point.

Positive roots are kept in a canonical order: ascending height, then
lexicographic on the coordinate tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidRootError, InvalidTypeError, ComputationError

__all__ = ["RootSystem", "Root", "root_system"]

Root = tuple[int, ...]

_CARTAN: dict[str, tuple[tuple[int, ...], ...]] = {
    "A1": ((2,),),
    # index 0 is the short simple root, index 1 the long one
    "G2": ((2, -3), (-1, 2)),
    # Bourbaki: indices 0,1 long; 2,3 short; double bond between 1 and 2
    "F4": ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -2, 2, -1), (0, 0, -1, 2)),
    # chain a1-a2-a3-a4-a5 with a6 attached to a3
    "E6": (
        (2, -1, 0, 0, 0, 0),
        (-1, 2, -1, 0, 0, 0),
        (0, -1, 2, -1, 0, -1),
        (0, 0, -1, 2, -1, 0),
        (0, 0, 0, -1, 2, 0),
        (0, 0, -1, 0, 0, 2),
    ),
}

_SIMPLE_NAMES: dict[str, tuple[str, ...]] = {
    "A1": ("a1",),
    "G2": ("alpha", "beta"),
    "F4": ("a1", "a2", "a3", "a4"),
    "E6": ("a1", "a2", "a3", "a4", "a5", "a6"),
}

# Order in which simple-root data reads naturally for each diagram.
_DIAGRAM_ORDER: dict[str, tuple[int, ...]] = {
    "A1": (0,),
    "G2": (0, 1),
    "F4": (0, 1, 2, 3),
    "E6": (0, 5, 1, 2, 3, 4),
}


def _symmetrizer(cartan: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Positive integers d_i with d_i A_ij = d_j A_ji, normalized to min 1."""
    rank = len(cartan)
    d: list[Fraction | None] = [None] * rank
    d[0] = Fraction(1)
    pending = [0]
    while pending:
        i = pending.pop()
        for j in range(rank):
            if i != j and cartan[i][j] and d[j] is None:
                d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                pending.append(j)
    if any(v is None for v in d):
        raise ComputationError("disconnected Cartan matrix")
    scale = min(v for v in d)
    out = tuple(int(v / scale) for v in d)
    if any(Fraction(x) != v / scale for x, v in zip(out, d)):
        raise ComputationError("non-integral symmetrizer")
    return out


@dataclass(frozen=True)
class RootSystem:
    """An irreducible root system of one of the supported Cartan types."""

    cartan_type: str
    cartan: tuple[tuple[int, ...], ...]
    simple_names: tuple[str, ...]
    diagram_order: tuple[int, ...]
    d: tuple[int, ...]
    positive_roots: tuple[Root, ...]

    # -- construction --------------------------------------------------------

    @staticmethod
    def of_type(label: str) -> "RootSystem":
        return root_system(label)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        rank = self.rank
        return tuple(tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank))

    @property
    def all_roots(self) -> tuple[Root, ...]:
        return self.positive_roots + tuple(self.neg(r) for r in self.positive_roots)

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    @property
    def lowest_root(self) -> Root:
        return self.neg(self.highest_root)

    # -- predicates and arithmetic -------------------------------------------

    def is_root(self, coords: tuple[int, ...]) -> bool:
        coords = tuple(coords)
        return coords in self._root_set()

    def check_root(self, coords: tuple[int, ...]) -> Root:
        coords = tuple(coords)
        if not self.is_root(coords):
            raise InvalidRootError(f"{coords} is not a root of {self.cartan_type}")
        return coords

    @lru_cache(maxsize=None)
    def _root_set(self) -> frozenset[Root]:
        return frozenset(self.all_roots)

    @staticmethod
    def add(x: Root, y: Root) -> Root:
        return tuple(a + b for a, b in zip(x, y))

    @staticmethod
    def sub(x: Root, y: Root) -> Root:
        return tuple(a - b for a, b in zip(x, y))

    @staticmethod
    def neg(x: Root) -> Root:
        return tuple(-a for a in x)

    @staticmethod
    def height(x: Root) -> int:
        return sum(x)

    def is_positive(self, x: Root) -> bool:
        return self.height(x) > 0

    # -- bilinear data ---------------------------------------------------------

    def bilinear(self, x: Root, y: Root) -> Fraction:
        """The W-invariant symmetric form (x, y) with short roots of norm 2."""
        total = Fraction(0)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if yj:
                    total += Fraction(self.d[i] * self.cartan[i][j]) * xi * yj
        return total

    def half_norm(self, root: Root) -> int:
        """d_gamma = (gamma, gamma)/2; 1 for short roots."""
        value = self.bilinear(root, root) / 2
        if value.denominator != 1:
            raise ComputationError(f"non-integral half norm for {root}")
        return int(value)

    def length_class(self, root: Root) -> str:
        return "short" if self.half_norm(root) == min(self.d) else "long"

    def pairing(self, beta: Root, alpha: Root) -> int:
        """<beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)."""
        value = self.bilinear(beta, alpha) / self.half_norm(alpha)
        if value.denominator != 1:
            raise ComputationError(f"non-integral pairing of {beta}, {alpha}")
        return int(value)

    def root_string(self, beta: Root, alpha: Root) -> tuple[int, int]:
        """(p, q) with beta - p alpha ... beta + q alpha the alpha-string through beta."""
        beta = self.check_root(beta)
        alpha = self.check_root(alpha)
        if beta in (alpha, self.neg(alpha)):
            raise InvalidRootError("root string through +-alpha is degenerate")
        p = 0
        current = self.sub(beta, alpha)
        while self.is_root(current):
            p += 1
            current = self.sub(current, alpha)
        q = 0
        current = self.add(beta, alpha)
        while self.is_root(current):
            q += 1
            current = self.add(current, alpha)
        if p - q != self.pairing(beta, alpha):
            raise ComputationError("root string inconsistent with pairing")
        return p, q

    # -- reflections ------------------------------------------------------------

    def reflect_simple(self, root: Root, i: int) -> Root:
        """Image of a coordinate vector under the simple reflection s_i."""
        pairing = sum(self.cartan[i][j] * c for j, c in enumerate(root))
        out = list(root)
        out[i] -= pairing
        return tuple(out)

    def reflect(self, root: Root, mirror: Root) -> Root:
        """Image of root under the reflection in an arbitrary root."""
        mirror = self.check_root(mirror)
        coeff = self.pairing(root, mirror)
        return tuple(r - coeff * m for r, m in zip(root, mirror))

    # -- naming -------------------------------------------------------------------

    def root_name(self, root: Root) -> str:
        """Readable name, e.g. "2beta+3alpha" for G2 or "a1+2a3" otherwise."""
        if not any(root):
            return "0"
        order = range(self.rank) if self.cartan_type != "G2" else (1, 0)
        parts = []
        for i in order:
            c = root[i]
            if not c:
                continue
            name = self.simple_names[i]
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c}{name}")
        text = parts[0]
        for piece in parts[1:]:
            text += piece if piece.startswith("-") else "+" + piece
        return text

    # -- subsystems ------------------------------------------------------------------

    def closed_subsystem(self, generators: tuple[Root, ...]) -> tuple[Root, ...]:
        """Additive closure of the generators and their negatives inside the system."""
        roots = set()
        for g in generators:
            g = self.check_root(g)
            roots.add(g)
            roots.add(self.neg(g))
        changed = True
        while changed:
            changed = False
            for x in list(roots):
                for y in list(roots):
                    total = self.add(x, y)
                    if any(total) and self.is_root(total) and total not in roots:
                        roots.add(total)
                        changed = True
        return tuple(sorted(roots, key=lambda r: (self.height(r), r)))

    def subsystem_simples(self, subsystem: tuple[Root, ...]) -> tuple[Root, ...]:
        """Simple roots of a closed subsystem: positive roots that are not sums."""
        positives = [r for r in subsystem if self.is_positive(r)]
        pos_set = set(positives)
        simples = [
            r
            for r in positives
            if not any(self.sub(r, s) in pos_set for s in positives if s != r)
        ]
        return tuple(sorted(simples, key=lambda r: (self.height(r), r)))

    def subsystem_type(self, generators: tuple[Root, ...]) -> str:
        """Cartan type of the closure, components sorted and joined with "+"."""
        subsystem = self.closed_subsystem(generators)
        simples = self.subsystem_simples(subsystem)
        # split into connected components of the induced diagram
        remaining = set(range(len(simples)))
        components: list[list[int]] = []
        while remaining:
            seed = min(remaining)
            stack, seen = [seed], {seed}
            while stack:
                i = stack.pop()
                for j in tuple(remaining - seen):
                    if self.bilinear(simples[i], simples[j]) != 0:
                        seen.add(j)
                        stack.append(j)
            components.append(sorted(seen))
            remaining -= seen
        labels = sorted(self._component_type([simples[i] for i in comp]) for comp in components)
        return "+".join(labels)

    def _component_type(self, simples: list[Root]) -> str:
        n = len(simples)
        if n == 1:
            return "A1"
        bonds = {}
        degree = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                m = self.pairing(simples[i], simples[j]) * self.pairing(simples[j], simples[i])
                if m:
                    bonds[(i, j)] = m
                    degree[i] += 1
                    degree[j] += 1
        if len(bonds) != n - 1 or max(degree) > 2:
            raise ComputationError("subsystem diagram shape outside supported inventory")
        multiplicities = sorted(bonds.values())
        if multiplicities == [1] * (n - 1):
            return f"A{n}"
        if n == 2 and multiplicities == [3]:
            return "G2"
        if multiplicities == [1] * (n - 2) + [2]:
            (i, j) = next(pair for pair, m in bonds.items() if m == 2)
            end = i if degree[i] == 1 else j
            if degree[i] != 1 and degree[j] != 1:
                raise ComputationError("double bond not at a diagram end")
            long_end = self.half_norm(simples[end]) > min(
                self.half_norm(s) for s in simples
            )
            return (f"C{n}" if long_end else f"B{n}") if n > 2 else "B2"
        raise ComputationError("subsystem diagram shape outside supported inventory")

    # -- serialization -------------------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "cartan_type": self.cartan_type,
            "rank": self.rank,
            "cartan_matrix": [list(row) for row in self.cartan],
            "simple_names": list(self.simple_names),
            "positive_roots": [
                {
                    "coords": list(r),
                    "name": self.root_name(r),
                    "height": self.height(r),
                    "length": self.length_class(r),
                }
                for r in self.positive_roots
            ],
            "num_positive_roots": len(self.positive_roots),
            "highest_root": list(self.highest_root),
        }


def _generate_positive_roots(cartan: tuple[tuple[int, ...], ...]) -> tuple[Root, ...]:
    """All positive roots by upward closure from the simple roots."""
    rank = len(cartan)
    simples = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        fresh = []
        for r in frontier:
            for i in range(rank):
                # p - q = <r, alpha_i^vee>; r + alpha_i is a root iff q > 0
                pairing = sum(cartan[i][j] * c for j, c in enumerate(r))
                p = 0
                cur = list(r)
                cur[i] -= 1
                while tuple(cur) in roots or (sum(cur) == 0 and not any(cur)):
                    if not any(cur):
                        break
                    p += 1
                    cur[i] -= 1
                if p - pairing > 0:
                    up = list(r)
                    up[i] += 1
                    candidate = tuple(up)
                    if candidate not in roots:
                        roots.add(candidate)
                        fresh.append(candidate)
        frontier = fresh
    return tuple(sorted(roots, key=lambda r: (sum(r), r)))


@lru_cache(maxsize=None)
def root_system(label: str) -> RootSystem:
    """The root system for a supported Cartan type label."""
    key = label.strip().upper()
    if key not in _CARTAN:
        supported = ", ".join(sorted(_CARTAN))
        raise InvalidTypeError(f"unsupported Cartan type {label!r} (supported: {supported})")
    cartan = _CARTAN[key]
    return RootSystem(
        cartan_type=key,
        cartan=cartan,
        simple_names=_SIMPLE_NAMES[key],
        diagram_order=_DIAGRAM_ORDER[key],
        d=_symmetrizer(cartan),
        positive_roots=_generate_positive_roots(cartan),
    )
