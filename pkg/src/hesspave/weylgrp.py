"""Weyl groups acting on exact root coordinates.

Group elements are signed permutations of the positive roots stored as
tuples: entry k holds ``+-(j+1)`` when the element sends the k-th positive
root to plus or minus the j-th one.  Composition is functional, so the
word "st" acts by t first; appending a letter to a word multiplies on the
right.  Lengths, inversion sets, reduced words, coset representatives,
and Bruhat order are all derived from the signed permutations.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InvalidWordError, ComputationError
from .rootcore import Root, RootSystem

__all__ = ["WeylGroup", "weyl_group"]

Element = tuple[int, ...]


class WeylGroup:
    """The Weyl group of a root system, enumerated on demand."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.positive = rs.positive_roots
        self._index = {r: k for k, r in enumerate(self.positive)}
        n = len(self.positive)
        self.identity: Element = tuple(range(1, n + 1))
        self._simple: tuple[Element, ...] = tuple(
            self._perm_from_action(lambda r, i=i: rs.reflect_simple(r, i))
            for i in range(rs.rank)
        )
        self._elements: tuple[Element, ...] | None = None
        self._word_cache: dict[Element, tuple[int, ...]] = {self.identity: ()}
        self._bruhat_cache: dict[tuple[Element, Element], bool] = {}

    # -- raw permutation plumbing ---------------------------------------------

    def _perm_from_action(self, action) -> Element:
        out = []
        for r in self.positive:
            image = action(r)
            if sum(image) > 0:
                out.append(self._index[image] + 1)
            else:
                out.append(-(self._index[self.rs.neg(image)] + 1))
        return tuple(out)

    def simple_reflection(self, i: int) -> Element:
        if not 0 <= i < self.rs.rank:
            raise InvalidWordError(f"simple reflection index {i} out of range")
        return self._simple[i]

    def multiply(self, u: Element, w: Element) -> Element:
        """Composition u after w."""
        out = []
        for value in w:
            if value > 0:
                out.append(u[value - 1])
            else:
                out.append(-u[-value - 1])
        return tuple(out)

    def inverse(self, w: Element) -> Element:
        out = [0] * len(w)
        for k, value in enumerate(w):
            if value > 0:
                out[value - 1] = k + 1
            else:
                out[-value - 1] = -(k + 1)
        return tuple(out)

    def act_on_root(self, w: Element, root: Root) -> Root:
        """Image of any root (positive or negative) under the element."""
        if sum(root) > 0:
            value = w[self._index[root]]
            sign = 1
        else:
            value = w[self._index[self.rs.neg(root)]]
            sign = -1
        image = self.positive[abs(value) - 1]
        return image if sign * value > 0 else self.rs.neg(image)

    # -- words ------------------------------------------------------------------

    def from_word(self, word: tuple[int, ...]) -> Element:
        out = self.identity
        for i in word:
            out = self.multiply(out, self.simple_reflection(i))
        return out

    def length(self, w: Element) -> int:
        return sum(1 for value in w if value < 0)

    def reduced_word(self, w: Element) -> tuple[int, ...]:
        """Lexicographically smallest reduced word (greedy smallest left descent)."""
        cached = self._word_cache.get(w)
        if cached is not None:
            return cached
        current = w
        stack = []
        while current not in self._word_cache:
            inv = self.inverse(current)
            descent = next(
                i for i in range(self.rs.rank) if self.act_left_descent(inv, i)
            )
            stack.append((current, descent))
            current = self.multiply(self.simple_reflection(descent), current)
        tail = self._word_cache[current]
        for elem, descent in reversed(stack):
            tail = (descent,) + tail
            self._word_cache[elem] = tail
        return self._word_cache[w]

    def act_left_descent(self, inv: Element, i: int) -> bool:
        """Whether s_i shortens from the left, given the inverse permutation."""
        simple_index = self._index[self.rs.simple_roots[i]]
        return inv[simple_index] < 0

    def word_name(self, w: Element, letters: tuple[str, ...] | None = None) -> str:
        """Readable name from the canonical reduced word ("e" for identity)."""
        word = self.reduced_word(w)
        if not word:
            return "e"
        if letters is None:
            letters = (
                ("s", "t")
                if self.rs.cartan_type == "G2"
                else tuple(f"s{i + 1}" for i in range(self.rs.rank))
            )
        return "".join(letters[i] for i in word)

    def element_named(self, name: str) -> Element:
        """Inverse of word_name for the same letter conventions."""
        if name == "e":
            return self.identity
        if self.rs.cartan_type == "G2":
            mapping = {"s": 0, "t": 1}
            try:
                word = tuple(mapping[ch] for ch in name)
            except KeyError as exc:
                raise InvalidWordError(f"unknown letter in word {name!r}") from exc
        else:
            import re

            pieces = re.findall(r"s(\d+)", name)
            if "".join(f"s{p}" for p in pieces) != name:
                raise InvalidWordError(f"cannot parse word {name!r}")
            word = tuple(int(p) - 1 for p in pieces)
            if any(not 0 <= i < self.rs.rank for i in word):
                raise InvalidWordError(f"letter out of range in {name!r}")
        return self.from_word(word)

    # -- enumeration ----------------------------------------------------------------

    def elements(self) -> tuple[Element, ...]:
        """All elements, sorted by (length, reduced word)."""
        if self._elements is None:
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                fresh = []
                for w in frontier:
                    for s in self._simple:
                        nxt = self.multiply(w, s)
                        if nxt not in seen:
                            seen.add(nxt)
                            fresh.append(nxt)
                frontier = fresh
            self._elements = tuple(
                sorted(seen, key=lambda w: (self.length(w), self.reduced_word(w)))
            )
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements())

    def longest_element(self) -> Element:
        return max(self.elements(), key=self.length)

    def length_histogram(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for w in self.elements():
            counts[self.length(w)] = counts.get(self.length(w), 0) + 1
        return dict(sorted(counts.items()))

    # -- inversion sets ---------------------------------------------------------------

    def inversions(self, w: Element) -> tuple[Root, ...]:
        """Roots gamma > 0 with w^{-1}(gamma) < 0, in canonical order."""
        inv = self.inverse(w)
        return tuple(r for k, r in enumerate(self.positive) if inv[k] < 0)

    # -- parabolic structure -------------------------------------------------------------

    def parabolic_elements(self, levi: tuple[int, ...]) -> tuple[Element, ...]:
        """The standard parabolic subgroup generated by the given simple indices."""
        gens = [self.simple_reflection(i) for i in levi]
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            fresh = []
            for w in frontier:
                for s in gens:
                    nxt = self.multiply(w, s)
                    if nxt not in seen:
                        seen.add(nxt)
                        fresh.append(nxt)
            frontier = fresh
        return tuple(sorted(seen, key=lambda w: (self.length(w), self.reduced_word(w))))

    def min_coset_reps(self, levi: tuple[int, ...]) -> tuple[Element, ...]:
        """Minimal representatives v of W_J y: v^{-1}(alpha_j) > 0 for all j in J."""
        simple_idx = [self._index[self.rs.simple_roots[j]] for j in levi]
        out = []
        for w in self.elements():
            inv = self.inverse(w)
            if all(inv[k] > 0 for k in simple_idx):
                out.append(w)
        return tuple(out)

    def parabolic_decompose(
        self, w: Element, levi: tuple[int, ...]
    ) -> tuple[Element, Element]:
        """Unique (y, v) with w = y v, y in W_J, v a minimal coset representative."""
        y = self.identity
        v = w
        while True:
            inv = self.inverse(v)
            descent = next(
                (j for j in levi if self.act_left_descent(inv, j)), None
            )
            if descent is None:
                return y, v
            s = self.simple_reflection(descent)
            y = self.multiply(y, s)
            v = self.multiply(s, v)

    # -- Bruhat order ----------------------------------------------------------------------

    def bruhat_leq(self, u: Element, w: Element) -> bool:
        if u == self.identity:
            return True
        if self.length(u) > self.length(w):
            return False
        if u == w:
            return True
        key = (u, w)
        cached = self._bruhat_cache.get(key)
        if cached is not None:
            return cached
        descent = next(
            (i for i in range(self.rs.rank) if w[self._index[self.rs.simple_roots[i]]] < 0),
            None,
        )
        if descent is None:
            raise ComputationError("non-identity element without a right descent")
        s = self.simple_reflection(descent)
        ws = self.multiply(w, s)
        if u[self._index[self.rs.simple_roots[descent]]] < 0:
            result = self.bruhat_leq(self.multiply(u, s), ws)
        else:
            result = self.bruhat_leq(u, ws)
        self._bruhat_cache[key] = result
        return result

    # -- conjugacy ----------------------------------------------------------------------------

    def conjugacy_classes(self) -> tuple[tuple[Element, ...], ...]:
        """Conjugacy classes, each sorted, ordered by (class size, minimal element)."""
        everyone = self.elements()
        remaining = set(everyone)
        classes = []
        for w in everyone:
            if w not in remaining:
                continue
            orbit = {self.multiply(self.multiply(g, w), self.inverse(g)) for g in everyone}
            classes.append(tuple(sorted(orbit, key=lambda x: (self.length(x), self.reduced_word(x)))))
            remaining -= orbit
        classes.sort(key=lambda c: (self.length(c[0]), self.reduced_word(c[0])))
        return tuple(classes)


@lru_cache(maxsize=None)
def weyl_group(cartan_type: str) -> WeylGroup:
    from .rootcore import root_system

    return WeylGroup(root_system(cartan_type))
