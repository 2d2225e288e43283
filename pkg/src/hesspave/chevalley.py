"""Chevalley bases with exact integer structure constants.

Basis labels are ("h", i) for the simple coroot generators and
("e", root) for root vectors.  Lie algebra elements are dictionaries
from labels to Fractions; symbolic elements use Poly coefficients so
unipotent flows x_gamma(z) stay exact in the flow variables.

Structure constants for pairs of positive roots are built by induction
on the height of the sum: the pair whose first member is smallest in
the canonical root order gets the positive sign, and every other pair
summing to the same root is forced from smaller cases through the
standard rotation and antisymmetry identities.  Mixed-sign pairs reduce
to the positive table the same way.  The tests certify the outcome by
sweeping the Jacobi identity over raw basis triples.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import ComputationError
from .poly import Poly, as_fraction, solve_linear
from .rootcore import Root, RootSystem, root_system

__all__ = [
    "Label",
    "LieElement",
    "PolyLieElement",
    "ChevalleyBasis",
    "chevalley_basis",
    "Sl2Triple",
    "regular_nilpotent_sl2",
]

Label = tuple[str, object]
LieElement = dict[Label, Fraction]
PolyLieElement = dict[Label, Poly]

_MAX_EXP_STEPS = 64


class ChevalleyBasis:
    """Structure constants and exact flows for one root system."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self._order = {r: k for k, r in enumerate(rs.positive_roots)}
        self._table: dict[tuple[Root, Root], Fraction] = {}
        self._build_positive_table()

    # -- construction -----------------------------------------------------------

    def _build_positive_table(self) -> None:
        rs = self.rs
        for rho in rs.positive_roots:
            if rs.height(rho) == 1:
                continue
            pairs = []
            for g in rs.positive_roots:
                if self._order[g] >= self._order[rho]:
                    break
                d = rs.sub(rho, g)
                if rs.is_root(d) and rs.is_positive(d) and self._order[g] < self._order[d]:
                    pairs.append((g, d))
            pairs.sort(key=lambda gd: self._order[gd[0]])
            alpha, beta = pairs[0]
            p, _ = rs.root_string(beta, alpha)
            self._set(alpha, beta, Fraction(p + 1))
            for g, d in pairs[1:]:
                self._set(g, d, self._special_pair(rho, alpha, beta, g, d))

    def _set(self, g: Root, d: Root, value: Fraction) -> None:
        if value.denominator != 1:
            raise ComputationError(f"non-integral structure constant for {g} + {d}")
        self._table[(g, d)] = value
        self._table[(d, g)] = -value

    def _special_pair(self, rho: Root, alpha: Root, beta: Root, g: Root, d: Root) -> Fraction:
        rs = self.rs
        total = Fraction(0)
        d_prime = rs.sub(d, alpha)
        if rs.is_root(d_prime):
            total += (
                Fraction(rs.half_norm(d_prime), rs.half_norm(d))
                * self._npos(alpha, d_prime)
                * self._npos(g, d_prime)
            )
        g_prime = rs.sub(g, alpha)
        if rs.is_root(g_prime):
            total -= (
                Fraction(rs.half_norm(g_prime), rs.half_norm(g))
                * self._npos(alpha, g_prime)
                * self._npos(d, g_prime)
            )
        return total * rs.half_norm(rho) / (rs.half_norm(beta) * self._table[(alpha, beta)])

    def _npos(self, g: Root, d: Root) -> Fraction:
        """Table lookup for positive g, d; zero when the sum is not a root."""
        return self._table.get((g, d), Fraction(0))

    # -- structure constants and brackets --------------------------------------------

    def structure_constant(self, g: Root, d: Root) -> Fraction:
        """N with [E_g, E_d] = N E_{g+d}, for roots with g + d a root."""
        rs = self.rs
        s = rs.add(g, d)
        if not any(s):
            raise ValueError("opposite roots bracket to a coroot, not a root vector")
        if not rs.is_root(s):
            return Fraction(0)
        g_pos, d_pos = rs.is_positive(g), rs.is_positive(d)
        if g_pos and d_pos:
            return self._npos(g, d)
        if not g_pos and not d_pos:
            return -self._npos(rs.neg(g), rs.neg(d))
        if not g_pos:
            return -self.structure_constant(d, g)
        if rs.is_positive(s):
            return (
                Fraction(rs.half_norm(s), rs.half_norm(g))
                * -self._npos(rs.neg(d), s)
            )
        return Fraction(rs.half_norm(s), rs.half_norm(d)) * self._npos(rs.neg(s), g)

    def coroot_element(self, gamma: Root) -> LieElement:
        """H_gamma as an integer combination of the simple coroot labels."""
        rs = self.rs
        dg = rs.half_norm(gamma)
        out: LieElement = {}
        for i, c in enumerate(gamma):
            if c:
                out[("h", i)] = Fraction(c * rs.d[i], dg)
        return out

    def e(self, gamma: Root, coeff: Fraction | int = 1) -> LieElement:
        self.rs.check_root(gamma)
        value = as_fraction(coeff)
        return {("e", gamma): value} if value else {}

    def h(self, i: int, coeff: Fraction | int = 1) -> LieElement:
        value = as_fraction(coeff)
        return {("h", i): value} if value else {}

    def basis_labels(self) -> tuple[Label, ...]:
        rs = self.rs
        labels: list[Label] = [("h", i) for i in range(rs.rank)]
        labels.extend(("e", r) for r in rs.positive_roots)
        labels.extend(("e", rs.neg(r)) for r in rs.positive_roots)
        return tuple(labels)

    def bracket_labels(self, a: Label, b: Label) -> LieElement:
        rs = self.rs
        kind_a, data_a = a
        kind_b, data_b = b
        if kind_a == "h" and kind_b == "h":
            return {}
        if kind_a == "h":
            weight = rs.pairing(data_b, rs.simple_roots[data_a])
            return {b: Fraction(weight)} if weight else {}
        if kind_b == "h":
            weight = rs.pairing(data_a, rs.simple_roots[data_b])
            return {a: Fraction(-weight)} if weight else {}
        s = rs.add(data_a, data_b)
        if not any(s):
            return self.coroot_element(data_a)
        if not rs.is_root(s):
            return {}
        n = self.structure_constant(data_a, data_b)
        return {("e", s): n} if n else {}

    def bracket(self, x: LieElement, y: LieElement) -> LieElement:
        out: LieElement = {}
        for la, ca in x.items():
            for lb, cb in y.items():
                for label, value in self.bracket_labels(la, lb).items():
                    acc = out.get(label, Fraction(0)) + ca * cb * value
                    if acc:
                        out[label] = acc
                    else:
                        out.pop(label, None)
        return out

    # -- exponentials and lifted reflections -------------------------------------------

    def exp_ad(self, x: LieElement, y: LieElement) -> LieElement:
        """exp(ad x) applied to y, exact; x must act nilpotently."""
        result = dict(y)
        term = dict(y)
        step = 0
        while term:
            step += 1
            if step > _MAX_EXP_STEPS:
                raise ComputationError("exp(ad) did not terminate; argument is not nilpotent")
            term = self.bracket(x, term)
            term = {label: value / step for label, value in term.items()}
            for label, value in term.items():
                acc = result.get(label, Fraction(0)) + value
                if acc:
                    result[label] = acc
                else:
                    result.pop(label, None)
        return result

    def simple_lift_apply(self, i: int, y: LieElement) -> LieElement:
        """Adjoint action of the standard lift of the i-th simple reflection."""
        root = self.rs.simple_roots[i]
        e_plus = self.e(root)
        e_minus = self.e(self.rs.neg(root), -1)
        return self.exp_ad(e_plus, self.exp_ad(e_minus, self.exp_ad(e_plus, y)))

    def word_lift_apply(self, word: tuple[int, ...], y: LieElement) -> LieElement:
        """Adjoint action of the lift of a word, rightmost letter acting first."""
        for i in reversed(word):
            y = self.simple_lift_apply(i, y)
        return y

    # -- symbolic (polynomial coefficient) variants ----------------------------------------

    def bracket_poly(self, x: PolyLieElement, y: PolyLieElement) -> PolyLieElement:
        out: PolyLieElement = {}
        for la, pa in x.items():
            for lb, pb in y.items():
                product = pa * pb
                if product.is_zero():
                    continue
                for label, value in self.bracket_labels(la, lb).items():
                    acc = out.get(label)
                    acc = product * value if acc is None else acc + product * value
                    if acc.is_zero():
                        out.pop(label, None)
                    else:
                        out[label] = acc
        return out

    def promote(self, x: LieElement, nvars: int) -> PolyLieElement:
        return {label: Poly.const(nvars, value) for label, value in x.items()}

    def exp_ad_poly(self, x: PolyLieElement, y: PolyLieElement) -> PolyLieElement:
        result = dict(y)
        term = dict(y)
        step = 0
        while term:
            step += 1
            if step > _MAX_EXP_STEPS:
                raise ComputationError("exp(ad) did not terminate; argument is not nilpotent")
            term = self.bracket_poly(x, term)
            term = {label: value * Fraction(1, step) for label, value in term.items()}
            for label, value in term.items():
                acc = result.get(label)
                acc = value if acc is None else acc + value
                if acc.is_zero():
                    result.pop(label, None)
                else:
                    result[label] = acc
        return result

    def flow_apply(self, gamma: Root, coeff: Poly, y: PolyLieElement) -> PolyLieElement:
        """Adjoint action of the unipotent flow x_gamma(coeff) on y."""
        self.rs.check_root(gamma)
        return self.exp_ad_poly({("e", gamma): coeff}, y)

    def simple_lift_apply_poly(self, i: int, y: PolyLieElement) -> PolyLieElement:
        nvars = next((p.nvars for p in y.values()), None)
        if nvars is None:
            return {}
        root = self.rs.simple_roots[i]
        one = Poly.const(nvars, 1)
        minus_one = Poly.const(nvars, -1)
        y = self.flow_apply(root, one, y)
        y = self.flow_apply(self.rs.neg(root), minus_one, y)
        return self.flow_apply(root, one, y)

    def simple_lift_inverse_apply_poly(self, i: int, y: PolyLieElement) -> PolyLieElement:
        nvars = next((p.nvars for p in y.values()), None)
        if nvars is None:
            return {}
        root = self.rs.simple_roots[i]
        one = Poly.const(nvars, 1)
        minus_one = Poly.const(nvars, -1)
        y = self.flow_apply(root, minus_one, y)
        y = self.flow_apply(self.rs.neg(root), one, y)
        return self.flow_apply(root, minus_one, y)


@lru_cache(maxsize=None)
def chevalley_basis(cartan_type: str) -> ChevalleyBasis:
    return ChevalleyBasis(root_system(cartan_type))


class Sl2Triple:
    """A verified (nilpositive, semisimple, nilnegative) triple."""

    __slots__ = ("h", "n", "y")

    def __init__(self, h: LieElement, n: LieElement, y: LieElement):
        self.h = h
        self.n = n
        self.y = y


def regular_nilpotent_sl2(cb: ChevalleyBasis, generators: tuple[Root, ...]) -> Sl2Triple:
    """The principal triple through the sum of root vectors of the generators.

    The generators must behave like the simple roots of a subsystem: the
    semisimple element is solved from the pairing matrix and the whole
    triple is verified by explicit brackets before being returned.
    """
    rs = cb.rs
    matrix = [[rs.pairing(gj, gi) for gi in generators] for gj in generators]
    try:
        x = solve_linear(matrix, [2] * len(generators))
    except ValueError as exc:
        raise ComputationError("generator pairing matrix is singular") from exc
    h: LieElement = {}
    n: LieElement = {}
    y: LieElement = {}
    for coeff, g in zip(x, generators):
        for label, value in cb.coroot_element(g).items():
            acc = h.get(label, Fraction(0)) + coeff * value
            if acc:
                h[label] = acc
            else:
                h.pop(label, None)
        n[("e", g)] = Fraction(1)
        y[("e", rs.neg(g))] = coeff
    def add_scaled(a: LieElement, b: LieElement, scale: int) -> LieElement:
        out = dict(a)
        for label, value in b.items():
            acc = out.get(label, Fraction(0)) + scale * value
            if acc:
                out[label] = acc
            else:
                out.pop(label, None)
        return out
    if add_scaled(cb.bracket(h, n), n, -2):
        raise ComputationError("triple check failed: [h, n] != 2n")
    if add_scaled(cb.bracket(h, y), y, 2):
        raise ComputationError("triple check failed: [h, y] != -2y")
    if add_scaled(cb.bracket(n, y), h, -1):
        raise ComputationError("triple check failed: [n, y] != h")
    return Sl2Triple(h, n, y)
