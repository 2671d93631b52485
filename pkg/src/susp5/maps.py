"""Closed-world homotopy and map-class tables with a composition engine.

Hom-sets between elementary complexes in the metastable range are tabulated
with explicit generators and additive orders; anything outside the table
raises UnsupportedPair rather than guessing.  Map classes are formal integer
combinations of generators with coefficients reduced modulo the generator
orders, and composition is bilinear over a fixed rewrite table of generator
relations (pinch of a lifted Hopf map is the Hopf map, B(chi) maps scale
bottom inclusions by chi, and so on).  Unknown generator composites raise
UnknownComposite.
"""
from __future__ import annotations

from dataclasses import dataclass

from susp5.abgroup import FgAbGroup
from susp5.spaces import (
    CHANG_ETA,
    CHANG_R,
    MOORE,
    SPHERE,
    ElementaryComplex,
)


class UnsupportedPair(LookupError):
    """The hom-set for this (source, target) pair is not in the tables."""


class UnknownComposite(LookupError):
    """No rewrite rule covers this generator composition."""


def _moore_prime(cx: ElementaryComplex) -> int:
    p = min(p for p, _ in FgAbGroup.from_orders([cx.order]).torsion)
    return p


def _moore_exp(cx: ElementaryComplex) -> int:
    (p, e), = FgAbGroup.from_orders([cx.order]).torsion
    return e


def _chi(p: int, a: int, b: int) -> int:
    """chi^a_b: 1 when a >= b, otherwise p^(b-a)."""
    return 1 if a >= b else p ** (b - a)


@dataclass(frozen=True)
class Gen:
    """A named generator of a hom-set, e.g. eta: S^4 -> S^3."""

    name: str
    src: ElementaryComplex
    dst: ElementaryComplex
    params: tuple[int, ...] = ()

    def order(self) -> int:
        return _gen_order(self)

    def as_map(self, coeff: int = 1) -> "MapClass":
        return map_class(self.src, self.dst, [(self, coeff)])

    def render(self) -> str:
        n = self.name
        if n == "id":
            return "1"
        if n == "eta":
            return "eta"
        if n == "eta_sq":
            return "eta^2"
        if n == "inc":
            return "i"
        if n == "pinch" or n == "pinch_top":
            return "q"
        if n == "i_eta":
            return "i eta"
        if n == "i_eta_sq":
            return "i eta^2"
        if n == "eta_lift":
            return f"eta~_{self.params[0]}"
        if n == "b_chi":
            return f"B(chi^{self.params[0]}_{self.params[1]})"
        if n in ("i_eta_q", "i_eta_q3"):
            return "i eta q"
        if n == "hat_eta_b":
            return f"eta-hat_{self.params[1]} B(chi^{self.params[0]}_{self.params[1]})"
        if n == "zeta":
            return "zeta~"
        if n == "i_eta_zeta":
            return "i_eta zeta~"
        if n == "ip_eta_lift":
            return f"i_P eta~_{self.params[0]}"
        if n == "inc_moore":
            return "i_P"
        if n == "inc_eta":
            return "i_eta"
        if n == "xi_bar":
            return f"xi-bar_{self.params[0]}"
        if n == "mod3_lift":
            return f"alpha_{self.params[0]}"
        return n


def _gen_order(g: Gen) -> int:
    """Additive order of a generator; 0 means infinite order."""
    name = g.name
    if name == "id":
        if g.src.kind == SPHERE:
            return 0
        if g.src.kind == MOORE:
            p, e = _moore_prime(g.src), _moore_exp(g.src)
            return 4 if (p, e) == (2, 1) else p**e
        return 0
    if name == "eta":
        return 0 if g.dst.dim == 2 else 2
    if name == "eta_sq":
        return 2
    if name == "inc":
        return g.dst.order
    if name == "pinch":
        return g.src.order
    if name == "i_eta":
        return g.dst.order if _moore_prime(g.dst) != 2 else 2
    if name == "eta_lift":
        return 4 if g.params[0] == 1 else 2
    if name == "i_eta_sq":
        return 2
    if name == "b_chi":
        p = _moore_prime(g.src)
        r, s = g.params
        return 4 if (p, r, s) == (2, 1, 1) else p ** min(r, s)
    if name in ("i_eta_q",):
        return 2
    if name in ("i_eta_q3", "hat_eta_b"):
        p = _moore_prime(g.src)
        r, s = _moore_exp(g.src), _moore_exp(g.dst)
        return p ** min(r, s)
    if name in ("zeta", "i_eta_zeta"):
        return 0
    if name == "ip_eta_lift":
        return 2
    if name == "mod3_lift":
        return 3 ** (g.params[0] + 1)
    # structural maps used only inside relations; no reduction applied
    if name in ("inc_moore", "inc_eta", "xi_bar", "pinch_top"):
        return 0
    raise UnknownComposite(f"no order known for generator {name!r}")


@dataclass(frozen=True)
class HomEntry:
    group: FgAbGroup
    gens: tuple[Gen, ...]
    notes: tuple[str, ...] = ()


def _sphere(n: int) -> ElementaryComplex:
    return ElementaryComplex(SPHERE, n)


def hom_group(src: ElementaryComplex, dst: ElementaryComplex) -> HomEntry:
    """[src, dst] as a group with named generators; closed world.

    >>> from susp5.spaces import sphere
    >>> hom_group(sphere(4), sphere(3)).group.render()
    'Z/2'
    """
    zero = HomEntry(FgAbGroup.trivial(), ())

    if src.kind == SPHERE and dst.kind == SPHERE:
        m, n = src.dim, dst.dim
        if m < n:
            return zero
        if m == n:
            return HomEntry(FgAbGroup.free(1), (Gen("id", src, dst),))
        if m == n + 1 and n == 2:
            return HomEntry(FgAbGroup.free(1), (Gen("eta", src, dst),))
        if m == n + 1 and n >= 3:
            return HomEntry(FgAbGroup.from_orders([2]), (Gen("eta", src, dst),))
        if m == n + 2 and n >= 3:
            return HomEntry(FgAbGroup.from_orders([2]), (Gen("eta_sq", src, dst),))
        raise UnsupportedPair(f"[{src}, {dst}] not tabulated")

    if src.kind == SPHERE and dst.kind == MOORE:
        m, n1 = src.dim, dst.dim
        p, e = _moore_prime(dst), _moore_exp(dst)
        if m < n1 - 1:
            return zero
        if m == n1 - 1 and m >= 2:
            return HomEntry(FgAbGroup.from_orders([p**e]), (Gen("inc", src, dst),))
        if m == n1 and p == 2 and m >= 4:
            return HomEntry(FgAbGroup.from_orders([2]), (Gen("i_eta", src, dst),))
        if m == n1 == 3 and p != 2:
            return HomEntry(FgAbGroup.from_orders([p**e]), (Gen("i_eta", src, dst),))
        if m == n1 and p != 2 and m >= 4:
            return zero
        if m == n1 + 1 and p != 2 and m >= 4:
            return zero  # one above the top cell of an odd Moore space
        if m == n1 + 2 and n1 == 3 and p != 2:
            # two above the top cell of a three-dimensional odd Moore space
            if p == 3:
                return HomEntry(
                    FgAbGroup.from_orders([3 ** (e + 1)]),
                    (Gen("mod3_lift", src, dst, (e,)),),
                    notes=("suspends trivially",),
                )
            return zero
        if m == n1 + 1 and p == 2 and m >= 5:
            r = e
            if r == 1:
                return HomEntry(
                    FgAbGroup.from_orders([4]), (Gen("eta_lift", src, dst, (1,)),)
                )
            return HomEntry(
                FgAbGroup.from_orders([2, 2]),
                (Gen("eta_lift", src, dst, (r,)), Gen("i_eta_sq", src, dst)),
            )
        raise UnsupportedPair(f"[{src}, {dst}] not tabulated")

    if src.kind == MOORE and dst.kind == MOORE:
        p, q = _moore_prime(src), _moore_prime(dst)
        r, s = _moore_exp(src), _moore_exp(dst)
        if p != q:
            return zero
        m = min(r, s)
        if src.dim == dst.dim:
            n1 = src.dim
            b = Gen("b_chi", src, dst, (r, s))
            if p == 2 and n1 >= 4:
                if r == s == 1:
                    return HomEntry(FgAbGroup.from_orders([4]), (b,))
                return HomEntry(
                    FgAbGroup.from_orders([2**m, 2]), (b, Gen("i_eta_q", src, dst))
                )
            if p != 2 and n1 >= 4:
                return HomEntry(FgAbGroup.from_orders([p**m]), (b,))
            if p != 2 and n1 == 3:
                return HomEntry(
                    FgAbGroup.from_orders([p**m, p**m]),
                    (b, Gen("i_eta_q3", src, dst)),
                )
        if src.dim == dst.dim + 1 and p != 2:
            if dst.dim == 3:
                return HomEntry(
                    FgAbGroup.from_orders([p**m]),
                    (Gen("hat_eta_b", src, dst, (r, s)),),
                )
            return zero
        raise UnsupportedPair(f"[{src}, {dst}] not tabulated")

    if src.kind == MOORE and dst.kind == SPHERE:
        if src.dim == dst.dim and src.dim >= 3:
            return HomEntry(
                FgAbGroup.from_orders([src.order]), (Gen("pinch", src, dst),)
            )
        raise UnsupportedPair(f"[{src}, {dst}] not tabulated")

    if src.kind == SPHERE and dst.kind == CHANG_ETA:
        if src.dim == dst.dim and src.dim >= 5:
            return HomEntry(FgAbGroup.free(1), (Gen("zeta", src, dst),))
        raise UnsupportedPair(f"[{src}, {dst}] not tabulated")

    if src.kind == SPHERE and dst.kind == CHANG_R:
        if src.dim == dst.dim and src.dim >= 5:
            return HomEntry(
                FgAbGroup.from_orders([0, 2]),
                (Gen("i_eta_zeta", src, dst), Gen("ip_eta_lift", src, dst, (dst.r,))),
            )
        raise UnsupportedPair(f"[{src}, {dst}] not tabulated")

    raise UnsupportedPair(f"[{src}, {dst}] not tabulated")


# -- formal map classes -------------------------------------------------------


@dataclass(frozen=True)
class MapClass:
    """A formal sum of hom-set generators with reduced coefficients."""

    src: ElementaryComplex
    dst: ElementaryComplex
    terms: tuple[tuple[Gen, int], ...]

    @property
    def is_null(self) -> bool:
        return not self.terms

    def __add__(self, other: "MapClass") -> "MapClass":
        if (self.src, self.dst) != (other.src, other.dst):
            raise ValueError("cannot add maps with different endpoints")
        return map_class(self.src, self.dst, list(self.terms) + list(other.terms))

    def scale(self, k: int) -> "MapClass":
        return map_class(self.src, self.dst, [(g, k * c) for g, c in self.terms])

    def __neg__(self) -> "MapClass":
        return self.scale(-1)

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for g, c in self.terms:
            parts.append(g.render() if c == 1 else f"{c}*{g.render()}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()


def map_class(src, dst, terms) -> MapClass:
    """Normalize: merge duplicate generators, reduce mod orders, drop zeros."""
    acc: dict[Gen, int] = {}
    for g, c in terms:
        if (g.src, g.dst) != (src, dst):
            raise ValueError(f"generator {g.render()} has wrong endpoints")
        acc[g] = acc.get(g, 0) + c
    out = []
    for g, c in acc.items():
        n = g.order()
        c = c % n if n else c
        if c:
            out.append((g, c))
    out.sort(key=lambda t: (t[0].name, t[0].params))
    return MapClass(src, dst, tuple(out))


def zero_map(src, dst) -> MapClass:
    return MapClass(src, dst, ())


def _compose_gens(g: Gen, f: Gen) -> list[tuple[Gen, int]]:
    """Rewrite g o f (f: X -> Y, g: Y -> Z) as terms in [X, Z]."""
    X, Z = f.src, g.dst

    if f.name == "id":
        return [(g, 1)]
    if g.name == "id":
        return [(f, 1)]

    pair = (g.name, f.name)

    if pair == ("eta", "eta"):
        if Z.dim >= 3:
            return [(Gen("eta_sq", X, Z), 1)]
        raise UnknownComposite("eta o eta below the stable range")

    if pair == ("inc", "eta"):
        # i eta; for odd Moore targets above dimension 3 this is zero
        p = _moore_prime(Z)
        if p != 2 and Z.dim > 3:
            return []
        return [(Gen("i_eta", X, Z), 1)]

    if pair in (("inc", "eta_sq"), ("i_eta", "eta")):
        p = _moore_prime(Z)
        if p != 2:
            return []  # eta^2 is 2-torsion, the target summand is odd
        r = _moore_exp(Z)
        if r == 1:
            return [(Gen("eta_lift", X, Z, (1,)), 2)]  # 2 eta~_1 = i eta^2
        return [(Gen("i_eta_sq", X, Z), 1)]

    if g.name == "pinch" and f.name in ("inc", "i_eta", "i_eta_sq", "i_eta_q", "i_eta_q3"):
        return []  # pinch kills anything through the bottom cell

    if pair == ("pinch", "eta_lift"):
        return [(Gen("eta", X, Z), 1)]  # q eta~_r = eta

    if pair == ("pinch_top", "zeta"):
        return [(Gen("id", X, Z), 2)]  # q zeta~ = 2

    if pair == ("inc_eta", "zeta"):
        return [(Gen("i_eta_zeta", X, Z), 1)]

    if g.name == "b_chi":
        p = _moore_prime(g.src)
        r, s = g.params
        if f.name == "inc":
            return [(Gen("inc", X, Z), _chi(p, r, s))]
        if f.name == "i_eta":
            return [(Gen("i_eta", X, Z), _chi(p, r, s))]
        if f.name == "i_eta_sq":
            if s == 1:
                return [(Gen("eta_lift", X, Z, (1,)), 2 * _chi(2, r, s))]
            return [(Gen("i_eta_sq", X, Z), _chi(2, r, s))]
        if f.name == "eta_lift":
            return [(Gen("eta_lift", X, Z, (s,)), _chi(p, s, r))]

    if g.name == "pinch" and f.name == "b_chi":
        p = _moore_prime(f.src)
        r, s = f.params
        return [(Gen("pinch", X, Z), _chi(p, s, r))]

    if g.name in ("i_eta_q", "i_eta_q3"):
        if f.name == "eta_lift":
            s = _moore_exp(Z)
            if s == 1:
                return [(Gen("eta_lift", X, Z, (1,)), 2)]
            return [(Gen("i_eta_sq", X, Z), 1)]
        if f.name in ("inc", "i_eta", "i_eta_sq"):
            return []  # factors through pinch then bottom inclusion

    if pair == ("xi_bar", "inc_moore"):
        r = _moore_exp(X)
        return [(Gen("b_chi", X, Z, (r, r + 1)), 1)]

    if pair == ("xi_bar", "ip_eta_lift"):
        # xi-bar_s (i_P eta~_s) = B(chi^s_{s+1}) eta~_s = eta~_{s+1}
        s = f.params[0]
        return [(Gen("eta_lift", X, Z, (s + 1,)), 1)]

    if pair == ("inc_moore", "eta_lift"):
        return [(Gen("ip_eta_lift", X, Z, (f.params[0],)), 1)]

    if pair == ("inc_moore", "i_eta_sq"):
        return []  # i eta^2 dies in the two-stage complex (torsion-free pi)

    raise UnknownComposite(f"no rule for {g.render()} o {f.render()}")


def compose(g: MapClass, f: MapClass) -> MapClass:
    """Bilinear composition g o f for f: X -> Y, g: Y -> Z."""
    if f.dst != g.src:
        raise ValueError("endpoints do not match")
    terms: list[tuple[Gen, int]] = []
    for gg, cg in g.terms:
        for gf, cf in f.terms:
            for gen, c in _compose_gens(gg, gf):
                terms.append((gen, cg * cf * c))
    return map_class(f.src, g.dst, terms)
