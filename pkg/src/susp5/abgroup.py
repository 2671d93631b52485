"""Finitely generated abelian groups in canonical form, plus exact integer
Smith normal form.

Groups are stored as a free rank together with a tuple of prime-power cyclic
summands.  By the structure theorem every finitely generated abelian group is
Z^r + sum of Z/p^e with the multiset of (p, e) unique, so equality of the
canonical form is isomorphism and nothing is ever compared "up to extension".
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

Matrix = list[list[int]]


def _identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(a: list[list[int]] | tuple) -> tuple[Matrix, Matrix, Matrix]:
    """Diagonalize an integer matrix by unimodular transformations.

    Returns (d, u, v) with u * a * v == d, u and v unimodular, all diagonal
    entries of d nonnegative and d[0][0] | d[1][1] | ... .  Arbitrary
    precision, any shape, empty matrices included.

    >>> d, u, v = smith_normal_form([[2, 4], [6, 8]])
    >>> (d[0][0], d[1][1])
    (2, 4)
    >>> smith_normal_form([[6]])[0]
    [[6]]
    """
    m = len(a)
    n = len(a[0]) if m else 0
    if any(len(row) != n for row in a):
        raise ValueError("ragged matrix")
    d = [list(map(int, row)) for row in a]
    u = _identity(m)
    v = _identity(n)

    def add_row(i: int, k: int, q: int) -> None:
        # row_i -= q * row_k, mirrored in u so that u*a*v == d stays exact
        for j in range(n):
            d[i][j] -= q * d[k][j]
        for j in range(m):
            u[i][j] -= q * u[k][j]

    def add_col(j: int, k: int, q: int) -> None:
        for i in range(m):
            d[i][j] -= q * d[i][k]
        for i in range(n):
            v[i][j] -= q * v[i][k]

    def swap_rows(i: int, k: int) -> None:
        d[i], d[k] = d[k], d[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j: int, k: int) -> None:
        for row in d:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def negate_row(i: int) -> None:
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(m, n):
        # smallest nonzero pivot in the trailing submatrix
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = d[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            swap_rows(t, pivot[0])
        if pivot[1] != t:
            swap_cols(t, pivot[1])

        p = d[t][t]
        dirty = False
        for i in range(t + 1, m):
            if d[i][t] != 0:
                add_row(i, t, d[i][t] // p)
                dirty = dirty or d[i][t] != 0
        for j in range(t + 1, n):
            if d[t][j] != 0:
                add_col(j, t, d[t][j] // p)
                dirty = dirty or d[t][j] != 0
        if dirty:
            continue  # a remainder smaller than |p| appeared, re-pick pivot

        # pivot must divide the rest of the submatrix for the chain d1|d2|...
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if d[i][j] % p != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            add_row(t, bad, -1)  # pull the offending row up, then re-reduce
            continue
        t += 1

    for i in range(min(m, n)):
        if d[i][i] < 0:
            negate_row(i)
    return d, u, v


def _prime_power_factors(k: int) -> list[tuple[int, int]]:
    """Factor k >= 2 into [(p, e), ...] with p ascending."""
    out = []
    rest = k
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if rest > 1:
        out.append((rest, 1))
    return out


@dataclass(frozen=True)
class FgAbGroup:
    """A finitely generated abelian group in canonical primary form.

    free_rank is the rank of the free part; torsion is a tuple of
    (prime, exponent) pairs sorted ascending, one per cyclic summand Z/p^e.

    >>> FgAbGroup.from_orders([6])
    FgAbGroup(free_rank=0, torsion=((2, 1), (3, 1)))
    >>> str(FgAbGroup.from_orders([0, 0, 4]))
    'Z^2 + Z/4'
    """

    free_rank: int = 0
    torsion: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        if list(self.torsion) != sorted(self.torsion):
            raise ValueError("torsion summands must be sorted by (prime, exponent)")
        for p, e in self.torsion:
            if e < 1 or p < 2 or _prime_power_factors(p) != [(p, 1)]:
                raise ValueError(f"not a prime power summand: ({p}, {e})")

    # -- constructors ------------------------------------------------------

    @classmethod
    def trivial(cls) -> "FgAbGroup":
        return cls(0, ())

    @classmethod
    def free(cls, rank: int) -> "FgAbGroup":
        return cls(rank, ())

    @classmethod
    def cyclic(cls, k: int) -> "FgAbGroup":
        """Z/k for k >= 1 (k == 0 means Z, matching presentation conventions)."""
        return cls.from_orders([k])

    @classmethod
    def from_orders(cls, orders) -> "FgAbGroup":
        """Build from cyclic orders; 0 denotes a free Z summand, 1 is trivial."""
        rank = 0
        tors: list[tuple[int, int]] = []
        for k in orders:
            if k < 0:
                raise ValueError("orders must be nonnegative")
            if k == 0:
                rank += 1
            elif k > 1:
                tors.extend(_prime_power_factors(k))
        return cls(rank, tuple(sorted(tors)))

    @classmethod
    def from_primary(cls, free_rank: int, pairs) -> "FgAbGroup":
        return cls(free_rank, tuple(sorted(tuple(t) for t in pairs)))

    @classmethod
    def from_presentation(cls, a) -> "FgAbGroup":
        """Cokernel of a: Z^cols -> Z^rows, i.e. Z^rows / (column span of a).

        >>> FgAbGroup.from_presentation([[2, 4], [6, 8]])
        FgAbGroup(free_rank=0, torsion=((2, 1), (2, 2)))
        >>> FgAbGroup.from_presentation([[], []])
        FgAbGroup(free_rank=2, torsion=())
        """
        d, _, _ = smith_normal_form(a)
        m = len(d)
        n = len(d[0]) if m else 0
        diag = [d[i][i] for i in range(min(m, n))]
        orders = [x for x in diag if x != 0]
        return cls.from_orders(orders + [0] * (m - len(orders)))

    _TERM = re.compile(
        r"^(?:0|Z(?:\^(?P<rank>\d+))?|Z/(?P<base>\d+)(?:\^(?P<exp>\d+))?)$"
    )

    @classmethod
    def from_string(cls, text: str) -> "FgAbGroup":
        """Parse group literals like '0', 'Z', 'Z^2 + Z/4 + Z/3', 'Z/2^3'.

        >>> FgAbGroup.from_string("Z^2 + Z/2^3") == FgAbGroup(2, ((2, 3),))
        True
        """
        orders: list[int] = []
        for raw in text.split("+"):
            term = raw.strip()
            if not term:
                raise ValueError(f"empty term in group literal: {text!r}")
            m = cls._TERM.match(term)
            if m is None:
                raise ValueError(f"bad group term: {term!r}")
            if term == "0":
                continue
            if m.group("base") is not None:
                k = int(m.group("base")) ** int(m.group("exp") or 1)
                if k < 2:
                    raise ValueError(f"bad torsion order in {term!r}")
                orders.append(k)
            else:
                orders.extend([0] * int(m.group("rank") or 1))
        return cls.from_orders(orders)

    # -- structure ---------------------------------------------------------

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def has_2_torsion(self) -> bool:
        return any(p == 2 for p, _ in self.torsion)

    @property
    def has_3_torsion(self) -> bool:
        return any(p == 3 for p, _ in self.torsion)

    def torsion_orders(self) -> tuple[int, ...]:
        return tuple(p**e for p, e in self.torsion)

    def num_torsion_summands(self) -> int:
        return len(self.torsion)

    def primary_exponents(self, p: int) -> tuple[int, ...]:
        """Exponents e of the Z/p^e summands, in canonical (ascending) order."""
        return tuple(e for q, e in self.torsion if q == p)

    def primary_component(self, p: int) -> "FgAbGroup":
        """The p-primary torsion subgroup (free part discarded)."""
        return FgAbGroup(0, tuple(t for t in self.torsion if t[0] == p))

    def torsion_part(self) -> "FgAbGroup":
        return FgAbGroup(0, self.torsion)

    def direct_sum(self, *others: "FgAbGroup") -> "FgAbGroup":
        rank = self.free_rank + sum(g.free_rank for g in others)
        tors = list(self.torsion)
        for g in others:
            tors.extend(g.torsion)
        return FgAbGroup(rank, tuple(sorted(tors)))

    def drop_torsion_summands(self, indices) -> "FgAbGroup":
        """Remove the torsion summands at the given canonical indices."""
        drop = set(indices)
        bad = drop - set(range(len(self.torsion)))
        if bad:
            raise IndexError(f"no torsion summand at {sorted(bad)}")
        kept = tuple(t for i, t in enumerate(self.torsion) if i not in drop)
        return FgAbGroup(self.free_rank, kept)

    # -- rendering ---------------------------------------------------------

    def render(self) -> str:
        parts: list[str] = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{p**e}" for p, e in self.torsion)
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.render()


def direct_sum(*groups: FgAbGroup) -> FgAbGroup:
    """Direct sum of any number of groups (empty sum is the trivial group)."""
    if not groups:
        return FgAbGroup.trivial()
    return groups[0].direct_sum(*groups[1:])
