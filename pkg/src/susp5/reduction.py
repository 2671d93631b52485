"""Normalization of eta-type attaching data over wedges of spheres and
Moore spaces.

Two layers:

* HMatrix holds the mod-2 incidence data recording which of the l
  five-dimensional sources hits which three-sphere (through eta) and which
  two-primary Moore summand (through the bottom-cell eta).  Wedge
  automorphisms act by row and column moves; a greedy normal form yields
  the pair (c1, c2) and the set of consumed Moore summands.
* PhiVector holds the residual top-cell attaching components once the
  (c1, c2) pieces have split off, with values in the tabulated homotopy
  groups: eta^2 on three-spheres, eta on four-spheres, lifted eta classes
  on the remaining Moore summands (a Z/4 at exponent one, Z/2 + Z/2
  above), and i_P eta~ classes on the consumed two-stage pieces.
  reduce_phi picks the canonical surviving case.

enumerate_orbit and enumerate_phi_orbit run breadth-first searches over
all legal single moves; they exist to cross-check the greedy normal forms
on small instances.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace


class AttachingDataError(ValueError):
    """Attaching data violates a structural constraint."""


# -- eta incidence matrix -----------------------------------------------------


@dataclass(frozen=True)
class HMatrix:
    """Mod-2 eta incidence data: one row per three-sphere, one per
    two-primary Moore summand, one column per five-dimensional source."""

    sphere_rows: tuple[tuple[int, ...], ...]
    moore_rows: tuple[tuple[int, ...], ...]
    moore_exponents: tuple[int, ...]

    def __post_init__(self):
        rows = list(self.sphere_rows) + list(self.moore_rows)
        if len({len(r) for r in rows}) > 1:
            raise AttachingDataError("rows of unequal length")
        for row in rows:
            if any(v not in (0, 1) for v in row):
                raise AttachingDataError("matrix entries must be 0 or 1")
        if len(self.moore_exponents) != len(self.moore_rows):
            raise AttachingDataError("one exponent per Moore row required")
        if any(e < 1 for e in self.moore_exponents):
            raise AttachingDataError("Moore exponents must be at least 1")

    @property
    def num_columns(self) -> int:
        for row in self.sphere_rows + self.moore_rows:
            return len(row)
        return 0


def _xor(a, b):
    return tuple((u + v) % 2 for u, v in zip(a, b))


def _with_rows(h: HMatrix, sphere=None, moore=None) -> HMatrix:
    return replace(
        h,
        sphere_rows=tuple(map(tuple, sphere)) if sphere is not None else h.sphere_rows,
        moore_rows=tuple(map(tuple, moore)) if moore is not None else h.moore_rows,
    )


def legal_moves(h: HMatrix) -> list[HMatrix]:
    """All states reachable from h by one elementary wedge automorphism.

    Sphere rows add onto each other freely (degree-one shears), columns add
    onto each other in both blocks at once (source basis change), sphere
    rows add onto Moore rows (bottom inclusion carries eta to i eta), and a
    Moore row adds onto another only when its exponent is at least as large
    (B(chi) transports i eta with unit coefficient exactly then).
    """
    out = []
    sph = [list(r) for r in h.sphere_rows]
    moo = [list(r) for r in h.moore_rows]
    d, t, cols = len(sph), len(moo), h.num_columns

    for i in range(d):
        for k in range(d):
            if i != k:
                rows = [row[:] for row in sph]
                rows[i] = list(_xor(rows[i], sph[k]))
                out.append(_with_rows(h, sphere=rows))
    for c in range(cols):
        for c2 in range(cols):
            if c == c2:
                continue
            s2 = [row[:] for row in sph]
            m2 = [row[:] for row in moo]
            for row in s2 + m2:
                row[c] = (row[c] + row[c2]) % 2
            out.append(_with_rows(h, sphere=s2, moore=m2))
    for j in range(t):
        for k in range(d):
            m2 = [row[:] for row in moo]
            m2[j] = list(_xor(m2[j], sph[k]))
            out.append(_with_rows(h, moore=m2))
    for j in range(t):
        for k in range(t):
            if j != k and h.moore_exponents[j] >= h.moore_exponents[k]:
                m2 = [row[:] for row in moo]
                m2[k] = list(_xor(m2[k], moo[j]))
                out.append(_with_rows(h, moore=m2))
    return out


def enumerate_orbit(h: HMatrix, limit: int = 200_000) -> set[HMatrix]:
    """Closure of h under legal moves (each move has finite order, so the
    reachable set is the full orbit)."""
    seen = {h}
    queue = deque([h])
    while queue:
        cur = queue.popleft()
        for nxt in legal_moves(cur):
            if nxt not in seen:
                if len(seen) >= limit:
                    raise RuntimeError("orbit exceeds enumeration limit")
                seen.add(nxt)
                queue.append(nxt)
    return seen


@dataclass(frozen=True)
class ReductionResult:
    c1: int
    c2: int
    consumed: tuple[int, ...]
    reduced: HMatrix


def reduce_h_matrix(h: HMatrix) -> ReductionResult:
    """Greedy normal form.

    Phase one: F2 Gaussian elimination on the sphere block; c1 is its rank.
    Pivot rows are then cleared to a single entry by column moves.  Phase
    two: sphere pivot rows clear the matching Moore entries.  Phase three:
    Moore rows claim free columns in order of decreasing exponent (ties by
    position), which keeps every clearing row-move legal; c2 counts the
    claimed pivots and `consumed` lists the claiming rows by original index.
    """
    sph = [list(r) for r in h.sphere_rows]
    moo = [list(r) for r in h.moore_rows]
    cols = h.num_columns

    pivots: list[tuple[int, int]] = []
    pivot_rows: set[int] = set()
    for col in range(cols):
        pr = next(
            (i for i in range(len(sph)) if i not in pivot_rows and sph[i][col]), None
        )
        if pr is None:
            continue
        pivots.append((pr, col))
        pivot_rows.add(pr)
        for i in range(len(sph)):
            if i != pr and sph[i][col]:
                sph[i] = list(_xor(sph[i], sph[pr]))
    for pr, pc in pivots:
        for c in range(cols):
            if c != pc and sph[pr][c]:
                for row in sph + moo:
                    row[c] = (row[c] + row[pc]) % 2

    for j in range(len(moo)):
        for pr, pc in pivots:
            if moo[j][pc]:
                moo[j] = list(_xor(moo[j], sph[pr]))

    claimed = {pc for _, pc in pivots}
    consumed: list[int] = []
    order = sorted(range(len(moo)), key=lambda j: (-h.moore_exponents[j], j))
    for j in order:
        col = next((c for c in range(cols) if c not in claimed and moo[j][c]), None)
        if col is None:
            continue
        consumed.append(j)
        claimed.add(col)
        for k in range(len(moo)):
            if k != j and moo[k][col]:
                # processed rows are already single-pivot, so k is later in
                # the order and has exponent at most that of j: legal move
                moo[k] = list(_xor(moo[k], moo[j]))
        for c in range(cols):
            if c != col and moo[j][c]:
                for row in sph + moo:
                    row[c] = (row[c] + row[col]) % 2

    return ReductionResult(
        c1=len(pivots),
        c2=len(consumed),
        consumed=tuple(sorted(consumed)),
        reduced=_with_rows(h, sphere=sph, moore=moo),
    )


# -- residual attaching vector ------------------------------------------------


@dataclass(frozen=True)
class PhiVector:
    """Residual top-cell attaching components on the section.

    x: eta^2 coefficients on the free three-spheres (F2, length d - c1)
    y: eta coefficients on the four-spheres (F2, length d)
    moore: one value 0..3 per unconsumed two-primary Moore summand; at
        exponent one this is the Z/4 of the lifted eta class (twice the
        lift is the included eta^2), above it encodes z + 2*eps for the
        Z/2 lift and the Z/2 included eta^2
    w: i_P eta~ coefficients on the consumed two-stage pieces (F2)
    whitehead: degree-type components, required to vanish
    """

    x: tuple[int, ...]
    y: tuple[int, ...]
    moore: tuple[int, ...]
    moore_exponents: tuple[int, ...]
    w: tuple[int, ...]
    consumed_exponents: tuple[int, ...]
    whitehead: int = 0

    def __post_init__(self):
        if any(v not in (0, 1) for v in self.x + self.y + self.w):
            raise AttachingDataError("sphere and w components must be 0 or 1")
        if any(v not in (0, 1, 2, 3) for v in self.moore):
            raise AttachingDataError("Moore slot values must lie in 0..3")
        if len(self.moore) != len(self.moore_exponents):
            raise AttachingDataError("one exponent per Moore slot required")
        if len(self.w) != len(self.consumed_exponents):
            raise AttachingDataError("one exponent per consumed slot required")
        if any(e < 1 for e in self.moore_exponents + self.consumed_exponents):
            raise AttachingDataError("exponents must be at least 1")
        if self.whitehead != 0:
            raise AttachingDataError("degree-type components must vanish")


def _z_active(phi: PhiVector, i: int) -> bool:
    return phi.moore[i] % 2 == 1


def _eps_active(phi: PhiVector, i: int) -> bool:
    c = phi.moore[i]
    if phi.moore_exponents[i] == 1:
        return c == 2
    return c >= 2


@dataclass(frozen=True)
class AttachCase:
    """Normal form of the residual attaching data.

    kind is one of null, eta, tilde_eta, ip_tilde_eta, eta_sq, i_eta_sq.
    For tilde_eta and i_eta_sq, index points into the unconsumed Moore
    slots; for ip_tilde_eta it points into the consumed slots.  r is the
    exponent of the slot involved.
    """

    kind: str
    index: int | None = None
    r: int | None = None


def reduce_phi(phi: PhiVector, smooth: bool) -> AttachCase:
    """Canonical case of a residual attaching vector.

    Dominance: a lifted eta class (on an unconsumed slot or, through i_P,
    on a consumed piece) of minimal exponent wins, unconsumed beating
    consumed at equal exponent, lower index breaking remaining ties.
    Otherwise any eta coefficient wins; otherwise an eta^2 coefficient on a
    free three-sphere; otherwise an included eta^2 on the slot of maximal
    exponent.  Smooth input cannot carry eta^2-type components at all.
    """
    if smooth:
        if any(phi.x):
            raise AttachingDataError("eta^2 components are not allowed for smooth input")
        if any(_eps_active(phi, i) for i in range(len(phi.moore))):
            raise AttachingDataError(
                "included eta^2 components are not allowed for smooth input"
            )
    z_cand = [
        (phi.moore_exponents[i], 0, i)
        for i in range(len(phi.moore))
        if _z_active(phi, i)
    ]
    w_cand = [
        (phi.consumed_exponents[j], 1, j) for j in range(len(phi.w)) if phi.w[j]
    ]
    if z_cand or w_cand:
        r, tag, idx = min(z_cand + w_cand)
        return AttachCase("tilde_eta" if tag == 0 else "ip_tilde_eta", idx, r)
    if any(phi.y):
        return AttachCase("eta")
    if any(phi.x):
        return AttachCase("eta_sq")
    eps = [i for i in range(len(phi.moore)) if _eps_active(phi, i)]
    if eps:
        r_max = max(phi.moore_exponents[i] for i in eps)
        idx = min(i for i in eps if phi.moore_exponents[i] == r_max)
        return AttachCase("i_eta_sq", idx, r_max)
    return AttachCase("null")


def _slot_add(c: int, r: int, delta: int) -> int:
    """Add delta to a Moore slot value in its own group law."""
    return (c + delta) % 4 if r == 1 else c ^ delta


def _b_transport(ck: int, rk: int, rj: int) -> int:
    """Image of a Moore slot value under B(chi) into a slot of exponent rj."""
    if rk == 1:
        return ck % 4 if rj == 1 else ck % 2
    z, e = ck & 1, (ck >> 1) & 1
    if rj == 1:
        d = 2 * e
        if rk == 2:
            d += 2 * z
        return d % 4
    dz = z if rj >= rk else 0
    de = e if rk >= rj else 0
    return dz + 2 * de


def phi_moves(phi: PhiVector) -> list[PhiVector]:
    """All states reachable from phi by one elementary shear.

    Each move adds the image of one component under one tabulated map to
    another component: identities among like spheres, eta and eta^2 and
    pinch maps downward in cell structure, bottom inclusions upward into
    Moore slots, B(chi) between Moore slots, and the xi-bar and i_P
    composites in and out of the consumed two-stage pieces.
    """
    out = []
    X, Y, M, W = phi.x, phi.y, phi.moore, phi.w
    R, S = phi.moore_exponents, phi.consumed_exponents

    def with_(x=None, y=None, m=None, w=None):
        out.append(
            replace(
                phi,
                x=tuple(x) if x is not None else X,
                y=tuple(y) if y is not None else Y,
                moore=tuple(m) if m is not None else M,
                w=tuple(w) if w is not None else W,
            )
        )

    def toggled(vec, i):
        lst = list(vec)
        lst[i] ^= 1
        return lst

    for k in range(len(X)):
        if not X[k]:
            continue
        for i in range(len(X)):
            if i != k:
                with_(x=toggled(X, i))  # identity shear among three-spheres
        for j in range(len(M)):
            with_(m=_slot_set(M, R, j, 2))  # bottom inclusion sends eta^2 up
    for k in range(len(Y)):
        if not Y[k]:
            continue
        for i in range(len(Y)):
            if i != k:
                with_(y=toggled(Y, i))  # identity shear among four-spheres
        for i in range(len(X)):
            with_(x=toggled(X, i))  # eta carries eta to eta^2
        for j in range(len(M)):
            with_(m=_slot_set(M, R, j, 2))  # i eta carries eta to i eta^2
    for k in range(len(M)):
        if M[k] % 2:
            for i in range(len(Y)):
                with_(y=toggled(Y, i))  # pinch carries the lift to eta
            for i in range(len(X)):
                with_(x=toggled(X, i))  # eta pinch carries the lift to eta^2
            for j in range(len(W)):
                if S[j] >= R[k]:
                    with_(w=toggled(W, j))  # i_P B(chi) into a consumed piece
        for j in range(len(M)):
            if M[k] % 2:
                with_(m=_slot_set(M, R, j, 2))  # i eta q, slot onto itself included
            if j != k:
                delta = _b_transport(M[k], R[k], R[j])
                if delta:
                    with_(m=_slot_set(M, R, j, delta))
    for k in range(len(W)):
        if not W[k]:
            continue
        for i in range(len(X)):
            with_(x=toggled(X, i))  # eta q xi-bar route down to eta^2
        for i in range(len(Y)):
            with_(y=toggled(Y, i))  # q xi-bar route down to eta
        for j in range(len(M)):
            with_(m=_slot_set(M, R, j, 2))  # i eta q xi-bar route
            if R[j] > S[k]:
                with_(m=_slot_set(M, R, j, 1))  # B(chi) xi-bar lands on the lift
        for j in range(len(W)):
            if j != k and S[j] >= S[k]:
                with_(w=toggled(W, j))
    return out


def _slot_set(m, r, j, delta):
    lst = list(m)
    lst[j] = _slot_add(lst[j], r[j], delta)
    return lst


def enumerate_phi_orbit(phi: PhiVector, limit: int = 500_000) -> set[PhiVector]:
    """Closure of phi under elementary shears (again a full orbit: every
    move fixes its source component, so repeating it inverts it)."""
    seen = {phi}
    queue = deque([phi])
    while queue:
        cur = queue.popleft()
        for nxt in phi_moves(cur):
            if nxt not in seen:
                if len(seen) >= limit:
                    raise RuntimeError("orbit exceeds enumeration limit")
                seen.add(nxt)
                queue.append(nxt)
    return seen
