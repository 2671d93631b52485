"""Stable invariants read off the suspension wedges.

Reduced complex and real K-theory are evaluated summand by summand on the
double suspension (the even shift is invisible to K by Bott periodicity;
for KO we tabulate the degree-two groups, which are the ones that
desuspend to degree zero on the original complex).  Each computation is
checked against a closed form in the input invariants before it is
returned, so a bad table entry fails loudly instead of propagating.

The third cohomotopy group of the five-complex is produced in closed form
per attachment case.  An independent crosscheck recomputes it as homotopy
classes of maps from the single suspension into the four-sphere, summand
by summand; the two must agree.
"""
from __future__ import annotations

from dataclasses import dataclass

from susp5.abgroup import FgAbGroup, direct_sum
from susp5.decompose import (
    ManifoldDescriptor,
    double_suspension_decomposition,
    suspension_decomposition,
)
from susp5.spaces import (
    CHANG_ETA,
    CHANG_IP_ETA_LIFT,
    CHANG_R,
    MOORE,
    MOORE_ETA_LIFT,
    MOORE_ETA_SQ,
    SPHERE,
    SPHERE_ETA_SQ,
    ElementaryComplex,
)


class UnsupportedSummand(LookupError):
    """The requested invariant table has no entry for this complex."""


_Z = FgAbGroup.free(1)
_Z2 = FgAbGroup.cyclic(2)
_0 = FgAbGroup.trivial()

# Reduced KO of spheres, indexed by dimension mod 8 (coefficients of the
# real K-theory spectrum: Z, Z/2, Z/2, 0, Z, 0, 0, 0).
_KO_SPHERE = (_Z, _Z2, _Z2, _0, _Z, _0, _0, _0)


@dataclass(frozen=True)
class Contribution:
    """One wedge summand's share of an invariant.

    `implied` marks entries that come from connectivity or dimension
    bounds rather than a tabulated group.
    """

    summand: ElementaryComplex
    group: FgAbGroup
    implied: bool = False


@dataclass(frozen=True)
class GroupComputation:
    """A group assembled summand by summand, with its per-summand trace."""

    group: FgAbGroup
    contributions: tuple[Contribution, ...]


# -- per-summand tables ------------------------------------------------------


def k_of_summand(s: ElementaryComplex) -> FgAbGroup:
    """Reduced complex K-theory of one double-suspension summand.

    Everything here has cells in at most four dimensions, so the group is
    read off the even-dimensional cells and the order of the attaching
    maps in K-theory.
    """
    if s.kind == SPHERE:
        return _Z if s.dim % 2 == 0 else _0
    if s.kind == MOORE:
        # top cell even: both K-classes survive onto a cyclic group of the
        # attaching order; top cell odd: the two cells cancel.
        return FgAbGroup.cyclic(s.order) if s.dim % 2 == 0 else _0
    if s.kind == CHANG_ETA:
        # the Hopf attachment is stably trivial in K, leaving both cells.
        return FgAbGroup.free(2) if s.dim % 2 == 0 else _0
    if s.kind == CHANG_R and s.dim == 6:
        # cells 4,5,6: the middle pair cancels the torsion, one free class.
        return _Z
    if s.kind == CHANG_IP_ETA_LIFT and s.dim == 7:
        return _Z
    if s.kind == SPHERE_ETA_SQ and s.dim == 7:
        return _Z
    if s.kind == MOORE_ETA_LIFT and s.dim == 7:
        return _0
    if s.kind == MOORE_ETA_SQ and s.dim == 7:
        return _0
    raise UnsupportedSummand(f"no complex K-theory entry for {s.render()}")


def ko_of_summand(s: ElementaryComplex) -> FgAbGroup:
    """Reduced real K-theory of one double-suspension summand, taken in
    cohomological degree two so that it desuspends to degree zero on the
    original five-complex."""
    if s.kind == SPHERE:
        return _KO_SPHERE[(s.dim - 2) % 8]
    if s.kind == MOORE:
        if s.order % 2 == 1 and s.dim in (4, 5, 6):
            return _0
        if s.order % 2 == 0 and s.dim == 5:
            return _Z2
    if s.kind == CHANG_ETA:
        if s.dim == 6:
            return _Z.direct_sum(_Z2)
        if s.dim == 7:
            return _0
    if s.kind == CHANG_R and s.dim == 6:
        return _Z.direct_sum(_Z2)
    if s.kind == MOORE_ETA_LIFT and s.dim == 7:
        return _Z2
    if s.kind == CHANG_IP_ETA_LIFT and s.dim == 7:
        return _Z.direct_sum(_Z2)
    if s.kind == SPHERE_ETA_SQ and s.dim == 7:
        return _Z2
    if s.kind == MOORE_ETA_SQ and s.dim == 7:
        return _Z2
    raise UnsupportedSummand(f"no real K-theory entry for {s.render()}")


def maps_to_s4(s: ElementaryComplex) -> tuple[FgAbGroup, bool]:
    """Homotopy classes of based maps from one single-suspension summand
    into the four-sphere.  The flag marks entries implied by connectivity
    or dimension rather than tabulated."""
    if s.kind == SPHERE:
        table = {2: _0, 3: _0, 4: _Z, 5: _Z2, 6: _Z2}
        if s.dim in table:
            return table[s.dim], False
    if s.kind == MOORE:
        if s.dim == 4:
            return FgAbGroup.cyclic(s.order), False
        if s.dim in (3, 5) and s.order % 2 == 1:
            return _0, True
    if s.kind == CHANG_ETA:
        if s.dim == 5:
            return _0, False
        if s.dim == 6:
            return _Z, False
    if s.kind == CHANG_R and s.dim == 5:
        return FgAbGroup.cyclic(2 ** (s.r + 1)), False
    if s.kind == MOORE_ETA_LIFT and s.dim == 6:
        return (FgAbGroup.cyclic(2 ** (s.r - 1)) if s.r > 1 else _0), False
    if s.kind == CHANG_IP_ETA_LIFT and s.dim == 6:
        return FgAbGroup.cyclic(2**s.r), False
    if s.kind == SPHERE_ETA_SQ and s.dim == 6:
        return _0, False
    if s.kind == MOORE_ETA_SQ and s.dim == 6:
        return FgAbGroup.cyclic(2 ** (s.r + 1)), False
    raise UnsupportedSummand(f"no maps-to-S^4 entry for {s.render()}")


# -- assembled invariants ----------------------------------------------------


def k_closed_form(desc: ManifoldDescriptor) -> FgAbGroup:
    """Z^(d+l) plus two copies of the odd linking torsion."""
    return FgAbGroup.free(desc.d + desc.l).direct_sum(
        desc.h1_torsion, desc.h1_torsion
    )


def ko_closed_form(desc: ManifoldDescriptor) -> FgAbGroup:
    """Z^l plus one Z/2 for each of l, d, and the two-primary summands."""
    n = desc.l + desc.d + len(desc.two_primary_exponents)
    return FgAbGroup.from_primary(desc.l, [(2, 1)] * n)


def _assemble(summands, table) -> GroupComputation:
    contribs = tuple(Contribution(s, table(s)) for s in summands)
    return GroupComputation(direct_sum(*(c.group for c in contribs)), contribs)


def k_group(desc: ManifoldDescriptor) -> GroupComputation:
    """Reduced complex K-theory of the five-complex."""
    comp = _assemble(double_suspension_decomposition(desc).summands, k_of_summand)
    assert comp.group == k_closed_form(desc), "complex K-theory table out of balance"
    return comp


def ko_group(desc: ManifoldDescriptor) -> GroupComputation:
    """Reduced real K-theory of the five-complex."""
    comp = _assemble(double_suspension_decomposition(desc).summands, ko_of_summand)
    assert comp.group == ko_closed_form(desc), "real K-theory table out of balance"
    return comp


def pi3(desc: ManifoldDescriptor) -> FgAbGroup:
    """Third cohomotopy group of the five-complex, in closed form.

    The free part always has rank d.  The elementary two-torsion has one
    generator per surviving five-sphere of the suspension splitting, plus
    one more from the top cell in the null case only.  Each absorbed
    two-primary summand of exponent r contributes Z/2^(r+1), modified on
    the single summand the top attachment interacts with; the unconsumed
    part of the degree-two torsion comes along untouched except when the
    top attachment deletes one summand outright.
    """
    case = desc.case
    exps = desc.two_primary_exponents
    two_rank = desc.l - desc.c1 - desc.c2 + (1 if case.kind == "null" else 0)
    assert two_rank >= 0
    drop = case.index if case.kind in ("tilde_eta", "i_eta_sq") else None
    parts = [
        FgAbGroup.free(desc.d),
        FgAbGroup.from_primary(0, [(2, 1)] * two_rank),
        desc.remaining_torsion(extra=drop),
    ]
    for j in desc.consumed:
        if case.kind == "ip_tilde_eta" and j == case.index:
            continue
        parts.append(FgAbGroup.cyclic(2 ** (exps[j] + 1)))
    if case.kind == "tilde_eta" and case.r > 1:
        parts.append(FgAbGroup.cyclic(2 ** (case.r - 1)))
    elif case.kind == "ip_tilde_eta":
        parts.append(FgAbGroup.cyclic(2**case.r))
    elif case.kind == "i_eta_sq":
        parts.append(FgAbGroup.cyclic(2 ** (case.r + 1)))
    return direct_sum(*parts)


def pi4_sigma_crosscheck(desc: ManifoldDescriptor) -> GroupComputation:
    """Recompute pi3 as maps from the single suspension to the
    four-sphere, one wedge summand at a time."""
    contribs = []
    for s in suspension_decomposition(desc).summands:
        g, implied = maps_to_s4(s)
        contribs.append(Contribution(s, g, implied))
    return GroupComputation(
        direct_sum(*(c.group for c in contribs)), tuple(contribs)
    )


def hurewicz_cohomotopy(desc: ManifoldDescriptor, i: int) -> FgAbGroup:
    """Cohomotopy in the degrees where it reduces to cohomology: degree
    one (maps to the circle) and degree five (top-degree maps classified
    by their degree)."""
    if i == 1:
        return FgAbGroup.free(desc.l)
    if i == 5:
        return _Z
    raise ValueError(f"cohomotopy in degree {i} is not a homology computation here")
