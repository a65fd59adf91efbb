"""Deformation-algebra profiles and Gopakumar-Vafa lower bounds.

For each heart index i = 0..N/2 the sliced deformation algebra FL_i^def (the
base-change of L_i^def = End(V_{i-1} (+) V_i)/[V_i] to a generic hyperplane
slice) has a quiver with a recorded number of loops, a dimension computable by
knitting, and an abelianisation dimension.  L_i^def is noncommutative exactly
when the quiver has two loops.  The abelianisation dimensions assemble into
lower bounds for the GV invariants n_1..n_l of the flopping curve, via the
placement of O_{kC} in the simples helix; dim A_con is bounded below by
sum k^2 n_k.

The loops and abelianisation columns are recorded table data (they come from
hand-found presentations); the sliced dimension alone has an in-repo oracle and
is re-verified against knitting at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .helix import SheafExpr, simple_at, thick
from .knitting import DEF_DIMS, canonical_placement, sliced_def_dim
from .numerics import LENGTHS, for_length

__all__ = ["DeformationProfile", "GvBounds", "profile", "gv_bounds",
           "strictly_noncommutative", "possibly_spherical", "acon_from_gv",
           "KNOWN_LOWEST_GV"]

# Loop counts of the quiver of FL_i^def, i = 0..N/2, per length.
_LOOPS = {
    1: (0,),
    2: (2, 0),
    3: (2, 0, 1),
    4: (2, 0, 1, 2),
    5: (2, 0, 1, 1, 0, 2),
    6: (2, 0, 1, 1, 2, 1, 2),
}

# dim of the abelianisation of FL_i^def, i = 0..N/2, per length.
_DIMS_AB = {
    1: (1,),
    2: (3, 1),
    3: (5, 1, 3),
    4: (6, 1, 2, 4),
    5: (7, 1, 2, 4, 1, 6),
    6: (6, 1, 2, 3, 4, 2, 6),
}

# Explicit presentations, where recorded (length 3 only).
_PRESENTATIONS = {
    (3, 0): "C<x,y>/(x^2, y^2, xy+yx)",
    (3, 1): "C",
    (3, 2): "C[x]/x^3",
}

# Example flops with the lowest currently known GV invariants (annotation only;
# each entry is (n_1..n_l, dim A_con), componentwise >= the bounds below).
KNOWN_LOWEST_GV = {
    3: ((6, 3, 1), 27),
    4: ((6, 5, 2, 1), 60),
    5: ((8, 6, 4, 2, 1), 125),
}


@dataclass(frozen=True)
class DeformationProfile:
    ell: int
    i: int
    loops: int
    dim_sliced: int
    dim_ab_sliced: int
    commutative: bool
    presentation: str | None = None

    def __post_init__(self):
        if self.dim_ab_sliced > self.dim_sliced:
            raise ValueError("abelianisation cannot exceed the algebra")
        if self.commutative != (self.loops <= 1):
            raise ValueError("commutative iff the quiver has <= 1 loops")
        if self.loops <= 1 and self.dim_ab_sliced != self.dim_sliced:
            raise ValueError("<= 1 loops forces a commutative slice")

    def to_json(self) -> dict:
        return {"ell": self.ell, "i": self.i, "loops": self.loops,
                "dim_sliced": self.dim_sliced,
                "dim_ab_sliced": self.dim_ab_sliced,
                "commutative": self.commutative,
                "presentation": self.presentation}


@dataclass(frozen=True)
class GvBounds:
    ell: int
    bounds: tuple  # (n_1, .., n_l) lower bounds
    acon_bound: int

    def __post_init__(self):
        if self.bounds[-1] < 1:
            raise ValueError("n_l >= 1 always")
        if self.acon_bound != acon_from_gv(self.bounds):
            raise ValueError("acon_bound must equal sum k^2 n_k")

    def to_json(self) -> dict:
        return {"ell": self.ell, "bounds": list(self.bounds),
                "acon_bound": self.acon_bound}


def acon_from_gv(ns) -> int:
    """dim A_con = sum over k of k^2 n_k, applied to bounds or exact values."""
    return sum(k * k * n for k, n in enumerate(ns, start=1))


@lru_cache(maxsize=None)
def profile(ell: int, i: int) -> DeformationProfile:
    """Canonical table row for FL_i^def; the sliced dimension is re-verified
    against the knitting oracle at construction."""
    if ell not in _LOOPS:
        raise ValueError(f"length must be 1..6, got {ell}")
    if not 0 <= i < len(_LOOPS[ell]):
        raise ValueError(f"i must be in 0..N/2, got {i}")
    dim = DEF_DIMS[ell][i]
    knitted = sliced_def_dim(ell, i, canonical_placement(ell))
    if knitted != dim:
        raise AssertionError(f"knitting disagrees with the table at ({ell},{i}):"
                             f" {knitted} != {dim}")
    loops = _LOOPS[ell][i]
    return DeformationProfile(ell, i, loops, dim, _DIMS_AB[ell][i],
                              commutative=loops <= 1,
                              presentation=_PRESENTATIONS.get((ell, i)))


def _helix_index_of_thickening(k: int, ell: int) -> int:
    """Index i in 0..N/2 with S_i = O_{kC} up to twist (i = 0 for k = 1)."""
    if k == 1:
        return 0
    half = for_length(ell).N // 2
    for i in range(1, half + 1):
        s = simple_at(i, ell)
        if (s.base, s.param) == (thick(k).base, thick(k).param):
            return i
    raise AssertionError(f"O_{{{k}C}} not found in the helix for length {ell}")


@lru_cache(maxsize=None)
def gv_bounds(ell: int) -> GvBounds:
    """Lower bounds n_k >= dim (FL_i^def)_ab at the helix index of O_{kC}.

    The k = 1 bound at length 2 is 4, not the abelianisation dimension 3: there
    the quiver has two loops and the abelianisation of any algebra on two loops
    with the recorded dimension is at least 4-dimensional.  This strengthening
    is applied only at length 2 (elsewhere the k = 1 abelianisation is already
    larger).
    """
    bounds = []
    for k in range(1, ell + 1):
        if k == 1 and ell == 2:
            bounds.append(4)
        else:
            bounds.append(profile(ell, _helix_index_of_thickening(k, ell))
                          .dim_ab_sliced)
    bounds = tuple(bounds)
    return GvBounds(ell, bounds, acon_from_gv(bounds))


def _helix_membership(e: SheafExpr, ell: int) -> tuple:
    """(base, k) of a simples-helix member up to twist and shift, or raise."""
    base, k = e.base, e.param
    if base == "curve":
        return ("thick", 1)  # any O_C(a) is a twist of the zeroth member
    if base == "thick" and 2 <= k <= ell:
        return ("thick", k)
    if base == "dualthick" and 3 <= k <= ell:
        return ("dualthick", k)
    if base in ("zed", "zedomega") and ell in (5, 6):
        return (base, 0)
    raise ValueError(f"{e} is not in the length-{ell} simples helix")


def strictly_noncommutative(e: SheafExpr, ell: int) -> bool:
    """True when noncommutative deformations of e are essential: O_{aC} with
    2a <= l (the reduced curve counts as a = 1), plus w_{3C} at length 6."""
    base, k = _helix_membership(e, ell)
    if base == "thick":
        return 2 * k <= ell
    if base == "dualthick":
        return k == 3 and ell == 6
    return False


def possibly_spherical(e: SheafExpr, ell: int) -> bool:
    """True when e can be a spherical object: the maximal thickenings O_{lC}
    and w_{lC} for every length, and Z, Z^w exactly at length 5."""
    base, k = _helix_membership(e, ell)
    if base in ("thick", "dualthick"):
        return k == ell
    return ell == 5
