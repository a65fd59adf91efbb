"""Symbolic calculus for the simples helix of a length-l flop.

The helix S_i (i in Z) is generated from a base region S_0 .. S_{N-1} by the
translation rule S_{i+N} = S_i (x) O(1), and independently satisfies the duality
rule S_{-i} = D(S_i)[-1].  Objects are symbolic: the structure sheaf of the
curve with a twist O_C(a), thickenings O_{kC}, their duals w_{kC}, and (for
l = 5, 6 only) the extension Z of O_{2C} by O_{3C} and its dual Z^w.

Everything is kept in a normal form in which equality is plain value equality:
twists on the reduced curve fold into the degree, w_C rewrites to O_C(-2), and
w_{2C} rewrites to O_{2C}(-1).  K-classes live on the rank-2 lattice with basis
([O_C(-1)], [O_pt]).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .numerics import for_length

__all__ = ["SheafExpr", "KClass", "TiltDescriptor", "curve", "thick",
           "dual_thick", "zed", "zed_omega", "simple_at", "dualize", "kclass",
           "tilt_descriptor", "mutation_class_check", "duality_closure_check"]

CURVE = "curve"
THICK = "thick"
DUAL_THICK = "dualthick"
ZED = "zed"
ZED_OMEGA = "zedomega"


@dataclass(frozen=True)
class SheafExpr:
    """Normal form of a helix object: base symbol, twist by O(m), shift [n].

    base/param: ("curve", a) for O_C(a); ("thick", k) for O_{kC}, k >= 2;
    ("dualthick", k) for w_{kC}, k >= 3; ("zed", 0) for Z; ("zedomega", 0)
    for Z^w.  Twists on the curve fold into a, and w_{2C} = O_{2C}(-1), so
    these shapes never appear.
    """

    base: str
    param: int
    twist: int = 0
    shift: int = 0

    def __post_init__(self):
        if self.base == CURVE:
            # twist folds into the degree on the reduced curve
            object.__setattr__(self, "param", self.param + self.twist)
            object.__setattr__(self, "twist", 0)
        elif self.base == THICK:
            if self.param < 2:
                raise ValueError("thick requires k >= 2 (k = 1 is the curve)")
        elif self.base == DUAL_THICK:
            if self.param < 3:
                raise ValueError("dualthick requires k >= 3 after normalization")
        elif self.base in (ZED, ZED_OMEGA):
            if self.param != 0:
                raise ValueError("Z carries no parameter")
        else:
            raise ValueError(f"unknown base {self.base!r}")

    def twisted(self, m: int) -> "SheafExpr":
        return SheafExpr(self.base, self.param, self.twist + m, self.shift)

    def shifted(self, n: int) -> "SheafExpr":
        return SheafExpr(self.base, self.param, self.twist, self.shift + n)

    def __str__(self):
        name = {
            CURVE: f"O_C({self.param})",
            THICK: f"O_{{{self.param}C}}",
            DUAL_THICK: f"w_{{{self.param}C}}",
            ZED: "Z",
            ZED_OMEGA: "Z^w",
        }[self.base]
        if self.base != CURVE and self.twist:
            name += f"({self.twist})"
        if self.shift:
            name += f"[{self.shift}]"
        return name

    def to_json(self) -> dict:
        return {"base": self.base, "k_or_a": self.param, "twist": self.twist,
                "shift": self.shift}


def curve(a: int, twist: int = 0, shift: int = 0) -> SheafExpr:
    return SheafExpr(CURVE, a, twist, shift)


def thick(k: int, twist: int = 0, shift: int = 0) -> SheafExpr:
    """O_{kC}(twist)[shift]; k = 1 normalizes to the curve."""
    if k == 1:
        return curve(twist, shift=shift)
    return SheafExpr(THICK, k, twist, shift)


def dual_thick(k: int, twist: int = 0, shift: int = 0) -> SheafExpr:
    """w_{kC}(twist)[shift] in normal form: w_C = O_C(-2), w_{2C} = O_{2C}(-1)."""
    if k == 1:
        return curve(-2 + twist, shift=shift)
    if k == 2:
        return thick(2, twist - 1, shift)
    return SheafExpr(DUAL_THICK, k, twist, shift)


def zed(twist: int = 0, shift: int = 0) -> SheafExpr:
    return SheafExpr(ZED, 0, twist, shift)


def zed_omega(twist: int = 0, shift: int = 0) -> SheafExpr:
    return SheafExpr(ZED_OMEGA, 0, twist, shift)


def dualize(e: SheafExpr) -> SheafExpr:
    """Apply D: D(O_{kC}) = w_{kC}[1], D(O_C(a)) = O_C(-2-a)[1], D(Z) = Z^w[1],
    D(F (x) O(m)) = D(F) (x) O(-m), D(F[n]) = D(F)[-n]; then normalize."""
    if e.base == CURVE:
        db = curve(-2 - e.param, shift=1)
    elif e.base == THICK:
        db = dual_thick(e.param, shift=1)
    elif e.base == DUAL_THICK:
        db = thick(e.param, shift=1)
    elif e.base == ZED:
        db = zed_omega(shift=1)
    else:
        db = zed(shift=1)
    return SheafExpr(db.base, db.param, db.twist - e.twist, db.shift - e.shift)


@dataclass(frozen=True)
class KClass:
    """Class on the rank-2 lattice with basis ([O_C(-1)], [O_pt])."""

    c: int
    p: int

    def __add__(self, other):
        return KClass(self.c + other.c, self.p + other.p)

    def __neg__(self):
        return KClass(-self.c, -self.p)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, k: int) -> "KClass":
        return KClass(k * self.c, k * self.p)

    def __str__(self):
        return f"({self.c}, {self.p})"


_BASE_CLASS = {
    # [O_C(a)] handled separately; [O_{kC}] = (k, 1) by the filtration
    # [O_{aC}] = [O_{(a-1)C}] + [O_C(-1)]; [Z] = (5, 2) from 0->O_3C->Z->O_2C->0.
    ZED: KClass(5, 2),
    ZED_OMEGA: KClass(5, -2),
}


def kclass(e: SheafExpr) -> KClass:
    if e.base == CURVE:
        k = KClass(1, e.param + 1)
    elif e.base == THICK:
        k = KClass(e.param, 1)
    elif e.base == DUAL_THICK:
        k = KClass(e.param, -1)  # [w_{kC}] = -[D(O_{kC})] via [F[1]] = -[F]
    else:
        k = _BASE_CLASS[e.base]
    k = KClass(k.c, k.p + e.twist * k.c)  # twist O(m): p += m*c
    if e.shift % 2:
        k = -k
    return k


@lru_cache(maxsize=None)
def _base_region(ell: int) -> tuple:
    """S_0 .. S_{N-1}."""
    N = for_length(ell).N
    if ell == 1:
        return (curve(-1),)
    down = [thick(k) for k in range(ell, 1, -1)]  # O_{lC} .. O_{2C}
    if ell in (5, 6):
        down.insert(len(down) - 1, zed())  # Z sits between O_{3C} and O_{2C}
    up = [dual_thick(k, twist=1) for k in range(3, ell + 1)]  # w_{3C}(1) ..
    if ell in (5, 6):
        up.insert(0, zed_omega(twist=1))
    region = [curve(-1)] + down + up
    assert len(region) == N
    return tuple(region)


def simple_at(i: int, ell: int) -> SheafExpr:
    """S_i via translation: S_{qN + r} = S_r (x) O(q)."""
    N = for_length(ell).N
    q, r = divmod(i, N)
    return _base_region(ell)[r].twisted(q)


@dataclass(frozen=True)
class TiltDescriptor:
    """Ordered simples (slot0, slot1) of the i-th tilted heart, with the ranks
    of the projective pair (V_{i-1}, V_i)."""

    index: int
    simples: tuple  # (slot0, slot1)
    projective_ranks: tuple

    @property
    def slot0(self):
        return self.simples[0]

    @property
    def slot1(self):
        return self.simples[1]


def _slots(i: int, ell: int) -> tuple:
    """Slot parity: for even i, (S_{i-1}[1], S_i); for odd i the pair reversed."""
    prev = simple_at(i - 1, ell).shifted(1)
    cur = simple_at(i, ell)
    return (prev, cur) if i % 2 == 0 else (cur, prev)


def tilt_descriptor(i: int, ell: int) -> TiltDescriptor:
    num = for_length(ell)
    if i >= 0:
        slots = _slots(i, ell)
    else:
        # negative side via duality from the heart at 1-i, order preserved
        s0, s1 = _slots(1 - i, ell)
        slots = (dualize(s0), dualize(s1))
        assert slots == _slots(i, ell), "duality and parity routes disagree"
    return TiltDescriptor(i, slots, (num.rank_at(i - 1), num.rank_at(i)))


def mutation_class_check(i: int, ell: int) -> bool:
    """K-class shadow of wall-crossing between hearts i and i+1.

    For even i the simples expand as [slot1_i] = -[slot1_{i+1}] and
    [slot0_i] = [slot0_{i+1}] + n_i [slot1_{i+1}] (dimension vector (1, n_i));
    for odd i the same with slots 0 and 1 exchanged.
    """
    n_i = for_length(ell).n_at(i)
    t0 = tilt_descriptor(i, ell)
    t1 = tilt_descriptor(i + 1, ell)
    if i % 2 == 0:
        fixed = kclass(t0.slot1) == -kclass(t1.slot1)
        moved = kclass(t0.slot0) == kclass(t1.slot0) + kclass(t1.slot1).scaled(n_i)
    else:
        fixed = kclass(t0.slot0) == -kclass(t1.slot0)
        moved = kclass(t0.slot1) == kclass(t1.slot1) + kclass(t1.slot0).scaled(n_i)
    return fixed and moved


def duality_closure_check(ell: int) -> bool:
    """Duality maps the simples of heart 1-i onto those of heart i preserving
    slot order; translation by O(1) preserves slot order for l > 1 and swaps it
    for l = 1 (odd period)."""
    N = for_length(ell).N
    for i in range(-N, N + 1):
        ti = tilt_descriptor(i, ell)
        tdual = tilt_descriptor(1 - i, ell)
        if (dualize(tdual.slot0), dualize(tdual.slot1)) != ti.simples:
            return False
        tnext = tilt_descriptor(i + N, ell)
        translated = (ti.slot0.twisted(1), ti.slot1.twisted(1))
        if ell == 1:
            translated = (translated[1], translated[0])
        if translated != tnext.simples:
            return False
    return True
