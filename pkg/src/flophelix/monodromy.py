"""Typed word calculus on the strip groupoid and its K-theory shadow.

Nodes are the algebraic points p_j (one per tilted algebra) together with the
two geometric points X and X+.  Letters are paths: MutFwd(i): p_i -> p_{i+1}
over the i-th puncture and MutBwd(i): p_{i+1} -> p_i under it (MutBwd is NOT
the formal inverse of MutFwd); Beta: p_j -> p_{j+N} and BetaInv its inverse
(the only relation imposed on reduction, beyond formal inverses); Flop:
X+ -> X and FlopInv: X -> X+; the links Psi: X -> p_0 and PsiPlus: X+ -> p_1;
and twist loops TensorX(k), TensorXPlus(k).

The loop around the i-th equatorial puncture is q_i = kappa_i^{-1} (MutBwd(i)
MutFwd(i)) kappa_i, and the polar loops are q_- = beta^{-1} MutFwd(N-1..0) and
q_+ = MutBwd(0..N-1) beta, all based at p_0.  On the rank-2 finite-length K_0
lattice each mutation acts by an involution M_i determined by parity and n_i,
and beta acts trivially except for the period-1 case, where it swaps the basis.

The geometric loops (two basepoints X, X+) are built over the extended
alphabet; the single functorial input PsiPlus FlopInv = MutFwd(0) Psi rewrites
them into conjugates of the algebraic loops, which is checked at word level.

Internally letters compose left-to-right in application order; rendering uses
the right-to-left composition convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .numerics import for_length, n_at

__all__ = ["StripNode", "Letter", "FunctorWord", "WordSyntaxError",
           "WordTypeError", "p", "X", "XPLUS", "mutf", "mutb", "beta",
           "beta_inv", "kappa", "lambda_word", "loop_q", "loop_q_minus",
           "loop_q_plus", "reduce", "k_matrix", "mutation_matrix",
           "beta_matrix", "mat_mul", "mat_inv", "IDENT", "SWAP",
           "identity_word", "psi_conjugate",
           "two_basepoint_words", "two_basepoint_check",
           "rewrite_flop", "puncture_count", "parse_word", "sphere_relation"]


class WordSyntaxError(ValueError):
    pass


class WordTypeError(ValueError):
    pass


@dataclass(frozen=True)
class StripNode:
    kind: str  # "alg" or "geom"
    j: int = 0  # algebra index, or 0 for geometric nodes
    side: str = ""  # "X" or "X+" for geometric nodes

    def __str__(self):
        return f"p{self.j}" if self.kind == "alg" else self.side


def p(j: int) -> StripNode:
    return StripNode("alg", j)


X = StripNode("geom", side="X")
XPLUS = StripNode("geom", side="X+")

_RENDER = {"mutf": "MutFwd", "mutb": "MutBwd", "beta": "Beta",
           "betainv": "BetaInv", "flop": "Flop", "flopinv": "FlopInv",
           "psi": "Psi", "psiplus": "PsiPlus", "tensorx": "TensorX",
           "tensorxp": "TensorXPlus"}
_PARAMETRIC = {"mutf", "mutb", "beta", "betainv", "tensorx", "tensorxp"}


@dataclass(frozen=True)
class Letter:
    kind: str
    param: int = 0  # mutation index; beta basepoint; tensor degree
    inverted: bool = False  # formal inverse (flips source/target)

    def __post_init__(self):
        if self.kind not in _RENDER:
            raise ValueError(f"unknown letter kind {self.kind!r}")

    def _endpoints(self):
        k, i = self.kind, self.param
        return {
            "mutf": (p(i), p(i + 1)),
            "mutb": (p(i + 1), p(i)),
            "beta": (p(i), None),  # target filled per word period
            "betainv": (None, p(i)),
            "flop": (XPLUS, X),
            "flopinv": (X, XPLUS),
            "psi": (X, p(0)),
            "psiplus": (XPLUS, p(1)),
            "tensorx": (X, X),
            "tensorxp": (XPLUS, XPLUS),
        }[k]

    def source(self, N: int) -> StripNode:
        s, t = self._typed(N)
        return s

    def target(self, N: int) -> StripNode:
        s, t = self._typed(N)
        return t

    def _typed(self, N: int):
        k, i = self.kind, self.param
        if k == "beta":
            s, t = p(i), p(i + N)
        elif k == "betainv":
            s, t = p(i + N), p(i)
        else:
            s, t = self._endpoints()
        return (t, s) if self.inverted else (s, t)

    def inverse(self) -> "Letter":
        if self.inverted:
            return Letter(self.kind, self.param)
        flips = {"beta": "betainv", "betainv": "beta",
                 "flop": "flopinv", "flopinv": "flop"}
        if self.kind in flips:
            return Letter(flips[self.kind], self.param)
        if self.kind in ("tensorx", "tensorxp"):
            return Letter(self.kind, -self.param)
        return Letter(self.kind, self.param, inverted=True)

    def __str__(self):
        name = _RENDER[self.kind]
        if self.kind in _PARAMETRIC and not (
                self.kind in ("beta", "betainv") and self.param == 0):
            name += f"({self.param})"
        return f"inv({name})" if self.inverted else name


def mutf(i: int) -> Letter:
    return Letter("mutf", i)


def mutb(i: int) -> Letter:
    return Letter("mutb", i)


def beta(j: int = 0) -> Letter:
    return Letter("beta", j)


def beta_inv(j: int = 0) -> Letter:
    return Letter("betainv", j)


@dataclass(frozen=True)
class FunctorWord:
    """A typed path: letters in application order (leftmost acts first).

    Rendering reverses into the composition convention, so str(loop_q_minus(2))
    reads BetaInv . MutFwd(1) . MutFwd(0).
    """

    ell: int
    source: StripNode
    target: StripNode
    letters: tuple

    def __post_init__(self):
        N = for_length(self.ell).N
        at = self.source
        for letter in self.letters:
            if letter.source(N) != at:
                raise WordTypeError(
                    f"letter {letter} expects source {letter.source(N)}, "
                    f"path is at {at}")
            at = letter.target(N)
        if at != self.target:
            raise WordTypeError(f"path ends at {at}, not {self.target}")

    @classmethod
    def from_letters(cls, ell: int, letters, source: StripNode) -> "FunctorWord":
        letters = tuple(letters)
        N = for_length(ell).N
        target = letters[-1].target(N) if letters else source
        return cls(ell, source, target, letters)

    def then(self, other: "FunctorWord") -> "FunctorWord":
        """self followed by other (composition other o self)."""
        if self.ell != other.ell:
            raise WordTypeError("cannot compose words of different lengths")
        if other.source != self.target:
            raise WordTypeError(
                f"cannot compose: {other.source} != {self.target}")
        return FunctorWord(self.ell, self.source, other.target,
                           self.letters + other.letters)

    def inverse(self) -> "FunctorWord":
        return FunctorWord(self.ell, self.target, self.source,
                           tuple(l.inverse() for l in reversed(self.letters)))

    @property
    def closed(self) -> bool:
        return self.source == self.target

    def __str__(self):
        if not self.letters:
            return f"Id@{self.source}"
        return " . ".join(str(l) for l in reversed(self.letters))

    def to_json(self) -> dict:
        return {"source": str(self.source), "target": str(self.target),
                "letters": [str(l) for l in reversed(self.letters)],
                "convention": "composition order (rightmost acts first)"}


def identity_word(ell: int, node: StripNode) -> FunctorWord:
    return FunctorWord(ell, node, node, ())


def kappa(i: int, ell: int) -> FunctorWord:
    """Forward mutations p_0 -> p_i; kappa(0) is the empty word."""
    if i < 0:
        raise ValueError("kappa is defined for i >= 0; use lambda_word below 0")
    return FunctorWord.from_letters(ell, [mutf(j) for j in range(i)], p(0))


def lambda_word(i: int, ell: int) -> FunctorWord:
    """Mutations p_i -> p_0 for i <= 0 (the negative-side analogue of kappa)."""
    if i > 0:
        raise ValueError("lambda_word is defined for i <= 0")
    return FunctorWord.from_letters(ell, [mutf(j) for j in range(i, 0)], p(i))


def loop_q(i: int, ell: int) -> FunctorWord:
    """Equatorial loop at p_0: kappa_i^{-1} (MutBwd(i) MutFwd(i)) kappa_i,
    travelling over then under the i-th puncture."""
    if i < 0:
        raise ValueError("equatorial loops are indexed by i >= 0")
    k = kappa(i, ell)
    inner = FunctorWord.from_letters(ell, [mutf(i), mutb(i)], p(i))
    return k.then(inner).then(k.inverse())


def loop_q_minus(ell: int) -> FunctorWord:
    """Polar loop beta^{-1} (MutFwd(N-1) ... MutFwd(0)) at p_0."""
    N = for_length(ell).N
    return FunctorWord.from_letters(
        ell, [mutf(j) for j in range(N)] + [beta_inv(0)], p(0))


def loop_q_plus(ell: int) -> FunctorWord:
    """Polar loop (MutBwd(0) ... MutBwd(N-1)) beta at p_0."""
    N = for_length(ell).N
    return FunctorWord.from_letters(
        ell, [beta(0)] + [mutb(j) for j in reversed(range(N))], p(0))


def reduce(w: FunctorWord) -> FunctorWord:
    """Free reduction: cancel adjacent inverse pairs (formal inverses, the
    Beta/BetaInv relation, Flop/FlopInv).  MutBwd never cancels MutFwd."""
    stack = []
    for letter in w.letters:
        if stack and letter == stack[-1].inverse():
            stack.pop()
        else:
            stack.append(letter)
    return FunctorWord(w.ell, w.source, w.target, tuple(stack))


# --- K-theory representation ------------------------------------------------

IDENT = ((1, 0), (0, 1))
SWAP = ((0, 1), (1, 0))


def mat_mul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2))
                       for j in range(2)) for i in range(2))


def mat_inv(a):
    det = a[0][0] * a[1][1] - a[0][1] * a[1][0]
    if det not in (1, -1):
        raise ValueError("not invertible over the integers")
    return ((a[1][1] // det, -a[0][1] // det),
            (-a[1][0] // det, a[0][0] // det))


def mutation_matrix(i: int, ell: int):
    """Action of either mutation over/under puncture i on ([S_0], [S_1]):
    the fixed simple goes to minus itself, the other to dim vector (1, n_i)."""
    n = n_at(i, ell)
    return ((1, 0), (n, -1)) if i % 2 == 0 else ((-1, n), (0, 1))


def beta_matrix(ell: int):
    """Beta preserves the two simples for l > 1 and swaps them for l = 1."""
    return SWAP if ell == 1 else IDENT


def k_matrix(w: FunctorWord, ell: int):
    """Product of letter matrices in application order (last letter leftmost)."""
    out = IDENT
    for letter in w.letters:
        if letter.kind in ("mutf", "mutb"):
            m = mutation_matrix(letter.param, ell)
        elif letter.kind in ("beta", "betainv"):
            m = beta_matrix(ell)
        else:
            raise ValueError(f"non-algebraic letter {letter} has no K-matrix")
        if letter.inverted:
            m = mat_inv(m)
        out = mat_mul(m, out)
    return out


# --- geometric loops with two basepoints ------------------------------------


def rewrite_flop(w: FunctorWord) -> FunctorWord:
    """Apply PsiPlus FlopInv = MutFwd(0) Psi (and its inverse pair) wherever
    the left-hand pattern occurs as adjacent letters, in application order."""
    rules = {
        (Letter("flopinv"), Letter("psiplus")):
            (Letter("psi"), mutf(0)),
        (Letter("psiplus", inverted=True), Letter("flop")):
            (mutf(0).inverse(), Letter("psi", inverted=True)),
    }
    letters = list(w.letters)
    changed = True
    while changed:
        changed = False
        for idx in range(len(letters) - 1):
            pair = (letters[idx], letters[idx + 1])
            if pair in rules:
                letters[idx:idx + 2] = rules[pair]
                changed = True
                break
    return FunctorWord(w.ell, w.source, w.target, tuple(letters))


def psi_conjugate(w: FunctorWord) -> FunctorWord:
    """Psi w Psi^{-1}: transport a loop at p_0 to a loop at X."""
    psi = FunctorWord.from_letters(w.ell, [Letter("psi")], X)
    return psi.then(w).then(psi.inverse())


@lru_cache(maxsize=None)
def two_basepoint_words(ell: int) -> dict:
    """The geometric loops of the two-basepoint groupoid, exactly as displayed:

      b_i = Flop (Phi_1 PsiPlus)^{-1} ... Phi_{i-1}^{-1} (Phi_i Phi_i)
                Phi_{i-1} ... (Phi_1 PsiPlus) FlopInv            (loop at X)
      c_i = FlopInv (Phi_{-1} Psi)^{-1} ... (under-side mirror)  (loop at X+)
      a   = (Psi^{-1} Phi_{-1}) ... Phi_{-N/2} beta^{-1}
                Phi_{N/2-1} ... (Phi_1 PsiPlus) FlopInv          (loop at X)
      d   = (PsiPlus^{-1} Phi_1) ... Phi_{N/2-1} beta
                Phi_{-N/2} ... (Phi_{-1} Psi) Flop               (loop at X+)

    The same geometric arrow links the two poles in both directions, so the
    flop letter is oriented by typing in each word.  Keys are "a", "d" and
    ("b", i), ("c", i) for i = 1..max(N/2, 1).
    """
    N = for_length(ell).N
    h = (N + 1) // 2
    out = {}
    for i in range(1, max(N // 2, 1) + 1):
        up = [mutf(j) for j in range(1, i)]
        b = ([Letter("flopinv"), Letter("psiplus")] + up + [mutf(i), mutb(i)]
             + [l.inverse() for l in reversed(up)]
             + [Letter("psiplus", inverted=True), Letter("flop")])
        out[("b", i)] = FunctorWord.from_letters(ell, b, X)
        down = [mutb(j) for j in range(-1, -i, -1)]
        c = ([Letter("flop"), Letter("psi")] + down + [mutb(-i), mutf(-i)]
             + [l.inverse() for l in reversed(down)]
             + [Letter("psi", inverted=True), Letter("flopinv")])
        out[("c", i)] = FunctorWord.from_letters(ell, c, XPLUS)
    a = ([Letter("flopinv"), Letter("psiplus")]
         + [mutf(j) for j in range(1, h)] + [beta_inv(h - N)]
         + [mutf(j) for j in range(h - N, 0)]
         + [Letter("psi", inverted=True)])
    out["a"] = FunctorWord.from_letters(ell, a, X)
    d = ([Letter("flop"), Letter("psi")]
         + [mutb(j) for j in range(-1, h - N - 1, -1)] + [beta(h - N)]
         + [mutb(j) for j in range(h - 1, 0, -1)]
         + [Letter("psiplus", inverted=True)])
    out["d"] = FunctorWord.from_letters(ell, d, XPLUS)
    for w in out.values():
        assert w.closed
    return out


def two_basepoint_check(ell: int) -> bool:
    """After the flop rewrite, every b_i is the Psi-conjugate of the algebraic
    loop q_i; at period 1 the polar word a likewise reduces to the conjugate of
    q_- (for longer periods a traverses the translation loop with the opposite
    orientation on the far side, so only typing and closure are asserted)."""
    words = two_basepoint_words(ell)
    N = for_length(ell).N
    for i in range(1, max(N // 2, 1) + 1):
        got = reduce(rewrite_flop(words[("b", i)]))
        want = reduce(psi_conjugate(loop_q(i, ell)))
        if got != want:
            return False
    if ell == 1:
        if reduce(rewrite_flop(words["a"])) != \
                reduce(psi_conjugate(loop_q_minus(ell))):
            return False
    return True


def sphere_relation(ell: int) -> FunctorWord:
    """The word q_0^{-1} q_+ q_- (freely reduced).  Empty exactly at period 1;
    for longer periods the mutation letters obstruct free reduction and only
    the K-matrix of the relation is trivial."""
    w = loop_q_minus(ell).then(loop_q_plus(ell)).then(loop_q(0, ell).inverse())
    return reduce(w)


def puncture_count(ell: int) -> int:
    """Punctures of the stability 2-sphere: N equatorial plus the two poles."""
    return for_length(ell).N + 2


# --- word grammar for the CLI -----------------------------------------------


def _split_top(expr: str, sep: str) -> list:
    parts, depth, cur = [], 0, []
    for ch in expr:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise WordSyntaxError(f"unbalanced ')' in {expr!r}")
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise WordSyntaxError(f"unbalanced '(' in {expr!r}")
    parts.append("".join(cur))
    return parts


def parse_word(expr: str, ell: int) -> FunctorWord:
    """Grammar: atoms q0..q{N-1}, qminus, qplus, beta, phi_fwd(i), phi_bwd(i),
    inv(<word>); '.' composes in the right-to-left convention."""
    N = for_length(ell).N
    parts = [s.strip() for s in _split_top(expr, ".")]
    if any(not s for s in parts):
        raise WordSyntaxError(f"empty factor in {expr!r}")
    word = None
    for atom in reversed(parts):  # rightmost factor acts first
        w = _parse_atom(atom, ell, N)
        word = w if word is None else word.then(w)
    return word


def _parse_atom(atom: str, ell: int, N: int) -> FunctorWord:
    if atom.startswith("inv(") and atom.endswith(")"):
        return parse_word(atom[4:-1], ell).inverse()
    if atom == "qminus":
        return loop_q_minus(ell)
    if atom == "qplus":
        return loop_q_plus(ell)
    if atom == "beta":
        return FunctorWord.from_letters(ell, [beta(0)], p(0))
    for name, mk in (("phi_fwd", mutf), ("phi_bwd", mutb)):
        if atom.startswith(name + "(") and atom.endswith(")"):
            try:
                i = int(atom[len(name) + 1:-1])
            except ValueError:
                raise WordSyntaxError(f"bad index in {atom!r}") from None
            letter = mk(i)
            return FunctorWord.from_letters(
                ell, [letter], letter.source(N))
    if atom.startswith("q") and atom[1:].isdigit():
        i = int(atom[1:])
        if not 0 <= i < N:
            raise WordTypeError(f"q{i} out of range 0..{N - 1} at length {ell}")
        return loop_q(i, ell)
    raise WordSyntaxError(f"unknown word atom {atom!r}")
