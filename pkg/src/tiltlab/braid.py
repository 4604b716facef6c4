"""Garside normal forms for Artin groups of ADE type.

Elements of the Weyl group are stored as integer matrices acting on the root
lattice; lengths and descent sets come from the action on positive roots.
A braid word (letters = signed generator indices) is normalized to the left
greedy form Delta^d . f_1 ... f_k, with every factor a lift of a nontrivial
Weyl element and consecutive pairs left-weighted.  Equality of normal forms
decides the word problem, which is what heart bookkeeping relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NonSphericalType
from .quiver import Quiver, RootData, root_data

IntMatrix = tuple[tuple[int, ...], ...]
Letter = tuple[int, int]  # (generator index, +1 or -1)


def _identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _apply(m: IntMatrix, v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


class WeylGroup:
    """Weyl group of the underlying ADE diagram, with Garside tables on demand."""

    def __init__(self, quiver: Quiver, rd: RootData | None = None):
        rd = rd or root_data(quiver)
        if not rd.is_dynkin:
            raise NonSphericalType("braid machinery needs an ADE diagram")
        self.n = quiver.n
        self.roots = rd.positive_roots
        cartan = [[2 if i == j else 0 for j in range(self.n)] for i in range(self.n)]
        for s, t in quiver.arrows:
            if s != t:
                cartan[s][t] -= 1
                cartan[t][s] -= 1
        self.cartan = tuple(tuple(row) for row in cartan)
        self.gens = tuple(self._reflection(i) for i in range(self.n))
        self.id = _identity(self.n)
        self.w0 = self._longest()
        self.w0_inv_cache: dict[IntMatrix, IntMatrix] = {}

    def _reflection(self, i: int) -> IntMatrix:
        rows = []
        for r in range(self.n):
            if r == i:
                rows.append(tuple((1 if j == i else 0) - self.cartan[i][j] for j in range(self.n)))
            else:
                rows.append(tuple(1 if j == r else 0 for j in range(self.n)))
        return tuple(rows)

    def mul(self, a: IntMatrix, b: IntMatrix) -> IntMatrix:
        return _mul(a, b)

    @lru_cache(maxsize=None)
    def _neg_count(self, w: IntMatrix) -> int:
        return sum(1 for r in self.roots if any(x < 0 for x in _apply(w, r)))

    def length(self, w: IntMatrix) -> int:
        return self._neg_count(w)

    def right_descents(self, w: IntMatrix) -> list[int]:
        out = []
        for i in range(self.n):
            img = _apply(w, tuple(1 if j == i else 0 for j in range(self.n)))
            if any(x < 0 for x in img):
                out.append(i)
        return out

    def inverse(self, w: IntMatrix) -> IntMatrix:
        cached = self.w0_inv_cache.get(w)
        if cached is not None:
            return cached
        # Weyl matrices over a root basis have integer inverses; build by solving.
        from .linalg import mat
        from .quiver import _invert

        inv = tuple(tuple(int(x) for x in row) for row in _invert(mat(w)))
        self.w0_inv_cache[w] = inv
        return inv

    def left_descents(self, w: IntMatrix) -> list[int]:
        return self.right_descents(self.inverse(w))

    def _longest(self) -> IntMatrix:
        w = _identity(self.n)
        while True:
            ds = self.right_descents(w)
            asc = [i for i in range(self.n) if i not in ds]
            if not asc:
                return w
            w = _mul(w, self.gens[asc[0]])

    def tau(self, w: IntMatrix) -> IntMatrix:
        """Conjugation by the Garside element: w -> w0 w w0."""
        return _mul(self.w0, _mul(w, self.w0))

    def reduced_word(self, w: IntMatrix) -> tuple[int, ...]:
        """Lexicographically least reduced word (greedy on left descents)."""
        out = []
        cur = w
        while cur != self.id:
            i = self.left_descents(cur)[0]
            out.append(i)
            cur = _mul(self.gens[i], cur)
        return tuple(out)


@dataclass(frozen=True)
class NormalForm:
    """Left greedy form Delta^power . factors (factors are Weyl matrices)."""

    power: int
    factors: tuple[IntMatrix, ...]

    def is_identity(self) -> bool:
        return self.power == 0 and not self.factors


class GarsideEngine:
    """Word problem solver for the Artin group of an ADE quiver."""

    def __init__(self, quiver: Quiver, rd: RootData | None = None):
        self.w = WeylGroup(quiver, rd)

    def _left_weighted(self, x: IntMatrix, y: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
        """Slide prefix letters of y into x until R(x) contains L(y)."""
        w = self.w
        while True:
            rx = set(w.right_descents(x))
            movable = [s for s in w.left_descents(y) if s not in rx]
            if not movable:
                return x, y
            s = movable[0]
            x = w.mul(x, w.gens[s])
            y = w.mul(w.gens[s], y)

    def _normalize_factors(self, power: int, factors: list[IntMatrix]) -> NormalForm:
        w = self.w
        changed = True
        while changed:
            changed = False
            i = 0
            while i < len(factors) - 1:
                nx, ny = self._left_weighted(factors[i], factors[i + 1])
                if (nx, ny) != (factors[i], factors[i + 1]):
                    factors[i], factors[i + 1] = nx, ny
                    changed = True
                    if i > 0:
                        i -= 1
                        continue
                i += 1
            # absorb identity factors and full twists
            out: list[IntMatrix] = []
            for f in factors:
                if f == w.id:
                    changed = changed or True
                    continue
                out.append(f)
            factors = out
            while factors and factors[0] == w.w0:
                factors.pop(0)
                power += 1
                changed = True
            # interior Delta factors bubble to the front through tau
            for i in range(len(factors)):
                if factors[i] == w.w0:
                    for j in range(i):
                        factors[j] = w.tau(factors[j])
                    factors.pop(i)
                    power += 1
                    changed = True
                    break
        return NormalForm(power, tuple(factors))

    def normal_form(self, letters: tuple[Letter, ...]) -> NormalForm:
        w = self.w
        power, factors = 0, []
        for gen, sign in letters:
            if sign > 0:
                factors.append(w.gens[gen])
            else:
                # x . s^{-1} = Delta^{-1} . tau(x) ... . (lift of w0 s)
                power -= 1
                factors = [w.tau(f) for f in factors]
                factors.append(w.mul(w.w0, w.gens[gen]))
            nf = self._normalize_factors(power, factors)
            power, factors = nf.power, list(nf.factors)
        return NormalForm(power, tuple(factors))

    def render(self, nf: NormalForm) -> str:
        if nf.is_identity():
            return "e"
        parts = []
        if nf.power:
            parts.append(f"D^{nf.power}" if nf.power != 1 else "D")
        for f in nf.factors:
            word = self.w.reduced_word(f)
            parts.append("".join(str(i) for i in word))
        return ".".join(parts)


@dataclass(frozen=True)
class BraidWord:
    """A word in the signed twist generators, compared via Garside normal forms."""

    letters: tuple[Letter, ...] = ()

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple((g, -s) for g, s in reversed(self.letters)))

    def conjugate_by(self, w: "BraidWord") -> "BraidWord":
        """w . self . w^{-1}"""
        return w * self * w.inverse()

    @staticmethod
    def generator(i: int, sign: int = 1) -> "BraidWord":
        return BraidWord(((i, sign),))

    @staticmethod
    def identity() -> "BraidWord":
        return BraidWord(())


def normal_form(engine: GarsideEngine, word: BraidWord) -> NormalForm:
    return engine.normal_form(word.letters)


def words_equal(engine: GarsideEngine, a: BraidWord, b: BraidWord) -> bool:
    return engine.normal_form(a.letters) == engine.normal_form(b.letters)
