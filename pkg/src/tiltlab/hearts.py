"""Shifted-module objects of the bounded derived category and their hearts.

A Heart is an ordered tuple of simple DObjects with the dual projectives and
a braid word per simple (the word expresses the twist functor of that simple
in the standard generators; the Calabi-Yau layer consumes it).  Simple
tilting follows the cone formulas, with the new projective pinned down by
its class in the Grothendieck group plus the duality pairing.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import rep as rp
from .braid import BraidWord, GarsideEngine
from .errors import ConeNotIndecomposable, NonDynkinUnsupported
from .quiver import DimVector, Quiver, RootData, projective_dims, root_data
from .rep import Rep


@dataclass(frozen=True)
class DObject:
    """Indecomposable of D(Q): a positive root placed at an integer shift."""

    root: DimVector
    shift: int

    def shifted(self, k: int) -> "DObject":
        return DObject(self.root, self.shift + k)

    def kclass(self) -> tuple[int, ...]:
        sign = -1 if self.shift % 2 else 1
        return tuple(sign * x for x in self.root)


class Context:
    """Per-quiver caches: root data, canonical reps, Hom/Ext dimensions."""

    def __init__(self, quiver: Quiver):
        self.quiver = quiver
        self.root_data: RootData = root_data(quiver)
        self._reps: dict[DimVector, Rep] = {}
        self._hom: dict[tuple[DimVector, DimVector], int] = {}
        self._engine: GarsideEngine | None = None

    @property
    def n(self) -> int:
        return self.quiver.n

    @property
    def engine(self) -> GarsideEngine:
        if self._engine is None:
            self._engine = GarsideEngine(self.quiver, self.root_data)
        return self._engine

    def rep(self, root: DimVector) -> Rep:
        r = tuple(root)
        if r not in self._reps:
            self._reps[r] = rp.indecomposable_from_root(self.quiver, self.root_data, r)
        return self._reps[r]

    def hom_mod(self, a: DimVector, b: DimVector) -> int:
        key = (tuple(a), tuple(b))
        if key not in self._hom:
            self._hom[key] = rp.hom_dim(self.rep(a), self.rep(b))
        return self._hom[key]

    def ext_mod(self, a: DimVector, b: DimVector) -> int:
        from .quiver import euler_form

        return self.hom_mod(a, b) - euler_form(self.quiver, a, b)

    def hom_graded(self, a: DObject, b: DObject) -> dict[int, int]:
        """dim Hom(A, B[k]) per degree k; at most two adjacent degrees."""
        out = {}
        k0 = a.shift - b.shift
        h = self.hom_mod(a.root, b.root)
        if h:
            out[k0] = h
        e = self.ext_mod(a.root, b.root)
        if e:
            out[k0 + 1] = e
        return out

    def hom_at(self, a: DObject, b: DObject, k: int) -> int:
        return self.hom_graded(a, b).get(k, 0)

    def display_root(self, root: DimVector) -> str:
        return display_root(self.root_data, root)


# Figure-style letters for the three-vertex type A golden case.
_A3_LETTERS = {
    (1, 0, 0): "X", (0, 1, 0): "Y", (0, 0, 1): "Z",
    (1, 1, 0): "U", (0, 1, 1): "V", (1, 1, 1): "W",
}


def display_root(rd: RootData, root: DimVector) -> str:
    if rd.dynkin_type == "A3" and tuple(root) in _A3_LETTERS:
        return _A3_LETTERS[tuple(root)]
    if rd.dynkin_type.startswith("A"):
        support = [i for i, x in enumerate(root) if x]
        if support and all(root[i] == 1 for i in support) \
                and support == list(range(support[0], support[-1] + 1)):
            if len(support) == 1:
                return f"[{support[0]}]"
            return f"[{support[0]}..{support[-1]}]"
    return "(" + ",".join(str(x) for x in root) + ")"


def render_dobject(ctx: Context, obj: DObject) -> str:
    return f"{ctx.display_root(obj.root)}[{obj.shift}]"


HeartKey = tuple[tuple[int, DimVector], ...]


@dataclass(frozen=True)
class Heart:
    simples: tuple[DObject, ...]
    projectives: tuple[DObject, ...]
    twist_words: tuple[BraidWord, ...]

    def key(self) -> HeartKey:
        return tuple(sorted((s.shift, s.root) for s in self.simples))

    def shifted(self, k: int) -> "Heart":
        return Heart(
            tuple(s.shifted(k) for s in self.simples),
            tuple(p.shifted(k) for p in self.projectives),
            self.twist_words,
        )

    def shifts(self) -> tuple[int, ...]:
        return tuple(s.shift for s in self.simples)


def render_heart(ctx: Context, h: Heart) -> str:
    names = sorted(render_dobject(ctx, s) for s in h.simples)
    return "{" + ",".join(names) + "}"


def initial_heart(ctx: Context) -> Heart:
    """Standard heart: simples S_i[0], projectives P_i[0], one generator per slot."""
    if not ctx.root_data.is_dynkin:
        raise NonDynkinUnsupported("initial heart needs a Dynkin quiver")
    n = ctx.n
    simples = tuple(DObject(tuple(1 if j == i else 0 for j in range(n)), 0) for i in range(n))
    projectives = tuple(DObject(tuple(d), 0) for d in projective_dims(ctx.quiver))
    words = tuple(BraidWord.generator(i) for i in range(n))
    h = Heart(simples, projectives, words)
    report = verify_heart(ctx, h)
    assert all(report.values()), f"standard heart fails checks: {report}"
    return h


def _psi_forward(ctx: Context, x: DObject, s: DObject) -> DObject:
    """New simple replacing X under a forward tilt at S; identity if Ext^1(X,S)=0."""
    e = ctx.hom_at(x, s, 1)
    if e == 0:
        return x
    xm, sm = ctx.rep(x.root), ctx.rep(s.root)
    if s.shift == x.shift:
        t = rp.universal_extension(xm, sm)
        return _identify(ctx, t, x.shift)
    assert s.shift == x.shift - 1
    # universal module map g: X -> S (x) Hom(X,S)^*
    _, basis = rp.hom_space(xm, sm)
    stack = _stack_target(ctx, basis, xm, sm)
    k, _incl = rp.kernel(stack)
    c, _proj = rp.cokernel(stack)
    if k.is_zero() and not c.is_zero():
        return _identify(ctx, c, x.shift - 1)
    if c.is_zero() and not k.is_zero():
        return _identify(ctx, k, x.shift)
    raise ConeNotIndecomposable(
        f"forward cone at {x} over {s} has kernel {k.dims} and cokernel {c.dims}")


def _psi_backward(ctx: Context, x: DObject, s: DObject) -> DObject:
    """New simple replacing X under a backward tilt at S."""
    e = ctx.hom_at(s, x, 1)
    if e == 0:
        return x
    xm, sm = ctx.rep(x.root), ctx.rep(s.root)
    if s.shift == x.shift:
        t = rp.universal_coextension(sm, xm)
        return _identify(ctx, t, x.shift)
    assert s.shift == x.shift + 1
    _, basis = rp.hom_space(sm, xm)
    stack = _stack_source(ctx, basis, sm, xm)
    k, _incl = rp.kernel(stack)
    c, _proj = rp.cokernel(stack)
    if k.is_zero() and not c.is_zero():
        return _identify(ctx, c, x.shift)
    if c.is_zero() and not k.is_zero():
        return _identify(ctx, k, x.shift + 1)
    raise ConeNotIndecomposable(
        f"backward cone at {x} over {s} has kernel {k.dims} and cokernel {c.dims}")


def _stack_target(ctx: Context, basis: list[rp.RepMap], xm: Rep, sm: Rep) -> rp.RepMap:
    """Universal map X -> S^e assembled from a Hom basis."""
    from . import linalg as la

    e = len(basis)
    target = _power(ctx, sm, e)
    comps = tuple(la.vstack([b.components[v] for b in basis], xm.dims[v])
                  for v in range(ctx.n))
    return rp.RepMap(xm, target, comps)


def _stack_source(ctx: Context, basis: list[rp.RepMap], sm: Rep, xm: Rep) -> rp.RepMap:
    """Universal map S^e -> X assembled from a Hom basis."""
    from . import linalg as la

    e = len(basis)
    source = _power(ctx, sm, e)
    comps = []
    for v in range(ctx.n):
        comps.append(la.hstack([b.components[v] for b in basis], xm.dims[v]))
    return rp.RepMap(source, xm, tuple(comps))


def _power(ctx: Context, m: Rep, e: int) -> Rep:
    out = m
    for _ in range(e - 1):
        out = rp.direct_sum(out, m)
    if e == 0:
        return rp.zero_rep(ctx.quiver)
    return out


def _identify(ctx: Context, m: Rep, shift: int) -> DObject:
    """Match an explicit rep to its (root, shift) identity; it must be a brick."""
    root = tuple(m.dims)
    if ctx.root_data.is_dynkin and root not in ctx.root_data.positive_roots:
        raise ConeNotIndecomposable(f"dims {root} is not a root")
    assert rp.end_dim(m) == 1, f"object with dims {root} is not a brick"
    return DObject(root, shift)


def ext1_between(ctx: Context, a: DObject, b: DObject) -> int:
    return ctx.hom_at(a, b, 1)


def tilt(ctx: Context, h: Heart, i: int, forward: bool = True) -> Heart:
    """Simple tilt at slot i.  Slots are stable: position i keeps S_i[+-1]."""
    s = h.simples[i]
    n = ctx.n
    new_simples, new_words = [], []
    ext_mults = []
    for j in range(n):
        if j == i:
            new_simples.append(s.shifted(1 if forward else -1))
            new_words.append(h.twist_words[j])
            ext_mults.append(0)
            continue
        x = h.simples[j]
        e = ext1_between(ctx, x, s) if forward else ext1_between(ctx, s, x)
        ext_mults.append(e)
        new_simples.append(_psi_forward(ctx, x, s) if forward else _psi_backward(ctx, x, s))
        if e:
            wi = h.twist_words[i]
            wj = h.twist_words[j]
            new_words.append(wi.inverse() * wj * wi if forward else wi * wj * wi.inverse())
        else:
            new_words.append(h.twist_words[j])
    new_projs = list(h.projectives)
    new_projs[i] = _mutated_projective(ctx, h, i, forward, tuple(new_simples))
    return Heart(tuple(new_simples), tuple(new_projs), tuple(new_words))


def _mutated_projective(ctx: Context, h: Heart, i: int, forward: bool,
                        new_simples: tuple[DObject, ...]) -> DObject:
    """Resolve the replaced projective from its K-class plus the duality pairing."""
    n = ctx.n
    cls = [-x for x in h.projectives[i].kclass()]
    for j in range(n):
        if j == i:
            continue
        e = (ext1_between(ctx, h.simples[j], h.simples[i]) if forward
             else ext1_between(ctx, h.simples[i], h.simples[j]))
        if e:
            pj = h.projectives[j].kclass()
            cls = [c + e * p for c, p in zip(cls, pj)]
    cls_t = tuple(cls)
    if all(x == 0 for x in cls_t):
        raise ConeNotIndecomposable("projective mutation produced the zero class")
    pos = tuple(abs(x) for x in cls_t)
    neg_based = all(x <= 0 for x in cls_t)
    pos_based = all(x >= 0 for x in cls_t)
    if not (neg_based or pos_based):
        raise ConeNotIndecomposable(f"projective class {cls_t} has mixed signs")
    if ctx.root_data.is_dynkin and pos not in ctx.root_data.positive_roots:
        raise ConeNotIndecomposable(f"projective class {cls_t} is not a root")
    lo = min(s.shift for s in new_simples) - 1
    hi = max(s.shift for s in new_simples) + 1
    wanted_parity = 1 if neg_based else 0  # (-1)^shift sign
    candidates = []
    for m in range(lo, hi + 1):
        if m % 2 != wanted_parity:
            continue
        cand = DObject(pos, m)
        if _dual_to(ctx, cand, new_simples, i):
            candidates.append(cand)
    if len(candidates) != 1:
        raise ConeNotIndecomposable(
            f"projective candidates for class {cls_t}: {candidates}")
    return candidates[0]


def _dual_to(ctx: Context, p: DObject, simples: tuple[DObject, ...], i: int) -> bool:
    for j, s in enumerate(simples):
        hom = ctx.hom_graded(p, s)
        want = {0: 1} if j == i else {}
        if hom != want:
            return False
    return True


def homology_degrees(obj: DObject) -> set[int]:
    return {obj.shift}


def in_interval(h: Heart, n_max: int) -> bool:
    return all(1 <= s.shift <= n_max - 1 for s in h.simples)


def tiltable_in_interval(h: Heart, i: int, forward: bool, n_max: int) -> bool:
    shift = h.simples[i].shift
    return shift != (n_max - 1) if forward else shift != 1


@dataclass(frozen=True)
class GradedQuiver:
    """Graded quiver on simple slots: arrows (src, dst, degree, multiplicity)."""

    vertices: tuple[int, ...]
    arrows: tuple[tuple[int, int, int, int], ...]
    loops: tuple[tuple[int, int], ...] = ()  # (vertex, degree)

    def between(self, i: int, j: int) -> list[tuple[int, int]]:
        return [(d, m) for (a, b, d, m) in self.arrows if a == i and b == j]


def ext_quiver(ctx: Context, h: Heart) -> GradedQuiver:
    """Graded arrows = basis of positive-degree Hom between distinct simples."""
    n = ctx.n
    arrows = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for k, d in sorted(ctx.hom_graded(h.simples[i], h.simples[j]).items()):
                if d:
                    assert k > 0, f"nonpositive Hom degree {k} between distinct simples"
                    arrows.append((i, j, k, d))
    return GradedQuiver(tuple(range(n)), tuple(arrows))


def cy_double(gq: GradedQuiver, n_cy: int) -> GradedQuiver:
    """Add a reverse arrow of degree N-k per arrow of degree k, and degree-N loops."""
    from .errors import DegreeOutOfRange

    for (_, _, d, _) in gq.arrows:
        if not (0 < d < n_cy):
            raise DegreeOutOfRange(f"arrow degree {d} outside (0, {n_cy})")
    arrows = list(gq.arrows)
    for (i, j, d, m) in gq.arrows:
        arrows.append((j, i, n_cy - d, m))
    loops = tuple((v, n_cy) for v in gq.vertices)
    return GradedQuiver(gq.vertices, tuple(sorted(arrows)), loops)


def verify_heart(ctx: Context, h: Heart) -> dict[str, bool]:
    """Simple-disjointness, rigidity, duality table, K-basis, monochromaticity."""
    from .linalg import int_matrix_det

    n = ctx.n
    report = {}
    ok = True
    for i in range(n):
        g = ctx.hom_graded(h.simples[i], h.simples[i])
        ok = ok and g.get(0, 0) == 1 and g.get(1, 0) == 0
    for i in range(n):
        for j in range(n):
            if i != j and ctx.hom_at(h.simples[i], h.simples[j], 0):
                ok = False
    report["simples_bricks_rigid_disjoint"] = ok
    dual = all(_dual_to(ctx, h.projectives[i], h.simples, i) for i in range(n))
    report["projective_duality"] = dual
    det = int_matrix_det(tuple(s.kclass() for s in h.simples))
    report["kclass_basis"] = det in (1, -1)
    mono = True
    for i in range(n):
        for j in range(i + 1, n):
            fwd = ctx.hom_graded(h.simples[i], h.simples[j])
            bwd = ctx.hom_graded(h.simples[j], h.simples[i])
            if fwd and bwd:
                mono = False
            if len(fwd) > 1 or len(bwd) > 1:
                mono = False
    report["strongly_monochromatic"] = mono
    return report
