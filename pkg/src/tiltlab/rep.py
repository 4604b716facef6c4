"""Explicit quiver representations over Q with exact Hom/Ext computations.

A Rep stores one rational matrix per arrow (rows indexed by the target
vertex).  Hom spaces are solved from the intertwiner system, Ext^1 from the
arrow-cocycle complex; both produce deterministic echelonized bases, which is
what makes canonically constructed objects reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .errors import NoExtension, NonDynkinUnsupported, NotARoot, QuiverMismatch
from .linalg import Matrix
from .quiver import (
    DimVector,
    Quiver,
    RootData,
    apply_int_matrix,
    euler_form,
    injective_dims,
    projective_dims,
)


@dataclass(frozen=True)
class Rep:
    quiver: Quiver
    dims: DimVector
    maps: tuple[Matrix, ...]  # one per arrow, shape dims[t] x dims[s]

    def __post_init__(self):
        assert len(self.dims) == self.quiver.n
        assert len(self.maps) == len(self.quiver.arrows)
        for (s, t), m in zip(self.quiver.arrows, self.maps):
            assert la.shape_matches(m, self.dims[t], self.dims[s]), "arrow map shape mismatch"

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0


def zero_rep(q: Quiver) -> Rep:
    return Rep(q, (0,) * q.n, tuple(la.zeros(0, 0) for _ in q.arrows))


def simple_rep(q: Quiver, v: int) -> Rep:
    dims = tuple(1 if i == v else 0 for i in range(q.n))
    return Rep(q, dims, tuple(la.zeros(dims[t], dims[s]) for s, t in q.arrows))


def direct_sum(a: Rep, b: Rep) -> Rep:
    if a.quiver != b.quiver:
        raise QuiverMismatch("direct sum over different quivers")
    dims = tuple(x + y for x, y in zip(a.dims, b.dims))
    maps = []
    for i, (s, t) in enumerate(a.quiver.arrows):
        maps.append(
            la.block_matrix(
                [[a.maps[i], la.zeros(a.dims[t], b.dims[s])],
                 [la.zeros(b.dims[t], a.dims[s]), b.maps[i]]],
                [a.dims[t], b.dims[t]],
                [a.dims[s], b.dims[s]],
            )
        )
    return Rep(a.quiver, dims, tuple(maps))


@dataclass(frozen=True)
class RepMap:
    source: Rep
    target: Rep
    components: tuple[Matrix, ...]  # one per vertex

    def __post_init__(self):
        assert self.source.quiver == self.target.quiver
        for v in range(self.source.quiver.n):
            assert la.shape_matches(self.components[v], self.target.dims[v], self.source.dims[v])

    def check(self) -> bool:
        q = self.source.quiver
        for i, (s, t) in enumerate(q.arrows):
            lhs = la.mul(self.target.maps[i], self.components[s])
            rhs = la.mul(self.components[t], self.source.maps[i])
            if not la.eq_loose(lhs, rhs):
                return False
        return True


def zero_map(m: Rep, n: Rep) -> RepMap:
    return RepMap(m, n, tuple(la.zeros(n.dims[v], m.dims[v]) for v in range(m.quiver.n)))


def identity_map(m: Rep) -> RepMap:
    return RepMap(m, m, tuple(la.identity(d) for d in m.dims))


def _vertex_offsets(q: Quiver, dims_a: DimVector, dims_b: DimVector) -> tuple[list[int], int]:
    """Offsets of the per-vertex Hom_k(A_v, B_v) blocks in the flattened unknown."""
    offs, total = [], 0
    for v in range(q.n):
        offs.append(total)
        total += dims_a[v] * dims_b[v]
    return offs, total


def hom_space(m: Rep, n: Rep) -> tuple[int, list[RepMap]]:
    """Dimension and echelonized basis of Hom(M, N)."""
    if m.quiver != n.quiver:
        raise QuiverMismatch("hom over different quivers")
    q = m.quiver
    offs, nunk = _vertex_offsets(q, m.dims, n.dims)
    rows: list[tuple[Fraction, ...]] = []
    for i, (s, t) in enumerate(q.arrows):
        # N_a f_s - f_t M_a = 0, one scalar equation per (target row, source col)
        for r in range(n.dims[t]):
            for c in range(m.dims[s]):
                row = [la.ZERO] * nunk
                for k in range(n.dims[s]):
                    row[offs[s] + k * m.dims[s] + c] += n.maps[i][r][k]
                for k in range(m.dims[t]):
                    row[offs[t] + r * m.dims[t] + k] -= m.maps[i][k][c]
                rows.append(tuple(row))
    if rows:
        basis_vecs = la.nullspace(tuple(rows))
    else:
        basis_vecs = [tuple(la.ONE if i == j else la.ZERO for i in range(nunk)) for j in range(nunk)]
    basis = []
    for vec in basis_vecs:
        comps = []
        for v in range(q.n):
            block = vec[offs[v]: offs[v] + m.dims[v] * n.dims[v]]
            comps.append(tuple(tuple(block[r * m.dims[v] + c] for c in range(m.dims[v]))
                               for r in range(n.dims[v])))
        basis.append(RepMap(m, n, tuple(comps)))
    return len(basis), basis


def hom_dim(m: Rep, n: Rep) -> int:
    return hom_space(m, n)[0]


def end_dim(m: Rep) -> int:
    return hom_dim(m, m)


def ext1_dim(m: Rep, n: Rep) -> int:
    if m.quiver != n.quiver:
        raise QuiverMismatch("ext over different quivers")
    d = hom_dim(m, n) - euler_form(m.quiver, m.dims, n.dims)
    assert d >= 0
    return d


Cocycle = tuple[Matrix, ...]  # one matrix per arrow: A_{s(a)} -> B_{t(a)}


def _cocycle_size(q: Quiver, a: Rep, b: Rep) -> int:
    return sum(a.dims[s] * b.dims[t] for s, t in q.arrows)


def _cocycle_to_vec(q: Quiver, a: Rep, b: Rep, z: Cocycle) -> tuple[Fraction, ...]:
    vec: list[Fraction] = []
    for i, (s, t) in enumerate(q.arrows):
        for r in range(b.dims[t]):
            vec.extend(z[i][r])
    return tuple(vec)


def _vec_to_cocycle(q: Quiver, a: Rep, b: Rep, vec) -> Cocycle:
    out, pos = [], 0
    for s, t in q.arrows:
        rows = []
        for r in range(b.dims[t]):
            rows.append(tuple(vec[pos: pos + a.dims[s]]))
            pos += a.dims[s]
        out.append(tuple(rows))
    return tuple(out)


def coboundary_image(a: Rep, b: Rep) -> Matrix:
    """Row-span (rref) of the coboundaries inside the cocycle space Z(A, B)."""
    q = a.quiver
    zdim = _cocycle_size(q, a, b)
    rows = []
    for v in range(q.n):
        for r in range(b.dims[v]):
            for c in range(a.dims[v]):
                comps = []
                for w in range(q.n):
                    if w == v:
                        comps.append(tuple(tuple(la.ONE if (i == r and j == c) else la.ZERO
                                                 for j in range(a.dims[w]))
                                           for i in range(b.dims[w])))
                    else:
                        comps.append(la.zeros(b.dims[w], a.dims[w]))
                z = []
                for i, (s, t) in enumerate(q.arrows):
                    first = la.mul_shaped(b.maps[i], comps[s], b.dims[t], a.dims[s], b.dims[s])
                    second = la.mul_shaped(comps[t], a.maps[i], b.dims[t], a.dims[s], a.dims[t])
                    z.append(la.add(first, la.neg(second)))
                rows.append(_cocycle_to_vec(q, a, b, tuple(z)))
    return la.span_rref(rows, zdim)


def ext1_cocycle_basis(a: Rep, b: Rep) -> list[Cocycle]:
    """Deterministic cocycle representatives of a basis of Ext^1(A, B)."""
    q = a.quiver
    zdim = _cocycle_size(q, a, b)
    img = coboundary_image(a, b)
    aug = list(img)
    reps = []
    for j in range(zdim):
        cand = tuple(la.ONE if i == j else la.ZERO for i in range(zdim))
        if not la.in_span(cand, tuple(aug)):
            aug.append(cand)
            reps.append(_vec_to_cocycle(q, a, b, cand))
    assert len(reps) == ext1_dim(a, b), "cocycle count disagrees with Euler computation"
    return reps


def cocycle_class_matrix(a: Rep, b: Rep, basis: list[Cocycle]) -> tuple[Matrix, Matrix]:
    """(coboundary span, basis-vector matrix) for reducing cocycles to Ext classes."""
    q = a.quiver
    img = coboundary_image(a, b)
    vecs = tuple(_cocycle_to_vec(q, a, b, z) for z in basis)
    return img, vecs


def extension_of(a: Rep, b: Rep, cocycles: list[Cocycle]) -> Rep:
    """Middle term of 0 -> B^e -> T -> A -> 0 for the listed cocycle classes."""
    q = a.quiver
    e = len(cocycles)
    dims = tuple(e * b.dims[v] + a.dims[v] for v in range(q.n))
    maps = []
    for i, (s, t) in enumerate(q.arrows):
        row_dims = [b.dims[t]] * e + [a.dims[t]]
        col_dims = [b.dims[s]] * e + [a.dims[s]]
        grid: list[list[Matrix]] = []
        for r in range(e):
            row = [b.maps[i] if c == r else la.zeros(b.dims[t], b.dims[s]) for c in range(e)]
            row.append(cocycles[r][i])
            grid.append(row)
        grid.append([la.zeros(a.dims[t], b.dims[s])] * e + [a.maps[i]])
        maps.append(la.block_matrix(grid, row_dims, col_dims))
    return Rep(q, dims, tuple(maps))


def universal_extension(x: Rep, s: Rep) -> Rep:
    """T with 0 -> S^e -> T -> X -> 0 universal, e = dim Ext^1(X, S)."""
    cocycles = ext1_cocycle_basis(x, s)
    if not cocycles:
        raise NoExtension("Ext^1(X, S) = 0")
    return extension_of(x, s, cocycles)


def universal_coextension(s: Rep, x: Rep) -> Rep:
    """T with 0 -> X -> T -> S^e -> 0 universal, e = dim Ext^1(S, X)."""
    cocycles = ext1_cocycle_basis(s, x)
    if not cocycles:
        raise NoExtension("Ext^1(S, X) = 0")
    return coextension_of(s, x, cocycles)


def coextension_of(s: Rep, x: Rep, cocycles: list[Cocycle]) -> Rep:
    """Middle term of 0 -> X -> T -> S^e -> 0 for cocycles in Z(S, X)."""
    q = s.quiver
    e = len(cocycles)
    dims = tuple(x.dims[v] + e * s.dims[v] for v in range(q.n))
    maps = []
    for i, (sv, tv) in enumerate(q.arrows):
        row_dims = [x.dims[tv]] + [s.dims[tv]] * e
        col_dims = [x.dims[sv]] + [s.dims[sv]] * e
        grid = [[x.maps[i]] + [cocycles[c][i] for c in range(e)]]
        for r in range(e):
            grid.append([la.zeros(s.dims[tv], x.dims[sv])]
                        + [s.maps[i] if c == r else la.zeros(s.dims[tv], s.dims[sv]) for c in range(e)])
        maps.append(la.block_matrix(grid, row_dims, col_dims))
    return Rep(q, dims, tuple(maps))


def kernel(f: RepMap) -> tuple[Rep, RepMap]:
    """(ker f, inclusion)."""
    q = f.source.quiver
    incls, kdims = [], []
    for v in range(q.n):
        basis = la.nullspace(f.components[v])
        kdims.append(len(basis))
        incls.append(tuple(tuple(b[r] for b in basis) for r in range(f.source.dims[v])))
    maps = []
    for i, (s, t) in enumerate(q.arrows):
        rhs = la.mul(f.source.maps[i], incls[s])
        sol = la.solve_matrix(incls[t], rhs)
        assert sol is not None, "kernel not preserved by arrow maps"
        maps.append(sol)
    k = Rep(q, tuple(kdims), tuple(maps))
    return k, RepMap(k, f.source, tuple(incls))


def _complement_projection(image_cols: Matrix, nrows: int) -> tuple[Matrix, Matrix, int]:
    """Projection onto, and section of, a complement of the given column space."""
    ncols = la.shape(image_cols)[1] if nrows else 0
    comp_idx = la.column_space_complement(image_cols if nrows else la.zeros(0, 0))
    cdim = len(comp_idx)
    sec = tuple(tuple(la.ONE if r == comp_idx[c] else la.ZERO for c in range(cdim))
                for r in range(nrows))
    cols = [tuple(image_cols[r][c] for r in range(nrows)) for c in range(ncols)]
    cols += [tuple(la.ONE if r == j else la.ZERO for r in range(nrows)) for j in comp_idx]
    amat = tuple(tuple(cols[c][r] for c in range(len(cols))) for r in range(nrows))
    proj_rows = []
    for j in range(nrows):
        sol = la.solve(amat, tuple(la.ONE if r == j else la.ZERO for r in range(nrows)))
        assert sol is not None
        proj_rows.append(tuple(sol[ncols:]))
    proj = tuple(tuple(proj_rows[r][c] for r in range(nrows)) for c in range(cdim))
    return proj, sec, cdim


def cokernel(f: RepMap) -> tuple[Rep, RepMap]:
    """(coker f, projection)."""
    q = f.source.quiver
    projs, secs, cdims = [], [], []
    for v in range(q.n):
        proj, sec, cdim = _complement_projection(f.components[v], f.target.dims[v])
        projs.append(proj)
        secs.append(sec)
        cdims.append(cdim)
    maps = []
    for i, (s, t) in enumerate(q.arrows):
        maps.append(la.mul(projs[t], la.mul(f.target.maps[i], secs[s])))
    c = Rep(q, tuple(cdims), tuple(maps))
    return c, RepMap(f.target, c, tuple(projs))


def kernel_cokernel(f: RepMap) -> tuple[Rep, Rep]:
    return kernel(f)[0], cokernel(f)[0]


def restrict_cocycle(z: Cocycle, b: Rep, incl: RepMap) -> Cocycle:
    """Pull a cocycle in Z(A, B) back along K -> A."""
    q = incl.source.quiver
    a, k = incl.target, incl.source
    return tuple(
        la.mul_shaped(z[i], incl.components[s], b.dims[t], k.dims[s], a.dims[s])
        for i, (s, t) in enumerate(q.arrows))


def push_cocycle(z: Cocycle, a: Rep, proj: RepMap) -> Cocycle:
    """Push a cocycle in Z(A, B) forward along B -> C."""
    q = proj.source.quiver
    b, c = proj.source, proj.target
    return tuple(
        la.mul_shaped(proj.components[t], z[i], c.dims[t], a.dims[s], b.dims[t])
        for i, (s, t) in enumerate(q.arrows))


# ---------------------------------------------------------------------------
# Reflection functors and canonical indecomposables


def reflect_at_sink(x: Rep, v: int) -> Rep:
    """C_v^+ for a sink v: new space = ker(sum of incoming maps), arrows reversed at v."""
    q = x.quiver
    assert q.is_sink(v)
    incoming = q.arrows_into(v)
    total = sum(x.dims[s] for _, (s, _) in incoming)
    xi = la.hstack([x.maps[i] for i, _ in incoming], x.dims[v]) if incoming else la.zeros(x.dims[v], 0)
    basis = la.nullspace(xi) if incoming else []
    if not incoming:
        basis = []
    kdim = len(basis)
    incl = tuple(tuple(b[r] for b in basis) for r in range(total))  # total x kdim
    newq = q.reverse_at(v)
    dims = tuple(kdim if w == v else x.dims[w] for w in range(q.n))
    proj_blocks, off = {}, 0
    for i, (s, _) in incoming:
        proj_blocks[i] = tuple(incl[off + r] for r in range(x.dims[s]))  # dims[s] x kdim
        off += x.dims[s]
    maps = []
    for i, (s, t) in enumerate(q.arrows):
        maps.append(proj_blocks[i] if t == v else x.maps[i])
    return Rep(newq, dims, tuple(maps))


def reflect_at_source(x: Rep, v: int) -> Rep:
    """C_v^- for a source v: new space = coker(diagonal of outgoing maps)."""
    q = x.quiver
    assert q.is_source(v)
    outgoing = q.arrows_from(v)
    total = sum(x.dims[t] for _, (_, t) in outgoing)
    eta = la.vstack([x.maps[i] for i, _ in outgoing], x.dims[v]) if outgoing else la.zeros(0, x.dims[v])
    eta_cols = tuple(tuple(eta[r][c] if total else la.ZERO for c in range(x.dims[v]))
                     for r in range(total))
    proj, _, cdim = _complement_projection(eta_cols if total else la.zeros(0, 0), total)
    newq = q.reverse_at(v)
    dims = tuple(cdim if w == v else x.dims[w] for w in range(q.n))
    inj_blocks, off = {}, 0
    for i, (_, t) in outgoing:
        inj_blocks[i] = tuple(proj[r][off: off + x.dims[t]] for r in range(cdim))  # cdim x dims[t]
        off += x.dims[t]
    maps = []
    for i, (s, t) in enumerate(q.arrows):
        maps.append(inj_blocks[i] if s == v else x.maps[i])
    return Rep(newq, dims, tuple(maps))


def admissible_sink_order(q: Quiver) -> list[int]:
    """Sinks first, ascending vertex index; a full pass returns the orientation."""
    order: list[int] = []
    cur, remaining = q, set(range(q.n))
    while remaining:
        sinks = sorted(w for w in remaining
                       if not any(s == w and t in remaining for s, t in cur.arrows))
        v = sinks[0]
        order.append(v)
        cur = cur.reverse_at(v)
        remaining.remove(v)
    return order


def reflect_root_at(q: Quiver, r: DimVector, v: int) -> DimVector:
    cartan = [[2 if i == j else 0 for j in range(q.n)] for i in range(q.n)]
    for s, t in q.arrows:
        if s != t:
            cartan[s][t] -= 1
            cartan[t][s] -= 1
    pairing = sum(cartan[v][j] * r[j] for j in range(q.n))
    return tuple(r[j] - (pairing if j == v else 0) for j in range(q.n))


def indecomposable_from_root(q: Quiver, rd: RootData, r: DimVector) -> Rep:
    """Canonical indecomposable with dims r, by the fixed sink-to-source schedule."""
    if not rd.is_dynkin:
        raise NonDynkinUnsupported("indecomposables beyond Dynkin type are not certified")
    if tuple(r) not in rd.positive_roots:
        raise NotARoot(f"{r} is not a positive root")
    schedule = admissible_sink_order(q)
    steps: list[int] = []
    cur_q, cur_r = q, tuple(r)

    def simple_vertex(rr: DimVector) -> int | None:
        if sum(rr) == 1:
            return rr.index(1)
        return None

    guard = 0
    while simple_vertex(cur_r) is None:
        for v in schedule:
            if simple_vertex(cur_r) is not None:
                break
            if cur_r == tuple(1 if i == v else 0 for i in range(q.n)):
                break
            new_r = reflect_root_at(cur_q, cur_r, v)
            assert all(x >= 0 for x in new_r), "sink reflection left the positive roots"
            steps.append(v)
            cur_q = cur_q.reverse_at(v)
            cur_r = new_r
        guard += 1
        if guard > rd.coxeter_number + 2:
            raise NotARoot(f"reflection schedule did not terminate for {r}")
    rep = simple_rep(cur_q, simple_vertex(cur_r))
    for v in reversed(steps):
        rep = reflect_at_source(rep, v)
    assert rep.quiver == q and rep.dims == tuple(r), (rep.dims, r)
    assert end_dim(rep) == 1, "canonical indecomposable is not a brick"
    return rep


# ---------------------------------------------------------------------------
# AR translate on (root, shift) pairs


def tau_object(q: Quiver, rd: RootData, root: DimVector, shift: int) -> tuple[DimVector, int]:
    if rd.is_dynkin and tuple(root) not in rd.positive_roots:
        raise NotARoot(f"{root} is not a positive root")
    projs = projective_dims(q)
    if tuple(root) in projs:
        i = projs.index(tuple(root))
        return tuple(injective_dims(q)[i]), shift - 1
    return apply_int_matrix(rd.phi, root), shift


def tau_inverse_object(q: Quiver, rd: RootData, root: DimVector, shift: int) -> tuple[DimVector, int]:
    if rd.is_dynkin and tuple(root) not in rd.positive_roots:
        raise NotARoot(f"{root} is not a positive root")
    injs = injective_dims(q)
    if tuple(root) in injs:
        i = injs.index(tuple(root))
        return tuple(projective_dims(q)[i]), shift + 1
    return apply_int_matrix(_int_inverse(rd.phi), root), shift


def _int_inverse(m: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    from .linalg import mat
    from .quiver import _invert

    inv = _invert(mat(m))
    assert all(x.denominator == 1 for row in inv for x in row)
    return tuple(tuple(int(x) for x in row) for row in inv)
