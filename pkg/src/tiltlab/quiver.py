"""Acyclic quivers, Euler forms and root-system data.

Dimension vectors are plain integer tuples.  The Coxeter matrix `phi` is
normalized so that `phi @ dim(M) = dim(tau M)` for non-projective
indecomposables, which is the convention forced by AR duality
Ext^1(Y, X) = Hom(X, tau Y)^*.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import CyclicQuiver, DimensionMismatch, MalformedInput
from .linalg import Matrix, identity, mat, rref

DimVector = tuple[int, ...]


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n <= 0:
            raise MalformedInput("vertex count must be positive")
        for s, t in self.arrows:
            if not (0 <= s < self.n and 0 <= t < self.n):
                raise MalformedInput(f"arrow ({s},{t}) out of range")
        if self.topological_order() is None:
            raise CyclicQuiver("quiver has an oriented cycle")

    def topological_order(self) -> list[int] | None:
        indeg = [0] * self.n
        for _, t in self.arrows:
            indeg[t] += 1
        order, stack = [], sorted(v for v in range(self.n) if indeg[v] == 0)
        while stack:
            v = stack.pop(0)
            order.append(v)
            for s, t in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        stack.append(t)
            stack.sort()
        return order if len(order) == self.n else None

    def arrows_from(self, v: int) -> list[tuple[int, tuple[int, int]]]:
        return [(i, a) for i, a in enumerate(self.arrows) if a[0] == v]

    def arrows_into(self, v: int) -> list[tuple[int, tuple[int, int]]]:
        return [(i, a) for i, a in enumerate(self.arrows) if a[1] == v]

    def is_sink(self, v: int) -> bool:
        return not self.arrows_from(v)

    def is_source(self, v: int) -> bool:
        return not self.arrows_into(v)

    def reverse_at(self, v: int) -> "Quiver":
        """Reflection sigma_v: reverse every arrow incident to v."""
        new = tuple((t, s) if s == v or t == v else (s, t) for s, t in self.arrows)
        return Quiver(self.n, new)

    def euler_matrix(self) -> Matrix:
        """E with <d, e> = d^T E e; E = I - (arrow count matrix)."""
        rows = [[Fraction(1 if i == j else 0) for j in range(self.n)] for i in range(self.n)]
        for s, t in self.arrows:
            rows[s][t] -= 1
        return mat(rows)

    def to_json(self) -> str:
        return json.dumps({"vertices": self.n, "arrows": [list(a) for a in self.arrows]})


def parse_quiver(text: str) -> Quiver:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or "vertices" not in data or "arrows" not in data:
        raise MalformedInput('expected {"vertices": n, "arrows": [[s,t], ...]}')
    n = data["vertices"]
    arrows = data["arrows"]
    if not isinstance(n, int) or not isinstance(arrows, list):
        raise MalformedInput("bad field types in quiver file")
    pairs = []
    for a in arrows:
        if not (isinstance(a, list) and len(a) == 2 and all(isinstance(x, int) for x in a)):
            raise MalformedInput(f"bad arrow entry {a!r}")
        pairs.append((a[0], a[1]))
    return Quiver(n, tuple(pairs))


def euler_form(q: Quiver, d: DimVector, e: DimVector) -> int:
    if len(d) != q.n or len(e) != q.n:
        raise DimensionMismatch("dimension vector length != vertex count")
    val = sum(di * ei for di, ei in zip(d, e))
    for s, t in q.arrows:
        val -= d[s] * e[t]
    return val


def _invert(m: Matrix) -> Matrix:
    n = len(m)
    aug = tuple(m[i] + identity(n)[i] for i in range(n))
    r, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular matrix")
    return tuple(row[n:] for row in r)


def coxeter_matrix(q: Quiver) -> tuple[tuple[int, ...], ...]:
    """Phi = -E^{-1} E^T, acting on dimension vectors as columns."""
    e = q.euler_matrix()
    et = tuple(zip(*e))
    ei = _invert(e)
    n = q.n
    rows = []
    for i in range(n):
        rows.append(tuple(-sum(ei[i][k] * et[k][j] for k in range(n)) for j in range(n)))
    out = []
    for row in rows:
        assert all(x.denominator == 1 for x in row)
        out.append(tuple(int(x) for x in row))
    return tuple(out)


def apply_int_matrix(m: tuple[tuple[int, ...], ...], v: DimVector) -> DimVector:
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


# Degrees of fundamental invariants and Coxeter numbers per Dynkin type.
_DYNKIN_DATA = {
    "E6": ((2, 5, 6, 8, 9, 12), 12),
    "E7": ((2, 6, 8, 10, 12, 14, 18), 18),
    "E8": ((2, 8, 12, 14, 18, 20, 24, 30), 30),
}


def _underlying_dynkin_type(q: Quiver) -> str | None:
    """Classify the underlying graph as A/D/E, or None."""
    n = q.n
    seen = set()
    deg = [0] * n
    adj: list[set[int]] = [set() for _ in range(n)]
    for s, t in q.arrows:
        if s == t:
            return None
        key = (min(s, t), max(s, t))
        if key in seen:
            return None  # multi-edge
        seen.add(key)
        deg[s] += 1
        deg[t] += 1
        adj[s].add(t)
        adj[t].add(s)
    if len(seen) != n - 1:
        return None  # a tree has n-1 edges; fewer means disconnected, more a cycle
    # connectivity
    todo, comp = [0], {0}
    while todo:
        v = todo.pop()
        for w in adj[v]:
            if w not in comp:
                comp.add(w)
                todo.append(w)
    if len(comp) != n:
        return None
    branch = [v for v in range(n) if deg[v] >= 3]
    if any(deg[v] > 3 for v in range(n)):
        return None
    if not branch:
        return f"A{n}"
    if len(branch) > 1:
        return None
    b = branch[0]
    legs = []
    for w in sorted(adj[b]):
        length, prev, cur = 1, b, w
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        legs.append(length)
    legs.sort()
    if legs[0] == 1 and legs[1] == 1:
        return f"D{n}"
    if legs == [1, 2, 2]:
        return "E6"
    if legs == [1, 2, 3]:
        return "E7"
    if legs == [1, 2, 4]:
        return "E8"
    return None


def cartan_matrix(q: Quiver) -> tuple[tuple[int, ...], ...]:
    """Symmetrized Cartan matrix of the underlying graph."""
    n = q.n
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for s, t in q.arrows:
        if s != t:
            c[s][t] -= 1
            c[t][s] -= 1
    return tuple(tuple(row) for row in c)


def positive_roots(q: Quiver) -> list[DimVector]:
    """All positive roots via reflection closure of the simple roots."""
    n = q.n
    cartan = cartan_matrix(q)
    simple = [tuple(1 if i == v else 0 for i in range(n)) for v in range(n)]

    def reflect(v: DimVector, i: int) -> DimVector:
        pairing = sum(cartan[i][j] * v[j] for j in range(n))
        return tuple(v[j] - (pairing if j == i else 0) for j in range(n))

    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                s = reflect(r, i)
                if all(x >= 0 for x in s) and any(x > 0 for x in s) and s not in roots:
                    roots.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted(roots)


@dataclass(frozen=True)
class RootData:
    dynkin_type: str  # "A3", "D4", ..., or "NonDynkin"
    positive_roots: tuple[DimVector, ...]
    degrees: tuple[int, ...]
    coxeter_number: int
    phi: tuple[tuple[int, ...], ...]

    @property
    def is_dynkin(self) -> bool:
        return self.dynkin_type != "NonDynkin"


def root_data(q: Quiver) -> RootData:
    phi = coxeter_matrix(q)
    typ = _underlying_dynkin_type(q)
    if typ is None:
        return RootData("NonDynkin", tuple(), tuple(), 0, phi)
    roots = tuple(positive_roots(q))
    n = q.n
    if typ.startswith("A"):
        degrees, h = tuple(range(2, n + 2)), n + 1
    elif typ.startswith("D"):
        degrees, h = tuple(sorted(list(range(2, 2 * n - 2, 2)) + [n])), 2 * n - 2
    else:
        degrees, h = _DYNKIN_DATA[typ]
    assert len(roots) == n * h // 2, (typ, len(roots))
    return RootData(typ, roots, degrees, h, phi)


def projective_dims(q: Quiver) -> list[DimVector]:
    """dim P_i at vertex j = number of paths i -> j."""
    order = q.topological_order()
    assert order is not None
    out = []
    for i in range(q.n):
        counts = [0] * q.n
        counts[i] = 1
        for v in order:
            if counts[v]:
                for s, t in q.arrows:
                    if s == v:
                        counts[t] += counts[v]
        out.append(tuple(counts))
    return out


def injective_dims(q: Quiver) -> list[DimVector]:
    """dim I_i at vertex j = number of paths j -> i."""
    rev = Quiver(q.n, tuple((t, s) for s, t in q.arrows))
    return projective_dims(rev)
