"""Building diagrams from labelled paths between junction vertices.

A junction's rotation is given either by the direction angles of the path
ends meeting there, or explicitly. Paths with no letters are placeholders:
on finalizing they are contracted when their ends differ and deleted when
they form a loop.
"""

from __future__ import annotations

from .diagrams import Diagram
from .errors import MalformedMap


class _Placeholder:
    sign = 1
    gen = None

    def inverse(self):
        return self

    def __str__(self):
        return "~"


PLACEHOLDER = _Placeholder()


class PathBuilder:
    def __init__(self):
        self.d = Diagram()
        self.ends: dict[int, list[tuple[float, int]]] = {}
        self.explicit: set[int] = set()

    def vertex(self) -> int:
        return self.d.add_vertex()

    def path(self, u: int, v: int, letters, out_angle: float | None = None,
             in_angle: float | None = None) -> list[int]:
        """Path from u to v reading `letters`; returns its darts in order."""
        d = self.d
        letters = list(letters)
        if not letters:
            dart = d.add_edge(u, v, PLACEHOLDER)
            darts = [dart]
        else:
            darts = []
            cur = u
            for i, x in enumerate(letters):
                nxt = v if i == len(letters) - 1 else d.add_vertex()
                dart = d.add_reading(cur, nxt, x)
                darts.append(dart)
                if i > 0:
                    d.rot[cur] = [darts[-2] ^ 1, dart]
                cur = nxt
        if out_angle is not None:
            self.ends.setdefault(u, []).append((out_angle, darts[0]))
        if in_angle is not None:
            self.ends.setdefault(v, []).append((in_angle, darts[-1] ^ 1))
        return darts

    def set_rotation(self, v: int, darts: list[int]) -> None:
        self.d.rot[v] = list(darts)
        self.explicit.add(v)

    def finalize(self, base_candidates: list[int]) -> Diagram:
        """Apply angle rotations, contract placeholders, pick the first real base dart."""
        d = self.d
        for v, items in self.ends.items():
            if v in self.explicit:
                continue
            d.rot[v] = [x for _, x in sorted(items, key=lambda t: t[0] % 360)]
        return contract_placeholders(d, base_candidates)

    def finalize_with_boundary(self, base: int, word) -> Diagram:
        """Finalize and choose the base dart at `base` whose outer face reads `word`."""
        out = self.finalize(list(range(2 * self.d.num_edges)))
        if out.num_edges == 0:
            if word:
                raise MalformedMap("empty diagram for a nonempty boundary")
            return out
        v = out.vertex_map[base]
        for x in out.rot[v]:
            out.base_dart, out.base_vertex = x, v
            out._cache = None
            if tuple(out.boundary_word()) == tuple(word):
                return out
        raise MalformedMap("no dart at the base reads the requested boundary")


def contract_placeholders(d: Diagram, base_candidates: list[int]) -> Diagram:
    parent = list(range(d.num_vertices))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    rot = {v: list(r) for v, r in enumerate(d.rot)}
    dead = set()
    for e, lab in enumerate(d.labels):
        if lab is not PLACEHOLDER:
            continue
        f, b = 2 * e, 2 * e + 1
        u, v = find(d.tails[e]), find(d.heads[e])
        if u == v:
            rot[u].remove(f)
            rot[u].remove(b)
        else:
            ru, rv = rot[u], rot.pop(v)
            i = rv.index(b)
            tail_part = rv[i + 1:] + rv[:i]
            j = ru.index(f)
            rot[u] = ru[:j] + tail_part + ru[j + 1:]
            parent[v] = u
        dead.add(e)
    # renumber
    roots = sorted({find(v) for v in range(d.num_vertices)})
    vmap = {r: i for i, r in enumerate(roots)}
    emap = {}
    out = Diagram()
    out.vertex_map = {v: vmap[find(v)] for v in range(d.num_vertices)}
    for _ in roots:
        out.add_vertex()
    for e in range(d.num_edges):
        if e in dead:
            continue
        emap[e] = out.num_edges
        out.add_edge(vmap[find(d.tails[e])], vmap[find(d.heads[e])], d.labels[e])

    def dmap(x):
        return 2 * emap[x >> 1] + (x & 1)

    for r in roots:
        out.rot[vmap[r]] = [dmap(x) for x in rot[r]]
    real = [x for x in base_candidates if (x >> 1) not in dead]
    if out.num_edges:
        if not real:
            raise MalformedMap("no usable base dart")
        out.base_dart = dmap(real[0])
        out.base_vertex = out.tail(out.base_dart)
    else:
        out.base_vertex = 0
        out.base_dart = None
    return out


def mirror(d: Diagram) -> Diagram:
    """Reflect the diagram; the boundary is then read in the opposite direction
    from the same base vertex."""
    out = d.copy()
    out.rot = [list(reversed(r)) for r in d.rot]
    out._cache = None
    if out.base_dart is not None:
        # old boundary b0..bn-1 becomes twin(bn-1)..twin(b0)
        bd = d.boundary_darts()
        out.base_dart = bd[-1] ^ 1
    return out
