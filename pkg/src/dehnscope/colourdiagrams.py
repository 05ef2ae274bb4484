"""Pushdown of coloured diagrams and cutting minimal diagrams along corridors.

The pushdown replaces each edge <s>_a from p to q by the path
tau_a^{h+phi(p)} . s a^-1 . (tau_a^{h+phi(q)})^-1. At every vertex the
transition paths are folded: incident edges are grouped into cyclic runs of
equal colour (one shared transition path per run) and the run paths are
merged along common prefixes wherever this keeps the map planar, giving a
planar trie rooted at the original vertex. A vertex whose incident edges all
carry one colour keeps no transition path at all.
"""

from __future__ import annotations

import math

from .coloured import ColouredLetter, PushdownConfig, transition_word
from .diagrams import Band, BandAnalysis, Diagram, heights, single_vertex
from .errors import CorridorsCross, MalformedMap, NotBoundaryToBoundary
from .words import Letter


# embedding helper


def from_straight_line(points: list[tuple[float, float]], edges: list[tuple[int, int, object]],
                       base: tuple[int, int]) -> Diagram:
    """Diagram of a straight-line plane graph. `base` = (tail, head) of the
    first boundary edge, traversed from tail to head."""
    d = Diagram()
    for _ in points:
        d.add_vertex()
    for t, h, lab in edges:
        d.add_edge(t, h, lab)

    def angle(x):
        (x0, y0), (x1, y1) = points[d.tail(x)], points[d.head(x)]
        return math.atan2(y1 - y0, x1 - x0)

    out: list[list[int]] = [[] for _ in points]
    for x in range(2 * d.num_edges):
        out[d.tail(x)].append(x)
    d.rot = [sorted(r, key=angle) for r in out]
    d._cache = None
    for x in range(2 * d.num_edges):
        if (d.tail(x), d.head(x)) == base:
            d.base_vertex = base[0]
            d.base_dart = x
            break
    else:
        raise MalformedMap("base edge not found")
    return d


# pushdown of coloured diagrams


def _colour(cd: Diagram, x: int) -> str:
    return cd.labels[x >> 1].colour


def _runs(cd: Diagram, p: int, start_dart: int | None) -> list[list[int]]:
    """Cyclic runs of equal colour at p, starting at a colour change, or at
    the run containing `start_dart`."""
    r = cd.rot[p]
    n = len(r)
    cols = [_colour(cd, x) for x in r]
    if len(set(cols)) == 1:
        if start_dart is not None:
            i = r.index(start_dart)
            return [r[i:] + r[:i]]
        return [list(r)]
    if start_dart is not None:
        i = r.index(start_dart)
        while cols[(i - 1) % n] == cols[i]:
            i = (i - 1) % n
    else:
        i = next(j for j in range(n) if cols[j - 1] != cols[j])
    seq = r[i:] + r[:i]
    runs: list[list[int]] = []
    for x in seq:
        if runs and _colour(cd, runs[-1][-1]) == _colour(cd, x):
            runs[-1].append(x)
        else:
            runs.append([x])
    return runs


class _Trie:
    """Planar trie of transition words at one vertex of the coloured diagram."""

    def __init__(self, out: Diagram, items: list[tuple[tuple, list[int]]], rotate_root: bool):
        self.out = out
        self.descending: set[int] = set()
        self.attach: dict[int, int] = {}     # coloured dart -> output node
        self.node_items: dict[int, list] = {}
        self.rotate = rotate_root
        self.root = out.add_vertex()
        self._grow(self.root, items, 0, None, True)

    @staticmethod
    def _first(item, depth):
        w = item[0]
        return w[depth] if len(w) > depth else None

    def _rotate_to_gap(self, items, depth):
        n = len(items)
        for i in range(n):
            a, b = self._first(items[i - 1], depth), self._first(items[i], depth)
            if a is None or a != b:
                return items[i:] + items[:i]
        return items

    def _grow(self, node: int, items, depth: int, back: int | None, cyclic: bool) -> None:
        # a cyclic node sees the full cycle of runs; its wrap-around corner
        # is placed at a gap so that neighbouring runs fold as far as they can
        out = self.out
        if cyclic and self.rotate:
            # a stem shared by every run would only be a spur: drop it
            while all(self._first(x, depth) is not None for x in items) and \
                    len({self._first(x, depth) for x in items}) == 1:
                depth += 1
            items = self._rotate_to_gap(items, depth)
        order: list = []   # entries: ("end", item) or ("child", dart)
        i = 0
        while i < len(items):
            letter = self._first(items[i], depth)
            if letter is None:
                order.append(("end", items[i]))
                i += 1
                continue
            j = i
            while j < len(items) and self._first(items[j], depth) == letter:
                j += 1
            child = out.add_vertex()
            dart = out.add_reading(node, child, letter)
            self.descending.add(dart)
            whole = cyclic and i == 0 and j == len(items)
            self._grow(child, items[i:j], depth + 1, dart ^ 1, whole)
            order.append(("child", dart))
            i = j
        self.node_items[node] = (order, back)

    def finish(self, central: dict[int, int]) -> None:
        """Set rotations once the central darts of all coloured darts exist."""
        for node, (order, back) in self.node_items.items():
            rot = []
            for kind, val in order:
                if kind == "child":
                    rot.append(val)
                else:
                    rot += [central[x] for x in val[1]]
            if back is not None:
                rot.append(back)
            self.out.rot[node] = rot
        self.out._cache = None


def _node_of_items(trie: _Trie) -> dict[int, int]:
    out = {}
    for node, (order, _) in trie.node_items.items():
        for kind, val in order:
            if kind == "end":
                for x in val[1]:
                    out[x] = node
    return out


def pushdown_diagram(cfg: PushdownConfig, cd: Diagram, h: int = 0) -> Diagram:
    """Alternating diagram obtained by pushing down a coloured diagram.

    Bounded regions correspond one to one with those of `cd`. The boundary
    word is the h-pushdown of the boundary word of `cd` when the first and
    last boundary letters have different colours; otherwise the shared
    transition prefix is absent and the boundary is its cyclic conjugate.
    """
    cd.check_structure()
    phi = heights(cd)
    out = Diagram()
    if cd.num_edges == 0:
        return single_vertex()
    bd = cd.boundary_darts()
    beta, last = bd[0], bd[-1]
    tries: dict[int, _Trie] = {}
    for p in range(cd.num_vertices):
        is_base = p == cd.base_vertex
        if is_base and _colour(cd, beta) != _colour(cd, last ^ 1):
            runs = _runs(cd, p, last ^ 1)
            rotate = False
        else:
            runs = _runs(cd, p, beta if is_base else None)
            rotate = not is_base
        if len(runs) == 1:
            items = [((), runs[0])]
        else:
            items = [(transition_word(cfg, _colour(cd, run[0]), h + phi[p]), run) for run in runs]
        tries[p] = _Trie(out, items, rotate)
    attach: dict[int, int] = {}
    for t in tries.values():
        attach.update(_node_of_items(t))
    central: dict[int, int] = {}
    for e, lab in enumerate(cd.labels):
        hp, hq = attach[2 * e], attach[2 * e + 1]
        m = out.add_vertex()
        e1 = out.add_edge(hp, m, Letter(lab.gen, 1))
        e2 = out.add_edge(hq, m, Letter(lab.colour, 1))
        out.rot[m] = [e1 ^ 1, e2 ^ 1]
        central[2 * e] = e1
        central[2 * e + 1] = e2
    for t in tries.values():
        t.finish(central)
    # base: walk back from beta's central dart over descending transition darts
    desc = tries[cd.base_vertex].descending
    start = central[beta]
    prev = _prev_on_face(out, start)
    while prev in desc:
        start = prev
        prev = _prev_on_face(out, start)
    out.base_dart = start
    out.base_vertex = out.tail(start)
    out._cache = None
    out.check_structure()
    return out


def _prev_on_face(d: Diagram, x: int) -> int:
    # next(y) = x  <=>  y = twin of the dart following x in the rotation at tail(x)
    r = d.rot[d.tail(x)]
    return r[(r.index(x) + 1) % len(r)] ^ 1


# a worked coloured diagram


def example_coloured_diagram():
    """Six-vertex coloured diagram over the single edge a-b with two regions.

    Returns (graph, diagram). The boundary reads <a a>_b <b>_a <a^-1>_b
    <a^-1 b^-1>_a from the base vertex.
    """
    from .graph import SimplicialGraph

    g = SimplicialGraph(["a", "b"], [("a", "b")])
    pts = [(0, 0), (0, 3), (0, 6), (3, 6), (3, 3), (3, 0)]
    A, B, C, D, E, F = range(6)

    def c(s, a):
        return ColouredLetter(s, a, 1)

    edges = [
        (A, B, c("a", "b")), (B, C, c("a", "b")), (C, D, c("b", "a")),
        (E, D, c("a", "b")), (F, E, c("a", "a")), (A, F, c("b", "a")),
        (B, E, c("b", "b")),
    ]
    return g, from_straight_line(pts, edges, (A, B))


# cutting along corridors


def cut_along_corridors(d: Diagram, w_len: int, cw, cw2, corridors: list[tuple[Band, str]],
                        analysis: BandAnalysis | None = None) -> Diagram:
    """Coloured diagram with one region per strip between consecutive corridors.

    `d` is a van Kampen diagram with boundary w w2^-1 read from the base,
    where len(w) == w_len; `cw` and `cw2` colour w and w2. Each corridor is
    paired with the side ("left" for tails, "right" for heads) whose word
    becomes the chord <u_i>_{a_i}. Region i reads
    w_i <u_i>_{a_i} w2_i^-1 <u_{i-1}>_{a_{i-1}}^-1 from its corner on w.
    """
    if analysis is None:
        analysis = BandAnalysis(d)
    bd = d.boundary_darts()
    n = len(bd)
    if len(cw) != w_len or len(cw2) != n - w_len:
        raise MalformedMap("coloured words do not match the boundary split")
    pos_of_edge: dict[int, list[int]] = {}
    for i, x in enumerate(bd):
        pos_of_edge.setdefault(x >> 1, []).append(i)
    cells_used: set[int] = set()
    chords = []
    for band, side in corridors:
        if band.closed:
            raise NotBoundaryToBoundary("an annulus does not reach the boundary")
        if set(band.cells) & cells_used:
            raise CorridorsCross("corridors share a cell")
        cells_used |= set(band.cells)
        verts = band.left if side == "left" else band.right
        word = band.left_word if side == "left" else band.right_word
        ends = []
        for idx, e in ((0, band.edges[0]), (-1, band.edges[-1])):
            ps = pos_of_edge.get(e, [])
            if len(ps) != 1:
                raise NotBoundaryToBoundary("corridor end is not a simple boundary edge")
            j = ps[0]
            v = verts[idx]
            corner = j if d.tail(bd[j]) == v else j + 1
            ends.append((j, corner))
        (j0, c0), (j1, c1) = ends
        on_w0, on_w1 = j0 < w_len, j1 < w_len
        if on_w0 == on_w1:
            raise NotBoundaryToBoundary("corridor does not join the two boundary arcs")
        if on_w0:
            p_corner, q_corner, u = c0, n - c1, tuple(word)
        else:
            p_corner, q_corner, u = c1, n - c0, tuple(x.inverse() for x in reversed(word))
        chords.append((p_corner, q_corner, u, band.generator))
    chords.sort()
    for (p1, q1, _, _), (p2, q2, _, _) in zip(chords, chords[1:]):
        if not (p1 <= p2 and q1 <= q2):
            raise CorridorsCross("corridors cross")
    return _ladder(cw, cw2, chords)


def _ladder(cw, cw2, chords) -> Diagram:
    from .planar import PathBuilder

    pb = PathBuilder()
    p0 = pb.vertex()
    ps, qs = [p0], [p0]
    for _ in chords:
        ps.append(pb.vertex())
        qs.append(pb.vertex())
    pk = pb.vertex()
    ps.append(pk)
    qs.append(pk)
    pc = [0] + [c[0] for c in chords] + [len(cw)]
    qc = [0] + [c[1] for c in chords] + [len(cw2)]
    last = len(pc) - 2
    # w runs down the right arc and w2 down the left arc, so the outer
    # boundary read clockwise from p0 is w w2^-1
    for i in range(last + 1):
        pb.path(ps[i], ps[i + 1], cw[pc[i]:pc[i + 1]],
                315 if i == 0 else 270, 45 if i == last else 90)
        pb.path(qs[i], qs[i + 1], cw2[qc[i]:qc[i + 1]],
                225 if i == 0 else 270, 135 if i == last else 90)
    for i, (_, _, u, a) in enumerate(chords, start=1):
        pb.path(ps[i], qs[i], [ColouredLetter(x.gen, a, x.sign) for x in u], 180, 0)
    target = tuple(cw) + tuple(x.inverse() for x in reversed(cw2))
    return pb.finalize_with_boundary(p0, target)
