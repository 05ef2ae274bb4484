"""Planar diagrams as rotation systems, with validation, heights, density,
corridors, annuli and the corridor/annulus decomposition of heights.

Edges are stored with positive labels (a Letter or a ColouredLetter with
sign +1). Edge e has darts 2e (tail to head) and 2e+1 (head to tail); the
reverse dart reads the inverse label. The rotation at a vertex lists its
outgoing darts counterclockwise. Faces are traced keeping the face on the
left: next(d) is the dart preceding twin(d) in the rotation at head(d). Bounded
faces therefore read counterclockwise and the outer face reads clockwise; the
boundary word is the outer face read from the base dart.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BoundaryMismatch, MalformedMap, NotASquareComplexCell
from .graph import SimplicialGraph
from .words import Letter, cyclic_reduce, is_trivial


def _label_str(x) -> str:
    return str(x)


def _underlying(x) -> Letter:
    return x if isinstance(x, Letter) else Letter(x.gen, x.sign)


class Diagram:
    def __init__(self):
        self.tails: list[int] = []
        self.heads: list[int] = []
        self.labels: list = []
        self.rot: list[list[int]] = []
        self.base_vertex = 0
        self.base_dart: int | None = None
        self._cache = None

    # construction

    def add_vertex(self) -> int:
        self.rot.append([])
        self._cache = None
        return len(self.rot) - 1

    def add_edge(self, tail: int, head: int, label) -> int:
        """Add an edge with positive label; returns its forward dart. Rotations untouched."""
        if label.sign != 1:
            raise MalformedMap("edge labels are stored positively")
        self.tails.append(tail)
        self.heads.append(head)
        self.labels.append(label)
        self._cache = None
        return 2 * (len(self.labels) - 1)

    def add_reading(self, start: int, end: int, letter) -> int:
        """Add an edge so that the dart start -> end reads `letter`; return that dart."""
        if letter.sign > 0:
            return self.add_edge(start, end, letter)
        return self.add_edge(end, start, letter.inverse()) ^ 1

    def insert_before(self, v: int, dart: int, before: int | None) -> None:
        """Insert outgoing dart into the rotation at v immediately before `before`."""
        r = self.rot[v]
        if before is None:
            r.append(dart)
        else:
            r.insert(r.index(before), dart)
        self._cache = None

    # dart algebra

    @property
    def num_vertices(self) -> int:
        return len(self.rot)

    @property
    def num_edges(self) -> int:
        return len(self.labels)

    def tail(self, d: int) -> int:
        e = d >> 1
        return self.tails[e] if d % 2 == 0 else self.heads[e]

    def head(self, d: int) -> int:
        return self.tail(d ^ 1)

    def label(self, d: int):
        x = self.labels[d >> 1]
        return x if d % 2 == 0 else x.inverse()

    def _positions(self) -> dict[int, int]:
        if self._cache is None:
            pos = {}
            for v, r in enumerate(self.rot):
                for i, d in enumerate(r):
                    pos[d] = i
            self._cache = {"pos": pos}
        return self._cache["pos"]

    def next(self, d: int) -> int:
        t = d ^ 1
        v = self.tail(t)
        r = self.rot[v]
        return r[(self._positions()[t] - 1) % len(r)]

    def check_structure(self) -> None:
        seen = set()
        for v, r in enumerate(self.rot):
            for d in r:
                if d in seen or d < 0 or d >= 2 * self.num_edges:
                    raise MalformedMap(f"dart {d} misplaced")
                if self.tail(d) != v:
                    raise MalformedMap(f"dart {d} listed at wrong vertex {v}")
                seen.add(d)
        if len(seen) != 2 * self.num_edges:
            raise MalformedMap("some darts missing from rotations")
        if self.num_edges and self.base_dart is None:
            raise MalformedMap("no base dart")
        if self.base_dart is not None and self.tail(self.base_dart) != self.base_vertex:
            raise MalformedMap("base dart does not start at the base vertex")
        if not self._connected():
            raise MalformedMap("diagram is not connected")
        faces = self.faces_all()
        if self.num_vertices - self.num_edges + len(faces) != 2:
            raise MalformedMap("Euler characteristic is not 2: map is not planar")

    def _connected(self) -> bool:
        if self.num_vertices == 0:
            return False
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for d in self.rot[v]:
                u = self.head(d)
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.num_vertices

    # faces

    def faces_all(self) -> list[list[int]]:
        seen = set()
        faces = []
        if self.num_edges == 0:
            return [[]]
        for d in range(2 * self.num_edges):
            if d in seen:
                continue
            cyc = []
            x = d
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self.next(x)
            faces.append(cyc)
        return faces

    def boundary_darts(self) -> list[int]:
        if self.base_dart is None:
            return []
        out = [self.base_dart]
        x = self.next(self.base_dart)
        while x != self.base_dart:
            out.append(x)
            x = self.next(x)
        return out

    def boundary_word(self) -> tuple:
        return tuple(self.label(d) for d in self.boundary_darts())

    def bounded_faces(self) -> list[list[int]]:
        outer = set(self.boundary_darts())
        return [f for f in self.faces_all() if f and not (set(f) & outer)]

    def face_word(self, face: list[int]) -> tuple:
        return tuple(self.label(d) for d in face)

    def face_of(self) -> dict[int, int]:
        """Dart -> face index, with -1 for the outer face."""
        out = {d: -1 for d in self.boundary_darts()}
        for i, f in enumerate(self.bounded_faces()):
            for d in f:
                out[d] = i
        return out

    # io

    def to_dict(self) -> dict:
        return {
            "vertices": self.num_vertices,
            "edges": [[t, h, _label_str(x)] for t, h, x in zip(self.tails, self.heads, self.labels)],
            "rotations": [list(r) for r in self.rot],
            "base_vertex": self.base_vertex,
            "base_dart": self.base_dart,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def copy(self) -> "Diagram":
        d = Diagram()
        d.tails = list(self.tails)
        d.heads = list(self.heads)
        d.labels = list(self.labels)
        d.rot = [list(r) for r in self.rot]
        d.base_vertex = self.base_vertex
        d.base_dart = self.base_dart
        return d


def single_vertex() -> Diagram:
    d = Diagram()
    d.add_vertex()
    return d


# validation


def heights(d: Diagram) -> list[int]:
    """Height of every vertex relative to the base vertex."""
    phi: list[int | None] = [None] * d.num_vertices
    phi[d.base_vertex] = 0
    queue = deque([d.base_vertex])
    while queue:
        v = queue.popleft()
        for x in d.rot[v]:
            u = d.head(x)
            val = phi[v] + d.label(x).sign
            if phi[u] is None:
                phi[u] = val
                queue.append(u)
            elif phi[u] != val:
                raise BoundaryMismatch("heights are inconsistent: some region has nonzero height")
    if any(p is None for p in phi):
        raise MalformedMap("diagram is not connected")
    return phi


def _check_declared(d: Diagram, boundary) -> None:
    if boundary is not None and tuple(d.boundary_word()) != tuple(boundary):
        raise BoundaryMismatch("boundary word differs from the declared word")


def _is_commutator_square(g: SimplicialGraph, word) -> bool:
    w = cyclic_reduce(tuple(_underlying(x) for x in word))
    if len(w) != 4 or len(word) != 4:
        return False
    for i in range(4):
        r = w[i:] + w[:i]
        x, y, x2, y2 = r
        if (x2 == x.inverse() and y2 == y.inverse() and x.gen != y.gen
                and g.adjacent(x.gen, y.gen)):
            return True
    return False


def validate_van_kampen(d: Diagram, g: SimplicialGraph, boundary=None) -> bool:
    """Every bounded region is a commutator square of adjacent generators."""
    d.check_structure()
    _check_declared(d, boundary)
    ok = True
    for f in d.bounded_faces():
        word = d.face_word(f)
        if not is_trivial(g, tuple(_underlying(x) for x in word)):
            raise BoundaryMismatch("a region label is not null-homotopic")
        if not _is_commutator_square(g, word):
            ok = False
    return ok


def validate_coarse(d: Diagram, g: SimplicialGraph, boundary=None) -> bool:
    """Every bounded region is labelled by a null-homotopic word; colours valid."""
    d.check_structure()
    _check_declared(d, boundary)
    for x in d.labels:
        if hasattr(x, "colour") and not g.commute(x.gen, x.colour):
            raise MalformedMap(f"colour {x.colour} does not commute with {x.gen}")
    for f in d.bounded_faces():
        if not is_trivial(g, tuple(_underlying(x) for x in d.face_word(f))):
            raise BoundaryMismatch("a region label is not null-homotopic")
    return True


def validate_alternating(d: Diagram) -> bool:
    d.check_structure()
    return all(p in (0, 1) for p in heights(d))


def validate_almost_flat(d: Diagram) -> bool:
    d.check_structure()
    return all(p in (0, 1, 2) for p in heights(d))


def area(d: Diagram) -> int:
    return len(d.bounded_faces())


def density(d: Diagram) -> Fraction:
    n = len(d.boundary_darts())
    if n == 0:
        return Fraction(0)
    return Fraction(sum(len(f) for f in d.bounded_faces()), n)


def density_from_edges(d: Diagram) -> Fraction:
    n = len(d.boundary_darts())
    if n == 0:
        return Fraction(0)
    return Fraction(2 * d.num_edges, n) - 1


# corridors and annuli


@dataclass
class Band:
    """A corridor (ends on the boundary) or an annulus (closed)."""

    generator: str
    edges: list[int]          # transverse edges in positive order
    cells: list[int]          # bounded face indices between consecutive edges
    closed: bool
    left: list[int] = field(default_factory=list)    # tails of transverse edges
    right: list[int] = field(default_factory=list)   # heads of transverse edges
    left_word: tuple = ()
    right_word: tuple = ()
    clockwise: bool | None = None

    @property
    def is_annulus(self) -> bool:
        return self.closed

    def __len__(self) -> int:
        return len(self.cells)


class BandAnalysis:
    """All corridors and annuli of a van Kampen diagram of commutator squares."""

    def __init__(self, d: Diagram):
        self.d = d
        self.faces = d.bounded_faces()
        self.face_of = d.face_of()
        self.pos_in_face = {}
        for i, f in enumerate(self.faces):
            if len(f) != 4:
                raise NotASquareComplexCell(f"region {i} has {len(f)} sides")
            for j, x in enumerate(f):
                self.pos_in_face[x] = (i, j)
        self.bands: list[Band] = []
        self.band_of_edge: dict[int, int] = {}
        for e in range(d.num_edges):
            if e not in self.band_of_edge:
                band = self._trace(e)
                idx = len(self.bands)
                self.bands.append(band)
                for x in band.edges:
                    self.band_of_edge[x] = idx
        self.base_side = {}
        for i, band in enumerate(self.bands):
            self._sides(i, band)

    def _opposite(self, dart: int) -> int:
        i, j = self.pos_in_face[dart]
        return self.faces[i][(j + 2) % 4]

    def _trace(self, e: int) -> Band:
        d = self.d
        gen = d.labels[e].gen
        # forward: cross into the face on the left of the forward dart
        fwd_edges = [e]
        fwd_cells = []
        closed = False
        x = 2 * e
        while self.face_of.get(x, -1) != -1:
            cell = self.face_of[x]
            opp = self._opposite(x)
            if _underlying(d.label(opp)).gen != gen:
                raise NotASquareComplexCell("opposite side carries a different generator")
            nxt = opp >> 1
            fwd_cells.append(cell)
            if nxt == e:
                closed = True
                break
            fwd_edges.append(nxt)
            x = 2 * nxt  # opp is the reverse dart of nxt; continue on its left
        if closed:
            band = Band(gen, fwd_edges, fwd_cells, True)
        else:
            back_edges = []
            back_cells = []
            x = 2 * e + 1
            while self.face_of.get(x, -1) != -1:
                cell = self.face_of[x]
                opp = self._opposite(x)
                nxt = opp >> 1
                back_cells.append(cell)
                back_edges.append(nxt)
                x = 2 * nxt + 1
            band = Band(gen, back_edges[::-1] + fwd_edges, back_cells[::-1] + fwd_cells, False)
        if len(set(band.cells)) != len(band.cells):
            raise NotASquareComplexCell("band crosses itself")
        band.left = [d.tails[x] for x in band.edges]
        band.right = [d.heads[x] for x in band.edges]
        band.left_word = self._side_word(band, band.left)
        band.right_word = self._side_word(band, band.right)
        return band

    def _side_word(self, band: Band, verts: list[int]) -> tuple:
        d = self.d
        out = []
        n = len(band.cells)
        for k in range(n):
            u = verts[k]
            v = verts[(k + 1) % len(verts)] if band.closed else verts[k + 1]
            f = self.faces[band.cells[k]]
            found = None
            for x in f:
                if d.tail(x) == u and d.head(x) == v and (x >> 1) not in band.edges:
                    found = d.label(x)
                elif d.tail(x) == v and d.head(x) == u and (x >> 1) not in band.edges:
                    found = d.label(x).inverse()
            if found is None:
                raise NotASquareComplexCell("corridor side is broken")
            out.append(_underlying(found))
        return tuple(out)

    def _sides(self, i: int, band: Band) -> None:
        """Component label of every vertex after removing the band's edges."""
        d = self.d
        cut = set(band.edges)
        comp = [-1] * d.num_vertices
        label = 0
        for s in range(d.num_vertices):
            if comp[s] != -1:
                continue
            comp[s] = label
            stack = [s]
            while stack:
                v = stack.pop()
                for x in d.rot[v]:
                    if x >> 1 in cut:
                        continue
                    u = d.head(x)
                    if comp[u] == -1:
                        comp[u] = label
                        stack.append(u)
            label += 1
        left = {comp[v] for v in band.left}
        right = {comp[v] for v in band.right}
        if len(left) != 1 or len(right) != 1 or left == right:
            raise MalformedMap("band does not separate the diagram")
        band.left_comp = left.pop()
        band.right_comp = right.pop()
        band.comp = comp
        if band.closed:
            outside = comp[d.base_vertex]
            band.clockwise = band.left_comp == outside

    def corridors(self) -> list[Band]:
        return [b for b in self.bands if not b.closed]

    def annuli(self) -> list[Band]:
        return [b for b in self.bands if b.closed]

    def side(self, band: Band, p: int) -> str:
        c = band.comp[p]
        if c == band.left_comp:
            return "left"
        if c == band.right_comp:
            return "right"
        return "other"

    def kappa(self, p: int) -> int:
        total = 0
        base = self.d.base_vertex
        for b in self.corridors():
            sp, sb = self.side(b, p), self.side(b, base)
            if sp == "right" and sb == "left":
                total += 1
            elif sp == "left" and sb == "right":
                total -= 1
        return total

    def alpha(self, p: int) -> int:
        total = 0
        base = self.d.base_vertex
        for b in self.annuli():
            if b.comp[p] != b.comp[base] and self.side(b, p) != "other":
                total += 1 if b.clockwise else -1
        return total

    def encloses(self, band: Band, p: int) -> bool:
        return band.closed and band.comp[p] != band.comp[self.d.base_vertex]


def trace_corridor(d: Diagram, dart: int) -> Band:
    analysis = BandAnalysis(d)
    return analysis.bands[analysis.band_of_edge[dart >> 1]]


def crossings(c1: Band, c2: Band) -> int:
    return len(set(c1.cells) & set(c2.cells))


def kappa(d: Diagram, p: int) -> int:
    return BandAnalysis(d).kappa(p)


def alpha(d: Diagram, p: int) -> int:
    return BandAnalysis(d).alpha(p)


def check_height_decomposition(d: Diagram) -> bool:
    """phi(p) = alpha(p) + kappa(p) at every vertex."""
    analysis = BandAnalysis(d)
    phi = heights(d)
    return all(phi[p] == analysis.alpha(p) + analysis.kappa(p) for p in range(d.num_vertices))
