"""Ideal triangulations as face-paired model tetrahedra.

Model conventions, fixed once for the whole package:

* vertices of a tetrahedron are 0,1,2,3; face f is opposite vertex f;
* the six model edges are numbered by their vertex pairs in lexicographic
  order, ``01, 02, 03, 12, 13, 23``; edge e and edge 5-e are opposite;
* for a positively oriented tetrahedron the corner cycle of face f, read
  anticlockwise as seen from *outside* the tetrahedron, is ``FACE_CYCLES[f]``
  (reverse it for a negatively oriented tetrahedron).
"""

from __future__ import annotations

from .errors import InvalidGluing
from .perms import IDENTITY, inverse, sign

EDGE_VERTICES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
EDGE_INDEX = {frozenset(p): i for i, p in enumerate(EDGE_VERTICES)}

FACE_VERTICES = tuple(tuple(v for v in range(4) if v != f) for f in range(4))

# Anticlockwise from outside, for a positively oriented model tetrahedron.
# Derived from the standard simplex with the right-hand rule.
FACE_CYCLES = ((1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1))

# The three edges of face f, in no particular order.
FACE_EDGES = tuple(
    tuple(e for e in range(6) if f not in EDGE_VERTICES[e]) for f in range(4)
)


def edge_between(a, b):
    """Edge index of the model edge joining vertices a and b."""
    return EDGE_INDEX[frozenset((a, b))]


def map_edge(perm, e):
    """Image of model edge e under a vertex permutation."""
    a, b = EDGE_VERTICES[e]
    return edge_between(perm[a], perm[b])


def face_cycle(face, orient):
    """Corner cycle of ``face`` anticlockwise from outside, given the
    orientation sign of the tetrahedron."""
    cyc = FACE_CYCLES[face]
    return cyc if orient > 0 else (cyc[0], cyc[2], cyc[1])


class Triangulation:
    """An ideal triangulation given by its face-gluing table.

    ``gluings[t][f]`` is either ``None`` (boundary face) or a triple
    ``(t2, f2, perm)`` where ``perm`` maps vertex labels of t to vertex
    labels of t2 and ``f2 == perm[f]``.  The table must be an involution.
    """

    def __init__(self, gluings):
        self.tet_count = len(gluings)
        self.gluings = [list(row) for row in gluings]
        self._validate()
        self.edge_classes = self._orbits(self._edge_neighbours, 6)
        self.vertex_classes = self._orbits(self._vertex_neighbours, 4)
        self.edge_class_of = _membership(self.edge_classes)
        self.vertex_class_of = _membership(self.vertex_classes)
        self.orientation = self._orient()

    # -- construction checks ------------------------------------------------

    def _validate(self):
        for t, row in enumerate(self.gluings):
            if len(row) != 4:
                raise InvalidGluing(f"tetrahedron {t} has {len(row)} faces")
            for f, g in enumerate(row):
                if g is None:
                    continue
                t2, f2, p = g
                if not (0 <= t2 < self.tet_count):
                    raise InvalidGluing(f"({t},{f}) glued to missing tetrahedron {t2}")
                if p[f] != f2:
                    raise InvalidGluing(f"({t},{f}): permutation does not carry the face")
                if (t2, f2) == (t, f) and p == IDENTITY:
                    raise InvalidGluing(f"({t},{f}) identity self-gluing")
                back = self.gluings[t2][f2]
                if back is None or back[0] != t or back[1] != f or back[2] != inverse(p):
                    raise InvalidGluing(f"({t},{f}) gluing is not involutive")

    # -- derived classes ----------------------------------------------------

    def _edge_neighbours(self, t, e):
        a, b = EDGE_VERTICES[e]
        for f in range(4):
            if f in (a, b):
                continue
            g = self.gluings[t][f]
            if g is not None:
                t2, _, p = g
                yield t2, edge_between(p[a], p[b])

    def _vertex_neighbours(self, t, v):
        for f in range(4):
            if f == v:
                continue
            g = self.gluings[t][f]
            if g is not None:
                t2, _, p = g
                yield t2, p[v]

    def _orbits(self, neighbours, per_tet):
        seen = {}
        classes = []
        for t in range(self.tet_count):
            for s in range(per_tet):
                if (t, s) in seen:
                    continue
                stack = [(t, s)]
                seen[(t, s)] = len(classes)
                orbit = []
                while stack:
                    cur = stack.pop()
                    orbit.append(cur)
                    for nxt in neighbours(*cur):
                        if nxt not in seen:
                            seen[nxt] = len(classes)
                            stack.append(nxt)
                classes.append(sorted(orbit))
        return classes

    def _orient(self):
        """Orientation signs per tetrahedron, or None if not orientable."""
        signs = [0] * self.tet_count
        for start in range(self.tet_count):
            if signs[start]:
                continue
            signs[start] = 1
            stack = [start]
            while stack:
                t = stack.pop()
                for f in range(4):
                    g = self.gluings[t][f]
                    if g is None:
                        continue
                    t2, _, p = g
                    want = -signs[t] * sign(p)
                    if signs[t2] == 0:
                        signs[t2] = want
                        stack.append(t2)
                    elif signs[t2] != want:
                        return None
        return signs

    # -- queries -------------------------------------------------------------

    def edge_degree(self, cls):
        """Number of model-edge incidences around the edge, with multiplicity."""
        fan, closed = self.edge_class_fan(cls)
        return len(fan)

    def edge_class_fan(self, cls):
        if not hasattr(self, "_fans"):
            self._fans = {}
        if cls not in self._fans:
            t, e = self.edge_classes[cls][0]
            self._fans[cls] = self.edge_fan(t, e)
        return self._fans[cls]

    def edge_fan(self, t, e):
        """The cyclic fan of (tet, edge) slots around the edge through (t, e).

        The fan walks the edge link, so a slot may appear twice when the edge
        is identified with itself.  Each entry is ``(tet, edge, face)`` where
        ``face`` is the face through which the walk *enters* the slot (for the
        first entry, the face it will finally re-enter through).  The second
        value is False when the walk hits a boundary face.
        """
        a, b = EDGE_VERTICES[e]
        faces = [f for f in range(4) if f not in (a, b)]
        out = faces[1]
        fan = []
        cur_t, cur_e, come_from = t, e, faces[0]
        while True:
            fan.append((cur_t, cur_e, come_from))
            g = self.gluings[cur_t][out]
            if g is None:
                return fan, False
            t2, _, p = g
            va, vb = EDGE_VERTICES[cur_e]
            cur_t, cur_e = t2, edge_between(p[va], p[vb])
            come_from = p[out]
            a2, b2 = EDGE_VERTICES[cur_e]
            out = next(f for f in range(4) if f not in (a2, b2) and f != come_from)
            if (cur_t, cur_e) == (t, e) and come_from == faces[0]:
                return fan, True

    def is_closed(self):
        return all(g is not None for row in self.gluings for g in row)

    def __eq__(self, other):
        return (
            isinstance(other, Triangulation)
            and self.tet_count == other.tet_count
            and all(
                tuple(map(tuple3, a)) == tuple(map(tuple3, b))
                for a, b in zip(self.gluings, other.gluings)
            )
        )

    def __hash__(self):
        return hash(tuple(tuple(tuple3(g) for g in row) for row in self.gluings))


def tuple3(g):
    return None if g is None else (g[0], g[1], tuple(g[2]))


def _membership(classes):
    where = {}
    for i, cls in enumerate(classes):
        for slot in cls:
            where[slot] = i
    return where
